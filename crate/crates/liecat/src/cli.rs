//! Command-line front end: every query as a subcommand with deterministic
//! text output, or a single JSON document under --json.

use serde_json::{json, Value};

use crate::category_o::{
    classify, composition_series_window, injective_character_dim, multiplicity_with_stabilization,
    same_block, strong_linkage_chain, truncated_reciprocity_table, verma_has_finite_length,
    verma_hom_dim, verma_is_simple,
};
use crate::error::Error;
use crate::kl::{kl_poly, KlCache};
use crate::oracle::{self, OracleBound};
use crate::rootdata::{interval, kostant_partition, leq, LatticeElement, RootSystemKind, Weight};
use crate::weyl::{from_word, Word};

pub const SYNOPSIS: &str = "\
liecat: exact Verma-module combinatorics for the infinite-rank classical root systems

USAGE:
  liecat <SUBCOMMAND> [ARGS] [--json] [--kl-cache PATH] [--stabilize-extra N]

SUBCOMMANDS:
  classify W                      weight class flags of W
  order W1 W2                     compare two weights in the partial order
  interval W1 W2                  all weights between W1 and W2
  linkage WLO WHI                 strong-linkage chain from WHI down to WLO
  homdim WLO WHI                  dim Hom(M(WLO), M(WHI))
  simple W                        is the Verma module M(W) simple?
  finlen W                        does M(W) have finite length?
  block W1 W2                     do W1 and W2 lie in the same block?
  mult WLAMBDA --mu WMU           composition multiplicity [M(lambda) : L(mu)]
  comp WLAMBDA --lo W --hi W      composition multiplicities over a window
  kl KIND XWORD YWORD             Kazhdan-Lusztig polynomial P_{x,y}
  reciprocity WTOP --mu W         truncated BGG reciprocity table
  injchar WTOP --mu W --zeta W    weight-space dimension of a truncated injective
  kostant KIND BETA               Kostant partition count (BETA: comma-separated integers)
  selfcheck [--bound N]           run the oracle cross-checks

Weights use the grammar KIND'['coords(';'tail)?']', e.g. A[1,-1], B[3/2,1;zero],
A[;lin(0,-2)]. Words use '.'-joined generator indices, e.g. 1.2.1, or 'e'.
The KL cache file may also be named through the LIECAT_KL_CACHE environment
variable. Exit codes: 0 ok, 1 domain error, 2 usage error.
";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    DomainError,
    UsageError,
}

/// Everything a command run produces; the binary decides where each part
/// goes (stdout, stderr) and with which exit code.
#[derive(Debug)]
pub struct CommandResult {
    pub status: Status,
    pub json_mode: bool,
    pub payload: Value,
    pub text: String,
    pub diagnostics: Vec<String>,
}

impl CommandResult {
    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Ok => 0,
            Status::DomainError => 1,
            Status::UsageError => 2,
        }
    }

    /// The single JSON document for --json mode.
    pub fn json_document(&self) -> Value {
        match self.status {
            Status::Ok => json!({ "status": "ok", "payload": self.payload }),
            _ => json!({ "status": "error", "error": self.payload }),
        }
    }
}

struct GlobalOpts {
    json: bool,
    kl_cache: Option<String>,
    stabilize_extra: u32,
}

enum CmdError {
    Usage(String),
    Domain(Error),
}

impl From<Error> for CmdError {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::BadGenerator(_) => CmdError::Usage(e.to_string()),
            other => CmdError::Domain(other),
        }
    }
}

type CmdResult = std::result::Result<(Value, String), CmdError>;

/// Parses and runs one command line (without the program name).
pub fn run(argv: &[String]) -> CommandResult {
    let mut positional: Vec<String> = Vec::new();
    let mut opts = GlobalOpts { json: false, kl_cache: None, stabilize_extra: 1 };
    let mut named: Vec<(String, String)> = Vec::new();

    let mut it = argv.iter().peekable();
    while let Some(arg) = it.next() {
        match arg.as_str() {
            "--json" => opts.json = true,
            "--kl-cache" => match it.next() {
                Some(v) => opts.kl_cache = Some(v.clone()),
                None => return usage_error(opts.json, "--kl-cache needs a path"),
            },
            "--stabilize-extra" => match it.next().and_then(|v| v.parse::<u32>().ok()) {
                Some(v) => opts.stabilize_extra = v,
                None => return usage_error(opts.json, "--stabilize-extra needs an integer"),
            },
            flag if flag.starts_with("--") => match it.next() {
                Some(v) => named.push((flag.trim_start_matches("--").to_string(), v.clone())),
                None => return usage_error(opts.json, &format!("{flag} needs a value")),
            },
            _ => positional.push(arg.clone()),
        }
    }

    if positional.is_empty() {
        return usage_error(opts.json, "missing subcommand");
    }
    let cache = match opts.kl_cache.clone().or_else(|| std::env::var("LIECAT_KL_CACHE").ok()) {
        Some(path) => KlCache::with_file(path),
        None => KlCache::new(),
    };

    let command = positional[0].clone();
    let args = &positional[1..];
    match dispatch(&command, args, &named, &opts, &cache) {
        Ok((payload, text)) => CommandResult {
            status: Status::Ok,
            json_mode: opts.json,
            payload,
            text,
            diagnostics: Vec::new(),
        },
        Err(CmdError::Usage(msg)) => usage_error(opts.json, &msg),
        Err(CmdError::Domain(err)) => CommandResult {
            status: Status::DomainError,
            json_mode: opts.json,
            payload: json!({ "code": err.code(), "message": err.to_string() }),
            text: String::new(),
            diagnostics: vec![format!("error[{}]: {err}", err.code())],
        },
    }
}

fn usage_error(json_mode: bool, msg: &str) -> CommandResult {
    CommandResult {
        status: Status::UsageError,
        json_mode,
        payload: json!({ "code": "Usage", "message": msg }),
        text: String::new(),
        diagnostics: vec![format!("usage error: {msg}"), SYNOPSIS.to_string()],
    }
}

fn dispatch(
    command: &str,
    args: &[String],
    named: &[(String, String)],
    opts: &GlobalOpts,
    cache: &KlCache,
) -> CmdResult {
    match command {
        "classify" => cmd_classify(one_weight(args)?),
        "order" => cmd_order(two_weights(args)?),
        "interval" => cmd_interval(two_weights(args)?),
        "linkage" => cmd_linkage(two_weights(args)?),
        "homdim" => cmd_homdim(two_weights(args)?),
        "simple" => cmd_simple(one_weight(args)?),
        "finlen" => cmd_finlen(one_weight(args)?),
        "block" => cmd_block(two_weights(args)?),
        "mult" => cmd_mult(one_weight(args)?, named_weight(named, "mu")?, opts, cache),
        "comp" => cmd_comp(
            one_weight(args)?,
            named_weight(named, "lo")?,
            named_weight(named, "hi")?,
            cache,
        ),
        "kl" => cmd_kl(args, cache),
        "reciprocity" => cmd_reciprocity(one_weight(args)?, named_weight(named, "mu")?, cache),
        "injchar" => cmd_injchar(
            one_weight(args)?,
            named_weight(named, "mu")?,
            named_weight(named, "zeta")?,
            cache,
        ),
        "kostant" => cmd_kostant(args),
        "selfcheck" => cmd_selfcheck(named, cache),
        other => Err(CmdError::Usage(format!("unknown subcommand '{other}'"))),
    }
}

fn parse_weight(s: &str) -> std::result::Result<Weight, CmdError> {
    s.parse::<Weight>().map_err(CmdError::from)
}

fn one_weight(args: &[String]) -> std::result::Result<Weight, CmdError> {
    match args {
        [w] => parse_weight(w),
        _ => Err(CmdError::Usage("expected exactly one weight argument".into())),
    }
}

fn two_weights(args: &[String]) -> std::result::Result<(Weight, Weight), CmdError> {
    match args {
        [a, b] => Ok((parse_weight(a)?, parse_weight(b)?)),
        _ => Err(CmdError::Usage("expected exactly two weight arguments".into())),
    }
}

fn named_weight(named: &[(String, String)], key: &str) -> std::result::Result<Weight, CmdError> {
    let raw = named
        .iter()
        .find(|(k, _)| k == key)
        .map(|(_, v)| v.clone())
        .ok_or_else(|| CmdError::Usage(format!("missing required flag --{key}")))?;
    parse_weight(&raw)
}

fn cmd_classify(w: Weight) -> CmdResult {
    let c = classify(&w)?;
    let text = format!(
        "weight: {w}\nintegral: {}\nregular: {}\ndominant: {}\nalmost_dominant: {}\nantidominant: {}\nalmost_antidominant: {}",
        c.integral, c.regular, c.dominant, c.almost_dominant, c.antidominant, c.almost_antidominant
    );
    let payload = json!({
        "weight": w.to_string(),
        "integral": c.integral,
        "regular": c.regular,
        "dominant": c.dominant,
        "almost_dominant": c.almost_dominant,
        "antidominant": c.antidominant,
        "almost_antidominant": c.almost_antidominant,
    });
    Ok((payload, text))
}

fn cmd_order((a, b): (Weight, Weight)) -> CmdResult {
    let ab = leq(&a, &b)?;
    let ba = leq(&b, &a)?;
    let text = format!("lhs: {a}\nrhs: {b}\nlhs_leq_rhs: {ab}\nrhs_leq_lhs: {ba}");
    Ok((
        json!({
            "lhs": a.to_string(),
            "rhs": b.to_string(),
            "lhs_leq_rhs": ab,
            "rhs_leq_lhs": ba,
        }),
        text,
    ))
}

fn cmd_interval((lo, hi): (Weight, Weight)) -> CmdResult {
    let iv = interval(&lo, &hi)?;
    let members: Vec<String> = iv.members.iter().map(|w| w.to_string()).collect();
    let mut text = format!("count: {}", members.len());
    for m in &members {
        text.push('\n');
        text.push_str(m);
    }
    Ok((
        json!({
            "lo": lo.to_string(),
            "hi": hi.to_string(),
            "count": members.len(),
            "members": members,
        }),
        text,
    ))
}

fn cmd_linkage((lo, hi): (Weight, Weight)) -> CmdResult {
    match strong_linkage_chain(&lo, &hi)? {
        None => Ok((
            json!({ "start": lo.to_string(), "end": hi.to_string(), "linked": false }),
            "linked: false".to_string(),
        )),
        Some(c) => {
            let roots: Vec<String> = c.roots.iter().map(|r| r.to_string()).collect();
            let text = format!("linked: true\nlength: {}\nroots: {}", c.len(), roots.join(" "));
            Ok((
                json!({
                    "start": c.start.to_string(),
                    "end": c.end.to_string(),
                    "linked": true,
                    "roots": roots,
                }),
                text,
            ))
        }
    }
}

fn cmd_homdim((lo, hi): (Weight, Weight)) -> CmdResult {
    let dim = verma_hom_dim(&lo, &hi)?;
    Ok((json!({ "hom_dim": dim }), format!("{dim}")))
}

fn cmd_simple(w: Weight) -> CmdResult {
    let v = verma_is_simple(&w)?;
    Ok((json!({ "weight": w.to_string(), "simple": v }), format!("{v}")))
}

fn cmd_finlen(w: Weight) -> CmdResult {
    let v = verma_has_finite_length(&w)?;
    Ok((json!({ "weight": w.to_string(), "finite_length": v }), format!("{v}")))
}

fn cmd_block((a, b): (Weight, Weight)) -> CmdResult {
    let v = same_block(&a, &b)?;
    Ok((json!({ "lhs": a.to_string(), "rhs": b.to_string(), "same_block": v }), format!("{v}")))
}

fn cmd_mult(lambda: Weight, mu: Weight, opts: &GlobalOpts, cache: &KlCache) -> CmdResult {
    let m = multiplicity_with_stabilization(&lambda, &mu, cache, opts.stabilize_extra)?;
    Ok((
        json!({ "lambda": lambda.to_string(), "mu": mu.to_string(), "multiplicity": m }),
        format!("{m}"),
    ))
}

fn cmd_comp(lambda: Weight, lo: Weight, hi: Weight, cache: &KlCache) -> CmdResult {
    let table = composition_series_window(&lambda, &lo, &hi, cache)?;
    let rows = table.rows();
    let mut text = format!("factors: {}", rows.len());
    for (w, m) in &rows {
        text.push_str(&format!("\n{w} : {m}"));
    }
    let json_rows: Vec<Value> =
        rows.iter().map(|(w, m)| json!({ "weight": w.to_string(), "multiplicity": m })).collect();
    Ok((
        json!({
            "lambda": lambda.to_string(),
            "lo": lo.to_string(),
            "hi": hi.to_string(),
            "rows": json_rows,
        }),
        text,
    ))
}

fn cmd_kl(args: &[String], cache: &KlCache) -> CmdResult {
    let [kind_str, xw, yw] = args else {
        return Err(CmdError::Usage("kl needs KIND XWORD YWORD".into()));
    };
    let kind = parse_kind(kind_str)?;
    let xword: Word = xw.parse().map_err(CmdError::from)?;
    let yword: Word = yw.parse().map_err(CmdError::from)?;
    let x = from_word(kind, &xword).map_err(CmdError::from)?;
    let y = from_word(kind, &yword).map_err(CmdError::from)?;
    let p = kl_poly(kind, &x, &y, cache)?;
    let coeffs = p.nonneg_coeff_vec();
    let coeff_text: Vec<String> = coeffs.iter().map(|c| c.to_string()).collect();
    let text = format!("coeffs: {}\npoly: {p}", coeff_text.join(" "));
    Ok((
        json!({
            "kind": kind.letter().to_string(),
            "x": xword.to_string(),
            "y": yword.to_string(),
            "coeffs": coeffs,
        }),
        text,
    ))
}

fn cmd_reciprocity(top: Weight, mu: Weight, cache: &KlCache) -> CmdResult {
    let rows = truncated_reciprocity_table(&top, &mu, cache)?;
    let mut text = format!("rows: {}", rows.len());
    let mut total = 0u64;
    for r in &rows {
        total += r.verma_mult_in_p;
        text.push_str(&format!(
            "\n{} : P-filtration {} , composition {}",
            r.nu, r.verma_mult_in_p, r.comp_mult_in_m
        ));
    }
    text.push_str(&format!("\nfiltration_length: {total}"));
    let json_rows: Vec<Value> = rows
        .iter()
        .map(|r| {
            json!({
                "nu": r.nu.to_string(),
                "verma_mult_in_p": r.verma_mult_in_p,
                "comp_mult_in_m": r.comp_mult_in_m,
            })
        })
        .collect();
    Ok((
        json!({
            "top": top.to_string(),
            "mu": mu.to_string(),
            "rows": json_rows,
            "filtration_length": total,
        }),
        text,
    ))
}

fn cmd_injchar(top: Weight, mu: Weight, zeta: Weight, cache: &KlCache) -> CmdResult {
    let dim = injective_character_dim(&top, &mu, &zeta, cache)?;
    Ok((
        json!({
            "top": top.to_string(),
            "mu": mu.to_string(),
            "zeta": zeta.to_string(),
            "dim": dim.to_string(),
        }),
        format!("{dim}"),
    ))
}

fn cmd_kostant(args: &[String]) -> CmdResult {
    let [kind_str, beta_str] = args else {
        return Err(CmdError::Usage("kostant needs KIND BETA".into()));
    };
    let kind = parse_kind(kind_str)?;
    let mut coords = Vec::new();
    let trimmed = beta_str.trim();
    if !trimmed.is_empty() {
        for piece in trimmed.split(',') {
            let c: i64 = piece
                .trim()
                .parse()
                .map_err(|_| CmdError::Usage(format!("invalid coordinate '{piece}'")))?;
            coords.push(c);
        }
    }
    let beta = LatticeElement::from_ints(kind, &coords).map_err(CmdError::from)?;
    let count = kostant_partition(kind, &beta);
    Ok((
        json!({ "kind": kind.letter().to_string(), "beta": coords, "count": count.to_string() }),
        format!("{count}"),
    ))
}

fn cmd_selfcheck(named: &[(String, String)], cache: &KlCache) -> CmdResult {
    let mut bound = OracleBound::default();
    if let Some((_, v)) = named.iter().find(|(k, _)| k == "bound") {
        let n: u32 =
            v.parse().map_err(|_| CmdError::Usage("--bound needs an integer rank".into()))?;
        if n < 2 {
            return Err(CmdError::Usage("--bound must be at least 2".into()));
        }
        bound = OracleBound { a_rank: n, bcd_rank: n - 1 };
    }
    let reports = oracle::selfcheck(&bound, cache).map_err(CmdError::Domain)?;
    let mut text = String::new();
    let mut all_ok = true;
    let mut json_reports = Vec::new();
    for r in &reports {
        if !text.is_empty() {
            text.push('\n');
        }
        text.push_str(&r.to_string());
        all_ok &= r.passed();
        json_reports.push(json!({
            "name": r.name,
            "checked": r.checked,
            "mismatches": r.mismatches.len(),
        }));
    }
    text.push_str(&format!("\nselfcheck: {}", if all_ok { "ok" } else { "FAILED" }));
    if all_ok {
        Ok((json!({ "ok": true, "reports": json_reports }), text))
    } else {
        Err(CmdError::Domain(Error::Internal("selfcheck found mismatches".into())))
    }
}

fn parse_kind(s: &str) -> std::result::Result<RootSystemKind, CmdError> {
    let mut chars = s.trim().chars();
    match (chars.next(), chars.next()) {
        (Some(c), None) => RootSystemKind::from_letter(c).map_err(CmdError::from),
        _ => Err(CmdError::Usage(format!("invalid kind '{s}'"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_strs(args: &[&str]) -> CommandResult {
        run(&args.iter().map(|s| s.to_string()).collect::<Vec<_>>())
    }

    #[test]
    fn classify_text_output() {
        let r = run_strs(&["classify", "A[;lin(0,-2)]"]);
        assert_eq!(r.status, Status::Ok);
        assert!(r.text.contains("antidominant: true"));
        assert_eq!(r.exit_code(), 0);
    }

    #[test]
    fn unknown_kind_is_usage_error() {
        let r = run_strs(&["classify", "Z[0]"]);
        assert_eq!(r.status, Status::UsageError);
        assert_eq!(r.exit_code(), 2);
    }

    #[test]
    fn mult_example() {
        let r = run_strs(&["mult", "A[]", "--mu", "A[1,-1]"]);
        assert_eq!(r.status, Status::Ok);
        assert_eq!(r.text, "1");
    }

    #[test]
    fn domain_errors_exit_one() {
        // interval with incomparable endpoints
        let r = run_strs(&["interval", "A[]", "A[1,-1]"]);
        assert_eq!(r.status, Status::DomainError);
        assert_eq!(r.exit_code(), 1);
        assert_eq!(r.payload["code"], "NotComparable");
    }

    #[test]
    fn json_documents_round_trip_weights() {
        let r = run_strs(&["interval", "A[1,-1]", "A[]", "--json"]);
        assert_eq!(r.status, Status::Ok);
        let doc = r.json_document();
        let members = doc["payload"]["members"].as_array().unwrap();
        assert_eq!(members.len(), 2);
        for m in members {
            let w: Weight = m.as_str().unwrap().parse().unwrap();
            assert_eq!(w.to_string(), m.as_str().unwrap());
        }
    }

    #[test]
    fn kl_subcommand() {
        let r = run_strs(&["kl", "A", "2", "2.1.3.2"]);
        assert_eq!(r.status, Status::Ok);
        assert!(r.text.starts_with("coeffs: 1 1"));
    }

    #[test]
    fn determinism() {
        let a = run_strs(&["comp", "A[]", "--lo", "A[1,0,-1]", "--hi", "A[]"]);
        let b = run_strs(&["comp", "A[]", "--lo", "A[1,0,-1]", "--hi", "A[]"]);
        assert_eq!(a.status, Status::Ok);
        assert_eq!(a.text, b.text);
        assert_eq!(a.json_document(), b.json_document());
    }
}
