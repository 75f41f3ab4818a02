//! Error taxonomy shared by all modules.

use std::fmt;

/// Everything that can go wrong in a library call.
///
/// Each variant carries a stable machine-readable code (see [`Error::code`])
/// that the CLI exposes in JSON output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two inputs live over different root-system kinds.
    KindMismatch,
    /// The difference of two weights is not finitely supported (their tail
    /// rules disagree), so the partial order cannot compare them.
    TailMismatch,
    /// A root shape that is not a positive root of the requested kind.
    IllegalRootShape,
    /// `interval(lo, hi)` was asked for a pair with `lo ⋠ hi`.
    NotComparable,
    /// A finite-rank truncation was requested below the kind's minimum rank.
    RankTooSmall,
    /// A word contained an invalid simple-generator index.
    BadGenerator(String),
    /// Multiplicity-type queries only support regular integral dot-orbits.
    UnsupportedOrbit(String),
    /// The base weight of a truncated query does not lie under the truncation.
    NotInTruncation,
    /// A brute-force oracle query exceeded the configured rank bound.
    OracleBoundExceeded,
    /// Text that does not match the weight/root/word grammar.
    Parse(String),
    /// An internal consistency check failed (e.g. a stabilization plateau
    /// that the theory guarantees did not hold numerically).
    Internal(String),
}

impl Error {
    /// Stable machine-readable code for CLI consumers.
    pub fn code(&self) -> &'static str {
        match self {
            Error::KindMismatch => "KindMismatch",
            Error::TailMismatch => "TailMismatch",
            Error::IllegalRootShape => "IllegalRootShape",
            Error::NotComparable => "NotComparable",
            Error::RankTooSmall => "RankTooSmall",
            Error::BadGenerator(_) => "BadGenerator",
            Error::UnsupportedOrbit(_) => "UnsupportedOrbit",
            Error::NotInTruncation => "NotInTruncation",
            Error::OracleBoundExceeded => "OracleBoundExceeded",
            Error::Parse(_) => "Parse",
            Error::Internal(_) => "Internal",
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::KindMismatch => write!(f, "inputs have different root-system kinds"),
            Error::TailMismatch => {
                write!(f, "weight difference is not finitely supported (tail rules differ)")
            }
            Error::IllegalRootShape => write!(f, "root shape is not legal for this kind"),
            Error::NotComparable => write!(f, "weights are not comparable in the partial order"),
            Error::RankTooSmall => write!(f, "rank is below the minimum for this kind"),
            Error::BadGenerator(s) => write!(f, "bad generator: {s}"),
            Error::UnsupportedOrbit(s) => write!(f, "unsupported orbit: {s}"),
            Error::NotInTruncation => write!(f, "weight does not lie under the truncation bound"),
            Error::OracleBoundExceeded => write!(f, "oracle rank bound exceeded"),
            Error::Parse(s) => write!(f, "parse error: {s}"),
            Error::Internal(s) => write!(f, "internal invariant violated: {s}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
