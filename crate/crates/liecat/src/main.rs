use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let result = liecat::cli::run(&argv);

    // writes ignore errors so that piping into a pager that exits early
    // (broken pipe) does not turn into a panic
    let stderr = std::io::stderr();
    for line in &result.diagnostics {
        let _ = writeln!(stderr.lock(), "{line}");
    }
    let stdout = std::io::stdout();
    if result.json_mode && result.status != liecat::cli::Status::UsageError {
        let _ = writeln!(stdout.lock(), "{}", result.json_document());
    } else if !result.text.is_empty() {
        let _ = writeln!(stdout.lock(), "{}", result.text);
    }
    ExitCode::from(result.exit_code() as u8)
}
