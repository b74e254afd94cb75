use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let out = starcut::cli::run(std::env::args_os());
    // a closed pipe (e.g. `| head`) is not an error worth reporting
    let _ = writeln!(std::io::stdout().lock(), "{}", out.stdout);
    ExitCode::from(out.code as u8)
}
