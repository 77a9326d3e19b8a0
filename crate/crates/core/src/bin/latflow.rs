use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let out = latflow::cli::run_command(std::env::args());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    let _ = std::io::stdout().flush();
    ExitCode::from(out.exit_code as u8)
}
