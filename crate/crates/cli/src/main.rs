use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let outcome = std::panic::catch_unwind(|| vaisman_cli::run(std::env::args_os()));
    let outcome = match outcome {
        Ok(o) => o,
        Err(_) => {
            eprintln!("error: internal failure");
            return ExitCode::from(vaisman_cli::EXIT_INPUT as u8);
        }
    };
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code as u8)
}
