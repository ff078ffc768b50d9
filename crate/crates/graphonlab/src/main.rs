use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(graphonlab::cli::run())
}
