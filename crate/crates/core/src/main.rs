use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let stdin = io::stdin();
    let code = freethm::cli::run(&args, stdin.lock(), &mut io::stdout(), &mut io::stderr());
    ExitCode::from(code as u8)
}
