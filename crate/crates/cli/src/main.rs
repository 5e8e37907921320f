use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let stdin = std::io::stdin();
    let mut out = std::io::stdout().lock();
    let mut err = std::io::stderr().lock();
    let code = unidist::run(std::env::args_os(), &mut stdin.lock(), &mut out, &mut err);
    let _ = out.flush();
    ExitCode::from(code as u8)
}
