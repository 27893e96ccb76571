use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let e = rational_tetra::cli::execute(std::env::args_os());
    std::io::stdout().write_all(e.stdout.as_bytes()).ok();
    std::io::stderr().write_all(e.stderr.as_bytes()).ok();
    ExitCode::from(e.code as u8)
}
