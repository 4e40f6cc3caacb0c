use std::io::{self, Write};
use std::process::ExitCode;

fn main() -> ExitCode {
    let (code, out) = thinpos::cli::run(std::env::args_os(), &mut io::stdin().lock());
    let mut stdout = io::stdout().lock();
    // a closed pipe is not worth a panic
    let _ = stdout.write_all(out.as_bytes());
    ExitCode::from(code as u8)
}
