use std::io::{self, Read, Write};

fn main() {
    let stdin = io::stdin();
    let stdout = io::stdout();
    let stderr = io::stderr();
    let mut input = stdin.lock();
    let mut out = stdout.lock();
    let mut err = stderr.lock();
    let code = alon_tarsi_cli::run(std::env::args_os(), &mut input as &mut dyn Read, &mut out, &mut err);
    let _ = out.flush();
    std::process::exit(code);
}
