//! Command-line front end; see [`repequiv::cli`].

use std::io::Write;

fn main() {
    let out = repequiv::cli::main_with(std::env::args_os());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    let _ = std::io::stdout().flush();
    std::process::exit(out.status);
}
