use std::io::Write;

use clap::Parser;
use pellkit_cli::args::Cli;

fn main() {
    let out = pellkit_cli::run(Cli::parse());
    // a closed pipe is not worth a panic
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    std::process::exit(out.code);
}
