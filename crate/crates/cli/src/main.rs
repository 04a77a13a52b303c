use std::io::Write;

use clap::Parser;
use transversal_lab::{run, Cli};

fn main() {
    let out = run(Cli::parse());
    std::io::stdout().write_all(out.stdout.as_bytes()).expect("write stdout");
    std::io::stderr().write_all(out.stderr.as_bytes()).expect("write stderr");
    std::process::exit(out.code);
}
