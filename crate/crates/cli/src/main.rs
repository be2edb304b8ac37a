use std::io::Write;

use clap::Parser;
use polymatch_cli::{run, Cli};

fn main() {
    let cli = Cli::parse();
    let (text, code) = run(&cli);
    let _ = writeln!(std::io::stdout(), "{text}");
    std::process::exit(code);
}
