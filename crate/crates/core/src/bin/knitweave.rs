use std::io::{Read, Write};

use anyhow::Context;

fn main() -> anyhow::Result<()> {
    let outcome = knitweave::cli::run(std::env::args_os(), || {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    });
    std::io::stdout().write_all(outcome.stdout.as_bytes()).context("writing output")?;
    std::io::stderr().write_all(outcome.stderr.as_bytes()).context("writing diagnostics")?;
    std::process::exit(outcome.code);
}
