mod args;
mod commands;
mod output;

use std::io::Write;
use std::process::ExitCode;

use clap::{CommandFactory, Parser};

use args::{Cli, Format};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match commands::run(&cli.command) {
        Ok(blocks) => {
            let text = match cli.format {
                Format::Text => output::render_text(&blocks),
                Format::Json => output::render_json(&blocks),
            };
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(text.as_bytes());
            let failed = blocks.iter().any(|b| b.passed == Some(false));
            ExitCode::from(if failed { 1 } else { 0 })
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            if e.exit_code() == 2 {
                eprintln!("\n{}", Cli::command().render_usage());
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
