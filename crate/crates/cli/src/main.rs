//! `strcx`: command-line front end to the string complex library.
//!
//! Exit codes: 0 success, 1 a failed check or computation, 2 bad input.

mod args;
mod commands;
mod input;
mod worked;

use std::process::ExitCode;

use clap::Parser;

use crate::input::InputError;

fn is_input_error(err: &anyhow::Error) -> bool {
    err.chain().any(|e| {
        e.is::<InputError>()
            || e.is::<serde_json::Error>()
            || e.downcast_ref::<string_complex::Error>().is_some_and(string_complex::Error::is_input_error)
    })
}

fn main() -> ExitCode {
    let cli = args::Cli::parse();
    match commands::run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(if is_input_error(&err) { 2 } else { 1 })
        }
    }
}
