//! Command-line front end for `mtbs`: argument parsing, record output and
//! the verification suites behind `mtbs verify`.

pub mod app;
pub mod output;
pub mod verify;
pub mod workloads;

use std::ffi::OsString;

use clap::error::ErrorKind;
use clap::Parser;

/// Parses `args`, runs the subcommand and returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match app::Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            if code != 0 {
                let reason = e.render().to_string();
                let first = reason.lines().next().unwrap_or("invalid arguments").trim_start_matches("error: ");
                eprintln!("{}", serde_json::json!({ "error": "invalid_argument", "exit_code": 2, "reason": first }));
            }
            return code;
        }
    };
    match app::run(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("{}", e.reason_line());
            e.exit_code()
        }
    }
}
