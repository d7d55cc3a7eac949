mod cache;
mod catalog;
mod commands;
mod opts;

use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = opts::Cli::parse();
    match commands::run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            // A reader closing the pipe early (e.g. `immersions list | head`)
            // is not a failure.
            let broken_pipe = err.chain().any(|e| {
                e.downcast_ref::<std::io::Error>()
                    .map(|io| io.kind() == std::io::ErrorKind::BrokenPipe)
                    .or_else(|| {
                        e.downcast_ref::<serde_json::Error>()
                            .map(|j| j.io_error_kind() == Some(std::io::ErrorKind::BrokenPipe))
                    })
                    .unwrap_or(false)
            });
            if broken_pipe {
                return ExitCode::SUCCESS;
            }
            eprintln!("error: {err:#}");
            let code = if err.downcast_ref::<commands::UsageError>().is_some() {
                2
            } else {
                1
            };
            ExitCode::from(code)
        }
    }
}
