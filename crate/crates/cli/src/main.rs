mod args;
mod compute;
mod config;
mod convert;
mod emit;
mod error;
mod verify;

use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::Parser;
use hilbjack::Partition;

use crate::args::{Cli, Command};
use crate::config::{AlphaMode, RunConfig};
use crate::error::CliError;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 3 } else { 0 });
        }
    };
    match run(cli) {
        Ok(out) => emit(&out, ExitCode::SUCCESS),
        Err((out, e)) => {
            eprintln!("error: {e}");
            emit(&out, ExitCode::from(e.exit_code()))
        }
    }
}

fn emit(out: &str, code: ExitCode) -> ExitCode {
    let mut stdout = io::stdout().lock();
    if stdout
        .write_all(out.as_bytes())
        .and_then(|()| stdout.flush())
        .is_err()
    {
        return ExitCode::FAILURE;
    }
    code
}

/// Returns everything destined for stdout in one piece; on failure the
/// string carries whatever report is still meaningful (only `verify`
/// produces one).
fn run(cli: Cli) -> Result<String, (String, CliError)> {
    let fail = |e: CliError| (String::new(), e);
    match cli.command {
        Command::Compute(args) => {
            let filter = args
                .partition
                .as_deref()
                .map(|s| {
                    s.parse::<Partition>()
                        .map_err(|e| CliError::Input(e.to_string()))
                })
                .transpose()
                .map_err(fail)?;
            let config =
                RunConfig::from_args(&args.common, None, filter.as_ref().map(Partition::size))
                    .map_err(fail)?;
            let table = compute::cmd_compute(&config, args.what, filter.as_ref()).map_err(fail)?;
            Ok(emit::render_table(
                &table,
                &config.alpha_mode,
                config.output_format,
            ))
        }
        Command::Verify(args) => {
            let config =
                RunConfig::from_args(&args.common, args.suite.as_deref(), None).map_err(fail)?;
            if config.alpha_mode != AlphaMode::Symbolic {
                return Err(fail(CliError::Input(
                    "verification suites run symbolically; drop --alpha".into(),
                )));
            }
            let outcome = verify::cmd_verify(&config);
            for r in &outcome.reports {
                for c in &r.checks {
                    eprintln!("{}: {c}", r.suite);
                }
            }
            let out = emit::render_verify(&outcome, config.output_format);
            match outcome.failures() {
                0 => Ok(out),
                k => Err((out, CliError::VerificationFailed(k))),
            }
        }
        Command::Convert(args) => {
            let mut input = String::new();
            io::stdin()
                .read_to_string(&mut input)
                .map_err(|e| fail(CliError::Input(format!("reading stdin: {e}"))))?;
            convert::cmd_convert(&input, &args.to)
                .map(|s| s + "\n")
                .map_err(fail)
        }
    }
}
