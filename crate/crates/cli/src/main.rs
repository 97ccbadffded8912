mod args;
mod commands;
mod output;
mod verify;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use serde::Serialize;

use args::{Cli, Command, Params};

#[derive(Debug)]
pub enum CliError {
    Core(qsync::Error),
    Usage(String),
    Scenario(String),
    Io(String),
}

impl From<qsync::Error> for CliError {
    fn from(e: qsync::Error) -> Self {
        CliError::Core(e)
    }
}

#[derive(Serialize)]
struct ErrorBody<'a> {
    kind: &'a str,
    message: String,
}

#[derive(Serialize)]
struct ErrorReport<'a> {
    error: ErrorBody<'a>,
}

impl CliError {
    fn body(&self) -> ErrorBody<'_> {
        match self {
            CliError::Core(e) => ErrorBody {
                kind: e.kind(),
                message: e.to_string(),
            },
            CliError::Usage(m) => ErrorBody {
                kind: "usage",
                message: m.clone(),
            },
            CliError::Scenario(m) => ErrorBody {
                kind: "malformed_scenario",
                message: m.clone(),
            },
            CliError::Io(m) => ErrorBody {
                kind: "io",
                message: m.clone(),
            },
        }
    }

    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) if e.is_internal() => 2,
            _ => 1,
        }
    }
}

fn fail(err: CliError) -> ExitCode {
    let report = ErrorReport { error: err.body() };
    eprintln!(
        "{}",
        serde_json::to_string_pretty(&report).expect("error report serializes")
    );
    ExitCode::from(err.exit_code())
}

fn run(cli: Cli) -> Result<u8, CliError> {
    let params = Params::resolve(cli.opts)?;
    let out = match cli.command {
        Command::Cosets => commands::cosets(&params)?,
        Command::Factor => commands::factor(&params)?,
        Command::Code => commands::code(&params)?,
        Command::Dual => commands::dual(&params)?,
        Command::Mindist => commands::mindist(&params)?,
        Command::Augment => commands::augment(&params)?,
        Command::Qsc => commands::qsc(&params)?,
        Command::VerifyPaper => verify::verify_paper(&params)?,
        Command::Sweep => commands::sweep(&params)?,
    };
    let bytes = output::render(&out, params.format)?;
    match &params.out {
        Some(path) => std::fs::write(path, &bytes)
            .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?,
        None => std::io::stdout()
            .write_all(&bytes)
            .map_err(|e| CliError::Io(e.to_string()))?,
    }
    Ok(out.status as u8)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => return fail(CliError::Usage(e.to_string().trim_end().to_string())),
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => fail(e),
    }
}
