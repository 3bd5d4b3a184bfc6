//! Command-line front end for the fan obstruction library: fan-file
//! ingestion, command dispatch, canonical text and JSON reports, and a
//! golden-output self-test over the bundled example corpus.
//!
//! The binary is a thin wrapper around [`run_cli`], which takes the
//! argument list and output sinks explicitly so the whole surface is
//! testable in-process.  Exit codes: 0 on success, 1 for anything wrong
//! with the input (unreadable file, parse error, invalid fan, bad flag),
//! 2 for a valid fan outside the hypotheses of the obstruction formulas.

pub mod commands;
pub mod corpus;
pub mod error;
pub mod fanfile;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use commands::{execute, Request};
use error::CliError;

#[derive(Parser)]
#[command(
    name = "torfan",
    version,
    about = "Obstruction calculator for regular rational polyhedral fans"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Args)]
struct FanArgs {
    /// Path to a fan file: {"dim":2,"rays":[[1,0],[0,1]],"cones":[[0,1]]}
    file: PathBuf,
    /// Emit a single-line JSON report instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// Validate a fan file and report its canonical shape
    Validate(FanArgs),
    /// Reduced homology of the fan's simplicial complex
    Homology(FanArgs),
    /// Link of every nonempty face, with its reduced homology
    Links(FanArgs),
    /// Flatness of equivariant K-theory / spectral-sequence degeneracy
    CheckFlat(FanArgs),
    /// Search for an enough-limits certificate
    CheckLimits(FanArgs),
    /// Whether the obstruction table survives star subdivisions unchanged
    CheckSafe(FanArgs),
    /// The obstruction groups Tor_p
    Tor(FanArgs),
    /// Obstruction groups for a higher K-theory row
    HigherTor {
        /// Coefficient group in canonical form, e.g. 'Z', 'Z/3', 'Z^2 + Z/4'
        #[arg(long)]
        kq: String,
        #[command(flatten)]
        fan: FanArgs,
    },
    /// Nonzero entries of the first spectral-sequence page
    E1(FanArgs),
    /// Predicted Tor changes under the blow-up at a cone
    Blowup {
        /// Cone given by its ray vectors, e.g. '1,0,0;0,1,0'
        #[arg(long)]
        cone: String,
        #[command(flatten)]
        fan: FanArgs,
    },
    /// Orbit-closure fan at a cone, emitted as a fan file
    Orbit {
        /// Cone given by its ray vectors, e.g. '1,0,0;0,1,0'
        #[arg(long)]
        cone: String,
        #[command(flatten)]
        fan: FanArgs,
    },
    /// Run the bundled corpus through every command against golden outputs
    Selftest {
        /// Print the current transcripts instead of comparing
        #[arg(long)]
        dump: bool,
    },
}

/// Parses `args` and runs the selected command, writing reports to `out`
/// and error lines to `err`.  Returns the process exit code.
pub fn run_cli<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // --help and --version surface as clap "errors"; everything else
            // is a usage problem and lands in the generic input-error code.
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    1
                }
            };
        }
    };

    let (fan_args, request) = match cli.command {
        Cmd::Validate(f) => (f, Request::Validate),
        Cmd::Homology(f) => (f, Request::Homology),
        Cmd::Links(f) => (f, Request::Links),
        Cmd::CheckFlat(f) => (f, Request::CheckFlat),
        Cmd::CheckLimits(f) => (f, Request::CheckLimits),
        Cmd::CheckSafe(f) => (f, Request::CheckSafe),
        Cmd::Tor(f) => (f, Request::Tor),
        Cmd::HigherTor { kq, fan } => (fan, Request::HigherTor { kq }),
        Cmd::E1(f) => (f, Request::E1),
        Cmd::Blowup { cone, fan } => (fan, Request::Blowup { cone }),
        Cmd::Orbit { cone, fan } => (fan, Request::Orbit { cone }),
        Cmd::Selftest { dump } => {
            let (report, code) = corpus::run_selftest(dump);
            let _ = out.write_all(report.as_bytes());
            return code;
        }
    };

    let text = match std::fs::read_to_string(&fan_args.file) {
        Ok(text) => text,
        Err(source) => {
            let e = CliError::Io { path: fan_args.file.display().to_string(), source };
            let _ = writeln!(err, "error: {e}");
            return e.exit_code();
        }
    };
    let data = match fanfile::parse_fan_file(&text) {
        Ok(data) => data,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return e.exit_code();
        }
    };
    let outcome = execute(&request, &data, fan_args.json);
    let _ = out.write_all(outcome.stdout.as_bytes());
    let _ = err.write_all(outcome.stderr.as_bytes());
    outcome.code
}
