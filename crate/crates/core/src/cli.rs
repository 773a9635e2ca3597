//! `toric-brauer` command-line front end.
//!
//! ```text
//! toric-brauer compute <file|-> [--format text|structured] [--normalize-rays] [--groups g1,g2,...]
//! toric-brauer gen <name> [params...]
//! toric-brauer validate <file|-> [--normalize-rays]
//! ```
//!
//! Exit status: 0 success, 1 usage or file error, 2 invalid fan, 3 internal
//! consistency failure.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{Read, Write};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{Map, Value};
use thiserror::Error;

use crate::fan::{
    parse_fan, parse_fan_unchecked, standard_fan, to_json, validate_fan, FanError, ParseOptions,
};
use crate::toric::{cohomological_brauer, CohomologyReport, ToricError};

#[derive(Debug, Parser)]
#[command(
    name = "toric-brauer",
    version,
    about = "Units, class group, Picard group and Brauer group of a toric variety"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute the cohomology report of a fan file ("-" reads standard input).
    Compute {
        input: String,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        /// Divide non-primitive rays by their gcd instead of rejecting them.
        #[arg(long)]
        normalize_rays: bool,
        /// Comma-separated subset of units, cl, pic, relbrauer, desingbrauer, h2, all.
        #[arg(long, value_enum, value_delimiter = ',', default_value = "all")]
        groups: Vec<GroupSelector>,
    },
    /// Print a standard fan in the fan file format.
    Gen {
        name: String,
        #[arg(allow_negative_numbers = true)]
        params: Vec<i64>,
    },
    /// Report structural violations and advisories for a fan file.
    Validate {
        input: String,
        #[arg(long)]
        normalize_rays: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Structured,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GroupSelector {
    Units,
    Cl,
    Pic,
    Relbrauer,
    Desingbrauer,
    H2,
    All,
}

/// Every group, in report order.
pub const ALL_GROUPS: [GroupSelector; 6] = [
    GroupSelector::Units,
    GroupSelector::Cl,
    GroupSelector::Pic,
    GroupSelector::Relbrauer,
    GroupSelector::Desingbrauer,
    GroupSelector::H2,
];

impl GroupSelector {
    fn json_key(self) -> &'static str {
        match self {
            GroupSelector::Units => "units_rank",
            GroupSelector::Cl => "class_group",
            GroupSelector::Pic => "picard",
            GroupSelector::Relbrauer => "relative_brauer",
            GroupSelector::Desingbrauer => "desing_brauer",
            GroupSelector::H2 => "h2",
            GroupSelector::All => unreachable!("expanded before use"),
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("{0}")]
    Fan(#[from] FanError),
    #[error("{0}")]
    Toric(#[from] ToricError),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io { .. } => 1,
            CliError::Fan(FanError::Syntax(_)) => 1,
            CliError::Fan(FanError::UnknownGenerator(_) | FanError::BadParams(_)) => 1,
            CliError::Fan(_) => 2,
            CliError::Toric(ToricError::InternalInconsistency(_)) => 3,
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = stdout.write_all(text.as_bytes());
                    0
                }
                _ => {
                    let _ = stderr.write_all(text.as_bytes());
                    1
                }
            };
        }
    };
    match execute(&cli.command, stdin) {
        Ok(Outcome { output, status }) => {
            if let Err(e) = stdout
                .write_all(output.as_bytes())
                .and_then(|_| stdout.flush())
            {
                let _ = writeln!(stderr, "error: cannot write output: {e}");
                return 1;
            }
            status
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

struct Outcome {
    output: String,
    status: u8,
}

fn execute(cmd: &Command, stdin: &mut dyn Read) -> Result<Outcome, CliError> {
    match cmd {
        Command::Compute {
            input,
            format,
            normalize_rays,
            groups,
        } => {
            let doc = read_input(input, stdin)?;
            let fan = parse_fan(
                &doc,
                ParseOptions {
                    normalize_rays: *normalize_rays,
                },
            )?;
            let report = cohomological_brauer(&fan)?;
            let selected = expand_groups(groups);
            let output = match format {
                OutputFormat::Text => format_text(&report, &selected),
                OutputFormat::Structured => format_structured(&report, &selected),
            };
            Ok(Outcome { output, status: 0 })
        }
        Command::Gen { name, params } => {
            let fan = standard_fan(name, params)?;
            Ok(Outcome {
                output: to_json(&fan),
                status: 0,
            })
        }
        Command::Validate {
            input,
            normalize_rays,
        } => {
            let doc = read_input(input, stdin)?;
            let fan = match parse_fan_unchecked(
                &doc,
                ParseOptions {
                    normalize_rays: *normalize_rays,
                },
            ) {
                Ok(fan) => fan,
                Err(e @ FanError::Syntax(_)) => return Err(e.into()),
                Err(e) => {
                    return Ok(Outcome {
                        output: format!("violation: {e}\n"),
                        status: 2,
                    })
                }
            };
            let findings = validate_fan(&fan);
            let mut output = String::new();
            for f in &findings {
                writeln!(output, "{f}").unwrap();
            }
            let violations = findings.iter().filter(|f| f.is_violation()).count();
            if violations == 0 {
                output.push_str("valid: no violations\n");
                Ok(Outcome { output, status: 0 })
            } else {
                writeln!(output, "invalid: {violations} violation(s)").unwrap();
                Ok(Outcome { output, status: 2 })
            }
        }
    }
}

fn read_input(path: &str, stdin: &mut dyn Read) -> Result<String, CliError> {
    let mut doc = String::new();
    let res = if path == "-" {
        stdin.read_to_string(&mut doc).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|s| doc = s)
    };
    res.map_err(|e| CliError::Io {
        path: path.to_string(),
        message: e.to_string(),
    })?;
    Ok(doc)
}

fn expand_groups(groups: &[GroupSelector]) -> Vec<GroupSelector> {
    if groups.is_empty() || groups.contains(&GroupSelector::All) {
        return ALL_GROUPS.to_vec();
    }
    ALL_GROUPS
        .iter()
        .copied()
        .filter(|g| groups.contains(g))
        .collect()
}

/// One line per selected group:
///
/// ```text
/// Units rank 0
/// Cl = Z
/// Pic = Z
/// H2(K/X) = 0
/// B(X~) = 0
/// H2(X) = 0
/// ```
pub fn format_text(report: &CohomologyReport, groups: &[GroupSelector]) -> String {
    let mut out = String::new();
    for g in groups {
        match g {
            GroupSelector::Units => writeln!(out, "Units rank {}", report.units_rank),
            GroupSelector::Cl => writeln!(out, "Cl = {}", report.class_group),
            GroupSelector::Pic => writeln!(out, "Pic = {}", report.picard),
            GroupSelector::Relbrauer => writeln!(out, "H2(K/X) = {}", report.relative_brauer),
            GroupSelector::Desingbrauer => writeln!(out, "B(X~) = {}", report.desing_brauer),
            GroupSelector::H2 => writeln!(out, "H2(X) = {}", report.h2),
            GroupSelector::All => Ok(()),
        }
        .unwrap();
    }
    out
}

/// Compact JSON object with the selected report fields, newline-terminated.
pub fn format_structured(report: &CohomologyReport, groups: &[GroupSelector]) -> String {
    let Value::Object(full) = serde_json::to_value(report).expect("report serializes") else {
        unreachable!("report serializes to an object")
    };
    let mut obj = Map::new();
    for g in groups {
        let key = g.json_key();
        obj.insert(key.to_string(), full[key].clone());
    }
    let mut s = serde_json::to_string(&Value::Object(obj)).expect("JSON values serialize");
    s.push('\n');
    s
}

/// Inverse of [`format_structured`] for a full report.
pub fn parse_structured(s: &str) -> Result<CohomologyReport, serde_json::Error> {
    serde_json::from_str(s)
}
