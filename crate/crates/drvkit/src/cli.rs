//! Command-line front end. Subcommands construct a context from family
//! names or JSON files, run the engine, and print a deterministic JSON
//! report to standard output.
//!
//! Exit codes: 0 success, 1 internal assertion failure, 2 validation
//! failure (with a diagnostic report on stdout), 64 usage errors,
//! 66 file I/O failures.

use std::ffi::OsString;
use std::path::Path;

use clap::{Arg, ArgMatches, Command};

use crate::json::{DerivationFile, DiagnosticReport, EndoFile, GroupFile, RingRepr};
use crate::run::{execute, EndoSource, EngineError, GroupSource, Request, VERSION};
use crate::selftest;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_IO: i32 = 66;

enum CliError {
    Validation {
        command: String,
        error: String,
        detail: String,
    },
    Io(String),
    Internal(String),
}

impl CliError {
    fn from_engine(command: &str, e: EngineError) -> CliError {
        match e {
            EngineError::Validation { error, detail } => CliError::Validation {
                command: command.to_string(),
                error,
                detail,
            },
            EngineError::Internal(msg) => CliError::Internal(msg),
        }
    }
}

fn command_tree() -> Command {
    let group_arg = Arg::new("group")
        .long("group")
        .value_name("NAME|FILE")
        .help("group family name (C<n>, D<n>, S<n>, A<n>, Q8, products like C2xC4) or a JSON file");
    let ring_arg = Arg::new("ring")
        .long("ring")
        .value_name("Q|Z|Fp:<p>")
        .help("coefficient ring");
    let sigma_arg = Arg::new("sigma")
        .long("sigma")
        .value_name("id|inner:<k>|FILE")
        .help("left twist endomorphism");
    let tau_arg = Arg::new("tau")
        .long("tau")
        .value_name("id|inner:<k>|FILE")
        .help("right twist endomorphism");
    let derivation_arg = Arg::new("derivation")
        .long("derivation")
        .value_name("FILE")
        .help("derivation table JSON ({\"values\": [...]})");
    let out_arg = Arg::new("out")
        .long("out")
        .value_name("FILE")
        .help("also write the report to a file");
    let seed_arg = Arg::new("seed")
        .long("seed")
        .value_name("INT")
        .help("seed for randomized checks");

    let with_context = |c: Command| {
        c.arg(group_arg.clone())
            .arg(ring_arg.clone())
            .arg(sigma_arg.clone())
            .arg(tau_arg.clone())
            .arg(derivation_arg.clone())
            .arg(seed_arg.clone())
            .arg(out_arg.clone())
    };

    let mut cmd = Command::new("drvkit")
        .version(VERSION)
        .about("exact twisted derivations of finite group rings")
        .subcommand_required(true)
        .arg_required_else_help(true);
    for (name, about) in [
        ("group", "emit a group's Cayley table and class structure"),
        ("check-hom", "validate sigma/tau as algebra endomorphisms"),
        ("center", "class-sum basis of the center of RG"),
        ("orbits", "twisted conjugation orbits of (sigma, tau)"),
        ("basis", "enumerate a basis of the derivation space"),
        ("dimension", "derivation-space and inner dimensions"),
        ("witness", "solve a derivation for an inner witness"),
        ("integralize", "integral witness pipeline over ZG"),
        ("selftest", "run the acceptance catalog"),
    ] {
        cmd = cmd.subcommand(with_context(Command::new(name).about(about)));
    }
    cmd
}

fn read_file(path: &str) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("cannot read {path}: {e}")))
}

fn parse_json<T: serde::de::DeserializeOwned>(
    command: &str,
    path: &str,
    text: &str,
) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Validation {
        command: command.to_string(),
        error: "malformed-json".to_string(),
        detail: format!("{path}: {e}"),
    })
}

/// "--group" accepts a family name or a path; anything that parses as a
/// family wins, otherwise it is treated as a file.
fn group_source(command: &str, value: &str) -> Result<GroupSource, CliError> {
    if crate::families::FamilySpec::parse(value).is_ok() {
        return Ok(GroupSource::Name(value.to_string()));
    }
    if Path::new(value).exists() || value.ends_with(".json") || value.contains('/') {
        let text = read_file(value)?;
        let file: GroupFile = parse_json(command, value, &text)?;
        return Ok(GroupSource::Inline(file));
    }
    Err(CliError::Validation {
        command: command.to_string(),
        error: "unknown-group".to_string(),
        detail: format!("{value:?} is neither a family name nor a readable file"),
    })
}

fn endo_source(command: &str, value: &str) -> Result<EndoSource, CliError> {
    if value == "id" || value.starts_with("inner:") {
        return Ok(EndoSource::Spec(value.to_string()));
    }
    let text = read_file(value)?;
    // bare {"images": [...]} is shorthand for a group homomorphism
    #[derive(serde::Deserialize)]
    struct BareHom {
        images: Vec<usize>,
    }
    if let Ok(file) = serde_json::from_str::<EndoFile>(&text) {
        return Ok(EndoSource::Inline(file));
    }
    let bare: BareHom = parse_json(command, value, &text)?;
    Ok(EndoSource::Inline(EndoFile::GroupHom {
        images: bare.images,
    }))
}

fn ring_repr(command: &str, value: &str) -> Result<RingRepr, CliError> {
    match value {
        "Q" => Ok(RingRepr::Name("Q".to_string())),
        "Z" => Ok(RingRepr::Name("Z".to_string())),
        other => {
            let Some(p) = other.strip_prefix("Fp:") else {
                return Err(CliError::Validation {
                    command: command.to_string(),
                    error: "invalid-ring".to_string(),
                    detail: format!("{other:?}; expected Q, Z or Fp:<p>"),
                });
            };
            let p: u32 = p.parse().map_err(|_| CliError::Validation {
                command: command.to_string(),
                error: "invalid-ring".to_string(),
                detail: format!("bad prime in {other:?}"),
            })?;
            Ok(RingRepr::Fp { fp: p })
        }
    }
}

fn order_cap_from_env() -> Option<usize> {
    std::env::var("DRVKIT_CAP")
        .ok()
        .and_then(|v| v.parse().ok())
}

fn build_request(command: &str, matches: &ArgMatches) -> Result<Request, CliError> {
    let group_value = matches
        .get_one::<String>("group")
        .ok_or_else(|| CliError::Validation {
            command: command.to_string(),
            error: "missing-group".to_string(),
            detail: "this command needs --group".to_string(),
        })?;
    let group = group_source(command, group_value)?;
    let ring = matches
        .get_one::<String>("ring")
        .map(|v| ring_repr(command, v))
        .transpose()?;
    let sigma = matches
        .get_one::<String>("sigma")
        .map(|v| endo_source(command, v))
        .transpose()?;
    let tau = matches
        .get_one::<String>("tau")
        .map(|v| endo_source(command, v))
        .transpose()?;
    let derivation = matches
        .get_one::<String>("derivation")
        .map(|path| {
            let text = read_file(path)?;
            parse_json::<DerivationFile>(command, path, &text)
        })
        .transpose()?;
    Ok(Request {
        command: command.to_string(),
        group,
        ring,
        sigma,
        tau,
        derivation,
        order_cap: order_cap_from_env(),
        enumeration_cap: None,
    })
}

fn write_output(matches: &ArgMatches, text: &str) -> Result<(), CliError> {
    print!("{text}");
    if let Some(path) = matches.get_one::<String>("out") {
        std::fs::write(path, text)
            .map_err(|e| CliError::Io(format!("cannot write {path}: {e}")))?;
    }
    Ok(())
}

fn run_selftest(matches: &ArgMatches) -> Result<i32, CliError> {
    let seed = matches
        .get_one::<String>("seed")
        .map(|v| {
            v.parse::<u64>().map_err(|_| CliError::Validation {
                command: "selftest".to_string(),
                error: "invalid-seed".to_string(),
                detail: format!("{v:?} is not an unsigned integer"),
            })
        })
        .transpose()?
        .unwrap_or(0);
    let results = selftest::run_all(seed);
    let table = selftest::render_table(&results, seed);
    write_output(matches, &table)?;
    if results.iter().all(|r| r.passed) {
        Ok(EXIT_OK)
    } else {
        Ok(EXIT_INTERNAL)
    }
}

fn dispatch(command: &str, matches: &ArgMatches) -> Result<i32, CliError> {
    if command == "selftest" {
        return run_selftest(matches);
    }
    let request = build_request(command, matches)?;
    let report = execute(&request).map_err(|e| CliError::from_engine(command, e))?;
    write_output(matches, &report.to_pretty_string())?;
    Ok(EXIT_OK)
}

/// Entry point used by `main`; returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let matches = match command_tree().try_get_matches_from(argv) {
        Ok(m) => m,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return code;
        }
    };
    let (name, sub) = matches.subcommand().expect("subcommand required");
    let outcome = std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| dispatch(name, sub)));
    match outcome {
        Ok(Ok(code)) => code,
        Ok(Err(CliError::Validation {
            command,
            error,
            detail,
        })) => {
            let report = DiagnosticReport {
                version: VERSION.to_string(),
                command,
                error,
                detail,
            };
            print!("{}", report.to_pretty_string());
            EXIT_VALIDATION
        }
        Ok(Err(CliError::Io(msg))) => {
            eprintln!("drvkit: {msg}");
            EXIT_IO
        }
        Ok(Err(CliError::Internal(msg))) => {
            eprintln!("drvkit: internal error: {msg}");
            EXIT_INTERNAL
        }
        Err(panic) => {
            let msg = panic
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| panic.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".to_string());
            eprintln!("drvkit: internal assertion failure: {msg}");
            EXIT_INTERNAL
        }
    }
}
