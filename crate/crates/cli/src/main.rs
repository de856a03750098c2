mod commands;
mod config;
mod suites;

use std::io::Write;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Arg, ArgAction, ArgMatches, Command};
use pivotlab_core::{Error, FORMAT_VERSION};
use serde_json::json;

use config::{RunConfig, COMMANDS};

fn cli() -> Command {
    let mut app = Command::new("pivotlab")
        .about("Farey pivots, Markoff trace polynomials and certified gap bounds")
        .subcommand_required(true)
        .arg(Arg::new("config").long("config").global(true).value_name("FILE").help("key = value settings; flags override"))
        .arg(
            Arg::new("threads")
                .long("threads")
                .global(true)
                .value_name("N")
                .value_parser(clap::value_parser!(usize))
                .help("worker threads (results do not depend on it)"),
        )
        .arg(
            Arg::new("print-config")
                .long("print-config")
                .global(true)
                .action(ArgAction::SetTrue)
                .help("print the resolved settings in config-file form and exit"),
        );
    for (name, about, keys) in COMMANDS {
        let mut sub = Command::new(*name).about(*about);
        for k in *keys {
            let mut arg = Arg::new(k.name).long(k.name).value_name("VALUE").help(k.help);
            if let Some(d) = k.default {
                arg = arg.help(format!("{} [default: {d}]", k.help));
            }
            sub = sub.arg(arg);
        }
        app = app.subcommand(sub);
    }
    app
}

/// 2 for bad input, 3 for exhausted budgets, 1 for failed certification.
fn exit_code(e: &anyhow::Error) -> i32 {
    match e.downcast_ref::<Error>() {
        Some(Error::BudgetExceeded(_)) => 3,
        Some(Error::Certification(_)) => 1,
        _ => 2,
    }
}

fn error_kind(e: &anyhow::Error) -> &'static str {
    match e.downcast_ref::<Error>() {
        Some(Error::InvalidInput(_)) => "invalid_input",
        Some(Error::EqualEndpoints(_)) => "equal_endpoints",
        Some(Error::InsufficientCoefficients { .. }) => "insufficient_coefficients",
        Some(Error::BudgetExceeded(_)) => "budget_exceeded",
        Some(Error::DegenerateGap(_)) => "degenerate_gap",
        Some(Error::Certification(_)) => "certification",
        Some(Error::Parse(_)) => "parse",
        Some(Error::Io(_)) => "io",
        None => "usage",
    }
}

/// Writes a line to stdout; a closed pipe is not an error.
fn emit(text: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn resolve(name: &str, m: &ArgMatches) -> Result<RunConfig> {
    let file = match m.get_one::<String>("config") {
        Some(p) => Some(std::fs::read_to_string(p).with_context(|| format!("reading {p}"))?),
        None => None,
    };
    let flags: Vec<(String, String)> = config::keys_of(name)
        .iter()
        .filter_map(|k| m.get_one::<String>(k.name).map(|v| (k.name.to_string(), v.clone())))
        .collect();
    RunConfig::resolve(name, file.as_deref(), &flags)
}

fn execute(name: &str, m: &ArgMatches) -> Result<i32> {
    let cfg = resolve(name, m)?;
    if m.get_flag("print-config") {
        emit(cfg.to_text().trim_end());
        return Ok(0);
    }
    let out = commands::run(&cfg)?;
    for (path, v) in &out.files {
        commands::write_json(path, v)?;
    }
    match cfg.get("output") {
        Some(p) => commands::write_json(p.as_ref(), &out.doc)?,
        None => emit(&serde_json::to_string_pretty(&out.doc)?),
    }
    Ok(out.code)
}

fn main() -> ExitCode {
    let matches = cli().get_matches();
    let (name, sub) = matches.subcommand().expect("subcommand required");
    if let Some(&n) = sub.get_one::<usize>("threads") {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("pivotlab: {e}");
            return ExitCode::from(2);
        }
    }
    match execute(name, sub) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            let doc = json!({
                "format": FORMAT_VERSION,
                "command": name,
                "error": {"kind": error_kind(&e), "message": format!("{e:#}")},
            });
            emit(&serde_json::to_string_pretty(&doc).expect("plain json"));
            eprintln!("pivotlab: {e:#}");
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}
