//! Command-line front end for the exact Virasoro workbench.
//!
//! Runs named verification suites over configurable parameters and emits
//! machine-readable reports: one JSON record per line on standard output,
//! with a human summary on standard error. Exit codes: 0 when every check
//! passes, 1 on a failed or errored check, 2 on usage problems.

mod catalog;

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, ValueEnum};

use catalog::{run_check, Params, CATALOG};
use vira_core::report::{Report, Status};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(
    name = "vira",
    version,
    about = "Exact verification suites for Virasoro lowest-energy representations",
    after_help = "Rationals are written p/q; alpha is a formal parameter and never a direct \
                  input; specialization checks take alpha2 as a rational. Use --list for the \
                  check catalog and per-check parameters."
)]
struct Cli {
    /// Check to run (see --list)
    #[arg(long)]
    check: Option<String>,

    /// Parameter override, repeatable: --param key=value
    #[arg(long = "param", value_name = "KEY=VALUE")]
    params: Vec<String>,

    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Shorthand for the check's level/maxlevel parameter
    #[arg(long)]
    level: Option<u32>,

    /// Seed for the randomized identity sampling
    #[arg(long, default_value_t = 0x5eed)]
    seed: u64,

    /// List the check catalog and exit
    #[arg(long)]
    list: bool,
}

fn parse_params(raw: &[String]) -> Result<Params, String> {
    let mut out = BTreeMap::new();
    for item in raw {
        let Some((key, value)) = item.split_once('=') else {
            return Err(format!("malformed --param {item:?} (expected key=value)"));
        };
        out.insert(key.trim().to_string(), value.trim().to_string());
    }
    Ok(out)
}

fn print_list(format: Format) {
    match format {
        Format::Text => {
            for def in CATALOG {
                println!("{:<22} {}", def.name, def.summary);
                for p in def.params {
                    println!("    --param {}={}  ({})", p.name, p.default, p.help);
                }
            }
            eprintln!("[vira] {} checks registered", CATALOG.len());
        }
        Format::Json => {
            for def in CATALOG {
                let params: Vec<serde_json::Value> = def
                    .params
                    .iter()
                    .map(|p| {
                        serde_json::json!({
                            "name": p.name,
                            "default": p.default,
                            "help": p.help,
                        })
                    })
                    .collect();
                let entry = serde_json::json!({
                    "name": def.name,
                    "summary": def.summary,
                    "params": params,
                });
                println!("{entry}");
            }
            eprintln!("[vira] {} checks registered", CATALOG.len());
        }
    }
}

fn print_report(report: &Report, format: Format) {
    match format {
        Format::Json => {
            println!(
                "{}",
                serde_json::to_string(report).expect("report serializes")
            );
        }
        Format::Text => {
            let status = match report.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Error => "ERROR",
            };
            let params: Vec<String> = report
                .parameters
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect();
            println!("check: {} [{status}]", report.check);
            if !params.is_empty() {
                println!("  params: {}", params.join(" "));
            }
            println!("  cases: {}", report.cases_total);
            let mut failures = 0usize;
            for case in &report.details {
                if case.passed {
                    continue;
                }
                failures += 1;
                if failures <= 5 {
                    println!("  failed: {}: {}", case.name, case.info);
                }
            }
            if failures > 5 {
                println!("  ... and {} more failing cases", failures - 5);
            }
            if let Some(ce) = &report.counterexample {
                let loc: Vec<String> = ce
                    .location
                    .iter()
                    .map(|(k, v)| format!("{k}={v}"))
                    .collect();
                println!("  counterexample at {}", loc.join(" "));
                println!("    lhs: {}", ce.lhs);
                println!("    rhs: {}", ce.rhs);
            }
        }
    }
    let status = match report.status {
        Status::Pass => "pass",
        Status::Fail => "fail",
        Status::Error => "error",
    };
    eprintln!(
        "[vira] {}: {status} ({} cases{})",
        report.check,
        report.cases_total,
        report
            .elapsed_micros
            .map(|us| format!(", {:.1} ms", us as f64 / 1000.0))
            .unwrap_or_default()
    );
}

fn main() -> ExitCode {
    let cli = Cli::parse();

    if cli.list {
        print_list(cli.format);
        return ExitCode::SUCCESS;
    }

    let Some(check) = &cli.check else {
        eprintln!("error: nothing to do; pass --check NAME or --list");
        return ExitCode::from(2);
    };

    let mut params = match parse_params(&cli.params) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    if let Some(level) = cli.level {
        let key = catalog::find(check)
            .and_then(|def| {
                def.params
                    .iter()
                    .map(|p| p.name)
                    .find(|&n| n == "level" || n == "maxlevel" || n == "routeslevel")
            })
            .unwrap_or("level");
        params.insert(key.to_string(), level.to_string());
    }

    let started = Instant::now();
    match run_check(check, &params, cli.seed) {
        Err(usage) => {
            eprintln!("error: {usage}");
            ExitCode::from(2)
        }
        Ok(mut report) => {
            report.elapsed_micros = Some(started.elapsed().as_micros() as u64);
            print_report(&report, cli.format);
            if report.is_pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
    }
}
