//! `dedelat`: index-modules of lattices over Dedekind rings.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or schema error,
//! 3 domain error.

use std::fs;
use std::io::{self, Read};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use dedelat_core::arith::ArithError;
use dedelat_core::index::{fitting_ideal_quotient, group_index, index_module, relative_invariant};
use dedelat_core::json::{pair_from_json, ring_from_json};
use dedelat_core::oracle::oracle_group_index;
use dedelat_core::verify::{run_all, run_suite, Suite};
use dedelat_core::{Error, RingConfig};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "dedelat", version, about = "Index-modules of lattices over Dedekind rings")]
struct Cli {
    /// Ring configuration, inline JSON or a file; used when the input names none
    #[arg(long, global = true)]
    ring: Option<String>,
    /// Input document, a path or `-` for standard input
    #[arg(long = "in", global = true, default_value = "-")]
    input: String,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Cases per suite
    #[arg(long, global = true, default_value_t = 100)]
    cases: usize,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// `[R : S]'` of a lattice pair
    Index,
    /// Relative invariant `chi(S, R)`
    Chi,
    /// Fitting ideal of `R / S` for `S <= R`
    Fitt,
    /// Group index `[R : S]` next to the norm of the index ideal
    Norm,
    /// Group index from the integer oracle alone
    Oracle,
    /// Run a property suite, or `all`
    Verify { suite: String },
}

enum Failure {
    Usage(String),
    Domain(Error),
    Verify(Value),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Schema(_)
            | Error::UnknownSuite(_)
            | Error::InvalidConfig(_)
            | Error::Arith(ArithError::Parse(_) | ArithError::InvalidDiscriminant(_)) => Failure::Usage(e.to_string()),
            e => Failure::Domain(e),
        }
    }
}

fn read_source(arg: &str) -> Result<String, Failure> {
    if arg == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| Failure::Usage(format!("reading standard input: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(arg).map_err(|e| Failure::Usage(format!("reading {arg}: {e}")))
}

fn parse_json(text: &str) -> Result<Value, Failure> {
    serde_json::from_str(text).map_err(|e| Failure::Usage(format!("invalid JSON: {e}")))
}

fn ring_arg(arg: Option<&str>) -> Result<Option<RingConfig>, Failure> {
    let Some(arg) = arg else { return Ok(None) };
    let text = if arg.trim_start().starts_with('{') { arg.to_string() } else { read_source(arg)? };
    Ok(Some(ring_from_json(&parse_json(&text)?)?))
}

fn run(cli: &Cli) -> Result<Value, Failure> {
    if let Cmd::Verify { suite } = &cli.cmd {
        return verify(suite, cli.seed, cli.cases);
    }
    let ring = ring_arg(cli.ring.as_deref())?;
    let doc = parse_json(&read_source(&cli.input)?)?;
    let (r, s) = pair_from_json(&doc, ring.as_ref())?;
    Ok(match cli.cmd {
        Cmd::Index => index_module(&r, &s)?.to_json(),
        Cmd::Chi => relative_invariant(&s, &r)?.to_json(),
        Cmd::Fitt => fitting_ideal_quotient(&r, &s)?.to_json(),
        Cmd::Norm => {
            let g = group_index(&r, &s)?;
            let x = index_module(&r, &s)?;
            let norm = x.ideal().ok_or(Error::RankMismatch)?.norm();
            json!({"group_index": number(&g.to_string()), "ideal_norm": norm.to_string()})
        }
        Cmd::Oracle => number(&oracle_group_index(&r, &s)?.to_string()),
        Cmd::Verify { .. } => unreachable!("handled above"),
    })
}

fn number(digits: &str) -> Value {
    serde_json::from_str(digits).expect("decimal integer")
}

fn verify(name: &str, seed: u64, cases: usize) -> Result<Value, Failure> {
    let reports = if name == "all" { run_all(seed, cases) } else { vec![run_suite(name.parse::<Suite>()?, seed, cases)] };
    let passed = reports.iter().all(|r| r.passed());
    let out = if name == "all" {
        json!({
            "seed": seed,
            "cases": cases,
            "passed": passed,
            "suites": reports.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
        })
    } else {
        reports[0].to_json()
    };
    if passed {
        Ok(out)
    } else {
        Err(Failure::Verify(out))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(v) => {
            println!("{v}");
            ExitCode::SUCCESS
        }
        Err(Failure::Verify(v)) => {
            println!("{v}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("dedelat: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("dedelat: {e}");
            ExitCode::from(3)
        }
    }
}
