//! Acceptance criteria, one PASS/FAIL line each.

use std::fs;
use std::path::Path;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use dedelat_core::index::{cyclicity_witness, index_module};
use dedelat_core::verify::{run_suite, CaseReport, Suite};
use dedelat_core::{FieldElem, FractionalIdeal, PseudoLattice, RingConfig};

const SEED: u64 = 20_240_601;

struct Outcome {
    ok: bool,
    detail: String,
}

fn suites(runs: &[(Suite, usize)], budget: Option<Duration>) -> Outcome {
    let start = Instant::now();
    let reports: Vec<CaseReport> = runs.iter().map(|&(s, n)| run_suite(s, SEED, n)).collect();
    let elapsed = start.elapsed();
    let failures: usize = reports.iter().map(|r| r.failures.len()).sum();
    let cases: usize = reports.iter().map(|r| r.cases).sum();
    let in_time = budget.is_none_or(|b| elapsed < b);
    let mut detail = format!("{cases} cases, {failures} failures, {elapsed:.1?}");
    if let Some(b) = budget {
        detail.push_str(&format!(" (budget {b:?})"));
    }
    for r in reports.iter().filter(|r| !r.passed()) {
        detail.push_str(&format!("\n    first {} failure: {}", r.suite, serde_json::to_string(&r.failures[0]).unwrap()));
    }
    Outcome { ok: failures == 0 && in_time, detail }
}

fn fixed_pair_not_cyclic() -> bool {
    let ring = RingConfig::od(-5).unwrap();
    let k = |s: &str| s.parse::<FieldElem>().unwrap();
    let e = |i: usize| -> Vec<FieldElem> { (0..2).map(|j| if i == j { k("1") } else { k("0") }).collect() };
    let p2 = FractionalIdeal::from_generators(&ring, &[k("2"), k("1+sqrt(-5)")]).unwrap();
    let unit = FractionalIdeal::unit(&ring);
    let r = PseudoLattice::free(&ring, 2, vec![e(0), e(1)]).unwrap();
    let s = PseudoLattice::new(&ring, 2, vec![(p2, e(0)), (unit, e(1))]).unwrap();
    matches!(index_module(&r, &s).and_then(|x| cyclicity_witness(&x)), Ok(None))
}

fn golden_cli() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_dedelat");
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let mut inputs: Vec<_> = fs::read_dir(&dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.to_string_lossy().ends_with(".in.json"))
        .collect();
    inputs.sort();
    let mut identical = 0;
    for input in &inputs {
        let name = input.file_name().unwrap().to_string_lossy().trim_end_matches(".in.json").to_string();
        let cmd = name.split("__").next().unwrap().to_string();
        let want = fs::read(input.with_file_name(format!("{name}.out.json"))).unwrap();
        let same = (0..2).all(|_| {
            let out = Command::new(bin).args([cmd.as_str(), "--in", input.to_str().unwrap()]).output().unwrap();
            out.status.success() && out.stdout == want
        });
        identical += same as usize;
    }
    let start = Instant::now();
    let all = Command::new(bin).args(["verify", "all", "--seed", "42", "--cases", "100"]).output().unwrap();
    let elapsed = start.elapsed();
    let report: serde_json::Value = serde_json::from_slice(&all.stdout).unwrap_or_default();
    let n_suites = report["suites"].as_array().map_or(0, Vec::len);
    let ok = inputs.len() == 12
        && identical == 12
        && all.status.code() == Some(0)
        && n_suites == 13
        && elapsed < Duration::from_secs(300);
    Outcome {
        ok,
        detail: format!(
            "{identical}/{} goldens identical; verify all: exit {:?}, {n_suites} suites, {elapsed:.1?} (budget 300s)",
            inputs.len(),
            all.status.code()
        ),
    }
}

fn main() -> ExitCode {
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome>)> = vec![
        ("1 three-case law, 300 pairs x 4 rings", Box::new(|| suites(&[(Suite::ThreeCase, 1200)], Some(Duration::from_secs(30))))),
        (
            "2 oracle bridge over Z, Z[sqrt-5], Z[1/6]",
            Box::new(|| suites(&[(Suite::NormBridge, 300)], Some(Duration::from_secs(60)))),
        ),
        ("3 Fitting equality over Z, Z[sqrt-5], Z[1/6]", Box::new(|| suites(&[(Suite::FittingEq, 300)], None))),
        (
            "4 multiplicativity (100 shared + 50 mixed) and inverse",
            Box::new(|| suites(&[(Suite::Multiplicativity, 150), (Suite::Inverse, 100)], None)),
        ),
        (
            "5 direct sums, diagonal and two-basis forms",
            Box::new(|| suites(&[(Suite::DirectSum, 100), (Suite::Diagonal, 100), (Suite::TwoBasis, 100)], None)),
        ),
        ("6 scalar expansion Z->Z[1/6], Z->O_-5", Box::new(|| suites(&[(Suite::ScalarExpansion, 200)], None))),
        (
            "7 cyclicity of u(R) and the non-cyclic fixed pair",
            Box::new(|| {
                let mut o = suites(&[(Suite::Cyclicity, 50)], None);
                let fixed = fixed_pair_not_cyclic();
                o.ok &= fixed;
                o.detail.push_str(&format!("; fixed pair not cyclic: {fixed}"));
                o
            }),
        ),
        (
            "8 isomorphism invariance and self-index",
            Box::new(|| suites(&[(Suite::IsoInvariance, 200), (Suite::SelfIndex, 200)], None)),
        ),
        ("9 golden CLI outputs and verify all", Box::new(golden_cli)),
    ];
    let mut all_ok = true;
    for (name, check) in criteria {
        let o = check();
        all_ok &= o.ok;
        println!("{} criterion {name}: {}", if o.ok { "PASS" } else { "FAIL" }, o.detail);
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
