//! Acceptance run: one line per criterion, nonzero exit if any fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use proptest::strategy::Strategy;
use proptest::test_runner::TestCaseError;

use su21_invariants::invariants::{expected_dimension, invariant_subspace};
use su21_invariants::lie;
use su21_invariants::linear::{int, q};
use su21_invariants::report::VerificationReport;
use su21_invariants::suite::{run_suite, Suite, SuiteConfig};

use common::*;

struct Outcome {
    pass: bool,
    detail: String,
}

fn from_report(report: &VerificationReport, required: &[&str], expected_checks: Option<usize>) -> Outcome {
    let missing: Vec<&str> = required.iter().copied().filter(|id| !report.checks.iter().any(|c| c.id == *id)).collect();
    let count_ok = expected_checks.is_none_or(|n| report.checks.len() == n);
    let mut detail = format!("{}/{} checks", report.pass_count(), report.checks.len());
    let failed: Vec<&str> = report.failures().map(|c| c.id.as_str()).collect();
    if !failed.is_empty() {
        detail += &format!("; failed: {}", failed.join(", "));
    }
    if !missing.is_empty() {
        detail += &format!("; missing: {}", missing.join(", "));
    }
    if !count_ok {
        detail += &format!("; expected {} checks", expected_checks.unwrap());
    }
    Outcome { pass: report.passed() && missing.is_empty() && count_ok, detail }
}

fn suite(s: Suite, config: SuiteConfig, required: &[&str], expected_checks: Option<usize>) -> Outcome {
    match run_suite(s, &config) {
        Ok(report) => from_report(&report, required, expected_checks),
        Err(e) => Outcome { pass: false, detail: e.to_string() },
    }
}

fn degree(max_degree: usize) -> SuiteConfig {
    SuiteConfig { max_degree, ..SuiteConfig::default() }
}

fn filtration(max_filtration: usize) -> SuiteConfig {
    SuiteConfig { max_filtration, ..SuiteConfig::default() }
}

fn fmt_duration(d: Duration) -> String {
    if d < Duration::from_secs(1) {
        format!("{} ms", d.as_millis())
    } else {
        format!("{:.1} s", d.as_secs_f64())
    }
}

/// Invariant counts from 1/((1−t)(1−t²)²(1−t³)) · Σ t^deg(T), computed without the library.
fn series_oracle(max: usize) -> Vec<usize> {
    let mut s = vec![0usize; max + 1];
    s[0] = 1;
    for step in [1usize, 2, 2, 3] {
        for n in step..=max {
            s[n] += s[n - step];
        }
    }
    let t_degrees = [0usize, 2, 2, 2, 3, 3, 3, 4, 4, 4, 4, 5, 5, 5, 5, 5];
    (0..=max).map(|n| t_degrees.iter().filter(|&&d| d <= n).map(|&d| s[n - d]).sum()).collect()
}

fn dimension_table() -> Outcome {
    let mut outcome = suite(Suite::Table, degree(8), &[], Some(9));
    let oracle = series_oracle(8);
    let dims: Vec<usize> = (0..=8).map(|n| invariant_subspace(n).basis.len()).collect();
    let formula: Vec<usize> = (0..=8).map(expected_dimension).collect();
    let agree = dims == oracle && formula == oracle;
    outcome.pass &= agree;
    outcome.detail += &format!("; dims {dims:?}");
    if !agree {
        outcome.detail += &format!(" vs oracle {oracle:?}");
    }
    outcome
}

fn dirac_square() -> Outcome {
    let mut outcome = suite(Suite::DiracSquare, SuiteConfig::default(), &["square"], None);
    let rho_g = lie::rho_norm_squared(&lie::POSITIVE_ROOTS_G);
    let rho_k = lie::rho_norm_squared(&lie::POSITIVE_ROOTS_K);
    outcome.pass &= rho_g == int(2) && rho_k == q(1, 2);
    outcome.detail += &format!("; ‖ρ_g‖² = {rho_g}, ‖ρ_k‖² = {rho_k}");
    outcome
}

fn properties() -> Outcome {
    const CASES: u32 = 128;
    type Body<T> = fn(T) -> Result<(), TestCaseError>;
    let mut failed = Vec::new();
    let mut count = 0;
    let mut run = |name: &'static str, result: Result<(), String>| {
        count += 1;
        if let Err(e) = result {
            failed.push(format!("{name} ({e})"));
        }
    };
    fn go<S: Strategy>(strategy: S, body: Body<S::Value>) -> Result<(), String>
    where
        S::Value: std::fmt::Debug,
    {
        runner(CASES).run(&strategy, body).map_err(|e| e.to_string())
    }

    run("σ equivariance", go((basis(), sym_element(3)), sigma_equivariant));
    run(
        "σ leading term",
        go(sym_element(4).prop_map(|x| x.keys().next().map_or([0; 8], |k| k.sym.0)), sigma_leading_term),
    );
    run("τ equivariance", go((k_basis(), 0u8..16), tau_equivariant));
    run("σ⊗τ equivariance", go((k_basis(), sym_element(2)), sigma_tau_equivariant));
    run("ad derivation", go((k_basis(), sym_element(2), sym_element(2)), ad_is_derivation));
    run("ad representation", go((k_basis(), k_basis(), sym_element(3)), ad_is_representation));
    run("S⊗Λ associativity", go((sym_element(2), sym_element(2), sym_element(2)), sym_associative));
    run("S⊗Λ graded commutativity", go((sym_element(3), sym_element(3)), sym_graded_commutative));
    run("U associativity", go((u_element(2), u_element(2), u_element(2)), pbw_associative));
    run("U filtration", go((u_element(3), u_element(3)), pbw_filtration_additive));
    run("C associativity", go((c_element(), c_element(), c_element()), clifford_associative));
    run("U⊗C associativity", go((uc_element(2), uc_element(1), uc_element(2)), uc_associative));
    run("round trip symmetric", go(sym_element(3), round_trip_symmetric));
    run("round trip tensor", go(sym_element(3), round_trip_tensor));
    run("round trip enveloping", go(u_element(3), round_trip_enveloping));
    run("round trip clifford", go(c_element(), round_trip_clifford));
    run("round trip uc", go(uc_element(3), round_trip_uc));

    let pass = failed.is_empty();
    let mut detail = format!("{}/{count} properties × {CASES} cases", count - failed.len());
    if !pass {
        detail += &format!("; failed: {}", failed.join("; "));
    }
    Outcome { pass, detail }
}

type Criterion = (&'static str, Option<Duration>, Box<dyn FnOnce() -> Outcome>);

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        (
            "structure",
            Some(Duration::from_secs(1)),
            Box::new(|| {
                suite(
                    Suite::Lie,
                    SuiteConfig::default(),
                    &["antisymmetry", "jacobi", "cartan-table", "matrix-oracle", "invariance"],
                    None,
                )
            }),
        ),
        ("lemmas", Some(Duration::from_secs(30)), Box::new(|| suite(Suite::Lemmas, SuiteConfig::default(), &[], None))),
        (
            "exterior decomposition",
            Some(Duration::from_secs(1)),
            Box::new(|| suite(Suite::Extp, SuiteConfig::default(), &[], None)),
        ),
        ("dimension table", Some(Duration::from_secs(600)), Box::new(dimension_table)),
        ("S·T basis", None, Box::new(|| suite(Suite::StBasis, degree(8), &[], None))),
        (
            "σ⊗τ identities",
            Some(Duration::from_secs(10)),
            Box::new(|| suite(Suite::SigmaTau, SuiteConfig::default(), &[], Some(10))),
        ),
        ("reduction identities", None, Box::new(|| suite(Suite::Reduction, SuiteConfig::default(), &[], Some(6)))),
        ("Dirac square", None, Box::new(dirac_square)),
        ("D^k identity", None, Box::new(|| suite(Suite::Dk, SuiteConfig::default(), &["identity"], None))),
        ("abelian commutators", None, Box::new(|| suite(Suite::Abelian, SuiteConfig::default(), &[], Some(6)))),
        (
            "Casimir expressions",
            None,
            Box::new(|| suite(Suite::Casimir, SuiteConfig::default(), &["omega", "cub-central"], None)),
        ),
        (
            "UC independence",
            Some(Duration::from_secs(300)),
            Box::new(|| suite(Suite::UcBasis, filtration(4), &["t-tilde", "s-tilde-t-tilde"], None)),
        ),
        ("ideal slice", None, Box::new(|| suite(Suite::IdealSlice, filtration(3), &["intersection"], None))),
        ("properties", None, Box::new(properties)),
    ];

    let mut failures = 0;
    for (i, (name, limit, check)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let mut outcome = check();
        let elapsed = start.elapsed();
        let mut timing = fmt_duration(elapsed);
        if let Some(limit) = limit {
            timing += &format!(" / limit {}", fmt_duration(limit));
            if elapsed > limit {
                outcome.pass = false;
                outcome.detail += "; over time limit";
            }
        }
        if !outcome.pass {
            failures += 1;
        }
        let tag = if outcome.pass { "PASS" } else { "FAIL" };
        println!("[{tag}] {:>2} {name}: {} ({timing})", i + 1, outcome.detail);
    }
    println!("{}/14 criteria pass", 14 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
