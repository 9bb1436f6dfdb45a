//! Named verification suites.

use std::str::FromStr;
use std::time::Instant;

use thiserror::Error;

use crate::invariants;
use crate::lie;
use crate::report::{ReportConfig, VerificationReport};
use crate::ugcp;

pub const DEFAULT_MAX_DEGREE: usize = 8;
pub const DEFAULT_MAX_FILTRATION: usize = 4;
/// Beyond these the exact computations stop being desk-scale.
pub const MAX_DEGREE_LIMIT: usize = 12;
pub const MAX_FILTRATION_LIMIT: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Lie,
    Lemmas,
    Extp,
    Table,
    StBasis,
    SigmaTau,
    Reduction,
    DiracSquare,
    Dk,
    Abelian,
    Casimir,
    TildeInvariance,
    UcBasis,
    IdealSlice,
    All,
}

impl Suite {
    pub const EACH: [Suite; 14] = [
        Suite::Lie,
        Suite::Lemmas,
        Suite::Extp,
        Suite::Table,
        Suite::StBasis,
        Suite::SigmaTau,
        Suite::Reduction,
        Suite::DiracSquare,
        Suite::Dk,
        Suite::Abelian,
        Suite::Casimir,
        Suite::TildeInvariance,
        Suite::UcBasis,
        Suite::IdealSlice,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Lie => "lie",
            Suite::Lemmas => "lemmas",
            Suite::Extp => "extp",
            Suite::Table => "table",
            Suite::StBasis => "st-basis",
            Suite::SigmaTau => "sigma-tau",
            Suite::Reduction => "reduction",
            Suite::DiracSquare => "dirac-square",
            Suite::Dk => "dk",
            Suite::Abelian => "abelian",
            Suite::Casimir => "casimir",
            Suite::TildeInvariance => "tilde-invariance",
            Suite::UcBasis => "uc-basis",
            Suite::IdealSlice => "ideal-slice",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = SuiteError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::EACH
            .iter()
            .chain(&[Suite::All])
            .find(|x| x.name() == s)
            .copied()
            .ok_or_else(|| SuiteError::UnknownSuite(s.to_string()))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SuiteError {
    #[error("unknown suite '{0}'")]
    UnknownSuite(String),
    #[error("invalid bounds: {0}")]
    InvalidBounds(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub max_degree: usize,
    pub max_filtration: usize,
    /// Record wall-clock time in the report; off by default so reports are reproducible.
    pub timing: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self { max_degree: DEFAULT_MAX_DEGREE, max_filtration: DEFAULT_MAX_FILTRATION, timing: false }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<(), SuiteError> {
        if self.max_degree > MAX_DEGREE_LIMIT {
            return Err(SuiteError::InvalidBounds(format!(
                "max-degree {} exceeds {MAX_DEGREE_LIMIT}",
                self.max_degree
            )));
        }
        if self.max_filtration > MAX_FILTRATION_LIMIT {
            return Err(SuiteError::InvalidBounds(format!(
                "max-filtration {} exceeds {MAX_FILTRATION_LIMIT}",
                self.max_filtration
            )));
        }
        Ok(())
    }
}

fn lemmas() -> VerificationReport {
    let mut report = VerificationReport::new("lemmas");
    for n in 2..=6 {
        report.absorb(invariants::verify_lemma_sk(n));
    }
    for n in 2..=5 {
        report.absorb(invariants::verify_lemma_sp(n));
    }
    report
}

fn run_one(suite: Suite, config: &SuiteConfig) -> VerificationReport {
    match suite {
        Suite::Lie => lie::verify_structure(),
        Suite::Lemmas => lemmas(),
        Suite::Extp => invariants::verify_extp_decomposition(),
        Suite::Table => invariants::verify_table(config.max_degree),
        Suite::StBasis => invariants::verify_st_basis(config.max_degree),
        Suite::SigmaTau => ugcp::verify_sigma_tau_table(),
        Suite::Reduction => ugcp::verify_reduction_identities(),
        Suite::DiracSquare => ugcp::verify_dirac_square(),
        Suite::Dk => ugcp::verify_dk_identity(),
        Suite::Abelian => ugcp::verify_abelian_commutators(),
        Suite::Casimir => ugcp::verify_casimir_expressions(),
        Suite::TildeInvariance => ugcp::verify_tilde_invariance(),
        Suite::UcBasis => invariants::verify_uc_basis_slice(config.max_filtration),
        Suite::IdealSlice => invariants::ideal_slice_check(config.max_filtration),
        Suite::All => {
            let mut report = VerificationReport::new("all");
            for s in Suite::EACH {
                report.absorb(run_one(s, config));
            }
            report
        }
    }
}

fn echo(suite: Suite, config: &SuiteConfig) -> ReportConfig {
    let degree = matches!(suite, Suite::Table | Suite::StBasis | Suite::All);
    let filtration = matches!(suite, Suite::UcBasis | Suite::IdealSlice | Suite::All);
    ReportConfig {
        max_degree: degree.then_some(config.max_degree),
        max_filtration: filtration.then_some(config.max_filtration),
    }
}

/// Runs a suite; the report's check order is fixed for a given configuration.
pub fn run_suite(suite: Suite, config: &SuiteConfig) -> Result<VerificationReport, SuiteError> {
    config.validate()?;
    let start = Instant::now();
    let mut report = run_one(suite, config).with_config(echo(suite, config));
    if config.timing {
        report.elapsed_ms = Some(start.elapsed().as_millis());
    }
    Ok(report)
}

/// [`run_suite`] addressed by name.
pub fn run_named(name: &str, config: &SuiteConfig) -> Result<VerificationReport, SuiteError> {
    run_suite(name.parse()?, config)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for s in Suite::EACH {
            assert_eq!(s.name().parse::<Suite>(), Ok(s));
        }
        assert_eq!("nope".parse::<Suite>(), Err(SuiteError::UnknownSuite("nope".into())));
    }

    #[test]
    fn rejects_large_bounds() {
        let config = SuiteConfig { max_degree: 40, ..Default::default() };
        assert!(matches!(run_suite(Suite::Table, &config), Err(SuiteError::InvalidBounds(_))));
    }

    #[test]
    fn small_suites_pass_deterministically() {
        let config = SuiteConfig::default();
        let a = run_suite(Suite::SigmaTau, &config).unwrap();
        let b = run_suite(Suite::SigmaTau, &config).unwrap();
        assert!(a.passed(), "{a}");
        assert_eq!(a.to_json(), b.to_json());
    }
}
