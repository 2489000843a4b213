//! Property sweeps over the corpora, reported as `CHECK` lines.

mod artinian;
mod examples;
mod fixture;
mod ordinals;
mod report;
mod sweeps;

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

pub use artinian::check_oracle_artinian;
pub use examples::{check_domain_criterion, check_worked_examples};
pub use fixture::check_binendo_suite;
pub use ordinals::check_ordinal_algebra;
pub use report::{CheckOutcome, Report, Tally, MAX_WITNESSES};
pub use sweeps::{
    check_dimfil, check_maxassopen, check_mult_endos, check_primmin, check_semiadd,
    check_submod, check_lattice,
};

use crate::corpus;
use crate::cycle::Cycle;
use crate::error::{Error, Result};
use crate::module::MonomialModule;
use crate::monomial::MonomialIdeal;
use crate::ordinal::Ordinal;

/// Bounds and seed for the sweeps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    /// Variables in the exhaustive corpus are `1..=min(max_vars, 2)`; larger
    /// counts are sampled.
    pub max_vars: usize,
    /// Generator degree bound of the corpus.
    pub max_deg: u32,
    pub seed: u64,
    /// Size of each sampled corpus.
    pub samples: usize,
    /// Truncation order of the endomorphism fixture.
    pub truncation: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            max_vars: 2,
            max_deg: 3,
            seed: 1,
            samples: 500,
            truncation: 8,
        }
    }
}

/// Largest variable count of the exhaustive corpus.
pub const EXHAUSTIVE_VARS: usize = 2;
/// Largest generator degree accepted for the exhaustive corpus.
pub const MAX_SWEEP_DEG: u32 = 4;

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        let guard = |what, value: usize, limit: usize| {
            if value > limit {
                Err(Error::Guard { what, value, limit })
            } else {
                Ok(())
            }
        };
        guard("max-vars", self.max_vars, crate::module::MAX_VARS)?;
        guard("max-deg", self.max_deg as usize, MAX_SWEEP_DEG as usize)?;
        guard("truncation", self.truncation, 32)?;
        if self.max_vars == 0 || self.max_deg == 0 {
            return Err(Error::InvalidBound("max-vars and max-deg must be positive".into()));
        }
        if self.truncation < 4 {
            return Err(Error::InvalidBound(format!(
                "truncation must be at least 4, got {}",
                self.truncation
            )));
        }
        Ok(())
    }

    /// Pairs `J ⊆ I`: exhaustive in at most two variables, sampled above.
    pub fn pairs(&self) -> Vec<(MonomialIdeal, MonomialIdeal)> {
        let mut out = Vec::new();
        for n in 1..=self.max_vars.min(EXHAUSTIVE_VARS) {
            out.extend(corpus::nested_pairs(n, self.max_deg));
        }
        for n in EXHAUSTIVE_VARS + 1..=self.max_vars {
            out.extend(corpus::random_nested_pairs(
                n,
                self.max_deg,
                self.samples,
                self.seed.wrapping_add(n as u64),
            ));
        }
        out
    }

    pub fn modules(&self) -> Vec<MonomialModule> {
        self.pairs()
            .into_iter()
            .map(|(j, i)| MonomialModule::new(i, j).expect("nested"))
            .collect()
    }

    /// The exhaustive two-variable part only.
    pub fn plane_modules(&self) -> Vec<MonomialModule> {
        corpus::modules_up_to_degree(self.max_vars.min(EXHAUSTIVE_VARS), self.max_deg)
    }
}

/// Memoized fundamental cycles; sweeps revisit the same subquotients often.
#[derive(Default)]
pub struct Invariants {
    cycles: RefCell<HashMap<MonomialModule, Cycle>>,
}

impl Invariants {
    pub fn fcyc(&self, m: &MonomialModule) -> Cycle {
        if let Some(c) = self.cycles.borrow().get(m) {
            return c.clone();
        }
        let c = m.fcyc();
        self.cycles.borrow_mut().insert(m.clone(), c.clone());
        c
    }

    pub fn length(&self, m: &MonomialModule) -> Ordinal {
        self.fcyc(m).binord()
    }

    pub fn is_binary(&self, m: &MonomialModule) -> bool {
        self.fcyc(m).is_binary()
    }
}

/// Named groups of checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Examples,
    Ordinal,
    SemiAdd,
    Submod,
    Latt,
    DimFil,
    PrimMin,
    MaxAssOpen,
    Endo,
    OracleArtinian,
    EndoFixture,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 12] = [
        "examples",
        "ordinal",
        "semiadd",
        "submod",
        "latt",
        "dimfil",
        "primmin",
        "maxassopen",
        "endo",
        "oracle-artinian",
        "endo-fixture",
        "all",
    ];

    const ALL: [Suite; 11] = [
        Suite::Examples,
        Suite::Ordinal,
        Suite::SemiAdd,
        Suite::Submod,
        Suite::Latt,
        Suite::DimFil,
        Suite::PrimMin,
        Suite::MaxAssOpen,
        Suite::Endo,
        Suite::OracleArtinian,
        Suite::EndoFixture,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Examples => "examples",
            Suite::Ordinal => "ordinal",
            Suite::SemiAdd => "semiadd",
            Suite::Submod => "submod",
            Suite::Latt => "latt",
            Suite::DimFil => "dimfil",
            Suite::PrimMin => "primmin",
            Suite::MaxAssOpen => "maxassopen",
            Suite::Endo => "endo",
            Suite::OracleArtinian => "oracle-artinian",
            Suite::EndoFixture => "endo-fixture",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .chain([Suite::All])
            .find(|suite| suite.name() == s)
            .ok_or_else(|| {
                Error::parse(
                    0,
                    format!("unknown suite '{s}'; expected one of {}", Suite::NAMES.join(", ")),
                )
            })
    }
}

/// Runs one suite, or every suite for [`Suite::All`].
pub fn run_suite(suite: Suite, cfg: &SweepConfig) -> Result<Report> {
    cfg.validate()?;
    let mut report = Report::default();
    let suites: Vec<Suite> = match suite {
        Suite::All => Suite::ALL.to_vec(),
        one => vec![one],
    };
    let needs_corpus = suites.iter().any(|s| {
        matches!(
            s,
            Suite::SemiAdd
                | Suite::Submod
                | Suite::Latt
                | Suite::DimFil
                | Suite::PrimMin
                | Suite::MaxAssOpen
                | Suite::Endo
        )
    });
    let modules = if needs_corpus { cfg.modules() } else { Vec::new() };
    let inv = Invariants::default();
    for s in suites {
        match s {
            Suite::Examples => {
                report.extend(check_worked_examples());
                report.extend(check_domain_criterion(cfg.max_vars.min(3)));
            }
            Suite::Ordinal => report.extend(check_ordinal_algebra(3, 3)),
            Suite::SemiAdd => report.extend(check_semiadd(&cfg.pairs(), &inv)),
            Suite::Submod => report.extend(check_submod(&modules, cfg.max_deg, &inv)),
            Suite::Latt => report.extend(check_lattice(&cfg.plane_modules(), cfg.max_deg, &inv)),
            Suite::DimFil => report.extend(check_dimfil(&modules, &inv)),
            Suite::PrimMin => report.extend(check_primmin(&modules, &inv)),
            Suite::MaxAssOpen => report.extend(check_maxassopen(&modules, &inv)),
            Suite::Endo => report.extend(check_mult_endos(&modules)),
            Suite::OracleArtinian => report.extend(check_oracle_artinian(cfg)?),
            Suite::EndoFixture => report.extend(check_binendo_suite(cfg.truncation, cfg.seed)?),
            Suite::All => unreachable!("expanded above"),
        }
    }
    Ok(report)
}
