use std::collections::BTreeSet;

use num_bigint::BigUint;

use super::report::{CheckOutcome, Tally};
use super::SweepConfig;
use crate::corpus::{artinian_ideals, random_artinian_ideals, sandwich_submodules};
use crate::error::Result;
use crate::module::MonomialModule;
use crate::monomial::MonomialIdeal;
use crate::oracle::finite::{enum_dim_limit, ENDO_DIM};
use crate::oracle::theorems::check_endo_theorems;
use crate::oracle::{FiniteModule, Subspace};

/// Sampled Artinian quotients in three variables.
const SAMPLED_ARTINIAN: usize = 40;

/// The F₂ oracle against the module invariants on Artinian `R/J`: all
/// `J ⊇ m⁴` in one and two variables, and a sample with `J ⊇ m³` in three.
pub fn check_oracle_artinian(cfg: &SweepConfig) -> Result<Vec<CheckOutcome>> {
    let mut ideals: Vec<MonomialIdeal> = Vec::new();
    for n in 1..=cfg.max_vars.min(2) {
        ideals.extend(artinian_ideals(n, 4));
    }
    if cfg.max_vars >= 3 {
        ideals.extend(random_artinian_ideals(3, 3, SAMPLED_ARTINIAN, cfg.seed));
    }

    let mut chain = Tally::new("oracle-artinian/longest-chain-equals-length");
    let mut realized = Tally::new("oracle-artinian/all-lengths-realized");
    let mut monomial_subs = Tally::new("oracle-artinian/monomial-submodule-lengths");
    let mut additive = Tally::new("oracle-artinian/additive-on-exact-sequences");
    let mut endos = Tally::new("oracle-artinian/endomorphism-laws");
    let mut non_reductive = 0usize;
    let limit = enum_dim_limit();
    for j in &ideals {
        let f = FiniteModule::from_artinian(j)?;
        let m = MonomialModule::cyclic(j.clone());
        let d = f.dim();
        let len = m.length();
        let steps = f.longest_chain()?;
        chain.record(
            steps == d && len.as_natural() == Some(BigUint::from(d)),
            || format!("R/({j}): chain {steps}, dim {d}, length {len}"),
        );

        for sub in sandwich_submodules(&m, 2, 3) {
            let seeds = Subspace::span(
                f.labels()
                    .iter()
                    .enumerate()
                    .filter(|(_, l)| sub.i().contains_monomial(l))
                    .map(|(k, _)| 1u32 << k),
            );
            let closed = f.closure(&seeds);
            let natural = |x: &MonomialModule| x.length().as_natural();
            let quot = m.quotient_by(&sub).expect("submodule");
            let witness = || format!("R/({j}) with I' = ({})", sub.i());
            monomial_subs.record(
                f.is_submodule(&seeds)
                    && closed == seeds
                    && natural(&sub) == Some(BigUint::from(seeds.dim())),
                witness,
            );
            additive.record(
                match (natural(&sub), natural(&quot)) {
                    (Some(a), Some(b)) => a + b == BigUint::from(d),
                    _ => false,
                },
                witness,
            );
        }

        if d <= limit {
            let dims: BTreeSet<usize> = f.enumerate_submodules()?.iter().map(|s| s.dim()).collect();
            realized.record(dims == (0..=d).collect(), || format!("R/({j}): dims {dims:?}"));
        }
        if d <= ENDO_DIM {
            let report = check_endo_theorems(&f)?;
            non_reductive += report.non_reductive;
            endos.record(report.passed(), || {
                format!("R/({j}): {}", report.violations.first().cloned().unwrap_or_default())
            });
        }
    }
    let modules = format!("{} modules", ideals.len());
    Ok(vec![
        chain.finish_with(modules),
        realized.finish_with(format!("dimension limit {limit}")),
        monomial_subs.finish(),
        additive.finish(),
        endos.finish_with(format!("{non_reductive} non-reductive endomorphisms seen")),
    ])
}
