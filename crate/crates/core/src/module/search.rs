use super::MonomialModule;
use crate::error::Result;
use crate::monomial::{monomials_up_to_degree, Monomial};
use crate::ordinal::Ordinal;

/// Outcome of a bounded search for a submodule of prescribed length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SubmoduleSearch {
    Found(MonomialModule),
    /// Nothing within the bound; this is not a counterexample.
    NotFoundAtBound,
}

impl MonomialModule {
    /// Looks for a monomial submodule of length `target` generated over `J` by
    /// at most `max_gens` monomials of degree at most `max_deg`, trying
    /// smaller generating sets first.
    pub fn find_submodule_of_length(
        &self,
        target: &Ordinal,
        max_gens: usize,
        max_deg: u32,
    ) -> Result<SubmoduleSearch> {
        if target.is_zero() {
            return Ok(SubmoduleSearch::Found(self.submodule(self.j().clone())?));
        }
        let pool: Vec<Monomial> = monomials_up_to_degree(self.n(), max_deg)
            .into_iter()
            .filter(|m| self.i().contains_monomial(m) && !self.j().contains_monomial(m))
            .collect();
        let mut chosen = Vec::new();
        for size in 1..=max_gens.min(pool.len()) {
            if let Some(found) = self.search_subsets(&pool, 0, size, &mut chosen, target)? {
                return Ok(SubmoduleSearch::Found(found));
            }
        }
        Ok(SubmoduleSearch::NotFoundAtBound)
    }

    fn search_subsets(
        &self,
        pool: &[Monomial],
        start: usize,
        left: usize,
        chosen: &mut Vec<Monomial>,
        target: &Ordinal,
    ) -> Result<Option<MonomialModule>> {
        if left == 0 {
            let sub = self.submodule_generated(chosen)?;
            return Ok((&sub.length() == target).then_some(sub));
        }
        for idx in start..pool.len() {
            chosen.push(pool[idx].clone());
            let hit = self.search_subsets(pool, idx + 1, left - 1, chosen, target)?;
            chosen.pop();
            if hit.is_some() {
                return Ok(hit);
            }
        }
        Ok(None)
    }
}
