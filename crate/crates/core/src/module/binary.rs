use super::MonomialModule;
use crate::cycle::MonomialPrime;
use crate::error::{Error, Result};
use crate::monomial::{box_monomials, Monomial, MonomialIdeal};

/// A monomial element of `M` whose annihilator is an associated prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub prime: MonomialPrime,
    pub element: Monomial,
}

/// Result of the univalence test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnivalentData {
    pub prime: MonomialPrime,
    pub annihilator: MonomialIdeal,
    /// Whether `ann(M)` equals the unique associated prime.
    pub annihilator_is_prime: bool,
}

impl MonomialModule {
    /// For each associated prime, the lowest-degree monomial `m ∈ I ∖ J` with
    /// `(J : m) = P`.
    ///
    /// Capping every exponent at the larger generator exponent of `I` and `J`
    /// changes neither membership nor the annihilator, so that box is searched.
    pub fn associated_witnesses(&self) -> Result<Vec<Witness>> {
        let caps: Vec<u32> = self
            .i()
            .max_exponents()
            .iter()
            .zip(self.j().max_exponents())
            .map(|(a, b)| (*a).max(b) + 1)
            .collect();
        let mut candidates: Vec<Monomial> = box_monomials(&caps)
            .filter(|m| self.i().contains_monomial(m) && !self.j().contains_monomial(m))
            .collect();
        candidates.sort();
        self.ass()
            .into_iter()
            .map(|prime| {
                let target = MonomialIdeal::from_vars(self.n(), prime.gens());
                candidates
                    .iter()
                    .find(|m| self.j().colon_monomial(m).ok().as_ref() == Some(&target))
                    .map(|m| Witness {
                        prime: prime.clone(),
                        element: m.clone(),
                    })
                    .ok_or_else(|| Error::WitnessNotFound(prime.to_string()))
            })
            .collect()
    }

    /// The submodule generated by one witness per associated prime; it is a
    /// direct sum of `R/P` over `Ass(M)`.
    pub fn split_binary_submodule(&self) -> Result<(MonomialModule, Vec<Witness>)> {
        if self.is_zero() {
            return Err(Error::ZeroModule);
        }
        let witnesses = self.associated_witnesses()?;
        let gens: Vec<Monomial> = witnesses.iter().map(|w| w.element.clone()).collect();
        Ok((self.submodule_generated(&gens)?, witnesses))
    }

    /// `N` is open in `M` when the two have the same length.
    pub fn is_open_submodule(&self, sub: &MonomialModule) -> Result<bool> {
        if !sub.is_submodule_of(self) {
            return Err(Error::NotSubmodule);
        }
        Ok(sub.length() == self.length())
    }

    /// Openness through witnesses (binary `M` only): `N` is open iff it meets
    /// every `R·x_P` for witnesses `x_P` of the associated primes.
    pub fn open_via_witnesses(&self, sub: &MonomialModule) -> Result<bool> {
        if !sub.is_submodule_of(self) {
            return Err(Error::NotSubmodule);
        }
        if !self.is_binary() {
            return Err(Error::NotBinary);
        }
        for w in self.associated_witnesses()? {
            let cyclic = MonomialIdeal::principal(w.element).sum(self.j())?;
            if self.j().contains(&sub.i().intersect(&cyclic)?) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Valence one: a single associated prime with multiplicity one.
    pub fn is_univalent(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroModule);
        }
        Ok(self.valence_u32() == 1)
    }

    /// For univalent `M`, the associated prime and the annihilator `(J : I)`.
    pub fn univalent_data(&self) -> Result<Option<UnivalentData>> {
        if !self.is_univalent()? {
            return Ok(None);
        }
        let prime = self.ass().remove(0);
        let annihilator = self.annihilator();
        let annihilator_is_prime = annihilator == MonomialIdeal::from_vars(self.n(), prime.gens());
        Ok(Some(UnivalentData {
            prime,
            annihilator,
            annihilator_is_prime,
        }))
    }
}
