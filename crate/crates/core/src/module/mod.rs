//! Invariants of monomial subquotient modules `M = I/J` over `K[x_0, ..., x_{n-1}]`.
//!
//! The fundamental cycle is computed prime by prime: for each monomial prime
//! `P` the coefficient of `[P]` is the finitistic length of `M_P`, read off as
//! the number of local-cohomology monomials of the localized presentation.
//! The ordinal length is the ordinal image of that cycle.

mod binary;
mod endo;
mod filtration;
mod search;
mod text;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

pub use binary::{UnivalentData, Witness};
pub use endo::EndoAnalysis;
pub use search::SubmoduleSearch;
pub use text::{parse_module, parse_vars, ModuleJson};

use crate::cycle::{Cycle, MonomialPrime};
use crate::error::{Error, Result};
use crate::monomial::{h0_length, localize, Monomial, MonomialIdeal};
use crate::ordinal::Ordinal;

/// Variable counts above this are rejected: associated primes are found by
/// scanning all `2^n` monomial primes.
pub const MAX_VARS: usize = 12;

/// Largest monomial box scanned when computing finitistic lengths.
pub const MAX_BOX: usize = 1 << 24;

/// The subquotient `I/J` with `J ⊆ I`. `R/J` is `I = (1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialModule {
    i: MonomialIdeal,
    j: MonomialIdeal,
}

/// Summary invariants of a module. For the zero module `dim` and `order` are
/// `None` and the predicates hold vacuously.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleProfile {
    pub fcyc: Cycle,
    pub length: Ordinal,
    pub ass: Vec<MonomialPrime>,
    pub dim: Option<usize>,
    pub order: Option<usize>,
    pub valence: BigUint,
    pub is_binary: bool,
}

impl MonomialModule {
    pub fn new(i: MonomialIdeal, j: MonomialIdeal) -> Result<Self> {
        if i.n() != j.n() {
            return Err(Error::AmbientMismatch(i.n(), j.n()));
        }
        if i.n() > MAX_VARS {
            return Err(Error::Guard {
                what: "variables",
                value: i.n(),
                limit: MAX_VARS,
            });
        }
        if !i.contains(&j) {
            return Err(Error::NotSubquotient);
        }
        Ok(MonomialModule { i, j })
    }

    /// `R/J`.
    pub fn cyclic(j: MonomialIdeal) -> Self {
        MonomialModule {
            i: MonomialIdeal::unit(j.n()),
            j,
        }
    }

    /// The polynomial ring itself.
    pub fn ring(n: usize) -> Self {
        Self::cyclic(MonomialIdeal::zero(n))
    }

    pub fn n(&self) -> usize {
        self.i.n()
    }

    pub fn i(&self) -> &MonomialIdeal {
        &self.i
    }

    pub fn j(&self) -> &MonomialIdeal {
        &self.j
    }

    pub fn is_zero(&self) -> bool {
        self.j.contains(&self.i)
    }

    /// The submodule `I'/J`; requires `J ⊆ I' ⊆ I`.
    pub fn submodule(&self, i_sub: MonomialIdeal) -> Result<MonomialModule> {
        if i_sub.n() != self.n() {
            return Err(Error::AmbientMismatch(i_sub.n(), self.n()));
        }
        if !(i_sub.contains(&self.j) && self.i.contains(&i_sub)) {
            return Err(Error::NotSubmodule);
        }
        Ok(MonomialModule {
            i: i_sub,
            j: self.j.clone(),
        })
    }

    /// The submodule generated by the given monomials (and `J`).
    pub fn submodule_generated(&self, gens: &[Monomial]) -> Result<MonomialModule> {
        let extra = MonomialIdeal::new(self.n(), gens.iter().cloned())?;
        self.submodule(self.j.sum(&extra)?)
    }

    pub fn is_submodule_of(&self, other: &MonomialModule) -> bool {
        self.j == other.j && other.i.contains(&self.i)
    }

    fn check_sub(&self, sub: &MonomialModule) -> Result<()> {
        if sub.n() != self.n() {
            return Err(Error::AmbientMismatch(sub.n(), self.n()));
        }
        if !sub.is_submodule_of(self) {
            return Err(Error::NotSubmodule);
        }
        Ok(())
    }

    /// `M/N` for a submodule `N = I'/J`, presented as `I/I'`.
    pub fn quotient_by(&self, sub: &MonomialModule) -> Result<MonomialModule> {
        self.check_sub(sub)?;
        Ok(MonomialModule {
            i: self.i.clone(),
            j: sub.i.clone(),
        })
    }

    pub fn intersect(&self, a: &MonomialModule, b: &MonomialModule) -> Result<MonomialModule> {
        self.check_sub(a)?;
        self.check_sub(b)?;
        self.submodule(a.i.intersect(&b.i)?)
    }

    pub fn sum(&self, a: &MonomialModule, b: &MonomialModule) -> Result<MonomialModule> {
        self.check_sub(a)?;
        self.check_sub(b)?;
        self.submodule(a.i.sum(&b.i)?)
    }

    /// The localization at `P`, over the ring on `P`'s variables.
    pub fn localize(&self, prime: &MonomialPrime) -> Result<MonomialModule> {
        let (i, j) = localize(&self.i, &self.j, prime)?;
        Ok(MonomialModule { i, j })
    }

    /// Length of the largest finite-length submodule, for a module over a
    /// ring whose maximal monomial ideal is the irrelevant one.
    pub fn h0_length(&self) -> u64 {
        h0_length(&self.i, &self.j).expect("ambient checked on construction")
    }

    /// `finlen(M_P)`.
    pub fn finlen_at(&self, prime: &MonomialPrime) -> Result<u64> {
        Ok(self.localize(prime)?.h0_length())
    }

    /// The fundamental cycle `Σ finlen(M_P)·[P]`.
    pub fn fcyc(&self) -> Cycle {
        let n = self.n();
        let mut cycle = Cycle::zero(n);
        if self.is_zero() {
            return cycle;
        }
        for prime in MonomialPrime::all(n) {
            let c = self.finlen_at(&prime).expect("same ambient");
            cycle.add_term(prime, c).expect("same ambient");
        }
        cycle
    }

    /// The ordinal length, as the ordinal image of the fundamental cycle.
    pub fn length(&self) -> Ordinal {
        self.fcyc().binord()
    }

    /// Associated primes, sorted.
    pub fn ass(&self) -> Vec<MonomialPrime> {
        self.fcyc().support()
    }

    pub fn profile(&self) -> ModuleProfile {
        let fcyc = self.fcyc();
        let length = fcyc.binord();
        ModuleProfile {
            ass: fcyc.support(),
            dim: length.degree().ok(),
            order: length.order().ok(),
            valence: length.valence(),
            is_binary: fcyc.is_binary(),
            length,
            fcyc,
        }
    }

    pub fn is_binary(&self) -> bool {
        self.fcyc().is_binary()
    }

    /// Rejects modules whose finitistic-length scans would exceed
    /// [`MAX_BOX`] monomials. Localizing only lowers exponents, so the box of
    /// `J` bounds every scan.
    pub fn check_size(&self) -> Result<()> {
        let size = self
            .j
            .max_exponents()
            .iter()
            .try_fold(1usize, |acc, &e| acc.checked_mul(e.max(1) as usize))
            .unwrap_or(usize::MAX);
        if size > MAX_BOX {
            return Err(Error::Guard {
                what: "monomial box",
                value: size,
                limit: MAX_BOX,
            });
        }
        Ok(())
    }

    /// `ann(M) = (J : I)`.
    pub fn annihilator(&self) -> MonomialIdeal {
        if self.i.is_zero() {
            return MonomialIdeal::unit(self.n());
        }
        self.j.colon(&self.i).expect("I nonzero")
    }

    /// `ann(m)` for a monomial `m ∈ I`.
    pub fn annihilator_of(&self, m: &Monomial) -> Result<MonomialIdeal> {
        self.j.colon_monomial(m)
    }

    /// Longest chain of associated primes under inclusion (number of primes).
    pub fn ass_poset_length(&self) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroModule);
        }
        let mut ass = self.ass();
        ass.sort_by_key(|p| p.gens().len());
        let mut chain = vec![1usize; ass.len()];
        for a in 0..ass.len() {
            for b in 0..a {
                if ass[b] != ass[a] && ass[b].is_subset_of(&ass[a]) {
                    chain[a] = chain[a].max(chain[b] + 1);
                }
            }
        }
        Ok(chain.into_iter().max().unwrap_or(0))
    }

    /// Valence as a machine integer (the sweeps never exceed it).
    pub(crate) fn valence_u32(&self) -> u32 {
        self.length().valence().to_u32().unwrap_or(u32::MAX)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::parse_ideal;
    use crate::vars::default_names;

    fn ideal(s: &str) -> MonomialIdeal {
        parse_ideal(s, &default_names(2)).unwrap()
    }

    fn o(s: &str) -> Ordinal {
        s.parse().unwrap()
    }

    fn prime(gens: &[usize]) -> MonomialPrime {
        MonomialPrime::new(2, gens.iter().copied()).unwrap()
    }

    fn r_mod(j: &str) -> MonomialModule {
        MonomialModule::cyclic(ideal(j))
    }

    #[test]
    fn construction_checks() {
        assert_eq!(
            MonomialModule::new(ideal("x"), ideal("y")),
            Err(Error::NotSubquotient)
        );
        assert!(MonomialModule::new(ideal("x, y"), ideal("x^2, x*y")).is_ok());
        let m = r_mod("x^2, x*y");
        assert_eq!(m.submodule(ideal("x^2")), Err(Error::NotSubmodule));
        assert!(!m.is_zero());
        assert!(MonomialModule::new(ideal("x"), ideal("x")).unwrap().is_zero());
    }

    #[test]
    fn fundamental_cycles() {
        let expected = Cycle::binary(2, [prime(&[0]), prime(&[0, 1])]).unwrap();
        assert_eq!(r_mod("x^2, x*y").fcyc(), expected);
        assert_eq!(
            MonomialModule::ring(2).fcyc(),
            Cycle::binary(2, [prime(&[])]).unwrap()
        );
        let m = MonomialModule::new(ideal("x, y"), ideal("x^2, x*y")).unwrap();
        assert_eq!(m.fcyc(), expected);
    }

    #[test]
    fn lengths() {
        assert_eq!(r_mod("x^2, x*y").length(), o("w + 1"));
        assert_eq!(MonomialModule::ring(2).length(), o("w^2"));
        let y = MonomialModule::new(ideal("y, x^2"), ideal("x^2, x*y")).unwrap();
        assert_eq!(y.length(), o("w"));
        assert_eq!(r_mod("x^2").length(), o("2w"));
        assert_eq!(MonomialModule::new(ideal("x"), ideal("x")).unwrap().length(), Ordinal::zero());
    }

    #[test]
    fn profiles() {
        let p = r_mod("x^2, x*y").profile();
        assert_eq!((p.dim, p.order), (Some(1), Some(0)));
        assert_eq!(p.valence, BigUint::from(2u32));
        assert!(p.is_binary);
        assert_eq!(p.ass, vec![prime(&[0]), prime(&[0, 1])]);

        let p = r_mod("x^2").profile();
        assert_eq!(p.valence, BigUint::from(2u32));
        assert!(!p.is_binary);

        let p = r_mod("x").profile();
        assert_eq!(p.length, o("w"));
        assert_eq!(p.valence, BigUint::from(1u32));

        let z = MonomialModule::cyclic(MonomialIdeal::unit(2)).profile();
        assert_eq!((z.dim, z.order), (None, None));
        assert!(z.is_binary && z.fcyc.is_zero());
    }

    #[test]
    fn ass_poset_lengths() {
        assert_eq!(r_mod("x^2, x*y").ass_poset_length(), Ok(2));
        assert_eq!(r_mod("x").ass_poset_length(), Ok(1));
        assert_eq!(r_mod("x^2").ass_poset_length(), Ok(1));
        assert_eq!(r_mod("x*y").ass_poset_length(), Ok(1));
        assert_eq!(
            MonomialModule::cyclic(MonomialIdeal::unit(2)).ass_poset_length(),
            Err(Error::ZeroModule)
        );
    }

    #[test]
    fn subquotient_algebra() {
        let m = r_mod("x^2, x*y");
        let a = m.submodule(ideal("y, x^2")).unwrap();
        let b = m.submodule(ideal("x")).unwrap();
        assert_eq!(m.intersect(&a, &b).unwrap().i(), &ideal("x^2, x*y"));
        assert_eq!(m.sum(&a, &b).unwrap().i(), &ideal("x, y"));
        let q = m.quotient_by(&b).unwrap();
        assert_eq!(q.length(), o("w"));
        assert_eq!(m.annihilator(), ideal("x^2, x*y"));
    }
}
