use super::MonomialModule;
use crate::cycle::MonomialPrime;
use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};

/// Product of the variables outside `prime`.
fn complement_monomial(prime: &MonomialPrime) -> Monomial {
    let n = prime.n();
    prime
        .complement()
        .into_iter()
        .fold(Monomial::one(n), |m, v| m.mul(&Monomial::var(n, v)))
}

impl MonomialModule {
    /// `((J : B^∞) ∩ I)/J`: the elements killed by a power of `B`.
    /// The zero ideal saturates to everything.
    fn torsion_by(&self, b: &MonomialIdeal) -> Result<MonomialModule> {
        if b.is_zero() {
            return Ok(self.clone());
        }
        let sat = self.j().saturate(b)?;
        self.submodule(sat.intersect(self.i())?)
    }

    /// `D_e(M)`: elements whose support has dimension at most `e`.
    ///
    /// An element lies in `D_e` iff it dies in `M_Q` for every associated
    /// prime `Q` of dimension `> e`; for monomial data that means it is
    /// killed by a power of the product of the variables outside each such
    /// `Q`, so `D_e` is the saturation of `J` by the ideal of those products.
    pub fn dim_filtration(&self, e: usize) -> Result<MonomialModule> {
        let n = self.n();
        if e > n {
            return Err(Error::FiltrationIndex { e, n });
        }
        let high: Vec<Monomial> = self
            .ass()
            .iter()
            .filter(|q| q.dim() > e)
            .map(complement_monomial)
            .collect();
        self.torsion_by(&MonomialIdeal::new(n, high)?)
    }

    /// The kernel of the localization map `M → M_P`: `((J : s^∞) ∩ I)/J`
    /// with `s` the product of the variables outside `P`.
    ///
    /// Defined for any monomial prime; only associated primes are meaningful
    /// for the length identity (see [`MonomialModule::is_associated`]).
    pub fn prim_kernel(&self, prime: &MonomialPrime) -> Result<MonomialModule> {
        if prime.n() != self.n() {
            return Err(Error::AmbientMismatch(prime.n(), self.n()));
        }
        let s = complement_monomial(prime);
        if s.is_one() {
            return self.submodule(self.j().clone());
        }
        self.torsion_by(&MonomialIdeal::principal(s))
    }

    pub fn is_associated(&self, prime: &MonomialPrime) -> bool {
        self.ass().contains(prime)
    }
}
