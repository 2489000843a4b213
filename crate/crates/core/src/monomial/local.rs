use super::{box_monomials, Monomial, MonomialIdeal};
use crate::cycle::MonomialPrime;
use crate::error::{Error, Result};

/// Localizes the subquotient `I/J` at a monomial prime by inverting every
/// variable outside it. The result lives in the ring on the prime's generators
/// (variable `k` of the result is `prime.gens()[k]`).
pub fn localize(
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    prime: &MonomialPrime,
) -> Result<(MonomialIdeal, MonomialIdeal)> {
    for n in [i.n(), j.n()] {
        if n != prime.n() {
            return Err(Error::AmbientMismatch(n, prime.n()));
        }
    }
    let keep = prime.gens();
    let restrict = |ideal: &MonomialIdeal| {
        let gens = ideal
            .gens()
            .iter()
            .map(|g| Monomial::new(keep.iter().map(|&v| g.exp(v)).collect()))
            .collect();
        MonomialIdeal::from_gens_unchecked(keep.len(), gens)
    };
    Ok((restrict(i), restrict(j)))
}

/// Number of monomials of `I ∖ J` killed by a power of the maximal monomial
/// ideal: the length of `H^0_m(I/J)`.
///
/// Every such monomial has each exponent below the largest exponent of that
/// variable among the generators of `J` (otherwise it would lie in `J`), so the
/// search runs over that box.
pub fn h0_length(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<u64> {
    if i.n() != j.n() {
        return Err(Error::AmbientMismatch(i.n(), j.n()));
    }
    let n = j.n();
    let sat = if n == 0 {
        MonomialIdeal::unit(0)
    } else {
        j.saturate(&MonomialIdeal::from_vars(n, &(0..n).collect::<Vec<_>>()))?
    };
    let bounds = j.max_exponents();
    Ok(box_monomials(&bounds)
        .filter(|u| i.contains_monomial(u) && sat.contains_monomial(u) && !j.contains_monomial(u))
        .count() as u64)
}
