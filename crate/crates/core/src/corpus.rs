//! Test corpora of monomial ideals and subquotients.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::module::MonomialModule;
use crate::monomial::{monomials_up_to_degree, Monomial, MonomialIdeal};

/// Every monomial ideal of `K[x_0..x_{n-1}]` whose minimal generators have
/// degree at most `d`, including the zero and unit ideals. Each ideal appears
/// once (minimal generating sets are the antichains).
pub fn ideals_up_to_degree(n: usize, d: u32) -> Vec<MonomialIdeal> {
    let monos = monomials_up_to_degree(n, d);
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    antichains(&monos, 0, &mut chosen, &mut |set| {
        out.push(MonomialIdeal::from_gens_unchecked(
            n,
            set.iter().map(|&k| monos[k].clone()).collect(),
        ));
    });
    out
}

fn antichains(
    monos: &[Monomial],
    start: usize,
    chosen: &mut Vec<usize>,
    emit: &mut impl FnMut(&[usize]),
) {
    emit(chosen);
    for k in start..monos.len() {
        // monomials are sorted by degree, so only earlier picks can divide `k`
        if chosen.iter().any(|&c| monos[c].divides(&monos[k])) {
            continue;
        }
        chosen.push(k);
        antichains(monos, k + 1, chosen, emit);
        chosen.pop();
    }
}

/// All pairs `(J, I)` with `J ⊆ I` from [`ideals_up_to_degree`].
pub fn nested_pairs(n: usize, d: u32) -> Vec<(MonomialIdeal, MonomialIdeal)> {
    let ideals = ideals_up_to_degree(n, d);
    let mut out = Vec::new();
    for j in &ideals {
        for i in &ideals {
            if i.contains(j) {
                out.push((j.clone(), i.clone()));
            }
        }
    }
    out
}

/// All subquotients `I/J` from [`nested_pairs`].
pub fn modules_up_to_degree(n: usize, d: u32) -> Vec<MonomialModule> {
    nested_pairs(n, d)
        .into_iter()
        .map(|(j, i)| MonomialModule::new(i, j).expect("nested"))
        .collect()
}

/// Monomial ideals `J ⊇ m^k`, i.e. all Artinian quotients `R/J` whose socle
/// degree is below `k`.
pub fn artinian_ideals(n: usize, k: u32) -> Vec<MonomialIdeal> {
    let power = MonomialIdeal::maximal_power(n, k);
    ideals_up_to_degree(n, k)
        .into_iter()
        .filter(|j| j.contains(&power))
        .collect()
}

fn random_ideal(rng: &mut ChaCha8Rng, pool: &[Monomial], n: usize, max_gens: usize) -> MonomialIdeal {
    let count = rng.gen_range(0..=max_gens);
    let gens = (0..count)
        .map(|_| pool.choose(rng).expect("non-empty pool").clone())
        .collect();
    MonomialIdeal::from_gens_unchecked(n, gens)
}

/// `count` distinct pairs `J ⊆ I`, drawn deterministically from `seed`:
/// `J` has up to four generators of degree at most `d`, and `I` adds up to
/// three more to `J`.
pub fn random_nested_pairs(
    n: usize,
    d: u32,
    count: usize,
    seed: u64,
) -> Vec<(MonomialIdeal, MonomialIdeal)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pool: Vec<Monomial> = monomials_up_to_degree(n, d)
        .into_iter()
        .filter(|m| !m.is_one())
        .collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut attempts = 0;
    while out.len() < count && attempts < count * 100 {
        attempts += 1;
        let j = random_ideal(&mut rng, &pool, n, 4);
        let extra = random_ideal(&mut rng, &pool, n, 3);
        let i = j.sum(&extra).expect("same ambient");
        let key = (format!("{j}"), format!("{i}"));
        if seen.insert(key) {
            out.push((j, i));
        }
    }
    out
}

/// Artinian ideals `J ⊇ m^k` in `n` variables, sampled from `seed`.
pub fn random_artinian_ideals(n: usize, k: u32, count: usize, seed: u64) -> Vec<MonomialIdeal> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let power = MonomialIdeal::maximal_power(n, k);
    let pool: Vec<Monomial> = monomials_up_to_degree(n, k)
        .into_iter()
        .filter(|m| !m.is_one())
        .collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut attempts = 0;
    while out.len() < count && attempts < count * 100 {
        attempts += 1;
        let j = random_ideal(&mut rng, &pool, n, 5)
            .sum(&power)
            .expect("same ambient");
        if seen.insert(format!("{j}")) {
            out.push(j);
        }
    }
    out
}

/// Submodules `(J + (m_1, ..., m_s))/J` of `M = I/J` for at most `max_gens`
/// monomials `m_i ∈ I` of degree at most `d`, deduplicated. Includes `0`.
pub fn sandwich_submodules(m: &MonomialModule, max_gens: usize, d: u32) -> Vec<MonomialModule> {
    let pool: Vec<Monomial> = monomials_up_to_degree(m.n(), d)
        .into_iter()
        .filter(|x| m.i().contains_monomial(x) && !m.j().contains_monomial(x))
        .collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    sandwich_rec(m, &pool, 0, max_gens, &mut chosen, &mut seen, &mut out);
    out
}

fn sandwich_rec(
    m: &MonomialModule,
    pool: &[Monomial],
    start: usize,
    left: usize,
    chosen: &mut Vec<Monomial>,
    seen: &mut BTreeSet<String>,
    out: &mut Vec<MonomialModule>,
) {
    let sub = m.submodule_generated(chosen).expect("generators lie in I");
    if seen.insert(sub.i().to_string()) {
        out.push(sub);
    }
    if left == 0 {
        return;
    }
    for k in start..pool.len() {
        chosen.push(pool[k].clone());
        sandwich_rec(m, pool, k + 1, left - 1, chosen, seen, out);
        chosen.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_corpus_counts() {
        // one variable: ideals are 0 and (x^k) for k <= d
        assert_eq!(ideals_up_to_degree(1, 3).len(), 5);
        // two variables, degree <= 1: 0, (1), (x), (y), (x, y)
        assert_eq!(ideals_up_to_degree(2, 1).len(), 5);
        let all = ideals_up_to_degree(2, 3);
        let distinct: BTreeSet<String> = all.iter().map(|i| i.to_string()).collect();
        assert_eq!(distinct.len(), all.len());
    }

    #[test]
    fn artinian_corpus() {
        // J ⊇ m^2 in two variables: m^2, (x, y^2), (x^2, y), (x, y) plus
        // the ones cut by a degree-2 antichain: (x^2, y^2 ...) etc.
        for j in artinian_ideals(2, 4) {
            assert!(j.contains(&MonomialIdeal::maximal_power(2, 4)));
        }
        let r = artinian_ideals(2, 2);
        assert!(r.iter().any(|j| j == &MonomialIdeal::maximal_power(2, 2)));
        assert!(r.iter().any(|j| j.is_unit()));
    }

    #[test]
    fn random_pairs_are_nested_and_deterministic() {
        let a = random_nested_pairs(3, 3, 50, 7);
        let b = random_nested_pairs(3, 3, 50, 7);
        assert_eq!(a, b);
        assert_eq!(a.len(), 50);
        assert!(a.iter().all(|(j, i)| i.contains(j)));
    }

    #[test]
    fn sandwiches() {
        let m = MonomialModule::cyclic(
            MonomialIdeal::from_exps(2, &[&[2, 0], &[1, 1]]).unwrap(),
        );
        let subs = sandwich_submodules(&m, 2, 2);
        assert!(subs.iter().all(|s| s.is_submodule_of(&m)));
        assert!(subs.iter().any(|s| s.is_zero()));
        assert!(subs.iter().any(|s| s == &m));
    }
}
