use std::collections::BTreeMap;

use num_bigint::BigUint;
use ordlen::corpus::{ideals_up_to_degree, random_nested_pairs};
use ordlen::monomial::{box_monomials, parse_ideal, standard_pairs};
use ordlen::oracle::FiniteModule;
use ordlen::vars::default_names;
use ordlen::{Monomial, MonomialIdeal, MonomialModule, MonomialPrime, Ordinal};
use proptest::prelude::*;

fn ideal_strategy(n: usize) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(prop::collection::vec(0u32..4, n), 0..5).prop_map(move |gens| {
        MonomialIdeal::new(n, gens.into_iter().map(Monomial::new)).expect("same ambient")
    })
}

fn ring_and_ideal() -> impl Strategy<Value = MonomialIdeal> {
    (1usize..=3).prop_flat_map(ideal_strategy)
}

/// Arithmetic multiplicities from standard pairs: the coefficient of `P` is
/// the number of standard pairs whose free variables are those outside `P`.
fn cycle_from_pairs(j: &MonomialIdeal) -> BTreeMap<MonomialPrime, u64> {
    let n = j.n();
    let mut out = BTreeMap::new();
    if j.is_unit() {
        return out;
    }
    for pair in standard_pairs(j) {
        let prime = MonomialPrime::new(n, (0..n).filter(|i| !pair.free.contains(i))).unwrap();
        *out.entry(prime).or_insert(0) += 1;
    }
    out
}

fn cycle_map(m: &MonomialModule) -> BTreeMap<MonomialPrime, u64> {
    m.fcyc()
        .terms()
        .map(|(p, c)| (p.clone(), u64::try_from(c.clone()).unwrap()))
        .collect()
}

#[test]
fn standard_pairs_agree_with_h0_on_the_corpus() {
    for n in 1..=2 {
        for j in ideals_up_to_degree(n, 3) {
            assert_eq!(cycle_map(&MonomialModule::cyclic(j.clone())), cycle_from_pairs(&j), "R/({j})");
        }
    }
    for (j, _) in random_nested_pairs(3, 3, 300, 11) {
        assert_eq!(cycle_map(&MonomialModule::cyclic(j.clone())), cycle_from_pairs(&j), "R/({j})");
    }
}

#[test]
fn worked_example() {
    let names = default_names(2);
    let j = parse_ideal("x^2, x*y", &names).unwrap();
    let m = MonomialModule::cyclic(j.clone());
    assert_eq!(m.length(), Ordinal::from_u64s(&[1, 1]));
    assert!(m.is_binary());
    let x = MonomialPrime::new(2, [0]).unwrap();
    assert_eq!(m.ass(), vec![x, MonomialPrime::maximal(2)]);
    let sub = |s: &str| {
        let i = parse_ideal(s, &names).unwrap().sum(&j).unwrap();
        MonomialModule::new(i, j.clone()).unwrap()
    };
    assert_eq!(sub("y").length(), Ordinal::omega());
    assert_eq!(sub("x, y").length(), Ordinal::from_u64s(&[1, 1]));
    assert_eq!(sub("x").length(), Ordinal::one());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn cycle_matches_standard_pairs(j in ring_and_ideal()) {
        prop_assert_eq!(cycle_map(&MonomialModule::cyclic(j.clone())), cycle_from_pairs(&j));
    }

    #[test]
    fn length_is_image_of_cycle(j in ring_and_ideal()) {
        let m = MonomialModule::cyclic(j);
        let fcyc = m.fcyc();
        let want = fcyc.terms().fold(Ordinal::zero(), |acc, (p, c)| {
            acc.shuffle_sum(&Ordinal::term(c.clone(), p.dim()))
        });
        prop_assert_eq!(m.length(), want);
        prop_assert_eq!(m.ass(), fcyc.support());
        let profile = m.profile();
        prop_assert_eq!(profile.dim, m.ass().iter().map(|p| p.dim()).max());
    }

    #[test]
    fn artinian_length_counts_standard_monomials(n in 1usize..=3, extra in prop::collection::vec(prop::collection::vec(0u32..3, 3), 0..4), k in 1u32..4) {
        let mut gens: Vec<Monomial> = (0..n).map(|i| Monomial::var(n, i).pow(k)).collect();
        gens.extend(extra.into_iter().map(|e| Monomial::new(e[..n].to_vec())));
        let j = MonomialIdeal::new(n, gens).unwrap();
        let count = box_monomials(&vec![k; n]).filter(|u| !j.contains_monomial(u)).count();
        let m = MonomialModule::cyclic(j.clone());
        prop_assert_eq!(m.length().as_natural(), Some(BigUint::from(count)));
        let f = FiniteModule::from_artinian(&j).unwrap();
        prop_assert_eq!(f.dim(), count);
        if count <= 16 {
            prop_assert_eq!(f.longest_chain().unwrap(), count);
        }
    }

    #[test]
    fn semi_additivity(j in ring_and_ideal(), extra in ring_and_ideal()) {
        prop_assume!(extra.n() == j.n());
        let n = j.n();
        let i = extra.sum(&j).unwrap();
        let sub = MonomialModule::new(i.clone(), j.clone()).unwrap();
        let quot = MonomialModule::cyclic(i);
        let whole = MonomialModule::new(MonomialIdeal::unit(n), j).unwrap();
        let (ln, lq, lm) = (sub.length(), quot.length(), whole.length());
        prop_assert!(lq.ord_sum(&ln) <= lm);
        prop_assert!(lm <= lq.shuffle_sum(&ln));
        prop_assert!(ln.is_weaker_than(&lm));
    }

    #[test]
    fn localization_lowers_cycle(j in ring_and_ideal()) {
        let m = MonomialModule::cyclic(j);
        let whole = cycle_map(&m);
        for p in MonomialPrime::all(m.n()) {
            let local = m.localize(&p).unwrap();
            // primes of the localization are the primes of M inside P
            let mut want: Vec<u64> = whole
                .iter()
                .filter(|(q, _)| q.is_subset_of(&p))
                .map(|(_, &c)| c)
                .collect();
            let mut got: Vec<u64> = cycle_map(&local).values().copied().collect();
            want.sort_unstable();
            got.sort_unstable();
            prop_assert_eq!(got, want, "at {}", p);
        }
    }

    #[test]
    fn ideal_text_round_trip(j in ring_and_ideal()) {
        let names = default_names(j.n());
        let text = j.display_with(&names).to_string();
        let text = if j.is_zero() { String::new() } else { text };
        prop_assert_eq!(parse_ideal(&text, &names).unwrap(), j);
    }
}
