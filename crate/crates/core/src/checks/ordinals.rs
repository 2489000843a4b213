use std::collections::{BTreeSet, HashMap, HashSet};

use super::report::{CheckOutcome, Tally, MAX_WITNESSES};
use crate::ordinal::Ordinal;

/// All ordinals with exponents `≤ max_exp` and coefficients `≤ max_coeff`.
pub fn small_ordinals(max_exp: usize, max_coeff: u64) -> Vec<Ordinal> {
    let base = max_coeff + 1;
    let count = base.pow(max_exp as u32 + 1);
    (0..count)
        .map(|mut code| {
            let coeffs: Vec<u64> = (0..=max_exp)
                .map(|_| {
                    let c = code % base;
                    code /= base;
                    c
                })
                .collect();
            Ordinal::from_u64s(&coeffs)
        })
        .collect()
}

/// Associativity of `op` over all triples of `set`. Every sum is computed
/// once: pair results are interned and the triple comparison runs on the
/// interned indices.
fn check_associative(name: &str, set: &[Ordinal], op: impl Fn(&Ordinal, &Ordinal) -> Ordinal) -> CheckOutcome {
    let mut store: Vec<Ordinal> = Vec::new();
    let mut ids: HashMap<Ordinal, usize> = HashMap::new();
    let mut intern = |o: Ordinal, store: &mut Vec<Ordinal>| {
        *ids.entry(o.clone()).or_insert_with(|| {
            store.push(o);
            store.len() - 1
        })
    };
    let k = set.len();
    let pair: Vec<usize> = (0..k * k)
        .map(|ab| intern(op(&set[ab / k], &set[ab % k]), &mut store))
        .collect();
    let mids: Vec<usize> = pair.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
    let slot: HashMap<usize, usize> = mids.iter().enumerate().map(|(s, &m)| (m, s)).collect();
    let m = mids.len();
    // left[s * k + c] = mid_s op c, right[a * m + s] = a op mid_s
    let mut left = vec![0; m * k];
    let mut right = vec![0; k * m];
    for (s, &mid) in mids.iter().enumerate() {
        for c in 0..k {
            let mid_ord = store[mid].clone();
            left[s * k + c] = intern(op(&mid_ord, &set[c]), &mut store);
            right[c * m + s] = intern(op(&set[c], &mid_ord), &mut store);
        }
    }
    let mut failures = 0usize;
    let mut witnesses = Vec::new();
    for a in 0..k {
        for b in 0..k {
            let ab = slot[&pair[a * k + b]];
            for c in 0..k {
                let bc = slot[&pair[b * k + c]];
                if left[ab * k + c] != right[a * m + bc] {
                    failures += 1;
                    if witnesses.len() < MAX_WITNESSES {
                        witnesses.push(format!("({}, {}, {})", set[a], set[b], set[c]));
                    }
                }
            }
        }
    }
    let cases = k * k * k;
    CheckOutcome::new(
        name,
        failures == 0 && cases > 0,
        format!("{cases} cases, {failures} failures"),
    )
    .with_witnesses(witnesses)
}

/// Exhaustive laws of ordinal and shuffle sums, `⪯` and the lattice
/// operations on ordinals of degree `≤ max_exp` with coefficients
/// `≤ max_coeff`.
pub fn check_ordinal_algebra(max_exp: usize, max_coeff: u64) -> Vec<CheckOutcome> {
    let set = small_ordinals(max_exp, max_coeff);
    let mut out = vec![
        check_associative("ordinal/ord-sum-associative", &set, Ordinal::ord_sum),
        check_associative("ordinal/shuffle-sum-associative", &set, Ordinal::shuffle_sum),
    ];

    let mut commut = Tally::new("ordinal/shuffle-sum-commutative");
    let mut extends = Tally::new("ordinal/weaker-implies-leq");
    let mut dominates = Tally::new("ordinal/ord-sum-leq-shuffle-sum");
    let mut lattice = Tally::new("ordinal/meet-join-bounds");
    let mut difference = Tally::new("ordinal/weaker-iff-shuffle-difference");
    // a ⪯ b iff b = a ⊕ c for some c; every such c lies in `set`
    let reachable: Vec<HashSet<&Ordinal>> = set
        .iter()
        .map(|a| {
            let sums: HashSet<Ordinal> = set.iter().map(|c| a.shuffle_sum(c)).collect();
            set.iter().filter(|b| sums.contains(*b)).collect()
        })
        .collect();
    for (ai, a) in set.iter().enumerate() {
        for b in &set {
            let show = || format!("({a}, {b})");
            commut.record(a.shuffle_sum(b) == b.shuffle_sum(a), show);
            extends.record(!a.is_weaker_than(b) || a <= b, show);
            dominates.record(a.ord_sum(b) <= a.shuffle_sum(b), show);
            let (m, j) = (a.meet(b), a.join(b));
            lattice.record(
                m.is_weaker_than(a)
                    && m.is_weaker_than(b)
                    && a.is_weaker_than(&j)
                    && b.is_weaker_than(&j)
                    && a.shuffle_sum(b) == m.shuffle_sum(&j),
                show,
            );
            let by_search = reachable[ai].contains(b);
            let by_formula = a
                .shuffle_difference(b)
                .is_some_and(|c| &a.shuffle_sum(&c) == b);
            difference.record(
                a.is_weaker_than(b) == by_search && by_search == by_formula,
                show,
            );
        }
    }

    let mut split = Tally::new("ordinal/split-reconstruction");
    for a in &set {
        for e in 0..=max_exp + 1 {
            let (high, low) = a.split(e);
            let ok = high.shuffle_sum(&low) == *a
                && high.ord_sum(&low) == *a
                && high.support().iter().all(|&k| k > e)
                && low.support().iter().all(|&k| k <= e);
            split.record(ok, || format!("{a} at {e}"));
        }
    }

    out.extend([commut, extends, dominates, lattice, difference, split].map(Tally::finish));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_set_size() {
        assert_eq!(small_ordinals(1, 2).len(), 9);
        assert_eq!(small_ordinals(3, 3).len(), 256);
    }

    #[test]
    fn laws_hold_on_a_small_set() {
        for c in check_ordinal_algebra(2, 2) {
            assert!(c.passed, "{c}");
        }
    }
}
