use super::{Monomial, MonomialIdeal};

/// A standard pair `(head, free)`: the set `head·K[x_free]` avoids the ideal,
/// `head` involves no free variable, and no larger such set contains it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardPair {
    pub head: Monomial,
    pub free: Vec<usize>,
}

impl StandardPair {
    pub fn free_mask(&self) -> u64 {
        self.free.iter().fold(0, |m, &i| m | 1 << i)
    }

    /// `self.head·K[self.free] ⊆ other.head·K[other.free]`.
    pub fn is_covered_by(&self, other: &StandardPair) -> bool {
        let (sf, of) = (self.free_mask(), other.free_mask());
        sf & !of == 0
            && other.head.divides(&self.head)
            && self.head.colon(&other.head).support_mask() & !of == 0
    }
}

/// The standard-pair decomposition of `I`, sorted.
///
/// Recurses on the last variable: with `D` its largest exponent among the
/// generators, the standard monomials split into slices `x^t·Std(I_t)` for
/// `t < D` and `x^{≥D}·Std(I_D)`, where `I_t` is generated by the generators
/// of `(I : x^t)` free of `x`. Every standard pair of `I` arises from a
/// standard pair of some slice, so keeping the maximal candidates is exact.
pub fn standard_pairs(ideal: &MonomialIdeal) -> Vec<StandardPair> {
    let gens: Vec<Vec<u32>> = ideal.gens().iter().map(|g| g.exps().to_vec()).collect();
    let mut pairs: Vec<StandardPair> = pairs_rec(&gens, ideal.n())
        .into_iter()
        .map(|(head, mask)| StandardPair {
            head: Monomial::new(head),
            free: (0..ideal.n()).filter(|i| mask >> i & 1 == 1).collect(),
        })
        .collect();
    pairs.sort();
    pairs
}

fn pairs_rec(gens: &[Vec<u32>], k: usize) -> Vec<(Vec<u32>, u64)> {
    if gens.iter().any(|g| g.iter().all(|&e| e == 0)) {
        return Vec::new();
    }
    if k == 0 {
        return vec![(Vec::new(), 0)];
    }
    let last = k - 1;
    let depth = gens.iter().map(|g| g[last]).max().unwrap_or(0);
    let mut candidates: Vec<(Vec<u32>, u64)> = Vec::new();
    for t in 0..=depth {
        let slice: Vec<Vec<u32>> = gens
            .iter()
            .filter(|g| g[last] <= t)
            .map(|g| g[..last].to_vec())
            .collect();
        for (mut head, mask) in pairs_rec(&slice, last) {
            if t < depth {
                head.push(t);
                candidates.push((head, mask));
            } else {
                head.push(0);
                candidates.push((head, mask | 1 << last));
            }
        }
    }
    let covered = |a: &(Vec<u32>, u64), b: &(Vec<u32>, u64)| {
        a.1 & !b.1 == 0
            && b.0.iter().zip(&a.0).enumerate().all(|(i, (&hb, &ha))| {
                hb <= ha && (ha == hb || b.1 >> i & 1 == 1)
            })
    };
    candidates
        .iter()
        .enumerate()
        .filter(|(i, a)| {
            !candidates
                .iter()
                .enumerate()
                .any(|(j, b)| j != *i && covered(a, b) && (a != &b || j < *i))
        })
        .map(|(_, a)| a.clone())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::{box_monomials, monomials_up_to_degree, parse_ideal, parse_monomial};
    use crate::vars::default_names;

    /// Brute-force oracle: admissible pairs live in the box of generator
    /// exponents; keep the maximal ones.
    fn brute_pairs(ideal: &MonomialIdeal) -> Vec<StandardPair> {
        let n = ideal.n();
        if ideal.is_unit() {
            return Vec::new();
        }
        let caps = ideal.max_exponents();
        let mut admissible = Vec::new();
        for mask in 0..1u64 << n {
            let bounds: Vec<u32> = (0..n)
                .map(|i| if mask >> i & 1 == 1 { 1 } else { caps[i].max(1) })
                .collect();
            for head in box_monomials(&bounds) {
                let mut far = head.exps().to_vec();
                for i in 0..n {
                    if mask >> i & 1 == 1 {
                        far[i] = caps[i];
                    }
                }
                if !ideal.contains_monomial(&Monomial::new(far)) {
                    admissible.push(StandardPair {
                        head,
                        free: (0..n).filter(|i| mask >> i & 1 == 1).collect(),
                    });
                }
            }
        }
        let mut out: Vec<StandardPair> = admissible
            .iter()
            .filter(|a| !admissible.iter().any(|b| b != *a && a.is_covered_by(b)))
            .cloned()
            .collect();
        out.sort();
        out
    }

    fn ideal(s: &str) -> MonomialIdeal {
        parse_ideal(s, &default_names(2)).unwrap()
    }

    fn pair(head: &str, free: &[usize]) -> StandardPair {
        StandardPair {
            head: parse_monomial(head, &default_names(2)).unwrap(),
            free: free.to_vec(),
        }
    }

    #[test]
    fn examples() {
        assert_eq!(standard_pairs(&ideal("x^2, x*y")), {
            let mut v = vec![pair("1", &[1]), pair("x", &[])];
            v.sort();
            v
        });
        assert_eq!(standard_pairs(&ideal("x^2")), {
            let mut v = vec![pair("1", &[1]), pair("x", &[1])];
            v.sort();
            v
        });
        assert_eq!(standard_pairs(&MonomialIdeal::zero(2)), vec![pair("1", &[0, 1])]);
        assert!(standard_pairs(&MonomialIdeal::unit(2)).is_empty());
    }

    #[test]
    fn matches_brute_force_on_small_ideals() {
        let names = default_names(2);
        for (s, _) in [("x^2, x*y", ()), ("x^3, y^2", ()), ("x*y", ()), ("x^2*y, x*y^3", ()), ("y^3", ())] {
            let i = parse_ideal(s, &names).unwrap();
            assert_eq!(standard_pairs(&i), brute_pairs(&i), "{s}");
        }
        let names3 = default_names(3);
        for s in ["x*y, y*z, x*z", "x^2*y, z^3, x*y*z", "x*y*z", "x^2, y^2*z"] {
            let i = parse_ideal(s, &names3).unwrap();
            assert_eq!(standard_pairs(&i), brute_pairs(&i), "{s}");
        }
    }

    #[test]
    fn pairs_cover_standard_monomials_exactly_once() {
        let i = ideal("x^3, x*y^2, y^4");
        let pairs = standard_pairs(&i);
        for m in monomials_up_to_degree(2, 8) {
            let covering = pairs
                .iter()
                .filter(|p| {
                    p.head.divides(&m)
                        && m.colon(&p.head).support_mask() & !p.free_mask() == 0
                })
                .count();
            assert_eq!(covering >= 1, !i.contains_monomial(&m), "{m}");
        }
    }
}
