use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::report::{CheckOutcome, Tally};
use crate::error::{Error, Result};
use crate::oracle::fixture::{fixture_module, kernel_module, Element, EndoClass, EndoTriple, KernelShape, Q};

/// Seeded random triples per suite run.
const RANDOM_TRIPLES: usize = 200;

/// `u, v, p_0, p_1` ranging over `{-2, ..., 2}`.
pub fn small_triples(n: usize) -> Vec<EndoTriple> {
    let r = -2i64..=2;
    let mut out = Vec::new();
    for u in r.clone() {
        for v in r.clone() {
            for p0 in r.clone() {
                for p1 in r.clone() {
                    out.push(EndoTriple::from_ints(u, v, &[p0, p1], n));
                }
            }
        }
    }
    out
}

/// Random triples with coefficients in `{-2, ..., 2}` and `deg p < n/2`, so
/// that products of two of them are not truncated.
pub fn random_triples(n: usize, count: usize, seed: u64) -> Vec<EndoTriple> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let p: Vec<i64> = (0..n / 2).map(|_| rng.gen_range(-2..=2)).collect();
            EndoTriple::from_ints(rng.gen_range(-2..=2), rng.gen_range(-2..=2), &p, n)
        })
        .collect()
}

/// Nilpotency by evaluation: some power up to the largest exponent at which
/// truncation is still exact vanishes.
fn vanishing_power(f: &EndoTriple) -> Option<u32> {
    let n = f.truncation();
    let exact = match f.p_degree() {
        None | Some(0) => n as u32,
        Some(d) => ((n - 1) / d) as u32,
    };
    (1..=exact.max(2)).find(|&k| f.power(k).is_zero())
}

/// Failure of injectivity or surjectivity, seen by evaluating `f` on
/// `x, y, y², ...`: either `f(x) = 0`, or no image has `y`-part with
/// nonzero constant term, so `y` is not hit.
fn visibly_not_bijective(f: &EndoTriple) -> bool {
    let n = f.truncation();
    let kills_x = f.apply(&Element::x(n)).is_zero();
    let misses_y = (0..n).all(|k| f.apply(&Element::y_pow(k, n)).q[0] == Q::from_integer(0));
    kills_x || misses_y
}

/// The laws of the endomorphism ring of `(x, y)/(x², xy)` over the small
/// exhaustive triples and a seeded random sample, at truncation `n`.
pub fn check_binendo_suite(n: usize, seed: u64) -> Result<Vec<CheckOutcome>> {
    if n < 4 {
        return Err(Error::InvalidBound(format!("truncation must be at least 4, got {n}")));
    }
    let exhaustive = small_triples(n);
    let mut all = exhaustive.clone();
    all.extend(random_triples(n, RANDOM_TRIPLES, seed));
    let nil: Vec<&EndoTriple> = all.iter().filter(|f| f.classify() == EndoClass::Nilpotent).collect();
    let id = EndoTriple::identity(n);
    let tag = |name: &str| format!("endo-fixture/{name}");

    let mut nil_crit = Tally::new(tag("nilpotent-iff-u-p-zero"));
    let mut bij_crit = Tally::new(tag("bijective-iff-u-p0-units"));
    let mut nil_kernel = Tally::new(tag("nilpotent-kernel-is-open-(x,y^2)"));
    let mut nil_square = Tally::new(tag("nilpotent-square-zero"));
    let mut monic_nil = Tally::new(tag("monic-plus-nilpotent-monic"));
    let mut central = Tally::new(tag("central-unit-plus-nilpotent-invertible"));
    for f in &all {
        let w = || f.to_string();
        let nilpotent = vanishing_power(f).is_some();
        nil_crit.record(nilpotent == (f.classify() == EndoClass::Nilpotent), w);

        let bijective = match f.inverse() {
            Some(g) => f.compose(&g)? == id && g.compose(f)? == id,
            None => false,
        };
        let criterion = f.classify() == EndoClass::Bijective;
        bij_crit.record(
            bijective == criterion && (bijective || visibly_not_bijective(f)),
            w,
        );

        if nilpotent {
            nil_square.record(f.power(2).is_zero(), w);
            if !f.is_zero() {
                let n_ = f.truncation();
                let evaluated = f.apply(&Element::x(n_)).is_zero()
                    && f.apply(&Element::y_pow(1, n_)).is_zero()
                    && !f.apply(&Element::y_pow(0, n_)).is_zero();
                nil_kernel.record(
                    f.kernel() == KernelShape::XY2 && evaluated && f.kernel_is_open(),
                    w,
                );
            }
            for c in [-2i64, -1, 1, 2] {
                let c = Q::from_integer(c);
                let unit = id.scale(c);
                let sum = unit.add(f)?;
                // (c + f)^-1 = c^-1 - c^-2 f since f² = 0
                let inv = id.scale(c.recip()).sub(&f.scale((c * c).recip()))?;
                central.record(
                    sum.compose(&inv)? == id && inv.compose(&sum)? == id,
                    || format!("{c} + {f}"),
                );
            }
        }
        if f.is_monic() {
            for g in &nil {
                monic_nil.record(f.add(g)?.is_monic(), || format!("{f} + {g}"));
            }
        }
    }

    let mut ideal = Tally::new(tag("nilpotents-two-sided-ideal"));
    let mut square = Tally::new(tag("nilpotent-products-zero"));
    let mut cube = Tally::new(tag("nilpotent-triple-products-zero"));
    for a in &nil {
        for b in &nil {
            let w = || format!("{a}, {b}");
            ideal.record(a.add(b)?.classify() == EndoClass::Nilpotent, w);
            square.record(a.compose(b)?.is_zero(), w);
            for c in nil.iter().take(25) {
                cube.record(a.compose(b)?.compose(c)?.is_zero(), || format!("{a}, {b}, {c}"));
            }
        }
        for f in &all {
            let w = || format!("{a}, {f}");
            ideal.record(
                a.compose(f)?.classify() == EndoClass::Nilpotent
                    && f.compose(a)?.classify() == EndoClass::Nilpotent,
                w,
            );
        }
    }

    let mut commutators = Tally::new(tag("commutators-nilpotent"));
    let mut noncommuting = None;
    for (k, f) in all.iter().enumerate() {
        // exhaustive × exhaustive, plus random × everything
        let partners = if k < exhaustive.len() { &all[..exhaustive.len()] } else { &all[..] };
        for g in partners {
            let c = f.commutator(g)?;
            commutators.record(
                c.classify() == EndoClass::Nilpotent && c.power(2).is_zero(),
                || format!("[{f}, {g}] = {c}"),
            );
            if noncommuting.is_none() && !c.is_zero() {
                noncommuting = Some(format!("[{f}, {g}] = {c}"));
            }
        }
    }
    let noncommutative = match noncommuting {
        Some(w) => CheckOutcome::new(tag("not-commutative"), true, "found").with_witnesses(vec![w]),
        None => CheckOutcome::new(tag("not-commutative"), false, "all sampled pairs commute"),
    };

    let m = fixture_module();
    let w = m.ass_poset_length()?;
    let whole = kernel_module(&KernelShape::Whole);
    let nil_bound = CheckOutcome::new(
        tag("nilpotency-bound-matches-ass-chain"),
        w == 2 && whole == m && nil.iter().all(|f| f.power(w as u32).is_zero()),
        format!("ass poset length {w}, {} nilpotents", nil.len()),
    );

    Ok(vec![
        nil_crit.finish(),
        bij_crit.finish(),
        nil_kernel.finish(),
        nil_square.finish(),
        ideal.finish(),
        square.finish(),
        cube.finish(),
        commutators.finish(),
        noncommutative,
        monic_nil.finish(),
        central.finish(),
        nil_bound,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_passes_at_small_truncation() {
        for c in check_binendo_suite(4, 3).unwrap() {
            assert!(c.passed, "{c}");
        }
    }

    #[test]
    fn triple_sets() {
        assert_eq!(small_triples(8).len(), 625);
        assert_eq!(random_triples(8, 10, 1), random_triples(8, 10, 1));
        assert!(random_triples(8, 50, 2).iter().all(|f| f.p_degree().map_or(true, |d| d < 4)));
    }

    #[test]
    fn visible_failures() {
        assert!(visibly_not_bijective(&EndoTriple::from_ints(0, 1, &[1], 8)));
        assert!(visibly_not_bijective(&EndoTriple::from_ints(1, 1, &[0, 1], 8)));
        assert!(!visibly_not_bijective(&EndoTriple::from_ints(2, 5, &[1, 1], 8)));
    }
}
