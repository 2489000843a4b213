//! Endomorphisms of `M = (x, y)` over `K[x, y]/(x², xy)`, localized at the
//! origin. Such an `f` is fixed by `f(x) = u·x` and `f(y) = v·x + p(y)·y`,
//! with `p` a power series kept modulo `y^N`.

use std::fmt;

use num_rational::Rational64;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::module::MonomialModule;
use crate::monomial::MonomialIdeal;

pub type Q = Rational64;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EndoTriple {
    pub u: Q,
    pub v: Q,
    /// Coefficients of `p`, lowest degree first; the length is `N`.
    pub p: Vec<Q>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EndoClass {
    Nilpotent,
    Bijective,
    Other,
}

/// The kernel of an [`EndoTriple`] as a submodule of `M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KernelShape {
    Zero,
    /// `(x)`
    X,
    /// `(x, y²)`
    XY2,
    /// All of `M`.
    Whole,
    /// The cyclic submodule generated by `y + c·x`.
    Line(Q),
}

/// An element `a·x + q(y)·y` of `M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Element {
    pub a: Q,
    pub q: Vec<Q>,
}

impl Element {
    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.q.iter().all(Zero::is_zero)
    }

    pub fn x(n: usize) -> Self {
        Element { a: Q::one(), q: vec![Q::zero(); n] }
    }

    /// `y^(k+1)`, as long as `k < n`.
    pub fn y_pow(k: usize, n: usize) -> Self {
        let mut q = vec![Q::zero(); n];
        q[k] = Q::one();
        Element { a: Q::zero(), q }
    }
}

fn series_mul(a: &[Q], b: &[Q]) -> Vec<Q> {
    let n = a.len();
    let mut out = vec![Q::zero(); n];
    for (i, ai) in a.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        for (j, bj) in b.iter().take(n - i).enumerate() {
            if !bj.is_zero() {
                out[i + j] += ai * bj;
            }
        }
    }
    out
}

fn series_inverse(a: &[Q]) -> Option<Vec<Q>> {
    let a0 = *a.first()?;
    if a0.is_zero() {
        return None;
    }
    let mut out = vec![Q::zero(); a.len()];
    out[0] = a0.recip();
    for k in 1..a.len() {
        let s: Q = (1..=k).map(|i| a[i] * out[k - i]).sum();
        out[k] = -s / a0;
    }
    Some(out)
}

impl EndoTriple {
    /// `p` is truncated or zero-padded to `n` coefficients.
    pub fn new(u: Q, v: Q, p: &[Q], n: usize) -> Self {
        let mut p: Vec<Q> = p.iter().take(n).copied().collect();
        p.resize(n, Q::zero());
        EndoTriple { u, v, p }
    }

    pub fn from_ints(u: i64, v: i64, p: &[i64], n: usize) -> Self {
        let p: Vec<Q> = p.iter().map(|&c| Q::from_integer(c)).collect();
        EndoTriple::new(Q::from_integer(u), Q::from_integer(v), &p, n)
    }

    pub fn identity(n: usize) -> Self {
        EndoTriple::from_ints(1, 0, &[1], n)
    }

    pub fn zero(n: usize) -> Self {
        EndoTriple::from_ints(0, 0, &[], n)
    }

    /// The truncation order `N`.
    pub fn truncation(&self) -> usize {
        self.p.len()
    }

    pub fn p0(&self) -> Q {
        self.p.first().copied().unwrap_or_else(Q::zero)
    }

    pub fn p_is_zero(&self) -> bool {
        self.p.iter().all(Zero::is_zero)
    }

    /// Degree of `p`, or `None` for `p = 0`.
    pub fn p_degree(&self) -> Option<usize> {
        self.p.iter().rposition(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero() && self.p_is_zero()
    }

    fn same_truncation(&self, g: &EndoTriple) -> Result<()> {
        if self.truncation() != g.truncation() {
            return Err(Error::TruncationMismatch(self.truncation(), g.truncation()));
        }
        Ok(())
    }

    /// `self ∘ g`. Since `x² = xy = 0`, `q(y)·x = q(0)·x`.
    pub fn compose(&self, g: &EndoTriple) -> Result<EndoTriple> {
        self.same_truncation(g)?;
        Ok(EndoTriple {
            u: self.u * g.u,
            v: self.u * g.v + self.v * g.p0(),
            p: series_mul(&self.p, &g.p),
        })
    }

    pub fn add(&self, g: &EndoTriple) -> Result<EndoTriple> {
        self.same_truncation(g)?;
        Ok(EndoTriple {
            u: self.u + g.u,
            v: self.v + g.v,
            p: self.p.iter().zip(&g.p).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn neg(&self) -> EndoTriple {
        EndoTriple {
            u: -self.u,
            v: -self.v,
            p: self.p.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, g: &EndoTriple) -> Result<EndoTriple> {
        self.add(&g.neg())
    }

    pub fn scale(&self, c: Q) -> EndoTriple {
        EndoTriple {
            u: self.u * c,
            v: self.v * c,
            p: self.p.iter().map(|a| a * c).collect(),
        }
    }

    /// `self^k`.
    pub fn power(&self, k: u32) -> EndoTriple {
        (0..k).fold(EndoTriple::identity(self.truncation()), |acc, _| {
            self.compose(&acc).expect("same truncation")
        })
    }

    /// `self∘g − g∘self`.
    pub fn commutator(&self, g: &EndoTriple) -> Result<EndoTriple> {
        self.compose(g)?.sub(&g.compose(self)?)
    }

    /// Evaluates `f` on `a·x + q(y)·y`.
    pub fn apply(&self, e: &Element) -> Element {
        let q0 = e.q.first().copied().unwrap_or_else(Q::zero);
        Element {
            a: e.a * self.u + q0 * self.v,
            q: series_mul(&e.q, &self.p),
        }
    }

    /// Nilpotent iff `u = p = 0`; bijective iff `u ≠ 0` and `p(0) ≠ 0`.
    pub fn classify(&self) -> EndoClass {
        if self.u.is_zero() && self.p_is_zero() {
            EndoClass::Nilpotent
        } else if !self.u.is_zero() && !self.p0().is_zero() {
            EndoClass::Bijective
        } else {
            EndoClass::Other
        }
    }

    /// Solves `f(a·x + q·y) = (a·u + q(0)·v)·x + q·p·y = 0`. For `p ≠ 0`
    /// the series ring has no zero divisors, so `q = 0`.
    pub fn kernel(&self) -> KernelShape {
        match (self.u.is_zero(), self.v.is_zero(), self.p_is_zero()) {
            (true, _, false) => KernelShape::X,
            (false, _, false) => KernelShape::Zero,
            (true, true, true) => KernelShape::Whole,
            (true, false, true) => KernelShape::XY2,
            (false, _, true) => KernelShape::Line(-self.v / self.u),
        }
    }

    pub fn is_monic(&self) -> bool {
        self.kernel() == KernelShape::Zero
    }

    /// The two-sided inverse, when `u` and `p(0)` are units.
    pub fn inverse(&self) -> Option<EndoTriple> {
        if self.u.is_zero() {
            return None;
        }
        let q = series_inverse(&self.p)?;
        let u = self.u.recip();
        let v = -self.v * q[0] * u;
        Some(EndoTriple { u, v, p: q })
    }

    /// Length of the kernel, through the module invariants. `Line(c)` is
    /// the image of `(y)` under the automorphism `(1, c, 1)`, so it has the
    /// length of `(y)/J`.
    pub fn kernel_length(&self) -> crate::ordinal::Ordinal {
        kernel_module(&self.kernel()).length()
    }

    /// Whether the kernel has the length of `M`.
    pub fn kernel_is_open(&self) -> bool {
        self.kernel_length() == fixture_module().length()
    }
}

fn ideal(gens: &[&[u32]]) -> MonomialIdeal {
    MonomialIdeal::from_exps(2, gens).expect("two variables")
}

/// `M = (x, y)/(x², xy)`.
pub fn fixture_module() -> MonomialModule {
    MonomialModule::new(ideal(&[&[1, 0], &[0, 1]]), ideal(&[&[2, 0], &[1, 1]])).expect("nested")
}

/// A monomial submodule of `M` isomorphic to the kernel shape.
pub fn kernel_module(shape: &KernelShape) -> MonomialModule {
    let m = fixture_module();
    let sub = match shape {
        KernelShape::Zero => m.j().clone(),
        KernelShape::X => ideal(&[&[1, 0]]),
        KernelShape::XY2 => ideal(&[&[1, 0], &[0, 2]]),
        KernelShape::Whole => m.i().clone(),
        KernelShape::Line(_) => ideal(&[&[0, 1], &[2, 0]]),
    };
    m.submodule(sub).expect("between J and I")
}

fn fmt_q(q: &Q) -> String {
    if q.is_integer() {
        q.to_integer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for EndoTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (k, c) in self.p.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let mag = if c.abs().is_one() && k > 0 { String::new() } else { fmt_q(&c.abs()) };
            let var = match k {
                0 => String::new(),
                1 => "y".to_string(),
                _ => format!("y^{k}"),
            };
            let body = match (mag.is_empty(), var.is_empty()) {
                (true, _) => var,
                (false, true) => mag,
                (false, false) => format!("{mag}{var}"),
            };
            let sign = if c.is_negative() { "-" } else { "+" };
            terms.push((sign, body));
        }
        let p = if terms.is_empty() {
            "0".to_string()
        } else {
            let mut s = String::new();
            for (i, (sign, body)) in terms.iter().enumerate() {
                match (i, *sign) {
                    (0, "-") => s.push('-'),
                    (0, _) => {}
                    (_, sign) => s.push_str(&format!(" {sign} ")),
                }
                s.push_str(body);
            }
            s
        };
        write!(f, "({}, {}, {})", fmt_q(&self.u), fmt_q(&self.v), p)
    }
}

impl fmt::Display for KernelShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KernelShape::Zero => write!(f, "0"),
            KernelShape::X => write!(f, "(x)"),
            KernelShape::XY2 => write!(f, "(x, y^2)"),
            KernelShape::Whole => write!(f, "M"),
            KernelShape::Line(c) => write!(f, "(y + {}x)", fmt_q(c)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const N: usize = 8;

    fn t(u: i64, v: i64, p: &[i64]) -> EndoTriple {
        EndoTriple::from_ints(u, v, p, N)
    }

    #[test]
    fn composition_examples() {
        let f = t(2, 5, &[1, 1]);
        assert_eq!(f.compose(&EndoTriple::identity(N)).unwrap(), f);
        assert_eq!(EndoTriple::identity(N).compose(&f).unwrap(), f);
        assert_eq!(t(0, 3, &[]).compose(&t(0, -2, &[])).unwrap(), EndoTriple::zero(N));
        // u = p(0) makes (1, 0, 1 + y) commute with every nilpotent
        let a = t(0, 1, &[]);
        assert!(a.commutator(&t(1, 0, &[1, 1])).unwrap().is_zero());
        let c = a.commutator(&t(1, 0, &[2, 1])).unwrap();
        assert_eq!(c, t(0, 1, &[]));
        assert_eq!(c.classify(), EndoClass::Nilpotent);
        assert_eq!(
            t(1, 0, &[1]).compose(&t(1, 0, &[1, 1, 0, 0, 0, 0, 0, 0, 1])).unwrap(),
            t(1, 0, &[1, 1])
        );
        assert_eq!(
            f.compose(&EndoTriple::from_ints(1, 0, &[1], 4)),
            Err(Error::TruncationMismatch(8, 4))
        );
    }

    #[test]
    fn compose_matches_evaluation() {
        let (f, g) = (t(2, -1, &[1, 2]), t(-1, 2, &[0, 1, 1]));
        let fg = f.compose(&g).unwrap();
        for e in [Element::x(N), Element::y_pow(0, N), Element::y_pow(2, N)] {
            assert_eq!(fg.apply(&e), f.apply(&g.apply(&e)));
        }
    }

    #[test]
    fn classification_examples() {
        let n = t(0, 3, &[]);
        assert_eq!(n.classify(), EndoClass::Nilpotent);
        assert!(n.power(2).is_zero());
        assert_eq!(n.kernel(), KernelShape::XY2);
        assert!(n.kernel_is_open());

        let b = t(2, 5, &[1, 1]);
        assert_eq!(b.classify(), EndoClass::Bijective);
        let inv = b.inverse().unwrap();
        assert_eq!(b.compose(&inv).unwrap(), EndoTriple::identity(N));
        assert_eq!(inv.compose(&b).unwrap(), EndoTriple::identity(N));

        let o = t(0, 0, &[0, 1]);
        assert_eq!(o.classify(), EndoClass::Other);
        assert!(!o.is_monic());
        assert!(o.apply(&Element::x(N)).is_zero());
        assert_eq!(o.kernel(), KernelShape::X);
        assert!(o.inverse().is_none());
    }

    #[test]
    fn kernel_shapes_are_annihilated() {
        let f = t(2, 4, &[]);
        match f.kernel() {
            KernelShape::Line(c) => {
                let mut q = vec![Q::zero(); N];
                q[0] = Q::one();
                assert!(f.apply(&Element { a: c, q }).is_zero());
            }
            other => panic!("unexpected {other}"),
        }
        assert!(!f.kernel_is_open());
        assert_eq!(t(0, 0, &[]).kernel(), KernelShape::Whole);
        assert!(t(1, 0, &[1]).is_monic());
    }

    #[test]
    fn display() {
        assert_eq!(t(2, 5, &[1, 1]).to_string(), "(2, 5, 1 + y)");
        assert_eq!(t(0, -1, &[0, -1, 2]).to_string(), "(0, -1, -y + 2y^2)");
        assert_eq!(EndoTriple::zero(4).to_string(), "(0, 0, 0)");
    }
}
