//! Monomials and monomial ideals of `K[x_0, ..., x_{n-1}]`.
//!
//! Everything here is field-free combinatorics on exponent vectors: an ideal
//! is stored by its minimal generating set (an antichain under divisibility).

mod local;
mod pairs;
mod text;

use std::cmp::Ordering;
use std::fmt;

pub use local::{h0_length, localize};
pub use pairs::{standard_pairs, StandardPair};
pub use text::{parse_ideal, parse_monomial, IdealJson};

use crate::error::{Error, Result};
use crate::vars::default_names;

/// A monomial, given by its exponent vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn one(n: usize) -> Self {
        Monomial { exps: vec![0; n] }
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut exps = vec![0; n];
        exps[i] = 1;
        Monomial { exps }
    }

    pub fn n(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Bitmask of the variables occurring in the monomial.
    pub fn support_mask(&self) -> u64 {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0, |m, (i, _)| m | 1 << i)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.zip(other, |a, b| a + b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        self.zip(other, u32::max)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        self.zip(other, u32::min)
    }

    /// `self / gcd(self, other)`: the generator of `(self) : other`.
    pub fn colon(&self, other: &Monomial) -> Monomial {
        self.zip(other, |a, b| a.saturating_sub(b))
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|e| e * k).collect(),
        }
    }

    /// Componentwise minimum with a cap vector.
    pub fn capped(&self, caps: &[u32]) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(caps).map(|(&e, &c)| e.min(c)).collect(),
        }
    }

    fn zip(&self, other: &Monomial, f: impl Fn(u32, u32) -> u32) -> Monomial {
        debug_assert_eq!(self.n(), other.n());
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(&a, &b)| f(a, b)).collect(),
        }
    }

    pub fn display_with<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        MonomialDisplay { m: self, names }
    }
}

/// Degree first, then lexicographic with `x_0` largest.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

struct MonomialDisplay<'a> {
    m: &'a Monomial,
    names: &'a [String],
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.m.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(&self.names[i])?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_with(&default_names(self.n())).fmt(f)
    }
}

/// All monomials with `exps[i] < bounds[i]`; empty if any bound is zero.
pub fn box_monomials(bounds: &[u32]) -> impl Iterator<Item = Monomial> + '_ {
    let total: u64 = bounds.iter().map(|&b| b as u64).product();
    (0..total).map(move |mut idx| {
        let exps = bounds
            .iter()
            .map(|&b| {
                let e = (idx % b as u64) as u32;
                idx /= b as u64;
                e
            })
            .collect();
        Monomial { exps }
    })
}

/// All monomials in `n` variables of total degree at most `d`, by increasing degree.
pub fn monomials_up_to_degree(n: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for deg in 0..=d {
        let mut exps = vec![0u32; n];
        compositions(deg, 0, &mut exps, &mut out);
    }
    out
}

fn compositions(rest: u32, i: usize, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
    if i + 1 >= exps.len() {
        if let Some(last) = exps.last_mut() {
            *last = rest;
            out.push(Monomial::new(exps.clone()));
        } else if rest == 0 {
            out.push(Monomial::new(Vec::new()));
        }
        return;
    }
    for e in (0..=rest).rev() {
        exps[i] = e;
        compositions(rest - e, i + 1, exps, out);
    }
    exps[i] = 0;
}

/// A monomial ideal stored by its minimal generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// The ideal generated by `gens`, minimalized.
    pub fn new(n: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let gens: Vec<Monomial> = gens.into_iter().collect();
        if let Some(bad) = gens.iter().find(|g| g.n() != n) {
            return Err(Error::AmbientMismatch(bad.n(), n));
        }
        Ok(Self::from_gens_unchecked(n, gens))
    }

    pub(crate) fn from_gens_unchecked(n: usize, mut gens: Vec<Monomial>) -> Self {
        gens.sort();
        gens.dedup();
        let mut minimal: Vec<Monomial> = Vec::with_capacity(gens.len());
        for g in gens {
            if !minimal.iter().any(|h| h.divides(&g)) {
                minimal.push(g);
            }
        }
        MonomialIdeal { n, gens: minimal }
    }

    pub fn from_exps(n: usize, gens: &[&[u32]]) -> Result<Self> {
        Self::new(n, gens.iter().map(|e| Monomial::new(e.to_vec())))
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal { n, gens: Vec::new() }
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal {
            n,
            gens: vec![Monomial::one(n)],
        }
    }

    /// The ideal generated by the given variables.
    pub fn from_vars(n: usize, vars: &[usize]) -> Self {
        Self::from_gens_unchecked(n, vars.iter().map(|&i| Monomial::var(n, i)).collect())
    }

    /// `m^d`, all monomials of degree `d`.
    pub fn maximal_power(n: usize, d: u32) -> Self {
        Self::from_gens_unchecked(
            n,
            monomials_up_to_degree(n, d)
                .into_iter()
                .filter(|m| m.degree() == d)
                .collect(),
        )
    }

    pub fn principal(m: Monomial) -> Self {
        MonomialIdeal {
            n: m.n(),
            gens: vec![m],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.first().is_some_and(Monomial::is_one)
    }

    /// Largest exponent of each variable among the generators.
    pub fn max_exponents(&self) -> Vec<u32> {
        let mut out = vec![0; self.n];
        for g in &self.gens {
            for (o, &e) in out.iter_mut().zip(g.exps()) {
                *o = (*o).max(e);
            }
        }
        out
    }

    pub fn max_degree(&self) -> u32 {
        self.gens.iter().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn contains_monomial(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// `self ⊇ other`.
    pub fn contains(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains_monomial(g))
    }

    fn check(&self, other: &MonomialIdeal) -> Result<()> {
        if self.n != other.n {
            return Err(Error::AmbientMismatch(self.n, other.n));
        }
        Ok(())
    }

    /// `self : m`.
    pub fn colon_monomial(&self, m: &Monomial) -> Result<MonomialIdeal> {
        if m.n() != self.n {
            return Err(Error::AmbientMismatch(m.n(), self.n));
        }
        Ok(Self::from_gens_unchecked(
            self.n,
            self.gens.iter().map(|g| g.colon(m)).collect(),
        ))
    }

    /// `self : B`, the intersection of `self : g` over the generators of `B`.
    pub fn colon(&self, b: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check(b)?;
        let mut gens = b.gens.iter();
        let first = gens.next().ok_or(Error::ColonByZero)?;
        let mut out = self.colon_monomial(first)?;
        for g in gens {
            out = out.intersect(&self.colon_monomial(g)?)?;
        }
        Ok(out)
    }

    /// `self : B^∞`.
    pub fn saturate(&self, b: &MonomialIdeal) -> Result<MonomialIdeal> {
        let mut cur = self.clone();
        loop {
            let next = cur.colon(b)?;
            if next == cur {
                return Ok(cur);
            }
            cur = next;
        }
    }

    /// `self : m^∞`.
    pub fn saturate_monomial(&self, m: &Monomial) -> Result<MonomialIdeal> {
        self.saturate(&MonomialIdeal::principal(m.clone()))
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check(other)?;
        let gens = self
            .gens
            .iter()
            .flat_map(|a| other.gens.iter().map(move |b| a.lcm(b)))
            .collect();
        Ok(Self::from_gens_unchecked(self.n, gens))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check(other)?;
        Ok(Self::from_gens_unchecked(
            self.n,
            self.gens.iter().chain(&other.gens).cloned().collect(),
        ))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check(other)?;
        let gens = self
            .gens
            .iter()
            .flat_map(|a| other.gens.iter().map(move |b| a.mul(b)))
            .collect();
        Ok(Self::from_gens_unchecked(self.n, gens))
    }

    /// `m·self`.
    pub fn scale(&self, m: &Monomial) -> MonomialIdeal {
        MonomialIdeal {
            n: self.n,
            gens: self.gens.iter().map(|g| g.mul(m)).collect(),
        }
    }

    pub fn display_with<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        IdealDisplay { ideal: self, names }
    }
}

struct IdealDisplay<'a> {
    ideal: &'a MonomialIdeal,
    names: &'a [String],
}

impl fmt::Display for IdealDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ideal.is_zero() {
            return f.write_str("0");
        }
        for (i, g) in self.ideal.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            g.display_with(self.names).fmt(f)?;
        }
        Ok(())
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_with(&default_names(self.n)).fmt(f)
    }
}
