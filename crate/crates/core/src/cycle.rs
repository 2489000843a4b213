//! Cycles on monomial primes and their ordinal image.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ordinal::Ordinal;
use crate::vars::default_names;

/// The prime ideal generated by a set of variables of `K[x_0, ..., x_{n-1}]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialPrime {
    n: usize,
    gens: Vec<usize>,
}

impl MonomialPrime {
    /// Builds the prime on the given variable indices (deduplicated and sorted).
    pub fn new(n: usize, gens: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut gens: Vec<usize> = gens.into_iter().collect();
        gens.sort_unstable();
        gens.dedup();
        if let Some(&bad) = gens.iter().find(|&&g| g >= n) {
            return Err(Error::AmbientMismatch(bad + 1, n));
        }
        Ok(MonomialPrime { n, gens })
    }

    /// The prime whose generators are the variables flagged in `mask` (bit i = variable i).
    pub fn from_mask(n: usize, mask: u64) -> Self {
        MonomialPrime {
            n,
            gens: (0..n).filter(|i| mask >> i & 1 == 1).collect(),
        }
    }

    pub fn zero(n: usize) -> Self {
        MonomialPrime { n, gens: Vec::new() }
    }

    pub fn maximal(n: usize) -> Self {
        MonomialPrime {
            n,
            gens: (0..n).collect(),
        }
    }

    /// All `2^n` monomial primes, ordered by generator set.
    pub fn all(n: usize) -> Vec<MonomialPrime> {
        let mut primes: Vec<_> = (0..1u64 << n).map(|m| Self::from_mask(n, m)).collect();
        primes.sort();
        primes
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[usize] {
        &self.gens
    }

    pub fn mask(&self) -> u64 {
        self.gens.iter().fold(0, |m, &g| m | 1 << g)
    }

    pub fn contains_var(&self, i: usize) -> bool {
        self.gens.binary_search(&i).is_ok()
    }

    /// Variables not among the generators.
    pub fn complement(&self) -> Vec<usize> {
        (0..self.n).filter(|&i| !self.contains_var(i)).collect()
    }

    /// Krull dimension of `R/P`.
    pub fn dim(&self) -> usize {
        self.n - self.gens.len()
    }

    pub fn is_subset_of(&self, other: &MonomialPrime) -> bool {
        self.mask() & !other.mask() == 0
    }

    pub fn display_with<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        PrimeDisplay { prime: self, names }
    }
}

struct PrimeDisplay<'a> {
    prime: &'a MonomialPrime,
    names: &'a [String],
}

impl fmt::Display for PrimeDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.prime.gens.is_empty() {
            return f.write_str("[0]");
        }
        let names: Vec<&str> = self.prime.gens.iter().map(|&g| self.names[g].as_str()).collect();
        write!(f, "[{}]", names.join(","))
    }
}

impl fmt::Display for MonomialPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_with(&default_names(self.n)).fmt(f)
    }
}

/// A formal sum of monomial primes with positive natural coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cycle {
    n: usize,
    terms: BTreeMap<MonomialPrime, BigUint>,
}

impl Cycle {
    pub fn zero(n: usize) -> Self {
        Cycle {
            n,
            terms: BTreeMap::new(),
        }
    }

    /// The coefficient-one cycle on a set of primes.
    pub fn binary(n: usize, support: impl IntoIterator<Item = MonomialPrime>) -> Result<Self> {
        let mut cycle = Cycle::zero(n);
        for p in support {
            if p.n != n {
                return Err(Error::AmbientMismatch(p.n, n));
            }
            cycle.terms.insert(p, BigUint::one());
        }
        Ok(cycle)
    }

    /// Adds `coeff·[prime]`.
    pub fn add_term(&mut self, prime: MonomialPrime, coeff: impl Into<BigUint>) -> Result<()> {
        if prime.n != self.n {
            return Err(Error::AmbientMismatch(prime.n, self.n));
        }
        let coeff = coeff.into();
        if !coeff.is_zero() {
            *self.terms.entry(prime).or_default() += coeff;
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeff(&self, prime: &MonomialPrime) -> BigUint {
        self.terms.get(prime).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MonomialPrime, &BigUint)> {
        self.terms.iter()
    }

    pub fn support(&self) -> Vec<MonomialPrime> {
        self.terms.keys().cloned().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of the coefficients.
    pub fn degree(&self) -> BigUint {
        self.terms.values().sum()
    }

    pub fn sum(&self, other: &Cycle) -> Result<Cycle> {
        self.check_ambient(other)?;
        let mut out = self.clone();
        for (p, c) in &other.terms {
            *out.terms.entry(p.clone()).or_default() += c;
        }
        Ok(out)
    }

    /// Termwise `≤`.
    pub fn is_weaker_than(&self, other: &Cycle) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(self
            .terms
            .iter()
            .all(|(p, c)| other.terms.get(p).is_some_and(|d| c <= d)))
    }

    /// Always true: coefficients are natural numbers by construction.
    pub fn is_effective(&self) -> bool {
        true
    }

    pub fn is_binary(&self) -> bool {
        self.terms.values().all(One::is_one)
    }

    /// The ordinal `⊕ a_i ω^{dim P_i}`.
    pub fn binord(&self) -> Ordinal {
        self.terms
            .iter()
            .fold(Ordinal::zero(), |acc, (p, c)| {
                acc.shuffle_sum(&Ordinal::term(c.clone(), p.dim()))
            })
    }

    fn check_ambient(&self, other: &Cycle) -> Result<()> {
        if self.n != other.n {
            return Err(Error::AmbientMismatch(self.n, other.n));
        }
        Ok(())
    }

    pub fn display_with<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        CycleDisplay { cycle: self, names }
    }
}

struct CycleDisplay<'a> {
    cycle: &'a Cycle,
    names: &'a [String],
}

impl fmt::Display for CycleDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cycle.is_zero() {
            return f.write_str("0");
        }
        for (i, (p, c)) in self.cycle.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}*{}", p.display_with(self.names))?;
        }
        Ok(())
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_with(&default_names(self.n)).fmt(f)
    }
}

#[derive(Serialize, Deserialize)]
struct CycleJson {
    n: usize,
    terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    prime: Vec<usize>,
    coeff: u64,
}

impl Serialize for Cycle {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let terms = self
            .terms
            .iter()
            .map(|(p, c)| {
                let coeff = c
                    .to_u64()
                    .ok_or_else(|| serde::ser::Error::custom("cycle coefficient exceeds u64"))?;
                Ok(TermJson {
                    prime: p.gens.clone(),
                    coeff,
                })
            })
            .collect::<std::result::Result<Vec<_>, S::Error>>()?;
        CycleJson { n: self.n, terms }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Cycle {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = CycleJson::deserialize(deserializer)?;
        let mut cycle = Cycle::zero(raw.n);
        for t in raw.terms {
            let prime = MonomialPrime::new(raw.n, t.prime).map_err(D::Error::custom)?;
            cycle.add_term(prime, t.coeff).map_err(D::Error::custom)?;
        }
        Ok(cycle)
    }
}
