//! Ordinals below ω^ω in Cantor normal form.
//!
//! An [`Ordinal`] is stored as its coefficient vector `a_0, a_1, ..., a_d`
//! (index = exponent of ω) with trailing zeros stripped, so equal ordinals have
//! identical representations. Two orders are provided: the usual total order
//! (`Ord`, lexicographic from the top exponent down) and the coefficientwise
//! partial order [`Ordinal::is_weaker_than`]. Meets and joins are taken for the
//! partial order.
//!
//! Text form: `w^2 + 3w + 1` (descending exponents, coefficient 1 elided,
//! `0` for zero). JSON form: `[[2,1],[1,3],[0,1]]`, pairs `[exponent, coefficient]`
//! in descending exponent order.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Ordinal {
    coeffs: Vec<BigUint>,
}

impl Ordinal {
    pub fn zero() -> Self {
        Ordinal { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::finite(1u32)
    }

    /// `ω`.
    pub fn omega() -> Self {
        Self::omega_pow(1)
    }

    /// `ω^e`.
    pub fn omega_pow(e: usize) -> Self {
        Self::term(1u32, e)
    }

    /// `c·ω^e`.
    pub fn term(c: impl Into<BigUint>, e: usize) -> Self {
        let mut coeffs = vec![BigUint::zero(); e + 1];
        coeffs[e] = c.into();
        Self::from_coeffs(coeffs)
    }

    pub fn finite(n: impl Into<BigUint>) -> Self {
        Self::from_coeffs(vec![n.into()])
    }

    /// Builds an ordinal from coefficients indexed by exponent; trailing zeros are stripped.
    pub fn from_coeffs(mut coeffs: Vec<BigUint>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Ordinal { coeffs }
    }

    /// Convenience constructor from small coefficients, lowest exponent first.
    pub fn from_u64s(coeffs: &[u64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigUint::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    /// Coefficient of `ω^e` (zero beyond the degree).
    pub fn coeff(&self, e: usize) -> BigUint {
        self.coeffs.get(e).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// The natural number value of a finite ordinal.
    pub fn as_natural(&self) -> Option<BigUint> {
        match self.coeffs.len() {
            0 => Some(BigUint::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    /// Exponents with nonzero coefficient, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    pub fn degree(&self) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroOrdinal);
        }
        Ok(self.coeffs.len() - 1)
    }

    pub fn order(&self) -> Result<usize> {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .ok_or(Error::ZeroOrdinal)
    }

    /// Sum of all Cantor-normal-form coefficients.
    pub fn valence(&self) -> BigUint {
        self.coeffs.iter().sum()
    }

    pub fn is_binary(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero() || c.is_one())
    }

    /// The (non-commutative) ordinal sum `self + other`.
    pub fn ord_sum(&self, other: &Ordinal) -> Ordinal {
        let Ok(e) = other.degree() else {
            return self.clone();
        };
        let mut coeffs = other.coeffs.clone();
        coeffs[e] += self.coeff(e);
        coeffs.extend(self.coeffs.iter().skip(e + 1).cloned());
        Ordinal::from_coeffs(coeffs)
    }

    /// The natural (shuffle) sum: coefficientwise addition.
    pub fn shuffle_sum(&self, other: &Ordinal) -> Ordinal {
        self.zip_with(other, |a, b| a + b)
    }

    /// `self ⪯ other`: every coefficient of `self` is at most the matching one of `other`.
    pub fn is_weaker_than(&self, other: &Ordinal) -> bool {
        self.coeffs.len() <= other.coeffs.len()
            && self.coeffs.iter().zip(&other.coeffs).all(|(a, b)| a <= b)
    }

    /// Greatest lower bound for `⪯` (coefficientwise minimum).
    pub fn meet(&self, other: &Ordinal) -> Ordinal {
        self.zip_with(other, |a, b| a.min(b).clone())
    }

    /// Least upper bound for `⪯` (coefficientwise maximum).
    pub fn join(&self, other: &Ordinal) -> Ordinal {
        self.zip_with(other, |a, b| a.max(b).clone())
    }

    /// The unique `γ` with `self ⊕ γ = other`, if `self ⪯ other`.
    pub fn shuffle_difference(&self, other: &Ordinal) -> Option<Ordinal> {
        if !self.is_weaker_than(other) {
            return None;
        }
        Some(other.zip_with(self, |b, a| b - a))
    }

    /// Splits into the part with exponents `> e` and the part with exponents `≤ e`.
    pub fn split(&self, e: usize) -> (Ordinal, Ordinal) {
        let cut = (e + 1).min(self.coeffs.len());
        let low = Ordinal::from_coeffs(self.coeffs[..cut].to_vec());
        let mut high = self.coeffs.clone();
        high[..cut].iter_mut().for_each(|c| *c = BigUint::zero());
        (Ordinal::from_coeffs(high), low)
    }

    /// `n·α`, the n-fold sum (coefficientwise scaling).
    pub fn nat_multiple(&self, n: impl Into<BigUint>) -> Ordinal {
        let n = n.into();
        Ordinal::from_coeffs(self.coeffs.iter().map(|c| c * &n).collect())
    }

    fn zip_with(&self, other: &Ordinal, f: impl Fn(&BigUint, &BigUint) -> BigUint) -> Ordinal {
        let zero = BigUint::zero();
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| {
                f(
                    self.coeffs.get(i).unwrap_or(&zero),
                    other.coeffs.get(i).unwrap_or(&zero),
                )
            })
            .collect();
        Ordinal::from_coeffs(coeffs)
    }

    /// `(exponent, coefficient)` pairs with nonzero coefficient, descending exponent.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigUint)> {
        self.coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
    }
}

impl Ord for Ordinal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl PartialOrd for Ordinal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (e, c.is_one()) {
                (0, _) => write!(f, "{c}")?,
                (1, true) => f.write_str("w")?,
                (1, false) => write!(f, "{c}w")?,
                (_, true) => write!(f, "w^{e}")?,
                (_, false) => write!(f, "{c}w^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ordinal({self})")
    }
}

impl FromStr for Ordinal {
    type Err = Error;

    /// Parses the canonical text form; exponents must be strictly descending.
    fn from_str(s: &str) -> Result<Self> {
        let mut p = TermParser {
            chars: s.char_indices().collect(),
            pos: 0,
        };
        let mut coeffs: Vec<BigUint> = Vec::new();
        let mut last_exp: Option<usize> = None;
        loop {
            p.skip_ws();
            let start = p.offset();
            let (c, e) = p.term()?;
            if let Some(prev) = last_exp {
                if e >= prev {
                    return Err(Error::parse(start, "exponents must be strictly descending"));
                }
            }
            last_exp = Some(e);
            if coeffs.len() <= e {
                coeffs.resize(e + 1, BigUint::zero());
            }
            coeffs[e] = c;
            p.skip_ws();
            match p.peek() {
                None => break,
                Some('+') => p.pos += 1,
                Some(other) => {
                    return Err(Error::parse(p.offset(), format!("unexpected '{other}'")));
                }
            }
        }
        Ok(Ordinal::from_coeffs(coeffs))
    }
}

struct TermParser {
    chars: Vec<(usize, char)>,
    pos: usize,
}

impl TermParser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn offset(&self) -> usize {
        self.chars
            .get(self.pos)
            .map(|&(i, _)| i)
            .unwrap_or_else(|| self.chars.last().map_or(0, |&(i, c)| i + c.len_utf8()))
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn number(&mut self) -> Option<BigUint> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        let digits: String = self.chars[start..self.pos].iter().map(|&(_, c)| c).collect();
        digits.parse().ok()
    }

    fn term(&mut self) -> Result<(BigUint, usize)> {
        let coeff = self.number();
        self.skip_ws();
        if coeff.is_some() && self.peek() == Some('*') {
            self.pos += 1;
            self.skip_ws();
        }
        if !matches!(self.peek(), Some('w' | 'ω')) {
            return coeff
                .map(|c| (c, 0))
                .ok_or_else(|| Error::parse(self.offset(), "expected a coefficient or 'w'"));
        }
        self.pos += 1;
        self.skip_ws();
        let exp = if self.peek() == Some('^') {
            self.pos += 1;
            self.skip_ws();
            let at = self.offset();
            self.number()
                .and_then(|e| e.to_usize())
                .ok_or_else(|| Error::parse(at, "expected an exponent"))?
        } else {
            1
        };
        let coeff = coeff.unwrap_or_else(BigUint::one);
        if coeff.is_zero() {
            return Err(Error::parse(self.offset(), "zero coefficient on a w-term"));
        }
        Ok((coeff, exp))
    }
}

impl Serialize for Ordinal {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.support().len()))?;
        for (e, c) in self.terms() {
            match c.to_u64() {
                Some(small) => seq.serialize_element(&(e, small))?,
                None => seq.serialize_element(&(e, c.to_string()))?,
            }
        }
        seq.end()
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum CoeffRepr {
    Small(u64),
    Big(String),
}

impl<'de> Deserialize<'de> for Ordinal {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let pairs: Vec<(usize, CoeffRepr)> = Vec::deserialize(deserializer)?;
        let mut coeffs: Vec<BigUint> = Vec::new();
        let mut last: Option<usize> = None;
        for (e, c) in pairs {
            if last.is_some_and(|l| e >= l) {
                return Err(de::Error::custom("exponents must be strictly descending"));
            }
            last = Some(e);
            let c = match c {
                CoeffRepr::Small(v) => BigUint::from(v),
                CoeffRepr::Big(s) => s.parse().map_err(de::Error::custom)?,
            };
            if coeffs.len() <= e {
                coeffs.resize(e + 1, BigUint::zero());
            }
            coeffs[e] = c;
        }
        Ok(Ordinal::from_coeffs(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn o(s: &str) -> Ordinal {
        s.parse().unwrap()
    }

    #[test]
    fn ordinal_sum_absorbs_lower_terms() {
        assert_eq!(Ordinal::one().ord_sum(&Ordinal::omega()), Ordinal::omega());
        assert_eq!(Ordinal::omega().ord_sum(&Ordinal::one()), o("w + 1"));
        assert_eq!(Ordinal::zero().ord_sum(&o("2w^2 + 3")), o("2w^2 + 3"));
        assert_eq!(o("w^2 + 5w + 2").ord_sum(&o("3w + 1")), o("w^2 + 8w + 1"));
        assert_eq!(o("w + 4").ord_sum(&Ordinal::zero()), o("w + 4"));
    }

    #[test]
    fn shuffle_sum_examples() {
        assert_eq!(o("w + 1").shuffle_sum(&o("w")), o("2w + 1"));
        assert_eq!(Ordinal::omega_pow(3).shuffle_sum(&Ordinal::omega_pow(3)), o("2w^3"));
        assert_eq!(o("w^2 + 1").shuffle_sum(&Ordinal::zero()), o("w^2 + 1"));
    }

    #[test]
    fn total_order_examples() {
        assert!(o("w") <= o("w + 1"));
        assert!(o("2w") > o("w + 5"));
        assert!(o("w^2") > o("100w + 100"));
        assert!(o("3w + 2") <= o("3w + 2"));
    }

    #[test]
    fn weaker_examples() {
        assert!(o("w").is_weaker_than(&o("w + 1")));
        assert!(!o("2w").is_weaker_than(&o("w + 1")));
        assert!(!o("w + 1").is_weaker_than(&o("2w")));
        assert!(Ordinal::zero().is_weaker_than(&o("w^3")));
        assert!(!o("w^2").is_weaker_than(&o("w")));
    }

    #[test]
    fn meet_join_examples() {
        assert_eq!(o("2w + 1").meet(&o("w + 3")), o("w + 1"));
        assert_eq!(o("2w + 1").join(&o("w + 3")), o("2w + 3"));
        assert_eq!(o("w^2 + 2").meet(&o("w^2 + 2")), o("w^2 + 2"));
        assert_eq!(o("w^2 + 2").join(&Ordinal::zero()), o("w^2 + 2"));
        assert_eq!(o("w^2").meet(&o("w")), Ordinal::zero());
    }

    #[test]
    fn split_examples() {
        assert_eq!(o("w^2 + 3w + 5").split(1), (o("w^2"), o("3w + 5")));
        assert_eq!(o("w^2 + 1").split(2), (Ordinal::zero(), o("w^2 + 1")));
        assert_eq!(o("w^2 + 1").split(7), (Ordinal::zero(), o("w^2 + 1")));
        assert_eq!(o("w + 1").split(0), (o("w"), o("1")));
    }

    #[test]
    fn support_statistics() {
        let a = o("w^2 + 2w");
        assert_eq!(a.degree(), Ok(2));
        assert_eq!(a.order(), Ok(1));
        assert_eq!(a.valence(), BigUint::from(3u32));
        assert!(!a.is_binary());
        let b = o("w + 1");
        assert!(b.is_binary());
        assert_eq!(b.valence(), BigUint::from(2u32));
        assert_eq!(Ordinal::omega().nat_multiple(2u32), o("2w"));
        assert_eq!(a.support(), vec![1, 2]);
    }

    #[test]
    fn zero_has_no_support() {
        assert_eq!(Ordinal::zero().degree(), Err(Error::ZeroOrdinal));
        assert_eq!(Ordinal::zero().order(), Err(Error::ZeroOrdinal));
        assert!(Ordinal::zero().is_binary());
    }

    #[test]
    fn text_form() {
        assert_eq!(o("w^2 + 3w + 1").to_string(), "w^2 + 3w + 1");
        assert_eq!(Ordinal::zero().to_string(), "0");
        assert_eq!(o("2*ω^3+w").to_string(), "2w^3 + w");
        assert_eq!(o("0"), Ordinal::zero());
        assert!("w + w^2".parse::<Ordinal>().is_err());
        assert!("w +".parse::<Ordinal>().is_err());
        assert!("3x".parse::<Ordinal>().is_err());
        let big = o("123456789012345678901234567890w");
        assert_eq!(big.to_string(), "123456789012345678901234567890w");
    }

    #[test]
    fn json_form() {
        let a = o("w^2 + 3w + 1");
        let json = serde_json::to_string(&a).unwrap();
        assert_eq!(json, "[[2,1],[1,3],[0,1]]");
        assert_eq!(serde_json::from_str::<Ordinal>(&json).unwrap(), a);
        assert_eq!(serde_json::to_string(&Ordinal::zero()).unwrap(), "[]");
        let big = o("123456789012345678901234567890");
        let json = serde_json::to_string(&big).unwrap();
        assert_eq!(serde_json::from_str::<Ordinal>(&json).unwrap(), big);
        assert!(serde_json::from_str::<Ordinal>("[[0,1],[1,1]]").is_err());
    }
}
