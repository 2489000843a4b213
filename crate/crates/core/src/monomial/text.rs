use serde::{Deserialize, Serialize};

use super::{Monomial, MonomialIdeal};
use crate::error::{Error, Result};

/// Parses `x^2*y`, `1`, or `x y^3` (juxtaposition also multiplies).
pub fn parse_monomial(s: &str, names: &[String]) -> Result<Monomial> {
    parse_monomial_at(s, 0, names)
}

fn parse_monomial_at(s: &str, base: usize, names: &[String]) -> Result<Monomial> {
    let mut exps = vec![0u32; names.len()];
    let bytes = s.as_bytes();
    let mut i = 0;
    let mut saw_factor = false;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_whitespace() || (c == '*' && saw_factor) {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            if &s[start..i] != "1" {
                return Err(Error::parse(base + start, "coefficients other than 1 are not monomials"));
            }
            saw_factor = true;
            continue;
        }
        if !(c.is_ascii_alphabetic() || c == '_') {
            return Err(Error::parse(base + i, format!("unexpected '{c}'")));
        }
        let start = i;
        while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
            i += 1;
        }
        let name = &s[start..i];
        let var = names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::parse(base + start, format!("unknown variable '{name}'")))?;
        while i < bytes.len() && (bytes[i] as char).is_whitespace() {
            i += 1;
        }
        let mut exp = 1u32;
        if i < bytes.len() && bytes[i] == b'^' {
            i += 1;
            while i < bytes.len() && (bytes[i] as char).is_whitespace() {
                i += 1;
            }
            let es = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            exp = s[es..i]
                .parse()
                .map_err(|_| Error::parse(base + es, "expected an exponent"))?;
        }
        exps[var] += exp;
        saw_factor = true;
    }
    if !saw_factor {
        return Err(Error::parse(base + s.len(), "empty monomial"));
    }
    Ok(Monomial::new(exps))
}

/// Parses a comma-separated generator list. The empty string (or `0`) is the
/// zero ideal and `1` the unit ideal.
pub fn parse_ideal(s: &str, names: &[String]) -> Result<MonomialIdeal> {
    let n = names.len();
    if s.trim().is_empty() || s.trim() == "0" {
        return Ok(MonomialIdeal::zero(n));
    }
    let mut gens = Vec::new();
    let mut offset = 0;
    for piece in s.split(',') {
        gens.push(parse_monomial_at(piece, offset, names)?);
        offset += piece.len() + 1;
    }
    MonomialIdeal::new(n, gens)
}

/// JSON form `{"vars": ["x","y"], "gens": [[2,0],[1,1]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealJson {
    pub vars: Vec<String>,
    pub gens: Vec<Vec<u32>>,
}

impl IdealJson {
    pub fn new(ideal: &MonomialIdeal, names: &[String]) -> Self {
        IdealJson {
            vars: names.to_vec(),
            gens: ideal.gens().iter().map(|g| g.exps().to_vec()).collect(),
        }
    }

    pub fn to_ideal(&self) -> Result<MonomialIdeal> {
        let n = self.vars.len();
        let gens = self.gens.iter().map(|g| Monomial::new(g.clone()));
        MonomialIdeal::new(n, gens)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vars::default_names;

    #[test]
    fn parses_products_and_powers() {
        let names = default_names(3);
        assert_eq!(
            parse_monomial("x^2*y z", &names).unwrap().exps(),
            &[2, 1, 1]
        );
        assert_eq!(parse_monomial("1", &names).unwrap(), Monomial::one(3));
        assert_eq!(parse_monomial("x*x", &names).unwrap().exps(), &[2, 0, 0]);
    }

    #[test]
    fn reports_locations() {
        let names = default_names(2);
        assert_eq!(
            parse_ideal("x^2, q*y", &names),
            Err(Error::parse(5, "unknown variable 'q'"))
        );
        assert!(matches!(parse_ideal("x^, y", &names), Err(Error::Parse { pos: 2, .. })));
        assert!(parse_ideal("x,,y", &names).is_err());
        assert!(parse_monomial("2*x", &names).is_err());
    }

    #[test]
    fn zero_and_unit() {
        let names = default_names(2);
        assert!(parse_ideal("", &names).unwrap().is_zero());
        assert!(parse_ideal("  ", &names).unwrap().is_zero());
        assert!(parse_ideal("1", &names).unwrap().is_unit());
    }

    #[test]
    fn json_round_trip() {
        let names = default_names(2);
        let i = parse_ideal("x^2, x*y", &names).unwrap();
        let json = serde_json::to_string(&IdealJson::new(&i, &names)).unwrap();
        assert_eq!(json, r#"{"vars":["x","y"],"gens":[[2,0],[1,1]]}"#);
        let back: IdealJson = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_ideal().unwrap(), i);
    }
}
