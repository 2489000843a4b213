use serde::{Deserialize, Serialize};

use super::MonomialModule;
use crate::error::{Error, Result};
use crate::monomial::{parse_ideal, IdealJson, MonomialIdeal};
use crate::vars::is_valid_name;

/// Parses `vars: x,y ; I: 1 ; J: x^2, x*y`; newlines also separate sections. `I` defaults to the unit ideal
/// and `J` to the zero ideal. Returns the module and the variable names.
pub fn parse_module(s: &str) -> Result<(MonomialModule, Vec<String>)> {
    let mut names: Option<Vec<String>> = None;
    let mut i_text: Option<(usize, &str)> = None;
    let mut j_text: Option<(usize, &str)> = None;
    let mut offset = 0;
    for section in s.split([';', '\n']) {
        let here = offset;
        offset += section.len() + 1;
        if section.trim().is_empty() {
            continue;
        }
        let colon = section
            .find(':')
            .ok_or_else(|| Error::parse(here, "expected 'key: value'"))?;
        let key = section[..colon].trim();
        let value_at = here + colon + 1;
        let value = &section[colon + 1..];
        match key {
            "vars" => names = Some(parse_vars(value, value_at)?),
            "I" => i_text = Some((value_at, value)),
            "J" => j_text = Some((value_at, value)),
            other => return Err(Error::parse(here, format!("unknown key '{other}'"))),
        }
    }
    let names = names.ok_or_else(|| Error::parse(0, "missing 'vars:' section"))?;
    let ideal = |t: Option<(usize, &str)>, default: MonomialIdeal| -> Result<MonomialIdeal> {
        match t {
            None => Ok(default),
            Some((at, text)) => parse_ideal(text, &names).map_err(|e| match e {
                Error::Parse { pos, msg } => Error::Parse { pos: pos + at, msg },
                other => other,
            }),
        }
    };
    let n = names.len();
    let i = ideal(i_text, MonomialIdeal::unit(n))?;
    let j = ideal(j_text, MonomialIdeal::zero(n))?;
    Ok((MonomialModule::new(i, j)?, names))
}

/// Parses a comma-separated variable list.
pub fn parse_vars(s: &str, at: usize) -> Result<Vec<String>> {
    let mut names: Vec<String> = Vec::new();
    if s.trim().is_empty() {
        return Ok(names);
    }
    let mut offset = at;
    for piece in s.split(',') {
        let name = piece.trim();
        if !is_valid_name(name) {
            return Err(Error::parse(offset, format!("invalid variable name '{name}'")));
        }
        if names.iter().any(|n| n == name) {
            return Err(Error::parse(offset, format!("duplicate variable '{name}'")));
        }
        names.push(name.to_string());
        offset += piece.len() + 1;
    }
    Ok(names)
}

/// JSON form: the two ideals in their JSON form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleJson {
    #[serde(rename = "I")]
    pub i: IdealJson,
    #[serde(rename = "J")]
    pub j: IdealJson,
}

impl ModuleJson {
    pub fn new(m: &MonomialModule, names: &[String]) -> Self {
        ModuleJson {
            i: IdealJson::new(m.i(), names),
            j: IdealJson::new(m.j(), names),
        }
    }

    pub fn to_module(&self) -> Result<(MonomialModule, Vec<String>)> {
        if self.i.vars != self.j.vars {
            return Err(Error::AmbientMismatch(self.i.vars.len(), self.j.vars.len()));
        }
        let m = MonomialModule::new(self.i.to_ideal()?, self.j.to_ideal()?)?;
        Ok((m, self.i.vars.clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_module_text() {
        let (m, names) = parse_module("vars: x,y ; I: 1 ; J: x^2, x*y").unwrap();
        assert_eq!(names, vec!["x", "y"]);
        assert!(m.i().is_unit());
        assert_eq!(m.j().gens().len(), 2);
        let (m2, _) = parse_module("vars: x,y ; J: x^2, x*y").unwrap();
        assert_eq!(m, m2);
        let (m3, _) = parse_module("vars: a,b ; I: a, b ; J: a^2, a*b").unwrap();
        assert_eq!(m3.length(), "w + 1".parse().unwrap());
    }

    #[test]
    fn newlines_separate_sections() {
        let (m, _) = parse_module("vars: x,y\nJ: x^2, x*y\n").unwrap();
        assert_eq!(m, parse_module("vars: x,y ; J: x^2, x*y").unwrap().0);
        assert!(matches!(
            parse_module("vars: x,y\nJ: x^2, q"),
            Err(Error::Parse { pos: 18, .. })
        ));
    }

    #[test]
    fn reports_errors() {
        assert!(matches!(
            parse_module("vars: x,y ; J: x^2, z"),
            Err(Error::Parse { pos: 20, .. })
        ));
        assert!(parse_module("J: x").is_err());
        assert!(parse_module("vars: x,x").is_err());
        assert!(parse_module("vars: x,y ; K: x").is_err());
        assert_eq!(
            parse_module("vars: x,y ; I: x ; J: y").map(|_| ()),
            Err(Error::NotSubquotient)
        );
    }

    #[test]
    fn json_round_trip() {
        let (m, names) = parse_module("vars: x,y ; I: x, y ; J: x^2, x*y").unwrap();
        let json = serde_json::to_string(&ModuleJson::new(&m, &names)).unwrap();
        assert_eq!(
            json,
            r#"{"I":{"vars":["x","y"],"gens":[[1,0],[0,1]]},"J":{"vars":["x","y"],"gens":[[2,0],[1,1]]}}"#
        );
        let back: ModuleJson = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_module().unwrap(), (m, names));
    }
}
