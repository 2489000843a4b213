//! One document model rendered both as text and as JSON, so the two formats
//! always carry the same data.

use num_traits::ToPrimitive;
use ordlen::module::ModuleJson;
use ordlen::{Cycle, Monomial, MonomialModule, MonomialPrime, Ordinal};
use serde_json::{json, Map, Value};

pub enum Field {
    Ordinal(Ordinal),
    Cycle(Cycle),
    Prime(MonomialPrime),
    Primes(Vec<MonomialPrime>),
    Module(MonomialModule),
    Monomial(Monomial),
    Bool(bool),
    Nat(Option<u64>),
    Rows(Vec<Doc>),
}

#[derive(Default)]
pub struct Doc {
    fields: Vec<(&'static str, Field)>,
}

impl Doc {
    pub fn with(mut self, key: &'static str, field: Field) -> Self {
        self.fields.push((key, field));
        self
    }

    /// A single scalar field prints bare; anything else prints `key: value`
    /// lines, with rows indented below their key.
    pub fn to_text(&self, names: &[String]) -> String {
        if let [(_, field)] = self.fields.as_slice() {
            if !matches!(field, Field::Rows(_)) {
                return format!("{}\n", scalar_text(field, names));
            }
        }
        let mut out = String::new();
        for (key, field) in &self.fields {
            match field {
                Field::Rows(rows) => {
                    out.push_str(&format!("{key}:\n"));
                    for row in rows {
                        let cells: Vec<String> = row
                            .fields
                            .iter()
                            .map(|(k, f)| format!("{k} = {}", scalar_text(f, names)))
                            .collect();
                        out.push_str(&format!("  {}\n", cells.join("; ")));
                    }
                }
                other => out.push_str(&format!("{key}: {}\n", scalar_text(other, names))),
            }
        }
        out
    }

    pub fn to_json(&self, names: &[String]) -> Value {
        let mut map = Map::new();
        for (key, field) in &self.fields {
            map.insert(key.to_string(), field_json(field, names));
        }
        Value::Object(map)
    }
}

pub fn module_text(m: &MonomialModule, names: &[String]) -> String {
    format!("({})/({})", m.i().display_with(names), m.j().display_with(names))
}

fn scalar_text(field: &Field, names: &[String]) -> String {
    match field {
        Field::Ordinal(o) => o.to_string(),
        Field::Cycle(c) => c.display_with(names).to_string(),
        Field::Prime(p) => p.display_with(names).to_string(),
        Field::Primes(ps) if ps.is_empty() => "none".to_string(),
        Field::Primes(ps) => ps
            .iter()
            .map(|p| p.display_with(names).to_string())
            .collect::<Vec<_>>()
            .join(", "),
        Field::Module(m) => module_text(m, names),
        Field::Monomial(r) => r.display_with(names).to_string(),
        Field::Bool(b) => b.to_string(),
        Field::Nat(Some(k)) => k.to_string(),
        Field::Nat(None) => "none".to_string(),
        Field::Rows(_) => unreachable!("rows are rendered by the caller"),
    }
}

fn prime_json(p: &MonomialPrime, names: &[String]) -> Value {
    json!(p.gens().iter().map(|&g| &names[g]).collect::<Vec<_>>())
}

fn field_json(field: &Field, names: &[String]) -> Value {
    match field {
        Field::Ordinal(o) => json!(o),
        Field::Cycle(c) => Value::Array(
            c.terms()
                .map(|(p, k)| json!({ "prime": prime_json(p, names), "coeff": k.to_u64() }))
                .collect(),
        ),
        Field::Prime(p) => prime_json(p, names),
        Field::Primes(ps) => Value::Array(ps.iter().map(|p| prime_json(p, names)).collect()),
        Field::Module(m) => json!(ModuleJson::new(m, names)),
        Field::Monomial(r) => json!(r.exps()),
        Field::Bool(b) => json!(b),
        Field::Nat(k) => json!(k),
        Field::Rows(rows) => Value::Array(rows.iter().map(|r| r.to_json(names)).collect()),
    }
}
