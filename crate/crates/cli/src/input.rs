//! Module input from flags, files or stdin.

use std::fmt;
use std::io::Read;
use std::path::PathBuf;

use clap::Args;
use ordlen::module::{parse_module, parse_vars, ModuleJson};
use ordlen::monomial::parse_ideal;
use ordlen::{Error, MonomialIdeal, MonomialModule, MonomialPrime};

#[derive(Args, Debug)]
pub struct InputArgs {
    /// Comma-separated variable names, e.g. `x,y`.
    #[arg(long)]
    pub vars: Option<String>,
    /// Generators of J for the cyclic module R/J. Empty for the zero ideal,
    /// `1` for the unit ideal.
    #[arg(long, conflicts_with = "module")]
    pub ideal: Option<String>,
    /// Generators of I and J for the subquotient I/J. I is read as I + J, so
    /// `--module y x^2,x*y` is the submodule generated by y in R/(x^2, xy).
    #[arg(long, num_args = 2, value_names = ["I", "J"])]
    pub module: Option<Vec<String>>,
    /// A file holding `vars: x,y ; I: ... ; J: ...` or the JSON module form;
    /// `-` reads stdin.
    #[arg(conflicts_with_all = ["ideal", "module"])]
    pub input: Option<PathBuf>,
}

/// Failures before any computation, with the exit status they map to.
#[derive(Debug)]
pub enum InputError {
    /// Bad text, with the offending source and a byte offset into it.
    Parse {
        source: String,
        text: String,
        pos: usize,
        msg: String,
    },
    /// Input that parsed but does not describe a valid request.
    Invalid(String),
    /// A size guard was hit.
    Guard(String),
}

impl InputError {
    pub fn exit_code(&self) -> u8 {
        match self {
            InputError::Parse { .. } | InputError::Invalid(_) => 2,
            InputError::Guard(_) => 3,
        }
    }

    /// Attaches `source` and `text` to parse errors of the library.
    pub fn from_lib(e: Error, source: &str, text: &str) -> Self {
        match e {
            Error::Parse { pos, msg } => InputError::Parse {
                source: source.to_string(),
                text: text.to_string(),
                pos,
                msg,
            },
            Error::Guard { .. } | Error::InvalidBound(_) => InputError::Guard(e.to_string()),
            other => InputError::Invalid(other.to_string()),
        }
    }
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InputError::Parse { source, text, pos, msg } => {
                let pos = (*pos).min(text.len());
                let line_no = text[..pos].matches('\n').count() + 1;
                let start = text[..pos].rfind('\n').map_or(0, |k| k + 1);
                let end = text[pos..].find('\n').map_or(text.len(), |k| pos + k);
                let col = text[start..pos].chars().count() + 1;
                writeln!(f, "parse error in {source} at line {line_no}, column {col}: {msg}")?;
                writeln!(f, "  {}", &text[start..end])?;
                write!(f, "  {}^", " ".repeat(col - 1))
            }
            InputError::Invalid(msg) => write!(f, "{msg}"),
            InputError::Guard(msg) => write!(f, "{msg}"),
        }
    }
}

fn ideal(text: &str, source: &str, names: &[String]) -> Result<MonomialIdeal, InputError> {
    parse_ideal(text, names).map_err(|e| InputError::from_lib(e, source, text))
}

fn read_input(path: &PathBuf) -> Result<(String, String), InputError> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| InputError::Invalid(format!("cannot read stdin: {e}")))?;
        Ok((s, "stdin".to_string()))
    } else {
        let s = std::fs::read_to_string(path)
            .map_err(|e| InputError::Invalid(format!("cannot read {}: {e}", path.display())))?;
        Ok((s, path.display().to_string()))
    }
}

impl InputArgs {
    /// The module and its variable names.
    pub fn load(&self) -> Result<(MonomialModule, Vec<String>), InputError> {
        let (m, names) = self.load_unchecked()?;
        m.check_size().map_err(|e| InputError::Guard(e.to_string()))?;
        Ok((m, names))
    }

    fn names(&self) -> Result<Vec<String>, InputError> {
        let vars = self
            .vars
            .as_deref()
            .ok_or_else(|| InputError::Invalid("--vars is required with --ideal and --module".into()))?;
        parse_vars(vars, 0).map_err(|e| InputError::from_lib(e, "--vars", vars))
    }

    fn load_unchecked(&self) -> Result<(MonomialModule, Vec<String>), InputError> {
        if let Some(j) = &self.ideal {
            let names = self.names()?;
            let j = ideal(j, "--ideal", &names)?;
            return Ok((MonomialModule::cyclic(j), names));
        }
        if let Some(pair) = &self.module {
            let names = self.names()?;
            let i = ideal(&pair[0], "--module I", &names)?;
            let j = ideal(&pair[1], "--module J", &names)?;
            let i = i.sum(&j).map_err(|e| InputError::from_lib(e, "--module", ""))?;
            let m = MonomialModule::new(i, j).map_err(|e| InputError::from_lib(e, "--module", ""))?;
            return Ok((m, names));
        }
        let path = self
            .input
            .as_ref()
            .ok_or_else(|| InputError::Invalid("no input: give --ideal, --module or an input file".into()))?;
        if self.vars.is_some() {
            return Err(InputError::Invalid(
                "--vars applies to --ideal and --module; files name their own variables".into(),
            ));
        }
        let (text, source) = read_input(path)?;
        if text.trim_start().starts_with('{') {
            let json: ModuleJson = serde_json::from_str(&text).map_err(|e| InputError::Parse {
                pos: offset_of(&text, e.line(), e.column()),
                source,
                text: text.clone(),
                msg: e.to_string(),
            })?;
            json.to_module().map_err(|e| InputError::Invalid(e.to_string()))
        } else {
            parse_module(&text).map_err(|e| InputError::from_lib(e, &source, &text))
        }
    }
}

/// Byte offset of a 1-based line and column.
fn offset_of(text: &str, line: usize, column: usize) -> usize {
    let start: usize = text.split_inclusive('\n').take(line.saturating_sub(1)).map(str::len).sum();
    (start + column.saturating_sub(1)).min(text.len())
}

/// A prime given as variable names, e.g. `x,y`, `(x, y)` or `[x]`; `0` or
/// an empty list is the zero prime.
pub fn parse_prime(text: &str, names: &[String]) -> Result<MonomialPrime, InputError> {
    let trimmed = text.trim();
    let inner = trimmed
        .strip_prefix(['(', '['])
        .and_then(|s| s.strip_suffix([')', ']']))
        .unwrap_or(trimmed);
    let at = text.find(inner).unwrap_or(0);
    let err = |e| InputError::from_lib(e, "--prime", text);
    if inner.trim() == "0" {
        return Ok(MonomialPrime::zero(names.len()));
    }
    let vars = parse_vars(inner, at).map_err(err)?;
    let mut gens = Vec::new();
    let mut offset = at;
    for (piece, v) in inner.split(',').zip(&vars) {
        let k = names.iter().position(|n| n == v).ok_or_else(|| InputError::Parse {
            source: "--prime".into(),
            text: text.to_string(),
            pos: offset + piece.find(v.as_str()).unwrap_or(0),
            msg: format!("unknown variable '{v}'"),
        })?;
        gens.push(k);
        offset += piece.len() + 1;
    }
    MonomialPrime::new(names.len(), gens).map_err(err)
}
