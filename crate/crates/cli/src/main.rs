//! `ordlen`: ordinal length and related invariants of monomial subquotients.

mod input;
mod render;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;
use ordlen::checks::{run_suite, Suite, SweepConfig};
use ordlen::monomial::parse_monomial;
use ordlen::{Error, MonomialModule};

use input::{parse_prime, InputArgs, InputError};
use render::{Doc, Field};

#[derive(Parser, Debug)]
#[command(name = "ordlen", version, about = "Ordinal length of modules presented by monomial ideals")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Ordinal length.
    Len(InputArgs),
    /// Fundamental cycle.
    Fcyc(InputArgs),
    /// Cycle, length, associated primes, dimension, order, valence and binarity.
    Profile(InputArgs),
    /// Associated primes.
    Ass(InputArgs),
    /// The dimension filtration `D_0 ⊆ ... ⊆ D_n` with lengths.
    Filtration(InputArgs),
    /// The kernel of localization at a prime.
    Prim {
        #[command(flatten)]
        input: InputArgs,
        /// The prime, as variable names: `x,y`.
        #[arg(long)]
        prime: String,
    },
    /// Multiplication by a monomial.
    Endo {
        #[command(flatten)]
        input: InputArgs,
        /// The multiplier, e.g. `x*y^2`.
        #[arg(long)]
        mult: String,
    },
    /// Runs a named property suite over the built-in corpora.
    Check {
        /// One of examples, ordinal, semiadd, submod, latt, dimfil, primmin,
        /// maxassopen, endo, oracle-artinian, endo-fixture, all.
        suite: String,
        #[arg(long, default_value_t = SweepConfig::default().max_vars)]
        max_vars: usize,
        #[arg(long, default_value_t = SweepConfig::default().max_deg)]
        max_deg: u32,
        #[arg(long, default_value_t = SweepConfig::default().seed)]
        seed: u64,
        /// Truncation order of the endomorphism fixture.
        #[arg(long, default_value_t = SweepConfig::default().truncation)]
        truncation: usize,
    },
}

fn lib_err(e: Error) -> InputError {
    InputError::from_lib(e, "input", "")
}

fn length_doc(m: &MonomialModule) -> Doc {
    Doc::default().with("length", Field::Ordinal(m.length()))
}

fn profile_doc(m: &MonomialModule) -> Doc {
    let p = m.profile();
    let nat = |k: Option<usize>| Field::Nat(k.map(|k| k as u64));
    Doc::default()
        .with("fcyc", Field::Cycle(p.fcyc))
        .with("length", Field::Ordinal(p.length))
        .with("ass", Field::Primes(p.ass))
        .with("dim", nat(p.dim))
        .with("order", nat(p.order))
        .with("valence", Field::Nat(p.valence.to_u64()))
        .with("binary", Field::Bool(p.is_binary))
        .with("unmixed", Field::Bool(p.dim == p.order))
}

fn filtration_doc(m: &MonomialModule) -> Result<Doc, InputError> {
    let mut rows = Vec::new();
    for e in 0..=m.n() {
        let d = m.dim_filtration(e).map_err(lib_err)?;
        let quot = m.quotient_by(&d).map_err(lib_err)?;
        rows.push(
            Doc::default()
                .with("e", Field::Nat(Some(e as u64)))
                .with("D", Field::Module(d.clone()))
                .with("len D", Field::Ordinal(d.length()))
                .with("len M/D", Field::Ordinal(quot.length())),
        );
    }
    Ok(Doc::default()
        .with("length", Field::Ordinal(m.length()))
        .with("filtration", Field::Rows(rows)))
}

fn prim_doc(m: &MonomialModule, names: &[String], prime: &str) -> Result<Doc, InputError> {
    let p = parse_prime(prime, names)?;
    let prim = m.prim_kernel(&p).map_err(lib_err)?;
    let quot = m.quotient_by(&prim).map_err(lib_err)?;
    Ok(Doc::default()
        .with("prime", Field::Prime(p.clone()))
        .with("associated", Field::Bool(m.is_associated(&p)))
        .with("kernel", Field::Module(prim.clone()))
        .with("len kernel", Field::Ordinal(prim.length()))
        .with("len quotient", Field::Ordinal(quot.length()))
        .with("ass quotient", Field::Primes(quot.ass())))
}

fn endo_doc(m: &MonomialModule, names: &[String], mult: &str) -> Result<Doc, InputError> {
    let r = parse_monomial(mult, names).map_err(|e| InputError::from_lib(e, "--mult", mult))?;
    let a = m.mult_endo(&r).map_err(lib_err)?;
    let kernel_open = a.kernel_open();
    Ok(Doc::default()
        .with("r", Field::Monomial(a.r))
        .with("kernel", Field::Module(a.kernel))
        .with("image", Field::Module(a.image))
        .with("len M", Field::Ordinal(a.mu))
        .with("len kernel", Field::Ordinal(a.kappa))
        .with("len image", Field::Ordinal(a.theta))
        .with("monic", Field::Bool(a.monic))
        .with("open image", Field::Bool(a.open_image))
        .with("open kernel", Field::Bool(kernel_open))
        .with("nilpotent", Field::Bool(a.nilpotent))
        .with("nilpotency index", Field::Nat(a.nilpotency_index.map(u64::from)))
        .with("reductive", Field::Bool(a.reductive))
        .with("reductive power", Field::Nat(Some(a.reductive_power.into())))
        .with("rank-nullity", Field::Bool(a.satisfies_rank_nullity))
        .with("rank-nullity at reductive power", Field::Bool(a.rank_nullity_at_reductive_power))
        .with("tectonics length", Field::Ordinal(a.tectonics_length)))
}

fn emit(doc: &Doc, names: &[String], format: Format) {
    match format {
        Format::Text => print!("{}", doc.to_text(names)),
        Format::Json => println!(
            "{}",
            serde_json::to_string(&doc.to_json(names)).expect("JSON values serialize")
        ),
    }
}

fn run(cli: Cli) -> Result<ExitCode, InputError> {
    let format = cli.format;
    let module_cmd = |input: &InputArgs, build: &dyn Fn(&MonomialModule, &[String]) -> Result<Doc, InputError>| {
        let (m, names) = input.load()?;
        emit(&build(&m, &names)?, &names, format);
        Ok(ExitCode::SUCCESS)
    };
    match &cli.command {
        Command::Len(input) => module_cmd(input, &|m, _| Ok(length_doc(m))),
        Command::Fcyc(input) => module_cmd(input, &|m, _| Ok(Doc::default().with("fcyc", Field::Cycle(m.fcyc())))),
        Command::Profile(input) => module_cmd(input, &|m, _| Ok(profile_doc(m))),
        Command::Ass(input) => module_cmd(input, &|m, _| Ok(Doc::default().with("ass", Field::Primes(m.ass())))),
        Command::Filtration(input) => module_cmd(input, &|m, _| filtration_doc(m)),
        Command::Prim { input, prime } => module_cmd(input, &|m, names| prim_doc(m, names, prime)),
        Command::Endo { input, mult } => module_cmd(input, &|m, names| endo_doc(m, names, mult)),
        Command::Check {
            suite,
            max_vars,
            max_deg,
            seed,
            truncation,
        } => {
            let suite: Suite = suite
                .parse()
                .map_err(|e: Error| match e {
                    Error::Parse { msg, .. } => InputError::Invalid(msg),
                    other => InputError::Invalid(other.to_string()),
                })?;
            let cfg = SweepConfig {
                max_vars: *max_vars,
                max_deg: *max_deg,
                seed: *seed,
                truncation: *truncation,
                ..SweepConfig::default()
            };
            let report = run_suite(suite, &cfg).map_err(lib_err)?;
            match format {
                Format::Text => {
                    print!("{report}");
                    let passed = report.checks.iter().filter(|c| c.passed).count();
                    println!("SUMMARY {passed} of {} checks passed", report.checks.len());
                }
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&report.to_json()).expect("JSON values serialize")
                ),
            }
            Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
