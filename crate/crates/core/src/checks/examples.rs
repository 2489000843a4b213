use super::report::CheckOutcome;
use crate::cycle::{Cycle, MonomialPrime};
use crate::module::MonomialModule;
use crate::monomial::MonomialIdeal;
use crate::ordinal::Ordinal;

fn ideal(gens: &[&[u32]]) -> MonomialIdeal {
    MonomialIdeal::from_exps(2, gens).expect("two variables")
}

fn expect(name: &str, got: impl ToString, want: impl ToString) -> CheckOutcome {
    let (got, want) = (got.to_string(), want.to_string());
    CheckOutcome::new(name, got == want, format!("got {got}, expected {want}"))
}

/// The lengths and cycle of `K[x, y]/(x², xy)` and its submodules.
pub fn check_worked_examples() -> Vec<CheckOutcome> {
    let j = ideal(&[&[2, 0], &[1, 1]]);
    let ring = MonomialModule::cyclic(j.clone());
    let y = MonomialModule::new(ideal(&[&[0, 1], &[2, 0]]), j.clone()).expect("nested");
    let max = MonomialModule::new(ideal(&[&[1, 0], &[0, 1]]), j).expect("nested");
    let omega_plus_one = Ordinal::from_u64s(&[1, 1]);

    let mut want_cycle = Cycle::zero(2);
    for gens in [&[0usize][..], &[0, 1]] {
        want_cycle
            .add_term(MonomialPrime::new(2, gens.iter().copied()).expect("valid"), 1u32)
            .expect("same ambient");
    }
    let fcyc = ring.fcyc();
    vec![
        expect("examples/len-R/(x^2,xy)", ring.length(), &omega_plus_one),
        expect("examples/len-(y)/(x^2,xy)", y.length(), Ordinal::omega()),
        expect("examples/len-(x,y)/(x^2,xy)", max.length(), &omega_plus_one),
        CheckOutcome::new(
            "examples/fcyc-R/(x^2,xy)",
            fcyc == want_cycle && fcyc.is_binary(),
            format!("got {fcyc}, binary {}", fcyc.is_binary()),
        ),
    ]
}

/// `len R = ω^n` and `len R/P = ω^(dim P)` for every monomial prime `P`,
/// for `n` up to `max_vars`.
pub fn check_domain_criterion(max_vars: usize) -> Vec<CheckOutcome> {
    let mut out = Vec::new();
    for n in 1..=max_vars {
        let ring = MonomialModule::ring(n);
        out.push(expect(&format!("examples/domain-len-R-n{n}"), ring.length(), Ordinal::omega_pow(n)));
        let mut bad = Vec::new();
        let primes = MonomialPrime::all(n);
        for p in &primes {
            let m = MonomialModule::cyclic(MonomialIdeal::from_vars(n, p.gens()));
            if m.length() != Ordinal::omega_pow(p.dim()) {
                bad.push(format!("R/{p}: {}", m.length()));
            }
        }
        out.push(
            CheckOutcome::new(
                format!("examples/domain-primes-n{n}"),
                bad.is_empty(),
                format!("{} primes, {} failures", primes.len(), bad.len()),
            )
            .with_witnesses(bad),
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples_pass() {
        for c in check_worked_examples().into_iter().chain(check_domain_criterion(3)) {
            assert!(c.passed, "{c}");
        }
    }
}
