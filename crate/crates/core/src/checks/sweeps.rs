//! Sweeps of the module invariants over the monomial corpus.

use num_traits::ToPrimitive;

use super::report::{CheckOutcome, Tally};
use super::Invariants;
use crate::corpus::sandwich_submodules;
use crate::cycle::MonomialPrime;
use crate::module::MonomialModule;
use crate::monomial::{monomials_up_to_degree, MonomialIdeal};
use crate::ordinal::Ordinal;

fn show(m: &MonomialModule) -> String {
    format!("({})/({})", m.i(), m.j())
}

/// `len Q + len N ≤ len M ≤ len Q ⊕ len N` for `0 → I/J → R/J → R/I → 0`.
pub fn check_semiadd(pairs: &[(MonomialIdeal, MonomialIdeal)], inv: &Invariants) -> Vec<CheckOutcome> {
    let mut lower = Tally::new("semiadd/lower-bound");
    let mut upper = Tally::new("semiadd/upper-bound");
    for (j, i) in pairs {
        let n = j.n();
        let sub = MonomialModule::new(i.clone(), j.clone()).expect("nested");
        let quot = MonomialModule::cyclic(i.clone());
        let whole = MonomialModule::new(MonomialIdeal::unit(n), j.clone()).expect("nested");
        let (ln, lq, lm) = (inv.length(&sub), inv.length(&quot), inv.length(&whole));
        let witness = || format!("J = ({j}), I = ({i}): len N = {ln}, len Q = {lq}, len M = {lm}");
        lower.record(lq.ord_sum(&ln) <= lm, witness);
        upper.record(lm <= lq.shuffle_sum(&ln), witness);
    }
    vec![lower.finish(), upper.finish()]
}

/// Submodule lengths are weaker than the ambient length, and binary modules
/// have binary submodules and localizations.
pub fn check_submod(modules: &[MonomialModule], max_deg: u32, inv: &Invariants) -> Vec<CheckOutcome> {
    let mut weaker = Tally::new("submod/weaker-than-ambient");
    let mut subbin = Tally::new("submod/binary-submodules");
    let mut locbin = Tally::new("submod/binary-localizations");
    for m in modules {
        let lm = inv.length(m);
        let binary = inv.is_binary(m);
        for sub in sandwich_submodules(m, 2, max_deg) {
            let ls = inv.length(&sub);
            weaker.record(ls.is_weaker_than(&lm), || {
                format!("N = {} in M = {}: {ls} vs {lm}", show(&sub), show(m))
            });
            if binary {
                subbin.record(inv.is_binary(&sub), || format!("N = {} in M = {}", show(&sub), show(m)));
            }
        }
        if binary {
            for p in MonomialPrime::all(m.n()) {
                let local = m.localize(&p).expect("same ambient");
                locbin.record(local.is_binary(), || format!("M = {} at {p}", show(m)));
            }
        }
    }
    vec![weaker.finish(), subbin.finish(), locbin.finish()]
}

/// Meets of lengths on binary-length modules, the join inequality on every
/// module, and a strict instance of it. Monomial submodules of a
/// binary-length module never give a strict join, since `Ass(N + N')` lies
/// in `Ass N ∪ Ass N'`; the strict instance comes from the rest.
pub fn check_lattice(modules: &[MonomialModule], max_deg: u32, inv: &Invariants) -> Vec<CheckOutcome> {
    let mut meet = Tally::new("latt/meet");
    let mut join = Tally::new("latt/join-weaker");
    let mut strict: Option<String> = None;
    let mut binary_length = 0usize;
    for m in modules {
        let binary = inv.length(m).is_binary();
        binary_length += usize::from(binary);
        let subs = sandwich_submodules(m, 2, max_deg);
        let lens: Vec<Ordinal> = subs.iter().map(|s| inv.length(s)).collect();
        for a in 0..subs.len() {
            for b in a + 1..subs.len() {
                let (na, nb) = (&subs[a], &subs[b]);
                let cup = m.sum(na, nb).expect("submodules");
                let lcup = inv.length(&cup);
                let witness = || {
                    format!(
                        "M = {}, N = {}, N' = {}: {} / {} / {lcup}",
                        show(m),
                        show(na),
                        show(nb),
                        lens[a],
                        lens[b]
                    )
                };
                if binary {
                    let cap = m.intersect(na, nb).expect("submodules");
                    meet.record(inv.length(&cap) == lens[a].meet(&lens[b]), witness);
                }
                let j = lens[a].join(&lens[b]);
                join.record(j.is_weaker_than(&lcup), witness);
                if strict.is_none() && j != lcup {
                    strict = Some(format!(
                        "M = {}, N = {}, N' = {}: join({}, {}) = {j} < {lcup} = len(N + N')",
                        show(m),
                        show(na),
                        show(nb),
                        lens[a],
                        lens[b]
                    ));
                }
            }
        }
    }
    let note = format!("{binary_length} binary-length modules of {}", modules.len());
    let strict_check = match strict {
        Some(w) => CheckOutcome::new("latt/strict-join", true, "found").with_witnesses(vec![w]),
        None => CheckOutcome::new("latt/strict-join", false, "no strict instance in the corpus"),
    };

    let j = MonomialIdeal::from_exps(2, &[&[2, 0], &[1, 1]]).expect("two variables");
    let sub = |gens: &[&[u32]]| {
        let i = MonomialIdeal::from_exps(2, gens).expect("two variables").sum(&j).expect("same ambient");
        MonomialModule::new(i, j.clone()).expect("nested")
    };
    let (ny, nx, nxy) = (sub(&[&[0, 1]]), sub(&[&[1, 0]]), sub(&[&[1, 0], &[0, 1]]));
    let joined = ny.length().join(&nx.length());
    let example = CheckOutcome::new(
        "latt/join-example",
        joined == nxy.length() && joined == Ordinal::from_u64s(&[1, 1]),
        format!(
            "join(len (y)/J, len (x)/J) = {joined}, len (x,y)/J = {}",
            nxy.length()
        ),
    );
    vec![meet.finish_with(note.clone()), join.finish_with(note), strict_check, example]
}

/// Lengths along the dimension filtration of binary modules.
pub fn check_dimfil(modules: &[MonomialModule], inv: &Invariants) -> Vec<CheckOutcome> {
    let mut low = Tally::new("dimfil/len-D_e");
    let mut high = Tally::new("dimfil/len-M/D_e");
    let mut layer = Tally::new("dimfil/len-D_e/D_e-1");
    let mut order = Tally::new("dimfil/least-nonzero-is-order");
    for m in modules {
        if m.is_zero() || !inv.is_binary(m) {
            continue;
        }
        let mu = inv.length(m);
        let filtration: Vec<MonomialModule> = (0..=m.n())
            .map(|e| m.dim_filtration(e).expect("e ≤ n"))
            .collect();
        for (e, d) in filtration.iter().enumerate() {
            let (hi, lo) = mu.split(e);
            let witness = || format!("M = {}, e = {e}, D_e = {}", show(m), show(d));
            low.record(inv.length(d) == lo, witness);
            let quot = m.quotient_by(d).expect("submodule");
            high.record(inv.length(&quot) == hi, witness);
            let below = if e == 0 { m.j().clone() } else { filtration[e - 1].i().clone() };
            let step = MonomialModule::new(d.i().clone(), below).expect("filtration is increasing");
            layer.record(inv.length(&step) == Ordinal::term(mu.coeff(e), e), witness);
        }
        let least = filtration.iter().position(|d| !d.is_zero());
        order.record(least == mu.order().ok(), || format!("M = {}", show(m)));
    }
    [low, high, layer, order].map(Tally::finish).to_vec()
}

/// Associated primes and length of `M/prim_P M` for associated `P`.
pub fn check_primmin(modules: &[MonomialModule], inv: &Invariants) -> Vec<CheckOutcome> {
    let mut ass = Tally::new("primmin/ass-of-quotient");
    let mut length = Tally::new("primmin/shuffle-sum");
    for m in modules {
        if m.is_zero() || !inv.is_binary(m) {
            continue;
        }
        let ass_m = inv.fcyc(m).support();
        for p in &ass_m {
            let prim = m.prim_kernel(p).expect("same ambient");
            let quot = m.quotient_by(&prim).expect("submodule");
            let want: Vec<MonomialPrime> = ass_m.iter().filter(|q| q.is_subset_of(p)).cloned().collect();
            let witness = || format!("M = {}, P = {p}, prim = {}", show(m), show(&prim));
            ass.record(inv.fcyc(&quot).support() == want, witness);
            length.record(
                inv.length(&prim).shuffle_sum(&inv.length(&quot)) == inv.length(m),
                witness,
            );
        }
    }
    vec![ass.finish(), length.finish()]
}

/// A maximal embedded prime `P` of a binary `R/J` gives an open `P/J`.
pub fn check_maxassopen(modules: &[MonomialModule], inv: &Invariants) -> Vec<CheckOutcome> {
    let mut open = Tally::new("maxassopen/maximal-embedded-prime-open");
    for m in modules {
        if !m.i().is_unit() || m.is_zero() || !inv.is_binary(m) {
            continue;
        }
        let ass = inv.fcyc(m).support();
        let embedded: Vec<&MonomialPrime> = ass
            .iter()
            .filter(|p| ass.iter().any(|q| q != *p && q.is_subset_of(p)))
            .collect();
        for p in &embedded {
            if embedded.iter().any(|q| q != p && p.is_subset_of(q)) {
                continue;
            }
            let pj = MonomialModule::new(MonomialIdeal::from_vars(m.n(), p.gens()), m.j().clone())
                .expect("J lies in every associated prime");
            open.record(inv.length(&pj) == inv.length(m), || format!("R/({}) at {p}", m.j()));
        }
    }
    vec![open.finish()]
}

/// Laws of multiplication endomorphisms by monomials of degree one and two.
pub fn check_mult_endos(modules: &[MonomialModule]) -> Vec<CheckOutcome> {
    let mut bounds = Tally::new("endo/rank-nullity-bounds");
    let mut weaker = Tally::new("endo/kernel-image-weaker");
    let mut open = Tally::new("endo/monic-iff-open-image");
    let mut regular = Tally::new("endo/regular-iff-open-image");
    let mut essker = Tally::new("endo/open-kernel-implies-nilpotent");
    let mut binendo = Tally::new("endo/binary-nilpotent-iff-open-kernel-iff-power-v");
    let mut valred = Tally::new("endo/binary-reductive-power-at-most-valence");
    let mut evrknull = Tally::new("endo/rank-nullity-at-reductive-power");
    let mut tec = Tally::new("endo/tectonics-open");
    let mut unmixed = Tally::new("endo/unmixed-rank-nullity");
    for m in modules {
        if m.is_zero() {
            continue;
        }
        let profile = m.profile();
        let v = profile.valence.to_u32().expect("small valence");
        let is_unmixed = profile.dim == profile.order;
        for r in monomials_up_to_degree(m.n(), 2).into_iter().filter(|r| !r.is_one()) {
            let a = m.mult_endo(&r).expect("same ambient");
            let witness = || format!("M = {}, r = {r}", show(m));
            bounds.record(a.within_rank_nullity_bounds(), witness);
            weaker.record(a.kappa.is_weaker_than(&a.mu) && a.theta.is_weaker_than(&a.mu), witness);
            open.record(a.monic == a.open_image, witness);
            regular.record(m.is_regular_element(&r) == a.open_image, witness);
            essker.record(!a.kernel_open() || a.nilpotent, witness);
            evrknull.record(a.rank_nullity_at_reductive_power, witness);
            tec.record(a.tectonics_length == a.mu, witness);
            if profile.is_binary {
                binendo.record(
                    a.nilpotent == a.kernel_open() && a.nilpotent == m.power_kills(&r, v),
                    witness,
                );
                valred.record(a.reductive_power <= v, witness);
            }
            if is_unmixed {
                unmixed.record(a.satisfies_rank_nullity, witness);
            }
        }
    }
    [bounds, weaker, open, regular, essker, binendo, valred, evrknull, tec, unmixed]
        .map(Tally::finish)
        .to_vec()
}
