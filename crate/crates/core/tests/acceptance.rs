//! Acceptance run: one line per criterion, nonzero exit if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use ordlen::checks::{
    check_binendo_suite, check_dimfil, check_domain_criterion, check_lattice, check_maxassopen,
    check_mult_endos, check_oracle_artinian, check_ordinal_algebra, check_primmin, check_semiadd,
    check_submod, check_worked_examples, CheckOutcome, Invariants, SweepConfig,
};

struct Criterion {
    id: u32,
    title: &'static str,
    budget: Duration,
    run: Box<dyn Fn() -> Vec<CheckOutcome>>,
}

fn criterion(
    id: u32,
    title: &'static str,
    budget_secs: u64,
    run: impl Fn() -> Vec<CheckOutcome> + 'static,
) -> Criterion {
    Criterion {
        id,
        title,
        budget: Duration::from_secs(budget_secs),
        run: Box::new(run),
    }
}

fn main() -> ExitCode {
    // exhaustive in two variables, 500 sampled pairs in three
    let cfg = SweepConfig {
        max_vars: 3,
        ..SweepConfig::default()
    };
    let plane = SweepConfig::default();
    let c = cfg.clone();
    let corpus = move || c.modules();
    let criteria = vec![
        criterion(1, "worked examples", 1, check_worked_examples),
        criterion(2, "domain criterion", 1, || check_domain_criterion(3)),
        criterion(3, "F2 oracle agreement at finite length", 60, {
            let plane = plane.clone();
            move || check_oracle_artinian(&plane).expect("within guards")
        }),
        criterion(4, "semi-additivity sweep", 120, {
            let cfg = cfg.clone();
            move || check_semiadd(&cfg.pairs(), &Invariants::default())
        }),
        criterion(5, "submodule monotonicity sweep", 120, {
            let corpus = corpus.clone();
            move || check_submod(&corpus(), 3, &Invariants::default())
        }),
        criterion(6, "lattice law", 120, {
            let plane = plane.clone();
            move || check_lattice(&plane.plane_modules(), 3, &Invariants::default())
        }),
        criterion(7, "dimension filtration", 120, {
            let corpus = corpus.clone();
            move || check_dimfil(&corpus(), &Invariants::default())
        }),
        criterion(8, "localization kernel identity", 120, {
            let corpus = corpus.clone();
            move || check_primmin(&corpus(), &Invariants::default())
        }),
        criterion(9, "maximal embedded prime is open", 120, {
            let corpus = corpus.clone();
            move || check_maxassopen(&corpus(), &Invariants::default())
        }),
        criterion(10, "multiplication endomorphism laws", 120, {
            let corpus = corpus.clone();
            move || check_mult_endos(&corpus())
        }),
        criterion(11, "endomorphism fixture suite", 30, || {
            let mut out = check_binendo_suite(8, 1).expect("valid truncation");
            out.extend(check_binendo_suite(4, 1).expect("valid truncation"));
            out
        }),
        criterion(12, "ordinal algebra", 10, || check_ordinal_algebra(3, 3)),
    ];

    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcomes = (c.run)();
        let elapsed = start.elapsed();
        let checks_ok = outcomes.iter().all(|o| o.passed);
        let in_time = elapsed <= c.budget;
        let ok = checks_ok && in_time;
        if !ok {
            failed += 1;
        }
        println!(
            "ACCEPTANCE {:>2} {} {} ({} checks, {:.2}s of {}s)",
            c.id,
            if ok { "PASS" } else { "FAIL" },
            c.title,
            outcomes.len(),
            elapsed.as_secs_f64(),
            c.budget.as_secs()
        );
        for o in &outcomes {
            println!("    {o}");
        }
        if !in_time {
            println!("    over the time budget");
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
