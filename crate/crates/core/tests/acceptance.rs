//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use clifford_split::check::CheckOutcome;
use clifford_split::crosscheck::{all_tuples, criteria_vs_direct, kernel_structure, random_tuples};
use clifford_split::lemmas::run_identity_suite;
use clifford_split::slgroup::verify_presentation;
use clifford_split::splitcheck::{
    check_conditions_direct, search_witness, verdict, Condition, GenParams, SearchOptions,
};
use clifford_split::weylnum::{self, fourier, projective_action, weyl};

/// Max-norm tolerance for every numerical comparison.
const WEYL_TOL: f64 = 1e-10;

const RANDOM_TUPLES: usize = 10_000;

type Verdict = Result<String, String>;

type Criterion = (&'static str, fn() -> Verdict);

fn summarize(outcomes: &[CheckOutcome]) -> Verdict {
    let cases: u64 = outcomes.iter().map(|o| o.checked).sum();
    match outcomes.iter().find(|o| !o.passed()) {
        None => Ok(format!("{} checks, {cases} cases", outcomes.len())),
        Some(o) => Err(o.to_string()),
    }
}

fn search_agrees_with_verdict() -> Verdict {
    let opts = SearchOptions {
        exhaustive: true,
        ..Default::default()
    };
    let mut seen = Vec::new();
    for n in (2..=12u64).step_by(2) {
        let searched = search_witness(n, &opts).map_err(|e| e.to_string())?;
        let closed = verdict(n).map_err(|e| e.to_string())?;
        if searched.splits != closed.splits || closed.splits != (n % 4 == 2) {
            return Err(format!(
                "N={n}: search says {}, closed form says {}",
                searched.splits, closed.splits
            ));
        }
        if searched.splits
            && !searched
                .witness
                .is_some_and(|w| check_conditions_direct(&w).is_ok_and(|r| r.passes()))
        {
            return Err(format!("N={n}: reported witness does not pass"));
        }
        seen.push(format!(
            "{n}:{}",
            if searched.splits { "yes" } else { "no" }
        ));
    }
    Ok(seen.join(" "))
}

fn explicit_witness() -> Verdict {
    for n in [2u64, 6, 10, 14, 18] {
        let p = GenParams::standard_witness(n).map_err(|e| e.to_string())?;
        let report = check_conditions_direct(&p).map_err(|e| e.to_string())?;
        for c in Condition::ALL {
            if !report.condition_holds(c) {
                return Err(format!("N={n}: {c:?} fails at {:?}", report.failing()));
            }
        }
    }
    Ok("N = 2, 6, 10, 14, 18".into())
}

fn closed_form_equivalence() -> Verdict {
    let mut outcomes = Vec::new();
    for n in [2u64, 4, 6] {
        let tuples = all_tuples(n).map_err(|e| e.to_string())?;
        outcomes.extend(criteria_vs_direct(n, &tuples).map_err(|e| e.to_string())?);
    }
    for n in [8u64, 10, 12] {
        let tuples = random_tuples(n, RANDOM_TUPLES, 0xC0FFEE + n).map_err(|e| e.to_string())?;
        outcomes.extend(criteria_vs_direct(n, &tuples).map_err(|e| e.to_string())?);
    }
    summarize(&outcomes)
}

fn identity_suite() -> Verdict {
    let mut outcomes = Vec::new();
    for n in [2u64, 4, 6, 8] {
        outcomes.extend(run_identity_suite(n, 2 * n + 2, 4, 2024).map_err(|e| e.to_string())?);
    }
    summarize(&outcomes)
}

fn kernel_properties() -> Verdict {
    let mut outcomes = Vec::new();
    for n in (2..=24u64).step_by(2) {
        outcomes.extend(kernel_structure(n, 64, 17).map_err(|e| e.to_string())?);
    }
    summarize(&outcomes)
}

fn presentation() -> Verdict {
    for n in 2..=64u64 {
        if !verify_presentation(n).map_err(|e| e.to_string())? {
            return Err(format!("relations fail over Z_{n}"));
        }
    }
    Ok("N = 2..64".into())
}

fn weyl_suite() -> Verdict {
    if weylnum::DEFAULT_TOLERANCE > WEYL_TOL {
        return Err("library tolerance is looser than the acceptance tolerance".into());
    }
    let mut worst = 0.0f64;
    for n in 2..=8u64 {
        for c in weylnum::self_check(n).map_err(|e| e.to_string())? {
            if c.max_error >= WEYL_TOL {
                return Err(format!("N={n}: {} error {:e}", c.name, c.max_error));
            }
            worst = worst.max(c.max_error);
        }
        for k in 0..n as i64 {
            for l in 0..n as i64 {
                let a = projective_action(&weyl(n, k, l).map_err(|e| e.to_string())?)
                    .map_err(|e| e.to_string())?;
                if !a.is_identity() {
                    return Err(format!("N={n}: W({k},{l}) acts as {a}"));
                }
            }
        }
    }
    for n in [3u64, 4] {
        let a = projective_action(&fourier(n).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        if a.det() != 1 {
            return Err(format!("N={n}: Fourier acts as {a}"));
        }
    }
    Ok(format!("worst error {worst:.1e}"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("exhaustive search agrees with the closed-form verdict for even N in 2..12", search_agrees_with_verdict),
        ("explicit witness passes every condition for N in {2, 6, 10, 14, 18}", explicit_witness),
        ("closed-form criteria equal literal K-membership (all tuples N <= 6, 10^4 random for N = 8, 10, 12)", closed_form_equivalence),
        ("closed-form power and relation identities hold for N <= 8", identity_suite),
        ("K has order 8, is closed and normal, and sigma is coset-invariant for even N <= 24", kernel_properties),
        ("presentation of SL(2, Z_N) holds for N in 2..64", presentation),
        ("Weyl operator identities hold to 1e-10 for N <= 8", weyl_suite),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = f();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS  [{}] {name} ({detail}; {secs:.2}s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL  [{}] {name} ({detail}; {secs:.2}s)", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
