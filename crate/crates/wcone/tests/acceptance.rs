//! Acceptance suite: every criterion runs at its stated tolerance and
//! prints one pass/fail line (run with `cargo test --test acceptance`;
//! add `-- --nocapture` to see the lines for passing criteria too).
//!
//! Wall-clock budgets are asserted where stated; they assume an optimized
//! test profile (the workspace sets `profile.test.opt-level = 2`).

use std::time::{Duration, Instant};
use wcone::verify;

fn criterion(name: &str, budget: Option<Duration>, check: fn() -> Result<(), String>) {
    let start = Instant::now();
    let result = check();
    let elapsed = start.elapsed();
    match &result {
        Ok(()) => println!("PASS  {name} ({elapsed:.2?})"),
        Err(why) => println!("FAIL  {name}: {why}"),
    }
    if let Err(why) = result {
        panic!("criterion failed: {name}: {why}");
    }
    if let Some(budget) = budget {
        assert!(
            elapsed <= budget,
            "criterion over budget: {name} took {elapsed:.2?} (budget {budget:.2?})"
        );
    }
}

#[test]
fn criterion_01_closed_forms_exact() {
    criterion(
        "1 closed forms of the triple-csc configuration, coefficient-exact",
        Some(Duration::from_secs(1)),
        verify::check_closed_forms,
    );
}

#[test]
fn criterion_02_point_values_exact() {
    criterion(
        "2 f_CSC point values at 0, 1/3, 2/3",
        None,
        verify::check_point_values,
    );
}

#[test]
fn criterion_03_root_structure() {
    criterion(
        "3 three distinct positive roots, Descartes bound 3, min/max/min, H'' signs",
        None,
        verify::check_root_structure,
    );
}

#[test]
fn criterion_04_genus2_small_l2() {
    criterion(
        "4 genus-2 l2=1: unique critical point, local minimum at 0.835 ± 0.005",
        None,
        verify::check_genus2_small,
    );
}

#[test]
fn criterion_05_genus2_large_l2() {
    criterion(
        "5 genus-2 l2=101: csc minimum 0.685 ± 0.005, inflections at roots of 3b^2-202b+2, K-unstable",
        None,
        verify::check_genus2_large,
    );
}

#[test]
fn criterion_06_extremal() {
    criterion(
        "6 extremal profile proportional to (1-z^2)g, window 0.295/1.455 ± 0.01, probes inadmissible",
        Some(Duration::from_secs(30)),
        verify::check_extremal,
    );
}

#[test]
fn criterion_07_null_scalar_csc() {
    criterion(
        "7 vanishing-scalar configuration: (3b-2)^2, f_CSC(2/3)=0, six-fold root, H(2/3)=0, cscS verdict",
        None,
        verify::check_null_scalar_csc,
    );
}

#[test]
fn criterion_08_identity_suite() {
    criterion(
        "8 variational identity, cubic-root multiplicity, reduced H' over 100 random sets",
        Some(Duration::from_secs(60)),
        verify::check_identity_suite,
    );
}

#[test]
fn criterion_09_scale_invariance() {
    criterion(
        "9 homogeneity of total scalar/volume and the H ratio over 50 random rays",
        None,
        verify::check_scale_invariance,
    );
}

#[test]
fn criterion_10_union_structure() {
    criterion(
        "10 |null-scalar| <= 2, empty for A >= 0, critical set = csc ∪ null-scalar",
        None,
        verify::check_union_structure,
    );
}

#[test]
fn criterion_11_sweep() {
    criterion(
        "11 l2 in [29,199] with gcd(l2,6)=1: exactly 3 csc rays; l2=1 fewer",
        Some(Duration::from_secs(10)),
        verify::check_sweep,
    );
}

#[test]
fn criterion_12_boundary_behavior() {
    criterion(
        "12 reduced H: pole order d_N+1 at 0 and growth degree d_N+1 at infinity, positive leads",
        None,
        verify::check_boundary,
    );
}
