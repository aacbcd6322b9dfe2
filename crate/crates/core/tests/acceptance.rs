//! Acceptance suite: runs every verification check at its stated time budget
//! and prints one pass/fail line per check. The same checks back the CLI's
//! `verify-all` subcommand.

use quadcount_core::verify::{all_checks, DEFAULT_SEED};
use std::time::Duration;

fn run_check(id: &str, budget: Duration) {
    let checks = all_checks();
    let (cid, name, f) = checks
        .iter()
        .find(|(cid, _, _)| *cid == id)
        .unwrap_or_else(|| panic!("unknown check id {id}"));
    let started = std::time::Instant::now();
    let outcome = f(DEFAULT_SEED).unwrap_or_else(|e| panic!("{cid} errored: {e}"));
    let elapsed = started.elapsed();
    let (expected, actual, passed) = outcome;
    println!(
        "{cid} {name}: {} in {:.2}s",
        if passed { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64()
    );
    assert!(
        elapsed < budget,
        "{cid} took {elapsed:?}, budget is {budget:?}"
    );
    assert!(
        passed,
        "{cid} {name} failed\n  expected: {expected}\n  actual:   {actual}"
    );
}

#[test]
fn c01_edge_count_formulas() {
    run_check("c01", Duration::from_secs(10));
}

#[test]
fn c02_pattern_freeness() {
    run_check("c02", Duration::from_secs(60));
}

#[test]
fn c03_counter_oracle_equivalence() {
    run_check("c03", Duration::from_secs(300));
}

#[test]
fn c04_automorphism_counts() {
    run_check("c04", Duration::from_secs(1));
}

#[test]
fn c05_cp3_closed_form() {
    run_check("c05", Duration::from_secs(300));
}

#[test]
fn c06_cp2_argmin_type() {
    run_check("c06", Duration::from_secs(300));
}

#[test]
fn c07_leading_term_ratios() {
    run_check("c07", Duration::from_secs(900));
}

#[test]
fn c08a_sharpness_p2() {
    run_check("c08a", Duration::from_secs(600));
}

#[test]
fn c08b_sharpness_p3() {
    run_check("c08b", Duration::from_secs(600));
}

#[test]
fn c08c_sharpness_p4() {
    run_check("c08c", Duration::from_secs(600));
}

#[test]
fn c08d_sharpness_c3() {
    run_check("c08d", Duration::from_secs(600));
}

#[test]
fn c09_additive_lower_bound() {
    run_check("c09", Duration::from_secs(300));
}

#[test]
fn c10_partition_recovery() {
    run_check("c10", Duration::from_secs(300));
}

#[test]
fn c11_turan_small_exact() {
    run_check("c11", Duration::from_secs(120));
}
