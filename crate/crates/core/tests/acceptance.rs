//! Acceptance suite: every criterion runs at its stated tolerance
//! (exact equality throughout) and prints one pass/fail line.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the
//! per-criterion lines.

use equilag::corpus::{self, CriterionOutcome};

fn report(index: usize, outcome: &CriterionOutcome) {
    let status = if outcome.passed { "PASS" } else { "FAIL" };
    println!(
        "{status} criterion {index}: {} ({} cases)",
        outcome.criterion,
        outcome.cases.len()
    );
    for case in outcome.cases.iter().filter(|c| !c.passed) {
        println!("    FAIL {}: {}", case.name, case.detail);
    }
}

fn assert_criterion(index: usize, outcome: CriterionOutcome) {
    report(index, &outcome);
    let failures: Vec<String> = outcome
        .cases
        .iter()
        .filter(|c| !c.passed)
        .map(|c| format!("{}: {}", c.name, c.detail))
        .collect();
    assert!(
        outcome.passed,
        "criterion {index} ({}) failed:\n{}",
        outcome.criterion,
        failures.join("\n")
    );
}

#[test]
fn c01_invariant_lagrangian_on_every_corpus_cover() {
    let outcome = corpus::criterion_theorem_corpus(0);
    assert!(outcome.cases.len() >= 20, "corpus must have at least 20 cases");
    assert_criterion(1, outcome);
}

#[test]
fn c02_deck_action_trace_identity() {
    assert_criterion(2, corpus::criterion_trace_identity(0));
}

#[test]
fn c03_form_sanity_on_every_cover() {
    assert_criterion(3, corpus::criterion_form_sanity(0));
}

#[test]
fn c04_diagonal_reduction_suite_100_instances() {
    let outcome = corpus::criterion_diagonal_suite(0);
    assert_eq!(outcome.cases.len(), 100);
    assert_criterion(4, outcome);
}

#[test]
fn c05_transversal_for_every_corpus_lagrangian() {
    assert_criterion(5, corpus::criterion_transversal_suite(0));
}

#[test]
fn c06_induction_compatibility() {
    let outcome = corpus::criterion_induction_suite(0);
    assert!(outcome.cases.len() >= 5);
    assert_criterion(6, outcome);
}

#[test]
fn c07_same_group_covers_are_witt_equivalent() {
    let outcome = corpus::criterion_monodromy_pairs(0);
    assert!(outcome.cases.len() >= 5);
    assert_criterion(7, outcome);
}

#[test]
fn c08_representation_identities() {
    let outcome = corpus::criterion_rep_identities(0);
    assert_eq!(outcome.cases.len(), 10, "all ten supported groups");
    assert_criterion(8, outcome);
}

#[test]
fn c09_block_dimensions_match_twisted_homology() {
    assert_criterion(9, corpus::criterion_fox_blocks(0));
}

#[test]
fn c10_negative_control_rotation_plane() {
    assert_criterion(10, corpus::criterion_negative_control(0));
}
