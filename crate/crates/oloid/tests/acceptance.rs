//! Acceptance gate: one test per verification suite, each printing its
//! pass/fail verdict line and the per-check residuals. Run with
//! `cargo test --test acceptance -- --nocapture` to see every line.

use oloid::verify::{run_suite, Suite, VerifyOptions};

fn gate(suite: Suite) {
    let report = run_suite(suite, &VerifyOptions::default());
    print!("{report}");
    assert!(
        report.passed(),
        "criterion {} ({}) failed; worst check: {}",
        suite.criterion(),
        suite.name(),
        report.worst().map_or_else(String::new, |c| c.to_string())
    );
}

#[test]
fn c01_golden_points() {
    gate(Suite::Golden);
}

#[test]
fn c02_tangency() {
    gate(Suite::Tangency);
}

#[test]
fn c03_regression() {
    gate(Suite::Regression);
}

#[test]
fn c04_ruled_members() {
    gate(Suite::Ruled);
}

#[test]
fn c05_asymptote_limits() {
    gate(Suite::Asymptotes);
}

#[test]
fn c06_projections() {
    gate(Suite::Projection);
}

#[test]
fn c07_self_polar() {
    gate(Suite::SelfPolar);
}

#[test]
fn c08_development() {
    gate(Suite::Development);
}

#[test]
fn c09_surface_area() {
    gate(Suite::Area);
}

#[test]
fn c10_derivatives() {
    gate(Suite::Derivatives);
}
