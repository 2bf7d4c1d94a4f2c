//! Error types shared across the crate.

use thiserror::Error;

/// Convenience alias used by every fallible function in this crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong when evaluating the closed-form geometry.
///
/// The formulas in this crate are total on their stated domains, so each
/// variant names the precondition that was violated instead of wrapping a
/// cause chain.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A parameter landed outside the real domain of a formula.
    #[error("{op}: requires {requirement}; got {got}")]
    Domain {
        op: &'static str,
        requirement: &'static str,
        got: f64,
    },

    /// A denominator vanished and the value escapes to infinity.
    #[error("{op}: pole where {what} vanishes (parameter {at})")]
    Pole {
        op: &'static str,
        what: &'static str,
        at: f64,
    },

    /// Evaluation exactly on the ruling-domain boundary 1 + 2 cos t = 0,
    /// where a direction formula degenerates even though the point itself
    /// is still defined.
    #[error("{op}: 1 + 2 cos t = 0 at t = {t}; the formula degenerates on the domain boundary")]
    Boundary { op: &'static str, t: f64 },

    /// The touching curve is bounded and closed for -1 < lambda < 2, so it
    /// has no poles and no asymptotes there.
    #[error(
        "poles: lambda = {lambda} lies in (-1, 2); the touching curve is closed there and has no poles"
    )]
    NoPoles { lambda: f64 },

    /// The quadric pencil degenerates to a circle at lambda = 0 and 1; the
    /// rational point equation does not exist for those members.
    #[error("{op}: lambda = {lambda} is a degenerate pencil member (a circle); use the degenerate conic form instead")]
    Degenerate { op: &'static str, lambda: f64 },

    /// The operation is only defined for a fixed set of parameter values.
    #[error("{op}: lambda = {lambda} is not supported (supported: {supported})")]
    UnsupportedLambda {
        op: &'static str,
        lambda: f64,
        supported: &'static str,
    },

    /// Arc-length integration needs a strictly increasing parameter range.
    #[error("arc length: parameter range [{t0}, {t1}] is not strictly increasing")]
    NonMonotone { t0: f64, t1: f64 },
}
