//! Error type shared by every module of the crate.

/// Errors reported by construction, evaluation and verification routines.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// A scalar argument fell outside its documented range.
    #[error("`{name}` = {value} is outside its valid range {range}")]
    OutOfRange {
        name: &'static str,
        value: f64,
        range: &'static str,
    },

    /// A derivative order beyond what the estimator or the closed-form
    /// tower supports.
    #[error("derivative order {order} unsupported (expected {expected})")]
    UnsupportedOrder { order: u32, expected: &'static str },

    /// The function handed to a finite-difference stencil produced NaN
    /// or an infinity at a stencil node.
    #[error("function evaluation returned a non-finite value near {point}")]
    NonFiniteEvaluation { point: f64 },

    /// The two independent quadrature schemes disagreed beyond the
    /// cross-validation budget.
    #[error("quadrature cross-check failed: |{a} - {b}| = {diff} > {limit}")]
    QuadratureMismatch {
        a: f64,
        b: f64,
        diff: f64,
        limit: f64,
    },

    /// A sample grid that must be nonempty was empty.
    #[error("empty grid: {name}")]
    EmptyGrid { name: &'static str },

    /// A parameter window failed its shape preconditions.
    #[error("window [{lo}, {hi}] invalid: {reason}")]
    InvalidWindow { lo: f64, hi: f64, reason: &'static str },

    /// A calibration document failed to parse or violated its invariants.
    #[error("calibration file: {0}")]
    CalibrationFormat(String),
}

pub type Result<T> = std::result::Result<T, Error>;
