use num_bigint::BigInt;
use thiserror::Error;

use crate::lattice::LatticePoint;

/// Errors raised by the lattice primitives, the Nash engine and the layers on top.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("exponent set is empty")]
    EmptySet,
    #[error("exponent set contains the zero vector")]
    ContainsOrigin,
    #[error("radicand {0} is not square-free")]
    InvalidRadicand(u64),
    #[error("cannot mix quadratic extensions with radicands {0} and {1}")]
    MixedRadicands(u64, u64),
    #[error("guiding form has both coefficients zero")]
    ZeroForm,
    #[error("matrix has determinant {0}, expected +1 or -1")]
    NotUnimodular(BigInt),
    #[error("origin lies in the convex hull of the generators")]
    OriginInHull,
    #[error("all points are collinear through the origin")]
    Collinear,
    #[error("points generate a sublattice of index {0}, expected 1")]
    NotGenerating(BigInt),
    #[error("chart for pair ({}, {}) contains the origin in its convex hull", .i + 1, .j + 1)]
    HullViolation { i: usize, j: usize },
    #[error("guiding form takes a negative value at {0}")]
    NegativeValue(LatticePoint),
    #[error("choice index {index} out of range ({available} choices)")]
    ChoiceOutOfRange { index: usize, available: usize },
    #[error("guiding form does not have coprime integer coefficients")]
    NotInteger,
    #[error("invalid valuation: {0}")]
    InvalidValuation(&'static str),
    #[error("valuation is not centered on the exponent set")]
    NotCentered,
    #[error("no chosen chart stays centered for the valuation")]
    CenterLost,
}

impl Error {
    /// Stable machine-readable identifier, used by the CLI.
    pub fn code(&self) -> &'static str {
        match self {
            Error::EmptySet => "empty-set",
            Error::ContainsOrigin => "contains-origin",
            Error::InvalidRadicand(_) => "invalid-radicand",
            Error::MixedRadicands(..) => "mixed-radicands",
            Error::ZeroForm => "zero-form",
            Error::NotUnimodular(_) => "not-unimodular",
            Error::OriginInHull => "origin-in-hull",
            Error::Collinear => "collinear",
            Error::NotGenerating(_) => "not-generating",
            Error::HullViolation { .. } => "hull-violation",
            Error::NegativeValue(_) => "negative-value",
            Error::ChoiceOutOfRange { .. } => "choice-out-of-range",
            Error::NotInteger => "not-integer",
            Error::InvalidValuation(_) => "invalid-valuation",
            Error::NotCentered => "not-centered",
            Error::CenterLost => "center-lost",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
