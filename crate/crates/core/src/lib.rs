//! Combinatorial Nash modification of affine toric surfaces, in exact arithmetic.
//!
//! A toric surface is given by a finite set of monomial exponents in `Z²`. The
//! [`engine`] follows the affine charts of its Nash modification chosen by a
//! linear guiding form until the semigroup becomes free, and bounds the number
//! of steps. [`explorer`] enumerates the whole chart tree; [`valuation`] drives
//! the iteration from monomial valuations.

pub mod engine;
pub mod error;
pub mod explorer;
pub mod lattice;
pub mod valuation;

pub use error::{Error, Result};
