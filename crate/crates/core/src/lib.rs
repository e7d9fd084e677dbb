//! Exact fixed-point counting for endomorphisms of complex tori.
//!
//! Given the rational representation of an endomorphism `f` (a `2g x 2g`
//! integer matrix), its analytic representation over the Gaussian integers,
//! or directly its characteristic polynomial `chi_r`, this crate computes
//! the number of fixed points of every iterate,
//!
//! ```text
//!   F(n) = prod over roots a of chi_r of (a^n - 1)
//! ```
//!
//! exactly, splits `chi_r` into its cyclotomic and non-cyclotomic parts,
//! classifies the growth of `F` as exponential, periodic or mixed, and
//! reports Mahler measure and unit-circle diagnostics.
//!
//! All discrete verdicts are decided with exact integer arithmetic; floating
//! point is only used for the advisory Mahler measure estimates.

mod arith;
pub mod dynamics;
pub mod endo;
mod error;
pub mod family;
pub mod input;
pub mod intpoly;
pub mod specsplit;

pub use error::{Error, Result};
pub use intpoly::{GaussInt, GaussIntPoly, IntPoly, Rational};
