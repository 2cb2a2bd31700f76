//! Finite-field value sets, diagonal and Dickson equations, and exact checks
//! of restricted-variable Chevalley–Warning solvability conditions.
//!
//! The crate is organised bottom-up:
//!
//! - [`gf`]: fields `F_{p^s}` with deterministic moduli and table arithmetic.
//! - [`polys`]: univariate/multivariate evaluation and Dickson polynomials.
//! - [`valueset`]: value sets by enumeration and by closed form.
//! - [`equations`]: solution counting, naive and by histogram convolution.
//! - [`theorems`]: hypothesis checkers, sweeps and the worked examples.

pub mod arith;
pub mod cli;
pub mod equations;
pub mod error;
pub mod gf;
pub mod polys;
pub mod rational;
pub mod theorems;
pub mod valueset;

pub use error::{Error, Result};
pub use gf::{Elem, Field, FieldElement};
