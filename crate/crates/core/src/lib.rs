//! Exact umbral calculus for Appell sequences over `Q(λ)`.
//!
//! The crate computes Frobenius-Euler numbers and polynomials
//! `H_n^{(r)}(x|λ)` of any integer order, the λ-analogue Stirling numbers
//! `S_λ(n,k)`, and verifies the identities that relate them as exact
//! equalities in `Q(λ)[x]`. Nothing is sampled: `λ` stays an indeterminate
//! unless a value is substituted explicitly.
//!
//! - [`scalar`]: `Q` and `Q(λ)` arithmetic with canonical forms.
//! - [`xpoly`]: polynomials in `x` over `Q(λ)`.
//! - [`umbral`]: truncated series acting as functionals and operators.
//! - [`feuler`]: Frobenius-Euler numbers, polynomials and operators.
//! - [`identities`]: the verification harness and its JSON-lines report.
//! - [`parse`]: the polynomial expression grammar used on the command line.
//! - [`cli`]: the `feuler` command-line front end.

pub mod cli;
pub mod combinat;
pub mod error;
pub mod feuler;
pub mod identities;
pub mod parse;
pub mod scalar;
pub mod umbral;
pub mod xpoly;

pub use error::{Error, Result};
pub use feuler::{BasisExpansion, FeulerCache};
pub use scalar::{Degree, LambdaPoly, LambdaRat, Rational};
pub use umbral::{SeriesOrder, TruncSeries};
pub use xpoly::XPoly;
