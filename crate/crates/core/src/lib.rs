//! Free Reynolds algebras built from bracketed words.
//!
//! A Reynolds operator on an algebra is a linear map `P` with
//!
//! ```text
//! P(u)P(v) = P(uP(v)) + P(P(u)v) - P(P(u)P(v))
//! ```
//!
//! This crate models the free such algebra on a set of letters. Its basis is
//! the set of *Reynolds words*: bracketed words with no bracket that directly
//! encloses two or more brackets and nothing else.
//!
//! - [`words`]: bracketed words, parsing, classification and tower factorization.
//! - [`algebra`]: linear combinations, concatenation product, the operator `P`
//!   and residual checkers for the identities it satisfies.
//! - [`forests`]: the decorated planar forest view of bracketed words.
//! - [`models`]: concrete Reynolds algebras on polynomials and the universal map
//!   out of the free algebra.
//! - [`enumeration`]: brute-force generation of words and an independent
//!   evaluation of `P` used as a cross-check.
//!
//! Everything that carries coefficients is generic over a [`Scalar`]. The
//! aliases below fix the scalar to exact rationals, which is what identity
//! checking needs.

pub mod algebra;
pub mod enumeration;
pub mod forests;
pub mod models;
pub mod scalar;
pub mod words;

pub use algebra::{AlgebraError, LinComb, ReynoldsOperator};
pub use forests::{DecoratedForest, DecoratedTree, Decoration};
pub use models::{ModelError, Polynomial, PolynomialModel, ReynoldsModel};
pub use scalar::Scalar;
pub use words::{Atom, Letter, ParseError, Word, WordClass, WordError};

/// Exact rational scalars with unbounded numerator and denominator.
pub type Rational = num_rational::BigRational;

/// Linear combination of bracketed words with exact rational coefficients.
pub type Combination = LinComb<Rational>;

/// Polynomial in one variable with exact rational coefficients.
pub type RationalPolynomial = Polynomial<Rational>;

/// Polynomial Reynolds algebra over the rationals.
pub type RationalPolynomialModel = PolynomialModel<Rational>;

/// Floating-point linear combinations. Identities only hold up to rounding here.
pub type CombinationF64 = LinComb<f64>;

/// Builds a rational from a numerator and denominator.
///
/// Panics if `denom` is zero.
pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(numer.into(), denom.into())
}
