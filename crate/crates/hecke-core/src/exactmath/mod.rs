//! Exact coefficient arithmetic and exact dense linear algebra.
//!
//! Every computation in this crate is exact: coefficients are arbitrary
//! precision rationals ([`Rat`]) or sparse bivariate Laurent polynomials
//! in `q1, q2` over the rationals ([`LaurentQQ`]). No floating point
//! anywhere.
//!
//! Linear algebra comes in two flavors:
//! - small dense rational matrices ([`Matrix`]) with exact rank and
//!   inverse, used for intertwiners and spectral projections;
//! - an integer echelon form ([`ZSpan`]) used for the heavy subspace
//!   computations (subalgebra closures, independence of operator
//!   families), where rational inputs are scaled to primitive integer
//!   vectors first.

mod laurent;
mod matrix;
mod span;

pub use laurent::LaurentQQ;
pub use matrix::{Matrix, Scalar};
pub use span::{
    flatten_to_integer, primitive_integer, span_closure, span_closure_basis,
    span_closure_dim_mod_p, TriSpan, ZSpan,
};

use num_bigint::BigInt;
use num_rational::BigRational;

/// Exact rational scalar: reduced fraction with positive denominator.
pub type Rat = BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rat {
    Rat::from(BigInt::from(n))
}

/// Rational from numerator and denominator.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parse an exact rational string such as `"2"`, `"-1"`, or `"3/2"`.
pub fn parse_rat(s: &str) -> Result<Rat, ExactError> {
    s.trim()
        .parse::<Rat>()
        .map_err(|_| ExactError::BadRational(s.to_string()))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("evaluation of a negative exponent at zero")]
    EvalAtZero,
    #[error("matrix is singular")]
    Singular,
    #[error("matrix dimensions disagree: {0}")]
    DimensionMismatch(String),
    #[error("not a valid rational: {0}")]
    BadRational(String),
}
