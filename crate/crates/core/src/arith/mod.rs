//! Exact arithmetic: rationals, monomials and lexicographic orders, sparse
//! multivariate polynomials and dense univariate polynomials.

mod monomial;
mod multipoly;
mod rational;
pub mod serde_rational;
mod unipoly;

pub use monomial::{Monomial, MonomialOrder};
pub use multipoly::{MultiPoly, Ring};
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use rational::{int, parse_rational, rat, to_decimal, to_scientific};
pub use unipoly::{Bound, UniPoly};
pub(crate) use unipoly::{sign, sign_variations};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division is not exact; remainder leading term {0}")]
    NotExact(String),
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("division by zero")]
    DivisionByZero,
    #[error("rings differ: {0:?} vs {1:?}")]
    RingMismatch(Vec<String>, Vec<String>),
    #[error("unknown variable {0}")]
    UnknownVariable(String),
    #[error("order {0:?} is not a permutation of the ring variables")]
    BadOrder(Vec<String>),
    #[error("cannot parse rational {0:?}")]
    Parse(String),
}
