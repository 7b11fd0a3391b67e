use thiserror::Error;

use crate::arith::ArithError;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("(n, p) = ({n}, {p}) is out of range: need p >= 2 and n - 2p >= 1")]
    OutOfRange { n: u32, p: u32 },

    #[error(transparent)]
    Arith(#[from] ArithError),

    #[error("dimension mismatch: so({left}) vs so({right})")]
    DimensionMismatch { left: usize, right: usize },

    #[error("zero dimension for summand m{0}")]
    ZeroDimension(usize),

    #[error("derived Einstein polynomial f{index} is not proportional to the transcribed one at (n, p) = ({n}, {p})")]
    SystemMismatch { index: usize, n: u32, p: u32 },

    #[error("Groebner term ceiling of {ceiling} exceeded ({terms} terms, {basis_len} basis elements, {pairs_left} pairs pending)")]
    ResourceLimit {
        ceiling: usize,
        terms: usize,
        basis_len: usize,
        pairs_left: usize,
    },

    #[error("basis has no element in the single variable {0}")]
    NoUnivariateElement(String),

    #[error("known factor {factor} does not divide the eliminant: {detail}")]
    FactorDoesNotDivide { factor: String, detail: String },

    #[error("back-substitution relation for {variable} not found; basis leading monomials: {shapes}")]
    RelationNotFound { variable: String, shapes: String },

    #[error("golden data: {0}")]
    Golden(String),

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("invalid input: {0}")]
    Invalid(String),
}
