//! Exact elimination pipeline for invariant Einstein metrics on the real
//! Stiefel manifolds `V_{2p} R^n = SO(n)/SO(n-2p)`.
//!
//! The metrics studied are the `Ad(U(p) x SO(n-2p))`-invariant diagonal
//! scalar products `u0 (-B)|m0 + u1 (-B)|m1 + u2 (-B)|m2 + u3 (-B)|m3`.
//! The crate builds the Lie-algebra model of `so(n)`, derives the Ricci
//! components and the Einstein system symbolically, eliminates with
//! lexicographic Groebner bases over the rationals, and certifies every
//! solution with exact Sturm counts and rational interval enclosures.
//!
//! Module map:
//!
//! * [`arith`]: rationals, sparse multivariate and dense univariate polynomials.
//! * [`son`]: matrix model of `so(n)` and the decomposition `h + m0 + m1 + m2 + m3`.
//! * [`curvature`]: structure constants, Ricci components, the Einstein system.
//! * [`groebner`]: Buchberger, eliminants, golden data, resultant cross-check.
//! * [`realroots`]: Sturm counting, isolation, refinement, interval arithmetic.
//! * [`solver`]: `solve`, `verify`, `scan` and the solution records.

pub mod arith;
pub mod curvature;
mod error;
pub mod groebner;
pub mod realroots;
pub mod solver;
pub mod son;

pub use error::{Error, Result};

/// Checks the admissibility precondition shared by every `(n, p)` entry point:
/// `p >= 2` and `n - 2p >= 1`.
pub fn check_cell(n: u32, p: u32) -> Result<()> {
    if p < 2 || n < 2 * p + 1 {
        return Err(Error::OutOfRange { n, p });
    }
    Ok(())
}
