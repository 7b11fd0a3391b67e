//! Structure constants, Ricci components and the Einstein system for the
//! four-parameter family of `Ad(U(p) x SO(n-2p))`-invariant metrics.

mod laurent;
mod ricci;
mod system;
mod triples;

pub use laurent::Laurent;
pub use ricci::{ricci_general, ricci_specialized, MetricEntry, MetricVector, RicciComponents};
pub use system::{einstein_system, jensen_quadratic, printed_system, EinsteinSystem};
pub use triples::{structure_constants_bruteforce, structure_constants_closed, triple_bruteforce, TripleTable};

/// `(d0, d1, d2, d3) = (1, p^2 - 1, 2p(n - 2p), p(p - 1))`.
pub fn dimensions(n: u32, p: u32) -> [usize; 4] {
    let (n, p) = (n as usize, p as usize);
    [1, p * p - 1, 2 * p * (n - 2 * p), p * (p - 1)]
}
