use num_rational::BigRational;

use super::{ricci_general, structure_constants_closed, MetricVector};
use crate::arith::{int, Monomial, MonomialOrder, MultiPoly, Ring, UniPoly};
use crate::{check_cell, Error, Result};

/// The Einstein equations `r0 = r1, r1 = r2, r2 = r3` at `u3 = 1`, as
/// primitive integer polynomials in `(u0, u1, u2)` with positive leading
/// coefficient under `lex(u0 > u1 > u2)`.
#[derive(Clone, Debug)]
pub struct EinsteinSystem {
    pub n: u32,
    pub p: u32,
    pub ring: Ring,
    pub f: [MultiPoly; 3],
    /// `f[i] = printed_ratio[i] * printed_system(n, p)[i]`.
    pub printed_ratio: [BigRational; 3],
}

impl EinsteinSystem {
    pub fn ring() -> Ring {
        Ring::new(&["u0", "u1", "u2"])
    }
}

/// Derives the Einstein system from the general Ricci formula and checks it
/// is proportional, equation by equation, to the transcribed closed form.
pub fn einstein_system(n: u32, p: u32) -> Result<EinsteinSystem> {
    check_cell(n, p)?;
    let table = structure_constants_closed(n, p)?;
    let ric = ricci_general(&table, &table.dims, &MetricVector::symbolic())?;
    let ring = EinsteinSystem::ring();
    let order = MonomialOrder::lex(&ring, &["u0", "u1", "u2"])?;
    let printed = printed_system(n, p);
    let mut f = Vec::with_capacity(3);
    let mut ratios = Vec::with_capacity(3);
    for i in 0..3 {
        let diff = (&ric.0[i] - &ric.0[i + 1]).eval_var(3, &int(1));
        let (_, poly) = diff.clear_denominators(&ring);
        let (_, prim) = poly.primitive(&order);
        let ratio = prim.proportionality(&printed[i]).ok_or(Error::SystemMismatch { index: i + 1, n, p })?;
        f.push(prim);
        ratios.push(ratio);
    }
    let [f1, f2, f3]: [MultiPoly; 3] = f.try_into().expect("three equations");
    let [r1, r2, r3]: [BigRational; 3] = ratios.try_into().expect("three ratios");
    Ok(EinsteinSystem { n, p, ring, f: [f1, f2, f3], printed_ratio: [r1, r2, r3] })
}

/// Transcription of the normalized system `f1, f2, f3` as printed for
/// general `(n, p)`, specialized to integers.
pub fn printed_system(n: u32, p: u32) -> [MultiPoly; 3] {
    let ring = EinsteinSystem::ring();
    let (n, p) = (n as i64, p as i64);
    let t = |c: i64, e: [u32; 3]| MultiPoly::monomial(&ring, Monomial::from_exponents(&e), int(c));
    let sum = |ts: Vec<MultiPoly>| ts.iter().fold(MultiPoly::zero(&ring), |a, b| &a + b);
    let k = n - 2 * p;
    let f1 = sum(vec![
        t(k, [1, 1, 0]),
        t(-k, [0, 2, 0]),
        t(2 * (p - 1), [1, 1, 2]),
        t(-(p - 2), [0, 2, 2]),
        t(-p, [0, 0, 2]),
    ]);
    let f2 = sum(vec![
        t(n * p - p * p - 1, [0, 2, 0]),
        t(-2 * (n - 2) * p, [0, 1, 1]),
        t(p * p, [0, 0, 2]),
        t((p - 2) * p, [0, 2, 2]),
        t((p - 1) * p, [0, 1, 0]),
        t(1, [1, 1, 0]),
    ]);
    let f3 = sum(vec![
        t(2 * (n - 2) * p, [0, 0, 1]),
        t(p * (-n + p + 1), [0, 0, 0]),
        t(2 * (p - 2) * (p + 1), [0, 1, 2]),
        t(-(p - 1) * (p + 1), [0, 1, 0]),
        t(-4 * (p - 1) * p, [0, 0, 2]),
        t(4, [1, 0, 2]),
        t(-1, [1, 0, 0]),
    ]);
    [f1, f2, f3]
}

/// `2(p - 1) u2^2 - 2(n - 2) u2 + (n - 1)`, whose roots give the Jensen
/// metrics `u0 = u1 = 1`.
pub fn jensen_quadratic(n: u32, p: u32) -> UniPoly {
    let (n, p) = (n as i64, p as i64);
    UniPoly::from_ints("u2", &[n - 1, -2 * (n - 2), 2 * (p - 1)])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn system_at_7_2_matches_printed() {
        let sys = einstein_system(7, 2).unwrap();
        let ring = EinsteinSystem::ring();
        let v = |s| ring.var(s).unwrap();
        let (u0, u1, u2) = (v("u0"), v("u1"), v("u2"));
        let expected = &(&(&(&u0 * &u1).scale(&int(3)) - &(&u1 * &u1).scale(&int(3)))
            + &(&(&u0 * &u1) * &(&u2 * &u2)).scale(&int(2)))
            - &(&u2 * &u2).scale(&int(2));
        assert!(sys.f[0].proportionality(&expected).is_some());
    }

    #[test]
    fn boundary_cells_derive() {
        for (n, p) in [(5, 2), (6, 2), (7, 3), (20, 7), (21, 10)] {
            einstein_system(n, p).unwrap();
        }
        assert!(einstein_system(4, 2).is_err());
    }
}
