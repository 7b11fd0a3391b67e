use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{dimensions, Laurent, TripleTable};
use crate::arith::{int, rat};
use crate::{check_cell, Error, Result};

/// One scale factor of the metric: a free symbol `u_k` or a positive rational.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MetricEntry {
    Symbolic,
    Value(BigRational),
}

/// `(u0, u1, u2, u3)`, scale factors of `-B` on `m0..m3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetricVector(pub [MetricEntry; 4]);

impl MetricVector {
    pub fn symbolic() -> Self {
        MetricVector([MetricEntry::Symbolic, MetricEntry::Symbolic, MetricEntry::Symbolic, MetricEntry::Symbolic])
    }

    /// Numeric metric; every entry must be strictly positive.
    pub fn numeric(values: [BigRational; 4]) -> Result<Self> {
        if let Some(v) = values.iter().find(|v| !v.is_positive()) {
            return Err(Error::Invalid(format!("metric entries must be positive, got {v}")));
        }
        Ok(MetricVector(values.map(MetricEntry::Value)))
    }

    fn as_laurent(&self, k: usize, power: i32) -> Laurent {
        match &self.0[k] {
            MetricEntry::Symbolic => Laurent::var_pow(k, power),
            MetricEntry::Value(v) => {
                let x = if power >= 0 {
                    num_traits::pow(v.clone(), power as usize)
                } else {
                    num_traits::pow(v.recip(), (-power) as usize)
                };
                Laurent::constant(x)
            }
        }
    }
}

/// `r0..r3` as exact Laurent polynomials in the symbolic metric entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RicciComponents(pub [Laurent; 4]);

impl RicciComponents {
    /// Values at a numeric point (symbolic entries replaced by `point`).
    pub fn eval(&self, point: &[BigRational; 4]) -> [BigRational; 4] {
        [0, 1, 2, 3].map(|k| self.0[k].eval(point))
    }

    /// Constant values when the metric was fully numeric.
    pub fn values(&self) -> [BigRational; 4] {
        self.eval(&[BigRational::one(), BigRational::one(), BigRational::one(), BigRational::one()])
    }
}

/// Ricci components from the general formula for a diagonal metric with
/// four pairwise inequivalent summands:
///
/// `r_k = 1/(2x_k) + 1/(4d_k) sum_{i,j} x_k/(x_i x_j) A_{jik}
///        - 1/(2d_k) sum_{i,j} x_j/(x_k x_i) A_{kij}`.
pub fn ricci_general(table: &TripleTable, dims: &[usize; 4], metric: &MetricVector) -> Result<RicciComponents> {
    if let Some(k) = dims.iter().position(|&d| d == 0) {
        return Err(Error::ZeroDimension(k));
    }
    let comps = [0, 1, 2, 3].map(|k| {
        let dk = int(dims[k] as i64);
        let mut r = metric.as_laurent(k, -1).scale(&rat(1, 2));
        for i in 0..4 {
            for j in 0..4 {
                let a = table.get(j, i, k);
                if !a.is_zero() {
                    let t = &(&metric.as_laurent(k, 1) * &metric.as_laurent(j, -1)) * &metric.as_laurent(i, -1);
                    r = &r + &t.scale(&(a / (&dk * int(4))));
                }
                let a = table.get(k, i, j);
                if !a.is_zero() {
                    let t = &(&metric.as_laurent(j, 1) * &metric.as_laurent(k, -1)) * &metric.as_laurent(i, -1);
                    r = &r - &t.scale(&(a / (&dk * int(2))));
                }
            }
        }
        r
    });
    Ok(RicciComponents(comps))
}

/// The four closed-form Ricci components for the Stiefel family, written in
/// `d1, d2, d3` and `D = d2 + 4 d3`.
pub fn ricci_specialized(n: u32, p: u32, metric: &MetricVector) -> Result<RicciComponents> {
    check_cell(n, p)?;
    let [_, d1, d2, d3] = dimensions(n, p).map(|d| int(d as i64));
    let den = &d2 + &d3 * int(4);
    let x = |k: usize, e: i32| metric.as_laurent(k, e);
    let term = |a: Laurent, b: Laurent, c: BigRational| (&a * &b).scale(&c);

    let r0 = &term(x(0, 1), x(2, -2), &d2 / (&den * int(4))) + &term(x(0, 1), x(3, -2), &d3 / &den);
    let r1 = &(&term(x(1, -1), Laurent::constant(BigRational::one()), &d3 * int(2) * (&d1 * int(2) + int(2) - &d3) / (&d1 * int(4) * &den))
        + &term(x(1, 1), x(2, -2), &d2 / (&den * int(4))))
        + &term(x(1, 1), x(3, -2), &d3 * (&d3 - int(2)) / (&d1 * int(2) * &den));
    let r2 = &(&(&x(2, -1).scale(&rat(1, 2)) - &term(x(3, 1), x(2, -2), &d3 / (&den * int(2))))
        - &term(x(0, 1), x(2, -2), int(1) / (&den * int(2))))
        - &term(x(1, 1), x(2, -2), &d1 / (&den * int(2)));
    let r3 = &(&(&x(3, -1).scale(&(rat(1, 2) - &d2 / (&den * int(2)))) + &term(x(3, 1), x(2, -2), &d2 / (&den * int(4))))
        - &term(x(0, 1), x(3, -2), int(2) / &den))
        - &term(x(1, 1), x(3, -2), (&d3 - int(2)) / &den);
    Ok(RicciComponents([r0, r1, r2, r3]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curvature::structure_constants_closed;

    fn ones() -> MetricVector {
        MetricVector::numeric([int(1), int(1), int(1), int(1)]).unwrap()
    }

    #[test]
    fn unit_metric_at_7_2() {
        let t = structure_constants_closed(7, 2).unwrap();
        let r = ricci_general(&t, &t.dims, &ones()).unwrap().values();
        assert_eq!(r, [rat(1, 4), rat(1, 4), rat(7, 20), rat(1, 4)]);
        let s = ricci_specialized(7, 2, &ones()).unwrap().values();
        assert_eq!(s[2], rat(7, 20));
        assert_eq!(s[0], rat(1, 4));
    }

    #[test]
    fn scaled_metric_scales_inversely() {
        let t = structure_constants_closed(9, 3).unwrap();
        let s = rat(5, 3);
        let r1 = ricci_general(&t, &t.dims, &ones()).unwrap().values();
        let m = MetricVector::numeric([s.clone(), s.clone(), s.clone(), s.clone()]).unwrap();
        let rt = ricci_general(&t, &t.dims, &m).unwrap().values();
        for k in 0..4 {
            assert_eq!(rt[k], &r1[k] / &s);
        }
    }

    #[test]
    fn p2_kills_u1_over_u3_squared() {
        let r1 = &ricci_specialized(11, 2, &MetricVector::symbolic()).unwrap().0[1];
        assert!(r1.terms().all(|(e, _)| *e != [0, 1, 0, -2]));
        let r1 = &ricci_specialized(11, 3, &MetricVector::symbolic()).unwrap().0[1];
        assert!(r1.terms().any(|(e, _)| *e == [0, 1, 0, -2]));
    }

    #[test]
    fn rejects_bad_input() {
        let t = structure_constants_closed(7, 2).unwrap();
        assert!(matches!(ricci_general(&t, &[1, 0, 12, 2], &ones()), Err(Error::ZeroDimension(1))));
        assert!(MetricVector::numeric([int(1), int(0), int(1), int(1)]).is_err());
    }
}
