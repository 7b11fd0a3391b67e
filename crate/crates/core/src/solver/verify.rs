use num_rational::BigRational;
use serde::Serialize;

use super::record::{residual_decimal, Enclosure, SolutionRecord};
use crate::arith::{serde_rational, MultiPoly};
use crate::curvature::{einstein_system, ricci_general, structure_constants_closed, MetricVector, RicciComponents};
use crate::realroots::{eval_laurent, eval_multi, Interval};
use crate::{Error, Result};

/// Interval evaluation of the Einstein equations and Ricci components over
/// a metric box.
#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub n: u32,
    pub p: u32,
    /// `f_1, f_2, f_3` at the box normalized to `u3 = 1`.
    pub f: [Enclosure; 3],
    #[serde(with = "serde_rational")]
    pub residual_bound: BigRational,
    pub residual_bound_decimal: String,
    pub ricci: [Enclosure; 4],
    /// `lambda = r0`.
    pub einstein_constant: Enclosure,
    /// Largest width among the `r_k` enclosures.
    #[serde(with = "serde_rational")]
    pub ricci_width: BigRational,
}

/// The system and symbolic Ricci components of one cell, built once and
/// reused for every box.
#[derive(Clone, Debug)]
pub struct Checker {
    n: u32,
    p: u32,
    f: [MultiPoly; 3],
    ricci: RicciComponents,
}

impl Checker {
    pub fn new(n: u32, p: u32) -> Result<Checker> {
        let sys = einstein_system(n, p)?;
        let table = structure_constants_closed(n, p)?;
        let ricci = ricci_general(&table, &table.dims, &MetricVector::symbolic())?;
        Ok(Checker { n, p, f: sys.f, ricci })
    }

    pub fn system(&self) -> &[MultiPoly; 3] {
        &self.f
    }

    /// Fails with a verification error when the box is not positive or
    /// some `f_i` enclosure excludes 0.
    pub fn check(&self, bx: &[Interval; 4]) -> Result<VerifyReport> {
        if let Some(k) = bx.iter().position(|x| !x.is_positive()) {
            return Err(Error::Verification(format!("u{k} enclosure {} is not positive", bx[k].render(12))));
        }
        let inv3 = bx[3].recip().expect("positive");
        let normalized: Vec<Interval> = bx[..3].iter().map(|x| x * &inv3).collect();
        let f = [0, 1, 2].map(|i| eval_multi(&self.f[i], &normalized));
        for (i, e) in f.iter().enumerate() {
            if !e.contains_zero() {
                return Err(Error::Verification(format!(
                    "f{} enclosure {} excludes 0 at (n, p) = ({}, {})",
                    i + 1,
                    e.render(40),
                    self.n,
                    self.p
                )));
            }
        }
        let residual_bound = f.iter().map(Interval::mag).max().expect("three equations");
        let ricci = [0, 1, 2, 3].map(|k| eval_laurent(&self.ricci.0[k], bx).expect("positive box"));
        let ricci_width = ricci.iter().map(Interval::width).max().expect("four components");
        Ok(VerifyReport {
            n: self.n,
            p: self.p,
            f: f.each_ref().map(Enclosure::from_interval),
            residual_bound_decimal: residual_decimal(&residual_bound),
            residual_bound,
            einstein_constant: Enclosure::from_interval(&ricci[0]),
            ricci: ricci.each_ref().map(Enclosure::from_interval),
            ricci_width,
        })
    }
}

/// Checks a metric box `(u0, u1, u2, u3)` at `(n, p)`.
pub fn verify_box(n: u32, p: u32, bx: &[Interval; 4]) -> Result<VerifyReport> {
    Checker::new(n, p)?.check(bx)
}

/// Re-evaluates a record from scratch: every `f_i` enclosure must contain 0
/// and the residual bound must lie below `threshold`.
pub fn verify(rec: &SolutionRecord, threshold: &BigRational) -> Result<VerifyReport> {
    let report = verify_box(rec.n, rec.p, &rec.metric_box())?;
    if &report.residual_bound >= threshold {
        return Err(Error::Verification(format!(
            "residual bound {} is not below {}",
            report.residual_bound_decimal,
            residual_decimal(threshold)
        )));
    }
    Ok(report)
}
