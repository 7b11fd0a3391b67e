//! Certified real roots of univariate polynomials: Sturm counting, exact
//! bisection isolation and refinement, multiplicities from the gcd chain,
//! and rational interval enclosures.

mod interval;

pub use interval::{eval_laurent, eval_multi, eval_uni, Interval};

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{rat, sign, sign_variations, to_decimal, Bound, UniPoly};

/// Interval containing exactly one real root of an associated squarefree
/// polynomial. Either `lo < hi` with nonzero values of opposite sign at the
/// endpoints, or `lo == hi` is the root itself (`exact`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsolatingInterval {
    #[serde(with = "crate::arith::serde_rational")]
    pub lo: BigRational,
    #[serde(with = "crate::arith::serde_rational")]
    pub hi: BigRational,
    pub exact: bool,
}

impl IsolatingInterval {
    pub fn exact(x: BigRational) -> Self {
        IsolatingInterval { lo: x.clone(), hi: x, exact: true }
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn as_interval(&self) -> Interval {
        Interval::new(self.lo.clone(), self.hi.clone())
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn render(&self, digits: usize) -> String {
        if self.exact {
            to_decimal(&self.lo, digits)
        } else {
            format!("[{}, {}]", to_decimal(&self.lo, digits), to_decimal(&self.hi, digits))
        }
    }
}

/// Exact sign of `f(q)`.
pub fn sign_at(f: &UniPoly, q: &BigRational) -> i32 {
    f.sign_at(q)
}

/// Distinct real roots of `f` in the half-open interval `(lo, hi]`, from the
/// Sturm chain of the squarefree part. The zero polynomial has no isolated
/// roots and counts as 0.
pub fn count_real_roots(f: &UniPoly, lo: &Bound, hi: &Bound) -> usize {
    let Ok(sq) = f.squarefree_part() else { return 0 };
    let Ok(seq) = sq.sturm_sequence() else { return 0 };
    count_with(&seq, lo, hi)
}

fn count_with(seq: &[UniPoly], lo: &Bound, hi: &Bound) -> usize {
    sign_variations(seq, lo).saturating_sub(sign_variations(seq, hi))
}

/// Isolating intervals for every distinct real root, ascending.
pub fn isolate(f: &UniPoly) -> Vec<IsolatingInterval> {
    let Ok(sq) = f.squarefree_part() else { return Vec::new() };
    if sq.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let b = sq.root_bound();
    isolate_open(&sq, -b.clone(), b)
}

/// Isolating intervals for the roots in `(0, infinity)`.
pub fn isolate_positive(f: &UniPoly) -> Vec<IsolatingInterval> {
    let Ok(sq) = f.squarefree_part() else { return Vec::new() };
    if sq.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    // A root at zero occurs once in the squarefree part; dividing it out
    // leaves the positive roots and makes 0 a valid open endpoint.
    let x = UniPoly::from_ints(sq.var(), &[0, 1]);
    let g = if sq.eval(&BigRational::zero()).is_zero() { sq.exact_div(&x).expect("x divides") } else { sq };
    if g.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let b = g.root_bound();
    isolate_open(&g, BigRational::zero(), b)
}

/// Roots of squarefree `f` in `(a, b)`, assuming `f(a) != 0 != f(b)`.
fn isolate_open(f: &UniPoly, a: BigRational, b: BigRational) -> Vec<IsolatingInterval> {
    let seq = f.sturm_sequence().expect("nonzero");
    let mut out = Vec::new();
    let mut stack = vec![(a, b)];
    while let Some((a, b)) = stack.pop() {
        let c = count_with(&seq, &Bound::At(a.clone()), &Bound::At(b.clone()));
        match c {
            0 => {}
            1 => out.push(IsolatingInterval { lo: a, hi: b, exact: false }),
            _ => {
                let m = split_point(f, &a, &b);
                stack.push((a, m.clone()));
                stack.push((m, b));
            }
        }
    }
    out.sort_by(|x, y| x.lo.cmp(&y.lo));
    out
}

/// A point strictly inside `(a, b)` where `f` does not vanish, preferring
/// the midpoint.
fn split_point(f: &UniPoly, a: &BigRational, b: &BigRational) -> BigRational {
    let w = b - a;
    for k in 2i64.. {
        for j in 1..k {
            let m = a + &w * rat(j, k);
            if !f.eval(&m).is_zero() {
                return m;
            }
        }
    }
    unreachable!("a nonzero polynomial has finitely many roots")
}

/// Bisects `iv` until its width is below `width`. `f` must be squarefree
/// with a sign change across `iv`; hitting the root exactly returns an
/// `exact` interval.
pub fn refine(f: &UniPoly, iv: &IsolatingInterval, width: &BigRational) -> IsolatingInterval {
    if iv.exact {
        return iv.clone();
    }
    let (mut lo, mut hi) = (iv.lo.clone(), iv.hi.clone());
    let slo = sign(&f.eval(&lo));
    debug_assert!(slo != 0 && slo == -sign(&f.eval(&hi)), "not a sign-change interval");
    let two = rat(2, 1);
    while &(&hi - &lo) >= width {
        let m = (&lo + &hi) / &two;
        match sign(&f.eval(&m)) {
            0 => return IsolatingInterval::exact(m),
            s if s == slo => lo = m,
            _ => hi = m,
        }
    }
    IsolatingInterval { lo, hi, exact: false }
}

/// Multiplicity in `f` of the unique root isolated by `iv`, counted through
/// the chain `g_0 = f, g_{k+1} = gcd(g_k, g_k')`.
pub fn multiplicity(f: &UniPoly, iv: &IsolatingInterval) -> usize {
    let mut g = f.clone();
    let mut m = 0;
    while g.degree().unwrap_or(0) > 0 {
        let hit = if iv.exact {
            g.eval(&iv.lo).is_zero()
        } else {
            count_real_roots(&g, &Bound::At(iv.lo.clone()), &Bound::At(iv.hi.clone())) > 0
        };
        if !hit {
            break;
        }
        m += 1;
        g = g.gcd(&g.derivative());
    }
    m
}

/// Exact sign of the root of squarefree `f` isolated by `iv`.
pub fn root_sign(f: &UniPoly, iv: &IsolatingInterval) -> i32 {
    if iv.exact {
        return sign(&iv.lo);
    }
    if !iv.lo.is_negative() {
        return 1;
    }
    if !iv.hi.is_positive() {
        return -1;
    }
    match sign(&f.eval(&BigRational::zero())) {
        0 => 0,
        s if s == sign(&f.eval(&iv.lo)) => 1,
        _ => -1,
    }
}

/// Root summary for one polynomial.
#[derive(Clone, Debug, Serialize)]
pub struct RootReport {
    pub label: String,
    pub degree: usize,
    pub real_roots: usize,
    pub positive_roots: usize,
    /// Sign changes of the coefficients; bounds `positive_roots`.
    pub descartes_bound: usize,
    pub roots: Vec<IsolatingInterval>,
    pub multiplicities: Vec<usize>,
    /// Exact sign of each root.
    pub signs: Vec<i32>,
    pub squarefree: bool,
}

impl RootReport {
    /// Isolates all real roots and refines each below `width`.
    pub fn new(label: impl Into<String>, f: &UniPoly, width: &BigRational) -> RootReport {
        let sq = f.squarefree_part().unwrap_or_else(|_| f.clone());
        let roots: Vec<IsolatingInterval> = isolate(f).iter().map(|iv| refine(&sq, iv, width)).collect();
        let multiplicities = roots.iter().map(|iv| multiplicity(f, iv)).collect();
        let signs = roots.iter().map(|iv| root_sign(&sq, iv)).collect();
        let real_roots = count_real_roots(f, &Bound::NegInf, &Bound::PosInf);
        let positive_roots = count_real_roots(f, &Bound::At(BigRational::zero()), &Bound::PosInf);
        RootReport {
            label: label.into(),
            degree: f.degree().unwrap_or(0),
            real_roots,
            positive_roots,
            descartes_bound: f.descartes_sign_changes(),
            roots,
            multiplicities,
            signs,
            squarefree: f.is_squarefree(),
        }
    }

    pub fn positive(&self) -> impl Iterator<Item = &IsolatingInterval> {
        self.roots.iter().zip(&self.signs).filter(|(_, s)| **s > 0).map(|(iv, _)| iv)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, parse_rational};
    use crate::curvature::jensen_quadratic;

    #[test]
    fn counts() {
        let q = jensen_quadratic(7, 2);
        assert_eq!(count_real_roots(&q, &Bound::At(int(0)), &Bound::PosInf), 2);
        let f = UniPoly::from_ints("x", &[-2, 0, 1]);
        assert_eq!(count_real_roots(&f, &Bound::NegInf, &Bound::PosInf), 2);
        assert_eq!(count_real_roots(&f, &Bound::At(int(-1)), &Bound::At(int(1))), 0);
        // Half-open: a root at the upper end counts, at the lower end not.
        let g = UniPoly::from_ints("x", &[-1, 1]);
        assert_eq!(count_real_roots(&g, &Bound::At(int(0)), &Bound::At(int(1))), 1);
        assert_eq!(count_real_roots(&g, &Bound::At(int(1)), &Bound::At(int(2))), 0);
        assert_eq!(count_real_roots(&UniPoly::zero("x"), &Bound::NegInf, &Bound::PosInf), 0);
    }

    #[test]
    fn sqrt_two() {
        let f = UniPoly::from_ints("x", &[-2, 0, 1]);
        let ivs = isolate(&f);
        assert_eq!(ivs.len(), 2);
        assert!(ivs[0].hi <= ivs[1].lo);
        let w = parse_rational("1e-30").unwrap();
        let r = refine(&f, &ivs[1], &w);
        assert!(r.width() < w);
        assert!(r.render(12).starts_with("[1.414213562373"));
        assert_eq!(f.sign_at(&r.lo), -f.sign_at(&r.hi));
    }

    #[test]
    fn jensen_root_at_7_2() {
        let q = jensen_quadratic(7, 2);
        let w = parse_rational("1e-20").unwrap();
        let r = refine(&q, &isolate_positive(&q)[0], &w);
        assert_eq!(to_decimal(&r.lo, 9), "0.697224362");
    }

    #[test]
    fn exact_roots_and_multiplicity() {
        // (x - 1/2)^3 (x + 3): refinement lands on 1/2 exactly.
        let a = UniPoly::new("x", vec![rat(-1, 2), int(1)]);
        let f = &a.pow(3) * &UniPoly::from_ints("x", &[3, 1]);
        let rep = RootReport::new("f", &f, &rat(1, 1000));
        assert_eq!(rep.real_roots, 2);
        assert_eq!(rep.positive_roots, 1);
        assert_eq!(rep.multiplicities, vec![1, 3]);
        assert_eq!(rep.signs, vec![-1, 1]);
        assert!(!rep.squarefree);
        let pos: Vec<_> = rep.positive().collect();
        assert!(pos[0].contains(&rat(1, 2)));
    }

    #[test]
    fn positive_isolation_skips_zero() {
        let f = UniPoly::from_ints("x", &[0, -4, 0, 1]);
        let ivs = isolate_positive(&f);
        assert_eq!(ivs.len(), 1);
        assert!(ivs[0].contains(&int(2)) || refine(&f, &ivs[0], &rat(1, 10)).contains(&int(2)));
    }
}
