//! Matrix model of `so(n)` in the basis `e_ab = E_ab - E_ba`, and the
//! decomposition `so(n) = h + m0 + m1 + m2 + m3` attached to
//! `K = U(p) x SO(n-2p)`.
//!
//! `u(p)` sits in the upper-left `so(2p)` block as the centralizer of the
//! complex structure `J = e_12 + e_34 + ... + e_{2p-1,2p}`. All basis vectors
//! are stored unnormalized with rational coefficients; norms are taken as
//! `-B(x, x)`.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::int;
use crate::{check_cell, Error, Result};

/// `(a, b)` with `1 <= a < b <= n`, standing for `e_ab`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisIndex {
    a: usize,
    b: usize,
}

impl BasisIndex {
    /// `e_ab` as `(index, sign)`, using `e_ba = -e_ab`; `None` when `a == b`.
    pub fn oriented(a: usize, b: usize) -> Option<(BasisIndex, i32)> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Some((BasisIndex { a, b }, 1)),
            std::cmp::Ordering::Greater => Some((BasisIndex { a: b, b: a }, -1)),
            std::cmp::Ordering::Equal => None,
        }
    }

    pub fn row(&self) -> usize {
        self.a
    }

    pub fn col(&self) -> usize {
        self.b
    }
}

/// Exact rational combination of the `e_ab`, i.e. a skew-symmetric matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewElement {
    n: usize,
    coeffs: BTreeMap<BasisIndex, BigRational>,
}

impl SkewElement {
    pub fn zero(n: usize) -> Self {
        SkewElement { n, coeffs: BTreeMap::new() }
    }

    /// The basis matrix `e_ab` (1-based; `a > b` gives `-e_ba`).
    pub fn basis(n: usize, a: usize, b: usize) -> Self {
        assert!(a >= 1 && b >= 1 && a <= n && b <= n, "index out of range for so({n})");
        let mut x = Self::zero(n);
        if let Some((idx, s)) = BasisIndex::oriented(a, b) {
            x.add_term(idx, int(s as i64));
        }
        x
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (&BasisIndex, &BigRational)> {
        self.coeffs.iter()
    }

    pub fn coeff(&self, a: usize, b: usize) -> BigRational {
        match BasisIndex::oriented(a, b) {
            Some((idx, s)) => {
                let c = self.coeffs.get(&idx).cloned().unwrap_or_else(BigRational::zero);
                if s < 0 {
                    -c
                } else {
                    c
                }
            }
            None => BigRational::zero(),
        }
    }

    fn add_term(&mut self, idx: BasisIndex, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(idx).or_insert_with(BigRational::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&idx);
        }
    }

    fn add_oriented(&mut self, a: usize, b: usize, c: BigRational) {
        if let Some((idx, s)) = BasisIndex::oriented(a, b) {
            self.add_term(idx, if s < 0 { -c } else { c });
        }
    }

    pub fn add(&self, other: &SkewElement) -> SkewElement {
        let mut out = self.clone();
        for (i, c) in &other.coeffs {
            out.add_term(*i, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &SkewElement) -> SkewElement {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn scale(&self, c: &BigRational) -> SkewElement {
        let mut out = Self::zero(self.n);
        for (i, a) in &self.coeffs {
            out.add_term(*i, a * c);
        }
        out
    }

    /// Dense `n x n` matrix (0-based rows and columns).
    pub fn to_matrix(&self) -> Vec<Vec<BigRational>> {
        let mut m = vec![vec![BigRational::zero(); self.n]; self.n];
        for (i, c) in &self.coeffs {
            m[i.a - 1][i.b - 1] += c;
            m[i.b - 1][i.a - 1] -= c;
        }
        m
    }
}

fn same_dim(x: &SkewElement, y: &SkewElement) -> Result<()> {
    if x.n != y.n {
        return Err(Error::DimensionMismatch { left: x.n, right: y.n });
    }
    Ok(())
}

/// Lie bracket `xy - yx`, expanded with
/// `[e_ab, e_cd] = d_bc e_ad + d_ad e_bc - d_ac e_bd - d_bd e_ac`.
pub fn bracket(x: &SkewElement, y: &SkewElement) -> Result<SkewElement> {
    same_dim(x, y)?;
    let mut out = SkewElement::zero(x.n);
    for (i, p) in &x.coeffs {
        for (j, q) in &y.coeffs {
            let c = p * q;
            let (a, b, cc, d) = (i.a, i.b, j.a, j.b);
            if b == cc {
                out.add_oriented(a, d, c.clone());
            }
            if a == d {
                out.add_oriented(b, cc, c.clone());
            }
            if a == cc {
                out.add_oriented(b, d, -c.clone());
            }
            if b == d {
                out.add_oriented(a, cc, -c);
            }
        }
    }
    Ok(out)
}

/// `tr(xy)`; basis elements satisfy `tr(e_ab e_ab) = -2`.
pub fn trace_product(x: &SkewElement, y: &SkewElement) -> Result<BigRational> {
    same_dim(x, y)?;
    let mut acc = BigRational::zero();
    for (i, p) in &x.coeffs {
        if let Some(q) = y.coeffs.get(i) {
            acc += p * q;
        }
    }
    Ok(acc * int(-2))
}

/// Killing form `B(x, y) = (n - 2) tr(xy)`.
pub fn killing(x: &SkewElement, y: &SkewElement) -> Result<BigRational> {
    if x.n < 3 {
        return Err(Error::Invalid(format!("Killing form needs n >= 3, got {}", x.n)));
    }
    Ok(trace_product(x, y)? * int(x.n as i64 - 2))
}

/// `-B(x, x)`, positive for nonzero `x`.
pub fn norm_sq(x: &SkewElement) -> BigRational {
    -killing(x, x).expect("same element")
}

/// The summands of `so(n) = h + m0 + m1 + m2 + m3`, each with a
/// `(-B)`-orthogonal (unnormalized) basis.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub n: u32,
    pub p: u32,
    /// `so(n - 2p)` in the lower-right block.
    pub h_iso: Vec<SkewElement>,
    /// `m0 = span{J}`, the center of `u(p)`.
    pub m0: Vec<SkewElement>,
    /// `su(p)`, orthogonal complement of `J` in `u(p)`.
    pub m1: Vec<SkewElement>,
    /// Off-diagonal block `e_ab`, `a <= 2p < b`.
    pub m2: Vec<SkewElement>,
    /// `so(2p)` minus `u(p)`.
    pub m3: Vec<SkewElement>,
}

/// Summand labels used by reports: `0..=3` for `m0..m3`, `4` for `h`.
pub const H_LABEL: usize = 4;

impl Decomposition {
    /// Basis of `m_i` for `i` in `0..=3`, or of `h` for [`H_LABEL`].
    pub fn summand(&self, i: usize) -> &[SkewElement] {
        match i {
            0 => &self.m0,
            1 => &self.m1,
            2 => &self.m2,
            3 => &self.m3,
            H_LABEL => &self.h_iso,
            _ => panic!("no summand {i}"),
        }
    }

    /// `(d0, d1, d2, d3)`.
    pub fn dims(&self) -> [usize; 4] {
        [self.m0.len(), self.m1.len(), self.m2.len(), self.m3.len()]
    }

    pub fn total_dim(&self) -> usize {
        self.dims().iter().sum::<usize>() + self.h_iso.len()
    }

    /// Components of `v` along each summand: `(label, coefficient)` pairs with
    /// `coefficient = B(v, x) / B(x, x)` for basis vector `x`.
    pub fn summand_components(&self, v: &SkewElement) -> Vec<(usize, BigRational)> {
        let mut out = Vec::new();
        for label in [0, 1, 2, 3, H_LABEL] {
            for x in self.summand(label) {
                let c = trace_product(v, x).expect("same n");
                if !c.is_zero() {
                    out.push((label, c / trace_product(x, x).expect("same n")));
                }
            }
        }
        out
    }

    /// Labels of the summands `v` has a nonzero component in.
    pub fn support(&self, v: &SkewElement) -> Vec<usize> {
        let mut labels: Vec<usize> = self.summand_components(v).into_iter().map(|(l, _)| l).collect();
        labels.dedup();
        labels
    }
}

/// Builds the decomposition for `V_{2p} R^n` (`p >= 2`, `n - 2p >= 1`).
pub fn build_decomposition(n: u32, p: u32) -> Result<Decomposition> {
    check_cell(n, p)?;
    let (nn, pp) = (n as usize, p as usize);
    let e = |a: usize, b: usize| SkewElement::basis(nn, a, b);

    let diag: Vec<SkewElement> = (1..=pp).map(|i| e(2 * i - 1, 2 * i)).collect();
    let j = diag.iter().fold(SkewElement::zero(nn), |acc, x| acc.add(x));

    // Gram-Schmidt of the diagonal generators against J, dropping the one
    // that becomes dependent.
    let mut m1: Vec<SkewElement> = Vec::new();
    let mut done: Vec<SkewElement> = vec![j.clone()];
    for g in &diag {
        let mut v = g.clone();
        for w in &done {
            let c = trace_product(&v, w)? / trace_product(w, w)?;
            v = v.sub(&w.scale(&c));
        }
        if !v.is_zero() {
            done.push(v.clone());
            m1.push(v);
        }
    }
    let mut m3 = Vec::new();
    for i in 1..=pp {
        for k in i + 1..=pp {
            m1.push(e(2 * i - 1, 2 * k - 1).add(&e(2 * i, 2 * k)));
            m1.push(e(2 * i - 1, 2 * k).sub(&e(2 * i, 2 * k - 1)));
            m3.push(e(2 * i - 1, 2 * k - 1).sub(&e(2 * i, 2 * k)));
            m3.push(e(2 * i - 1, 2 * k).add(&e(2 * i, 2 * k - 1)));
        }
    }
    let m2 = (1..=2 * pp).flat_map(|a| (2 * pp + 1..=nn).map(move |b| (a, b))).map(|(a, b)| e(a, b)).collect();
    let h_iso = (2 * pp + 1..=nn).flat_map(|a| (a + 1..=nn).map(move |b| (a, b))).map(|(a, b)| e(a, b)).collect();

    Ok(Decomposition { n, p, h_iso, m0: vec![j], m1, m2, m3 })
}

/// One failed inclusion found by [`check_module_relations`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationViolation {
    pub relation: String,
    pub left: (usize, usize),
    pub right: (usize, usize),
    pub offending_summand: usize,
}

#[derive(Clone, Debug, Default)]
pub struct RelationReport {
    pub brackets_checked: usize,
    pub violations: Vec<RelationViolation>,
}

impl RelationReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

fn label_name(l: usize) -> String {
    if l == H_LABEL {
        "h".to_string()
    } else {
        format!("m{l}")
    }
}

/// Verifies by exact projection
/// `[m2, m2]_m in m0+m1+m3`, `[m3, m3]_m in m0+m1`, `[m2, m3]_m in m2`, and
/// `[k, m_i] in m_i` for `k = m0 + m1 + h`. The first three are inclusions of
/// the `m`-projection, so an `h` component is allowed there.
pub fn check_module_relations(dec: &Decomposition) -> RelationReport {
    let mut rules: Vec<(usize, usize, Vec<usize>)> = vec![
        (2, 2, vec![0, 1, 3, H_LABEL]),
        (3, 3, vec![0, 1, H_LABEL]),
        (2, 3, vec![2, H_LABEL]),
    ];
    for k in [0, 1, H_LABEL] {
        for i in 0..4 {
            rules.push((k, i, vec![i]));
        }
    }
    let mut report = RelationReport::default();
    for (li, ri, allowed) in rules {
        let name = format!(
            "[{}, {}] in {}",
            label_name(li),
            label_name(ri),
            allowed.iter().filter(|&&l| l != H_LABEL || li == H_LABEL || ri == H_LABEL).map(|&l| label_name(l)).collect::<Vec<_>>().join("+")
        );
        for (a, x) in dec.summand(li).iter().enumerate() {
            for (b, y) in dec.summand(ri).iter().enumerate() {
                let v = bracket(x, y).expect("same n");
                report.brackets_checked += 1;
                for l in dec.support(&v) {
                    if !allowed.contains(&l) {
                        report.violations.push(RelationViolation {
                            relation: name.clone(),
                            left: (li, a),
                            right: (ri, b),
                            offending_summand: l,
                        });
                    }
                }
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn matmul(a: &[Vec<BigRational>], b: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
        let n = a.len();
        (0..n)
            .map(|i| (0..n).map(|j| (0..n).map(|k| &a[i][k] * &b[k][j]).sum()).collect())
            .collect()
    }

    fn dense_bracket(x: &SkewElement, y: &SkewElement) -> Vec<Vec<BigRational>> {
        let (a, b) = (x.to_matrix(), y.to_matrix());
        let ab = matmul(&a, &b);
        let ba = matmul(&b, &a);
        ab.iter().zip(&ba).map(|(r, s)| r.iter().zip(s).map(|(u, v)| u - v).collect()).collect()
    }

    #[test]
    fn basis_brackets() {
        let e = |a, b| SkewElement::basis(5, a, b);
        assert_eq!(bracket(&e(1, 2), &e(2, 3)).unwrap(), e(1, 3));
        assert!(bracket(&e(1, 2), &e(3, 4)).unwrap().is_zero());
        assert!(bracket(&e(1, 2), &e(1, 2)).unwrap().is_zero());
        assert!(matches!(bracket(&e(1, 2), &SkewElement::basis(4, 1, 2)), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn bracket_matches_matrix_commutator() {
        let n = 5;
        for a in 1..=n {
            for b in a + 1..=n {
                for c in 1..=n {
                    for d in c + 1..=n {
                        let x = SkewElement::basis(n, a, b);
                        let y = SkewElement::basis(n, c, d);
                        assert_eq!(bracket(&x, &y).unwrap().to_matrix(), dense_bracket(&x, &y));
                    }
                }
            }
        }
    }

    #[test]
    fn killing_values() {
        let e = |a, b| SkewElement::basis(7, a, b);
        assert_eq!(killing(&e(1, 2), &e(1, 2)).unwrap(), int(-10));
        assert_eq!(killing(&e(1, 2), &e(1, 3)).unwrap(), int(0));
        // Oracle: direct matrix trace of X^2 for X = e12 + e34 in so(6).
        let x = SkewElement::basis(6, 1, 2).add(&SkewElement::basis(6, 3, 4));
        let m = x.to_matrix();
        let tr: BigRational = (0..6).map(|i| matmul(&m, &m)[i][i].clone()).sum();
        assert_eq!(tr * int(4), int(-16));
        assert_eq!(killing(&x, &x).unwrap(), int(-16));
    }

    #[test]
    fn decomposition_sizes() {
        let d = build_decomposition(7, 2).unwrap();
        assert_eq!(d.dims(), [1, 3, 12, 2]);
        let d = build_decomposition(6, 2).unwrap();
        assert_eq!(d.total_dim(), 15);
        assert_eq!(d.h_iso.len(), 1);
        assert_eq!(build_decomposition(8, 3).unwrap().dims(), [1, 8, 12, 6]);
        assert!(matches!(build_decomposition(6, 3), Err(Error::OutOfRange { .. })));
        assert!(matches!(build_decomposition(9, 1), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn bases_are_orthogonal_and_positive() {
        for (n, p) in [(6, 2), (7, 2), (8, 3)] {
            let d = build_decomposition(n, p).unwrap();
            let all: Vec<&SkewElement> = [0, 1, 2, 3, H_LABEL].iter().flat_map(|&l| d.summand(l)).collect();
            assert_eq!(all.len(), (n * (n - 1) / 2) as usize);
            for (i, x) in all.iter().enumerate() {
                assert!(norm_sq(x) > BigRational::zero());
                for y in &all[i + 1..] {
                    assert!(killing(x, y).unwrap().is_zero());
                }
            }
        }
    }

    #[test]
    fn module_relations_hold() {
        for (n, p) in [(7, 2), (6, 2)] {
            let rep = check_module_relations(&build_decomposition(n, p).unwrap());
            assert!(rep.holds(), "{:?}", rep.violations);
            assert!(rep.brackets_checked > 0);
        }
        let d = build_decomposition(7, 2).unwrap();
        let v = bracket(&d.m3[0], &d.m3[1]).unwrap();
        assert!(!d.support(&v).contains(&3));
    }

    #[test]
    fn wrong_embedding_is_detected() {
        let mut d = build_decomposition(7, 2).unwrap();
        // Swap a u(p) vector into m3: [k, m3] in m3 must break.
        std::mem::swap(&mut d.m1[1], &mut d.m3[0]);
        assert!(!check_module_relations(&d).holds());
    }
}
