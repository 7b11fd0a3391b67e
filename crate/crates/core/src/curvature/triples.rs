use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;

use super::dimensions;
use crate::arith::int;
use crate::son::{bracket, killing, norm_sq, Decomposition, SkewElement};
use crate::{check_cell, Result};

/// Symmetric structure constants `A_ijk` for the summands `m0..m3`, stored
/// once per sorted index multiset. Absent entries are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleTable {
    pub n: u32,
    pub p: u32,
    pub dims: [usize; 4],
    entries: BTreeMap<[usize; 3], BigRational>,
}

impl TripleTable {
    fn new(n: u32, p: u32, dims: [usize; 4]) -> Self {
        TripleTable { n, p, dims, entries: BTreeMap::new() }
    }

    fn insert(&mut self, i: usize, j: usize, k: usize, v: BigRational) {
        if !v.is_zero() {
            self.entries.insert(sorted(i, j, k), v);
        }
    }

    /// `A_ijk` in any index order.
    pub fn get(&self, i: usize, j: usize, k: usize) -> BigRational {
        self.entries.get(&sorted(i, j, k)).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Nonzero entries keyed by sorted multiset.
    pub fn entries(&self) -> impl Iterator<Item = (&[usize; 3], &BigRational)> {
        self.entries.iter()
    }
}

fn sorted(i: usize, j: usize, k: usize) -> [usize; 3] {
    let mut a = [i, j, k];
    a.sort_unstable();
    a
}

/// `A_ijk = sum B([x_a, x_b], x_c)^2 / (|x_a|^2 |x_b|^2 |x_c|^2)` over the
/// stored bases of `m_i, m_j, m_k`, with `|x|^2 = -B(x, x)`.
pub fn triple_bruteforce(dec: &Decomposition, i: usize, j: usize, k: usize) -> BigRational {
    let (xs, ys, ws) = (dec.summand(i), dec.summand(j), dec.summand(k));
    let wn: Vec<BigRational> = ws.iter().map(norm_sq).collect();
    let mut acc = BigRational::zero();
    for x in xs {
        let nx = norm_sq(x);
        for y in ys {
            let v = bracket(x, y).expect("same n");
            if v.is_zero() {
                continue;
            }
            let nxy = &nx * norm_sq(y);
            acc += sum_sq_components(&v, ws, &wn) / nxy;
        }
    }
    acc
}

fn sum_sq_components(v: &SkewElement, ws: &[SkewElement], wn: &[BigRational]) -> BigRational {
    let mut acc = BigRational::zero();
    for (w, n) in ws.iter().zip(wn) {
        let b = killing(v, w).expect("same n");
        if !b.is_zero() {
            acc += &b * &b / n;
        }
    }
    acc
}

/// Structure constants by direct summation over the decomposition's bases.
pub fn structure_constants_bruteforce(dec: &Decomposition) -> TripleTable {
    let mut table = TripleTable::new(dec.n, dec.p, dec.dims());
    for i in 0..4 {
        for j in i..4 {
            for k in j..4 {
                table.insert(i, j, k, triple_bruteforce(dec, i, j, k));
            }
        }
    }
    table
}

/// Structure constants from the closed forms in `d1, d2, d3` (all over
/// `d2 + 4 d3 = 2p(n - 2)`).
pub fn structure_constants_closed(n: u32, p: u32) -> Result<TripleTable> {
    check_cell(n, p)?;
    let dims = dimensions(n, p);
    let [_, d1, d2, d3] = dims.map(|d| int(d as i64));
    let den = &d2 + &d3 * int(4);
    let mut t = TripleTable::new(n, p, dims);
    t.insert(2, 2, 0, &d2 / &den);
    t.insert(3, 3, 0, &d3 * int(4) / &den);
    t.insert(1, 1, 1, &d3 * int(2) * (&d1 * int(2) + int(2) - &d3) / &den);
    t.insert(1, 2, 2, &d1 * &d2 / &den);
    t.insert(1, 3, 3, &d3 * int(2) * (&d3 - int(2)) / &den);
    t.insert(3, 2, 2, &d2 * &d3 / &den);
    Ok(t)
}
