//! Elimination by iterated resultants, independent of any monomial order
//! choice in Buchberger. Used to cross-check the `u2`-eliminant.

use crate::arith::{int, MonomialOrder, MultiPoly, UniPoly};
use crate::curvature::EinsteinSystem;
use crate::{Error, Result};

/// `Res_var(a, b)` as the determinant of the Sylvester matrix, computed by
/// fraction-free Bareiss elimination over the polynomial ring.
pub fn resultant(a: &MultiPoly, b: &MultiPoly, var: usize) -> Result<MultiPoly> {
    let ring = a.ring();
    let (ca, cb) = (a.coefficients_in(var), b.coefficients_in(var));
    let (m, n) = (ca.len() - 1, cb.len() - 1);
    if a.is_zero() || b.is_zero() {
        return Ok(MultiPoly::zero(ring));
    }
    if m == 0 && n == 0 {
        return Ok(MultiPoly::constant(ring, int(1)));
    }
    let size = m + n;
    let zero = MultiPoly::zero(ring);
    let mut mat = vec![vec![zero.clone(); size]; size];
    for row in 0..n {
        for (k, c) in ca.iter().rev().enumerate() {
            mat[row][row + k] = c.clone();
        }
    }
    for row in 0..m {
        for (k, c) in cb.iter().rev().enumerate() {
            mat[n + row][row + k] = c.clone();
        }
    }
    determinant(mat)
}

fn determinant(mut mat: Vec<Vec<MultiPoly>>) -> Result<MultiPoly> {
    let size = mat.len();
    let ring = mat[0][0].ring().clone();
    let order = MonomialOrder::ring_lex(&ring);
    let mut negate = false;
    let mut prev = MultiPoly::constant(&ring, int(1));
    for k in 0..size {
        let Some(pivot) = (k..size).find(|&r| !mat[r][k].is_zero()) else {
            return Ok(MultiPoly::zero(&ring));
        };
        if pivot != k {
            mat.swap(pivot, k);
            negate = !negate;
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let num = &(&mat[i][j] * &mat[k][k]) - &(&mat[i][k] * &mat[k][j]);
                mat[i][j] = num.exact_div(&prev, &order)?;
            }
            mat[i][k] = MultiPoly::zero(&ring);
        }
        prev = mat[k][k].clone();
    }
    let det = mat[size - 1][size - 1].clone();
    Ok(if negate { -&det } else { det })
}

/// Divides out the largest monomial dividing every term.
pub fn remove_monomial_content(f: &MultiPoly) -> MultiPoly {
    let Some(g) = f.terms().map(|(m, _)| m.clone()).reduce(|a, b| a.gcd(&b)) else {
        return f.clone();
    };
    MultiPoly::from_terms(f.ring(), f.terms().map(|(m, c)| (m.div(&g).expect("gcd divides"), c.clone())))
}

/// `u2`-eliminant of the Einstein system by resultants: `u0` is removed
/// pairwise from `f1, f2` and `f2, f3`, then `u1` from the two results.
/// Spurious components are discarded by removing every factor shared with
/// `u2` and with the leading coefficients of the eliminated variables that
/// depend on `u2` alone. Returns the primitive squarefree part.
pub fn resultant_eliminant(sys: &EinsteinSystem) -> Result<UniPoly> {
    let (u0, u1, u2) = (0, 1, 2);
    let [f1, f2, f3] = &sys.f;
    let r12 = remove_monomial_content(&resultant(f1, f2, u0)?);
    let r23 = remove_monomial_content(&resultant(f2, f3, u0)?);
    let r = resultant(&r12, &r23, u1)?;
    let mut r = r.to_univariate(u2).ok_or_else(|| Error::Invalid("resultant still depends on u1".into()))?;
    if r.is_zero() {
        return Err(Error::Invalid("resultant vanishes identically".into()));
    }
    let mut spoilers = vec![UniPoly::from_ints("u2", &[0, 1])];
    for f in [f1, f2, f3] {
        spoilers.extend(f.coefficients_in(u0).last().and_then(|c| c.to_univariate(u2)));
    }
    for g in [&r12, &r23] {
        spoilers.extend(g.coefficients_in(u1).last().and_then(|c| c.to_univariate(u2)));
    }
    for s in spoilers.iter().filter(|s| s.degree().unwrap_or(0) > 0) {
        loop {
            let g = r.gcd(s);
            if g.degree().unwrap_or(0) == 0 {
                break;
            }
            r = r.exact_div(&g)?;
        }
    }
    Ok(r.squarefree_part()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Ring;

    #[test]
    fn resultant_of_linear_forms() {
        let ring = Ring::new(&["x", "y"]);
        let (x, y) = (ring.var("x").unwrap(), ring.var("y").unwrap());
        let one = MultiPoly::constant(&ring, int(1));
        // Res_x(x - y, x^2 - 1) = y^2 - 1.
        let r = resultant(&(&x - &y), &(&x.pow(2) - &one), 0).unwrap();
        assert_eq!(r, &y.pow(2) - &one);
        // Common root => zero resultant.
        let r = resultant(&(&x - &one), &(&x.pow(2) - &one), 0).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn sylvester_against_product_of_root_differences() {
        // Res(a, b) = lc(a)^deg b * prod b(alpha) over roots alpha of a.
        let ring = Ring::new(&["x"]);
        let x = ring.var("x").unwrap();
        let c = |v: i64| MultiPoly::constant(&ring, int(v));
        let a = &(&x - &c(2)) * &(&x - &c(3));
        let b = &x.pow(3) + &c(1);
        let r = resultant(&a, &b, 0).unwrap();
        assert_eq!(r, c(9 * 28));
    }
}
