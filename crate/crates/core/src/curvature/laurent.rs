use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::{Monomial, MultiPoly, Ring};

/// Laurent polynomial in `(u0, u1, u2, u3)` with rational coefficients.
///
/// Rational functions whose denominators are monomials are represented
/// exactly and canonically, so equality of two Ricci expressions is plain
/// structural equality.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct Laurent {
    terms: BTreeMap<[i32; 4], BigRational>,
}

impl Laurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: BigRational) -> Self {
        Self::term([0; 4], c)
    }

    pub fn term(exps: [i32; 4], c: BigRational) -> Self {
        let mut l = Self::zero();
        l.add_term(exps, c);
        l
    }

    /// `u_k^e`.
    pub fn var_pow(k: usize, e: i32) -> Self {
        let mut exps = [0; 4];
        exps[k] = e;
        Self::term(exps, BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[i32; 4], &BigRational)> {
        self.terms.iter()
    }

    fn add_term(&mut self, exps: [i32; 4], c: BigRational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(exps).or_insert_with(BigRational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn scale(&self, c: &BigRational) -> Laurent {
        let mut out = Self::zero();
        for (e, a) in &self.terms {
            out.add_term(*e, a * c);
        }
        out
    }

    /// Degree if every term has the same total degree.
    pub fn homogeneous_degree(&self) -> Option<i32> {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<i32>());
        let d = degs.next()?;
        degs.all(|x| x == d).then_some(d)
    }

    /// Substitutes the rational `value` for `u_k`.
    pub fn eval_var(&self, k: usize, value: &BigRational) -> Laurent {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let mut ne = *e;
            ne[k] = 0;
            out.add_term(ne, c * pow_i(value, e[k]));
        }
        out
    }

    pub fn eval(&self, point: &[BigRational; 4]) -> BigRational {
        self.terms
            .iter()
            .map(|(e, c)| (0..4).fold(c.clone(), |acc, k| acc * pow_i(&point[k], e[k])))
            .sum()
    }

    /// `(shift, poly)` with `self * shift = poly`, where `shift` is the
    /// least monomial clearing all negative exponents and `poly` is a
    /// polynomial in `ring`, whose variables must be named `u0..u3` (those
    /// absent from `ring` must not occur in `self`).
    pub fn clear_denominators(&self, ring: &Ring) -> ([i32; 4], MultiPoly) {
        let mut shift = [0i32; 4];
        for e in self.terms.keys() {
            for k in 0..4 {
                shift[k] = shift[k].max(-e[k]);
            }
        }
        let slots: Vec<Option<usize>> = (0..4).map(|k| ring.index_of(&format!("u{k}"))).collect();
        let mut p = MultiPoly::zero(ring);
        for (e, c) in &self.terms {
            let mut exps = vec![0u32; ring.nvars()];
            for k in 0..4 {
                let v = e[k] + shift[k];
                match slots[k] {
                    Some(i) => exps[i] = v as u32,
                    None => assert_eq!(v, 0, "u{k} occurs but is not in the ring"),
                }
            }
            p.add_term(Monomial::from_exponents(&exps), c.clone());
        }
        (shift, p)
    }
}

fn pow_i(x: &BigRational, e: i32) -> BigRational {
    if e >= 0 {
        num_traits::pow(x.clone(), e as usize)
    } else {
        num_traits::pow(x.recip(), (-e) as usize)
    }
}

impl Add for &Laurent {
    type Output = Laurent;
    fn add(self, rhs: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &Laurent {
    type Output = Laurent;
    fn sub(self, rhs: &Laurent) -> Laurent {
        self + &-rhs
    }
}

impl Neg for &Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        self.scale(&-BigRational::one())
    }
}

impl Mul for &Laurent {
    type Output = Laurent;
    fn mul(self, rhs: &Laurent) -> Laurent {
        let mut out = Laurent::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term([a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]], x * y);
            }
        }
        out
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            write!(f, "{}", c.abs())?;
            for (k, &x) in e.iter().enumerate() {
                if x != 0 {
                    write!(f, "*u{k}^{x}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Laurent({self})")
    }
}
