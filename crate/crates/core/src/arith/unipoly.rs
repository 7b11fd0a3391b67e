use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ArithError;

/// Endpoint for root counting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bound {
    NegInf,
    At(BigRational),
    PosInf,
}

/// Dense univariate polynomial, coefficients from degree 0 upward. The
/// leading coefficient is nonzero unless the polynomial is zero (empty).
#[derive(Clone, PartialEq, Eq)]
pub struct UniPoly {
    var: String,
    coeffs: Vec<BigRational>,
}

impl UniPoly {
    pub fn new(var: impl Into<String>, coeffs: Vec<BigRational>) -> Self {
        let mut p = UniPoly { var: var.into(), coeffs };
        p.trim();
        p
    }

    pub fn from_ints(var: impl Into<String>, coeffs: &[i64]) -> Self {
        Self::new(var, coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn zero(var: impl Into<String>) -> Self {
        Self::new(var, vec![])
    }

    pub fn constant(var: impl Into<String>, c: BigRational) -> Self {
        Self::new(var, vec![c])
    }

    /// `var - root`.
    pub fn linear_root(var: impl Into<String>, root: BigRational) -> Self {
        Self::new(var, vec![-root, BigRational::one()])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &BigRational) -> UniPoly {
        Self::new(self.var.clone(), self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> UniPoly {
        match self.lc() {
            Some(lc) => self.scale(&lc.recip()),
            None => self.clone(),
        }
    }

    /// `(content, primitive)` with `self = content * primitive`, the primitive
    /// part having coprime integer coefficients and a positive leading
    /// coefficient.
    pub fn primitive(&self) -> (BigRational, UniPoly) {
        if self.is_zero() {
            return (BigRational::one(), self.clone());
        }
        let mut den = BigInt::one();
        let mut num = BigInt::zero();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
            num = num.gcd(c.numer());
        }
        let mut content = BigRational::new(num, den);
        if self.lc().unwrap().is_negative() {
            content = -content;
        }
        (content.clone(), self.scale(&content.recip()))
    }

    pub fn primitive_part(&self) -> UniPoly {
        self.primitive().1
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Exact sign of the value at `x`: -1, 0 or +1.
    pub fn sign_at(&self, x: &BigRational) -> i32 {
        sign(&self.eval(x))
    }

    /// Sign at a possibly infinite bound.
    pub fn sign_at_bound(&self, b: &Bound) -> i32 {
        let Some(d) = self.degree() else { return 0 };
        let lc = sign(self.lc().unwrap());
        match b {
            Bound::At(x) => self.sign_at(x),
            Bound::PosInf => lc,
            Bound::NegInf => {
                if d % 2 == 0 {
                    lc
                } else {
                    -lc
                }
            }
        }
    }

    pub fn derivative(&self) -> UniPoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * BigRational::from_integer(BigInt::from(k)))
            .collect();
        Self::new(self.var.clone(), coeffs)
    }

    pub fn pow(&self, e: u32) -> UniPoly {
        let mut acc = Self::constant(self.var.clone(), BigRational::one());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Euclidean division: `self = q * d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &UniPoly) -> Result<(UniPoly, UniPoly), ArithError> {
        let dd = d.degree().ok_or(ArithError::DivisionByZero)?;
        let lc = d.lc().unwrap();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((Self::zero(self.var.clone()), self.clone()));
        }
        let mut q = vec![BigRational::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] / lc;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[k + j] -= &c * dc;
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        Ok((Self::new(self.var.clone(), q), Self::new(self.var.clone(), r)))
    }

    pub fn rem(&self, d: &UniPoly) -> Result<UniPoly, ArithError> {
        Ok(self.div_rem(d)?.1)
    }

    /// Exact quotient; errors when `d` does not divide `self`.
    pub fn exact_div(&self, d: &UniPoly) -> Result<UniPoly, ArithError> {
        let (q, r) = self.div_rem(d)?;
        if !r.is_zero() {
            let k = r.degree().unwrap();
            return Err(ArithError::NotExact(format!("{}*{}^{}", r.coeffs[k], self.var, k)));
        }
        Ok(q)
    }

    /// Monic greatest common divisor (zero if both are zero).
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor").primitive_part();
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, s)` with `g = gcd(self, m)` monic and `s * self = g (mod m)`.
    pub fn gcd_ext(&self, m: &UniPoly) -> (UniPoly, UniPoly) {
        let var = self.var.clone();
        let (mut r0, mut r1) = (m.clone(), self.rem(m).unwrap_or_else(|_| self.clone()));
        let (mut s0, mut s1) = (Self::zero(var.clone()), Self::constant(var.clone(), BigRational::one()));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1).expect("nonzero divisor");
            let s = &s0 - &(&q * &s1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        match r0.lc().cloned() {
            Some(lc) => {
                let inv = lc.recip();
                (r0.scale(&inv), s0.scale(&inv))
            }
            None => (r0, s0),
        }
    }

    /// Inverse of `self` modulo `m`, if `gcd(self, m) = 1`.
    pub fn inverse_mod(&self, m: &UniPoly) -> Option<UniPoly> {
        let (g, s) = self.gcd_ext(m);
        if g.degree() != Some(0) {
            return None;
        }
        s.rem(m).ok()
    }

    /// Product of the distinct irreducible factors (up to a constant):
    /// `f / gcd(f, f')`, returned primitive.
    pub fn squarefree_part(&self) -> Result<UniPoly, ArithError> {
        if self.is_zero() {
            return Err(ArithError::ZeroPolynomial);
        }
        if self.degree() == Some(0) {
            return Ok(Self::constant(self.var.clone(), BigRational::one()));
        }
        let g = self.gcd(&self.derivative());
        Ok(self.exact_div(&g)?.primitive_part())
    }

    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).degree() == Some(0)
    }

    /// Canonical Sturm chain `f, f', -rem(f, f'), ...`, each member rescaled
    /// by a positive constant to keep coefficients integral.
    pub fn sturm_sequence(&self) -> Result<Vec<UniPoly>, ArithError> {
        if self.is_zero() {
            return Err(ArithError::ZeroPolynomial);
        }
        let pos = |p: &UniPoly| {
            let (c, q) = p.primitive();
            if c.is_negative() {
                -&q
            } else {
                q
            }
        };
        let mut seq = vec![pos(self)];
        let d = self.derivative();
        if d.is_zero() {
            return Ok(seq);
        }
        seq.push(pos(&d));
        loop {
            let n = seq.len();
            let r = seq[n - 2].rem(&seq[n - 1])?;
            if r.is_zero() {
                break;
            }
            seq.push(pos(&-&r));
        }
        Ok(seq)
    }

    /// Cauchy bound: every real root lies strictly inside `(-B, B)`.
    pub fn root_bound(&self) -> BigRational {
        let Some(lc) = self.lc() else { return BigRational::one() };
        let lc = lc.abs();
        let m = self.coeffs[..self.coeffs.len() - 1]
            .iter()
            .map(|c| c.abs() / &lc)
            .fold(BigRational::zero(), |a, b| if b > a { b } else { a });
        BigRational::one() + m + BigRational::one()
    }

    /// Number of sign changes in the coefficient sequence (Descartes' bound
    /// on positive roots).
    pub fn descartes_sign_changes(&self) -> usize {
        let signs: Vec<i32> = self.coeffs.iter().map(sign).filter(|&s| s != 0).collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// `p(-x)`.
    pub fn reflect(&self) -> UniPoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
            .collect();
        Self::new(self.var.clone(), coeffs)
    }

    pub fn with_var(&self, var: impl Into<String>) -> UniPoly {
        UniPoly { var: var.into(), coeffs: self.coeffs.clone() }
    }

    /// Rational `r` with `self = r * other`, if one exists.
    pub fn proportionality(&self, other: &UniPoly) -> Option<BigRational> {
        if self.coeffs.len() != other.coeffs.len() {
            return None;
        }
        let k = self.coeffs.len().checked_sub(1)?;
        let r = &self.coeffs[k] / &other.coeffs[k];
        (other.scale(&r) == *self).then_some(r)
    }
}

/// Sign variations of a Sturm chain at a bound.
pub(crate) fn sign_variations(seq: &[UniPoly], at: &Bound) -> usize {
    let signs: Vec<i32> = seq.iter().map(|p| p.sign_at_bound(at)).filter(|&s| s != 0).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

pub(crate) fn sign(q: &BigRational) -> i32 {
    if q.is_positive() {
        1
    } else if q.is_negative() {
        -1
    } else {
        0
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let a = c.abs();
            match k {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}*")?;
                    }
                    write!(f, "{}", self.var)?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

fn zip_with(a: &UniPoly, b: &UniPoly, op: impl Fn(&BigRational, &BigRational) -> BigRational) -> UniPoly {
    let n = a.coeffs.len().max(b.coeffs.len());
    let zero = BigRational::zero();
    let coeffs = (0..n)
        .map(|k| op(a.coeffs.get(k).unwrap_or(&zero), b.coeffs.get(k).unwrap_or(&zero)))
        .collect();
    UniPoly::new(a.var.clone(), coeffs)
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        zip_with(self, rhs, |x, y| x + y)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        zip_with(self, rhs, |x, y| x - y)
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero(self.var.clone());
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(self.var.clone(), out)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.var.clone(), self.coeffs.iter().map(|c| -c).collect())
    }
}
