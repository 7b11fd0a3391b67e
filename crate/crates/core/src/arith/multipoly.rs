use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{ArithError, Monomial, MonomialOrder, UniPoly};

/// Ordered list of variable names. Cheap to clone.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Ring(Arc<[String]>);

impl Ring {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Self {
        Ring(names.iter().map(|s| s.as_ref().to_string()).collect())
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    pub fn var(&self, name: &str) -> Result<MultiPoly, ArithError> {
        let i = self.index_of(name).ok_or_else(|| ArithError::UnknownVariable(name.to_string()))?;
        Ok(MultiPoly::monomial(self, Monomial::var(self.nvars(), i, 1), BigRational::one()))
    }
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring{:?}", &*self.0)
    }
}

/// Sparse polynomial with rational coefficients.
///
/// Terms live in a map keyed by monomial, so equal polynomials have identical
/// term lists; zero coefficients are never stored. Leading terms and sorted
/// views are taken with respect to an explicit [`MonomialOrder`].
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    ring: Ring,
    terms: BTreeMap<Monomial, BigRational>,
}

impl MultiPoly {
    pub fn zero(ring: &Ring) -> Self {
        MultiPoly { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(ring: &Ring, c: BigRational) -> Self {
        Self::monomial(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn monomial(ring: &Ring, m: Monomial, c: BigRational) -> Self {
        assert_eq!(m.nvars(), ring.nvars(), "monomial arity differs from ring");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { ring: ring.clone(), terms }
    }

    pub fn from_terms<I>(ring: &Ring, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, BigRational)>,
    {
        let mut p = Self::zero(ring);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical (ring-lex ascending) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Terms sorted from greatest to least under `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(&Monomial, &BigRational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| order.cmp(b.0, a.0));
        v
    }

    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0))
    }

    pub fn leading_monomial(&self, order: &MonomialOrder) -> Option<&Monomial> {
        self.leading_term(order).map(|(m, _)| m)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.exponents()[var]).max().unwrap_or(0)
    }

    /// Ring indices of the variables that actually occur.
    pub fn support_vars(&self) -> Vec<usize> {
        (0..self.ring.nvars()).filter(|&i| self.degree_in(i) > 0).collect()
    }

    pub fn scale(&self, c: &BigRational) -> MultiPoly {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        MultiPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &BigRational) -> MultiPoly {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        MultiPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(k, a)| (k.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = Self::constant(&self.ring, BigRational::one());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    fn check_ring(&self, other: &MultiPoly) {
        assert!(self.ring == other.ring, "ring mismatch: {:?} vs {:?}", self.ring, other.ring);
    }

    /// Exact quotient `self / divisor` under `order`.
    ///
    /// Fails with [`ArithError::NotExact`] carrying the remainder's leading
    /// term when `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &MultiPoly, order: &MonomialOrder) -> Result<MultiPoly, ArithError> {
        self.check_ring(divisor);
        let (lm, lc) = divisor.leading_term(order).ok_or(ArithError::DivisionByZero)?;
        let (lm, lc) = (lm.clone(), lc.clone());
        let mut rest = self.clone();
        let mut quotient = Self::zero(&self.ring);
        while let Some((m, c)) = rest.leading_term(order) {
            let Some(q) = m.div(&lm) else {
                return Err(ArithError::NotExact(format!("{}*{}", c, m.render(self.ring.names()))));
            };
            let k = c / &lc;
            rest = &rest - &divisor.mul_monomial(&q, &k);
            quotient.add_term(q, k);
        }
        Ok(quotient)
    }

    /// Normal form of `self` modulo `basis` (full multivariate division).
    /// No term of the result is divisible by a leading monomial of `basis`.
    pub fn reduce(&self, basis: &[MultiPoly], order: &MonomialOrder) -> MultiPoly {
        let leads: Vec<(Monomial, BigRational)> = basis
            .iter()
            .filter_map(|g| g.leading_term(order).map(|(m, c)| (m.clone(), c.clone())))
            .collect();
        let basis: Vec<&MultiPoly> = basis.iter().filter(|g| !g.is_zero()).collect();
        let mut rest = self.clone();
        let mut remainder = Self::zero(&self.ring);
        while let Some((m, c)) = rest.leading_term(order) {
            let (m, c) = (m.clone(), c.clone());
            match leads.iter().zip(&basis).find_map(|((lm, lc), g)| m.div(lm).map(|q| (q, lc, g))) {
                Some((q, lc, g)) => {
                    rest = &rest - &g.mul_monomial(&q, &(&c / lc));
                }
                None => {
                    rest.terms.remove(&m);
                    remainder.add_term(m, c);
                }
            }
        }
        remainder
    }

    /// Positive rational `c` with `self / c` having coprime integer
    /// coefficients and positive leading coefficient under `order`, together
    /// with that primitive polynomial.
    pub fn primitive(&self, order: &MonomialOrder) -> (BigRational, MultiPoly) {
        if self.is_zero() {
            return (BigRational::one(), self.clone());
        }
        let mut den_lcm = BigInt::one();
        let mut num_gcd = BigInt::zero();
        for c in self.terms.values() {
            den_lcm = den_lcm.lcm(c.denom());
            num_gcd = num_gcd.gcd(c.numer());
        }
        let mut content = BigRational::new(num_gcd, den_lcm);
        if self.leading_term(order).map(|(_, c)| c.is_negative()).unwrap_or(false) {
            content = -content;
        }
        let p = self.scale(&content.recip());
        (content, p)
    }

    /// Rational `r` with `self = r * other`, if one exists.
    pub fn proportionality(&self, other: &MultiPoly) -> Option<BigRational> {
        self.check_ring(other);
        if self.terms.len() != other.terms.len() {
            return None;
        }
        if self.is_zero() {
            return Some(BigRational::one());
        }
        let mut ratio: Option<BigRational> = None;
        for (m, a) in &self.terms {
            let b = other.terms.get(m)?;
            let r = a / b;
            match &ratio {
                None => ratio = Some(r),
                Some(x) if *x == r => {}
                Some(_) => return None,
            }
        }
        ratio
    }

    /// Substitutes the constant `value` for variable `var`.
    pub fn eval_var(&self, var: usize, value: &BigRational) -> MultiPoly {
        let mut out = Self::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m.exponents()[var];
            let mut exps = m.exponents().to_vec();
            exps[var] = 0;
            out.add_term(Monomial::from_exponents(&exps), c * num_traits::pow(value.clone(), e as usize));
        }
        out
    }

    /// Full evaluation at a point given in ring order.
    pub fn eval(&self, point: &[BigRational]) -> BigRational {
        assert_eq!(point.len(), self.ring.nvars());
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    t *= num_traits::pow(x.clone(), e as usize);
                }
            }
            acc += t;
        }
        acc
    }

    /// Substitutes the polynomial `value` for variable `var`.
    pub fn substitute(&self, var: usize, value: &MultiPoly) -> MultiPoly {
        self.check_ring(value);
        let mut powers = vec![Self::constant(&self.ring, BigRational::one())];
        let mut out = Self::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m.exponents()[var] as usize;
            while powers.len() <= e {
                let next = powers.last().unwrap() * value;
                powers.push(next);
            }
            let mut exps = m.exponents().to_vec();
            exps[var] = 0;
            out = &out + &powers[e].mul_monomial(&Monomial::from_exponents(&exps), c);
        }
        out
    }

    /// Re-expresses the polynomial in `ring`, matching variables by name.
    pub fn embed(&self, ring: &Ring) -> Result<MultiPoly, ArithError> {
        let map: Vec<usize> = self
            .ring
            .names()
            .iter()
            .map(|n| ring.index_of(n).ok_or_else(|| ArithError::UnknownVariable(n.clone())))
            .collect::<Result<_, _>>()?;
        let mut out = Self::zero(ring);
        for (m, c) in &self.terms {
            let mut exps = vec![0u32; ring.nvars()];
            for (k, &e) in m.exponents().iter().enumerate() {
                exps[map[k]] = e;
            }
            out.add_term(Monomial::from_exponents(&exps), c.clone());
        }
        Ok(out)
    }

    /// Views the polynomial as univariate in `var`; `None` if another
    /// variable occurs.
    pub fn to_univariate(&self, var: usize) -> Option<UniPoly> {
        let mut coeffs = vec![BigRational::zero(); self.degree_in(var) as usize + 1];
        for (m, c) in &self.terms {
            if m.exponents().iter().enumerate().any(|(i, &e)| i != var && e > 0) {
                return None;
            }
            coeffs[m.exponents()[var] as usize] = c.clone();
        }
        Some(UniPoly::new(self.ring.names()[var].clone(), coeffs))
    }

    pub fn from_univariate(ring: &Ring, var: usize, u: &UniPoly) -> MultiPoly {
        let mut out = Self::zero(ring);
        for (k, c) in u.coeffs().iter().enumerate() {
            out.add_term(Monomial::var(ring.nvars(), var, k as u32), c.clone());
        }
        out
    }

    /// Coefficients with respect to `var`: entry `k` is the coefficient of
    /// `var^k`, a polynomial in the remaining variables.
    pub fn coefficients_in(&self, var: usize) -> Vec<MultiPoly> {
        let mut out = vec![Self::zero(&self.ring); self.degree_in(var) as usize + 1];
        for (m, c) in &self.terms {
            let e = m.exponents()[var] as usize;
            let mut exps = m.exponents().to_vec();
            exps[var] = 0;
            out[e].add_term(Monomial::from_exponents(&exps), c.clone());
        }
        out
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let order = MonomialOrder::ring_lex(&self.ring);
        for (i, (m, c)) in self.sorted_terms(&order).into_iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{}", m.render(self.ring.names()))?;
            } else {
                write!(f, "{a}*{}", m.render(self.ring.names()))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.check_ring(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.check_ring(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.check_ring(rhs);
        let mut out = MultiPoly::zero(&self.ring);
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a.mul(b), x * y);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for MultiPoly {
            type Output = MultiPoly;
            fn $f(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    fn ring() -> Ring {
        Ring::new(&["u0", "u1", "u2"])
    }

    #[test]
    fn difference_of_squares_divides() {
        let r = ring();
        let u2 = r.var("u2").unwrap();
        let one = MultiPoly::constant(&r, int(1));
        let a = &(&u2 * &u2) - &one;
        let b = &u2 - &one;
        let ord = MonomialOrder::ring_lex(&r);
        assert_eq!(a.exact_div(&b, &ord).unwrap(), &u2 + &one);
    }

    #[test]
    fn inexact_division_reports_remainder() {
        let r = ring();
        let u2 = r.var("u2").unwrap();
        let u1 = r.var("u1").unwrap();
        let ord = MonomialOrder::ring_lex(&r);
        let err = (&(&u2 * &u2) + &u1).exact_div(&u2, &ord).unwrap_err();
        assert_eq!(err, ArithError::NotExact("1*u1".to_string()));
        assert_eq!(u2.exact_div(&MultiPoly::zero(&r), &ord).unwrap_err(), ArithError::DivisionByZero);
    }

    #[test]
    fn product_with_zero_is_zero() {
        let r = ring();
        let p = &r.var("u0").unwrap() + &MultiPoly::constant(&r, rat(3, 2));
        assert!((&p * &MultiPoly::zero(&r)).is_zero());
    }

    #[test]
    fn reduce_self_and_constants() {
        let r = ring();
        let ord = MonomialOrder::lex(&r, &["u0", "u1", "u2"]).unwrap();
        let g = &(&r.var("u0").unwrap() * &r.var("u1").unwrap()) - &r.var("u2").unwrap();
        assert!(g.reduce(std::slice::from_ref(&g), &ord).is_zero());
        let one = MultiPoly::constant(&r, int(1));
        assert_eq!(one.reduce(&[r.var("u2").unwrap()], &ord), one);
    }

    #[test]
    fn primitive_normalization() {
        let r = ring();
        let ord = MonomialOrder::ring_lex(&r);
        let p = &r.var("u0").unwrap().scale(&rat(-2, 3)) + &MultiPoly::constant(&r, rat(4, 9));
        let (c, q) = p.primitive(&ord);
        assert_eq!(c, rat(-2, 9));
        assert_eq!(q.to_string(), "3*u0 - 2");
        assert_eq!(p.proportionality(&q), Some(rat(-2, 9)));
    }

    #[test]
    fn substitution_and_embedding() {
        let r = ring();
        let u0 = r.var("u0").unwrap();
        let u1 = r.var("u1").unwrap();
        let p = &(&u0 * &u0) + &u1;
        let s = p.substitute(0, &(&u1 + &MultiPoly::constant(&r, int(1))));
        assert_eq!(s.to_string(), "u1^2 + 3*u1 + 1");
        let big = Ring::new(&["z", "u0", "u1", "u2"]);
        let e = p.embed(&big).unwrap();
        assert_eq!(e.degree_in(1), 2);
        assert_eq!(e.eval(&[int(9), int(2), int(3), int(0)]), int(7));
        assert_eq!(p.eval_var(0, &int(2)).to_string(), "u1 + 4");
    }
}
