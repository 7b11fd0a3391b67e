use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::{to_decimal, MultiPoly, UniPoly};
use crate::curvature::Laurent;

/// Closed interval `[lo, hi]` with exact rational endpoints. Every operation
/// returns an enclosure of all values the exact operation can take; since the
/// endpoints are computed exactly no outward rounding is needed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    lo: BigRational,
    hi: BigRational,
}

impl Interval {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        assert!(lo <= hi, "interval endpoints out of order: {lo} > {hi}");
        Interval { lo, hi }
    }

    pub fn point(x: BigRational) -> Self {
        Interval { lo: x.clone(), hi: x }
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn mid(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(2.into())
    }

    /// `max(|lo|, |hi|)`.
    pub fn mag(&self) -> BigRational {
        let (a, b) = (self.lo.abs(), self.hi.abs());
        if a > b {
            a
        } else {
            b
        }
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(&BigRational::zero())
    }

    pub fn is_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn overlaps(&self, other: &Interval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn scale(&self, c: &BigRational) -> Interval {
        let (a, b) = (&self.lo * c, &self.hi * c);
        if a <= b {
            Interval::new(a, b)
        } else {
            Interval::new(b, a)
        }
    }

    /// `1 / [lo, hi]`, or `None` when the interval contains zero.
    pub fn recip(&self) -> Option<Interval> {
        if self.contains_zero() {
            return None;
        }
        Some(Interval::new(self.hi.recip(), self.lo.recip()))
    }

    /// Tight power: even powers of a zero-straddling interval start at 0.
    pub fn powi(&self, e: u32) -> Interval {
        if e == 0 {
            return Interval::point(BigRational::one());
        }
        let (a, b) = (num_traits::pow(self.lo.clone(), e as usize), num_traits::pow(self.hi.clone(), e as usize));
        if e % 2 == 1 {
            Interval::new(a, b)
        } else if self.contains_zero() {
            Interval::new(BigRational::zero(), if a > b { a } else { b })
        } else if a <= b {
            Interval::new(a, b)
        } else {
            Interval::new(b, a)
        }
    }

    /// Integer power with negative exponents through [`Interval::recip`].
    pub fn powz(&self, e: i32) -> Option<Interval> {
        if e >= 0 {
            Some(self.powi(e as u32))
        } else {
            self.recip().map(|r| r.powi((-e) as u32))
        }
    }

    pub fn hull(&self, other: &Interval) -> Interval {
        Interval::new(
            if self.lo < other.lo { self.lo.clone() } else { other.lo.clone() },
            if self.hi > other.hi { self.hi.clone() } else { other.hi.clone() },
        )
    }

    pub fn render(&self, digits: usize) -> String {
        format!("[{}, {}]", to_decimal(&self.lo, digits), to_decimal(&self.hi, digits))
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

impl Add for &Interval {
    type Output = Interval;
    fn add(self, o: &Interval) -> Interval {
        Interval::new(&self.lo + &o.lo, &self.hi + &o.hi)
    }
}

impl Sub for &Interval {
    type Output = Interval;
    fn sub(self, o: &Interval) -> Interval {
        Interval::new(&self.lo - &o.hi, &self.hi - &o.lo)
    }
}

impl Mul for &Interval {
    type Output = Interval;
    fn mul(self, o: &Interval) -> Interval {
        let c = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let lo = c.iter().min().expect("four products").clone();
        let hi = c.iter().max().expect("four products").clone();
        Interval::new(lo, hi)
    }
}

impl Neg for &Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        Interval::new(-&self.hi, -&self.lo)
    }
}

/// Horner enclosure of `f` over `x`.
pub fn eval_uni(f: &UniPoly, x: &Interval) -> Interval {
    let mut acc = Interval::point(BigRational::zero());
    for c in f.coeffs().iter().rev() {
        acc = &(&acc * x) + &Interval::point(c.clone());
    }
    acc
}

/// Term-wise enclosure of `f` over a box given in ring order.
pub fn eval_multi(f: &MultiPoly, bx: &[Interval]) -> Interval {
    assert_eq!(bx.len(), f.ring().nvars());
    let mut acc = Interval::point(BigRational::zero());
    for (m, c) in f.terms() {
        let mut t = Interval::point(c.clone());
        for (x, &e) in bx.iter().zip(m.exponents()) {
            if e > 0 {
                t = &t * &x.powi(e);
            }
        }
        acc = &acc + &t;
    }
    acc
}

/// Term-wise enclosure of a Laurent polynomial over a box of four
/// intervals; `None` when a negative power meets an interval containing 0.
pub fn eval_laurent(f: &Laurent, bx: &[Interval; 4]) -> Option<Interval> {
    let mut acc = Interval::point(BigRational::zero());
    for (e, c) in f.terms() {
        let mut t = Interval::point(c.clone());
        for (x, &k) in bx.iter().zip(e) {
            if k != 0 {
                t = &t * &x.powz(k)?;
            }
        }
        acc = &acc + &t;
    }
    Some(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    fn iv(a: i64, b: i64) -> Interval {
        Interval::new(int(a), int(b))
    }

    #[test]
    fn arithmetic_encloses() {
        assert_eq!(&iv(-1, 2) * &iv(3, 4), iv(-4, 8));
        assert_eq!(&iv(-1, 2) - &iv(3, 4), iv(-5, -1));
        assert_eq!(iv(-3, 2).powi(2), iv(0, 9));
        assert_eq!(iv(-3, -2).powi(2), iv(4, 9));
        assert_eq!(iv(2, 4).recip().unwrap(), Interval::new(rat(1, 4), rat(1, 2)));
        assert!(iv(-1, 1).recip().is_none());
        assert_eq!(iv(2, 4).powz(-1).unwrap(), Interval::new(rat(1, 4), rat(1, 2)));
    }

    #[test]
    fn horner_contains_true_values() {
        let f = UniPoly::from_ints("x", &[-2, 0, 1]);
        let x = Interval::new(rat(141, 100), rat(142, 100));
        let y = eval_uni(&f, &x);
        assert!(y.contains_zero());
        assert!(y.contains(&f.eval(&rat(1415, 1000))));
        assert!(!eval_uni(&f, &iv(2, 3)).contains_zero());
    }
}
