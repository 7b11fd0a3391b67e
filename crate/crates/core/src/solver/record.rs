use std::fmt;

use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::arith::{serde_rational, to_decimal, to_scientific};
use crate::realroots::{Interval, IsolatingInterval};

/// Digits after the point in decimal renderings.
pub const DECIMAL_DIGITS: usize = 30;

/// A coordinate or derived quantity: an exact rational (`lo == hi`,
/// `exact`) or a closed rational interval, with a decimal rendering of the
/// midpoint for reading.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Enclosure {
    #[serde(with = "serde_rational")]
    pub lo: BigRational,
    #[serde(with = "serde_rational")]
    pub hi: BigRational,
    pub exact: bool,
    pub decimal: String,
}

impl Enclosure {
    pub fn exact(q: BigRational) -> Self {
        let decimal = to_decimal(&q, DECIMAL_DIGITS);
        Enclosure { lo: q.clone(), hi: q, exact: true, decimal }
    }

    pub fn from_interval(iv: &Interval) -> Self {
        if iv.lo() == iv.hi() {
            return Enclosure::exact(iv.lo().clone());
        }
        Enclosure {
            lo: iv.lo().clone(),
            hi: iv.hi().clone(),
            exact: false,
            decimal: to_decimal(&iv.mid(), DECIMAL_DIGITS),
        }
    }

    pub fn from_isolating(iv: &IsolatingInterval) -> Self {
        Enclosure::from_interval(&iv.as_interval())
    }

    pub fn interval(&self) -> Interval {
        Interval::new(self.lo.clone(), self.hi.clone())
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn is_exactly(&self, x: &BigRational) -> bool {
        self.exact && &self.lo == x
    }

    /// True when the two enclosures certainly hold different numbers. A
    /// shared endpoint of two non-exact enclosures is not a value of either
    /// root, so touching intervals still separate.
    pub fn separated_from(&self, other: &Enclosure) -> bool {
        match (self.exact, other.exact) {
            (true, true) => self.lo != other.lo,
            (true, false) => !(other.lo < self.lo && self.lo < other.hi),
            (false, true) => other.separated_from(self),
            (false, false) => self.hi <= other.lo || other.hi <= self.lo,
        }
    }
}

impl fmt::Display for Enclosure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exact {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "{} in [{}, {}]", self.decimal, self.lo, self.hi)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Class {
    Jensen,
    New,
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Class::Jensen => "jensen",
            Class::New => "new",
        })
    }
}

/// Which computation produced a record.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Branch {
    /// `u0 = u1 = 1`, `u2` a root of the Jensen quadratic.
    JensenQuadratic,
    /// A root of the `u1` cofactor with `u0`, `u2` from the basis relations.
    BackSubstitution,
    /// A root of the `u1` cofactor paired with a `u2`-eliminant root and
    /// `u0` solved from the equation linear in it.
    Fallback,
}

/// A certified invariant Einstein metric `(u0, u1, u2, u3)` up to homothety.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionRecord {
    pub n: u32,
    pub p: u32,
    pub u0: Enclosure,
    pub u1: Enclosure,
    pub u2: Enclosure,
    pub u3: Enclosure,
    /// Enclosure of `lambda = r0` over the solution box.
    pub einstein_constant: Enclosure,
    pub class: Class,
    /// Upper bound on `max |f_i|` over the box.
    #[serde(with = "serde_rational")]
    pub residual_bound: BigRational,
    pub residual_bound_decimal: String,
    /// Multiplicity of the `u1` (Jensen: `u2`) root in its eliminant factor.
    pub multiplicity: usize,
    pub branch: Branch,
    pub provenance: String,
    pub note: String,
}

pub(crate) const HOMOTHETY_NOTE: &str = "normalized u3 = 1; metrics are determined up to homothety";

impl SolutionRecord {
    pub fn metric_box(&self) -> [Interval; 4] {
        [&self.u0, &self.u1, &self.u2, &self.u3].map(Enclosure::interval)
    }

    /// The same metric scaled by `t > 0`, with the Einstein constant
    /// enclosure scaled by `1/t`. The residual is unchanged since the
    /// equations are checked on the normalized point.
    pub fn scaled(&self, t: &BigRational) -> SolutionRecord {
        let s = |e: &Enclosure| Enclosure::from_interval(&e.interval().scale(t));
        let mut out = self.clone();
        out.u0 = s(&self.u0);
        out.u1 = s(&self.u1);
        out.u2 = s(&self.u2);
        out.u3 = s(&self.u3);
        out.einstein_constant = Enclosure::from_interval(&self.einstein_constant.interval().scale(&t.recip()));
        out
    }

    /// Distinct records as certified by some coordinate pair with disjoint
    /// enclosures.
    pub fn separated_from(&self, other: &SolutionRecord) -> bool {
        let a = [&self.u0, &self.u1, &self.u2];
        let b = [&other.u0, &other.u1, &other.u2];
        a.iter().zip(b).any(|(x, y)| x.separated_from(y))
    }
}

pub(crate) fn residual_decimal(r: &BigRational) -> String {
    to_scientific(r, 3)
}

/// Jensen exactly when the record came from the Jensen branch with
/// `u0 = u1 = 1`; never decided from numeric closeness.
pub fn classify(rec: &SolutionRecord) -> Class {
    let one = BigRational::one();
    if rec.branch == Branch::JensenQuadratic && rec.u0.is_exactly(&one) && rec.u1.is_exactly(&one) {
        Class::Jensen
    } else {
        Class::New
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    #[test]
    fn separation() {
        let a = Enclosure::from_interval(&Interval::new(int(0), int(1)));
        let b = Enclosure::from_interval(&Interval::new(int(1), int(2)));
        assert!(a.separated_from(&b));
        assert!(!a.separated_from(&Enclosure::exact(rat(1, 2))));
        assert!(a.separated_from(&Enclosure::exact(int(1))));
        assert!(Enclosure::exact(int(3)).separated_from(&Enclosure::exact(int(4))));
    }

    #[test]
    fn enclosure_round_trips_through_json() {
        let e = Enclosure::from_interval(&Interval::new(rat(1, 3), rat(1, 2)));
        let s = serde_json::to_string(&e).unwrap();
        assert!(s.starts_with(r#"{"lo":"1/3","hi":"1/2","exact":false,"decimal":"0.41666"#));
        assert_eq!(serde_json::from_str::<Enclosure>(&s).unwrap(), e);
    }
}
