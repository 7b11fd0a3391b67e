use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{GoldenData, GroebnerBasis};
use crate::arith::{int, MultiPoly, UniPoly};
use crate::curvature::jensen_quadratic;
use crate::{Error, Result};

/// The unique (up to scaling) basis element in the least variable alone,
/// primitive with positive leading coefficient.
pub fn eliminant(gb: &GroebnerBasis) -> Result<UniPoly> {
    let var = gb.order().least_var();
    let name = gb.ring().names()[var].clone();
    gb.elements()
        .iter()
        .filter(|g| g.total_degree() > 0)
        .find_map(|g| g.to_univariate(var))
        .map(|u| u.primitive_part())
        .ok_or(Error::NoUnivariateElement(name))
}

/// Factors named in closed form that split off each eliminant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KnownFactor {
    /// `2(p-1)u2^2 - 2(n-2)u2 + (n-1)` in the `u2`-eliminant.
    JensenQuadratic,
    /// `u1 - 1` in the `u1`-eliminant.
    U1MinusOne,
    /// `u0 - 1` in the `u0`-eliminant.
    U0MinusOne,
}

impl KnownFactor {
    pub fn variable(self) -> &'static str {
        match self {
            KnownFactor::JensenQuadratic => "u2",
            KnownFactor::U1MinusOne => "u1",
            KnownFactor::U0MinusOne => "u0",
        }
    }

    pub fn poly(self, n: u32, p: u32) -> UniPoly {
        match self {
            KnownFactor::JensenQuadratic => jensen_quadratic(n, p),
            KnownFactor::U1MinusOne => UniPoly::linear_root("u1", int(1)),
            KnownFactor::U0MinusOne => UniPoly::linear_root("u0", int(1)),
        }
    }

    /// Golden record for the cofactor; for `u0` only its leading
    /// coefficient is available.
    pub fn golden_name(self) -> &'static str {
        match self {
            KnownFactor::JensenQuadratic => "G",
            KnownFactor::U1MinusOne => "F",
            KnownFactor::U0MinusOne => "a8",
        }
    }
}

impl fmt::Display for KnownFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            KnownFactor::JensenQuadratic => "jensen-quadratic",
            KnownFactor::U1MinusOne => "u1-minus-1",
            KnownFactor::U0MinusOne => "u0-minus-1",
        };
        f.write_str(s)
    }
}

/// Outcome of comparing a cofactor with its transcribed counterpart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoldenComparison {
    pub name: String,
    pub expected: UniPoly,
    /// `cofactor = ratio * expected` when such a rational exists. For the
    /// `a8` record the ratio is between leading coefficients.
    pub ratio: Option<BigRational>,
    pub matches: bool,
}

/// `var = numerator(u1) / denominator` on the zero set of the cofactor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub variable: String,
    pub denominator: BigRational,
    pub numerator: UniPoly,
    /// The basis element `A(u1) var - W(u1)` the relation was read from.
    pub source: MultiPoly,
}

impl Relation {
    pub fn eval(&self, u1: &BigRational) -> BigRational {
        self.numerator.eval(u1) / &self.denominator
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BackSubstitution {
    pub u0: Relation,
    pub u2: Relation,
}

#[derive(Clone, Debug)]
pub struct EliminationResult {
    pub n: u32,
    pub p: u32,
    pub which: KnownFactor,
    pub eliminant: UniPoly,
    pub known_factor: UniPoly,
    /// Primitive, positive leading coefficient.
    pub cofactor: UniPoly,
    /// `eliminant = constant * known_factor * cofactor`.
    pub constant: BigRational,
    /// `gcd(known_factor, cofactor)`, monic; degree 0 when coprime.
    pub shared_with_known: UniPoly,
    pub cofactor_squarefree: bool,
    pub golden: Option<GoldenComparison>,
    pub relations: Option<BackSubstitution>,
}

/// Divides the named factor out of `e` exactly and compares the cofactor
/// with the golden record when one is available.
pub fn split_known_factor(
    e: &UniPoly,
    n: u32,
    p: u32,
    which: KnownFactor,
    golden: Option<&GoldenData>,
) -> Result<EliminationResult> {
    if e.var() != which.variable() {
        return Err(Error::FactorDoesNotDivide {
            factor: which.to_string(),
            detail: format!("eliminant is in {}, factor in {}", e.var(), which.variable()),
        });
    }
    let known = which.poly(n, p);
    let quotient = e.exact_div(&known).map_err(|err| Error::FactorDoesNotDivide {
        factor: which.to_string(),
        detail: err.to_string(),
    })?;
    let (content, cofactor) = quotient.primitive();
    let shared_with_known = known.gcd(&cofactor);
    let cofactor_squarefree = cofactor.is_squarefree();
    let golden = match golden {
        Some(data) => Some(compare_golden(data, which, n, p, &cofactor)?),
        None => None,
    };
    Ok(EliminationResult {
        n,
        p,
        which,
        eliminant: e.clone(),
        known_factor: known,
        cofactor,
        constant: content,
        shared_with_known,
        cofactor_squarefree,
        golden,
        relations: None,
    })
}

fn compare_golden(data: &GoldenData, which: KnownFactor, n: u32, p: u32, cofactor: &UniPoly) -> Result<GoldenComparison> {
    let name = which.golden_name();
    let expected = data.poly(name, n, p)?.with_var(which.variable());
    let (ratio, matches) = if which == KnownFactor::U0MinusOne {
        let lc = expected.lc().cloned().unwrap_or_else(BigRational::zero);
        let ratio = cofactor.lc().filter(|_| !lc.is_zero()).map(|c| c / &lc);
        let ok = cofactor.degree() == Some(8) && ratio.as_ref().map(|r| r.is_positive()).unwrap_or(false);
        (ratio, ok)
    } else {
        let ratio = cofactor.proportionality(&expected);
        let ok = ratio.as_ref().map(|r| r.is_positive()).unwrap_or(false);
        (ratio, ok)
    };
    Ok(GoldenComparison { name: name.to_string(), expected, ratio, matches })
}

/// Reads `b u0 - X(u1)` and `c u2 - Y(u1)` off a lex `z > u0 > u2 > u1`
/// basis. The basis elements have the form `A(u1) v - W(u1)`; the relation
/// is `v = W * A^{-1} mod cofactor`, valid on the zero set of `cofactor`,
/// with integer coprime coefficients in `X` and `b > 0`.
pub fn back_substitution(gb: &GroebnerBasis, cofactor: &UniPoly) -> Result<BackSubstitution> {
    let names = gb.order().names();
    if names != ["z", "u0", "u2", "u1"] {
        return Err(Error::Invalid(format!("back-substitution needs lex z > u0 > u2 > u1, got {names:?}")));
    }
    let relation = |var: &str| -> Result<Relation> {
        let ring = gb.ring();
        let v = ring.index_of(var).expect("ring has u0 and u2");
        let u1 = ring.index_of("u1").expect("ring has u1");
        let not_found = || Error::RelationNotFound { variable: var.to_string(), shapes: gb.shapes() };
        let candidates = gb.elements().iter().filter(|g| {
            g.degree_in(v) == 1 && g.support_vars().iter().all(|&k| k == v || k == u1)
        });
        for g in candidates {
            let cs = g.coefficients_in(v);
            let a = cs[1].to_univariate(u1).ok_or_else(not_found)?;
            let w = (-&cs[0]).to_univariate(u1).ok_or_else(not_found)?;
            let Some(inv) = a.inverse_mod(cofactor) else { continue };
            let x = (&w * &inv).rem(cofactor)?;
            if x.is_zero() {
                continue;
            }
            let (mut content, mut numerator) = x.primitive();
            if content.is_negative() {
                content = -content;
                numerator = -&numerator;
            }
            return Ok(Relation {
                variable: var.to_string(),
                denominator: BigRational::one() / content,
                numerator,
                source: g.clone(),
            });
        }
        Err(not_found())
    };
    Ok(BackSubstitution { u0: relation("u0")?, u2: relation("u2")? })
}
