//! Lexicographic Groebner bases over the rationals for the saturated
//! Einstein ideal, eliminants, known-factor splitting and back-substitution.

mod buchberger;
mod elimination;
mod golden;
mod resultant;

pub use buchberger::{buchberger, s_polynomial, GroebnerBasis, GroebnerConfig, GroebnerStats};
pub use elimination::{
    back_substitution, eliminant, split_known_factor, BackSubstitution, EliminationResult, GoldenComparison,
    KnownFactor, Relation,
};
pub use golden::{eval_formula, Expr, GoldenData, GoldenRecord};
pub use resultant::{remove_monomial_content, resultant, resultant_eliminant};

use std::fmt;
use std::str::FromStr;

use crate::arith::{int, Monomial, MonomialOrder, MultiPoly, Ring};
use crate::curvature::{einstein_system, EinsteinSystem};
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct Ideal {
    ring: Ring,
    generators: Vec<MultiPoly>,
}

impl Ideal {
    /// Generators must be nonzero and live in `ring`.
    pub fn new(ring: &Ring, generators: Vec<MultiPoly>) -> Result<Ideal> {
        if generators.is_empty() || generators.iter().any(MultiPoly::is_zero) {
            return Err(Error::Invalid("ideal generators must be nonzero".into()));
        }
        if generators.iter().any(|g| g.ring() != ring) {
            return Err(Error::Invalid("ideal generators must share the ring".into()));
        }
        Ok(Ideal { ring: ring.clone(), generators })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[MultiPoly] {
        &self.generators
    }
}

/// `(f1, f2, f3, z u0 u1 u2 - 1)` in `Q[z, u0, u1, u2]`; the last generator
/// discards solutions with a vanishing coordinate.
pub fn saturated_ideal(sys: &EinsteinSystem) -> Ideal {
    let ring = Ring::new(&["z", "u0", "u1", "u2"]);
    let mut gens: Vec<MultiPoly> = sys.f.iter().map(|f| f.embed(&ring).expect("u0, u1, u2 embed")).collect();
    let sat = &MultiPoly::monomial(&ring, Monomial::from_exponents(&[1, 1, 1, 1]), int(1))
        - &MultiPoly::constant(&ring, int(1));
    gens.push(sat);
    Ideal::new(&ring, gens).expect("Einstein polynomials are nonzero")
}

/// The three elimination orders used on the saturated ideal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EliminationOrder {
    /// `z > u0 > u1 > u2`, eliminant in `u2`.
    U2Last,
    /// `z > u0 > u2 > u1`, eliminant in `u1`, back-substitution available.
    U1Last,
    /// `z > u1 > u2 > u0`, eliminant in `u0`.
    U0Last,
}

impl EliminationOrder {
    pub const ALL: [EliminationOrder; 3] = [EliminationOrder::U2Last, EliminationOrder::U1Last, EliminationOrder::U0Last];

    pub fn names(self) -> [&'static str; 4] {
        match self {
            EliminationOrder::U2Last => ["z", "u0", "u1", "u2"],
            EliminationOrder::U1Last => ["z", "u0", "u2", "u1"],
            EliminationOrder::U0Last => ["z", "u1", "u2", "u0"],
        }
    }

    pub fn known_factor(self) -> KnownFactor {
        match self {
            EliminationOrder::U2Last => KnownFactor::JensenQuadratic,
            EliminationOrder::U1Last => KnownFactor::U1MinusOne,
            EliminationOrder::U0Last => KnownFactor::U0MinusOne,
        }
    }

    pub fn monomial_order(self, ring: &Ring) -> Result<MonomialOrder> {
        Ok(MonomialOrder::lex(ring, &self.names())?)
    }
}

impl fmt::Display for EliminationOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.names().join(","))
    }
}

impl FromStr for EliminationOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let names: Vec<&str> = s.split(',').map(str::trim).collect();
        EliminationOrder::ALL
            .into_iter()
            .find(|o| o.names() == names.as_slice())
            .ok_or_else(|| Error::Invalid(format!("unknown order {s:?}; expected z,u0,u1,u2 | z,u0,u2,u1 | z,u1,u2,u0")))
    }
}

/// Groebner basis of the saturated ideal at `(n, p)` under `order`.
pub fn basis_for(n: u32, p: u32, order: EliminationOrder, config: &GroebnerConfig) -> Result<GroebnerBasis> {
    let sys = einstein_system(n, p)?;
    let ideal = saturated_ideal(&sys);
    buchberger(&ideal, &order.monomial_order(ideal.ring())?, config)
}

/// Full elimination along one order: basis, eliminant, known-factor split
/// with golden comparison, and back-substitution for the `u1` order.
pub fn eliminate(n: u32, p: u32, order: EliminationOrder, config: &GroebnerConfig) -> Result<(GroebnerBasis, EliminationResult)> {
    let gb = basis_for(n, p, order, config)?;
    let e = eliminant(&gb)?;
    let mut res = split_known_factor(&e, n, p, order.known_factor(), Some(GoldenData::shipped()))?;
    if order == EliminationOrder::U1Last {
        res.relations = back_substitution(&gb, &res.cofactor).ok();
    }
    Ok((gb, res))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn saturated_ideal_shape() {
        let sys = einstein_system(7, 2).unwrap();
        let id = saturated_ideal(&sys);
        assert_eq!(id.generators().len(), 4);
        let z = id.ring().index_of("z").unwrap();
        for f in &id.generators()[..3] {
            assert_eq!(f.degree_in(z), 0);
        }
        assert_eq!(id.generators()[3].to_string(), "z*u0*u1*u2 - 1");
    }

    #[test]
    fn order_parsing() {
        assert_eq!("z,u0,u2,u1".parse::<EliminationOrder>().unwrap(), EliminationOrder::U1Last);
        assert_eq!(EliminationOrder::U0Last.to_string(), "z,u1,u2,u0");
        assert!("u0,z,u1,u2".parse::<EliminationOrder>().is_err());
    }
}
