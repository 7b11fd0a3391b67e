use std::cmp::Ordering;

use smallvec::SmallVec;

use super::{ArithError, Ring};

/// Exponent vector, one slot per ring variable in ring order.
///
/// The derived `Ord` is lexicographic in ring order; it is only used for
/// canonical storage. Elimination orders go through [`MonomialOrder`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(SmallVec<[u32; 4]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    /// The monomial `x_var^power`.
    pub fn var(nvars: usize, var: usize, power: u32) -> Self {
        let mut m = Self::one(nvars);
        m.0[var] = power;
        m
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Exponents permuted into `perm` order: slot `k` of the result holds the
    /// exponent of ring variable `perm[k]`.
    pub(crate) fn permuted(&self, perm: &[usize]) -> Monomial {
        Monomial(perm.iter().map(|&i| self.0[i]).collect())
    }

    /// Inverse of [`Monomial::permuted`].
    pub(crate) fn unpermuted(&self, perm: &[usize]) -> Monomial {
        let mut out = Self::one(self.0.len());
        for (k, &i) in perm.iter().enumerate() {
            out.0[i] = self.0[k];
        }
        out
    }

    pub fn render(&self, names: &[String]) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .zip(names)
            .filter(|(e, _)| **e > 0)
            .map(|(e, n)| if *e == 1 { n.clone() } else { format!("{n}^{e}") })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

/// Lexicographic order given by a permutation of the ring variables,
/// listed from greatest to least.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialOrder {
    perm: Vec<usize>,
    names: Vec<String>,
}

impl MonomialOrder {
    /// `lex(ring, ["z", "u0", "u2", "u1"])` is the order `z > u0 > u2 > u1`.
    pub fn lex<S: AsRef<str>>(ring: &Ring, greatest_first: &[S]) -> Result<Self, ArithError> {
        let names: Vec<String> = greatest_first.iter().map(|s| s.as_ref().to_string()).collect();
        if names.len() != ring.nvars() {
            return Err(ArithError::BadOrder(names));
        }
        let mut perm = Vec::with_capacity(names.len());
        for n in &names {
            let i = ring.index_of(n).ok_or_else(|| ArithError::BadOrder(names.clone()))?;
            if perm.contains(&i) {
                return Err(ArithError::BadOrder(names));
            }
            perm.push(i);
        }
        Ok(MonomialOrder { perm, names })
    }

    /// Plain lex in ring order.
    pub fn ring_lex(ring: &Ring) -> Self {
        MonomialOrder { perm: (0..ring.nvars()).collect(), names: ring.names().to_vec() }
    }

    pub fn permutation(&self) -> &[usize] {
        &self.perm
    }

    /// Variable names from greatest to least.
    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Ring index of the least variable.
    pub fn least_var(&self) -> usize {
        *self.perm.last().expect("order over an empty ring")
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        for &i in &self.perm {
            match a.0[i].cmp(&b.0[i]) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lex_with_permutation() {
        let ring = Ring::new(&["z", "u0", "u1", "u2"]);
        let ord = MonomialOrder::lex(&ring, &["z", "u0", "u2", "u1"]).unwrap();
        let u1 = Monomial::var(4, 2, 5);
        let u2 = Monomial::var(4, 3, 1);
        assert_eq!(ord.cmp(&u2, &u1), Ordering::Greater);
        assert_eq!(MonomialOrder::ring_lex(&ring).cmp(&u2, &u1), Ordering::Less);
        assert_eq!(ord.least_var(), 2);
    }

    #[test]
    fn rejects_non_permutations() {
        let ring = Ring::new(&["x", "y"]);
        assert!(MonomialOrder::lex(&ring, &["x", "x"]).is_err());
        assert!(MonomialOrder::lex(&ring, &["x"]).is_err());
        assert!(MonomialOrder::lex(&ring, &["x", "w"]).is_err());
    }

    #[test]
    fn divisibility_and_lcm() {
        let a = Monomial::from_exponents(&[2, 0, 1]);
        let b = Monomial::from_exponents(&[1, 3, 0]);
        assert_eq!(a.lcm(&b).exponents(), &[2, 3, 1]);
        assert_eq!(a.gcd(&b).exponents(), &[1, 0, 0]);
        assert!(!a.divides(&b));
        assert_eq!(a.lcm(&b).div(&a).unwrap().exponents(), &[0, 3, 0]);
        assert!(Monomial::var(3, 0, 1).is_coprime(&Monomial::var(3, 1, 4)));
        let perm = [2, 0, 1];
        assert_eq!(a.permuted(&perm).unpermuted(&perm), a);
    }
}
