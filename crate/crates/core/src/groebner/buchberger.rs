use std::collections::{BTreeMap, BTreeSet, HashSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::Ideal;
use crate::arith::{Monomial, MonomialOrder, MultiPoly, Ring};
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct GroebnerConfig {
    /// Abort once the basis plus the polynomial under reduction hold more
    /// terms than this.
    pub term_ceiling: usize,
}

impl Default for GroebnerConfig {
    fn default() -> Self {
        GroebnerConfig { term_ceiling: 2_000_000 }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GroebnerStats {
    pub pairs_created: usize,
    pub coprime_skipped: usize,
    pub chain_skipped: usize,
    pub reduced_to_zero: usize,
    pub basis_added: usize,
}

/// Reduced Groebner basis: monic elements sorted by decreasing leading
/// monomial.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: Ring,
    order: MonomialOrder,
    elements: Vec<MultiPoly>,
    pub stats: GroebnerStats,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn elements(&self) -> &[MultiPoly] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn reduce(&self, f: &MultiPoly) -> MultiPoly {
        f.reduce(&self.elements, &self.order)
    }

    pub fn contains(&self, f: &MultiPoly) -> bool {
        self.reduce(f).is_zero()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .filter_map(|g| g.leading_monomial(&self.order).cloned())
            .collect()
    }

    /// Leading monomials rendered for diagnostics.
    pub fn shapes(&self) -> String {
        let names = self.ring.names();
        let lms: Vec<String> = self.leading_monomials().iter().map(|m| m.render(names)).collect();
        format!("[{}]", lms.join(", "))
    }

    /// Checks the defining property directly with rational arithmetic: every
    /// S-polynomial of two elements reduces to zero.
    pub fn s_pairs_reduce_to_zero(&self) -> bool {
        let els = &self.elements;
        for i in 0..els.len() {
            for j in i + 1..els.len() {
                if !self.reduce(&s_polynomial(&els[i], &els[j], &self.order)).is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

/// `lcm/lt(f) * f - lcm/lt(g) * g` over the rationals.
pub fn s_polynomial(f: &MultiPoly, g: &MultiPoly, order: &MonomialOrder) -> MultiPoly {
    let (Some((mf, cf)), Some((mg, cg))) = (f.leading_term(order), g.leading_term(order)) else {
        return MultiPoly::zero(f.ring());
    };
    let l = mf.lcm(mg);
    let a = f.mul_monomial(&l.div(mf).expect("lcm"), &cf.recip());
    let b = g.mul_monomial(&l.div(mg).expect("lcm"), &cg.recip());
    &a - &b
}

/// Integer polynomial with exponents permuted into order position, so the
/// derived monomial `Ord` is the requested lex order. Terms descend.
#[derive(Clone, Debug)]
struct IPoly(Vec<(Monomial, BigInt)>);

impl IPoly {
    fn from_multi(f: &MultiPoly, order: &MonomialOrder) -> IPoly {
        let perm = order.permutation();
        let den = f.terms().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
        let terms: Vec<(Monomial, BigInt)> = f
            .terms()
            .map(|(m, c)| (m.permuted(perm), c.numer() * (&den / c.denom())))
            .collect();
        let mut p = IPoly(terms);
        p.0.sort_by(|a, b| b.0.cmp(&a.0));
        p.make_primitive();
        p
    }

    fn to_monic(&self, ring: &Ring, order: &MonomialOrder) -> MultiPoly {
        let perm = order.permutation();
        let lc = BigRational::from_integer(self.0[0].1.clone());
        MultiPoly::from_terms(
            ring,
            self.0.iter().map(|(m, c)| (m.unpermuted(perm), BigRational::from_integer(c.clone()) / &lc)),
        )
    }

    fn lm(&self) -> &Monomial {
        &self.0[0].0
    }

    fn lc(&self) -> &BigInt {
        &self.0[0].1
    }

    fn make_primitive(&mut self) {
        let g = self.0.iter().fold(BigInt::zero(), |acc, (_, c)| acc.gcd(c));
        if g.is_zero() {
            return;
        }
        let g = if self.0[0].1.is_negative() { -g } else { g };
        if !g.is_one() {
            for (_, c) in &mut self.0 {
                *c /= &g;
            }
        }
    }
}

/// Fraction-free normal form of `f` modulo `basis` (head and tail). Returns
/// the primitive remainder with positive leading coefficient, or the term
/// count reached when `budget` is exceeded.
fn reduce(f: &IPoly, basis: &[&IPoly], budget: usize) -> std::result::Result<IPoly, usize> {
    let mut rest: BTreeMap<Monomial, BigInt> = f.0.iter().cloned().collect();
    let mut done: Vec<(Monomial, BigInt)> = Vec::new();
    let mut steps = 0usize;
    while let Some((m, c)) = rest.pop_last() {
        let Some(g) = basis.iter().find(|g| g.lm().divides(&m)) else {
            done.push((m, c));
            continue;
        };
        let q = m.div(g.lm()).expect("divisor found");
        let d = c.gcd(g.lc());
        let (mut fa, mut fc) = (g.lc() / &d, &c / &d);
        if fa.is_negative() {
            fa = -fa;
            fc = -fc;
        }
        if !fa.is_one() {
            rest.values_mut().for_each(|v| *v *= &fa);
            done.iter_mut().for_each(|(_, v)| *v *= &fa);
        }
        for (gm, gc) in &g.0[1..] {
            let key = gm.mul(&q);
            let delta = &fc * gc;
            use std::collections::btree_map::Entry;
            match rest.entry(key) {
                Entry::Vacant(v) => {
                    v.insert(-delta);
                }
                Entry::Occupied(mut o) => {
                    *o.get_mut() -= delta;
                    if o.get().is_zero() {
                        o.remove();
                    }
                }
            }
        }
        steps += 1;
        if steps.is_multiple_of(16) {
            let g = rest.values().chain(done.iter().map(|(_, c)| c)).fold(BigInt::zero(), |a, c| a.gcd(c));
            if g > BigInt::one() {
                rest.values_mut().for_each(|v| *v /= &g);
                done.iter_mut().for_each(|(_, v)| *v /= &g);
            }
        }
        if rest.len() + done.len() > budget {
            return Err(rest.len() + done.len());
        }
    }
    let mut out = IPoly(done);
    out.make_primitive();
    Ok(out)
}

fn s_poly(f: &IPoly, g: &IPoly) -> IPoly {
    let l = f.lm().lcm(g.lm());
    let d = f.lc().gcd(g.lc());
    let (a, b) = (g.lc() / &d, f.lc() / &d);
    let (qf, qg) = (l.div(f.lm()).expect("lcm"), l.div(g.lm()).expect("lcm"));
    let mut acc: BTreeMap<Monomial, BigInt> = BTreeMap::new();
    for (m, c) in &f.0[1..] {
        *acc.entry(m.mul(&qf)).or_insert_with(BigInt::zero) += &a * c;
    }
    for (m, c) in &g.0[1..] {
        *acc.entry(m.mul(&qg)).or_insert_with(BigInt::zero) -= &b * c;
    }
    let mut terms: Vec<(Monomial, BigInt)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    terms.reverse();
    IPoly(terms)
}

fn key(i: usize, j: usize) -> (usize, usize) {
    (i.min(j), i.max(j))
}

/// Buchberger's algorithm with normal pair selection (smallest lcm under the
/// order itself), the coprime and chain criteria, and fraction-free
/// reduction to primitive integer polynomials.
pub fn buchberger(ideal: &Ideal, order: &MonomialOrder, config: &GroebnerConfig) -> Result<GroebnerBasis> {
    let ring = ideal.ring().clone();
    let mut stats = GroebnerStats::default();
    let mut basis: Vec<IPoly> = Vec::new();
    let mut queue: BTreeSet<(Monomial, usize, usize)> = BTreeSet::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();

    let add = |h: IPoly,
               basis: &mut Vec<IPoly>,
               queue: &mut BTreeSet<(Monomial, usize, usize)>,
               pending: &mut HashSet<(usize, usize)>,
               stats: &mut GroebnerStats| {
        let j = basis.len();
        for (i, g) in basis.iter().enumerate() {
            let l = g.lm().lcm(h.lm());
            queue.insert((l, i, j));
            pending.insert((i, j));
            stats.pairs_created += 1;
        }
        basis.push(h);
        stats.basis_added += 1;
    };

    let total = |basis: &[IPoly]| basis.iter().map(|g| g.0.len()).sum::<usize>();
    let limit = |terms: usize, basis: &[IPoly], pairs_left: usize| Error::ResourceLimit {
        ceiling: config.term_ceiling,
        terms,
        basis_len: basis.len(),
        pairs_left,
    };

    for f in ideal.generators() {
        let f = IPoly::from_multi(f, order);
        let refs: Vec<&IPoly> = basis.iter().collect();
        let budget = config.term_ceiling.saturating_sub(total(&basis));
        let h = reduce(&f, &refs, budget).map_err(|t| limit(t + total(&basis), &basis, queue.len()))?;
        if !h.0.is_empty() {
            add(h, &mut basis, &mut queue, &mut pending, &mut stats);
        }
    }

    while let Some((l, i, j)) = queue.pop_first() {
        pending.remove(&(i, j));
        if basis[i].lm().is_coprime(basis[j].lm()) {
            stats.coprime_skipped += 1;
            continue;
        }
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].lm().divides(&l)
                && !pending.contains(&key(i, k))
                && !pending.contains(&key(j, k))
        });
        if chain {
            stats.chain_skipped += 1;
            continue;
        }
        let s = s_poly(&basis[i], &basis[j]);
        let refs: Vec<&IPoly> = basis.iter().collect();
        let budget = config.term_ceiling.saturating_sub(total(&basis));
        let h = reduce(&s, &refs, budget).map_err(|t| limit(t + total(&basis), &basis, queue.len()))?;
        if h.0.is_empty() {
            stats.reduced_to_zero += 1;
        } else {
            add(h, &mut basis, &mut queue, &mut pending, &mut stats);
            if total(&basis) > config.term_ceiling {
                return Err(limit(total(&basis), &basis, queue.len()));
            }
        }
    }

    let elements = reduced_basis(basis, config)?;
    let mut elements: Vec<MultiPoly> = elements.iter().map(|g| g.to_monic(&ring, order)).collect();
    elements.sort_by(|a, b| {
        let (la, lb) = (a.leading_monomial(order).expect("nonzero"), b.leading_monomial(order).expect("nonzero"));
        order.cmp(lb, la)
    });
    Ok(GroebnerBasis { ring, order: order.clone(), elements, stats })
}

/// Drops elements whose leading monomial is a multiple of another's, then
/// reduces every tail against the rest.
fn reduced_basis(basis: Vec<IPoly>, config: &GroebnerConfig) -> Result<Vec<IPoly>> {
    let mut minimal: Vec<IPoly> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let redundant = basis.iter().enumerate().any(|(k, h)| {
            k != i && h.lm().divides(g.lm()) && (h.lm() != g.lm() || k < i)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<&IPoly> = minimal.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, g)| g).collect();
        let r = reduce(&minimal[i], &others, config.term_ceiling).map_err(|t| Error::ResourceLimit {
            ceiling: config.term_ceiling,
            terms: t,
            basis_len: minimal.len(),
            pairs_left: 0,
        })?;
        out.push(r);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    fn ideal(ring: &Ring, gens: Vec<MultiPoly>) -> Ideal {
        Ideal::new(ring, gens).unwrap()
    }

    #[test]
    fn substitution_example() {
        let ring = Ring::new(&["u0", "u1"]);
        let (u0, u1) = (ring.var("u0").unwrap(), ring.var("u1").unwrap());
        let one = MultiPoly::constant(&ring, int(1));
        let id = ideal(&ring, vec![&u0 - &one, &(&u0 * &u1) - &one]);
        let order = MonomialOrder::lex(&ring, &["u0", "u1"]).unwrap();
        let gb = buchberger(&id, &order, &GroebnerConfig::default()).unwrap();
        assert_eq!(gb.elements(), &[&u0 - &one, &u1 - &one]);
    }

    #[test]
    fn twisted_cubic_elimination() {
        // (t, t^2, t^3): eliminating t from x - t, y - t^2, z - t^3.
        let ring = Ring::new(&["t", "x", "y", "z"]);
        let v = |s| ring.var(s).unwrap();
        let (t, x, y, z) = (v("t"), v("x"), v("y"), v("z"));
        let id = ideal(&ring, vec![&x - &t, &y - &t.pow(2), &z - &t.pow(3)]);
        let order = MonomialOrder::lex(&ring, &["t", "x", "y", "z"]).unwrap();
        let gb = buchberger(&id, &order, &GroebnerConfig::default()).unwrap();
        assert!(gb.s_pairs_reduce_to_zero());
        assert!(gb.contains(&(&y - &x.pow(2))));
        assert!(gb.contains(&(&z - &x.pow(3))));
        assert!(!gb.contains(&(&z - &y)));
    }

    #[test]
    fn ceiling_aborts_with_diagnostics() {
        let ring = Ring::new(&["x", "y"]);
        let (x, y) = (ring.var("x").unwrap(), ring.var("y").unwrap());
        let one = MultiPoly::constant(&ring, int(1));
        let id = ideal(&ring, vec![&(&x.pow(5) + &y.pow(4)) - &one, &(&(&x * &y).pow(2) + &y) - &one]);
        let order = MonomialOrder::lex(&ring, &["x", "y"]).unwrap();
        let err = buchberger(&id, &order, &GroebnerConfig { term_ceiling: 12 }).unwrap_err();
        assert!(matches!(err, Error::ResourceLimit { ceiling: 12, .. }), "{err}");
    }
}
