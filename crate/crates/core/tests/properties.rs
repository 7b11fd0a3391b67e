use std::sync::OnceLock;

use proptest::prelude::*;
use stiefel_einstein::arith::{int, rat, BigRational, Bound, MultiPoly, UniPoly};
use stiefel_einstein::curvature::{ricci_specialized, MetricVector};
use stiefel_einstein::groebner::{basis_for, EliminationOrder, GroebnerBasis, GroebnerConfig};
use stiefel_einstein::realroots::{count_real_roots, isolate, refine};
use stiefel_einstein::son::{bracket, SkewElement};

fn uni() -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(-20i64..=20, 1..7).prop_map(|c| UniPoly::from_ints("x", &c))
}

fn positive_rat() -> impl Strategy<Value = BigRational> {
    (1i64..40, 1i64..12).prop_map(|(a, b)| rat(a, b))
}

fn skew(n: usize) -> impl Strategy<Value = SkewElement> {
    prop::collection::vec((1..=n, 1..=n, -3i64..=3), 0..6).prop_map(move |terms| {
        terms
            .into_iter()
            .fold(SkewElement::zero(n), |acc, (a, b, c)| acc.add(&SkewElement::basis(n, a, b).scale(&int(c))))
    })
}

fn basis_7_2() -> &'static GroebnerBasis {
    static GB: OnceLock<GroebnerBasis> = OnceLock::new();
    GB.get_or_init(|| basis_for(7, 2, EliminationOrder::U1Last, &GroebnerConfig::default()).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn polynomial_ring_axioms(a in uni(), b in uni(), c in uni()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        if !b.is_zero() {
            prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a.clone());
            let (q, r) = a.div_rem(&b).unwrap();
            prop_assert_eq!(&(&q * &b) + &r, a.clone());
            prop_assert!(r.is_zero() || r.degree() < b.degree());
        }
    }

    #[test]
    fn sturm_count_bounds_sampled_sign_changes(f in uni()) {
        prop_assume!(f.degree().unwrap_or(0) >= 1);
        let sq = f.squarefree_part().unwrap();
        let (lo, hi) = (int(-25), int(25));
        let count = count_real_roots(&f, &Bound::At(lo.clone()), &Bound::At(hi.clone()));
        // Every sign change on a grid marks a distinct root of the squarefree part.
        let signs: Vec<i32> = (0..=200).map(|k| sq.sign_at(&(&lo + rat(k, 4)))).collect();
        let nonzero: Vec<i32> = signs.iter().copied().filter(|s| *s != 0).collect();
        let changes = nonzero.windows(2).filter(|w| w[0] != w[1]).count();
        let zeros = signs.iter().skip(1).filter(|s| **s == 0).count();
        prop_assert!(changes <= count && count <= f.degree().unwrap());
        prop_assert!(zeros <= count);
        prop_assert_eq!(isolate(&f).len(), count_real_roots(&f, &Bound::NegInf, &Bound::PosInf));
    }

    #[test]
    fn refined_intervals_still_isolate(f in uni()) {
        prop_assume!(f.degree().unwrap_or(0) >= 1);
        let sq = f.squarefree_part().unwrap();
        let w = rat(1, 1_000_000);
        for iv in isolate(&f) {
            let r = refine(&sq, &iv, &w);
            prop_assert!(iv.lo <= r.lo && r.hi <= iv.hi);
            if r.exact {
                prop_assert_eq!(sq.sign_at(&r.lo), 0);
            } else {
                prop_assert!(r.width() < w);
                prop_assert_eq!(sq.sign_at(&r.lo) * sq.sign_at(&r.hi), -1);
            }
        }
    }

    #[test]
    fn reduction_is_idempotent(exps in prop::collection::vec((0u32..4, 0u32..3, 0u32..3, 0u32..3, -5i64..=5), 1..5)) {
        let gb = basis_7_2();
        let ring = gb.ring();
        let vars: Vec<MultiPoly> = ["z", "u0", "u1", "u2"].iter().map(|v| ring.var(v).unwrap()).collect();
        let mut f = MultiPoly::zero(ring);
        for (a, b, c, d, k) in exps {
            let m = &(&vars[0].pow(a) * &vars[1].pow(b)) * &(&vars[2].pow(c) * &vars[3].pow(d));
            f = &f + &m.scale(&int(k));
        }
        let r = gb.reduce(&f);
        prop_assert_eq!(gb.reduce(&r), r.clone());
        // f - r lies in the ideal.
        prop_assert!(gb.contains(&(&f - &r)));
    }

    #[test]
    fn bracket_is_a_lie_bracket(x in skew(6), y in skew(6), z in skew(6)) {
        let b = |a: &SkewElement, c: &SkewElement| bracket(a, c).unwrap();
        prop_assert!(b(&x, &y).add(&b(&y, &x)).is_zero());
        let jacobi = b(&x, &b(&y, &z)).add(&b(&y, &b(&z, &x))).add(&b(&z, &b(&x, &y)));
        prop_assert!(jacobi.is_zero());
        prop_assert!(b(&x, &x).is_zero());
    }

    #[test]
    fn ricci_is_homogeneous_of_degree_minus_one(
        u in prop::array::uniform4(positive_rat()),
        t in positive_rat(),
        cell in prop::sample::select(vec![(7u32, 2u32), (9, 3), (12, 3), (17, 4)]),
    ) {
        let (n, p) = cell;
        let r = ricci_specialized(n, p, &MetricVector::numeric(u.clone()).unwrap()).unwrap().values();
        let scaled = u.clone().map(|x| x * &t);
        let rt = ricci_specialized(n, p, &MetricVector::numeric(scaled).unwrap()).unwrap().values();
        for (a, b) in r.iter().zip(&rt) {
            prop_assert_eq!(a, &(b * &t));
        }
    }
}
