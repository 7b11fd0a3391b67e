use num_traits::Zero;
use stiefel_einstein::arith::{int, parse_rational, rat, Bound, UniPoly};
use stiefel_einstein::curvature::jensen_quadratic;
use stiefel_einstein::groebner::{eval_formula, GoldenData};
use stiefel_einstein::realroots::*;

fn golden_f(n: u32, p: u32) -> UniPoly {
    GoldenData::shipped().poly("F", n, p).unwrap()
}

fn zero() -> Bound {
    Bound::At(int(0))
}

#[test]
fn n31_root_counts() {
    assert_eq!(count_real_roots(&golden_f(31, 13), &Bound::NegInf, &Bound::PosInf), 0);
    assert_eq!(count_real_roots(&golden_f(31, 12), &zero(), &Bound::PosInf), 2);
    assert_eq!(count_real_roots(&UniPoly::from_ints("u2", &[6, -10, 2]), &zero(), &Bound::PosInf), 2);
}

#[test]
fn f_7_2_roots_follow_the_sign_pattern() {
    // At p = 2 the value at 1 is negative, so the second positive root lies
    // beyond 1 and the sign at 2n closes it off.
    let f = golden_f(7, 2);
    assert!(f.sign_at(&int(0)) > 0 && f.sign_at(&rat(1, 4)) < 0);
    assert!(f.sign_at(&int(1)) < 0 && f.sign_at(&int(14)) > 0);
    let pos = isolate_positive(&f);
    assert_eq!(pos.len(), 2);
    assert!(pos[0].hi <= rat(1, 4) || refine(&f, &pos[0], &rat(1, 100)).hi <= rat(1, 4));
    let second = refine(&f, &pos[1], &rat(1, 100));
    assert!(second.lo > int(1) && second.hi < int(14));
}

#[test]
fn known_factor_times_cofactor_has_the_single_root_one() {
    let f = &UniPoly::linear_root("u", int(1)) * &golden_f(31, 13);
    let ivs = isolate(&f);
    assert_eq!(ivs.len(), 1);
    assert!(ivs[0].contains(&int(1)));
    let r = refine(&f.squarefree_part().unwrap(), &ivs[0], &rat(1, 1000));
    assert!(r.exact || r.width() < rat(1, 1000));
    assert!(r.contains(&int(1)));
}

#[test]
fn printed_values() {
    assert_eq!(golden_f(7, 2).eval(&int(14)), int(756320640000));
    assert_eq!(sign_at(&golden_f(7, 2), &int(14)), 1);
    assert_eq!(golden_f(7, 2).eval(&int(0)), int(20736));
    assert_eq!(golden_f(31, 13).primitive_part().eval(&int(0)), int(15968016));
}

#[test]
fn sign_at_matches_the_formulas() {
    let points = [int(0), rat(1, 4), int(1), rat(-3, 7), int(5)];
    for (n, p) in [(7, 2), (9, 3), (12, 3), (31, 12), (40, 15)] {
        for name in ["F", "G"] {
            let poly = GoldenData::shipped().poly(name, n, p).unwrap();
            for x in &points {
                let direct = eval_formula(name, n, p, x).unwrap();
                assert_eq!(poly.eval(x), direct);
                let s = if direct.is_zero() { 0 } else if direct > int(0) { 1 } else { -1 };
                assert_eq!(sign_at(&poly, x), s);
            }
        }
    }
}

#[test]
fn jensen_root_decimal() {
    let q = jensen_quadratic(7, 2);
    let w = parse_rational("1e-40").unwrap();
    let roots = isolate_positive(&q);
    assert_eq!(roots.len(), 2);
    let r = refine(&q, &roots[0], &w);
    assert!(r.width() < w);
    assert!(r.render(30).starts_with("[0.697224362268005"));
}

#[test]
fn invariants_on_processed_polynomials() {
    let mut polys = vec![golden_f(7, 2), golden_f(9, 3), golden_f(31, 12), golden_f(31, 13), jensen_quadratic(12, 3)];
    polys.push(&golden_f(9, 3) * &golden_f(9, 3));
    polys.push(GoldenData::shipped().poly("G", 17, 4).unwrap());
    let w = parse_rational("1e-25").unwrap();
    for f in &polys {
        let sq = f.squarefree_part().unwrap();
        let ivs = isolate(f);
        assert_eq!(ivs.len(), count_real_roots(f, &Bound::NegInf, &Bound::PosInf));
        let rep = RootReport::new("f", f, &w);
        assert!(rep.positive_roots <= rep.descartes_bound);
        assert_eq!(rep.positive().count(), rep.positive_roots);
        for iv in &rep.roots {
            if !iv.exact {
                assert!(iv.width() < w);
                assert_eq!(sq.sign_at(&iv.lo), -sq.sign_at(&iv.hi));
                assert_ne!(sq.sign_at(&iv.lo), 0);
            }
        }
        for pair in rep.roots.windows(2) {
            assert!(pair[0].hi <= pair[1].lo);
        }
    }
    let sq_rep = RootReport::new("F^2", &polys[5], &w);
    assert!(sq_rep.multiplicities.iter().all(|&m| m == 2));
    assert!(!sq_rep.squarefree);
}

#[test]
fn refinement_is_stable() {
    let f = golden_f(12, 3);
    let coarse = isolate(&f);
    let fine: Vec<_> = coarse.iter().map(|iv| refine(&f.squarefree_part().unwrap(), iv, &parse_rational("1e-30").unwrap())).collect();
    assert_eq!(coarse.len(), fine.len());
    for (a, b) in coarse.iter().zip(&fine) {
        assert!(a.lo <= b.lo && b.hi <= a.hi);
    }
}

#[test]
fn interval_enclosures_contain_exact_values() {
    let f = golden_f(9, 3);
    let x = Interval::new(rat(1, 5), rat(3, 10));
    let y = eval_uni(&f, &x);
    for k in 0..=10 {
        let t = rat(1, 5) + rat(k, 100);
        assert!(y.contains(&f.eval(&t)));
    }
}
