use num_traits::{One, Zero};
use stiefel_einstein::arith::{int, rat, BigRational, MonomialOrder, MultiPoly, UniPoly};
use stiefel_einstein::curvature::{einstein_system, jensen_quadratic};
use stiefel_einstein::groebner::*;
use stiefel_einstein::Error;

fn cfg() -> GroebnerConfig {
    GroebnerConfig::default()
}

#[test]
fn generators_reduce_to_zero_and_basis_is_groebner() {
    let sys = einstein_system(7, 2).unwrap();
    let ideal = saturated_ideal(&sys);
    for o in EliminationOrder::ALL {
        let gb = buchberger(&ideal, &o.monomial_order(ideal.ring()).unwrap(), &cfg()).unwrap();
        for f in ideal.generators() {
            assert!(gb.contains(f), "{o}: generator {f} does not reduce to zero");
        }
        assert!(gb.s_pairs_reduce_to_zero(), "{o}");
        for g in gb.elements() {
            let (_, lc) = g.leading_term(gb.order()).unwrap();
            assert!(lc.is_one());
        }
    }
}

#[test]
fn reduced_basis_is_independent_of_generator_order() {
    let sys = einstein_system(9, 3).unwrap();
    let ideal = saturated_ideal(&sys);
    let order = EliminationOrder::U1Last.monomial_order(ideal.ring()).unwrap();
    let a = buchberger(&ideal, &order, &cfg()).unwrap();
    let mut gens = ideal.generators().to_vec();
    gens.reverse();
    gens.swap(0, 2);
    let b = buchberger(&Ideal::new(ideal.ring(), gens).unwrap(), &order, &cfg()).unwrap();
    assert_eq!(a.elements(), b.elements());
}

#[test]
fn u2_eliminant_at_7_2() {
    let gb = basis_for(7, 2, EliminationOrder::U2Last, &cfg()).unwrap();
    let e = eliminant(&gb).unwrap();
    // G_{7,2} has degree 6 since its top coefficient vanishes at p = 2, and
    // its factor 4u2^2 + 3 does not divide the eliminant.
    assert_eq!(e.degree(), Some(6));
    let q = jensen_quadratic(7, 2);
    let g = GoldenData::shipped().poly("G", 7, 2).unwrap();
    let extra = UniPoly::from_ints("u2", &[3, 0, 4]);
    assert!((&e * &extra).proportionality(&(&q * &g)).is_some());
    // The printed product still lies in the ideal.
    let qg = MultiPoly::from_univariate(gb.ring(), 3, &(&q * &g));
    assert!(gb.contains(&qg));
}

#[test]
fn eliminants_carry_the_known_factors() {
    let gb = basis_for(7, 2, EliminationOrder::U1Last, &cfg()).unwrap();
    let e = eliminant(&gb).unwrap();
    let res = split_known_factor(&e, 7, 2, KnownFactor::U1MinusOne, Some(GoldenData::shipped())).unwrap();
    assert!(res.golden.as_ref().unwrap().matches);
    assert_eq!(res.shared_with_known.degree(), Some(0));

    let gb = basis_for(31, 13, EliminationOrder::U0Last, &cfg()).unwrap();
    let e = eliminant(&gb).unwrap();
    assert!(e.eval(&int(1)).is_zero());
    let res = split_known_factor(&e, 31, 13, KnownFactor::U0MinusOne, Some(GoldenData::shipped())).unwrap();
    assert_eq!(res.cofactor.degree(), Some(8));
    let cmp = res.golden.unwrap();
    assert!(cmp.matches);
    assert_eq!(cmp.ratio, Some(rat(1, 1024)));
}

#[test]
fn split_reproduces_printed_constants() {
    let (_, res) = eliminate(9, 3, EliminationOrder::U2Last, &cfg()).unwrap();
    assert!(res.golden.as_ref().unwrap().matches);
    let g = GoldenData::shipped().poly("G", 7, 2).unwrap();
    assert_eq!(g.coeff(0), int(243));

    let (_, res) = eliminate(31, 13, EliminationOrder::U1Last, &cfg()).unwrap();
    assert_eq!(res.cofactor.lc(), Some(&int(491774976)));
    assert_eq!(res.cofactor.coeff(0), int(15968016));
    let (_, res) = eliminate(31, 12, EliminationOrder::U1Last, &cfg()).unwrap();
    assert_eq!(res.cofactor.lc(), Some(&int(24356284225)));
    assert_eq!(res.cofactor.coeff(0), int(1073676289));
}

#[test]
fn split_rejects_a_non_factor() {
    let e = UniPoly::from_ints("u1", &[2, 0, 1]);
    let err = split_known_factor(&e, 7, 2, KnownFactor::U1MinusOne, None).unwrap_err();
    assert!(matches!(err, Error::FactorDoesNotDivide { .. }));
}

#[test]
fn back_substitution_relations() {
    for (n, p, deg) in [(7, 2, 5), (9, 3, 7), (12, 3, 7)] {
        let (gb, res) = eliminate(n, p, EliminationOrder::U1Last, &cfg()).unwrap();
        let rel = back_substitution(&gb, &res.cofactor).unwrap();
        assert!(!rel.u0.denominator.is_zero() && !rel.u2.denominator.is_zero());
        assert_eq!(rel.u0.numerator.degree(), Some(deg), "({n},{p})");
        assert_eq!(rel.u2.numerator.degree(), Some(deg), "({n},{p})");
    }
}

#[test]
fn back_substitution_at_u1_equal_one() {
    let (n, p) = (7, 2);
    let (gb, res) = eliminate(n, p, EliminationOrder::U1Last, &cfg()).unwrap();
    let rel = res.relations.unwrap();
    let ring = gb.ring();
    let (u0, u1, u2) = (1, 2, 3);
    // The u0 element is u0 - X(u1) on the whole variety; at u1 = 1 it gives u0 = 1.
    let src = rel.u0.source.eval_var(u1, &int(1));
    assert_eq!(src, &ring.var("u0").unwrap() - &MultiPoly::constant(ring, int(1)));
    // The element quadratic in u2 restricts to the Jensen quadratic.
    let quad = gb
        .elements()
        .iter()
        .find(|g| g.degree_in(u2) == 2 && g.degree_in(u0) == 0 && g.degree_in(0) == 0)
        .unwrap();
    let at_one = quad.eval_var(u1, &int(1)).to_univariate(u2).unwrap();
    assert!(at_one.proportionality(&jensen_quadratic(n, p)).is_some());
    // f_i(1, 1, u2) are multiples of the quadratic.
    let sys = einstein_system(n, p).unwrap();
    for f in &sys.f {
        let g = f.eval_var(0, &int(1)).eval_var(1, &int(1)).to_univariate(2).unwrap();
        assert!(g.is_zero() || g.rem(&jensen_quadratic(n, p)).unwrap().is_zero());
    }
}

#[test]
fn back_substitution_needs_the_u1_order() {
    let gb = basis_for(7, 2, EliminationOrder::U2Last, &cfg()).unwrap();
    let f = UniPoly::from_ints("u1", &[1, 1]);
    assert!(matches!(back_substitution(&gb, &f), Err(Error::Invalid(_))));
}

#[test]
fn resultant_cross_check() {
    for (n, p) in [(7, 2), (9, 3)] {
        let sys = einstein_system(n, p).unwrap();
        let r = resultant_eliminant(&sys).unwrap();
        let gb = basis_for(n, p, EliminationOrder::U2Last, &cfg()).unwrap();
        let e = eliminant(&gb).unwrap().squarefree_part().unwrap();
        assert_eq!(r, e, "({n},{p})");
    }
}

#[test]
fn ceiling_is_reported() {
    let tiny = GroebnerConfig { term_ceiling: 40 };
    match basis_for(9, 3, EliminationOrder::U0Last, &tiny) {
        Err(Error::ResourceLimit { ceiling, basis_len, .. }) => {
            assert_eq!(ceiling, 40);
            assert!(basis_len > 0);
        }
        other => panic!("expected a resource limit, got {other:?}"),
    }
}

#[test]
fn order_matters_only_through_the_permutation() {
    let sys = einstein_system(7, 2).unwrap();
    let ideal = saturated_ideal(&sys);
    let a = MonomialOrder::lex(ideal.ring(), &["z", "u0", "u2", "u1"]).unwrap();
    let gb = buchberger(&ideal, &a, &cfg()).unwrap();
    let last = gb.elements().last().unwrap();
    assert_eq!(last.support_vars(), vec![2]);
    assert_eq!(last.eval(&[int(0), int(0), BigRational::one(), int(0)]), int(0));
}
