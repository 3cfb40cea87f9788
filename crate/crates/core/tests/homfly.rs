mod common;

use common::{braid_strategy, oracle_homfly, random_braid, to_map};
use proptest::prelude::*;
use skeinlab_core::constructors::*;
use skeinlab_core::homfly::{homfly, homfly_with_budget, morton_bound, z_degree};
use skeinlab_core::{Diagram, Error, LaurentPoly2, Sign};

fn p(terms: &[(i32, i32, i64)]) -> LaurentPoly2 {
    LaurentPoly2::from_terms(terms.iter().map(|&(v, z, c)| (v, z, c.into())))
}

fn checked_degree(d: &Diagram) -> i32 {
    let m = z_degree(&homfly(d).unwrap()).unwrap();
    assert!(m as i64 <= morton_bound(d).unwrap(), "Morton's inequality fails");
    m
}

#[test]
fn unknot_and_unlinks() {
    assert_eq!(homfly(&Diagram::unknot()).unwrap(), LaurentPoly2::one());
    assert_eq!(homfly(&Diagram::unlink(2)).unwrap(), p(&[(-1, -1, 1), (1, -1, -1)]));
    assert_eq!(z_degree(&LaurentPoly2::one()).unwrap(), 0);
    assert_eq!(z_degree(&LaurentPoly2::zero()), Err(Error::ZeroPolynomial));
}

#[test]
fn trefoils_match_oracle() {
    let right = torus2(3).unwrap();
    let expected = p(&[(2, 0, 2), (4, 0, -1), (2, 2, 1)]);
    assert_eq!(homfly(&right).unwrap(), expected);
    assert_eq!(to_map(&expected), oracle_homfly(&right));
    assert_eq!(morton_bound(&right).unwrap(), 2);
    let left = four_plat(&[1, 1, 1]).unwrap();
    assert_eq!(homfly(&left).unwrap(), homfly(&right.mirror()).unwrap());
    assert_eq!(homfly(&pretzel(&[1, 1, 1]).unwrap()).unwrap(), expected);
}

#[test]
fn figure_eight_is_amphichiral() {
    let d = braid_closure(3, &[1, -2, 1, -2]).unwrap();
    let expected = p(&[(-2, 0, 1), (0, 0, -1), (2, 0, 1), (0, 2, -1)]);
    assert_eq!(homfly(&d).unwrap(), expected);
    assert_eq!(homfly(&d.mirror()).unwrap(), expected);
}

#[test]
fn named_examples_match_oracle() {
    let examples = [
        torus2(2).unwrap(),
        torus2(5).unwrap(),
        pretzel(&[2, 1, 1]).unwrap(),
        pretzel(&[3, 1, 1]).unwrap(),
        pretzel(&[3, 3, -2]).unwrap(),
        four_plat(&[1, 1, 1, 1, 1]).unwrap(),
        four_plat(&[2, 2, 1]).unwrap(),
        braid_closure(3, &[1, -2, 1, -2, 1, -2]).unwrap(),
    ];
    for d in &examples {
        assert_eq!(to_map(&homfly(d).unwrap()), oracle_homfly(d));
    }
}

#[test]
fn split_union_multiplies_by_delta() {
    let t = torus2(3).unwrap();
    let u = Diagram::unknot().disjoint_union(&t);
    assert_eq!(homfly(&u).unwrap(), &LaurentPoly2::delta() * &homfly(&t).unwrap());
    let tt = t.disjoint_union(&t.mirror());
    let pt = homfly(&t).unwrap();
    assert_eq!(homfly(&tt).unwrap(), &(&LaurentPoly2::delta() * &pt) * &homfly(&t.mirror()).unwrap());
}

#[test]
fn flat_double_of_trefoil_is_twist_stable() {
    let t = torus2(3).unwrap();
    for n in [-1, 0, 1, 2] {
        assert_eq!(checked_degree(&flat_double(&t, n).unwrap()), 5, "n = {n}");
    }
}

#[test]
fn whitehead_double_of_trefoil() {
    let t = torus2(3).unwrap();
    let w = whitehead_double(&t, 0, Clasp::Positive).unwrap();
    assert_eq!(checked_degree(&w), 6);
    assert_eq!(morton_bound(&w).unwrap(), 6);
    assert_eq!(checked_degree(&whitehead_double(&t, 0, Clasp::Negative).unwrap()), 6);
}

#[test]
fn switching_a_clasp_crossing_unknots_the_double() {
    let t = torus2(3).unwrap();
    for clasp in [Clasp::Positive, Clasp::Negative] {
        let w = whitehead_double(&t, 0, clasp).unwrap();
        let c1 = 4 * t.crossing_count();
        for i in [c1, c1 + 1] {
            assert_eq!(homfly(&w.switch(i).unwrap()).unwrap(), LaurentPoly2::one());
        }
    }
}

#[test]
fn clasp_site_does_not_change_the_degree() {
    let t = torus2(3).unwrap();
    for site in 1..=3 {
        let mut o = DoubleOptions::whitehead(0, Clasp::Positive);
        o.site = Some(site);
        assert_eq!(checked_degree(&double(&t, &o).unwrap()), 6, "site {site}");
    }
}

#[test]
fn theorem_examples_at_desk_scale() {
    let w = whitehead_double(&pretzel(&[2, 1, 1]).unwrap(), 0, Clasp::Positive).unwrap();
    assert_eq!(w.crossing_count(), 18);
    assert_eq!(checked_degree(&w), 8);
    let w = whitehead_double(&pretzel(&[2, 3]).unwrap(), 0, Clasp::Positive).unwrap();
    assert_eq!(w.crossing_count(), 22);
    assert_eq!(checked_degree(&w), 10);
}

#[test]
fn non_alternating_pretzels_drop_degree() {
    for k in [[3, 3, -2], [3, -3, 2]] {
        let w = whitehead_double(&pretzel(&k).unwrap(), 0, Clasp::Positive).unwrap();
        assert!(checked_degree(&w) < 16);
    }
}

#[test]
fn borromean_double() {
    let l = braid_closure(3, &[1, -2, 1, -2, 1, -2]).unwrap();
    assert_eq!(l.component_count(), 3);
    assert_eq!(checked_degree(&flat_double_link(&l, 0).unwrap()), 11);
}

#[test]
fn budget_failure_is_explicit() {
    let w = whitehead_double(&torus2(3).unwrap(), 0, Clasp::Positive).unwrap();
    match homfly_with_budget(&w, 3) {
        Err(Error::BudgetExceeded(stats)) => assert_eq!(stats.nodes, 3),
        other => panic!("expected a budget error, got {other:?}"),
    }
}

#[test]
fn invalid_diagrams_are_rejected() {
    let d = Diagram::from_parts_unchecked(torus2(3).unwrap().crossings()[..2].to_vec(), vec![vec![1, 2, 3, 4, 5, 6]]);
    assert!(matches!(homfly(&d), Err(Error::InvalidDiagram(_))));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn engine_matches_oracle((n, word) in braid_strategy(8)) {
        let d = random_braid(n, &word);
        prop_assert_eq!(to_map(&homfly(&d).unwrap()), oracle_homfly(&d));
    }

    #[test]
    fn skein_relation_holds((n, word) in braid_strategy(8), pick in any::<prop::sample::Index>()) {
        let d = random_braid(n, &word);
        prop_assume!(d.crossing_count() > 0);
        let i = pick.index(d.crossing_count());
        let plus = homfly(&d.with_sign(i, Sign::Positive).unwrap()).unwrap();
        let minus = homfly(&d.with_sign(i, Sign::Negative).unwrap()).unwrap();
        let zero = homfly(&d.smooth(i).unwrap()).unwrap();
        prop_assert_eq!(plus.shifted(-1, 0) - minus.shifted(1, 0), zero.shifted(0, 1));
    }

    #[test]
    fn morton_and_mirror((n, word) in braid_strategy(8)) {
        let d = random_braid(n, &word);
        let m = checked_degree(&d);
        prop_assert_eq!(checked_degree(&d.mirror()), m);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn naive_expansion_matches_oracle((n, word) in braid_strategy(7)) {
        let d = random_braid(n, &word);
        let p = skeinlab_core::homfly::homfly_naive(&d, 1 << 20).unwrap();
        prop_assert_eq!(to_map(&p), oracle_homfly(&d));
    }
}
