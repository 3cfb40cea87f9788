use proptest::prelude::*;
use skeinlab_core::constructors::*;
use skeinlab_core::{Diagram, Error};

fn examples() -> Vec<Diagram> {
    vec![
        torus2(3).unwrap(),
        torus2(4).unwrap(),
        torus2(5).unwrap(),
        pretzel(&[2, 1, 1]).unwrap(),
        pretzel(&[3, 1, 1]).unwrap(),
        pretzel(&[2, 3]).unwrap(),
        pretzel(&[3, 3, -2]).unwrap(),
        four_plat(&[2, 1, 1]).unwrap(),
        four_plat(&[1, 1, 1, 1, 1]).unwrap(),
        braid_closure(3, &[1, -2, 1, -2, 1, -2]).unwrap(),
    ]
}

fn assert_faces(d: &Diagram) {
    assert!(d.is_connected_projection());
    assert_eq!(d.faces().unwrap().count(), d.crossing_count() + 2);
}

#[test]
fn crossing_counts() {
    for n in 2..8 {
        let d = torus2(n).unwrap();
        assert_eq!(d.crossing_count(), n);
        assert_eq!(d.component_count(), if n % 2 == 0 { 2 } else { 1 });
    }
    assert_eq!(pretzel(&[3, 1, 1]).unwrap().crossing_count(), 5);
    assert_eq!(pretzel(&[3, 3, -2]).unwrap().crossing_count(), 8);
    assert_eq!(four_plat(&[2, 1, 1]).unwrap().crossing_count(), 4);
    assert_eq!(four_plat(&[1, 1, 1, 1, 1]).unwrap().crossing_count(), 5);
    assert_eq!(braid_closure(3, &[1, -2, 1, -2]).unwrap().crossing_count(), 4);
}

#[test]
fn double_counts() {
    for k in examples().into_iter().filter(|d| d.component_count() == 1) {
        let c = k.crossing_count();
        for n in [-2, -1, 0, 1, 3] {
            let f = flat_double(&k, n).unwrap();
            assert_eq!(f.crossing_count(), 4 * c + 2 * n.unsigned_abs() as usize);
            assert_eq!(f.component_count(), 2);
            let w = whitehead_double(&k, n, Clasp::Positive).unwrap();
            assert_eq!(w.crossing_count(), 4 * c + 2 * n.unsigned_abs() as usize + 2);
            assert_eq!(w.component_count(), 1);
        }
        assert_eq!(flat_double(&k, 0).unwrap().writhe(), 0);
    }
}

#[test]
fn faces_of_connected_constructions() {
    for d in examples() {
        assert_faces(&d);
        if d.component_count() == 1 {
            assert_faces(&flat_double(&d, 1).unwrap());
            assert_faces(&whitehead_double(&d, 0, Clasp::Negative).unwrap());
        }
    }
    assert_eq!(pretzel(&[2, 1, 1]).unwrap().faces().unwrap().count(), 6);
}

#[test]
fn hidden_twist_census() {
    for k in [torus2(3).unwrap(), pretzel(&[2, 1, 1]).unwrap(), pretzel(&[3, 1, 1]).unwrap()] {
        let c = k.crossing_count();
        let mut o = DoubleOptions::whitehead(0, Clasp::Positive);
        o.hidden_twists = true;
        let w = double(&k, &o).unwrap();
        let s = w.seifert_circles().unwrap();
        assert_eq!(s.circle_count, 2 * c + 3);
        assert_eq!(w.crossing_count(), 4 * c + 2);
        assert_eq!(s.canonical_genus, c as u64);
    }
}

#[test]
fn mirror_and_isomorphism_of_families() {
    assert!(pretzel(&[1, 1, 1]).unwrap().is_isomorphic(&torus2(3).unwrap()));
    assert!(four_plat(&[1, 1, 1]).unwrap().is_isomorphic_unoriented(&torus2(3).unwrap().mirror()));
    let p = pretzel(&[2, 1, 1]).unwrap();
    assert!(p.mirror().is_isomorphic(&pretzel(&[-2, -1, -1]).unwrap()));
}

#[test]
fn twist_replace_keeps_diagrams_reduced_and_alternating() {
    for n in 2..=6 {
        let d = torus2(n).unwrap();
        for i in 0..n {
            for axis in [TwistAxis::Parallel, TwistAxis::Antiparallel] {
                let t = twist_replace(&d, i, axis).unwrap();
                assert_eq!(t.crossing_count(), n + 2);
                assert!(t.is_alternating());
                assert!(t.nugatory_crossings().is_empty(), "n = {n}, i = {i}");
                let h = half_to_full(&d, i, axis).unwrap();
                assert_eq!(h.crossing_count(), n + 1);
                assert!(h.is_alternating());
            }
        }
    }
}

#[test]
fn twist_moves_on_the_trefoil() {
    let t = torus2(3).unwrap();
    assert!(twist_replace(&t, 0, TwistAxis::Antiparallel).unwrap().is_isomorphic(&pretzel(&[3, 1, 1]).unwrap()));
    assert!(twist_replace(&t, 0, TwistAxis::Parallel).unwrap().is_isomorphic(&torus2(5).unwrap()));
    assert_eq!(half_to_full(&t, 0, TwistAxis::Parallel).unwrap().component_count(), 2);
    assert_eq!(half_to_full(&t, 0, TwistAxis::Antiparallel).unwrap().component_count(), 1);
}

#[test]
fn deflation_round_trips() {
    for w in [&[1, 1, 1][..], &[3, 1, 1], &[2, 1, 1], &[1, 1, 1, 1, 1], &[2, 2, 1], &[1, 2, 1, 1, 1]] {
        let path = deflation_path(w).unwrap();
        assert!(isomorphism(path.end(), &four_plat(&[1, 1, 1]).unwrap()).is_some());
        let rebuilt = replay(&path).unwrap();
        assert!(isomorphism(&rebuilt, &four_plat(w).unwrap()).is_some(), "{w:?}");
    }
    assert!(deflation_path(&[1, 1, 1]).unwrap().steps.is_empty());
    assert_eq!(deflation_path(&[3, 1, 1]).unwrap().steps.len(), 2);
}

#[test]
fn constructor_errors() {
    assert!(matches!(torus2(0), Err(Error::InvalidSpec(_))));
    assert!(pretzel(&[]).is_err());
    assert!(pretzel(&[0, 1]).is_err());
    assert!(four_plat(&[]).is_err());
    assert!(four_plat(&[0, 1, 1]).is_err());
    assert!(braid_closure(1, &[1]).is_err());
    assert!(braid_closure(3, &[3]).is_err());
    assert!(matches!(flat_double(&torus2(2).unwrap(), 0), Err(Error::NotAKnot { components: 2 })));
    assert!(matches!(twist_replace(&torus2(3).unwrap(), 3, TwistAxis::Parallel), Err(Error::CrossingOutOfRange { .. })));
    let mut o = DoubleOptions::flat(0);
    o.site = Some(99);
    assert!(matches!(double(&torus2(3).unwrap(), &o), Err(Error::NoSuchArc { arc: 99 })));
}

#[test]
fn unknot_double_is_unlink_or_unknot() {
    let u = Diagram::unknot();
    assert_eq!(flat_double(&u, 0).unwrap().component_count(), 2);
    assert_eq!(flat_double(&u, 0).unwrap().crossing_count(), 0);
}

proptest! {
    #[test]
    fn pretzel_counts(k in prop::collection::vec((1i32..5).prop_flat_map(|a| prop_oneof![Just(a), Just(-a)]), 2..5)) {
        let d = pretzel(&k).unwrap();
        prop_assert_eq!(d.crossing_count() as i32, k.iter().map(|a| a.abs()).sum::<i32>());
        prop_assert!(d.validate().is_valid());
        prop_assert_eq!(d.faces().unwrap().count(), d.crossing_count() + 2);
        if k.iter().all(|&a| a > 0) {
            prop_assert!(d.is_alternating());
        }
    }

    #[test]
    fn four_plat_counts(w in (0usize..3).prop_flat_map(|k| prop::collection::vec(1u32..4, 2 * k + 1))) {
        let d = four_plat(&w).unwrap();
        prop_assert_eq!(d.crossing_count() as u32, w.iter().sum::<u32>());
        prop_assert!(d.is_alternating());
        prop_assert_eq!(d.faces().unwrap().count(), d.crossing_count() + 2);
    }

    #[test]
    fn double_site_only_moves_the_clasp(n in prop::sample::select(vec![3usize, 5, 7]), site in 1u32..6, twists in -2i32..3) {
        let k = torus2(n).unwrap();
        let mut o = DoubleOptions::whitehead(twists, Clasp::Positive);
        o.site = Some(site.min(n as u32 * 2));
        let w = double(&k, &o).unwrap();
        prop_assert!(w.validate().is_valid());
        prop_assert_eq!(w.crossing_count(), 4 * n + 2 * twists.unsigned_abs() as usize + 2);
    }
}
