mod common;

use common::{braid_strategy, random_braid};
use proptest::prelude::*;
use skeinlab_core::constructors::{pretzel, torus2};
use skeinlab_core::{Crossing, Diagram, Sign, Violation};

fn relabel(d: &Diagram, perm: &[u32], rotate: usize) -> Diagram {
    let map = |a: u32| perm[a as usize - 1];
    let crossings = d.crossings().iter().map(|x| Crossing::new(x.slots.map(map), x.sign)).collect();
    let components = d
        .components()
        .iter()
        .map(|c| {
            let mut c: Vec<u32> = c.iter().map(|&a| map(a)).collect();
            let k = rotate % c.len();
            c.rotate_left(k);
            c
        })
        .collect();
    Diagram::new(crossings, components).unwrap()
}

fn shuffled(n: usize, seed: u64) -> Vec<u32> {
    let mut v: Vec<u32> = (1..=n as u32).collect();
    let mut s = seed | 1;
    for i in (1..n).rev() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        v.swap(i, (s % (i as u64 + 1)) as usize);
    }
    v
}

#[test]
fn validation_reports_every_problem() {
    let t = torus2(3).unwrap();
    let mut xs = t.crossings().to_vec();
    xs[0] = Crossing::new([1, 5, 2, 4], Sign::Negative);
    let r = Diagram::from_parts_unchecked(xs, t.components().to_vec()).validate();
    assert!(!r.is_valid());
    assert!(!r.violations.is_empty());
    let r = Diagram::from_parts_unchecked(t.crossings().to_vec(), vec![vec![1, 2, 3, 4, 5, 6, 7]]).validate();
    assert!(r.violations.contains(&Violation::ArcMultiplicity { arc: 7, count: 0 })
        || r.violations.iter().any(|v| matches!(v, Violation::FreeLoopInLongerComponent { arc: 7 })));
    assert!(Diagram::new(Vec::new(), Vec::new()).is_err());
}

#[test]
fn genus_of_torus_knots() {
    for n in [3usize, 5, 7] {
        let s = torus2(n).unwrap().seifert_circles().unwrap();
        assert_eq!(s.circle_count, 2);
        assert_eq!(s.canonical_genus, (n as u64 - 1) / 2);
    }
    let p = pretzel(&[3, 1, 1]).unwrap().seifert_circles().unwrap();
    assert_eq!(p.circle_count, 4);
    assert_eq!(p.canonical_genus, 1);
}

proptest! {
    #[test]
    fn canonical_form_ignores_labels((n, word) in braid_strategy(8), seed in any::<u64>(), rotate in 0usize..8) {
        let d = random_braid(n, &word);
        let e = relabel(&d, &shuffled(d.arc_count(), seed), rotate);
        prop_assert!(d.is_isomorphic(&e));
        prop_assert_eq!(d.canonical_form().diagram, e.canonical_form().diagram);
        prop_assert_eq!(d.writhe(), e.writhe());
        prop_assert_eq!(d.seifert_circles().unwrap().circle_count, e.seifert_circles().unwrap().circle_count);
    }

    #[test]
    fn mirror_and_switch((n, word) in braid_strategy(8)) {
        let d = random_braid(n, &word);
        let m = d.mirror();
        prop_assert!(m.validate().is_valid());
        prop_assert_eq!(m.writhe(), -d.writhe());
        prop_assert_eq!(m.mirror(), d.clone());
        let mut s = d.clone();
        for i in 0..d.crossing_count() {
            s = s.switch(i).unwrap();
        }
        prop_assert_eq!(s.writhe(), -d.writhe());
    }

    #[test]
    fn smoothing_keeps_diagrams_valid((n, word) in braid_strategy(8), pick in any::<prop::sample::Index>()) {
        let d = random_braid(n, &word);
        prop_assume!(d.crossing_count() > 0);
        let i = pick.index(d.crossing_count());
        let s = d.smooth(i).unwrap();
        prop_assert!(s.validate().is_valid());
        prop_assert_eq!(s.crossing_count(), d.crossing_count() - 1);
        let diff = s.component_count() as i64 - d.component_count() as i64;
        prop_assert!(diff == 1 || diff == -1);
        prop_assert_eq!(s.seifert_circles().unwrap().circle_count, d.seifert_circles().unwrap().circle_count);
    }

    #[test]
    fn braid_closures_have_strand_many_circles((n, word) in braid_strategy(8)) {
        let d = random_braid(n, &word);
        prop_assert_eq!(d.seifert_circles().unwrap().circle_count, n);
        if d.is_connected_projection() {
            prop_assert_eq!(d.faces().unwrap().count(), d.crossing_count() + 2);
        }
    }
}
