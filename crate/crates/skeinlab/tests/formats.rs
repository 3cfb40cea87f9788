use proptest::prelude::*;
use skeinlab::pd::{parse_pd, write_pd};
use skeinlab::poly_io::{parse_poly, poly_from_json, poly_to_json};
use skeinlab::spec::parse_spec;
use skeinlab_core::constructors::braid_closure;
use skeinlab_core::homfly::homfly;

fn braid() -> impl Strategy<Value = (usize, Vec<i32>)> {
    (2usize..5).prop_flat_map(|n| {
        let g = (1..n as i32).prop_flat_map(|g| prop_oneof![Just(g), Just(-g)]);
        (Just(n), prop::collection::vec(g, 0..9))
    })
}

proptest! {
    #[test]
    fn pd_round_trip((n, word) in braid()) {
        let d = braid_closure(n, &word).unwrap();
        let text = write_pd(&d);
        let back = parse_pd(&text).unwrap();
        prop_assert_eq!(&back, &d);
        prop_assert_eq!(write_pd(&back), text);
    }

    #[test]
    fn pd_without_header_is_the_same_diagram((n, word) in braid()) {
        let d = braid_closure(n, &word).unwrap();
        prop_assume!(d.free_loop_count() == 0);
        let body: String = write_pd(&d).lines().skip(1).map(|l| format!("{l}\n")).collect();
        prop_assert!(parse_pd(&body).unwrap().is_isomorphic(&d));
    }

    #[test]
    fn poly_round_trip((n, word) in braid()) {
        let p = homfly(&braid_closure(n, &word).unwrap()).unwrap();
        prop_assert_eq!(parse_poly(&p.to_string()).unwrap(), p.clone());
        prop_assert_eq!(poly_from_json(&poly_to_json(&p)).unwrap(), p);
    }

    #[test]
    fn pretzel_specs(k in prop::collection::vec((1i32..5).prop_flat_map(|a| prop_oneof![Just(a), Just(-a)]), 1..5)) {
        let spec = format!("pretzel:{}", k.iter().map(i32::to_string).collect::<Vec<_>>().join(","));
        let d = parse_spec(&spec).unwrap();
        prop_assert_eq!(d.crossing_count() as i32, k.iter().map(|a| a.abs()).sum::<i32>());
        prop_assert_eq!(parse_pd(&write_pd(&d)).unwrap(), d);
    }
}
