//! Times the HOMFLY computation of several doubled knots.
//! Pass `large` to include the bigger examples.

use std::time::Instant;

use skeinlab_core::constructors::*;
use skeinlab_core::homfly::{homfly_with_budget, morton_bound, EXTENDED_BUDGET};
use skeinlab_core::Diagram;

fn run(name: &str, d: &Diagram) {
    let t = Instant::now();
    match homfly_with_budget(d, EXTENDED_BUDGET) {
        Ok((p, stats)) => println!(
            "{name:<16} c = {:<3} M = {:<3} bound = {:<3} {stats} in {:.2?}",
            d.crossing_count(),
            p.z_degree().unwrap_or_default(),
            morton_bound(d).unwrap(),
            t.elapsed()
        ),
        Err(e) => println!("{name:<16} {e} after {:.2?}", t.elapsed()),
    }
}

fn main() {
    let t3 = torus2(3).unwrap();
    for n in -1..=2 {
        run(&format!("D(T(2,3), {n})"), &flat_double(&t3, n).unwrap());
    }
    run("W(T(2,3), 0, +)", &whitehead_double(&t3, 0, Clasp::Positive).unwrap());
    run("W(T(2,3), 0, -)", &whitehead_double(&t3, 0, Clasp::Negative).unwrap());
    run("W(P(2,1,1))", &whitehead_double(&pretzel(&[2, 1, 1]).unwrap(), 0, Clasp::Positive).unwrap());
    run("W(T(2,5))", &whitehead_double(&torus2(5).unwrap(), 0, Clasp::Positive).unwrap());
    if std::env::args().any(|a| a == "large") {
        let borromean = braid_closure(3, &[1, -2, 1, -2, 1, -2]).unwrap();
        run("D(Borromean)", &flat_double_link(&borromean, 0).unwrap());
        for k in [[3, 3, -2], [3, -3, 2], [3, 3, 3]] {
            run(&format!("W(P{k:?})"), &whitehead_double(&pretzel(&k).unwrap(), 0, Clasp::Positive).unwrap());
        }
    }
}
