//! Shared test helpers: a brute-force HOMFLY oracle and random diagrams.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashMap};

use skeinlab_core::constructors::braid_closure;
use skeinlab_core::{Diagram, LaurentPoly2, Sign};

/// Polynomial as a plain map `(v, z) -> coefficient`.
pub type Poly = BTreeMap<(i32, i32), i64>;

fn add_into(acc: &mut Poly, p: &Poly, c: i64, dv: i32, dz: i32) {
    for (&(v, z), &k) in p {
        let e = acc.entry((v + dv, z + dz)).or_insert(0);
        *e += c * k;
        if *e == 0 {
            acc.remove(&(v + dv, z + dz));
        }
    }
}

fn mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (&(v, z), &k) in b {
        add_into(&mut out, a, k, v, z);
    }
    out
}

fn delta_pow(k: usize) -> Poly {
    let delta: Poly = [((-1, -1), 1), ((1, -1), -1)].into_iter().collect();
    let mut p: Poly = [((0, 0), 1)].into_iter().collect();
    for _ in 0..k {
        p = mul(&p, &delta);
    }
    p
}

#[derive(Clone)]
struct Pd {
    xs: Vec<([u32; 4], bool)>,
    loops: usize,
}

impl Pd {
    fn over_in(x: &([u32; 4], bool)) -> usize {
        if x.1 { 3 } else { 1 }
    }

    fn over_out(x: &([u32; 4], bool)) -> usize {
        if x.1 { 1 } else { 3 }
    }

    /// arc -> (crossing, came in on the under strand, next arc)
    fn heads(&self) -> HashMap<u32, (usize, bool, u32)> {
        let mut h = HashMap::new();
        for (i, x) in self.xs.iter().enumerate() {
            h.insert(x.0[0], (i, true, x.0[2]));
            h.insert(x.0[Self::over_in(x)], (i, false, x.0[Self::over_out(x)]));
        }
        h
    }

    fn components(&self) -> Vec<Vec<u32>> {
        let heads = self.heads();
        let mut arcs: Vec<u32> = heads.keys().copied().collect();
        arcs.sort();
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for a in arcs {
            if seen.contains(&a) {
                continue;
            }
            let mut comp = Vec::new();
            let mut b = a;
            while seen.insert(b) {
                comp.push(b);
                b = heads[&b].2;
            }
            out.push(comp);
        }
        out
    }

    fn first_bad(&self) -> Option<usize> {
        let heads = self.heads();
        let mut seen = vec![false; self.xs.len()];
        for comp in self.components() {
            for a in comp {
                let (x, under, _) = heads[&a];
                if !seen[x] {
                    if under {
                        return Some(x);
                    }
                    seen[x] = true;
                }
            }
        }
        None
    }

    fn switched(&self, i: usize) -> Pd {
        let mut p = self.clone();
        let ([a, b, c, d], pos) = p.xs[i];
        p.xs[i] = if pos { ([d, a, b, c], false) } else { ([b, c, d, a], true) };
        p
    }

    fn smoothed(&self, i: usize) -> Pd {
        let (s, pos) = self.xs[i];
        let pairs = if pos { [(s[0], s[1]), (s[3], s[2])] } else { [(s[0], s[3]), (s[1], s[2])] };
        let mut rep: HashMap<u32, u32> = HashMap::new();
        fn find(rep: &HashMap<u32, u32>, mut a: u32) -> u32 {
            while let Some(&b) = rep.get(&a) {
                a = b;
            }
            a
        }
        for (a, b) in pairs {
            let (ra, rb) = (find(&rep, a), find(&rep, b));
            if ra != rb {
                rep.insert(rb, ra);
            }
        }
        let xs: Vec<([u32; 4], bool)> = self
            .xs
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, (sl, p))| (sl.map(|a| find(&rep, a)), *p))
            .collect();
        let used: BTreeSet<u32> = xs.iter().flat_map(|x| x.0).collect();
        let freed: BTreeSet<u32> = s.iter().map(|&a| find(&rep, a)).filter(|r| !used.contains(r)).collect();
        Pd { xs, loops: self.loops + freed.len() }
    }

    fn eval(&self) -> Poly {
        match self.first_bad() {
            None => delta_pow(self.components().len() + self.loops - 1),
            Some(i) => {
                let sw = self.switched(i).eval();
                let sm = self.smoothed(i).eval();
                let mut out = Poly::new();
                if self.xs[i].1 {
                    add_into(&mut out, &sw, 1, 2, 0);
                    add_into(&mut out, &sm, 1, 1, 1);
                } else {
                    add_into(&mut out, &sw, 1, -2, 0);
                    add_into(&mut out, &sm, -1, -1, 1);
                }
                out
            }
        }
    }
}

/// Full skein expansion with no simplification or memoization.
pub fn oracle_homfly(d: &Diagram) -> Poly {
    let xs = d.crossings().iter().map(|x| (x.slots, x.sign == Sign::Positive)).collect();
    Pd { xs, loops: d.free_loop_count() }.eval()
}

pub fn to_map(p: &LaurentPoly2) -> Poly {
    p.terms()
        .iter()
        .map(|t| ((t.v, t.z), t.coeff.to_i64().expect("small coefficient")))
        .collect()
}

/// Closed braid on `strands` strands from a word of signed generators.
pub fn random_braid(strands: usize, word: &[i32]) -> Diagram {
    braid_closure(strands, word).unwrap()
}

/// proptest strategy for braid words with at most `max_len` letters.
pub fn braid_strategy(max_len: usize) -> impl proptest::strategy::Strategy<Value = (usize, Vec<i32>)> {
    use proptest::prelude::*;
    (2usize..=4).prop_flat_map(move |n| {
        let gen = (1..n as i32).prop_flat_map(|g| prop_oneof![Just(g), Just(-g)]);
        (Just(n), proptest::collection::vec(gen, 0..=max_len))
    })
}
