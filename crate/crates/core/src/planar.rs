//! Unoriented planar 4-valent graphs with over/under data.
//!
//! Ports of a crossing are numbered `0..4` counterclockwise. Strand `s` runs
//! through ports `s` and `s + 2`; when oriented forward it enters at `s`.

use alloc::vec;
use alloc::vec::Vec;

use crate::diagram::{ArcLabel, Crossing, Diagram, Sign};

pub(crate) type Port = (usize, u8);

#[derive(Clone, Debug)]
pub(crate) struct Planar {
    pub partner: Vec<[Port; 4]>,
    /// The strand through ports 0 and 2 passes over.
    pub even_over: Vec<bool>,
    pub free_loops: usize,
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct Hint {
    pub crossing: usize,
    pub strand: u8,
    pub forward: bool,
}

/// An oriented diagram together with how its slots sit on the planar ports.
#[derive(Clone, Debug)]
pub(crate) struct Oriented {
    pub diagram: Diagram,
    /// PD slot `k` of crossing `x` is port `(offset[x] + k) % 4`.
    pub offset: Vec<u8>,
}

impl Oriented {
    pub fn slot_of_port(&self, x: usize, port: u8) -> u8 {
        (port + 4 - self.offset[x]) % 4
    }
}

impl Planar {
    pub fn len(&self) -> usize {
        self.partner.len()
    }

    /// Reads ports straight from PD slots; returns strand orientations too.
    pub fn from_diagram(d: &Diagram) -> (Planar, Vec<[bool; 2]>) {
        let ends = d.arc_ends();
        let mut partner = vec![[(0usize, 0u8); 4]; d.crossing_count()];
        for e in ends.iter().skip(1) {
            if let (Some((x, s)), Some((y, t))) = (e.tail, e.head) {
                partner[x][s] = (y, t as u8);
                partner[y][t] = (x, s as u8);
            }
        }
        let dirs = d.crossings().iter().map(|x| [true, x.sign == Sign::Negative]).collect();
        let planar = Planar { partner, even_over: vec![false; d.crossing_count()], free_loops: d.free_loop_count() };
        (planar, dirs)
    }

    /// Strand orientations per crossing as hints for rebuilding.
    pub fn hints_from(dirs: &[[bool; 2]]) -> Vec<Hint> {
        dirs.iter()
            .enumerate()
            .flat_map(|(x, d)| (0..2u8).map(move |s| Hint { crossing: x, strand: s, forward: d[s as usize] }))
            .collect()
    }

    fn next_strand(&self, x: usize, s: u8, forward: bool) -> (usize, u8, bool) {
        let out = if forward { (s + 2) % 4 } else { s };
        let (y, q) = self.partner[x][out as usize];
        (y, q % 2, q < 2)
    }

    /// Components as strand cycles, each with directions relative to its first strand.
    pub fn strand_cycles(&self) -> Vec<Vec<(usize, u8, bool)>> {
        let n = self.len();
        let mut seen = vec![[false; 2]; n];
        let mut cycles = Vec::new();
        for x in 0..n {
            for s in 0..2u8 {
                if seen[x][s as usize] {
                    continue;
                }
                let mut cyc = Vec::new();
                let (mut y, mut t, mut f) = (x, s, true);
                while !seen[y][t as usize] {
                    seen[y][t as usize] = true;
                    cyc.push((y, t, f));
                    (y, t, f) = self.next_strand(y, t, f);
                }
                cycles.push(cyc);
            }
        }
        cycles
    }

    /// Orients every component from the first applicable hint and labels arcs.
    pub fn to_diagram(&self, hints: &[Hint]) -> Oriented {
        let n = self.len();
        let cycles = self.strand_cycles();
        let mut comp_of = vec![[(0usize, false); 2]; n];
        for (ci, cyc) in cycles.iter().enumerate() {
            for &(x, s, f) in cyc {
                comp_of[x][s as usize] = (ci, f);
            }
        }
        let mut flip: Vec<Option<bool>> = vec![None; cycles.len()];
        let mut sorted: Vec<Hint> = hints.to_vec();
        sorted.sort_by_key(|h| h.crossing);
        for h in sorted {
            let (ci, rel) = comp_of[h.crossing][h.strand as usize];
            if flip[ci].is_none() {
                flip[ci] = Some(rel != h.forward);
            }
        }
        let mut dir = vec![[true; 2]; n];
        for (ci, cyc) in cycles.iter().enumerate() {
            let fl = flip[ci].unwrap_or(false);
            for &(x, s, f) in cyc {
                dir[x][s as usize] = f != fl;
            }
        }

        let mut label = vec![[0 as ArcLabel; 4]; n];
        let mut components = Vec::new();
        let mut next: ArcLabel = 1;
        for cyc in &cycles {
            let (x0, s0, _) = cyc[0];
            let mut comp = Vec::new();
            let (mut x, mut s) = (x0, s0);
            loop {
                let f = dir[x][s as usize];
                let out = if f { (s + 2) % 4 } else { s };
                let (y, q) = self.partner[x][out as usize];
                label[x][out as usize] = next;
                label[y][q as usize] = next;
                comp.push(next);
                next += 1;
                x = y;
                s = q % 2;
                if (x, s) == (x0, s0) {
                    break;
                }
            }
            components.push(comp);
        }
        let mut offset = vec![0u8; n];
        let crossings = (0..n)
            .map(|x| {
                let us: u8 = if self.even_over[x] { 1 } else { 0 };
                let os = 1 - us;
                let u_in = if dir[x][us as usize] { us } else { us + 2 };
                let o_in = if dir[x][os as usize] { os } else { os + 2 };
                offset[x] = u_in;
                let slots = [0u8, 1, 2, 3].map(|k| label[x][((u_in + k) % 4) as usize]);
                let sign = if (o_in + 4 - u_in) % 4 == 3 { Sign::Positive } else { Sign::Negative };
                Crossing::new(slots, sign)
            })
            .collect();
        for _ in 0..self.free_loops {
            components.push(vec![next]);
            next += 1;
        }
        Oriented { diagram: Diagram::from_parts_unchecked(crossings, components), offset }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum End {
    Port(usize, u8),
    Point(usize),
}

/// Assembles a planar graph from crossings and degree-two waypoints.
#[derive(Default)]
pub(crate) struct Builder {
    even_over: Vec<bool>,
    ports: Vec<[Option<End>; 4]>,
    points: Vec<[Option<End>; 2]>,
}

impl Builder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn crossing(&mut self, even_over: bool) -> usize {
        self.even_over.push(even_over);
        self.ports.push([None; 4]);
        self.even_over.len() - 1
    }

    pub fn point(&mut self) -> End {
        self.points.push([None; 2]);
        End::Point(self.points.len() - 1)
    }

    fn attach(&mut self, at: End, to: End) {
        match at {
            End::Port(x, p) => {
                debug_assert!(self.ports[x][p as usize].is_none(), "port {x}.{p} used twice");
                self.ports[x][p as usize] = Some(to);
            }
            End::Point(i) => {
                let slot = if self.points[i][0].is_none() { 0 } else { 1 };
                debug_assert!(self.points[i][slot].is_none(), "waypoint {i} used three times");
                self.points[i][slot] = Some(to);
            }
        }
    }

    pub fn connect(&mut self, a: End, b: End) {
        self.attach(a, b);
        self.attach(b, a);
    }

    pub fn finish(self) -> Planar {
        let n = self.even_over.len();
        let mut used = vec![false; self.points.len()];
        let mut partner = vec![[(0usize, 0u8); 4]; n];
        for x in 0..n {
            for p in 0..4u8 {
                let mut prev = End::Port(x, p);
                let mut cur = self.ports[x][p as usize].expect("dangling port");
                while let End::Point(i) = cur {
                    used[i] = true;
                    let [a, b] = self.points[i];
                    let (a, b) = (a.expect("dangling waypoint"), b.expect("dangling waypoint"));
                    let nxt = if a == prev { b } else { a };
                    prev = cur;
                    cur = nxt;
                }
                let End::Port(y, q) = cur else { unreachable!() };
                partner[x][p as usize] = (y, q);
            }
        }
        let mut free_loops = 0;
        for i in 0..self.points.len() {
            if used[i] {
                continue;
            }
            free_loops += 1;
            let mut prev = End::Point(i);
            let mut cur = self.points[i][0].expect("dangling waypoint");
            used[i] = true;
            while let End::Point(j) = cur {
                if j == i {
                    break;
                }
                used[j] = true;
                let [a, b] = self.points[j];
                let nxt = if a == Some(prev) { b.unwrap() } else { a.unwrap() };
                prev = cur;
                cur = nxt;
            }
        }
        Planar { partner, even_over: self.even_over, free_loops }
    }
}
