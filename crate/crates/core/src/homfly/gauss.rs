//! Signed Gauss codes: the working representation of the skein engine.

use alloc::vec;
use alloc::vec::Vec;

use crate::diagram::{Crossing, Diagram, Sign};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Pass {
    pub x: u16,
    pub over: bool,
}

/// Each component lists, in order of travel, the crossings it passes.
/// Every live crossing label is passed exactly twice, once over and once under.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussCode {
    pub comps: Vec<Vec<Pass>>,
    /// Sign per crossing label; labels that no longer occur are ignored.
    pub positive: Vec<bool>,
    /// Crossing-free components.
    pub loops: usize,
}

const NONE: u16 = u16::MAX;

impl GaussCode {
    pub fn from_diagram(d: &Diagram) -> Self {
        let ends = d.arc_ends();
        let mut comps = Vec::new();
        let mut loops = 0;
        for comp in d.components() {
            let passes: Vec<Pass> = comp
                .iter()
                .filter_map(|&a| ends[a as usize].head)
                .map(|(x, s)| Pass { x: x as u16, over: Crossing::is_over_slot(s) })
                .collect();
            if passes.is_empty() {
                loops += 1;
            } else {
                comps.push(passes);
            }
        }
        let positive = d.crossings().iter().map(|x| x.sign == Sign::Positive).collect();
        Self { comps, positive, loops }
    }

    pub fn crossing_count(&self) -> usize {
        self.comps.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn component_count(&self) -> usize {
        self.comps.len() + self.loops
    }

    fn locate(&self) -> Vec<[(u16, u16); 2]> {
        let mut loc = vec![[(NONE, NONE); 2]; self.positive.len()];
        for (ci, c) in self.comps.iter().enumerate() {
            for (i, p) in c.iter().enumerate() {
                let slot = &mut loc[p.x as usize];
                let k = if slot[0].0 == NONE { 0 } else { 1 };
                slot[k] = (ci as u16, i as u16);
            }
        }
        loc
    }

    fn drop_crossings(&mut self, a: u16, b: u16) {
        for c in self.comps.iter_mut() {
            c.retain(|p| p.x != a && p.x != b);
        }
        let before = self.comps.len();
        self.comps.retain(|c| !c.is_empty());
        self.loops += before - self.comps.len();
    }

    fn find_kink(&self) -> Option<u16> {
        for c in &self.comps {
            let n = c.len();
            for i in 0..n {
                if c[i].x == c[(i + 1) % n].x {
                    return Some(c[i].x);
                }
            }
        }
        None
    }

    /// Two crossings joined by both of their strands, one strand over at both, signs opposite.
    fn find_bigon(&self, loc: &[[(u16, u16); 2]]) -> Option<(u16, u16)> {
        for (ci, c) in self.comps.iter().enumerate() {
            let n = c.len();
            if n < 2 {
                continue;
            }
            for i in 0..n {
                let (p, q) = (c[i], c[(i + 1) % n]);
                if p.x == q.x || p.over != q.over || self.positive[p.x as usize] == self.positive[q.x as usize] {
                    continue;
                }
                let other = |x: u16| {
                    let [l0, l1] = loc[x as usize];
                    if l0 == (ci as u16, i as u16) || l0 == (ci as u16, ((i + 1) % n) as u16) {
                        l1
                    } else {
                        l0
                    }
                };
                let (op, oq) = (other(p.x), other(q.x));
                if op.0 != oq.0 {
                    continue;
                }
                let m = self.comps[op.0 as usize].len() as u16;
                if (op.1 + 1) % m == oq.1 || (oq.1 + 1) % m == op.1 {
                    return Some((p.x, q.x));
                }
            }
        }
        None
    }

    /// Removes kinks and cancelling bigons until none remain.
    pub fn simplify(&mut self) {
        loop {
            if let Some(x) = self.find_kink() {
                self.drop_crossings(x, x);
                continue;
            }
            let loc = self.locate();
            if let Some((a, b)) = self.find_bigon(&loc) {
                self.drop_crossings(a, b);
                continue;
            }
            break;
        }
    }

    pub fn switch(&mut self, x: u16) {
        for c in self.comps.iter_mut() {
            for p in c.iter_mut() {
                if p.x == x {
                    p.over = !p.over;
                }
            }
        }
        let s = &mut self.positive[x as usize];
        *s = !*s;
    }

    /// Oriented smoothing at crossing `x`.
    pub fn smooth(&self, x: u16) -> GaussCode {
        let loc = self.locate();
        let [(c1, i1), (c2, i2)] = loc[x as usize];
        let (c1, i1, c2, i2) = (c1 as usize, i1 as usize, c2 as usize, i2 as usize);
        let mut comps: Vec<Vec<Pass>> = Vec::with_capacity(self.comps.len() + 1);
        let mut loops = self.loops;
        let mut push = |v: Vec<Pass>, comps: &mut Vec<Vec<Pass>>| {
            if v.is_empty() {
                loops += 1;
            } else {
                comps.push(v);
            }
        };
        if c1 == c2 {
            let c = &self.comps[c1];
            let (i1, i2) = (i1.min(i2), i1.max(i2));
            for (ci, other) in self.comps.iter().enumerate() {
                if ci == c1 {
                    let mut a: Vec<Pass> = c[..i1].to_vec();
                    a.extend_from_slice(&c[i2 + 1..]);
                    push(a, &mut comps);
                    push(c[i1 + 1..i2].to_vec(), &mut comps);
                } else {
                    comps.push(other.clone());
                }
            }
        } else {
            let (a, b) = (&self.comps[c1], &self.comps[c2]);
            for (ci, other) in self.comps.iter().enumerate() {
                if ci == c1 {
                    let mut m: Vec<Pass> = Vec::with_capacity(a.len() + b.len() - 2);
                    m.extend_from_slice(&a[..i1]);
                    m.extend_from_slice(&b[i2 + 1..]);
                    m.extend_from_slice(&b[..i2]);
                    m.extend_from_slice(&a[i1 + 1..]);
                    push(m, &mut comps);
                } else if ci != c2 {
                    comps.push(other.clone());
                }
            }
        }
        GaussCode { comps, positive: self.positive.clone(), loops }
    }

    /// The first crossing met from below, traversing components in order
    /// from their first passes.
    pub fn first_ascending(&self) -> Option<u16> {
        let mut seen = vec![false; self.positive.len()];
        for c in &self.comps {
            for p in c {
                if !seen[p.x as usize] {
                    if !p.over {
                        return Some(p.x);
                    }
                    seen[p.x as usize] = true;
                }
            }
        }
        None
    }

    /// Splits into groups of components that share crossings.
    /// Crossing-free loops stay with `self.loops` and are not returned.
    pub fn split(self) -> Vec<GaussCode> {
        let k = self.comps.len();
        if k <= 1 {
            return vec![GaussCode { comps: self.comps, positive: self.positive, loops: 0 }];
        }
        let mut owner = vec![NONE; self.positive.len()];
        let mut parent: Vec<usize> = (0..k).collect();
        fn find(p: &mut [usize], mut i: usize) -> usize {
            while p[i] != i {
                p[i] = p[p[i]];
                i = p[i];
            }
            i
        }
        for (ci, c) in self.comps.iter().enumerate() {
            for p in c {
                let o = owner[p.x as usize];
                if o == NONE {
                    owner[p.x as usize] = ci as u16;
                } else {
                    let (a, b) = (find(&mut parent, ci), find(&mut parent, o as usize));
                    parent[a] = b;
                }
            }
        }
        let roots: Vec<usize> = (0..k).map(|i| find(&mut parent, i)).collect();
        if roots.iter().all(|&r| r == roots[0]) {
            return vec![GaussCode { comps: self.comps, positive: self.positive, loops: 0 }];
        }
        let mut groups: Vec<(usize, GaussCode)> = Vec::new();
        for (ci, c) in self.comps.into_iter().enumerate() {
            match groups.iter_mut().find(|(r, _)| *r == roots[ci]) {
                Some((_, g)) => g.comps.push(c),
                None => groups.push((roots[ci], GaussCode { comps: vec![c], positive: self.positive.clone(), loops: 0 })),
            }
        }
        groups.into_iter().map(|(_, g)| g).collect()
    }

    /// Isomorphism-invariant key of a connected code: the least encoding
    /// over all choices of first component and starting pass.
    pub fn canonical_key(&self) -> Vec<u16> {
        let loc = self.locate();
        let min_len = self.comps.iter().map(Vec::len).min().unwrap_or(0);
        let mut best: Vec<u16> = Vec::new();
        let mut scratch = Encoder::new(self.positive.len(), self.comps.len());
        for (ci, c) in self.comps.iter().enumerate() {
            if c.len() != min_len {
                continue;
            }
            let any_under = c.iter().any(|p| !p.over);
            for s in 0..c.len() {
                if any_under && c[s].over {
                    continue;
                }
                scratch.encode(self, &loc, ci, s, &best);
                if best.is_empty() || scratch.out < best {
                    core::mem::swap(&mut best, &mut scratch.out);
                }
            }
        }
        best
    }
}

struct Encoder {
    label: Vec<u16>,
    order: Vec<u16>,
    visited: Vec<bool>,
    out: Vec<u16>,
}

impl Encoder {
    fn new(labels: usize, comps: usize) -> Self {
        Self { label: vec![NONE; labels], order: Vec::new(), visited: vec![false; comps], out: Vec::new() }
    }

    fn encode(&mut self, g: &GaussCode, loc: &[[(u16, u16); 2]], c0: usize, s0: usize, best: &[u16]) {
        for &x in &self.order {
            self.label[x as usize] = NONE;
        }
        self.order.clear();
        self.visited.iter_mut().for_each(|v| *v = false);
        self.out.clear();
        let mut cursor = 0;
        let (mut ci, mut start) = (c0, s0);
        // prefix still equal to `best`; once larger the encoding can stop
        let mut tied = !best.is_empty();
        macro_rules! emit {
            ($v:expr) => {{
                let v = $v;
                if tied {
                    match v.cmp(&best[self.out.len()]) {
                        core::cmp::Ordering::Less => tied = false,
                        core::cmp::Ordering::Equal => {}
                        core::cmp::Ordering::Greater => {
                            self.out.push(v);
                            return;
                        }
                    }
                }
                self.out.push(v);
            }};
        }
        loop {
            self.visited[ci] = true;
            let c = &g.comps[ci];
            let n = c.len();
            emit!(n as u16);
            for t in 0..n {
                let p = c[(start + t) % n];
                let mut l = self.label[p.x as usize];
                if l == NONE {
                    l = self.order.len() as u16;
                    self.label[p.x as usize] = l;
                    self.order.push(p.x);
                }
                emit!(l << 2 | (p.over as u16) << 1 | g.positive[p.x as usize] as u16);
            }
            let mut next = None;
            while next.is_none() && cursor < self.order.len() {
                let x = self.order[cursor] as usize;
                for &(c, i) in &loc[x] {
                    if !self.visited[c as usize] {
                        next = Some((c as usize, i as usize));
                        break;
                    }
                }
                if next.is_none() {
                    cursor += 1;
                }
            }
            match next {
                Some((c, i)) => (ci, start) = (c, i),
                None => return,
            }
        }
    }
}
