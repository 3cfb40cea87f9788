//! Oriented link diagrams as signed PD codes.
//!
//! A crossing lists its four arcs counterclockwise, starting at the incoming
//! under-strand. The under-strand therefore runs from slot 0 to slot 2; the
//! over-strand runs from slot 3 to slot 1 at a positive crossing and from slot
//! 1 to slot 3 at a negative one. Arcs are labelled `1..=arc_count` and each
//! component is the cyclic sequence of its arcs in the direction of travel.
//! A component with a single arc that meets no crossing is a free loop.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

pub type ArcLabel = u32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i32 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Crossing {
    pub slots: [ArcLabel; 4],
    pub sign: Sign,
}

impl Crossing {
    pub fn new(slots: [ArcLabel; 4], sign: Sign) -> Self {
        Self { slots, sign }
    }

    pub fn over_in_slot(&self) -> usize {
        match self.sign {
            Sign::Positive => 3,
            Sign::Negative => 1,
        }
    }

    pub fn over_out_slot(&self) -> usize {
        match self.sign {
            Sign::Positive => 1,
            Sign::Negative => 3,
        }
    }

    pub fn is_incoming(&self, slot: usize) -> bool {
        slot == 0 || slot == self.over_in_slot()
    }

    pub fn is_over_slot(slot: usize) -> bool {
        slot % 2 == 1
    }

    /// Slot reached by continuing straight through the crossing.
    pub fn through(slot: usize) -> usize {
        (slot + 2) % 4
    }

    /// Outgoing slot joined to the incoming `slot` by the oriented smoothing.
    pub fn smoothing_exit(&self, slot: usize) -> usize {
        if slot == 0 {
            self.over_out_slot()
        } else {
            2
        }
    }

    /// The same crossing with over and under exchanged.
    pub fn switched(&self) -> Crossing {
        let [a, b, c, d] = self.slots;
        match self.sign {
            // under d -> b, over a -> c
            Sign::Positive => Crossing::new([d, a, b, c], Sign::Negative),
            // under b -> d, over c -> a
            Sign::Negative => Crossing::new([b, c, d, a], Sign::Positive),
        }
    }
}

impl fmt::Display for Crossing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.slots;
        write!(f, "X[{a},{b},{c},{d}] {}", self.sign.symbol())
    }
}

/// Where an arc leaves and enters crossings: `(crossing, slot)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub(crate) struct ArcEnds {
    pub tail: Option<(usize, usize)>,
    pub head: Option<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    NoComponents,
    EmptyComponent { component: usize },
    ArcOutOfRange { crossing: usize, slot: usize, arc: ArcLabel },
    ArcMissingFromComponents { arc: ArcLabel },
    ArcRepeatedInComponents { arc: ArcLabel },
    /// an arc must occupy exactly two crossing slots, or none for a free loop
    ArcMultiplicity { arc: ArcLabel, count: usize },
    /// both ends of the arc are incoming (or both outgoing)
    ArcDirection { arc: ArcLabel },
    FreeLoopInLongerComponent { arc: ArcLabel },
    /// the arc leaving a crossing is not the successor of the arc entering it
    SuccessorMismatch { crossing: usize, incoming: ArcLabel, outgoing: ArcLabel, expected: ArcLabel },
    /// faces - crossings != 2 on a connected piece of the projection
    EulerCheck { crossings: usize, faces: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NoComponents => write!(f, "diagram has no components"),
            Violation::EmptyComponent { component } => write!(f, "component {component} is empty"),
            Violation::ArcOutOfRange { crossing, slot, arc } => {
                write!(f, "crossing {crossing} slot {slot}: arc {arc} out of range")
            }
            Violation::ArcMissingFromComponents { arc } => write!(f, "arc {arc} belongs to no component"),
            Violation::ArcRepeatedInComponents { arc } => write!(f, "arc {arc} listed more than once in components"),
            Violation::ArcMultiplicity { arc, count } => {
                write!(f, "arc {arc} occupies {count} crossing slots (expected 2)")
            }
            Violation::ArcDirection { arc } => write!(f, "arc {arc} does not run from an outgoing to an incoming slot"),
            Violation::FreeLoopInLongerComponent { arc } => {
                write!(f, "arc {arc} meets no crossing but its component has other arcs")
            }
            Violation::SuccessorMismatch { crossing, incoming, outgoing, expected } => write!(
                f,
                "crossing {crossing}: arc {incoming} continues as {outgoing}, component order says {expected}"
            ),
            Violation::EulerCheck { crossings, faces } => {
                write!(f, "projection piece with {crossings} crossings has {faces} faces (expected {})", crossings + 2)
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Seifert circle census of an oriented diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeifertData {
    pub circle_count: usize,
    pub euler_characteristic: i64,
    pub canonical_genus: u64,
    /// Arcs of each circle, in the order the circle visits them.
    pub circles: Vec<Vec<ArcLabel>>,
}

/// A complementary region, as the crossing corners on its boundary.
/// Corner `k` of a crossing lies between slots `k` and `k + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub corners: Vec<(usize, u8)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceCensus {
    pub faces: Vec<Face>,
    /// `face_of[x][k]` is the index of the face containing corner `k` of crossing `x`.
    pub face_of: Vec<[usize; 4]>,
}

impl FaceCensus {
    pub fn count(&self) -> usize {
        self.faces.len()
    }
}

/// An oriented link diagram.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Diagram {
    crossings: Vec<Crossing>,
    components: Vec<Vec<ArcLabel>>,
}

impl Diagram {
    /// Assembles a diagram and rejects it unless [`Diagram::validate`] is clean.
    pub fn new(crossings: Vec<Crossing>, components: Vec<Vec<ArcLabel>>) -> Result<Self> {
        let d = Self { crossings, components };
        let report = d.validate();
        if report.is_valid() {
            Ok(d)
        } else {
            Err(Error::InvalidDiagram(report))
        }
    }

    /// Assembles a diagram without checking it; see [`Diagram::validate`].
    pub fn from_parts_unchecked(crossings: Vec<Crossing>, components: Vec<Vec<ArcLabel>>) -> Self {
        Self { crossings, components }
    }

    /// The zero-crossing unlink with `k` components.
    pub fn unlink(k: usize) -> Self {
        Self { crossings: Vec::new(), components: (1..=k as ArcLabel).map(|a| vec![a]).collect() }
    }

    pub fn unknot() -> Self {
        Self::unlink(1)
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn components(&self) -> &[Vec<ArcLabel>] {
        &self.components
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn arc_count(&self) -> usize {
        self.components.iter().map(Vec::len).sum()
    }

    pub fn free_loop_count(&self) -> usize {
        let used = self.used_arcs();
        self.components
            .iter()
            .filter(|c| c.len() == 1 && !used.contains(&c[0]))
            .count()
    }

    fn used_arcs(&self) -> BTreeSet<ArcLabel> {
        self.crossings.iter().flat_map(|x| x.slots).collect()
    }

    pub fn validate(&self) -> ValidationReport {
        let mut out = Vec::new();
        if self.components.is_empty() {
            out.push(Violation::NoComponents);
        }
        let n = self.arc_count();
        let mut listed = vec![0usize; n + 1];
        for (ci, comp) in self.components.iter().enumerate() {
            if comp.is_empty() {
                out.push(Violation::EmptyComponent { component: ci });
            }
            for &a in comp {
                if a == 0 || a as usize > n {
                    out.push(Violation::ArcOutOfRange { crossing: usize::MAX, slot: 0, arc: a });
                } else {
                    listed[a as usize] += 1;
                }
            }
        }
        for (a, &k) in listed.iter().enumerate().skip(1) {
            match k {
                0 => out.push(Violation::ArcMissingFromComponents { arc: a as ArcLabel }),
                1 => {}
                _ => out.push(Violation::ArcRepeatedInComponents { arc: a as ArcLabel }),
            }
        }
        let mut uses = vec![0usize; n + 1];
        let mut heads = vec![0usize; n + 1];
        for (xi, x) in self.crossings.iter().enumerate() {
            for (s, &a) in x.slots.iter().enumerate() {
                if a == 0 || a as usize > n {
                    out.push(Violation::ArcOutOfRange { crossing: xi, slot: s, arc: a });
                    continue;
                }
                uses[a as usize] += 1;
                if x.is_incoming(s) {
                    heads[a as usize] += 1;
                }
            }
        }
        if !out.is_empty() {
            return ValidationReport { violations: out };
        }
        for comp in &self.components {
            for &a in comp {
                let k = uses[a as usize];
                if k == 0 {
                    if comp.len() != 1 {
                        out.push(Violation::FreeLoopInLongerComponent { arc: a });
                    }
                } else if k != 2 {
                    out.push(Violation::ArcMultiplicity { arc: a, count: k });
                } else if heads[a as usize] != 1 {
                    out.push(Violation::ArcDirection { arc: a });
                }
            }
        }
        if !out.is_empty() {
            return ValidationReport { violations: out };
        }
        let succ = self.successors();
        for (xi, x) in self.crossings.iter().enumerate() {
            for s in [0, x.over_in_slot()] {
                let incoming = x.slots[s];
                let outgoing = x.slots[Crossing::through(s)];
                let expected = succ[incoming as usize];
                if outgoing != expected {
                    out.push(Violation::SuccessorMismatch { crossing: xi, incoming, outgoing, expected });
                }
            }
        }
        if !out.is_empty() {
            return ValidationReport { violations: out };
        }
        let census = self.face_census_unchecked();
        let piece = self.crossing_pieces();
        let pieces = piece.iter().copied().max().map_or(0, |m| m + 1);
        let mut xs = vec![0usize; pieces];
        let mut fs = vec![0usize; pieces];
        for p in &piece {
            xs[*p] += 1;
        }
        for face in &census.faces {
            fs[piece[face.corners[0].0]] += 1;
        }
        for p in 0..pieces {
            if fs[p] != xs[p] + 2 {
                out.push(Violation::EulerCheck { crossings: xs[p], faces: fs[p] });
            }
        }
        ValidationReport { violations: out }
    }

    fn ensure_valid(&self) -> Result<()> {
        let report = self.validate();
        if report.is_valid() {
            Ok(())
        } else {
            Err(Error::InvalidDiagram(report))
        }
    }

    /// `succ[a]` is the arc after `a` along its component.
    fn successors(&self) -> Vec<ArcLabel> {
        let mut succ = vec![0; self.arc_count() + 1];
        for comp in &self.components {
            for (i, &a) in comp.iter().enumerate() {
                succ[a as usize] = comp[(i + 1) % comp.len()];
            }
        }
        succ
    }

    pub(crate) fn arc_ends(&self) -> Vec<ArcEnds> {
        let mut ends = vec![ArcEnds::default(); self.arc_count() + 1];
        for (xi, x) in self.crossings.iter().enumerate() {
            for (s, &a) in x.slots.iter().enumerate() {
                let e = &mut ends[a as usize];
                if x.is_incoming(s) {
                    e.head = Some((xi, s));
                } else {
                    e.tail = Some((xi, s));
                }
            }
        }
        ends
    }

    /// The slot at the other end of the arc occupying `(crossing, slot)`.
    fn partners(&self) -> Vec<[(usize, usize); 4]> {
        let ends = self.arc_ends();
        self.crossings
            .iter()
            .enumerate()
            .map(|(xi, x)| {
                let mut row = [(0, 0); 4];
                for (s, &a) in x.slots.iter().enumerate() {
                    let e = ends[a as usize];
                    let (head, tail) = (e.head.unwrap(), e.tail.unwrap());
                    row[s] = if head == (xi, s) { tail } else { head };
                }
                row
            })
            .collect()
    }

    /// Union-find label of the projection piece holding each crossing.
    fn crossing_pieces(&self) -> Vec<usize> {
        let n = self.crossings.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut i: usize) -> usize {
            while p[i] != i {
                p[i] = p[p[i]];
                i = p[i];
            }
            i
        }
        let mut first_seen: Vec<Option<usize>> = vec![None; self.arc_count() + 1];
        for (xi, x) in self.crossings.iter().enumerate() {
            for &a in &x.slots {
                match first_seen[a as usize] {
                    None => first_seen[a as usize] = Some(xi),
                    Some(y) => {
                        let (ra, rb) = (find(&mut parent, xi), find(&mut parent, y));
                        parent[ra] = rb;
                    }
                }
            }
        }
        let mut label = vec![usize::MAX; n];
        let mut next = 0;
        let mut out = vec![0; n];
        for i in 0..n {
            let r = find(&mut parent, i);
            if label[r] == usize::MAX {
                label[r] = next;
                next += 1;
            }
            out[i] = label[r];
        }
        out
    }

    /// Connected pieces of the projection, free loops included.
    pub fn projection_piece_count(&self) -> usize {
        let pieces = self.crossing_pieces().into_iter().max().map_or(0, |m| m + 1);
        pieces + self.free_loop_count()
    }

    pub fn is_connected_projection(&self) -> bool {
        self.projection_piece_count() == 1
    }

    fn face_census_unchecked(&self) -> FaceCensus {
        let partners = self.partners();
        let n = self.crossings.len();
        let mut face_of = vec![[usize::MAX; 4]; n];
        let mut faces = Vec::new();
        for x0 in 0..n {
            for s0 in 0..4 {
                // the corner entered after arriving at (x, s) is corner s
                let (y, t) = partners[x0][s0];
                if face_of[y][t] != usize::MAX {
                    continue;
                }
                let id = faces.len();
                let mut corners = Vec::new();
                let (mut x, mut s) = (x0, s0);
                loop {
                    let (y, t) = partners[x][s];
                    if face_of[y][t] != usize::MAX {
                        break;
                    }
                    face_of[y][t] = id;
                    corners.push((y, t as u8));
                    x = y;
                    s = (t + 1) % 4;
                }
                faces.push(Face { corners });
            }
        }
        FaceCensus { faces, face_of }
    }

    /// Complementary regions of a connected projection, traced corner by corner.
    pub fn faces(&self) -> Result<FaceCensus> {
        self.ensure_valid()?;
        let pieces = self.projection_piece_count();
        if pieces != 1 {
            return Err(Error::DisconnectedProjection { pieces });
        }
        if self.crossings.is_empty() {
            // a lone circle splits the sphere into two discs with no corners
            return Ok(FaceCensus { faces: vec![Face { corners: Vec::new() }; 2], face_of: Vec::new() });
        }
        Ok(self.face_census_unchecked())
    }

    /// Crossings whose opposite corners lie in the same region.
    pub fn nugatory_crossings(&self) -> Vec<usize> {
        if self.crossings.is_empty() {
            return Vec::new();
        }
        let census = self.face_census_unchecked();
        census
            .face_of
            .iter()
            .enumerate()
            .filter(|(_, f)| f[0] == f[2] || f[1] == f[3])
            .map(|(i, _)| i)
            .collect()
    }

    pub fn seifert_circles(&self) -> Result<SeifertData> {
        self.ensure_valid()?;
        let ends = self.arc_ends();
        let n = self.arc_count();
        let mut seen = vec![false; n + 1];
        let mut circles = Vec::new();
        for comp in &self.components {
            for &start in comp {
                if seen[start as usize] {
                    continue;
                }
                let mut circle = Vec::new();
                let mut a = start;
                while !seen[a as usize] {
                    seen[a as usize] = true;
                    circle.push(a);
                    match ends[a as usize].head {
                        None => break,
                        Some((xi, s)) => {
                            let x = &self.crossings[xi];
                            a = x.slots[x.smoothing_exit(s)];
                        }
                    }
                }
                circles.push(circle);
            }
        }
        let s = circles.len() as i64;
        let chi = s - self.crossings.len() as i64;
        let pieces = self.projection_piece_count() as i64;
        // chi = 2 * pieces - |K| - 2g for a surface with `pieces` connected parts
        let twice_genus = 2 * pieces - self.components.len() as i64 - chi;
        debug_assert!(twice_genus >= 0 && twice_genus % 2 == 0);
        Ok(SeifertData {
            circle_count: circles.len(),
            euler_characteristic: chi,
            canonical_genus: (twice_genus / 2) as u64,
            circles,
        })
    }

    pub fn writhe(&self) -> i32 {
        self.crossings.iter().map(|x| x.sign.value()).sum()
    }

    /// True when every component meets its crossings alternately over and under.
    pub fn is_alternating(&self) -> bool {
        let ends = self.arc_ends();
        self.components.iter().all(|comp| {
            let passes: Vec<bool> = comp
                .iter()
                .filter_map(|&a| ends[a as usize].head.map(|(_, s)| Crossing::is_over_slot(s)))
                .collect();
            (0..passes.len()).all(|i| passes[i] != passes[(i + 1) % passes.len()])
        })
    }

    /// Reflection through the projection plane: every crossing switched.
    pub fn mirror(&self) -> Diagram {
        Diagram {
            crossings: self.crossings.iter().map(Crossing::switched).collect(),
            components: self.components.clone(),
        }
    }

    /// Changes crossing `index`, keeping arcs and components.
    pub fn switch(&self, index: usize) -> Result<Diagram> {
        self.check_index(index)?;
        let mut d = self.clone();
        d.crossings[index] = d.crossings[index].switched();
        Ok(d)
    }

    /// Forces crossing `index` to have the given sign.
    pub fn with_sign(&self, index: usize, sign: Sign) -> Result<Diagram> {
        self.check_index(index)?;
        if self.crossings[index].sign == sign {
            Ok(self.clone())
        } else {
            self.switch(index)
        }
    }

    /// Replaces crossing `index` by its oriented smoothing.
    pub fn smooth(&self, index: usize) -> Result<Diagram> {
        self.check_index(index)?;
        let x = self.crossings[index];
        let n = self.arc_count();
        let mut root: Vec<ArcLabel> = (0..=n as ArcLabel).collect();
        fn find(r: &mut [ArcLabel], mut a: ArcLabel) -> ArcLabel {
            while r[a as usize] != a {
                r[a as usize] = r[r[a as usize] as usize];
                a = r[a as usize];
            }
            a
        }
        for s in [0, x.over_in_slot()] {
            let (a, b) = (x.slots[s], x.slots[x.smoothing_exit(s)]);
            let (ra, rb) = (find(&mut root, a), find(&mut root, b));
            if ra != rb {
                root[rb as usize] = ra;
            }
        }
        let mut crossings: Vec<Crossing> = Vec::with_capacity(self.crossings.len() - 1);
        for (i, c) in self.crossings.iter().enumerate() {
            if i != index {
                let mut c = *c;
                for a in c.slots.iter_mut() {
                    *a = find(&mut root, *a);
                }
                crossings.push(c);
            }
        }
        // roots that no longer meet a crossing close up into free loops
        let used: BTreeSet<ArcLabel> = crossings.iter().flat_map(|c| c.slots).collect();
        let mut loops = BTreeSet::new();
        for a in x.slots {
            let r = find(&mut root, a);
            if !used.contains(&r) {
                loops.insert(r);
            }
        }
        let old_loops = self.free_loop_count();
        Ok(Self::rebuild(crossings, loops.len() + old_loops))
    }

    fn check_index(&self, index: usize) -> Result<()> {
        if index < self.crossings.len() {
            Ok(())
        } else {
            Err(Error::CrossingOutOfRange { index, count: self.crossings.len() })
        }
    }

    /// Rebuilds components from the crossings alone and relabels arcs
    /// `1..` in traversal order; `free_loops` crossing-free circles follow.
    pub(crate) fn rebuild(crossings: Vec<Crossing>, free_loops: usize) -> Diagram {
        let mut head: hashbrown::HashMap<ArcLabel, (usize, usize)> = hashbrown::HashMap::new();
        let mut labels: BTreeSet<ArcLabel> = BTreeSet::new();
        for (xi, x) in crossings.iter().enumerate() {
            for (s, &a) in x.slots.iter().enumerate() {
                labels.insert(a);
                if x.is_incoming(s) {
                    head.insert(a, (xi, s));
                }
            }
        }
        let mut relabel: hashbrown::HashMap<ArcLabel, ArcLabel> = hashbrown::HashMap::new();
        let mut components = Vec::new();
        let mut next: ArcLabel = 1;
        for &start in &labels {
            if relabel.contains_key(&start) {
                continue;
            }
            let mut comp = Vec::new();
            let mut a = start;
            while !relabel.contains_key(&a) {
                relabel.insert(a, next);
                comp.push(next);
                next += 1;
                let (xi, s) = head[&a];
                a = crossings[xi].slots[Crossing::through(s)];
            }
            components.push(comp);
        }
        let crossings = crossings
            .into_iter()
            .map(|mut x| {
                for a in x.slots.iter_mut() {
                    *a = relabel[a];
                }
                x
            })
            .collect();
        for _ in 0..free_loops {
            components.push(vec![next]);
            next += 1;
        }
        Diagram { crossings, components }
    }

    /// Split union; the arcs of `other` are shifted past those of `self`.
    pub fn disjoint_union(&self, other: &Diagram) -> Diagram {
        let off = self.arc_count() as ArcLabel;
        let mut crossings = self.crossings.clone();
        crossings.extend(other.crossings.iter().map(|x| {
            let mut x = *x;
            for a in x.slots.iter_mut() {
                *a += off;
            }
            x
        }));
        let mut components = self.components.clone();
        components.extend(other.components.iter().map(|c| c.iter().map(|a| a + off).collect()));
        Diagram { crossings, components }
    }

    /// Reverses the orientation of the listed components.
    pub fn reverse_components(&self, which: &[usize]) -> Diagram {
        let mut flip = vec![false; self.arc_count() + 1];
        let mut components = self.components.clone();
        for &ci in which {
            for &a in &self.components[ci] {
                flip[a as usize] = true;
            }
            components[ci].reverse();
        }
        let crossings = self
            .crossings
            .iter()
            .map(|x| {
                let under_rev = flip[x.slots[0] as usize];
                let over_rev = flip[x.slots[1] as usize];
                let over_in = if over_rev { x.over_out_slot() } else { x.over_in_slot() };
                let rot = if under_rev { 2 } else { 0 };
                let slots = [0, 1, 2, 3].map(|k| x.slots[(k + rot) % 4]);
                let sign = if (over_in + 4 - rot) % 4 == 3 { Sign::Positive } else { Sign::Negative };
                Crossing::new(slots, sign)
            })
            .collect();
        Diagram { crossings, components }
    }

    /// Lexicographically least relabelling over every choice of starting arc
    /// and component order. Equal canonical forms mean the diagrams agree up
    /// to an orientation-preserving homeomorphism of the sphere.
    pub fn canonical_form(&self) -> Canonical {
        crate::canonical::canonical_diagram(self)
    }

    /// Oriented diagram isomorphism.
    pub fn is_isomorphic(&self, other: &Diagram) -> bool {
        self.crossing_count() == other.crossing_count()
            && self.component_count() == other.component_count()
            && self.canonical_form().diagram == other.canonical_form().diagram
    }

    /// Isomorphism allowing any component to be reversed.
    pub fn is_isomorphic_unoriented(&self, other: &Diagram) -> bool {
        if self.crossing_count() != other.crossing_count() || self.component_count() != other.component_count() {
            return false;
        }
        let target = other.canonical_form().diagram;
        let k = self.component_count();
        (0u32..(1 << k.min(16))).any(|mask| {
            let which: Vec<usize> = (0..k).filter(|i| mask >> i & 1 == 1).collect();
            self.reverse_components(&which).canonical_form().diagram == target
        })
    }
}

/// Canonically relabelled diagram with the crossing correspondence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Canonical {
    pub diagram: Diagram,
    /// `crossing_map[i]` is the canonical index of original crossing `i`.
    pub crossing_map: Vec<usize>,
}

#[cfg(test)]
mod tests {
    use super::*;

    // right-handed trefoil as a closed 2-braid, worked out by hand
    pub(crate) fn trefoil() -> Diagram {
        Diagram::new(
            vec![
                Crossing::new([1, 5, 2, 4], Sign::Positive),
                Crossing::new([3, 1, 4, 6], Sign::Positive),
                Crossing::new([5, 3, 6, 2], Sign::Positive),
            ],
            vec![vec![1, 2, 3, 4, 5, 6]],
        )
        .unwrap()
    }

    fn kink() -> Diagram {
        // arc 1 leaves the over-strand and returns as the under-strand
        Diagram::new(vec![Crossing::new([1, 1, 2, 2], Sign::Positive)], vec![vec![1, 2]]).unwrap()
    }

    #[test]
    fn trefoil_is_valid() {
        assert!(trefoil().validate().is_valid());
        assert_eq!(trefoil().writhe(), 3);
        assert_eq!(trefoil().mirror().writhe(), -3);
    }

    #[test]
    fn free_loops_are_valid() {
        assert!(Diagram::unknot().validate().is_valid());
        let u3 = Diagram::unlink(3);
        assert!(u3.validate().is_valid());
        let s = u3.seifert_circles().unwrap();
        assert_eq!((s.circle_count, s.euler_characteristic, s.canonical_genus), (3, 3, 0));
        assert!(Diagram::unknot().is_alternating());
        assert!(Diagram::unknot().is_connected_projection());
        assert!(!u3.is_connected_projection());
    }

    #[test]
    fn tripled_arc_is_reported() {
        let mut x = trefoil().crossings().to_vec();
        x[2].slots[0] = 1;
        let d = Diagram::from_parts_unchecked(x, vec![vec![1, 2, 3, 4, 5, 6]]);
        let report = d.validate();
        assert!(report.violations.contains(&Violation::ArcMultiplicity { arc: 1, count: 3 }));
        assert!(d.seifert_circles().is_err());
    }

    #[test]
    fn wrong_sign_is_reported() {
        let mut x = trefoil().crossings().to_vec();
        x[0].sign = Sign::Negative;
        let d = Diagram::from_parts_unchecked(x, vec![vec![1, 2, 3, 4, 5, 6]]);
        assert!(!d.validate().is_valid());
    }

    #[test]
    fn trefoil_seifert() {
        let s = trefoil().seifert_circles().unwrap();
        assert_eq!((s.circle_count, s.euler_characteristic, s.canonical_genus), (2, -1, 1));
    }

    #[test]
    fn trefoil_faces() {
        let f = trefoil().faces().unwrap();
        assert_eq!(f.count(), 5);
        assert!(trefoil().nugatory_crossings().is_empty());
    }

    #[test]
    fn kink_faces_and_nugatory() {
        let k = kink();
        assert_eq!(k.faces().unwrap().count(), 3);
        assert_eq!(k.nugatory_crossings(), vec![0]);
        let s = k.seifert_circles().unwrap();
        assert_eq!((s.circle_count, s.canonical_genus), (2, 0));
    }

    #[test]
    fn disjoint_union_is_disconnected() {
        let d = trefoil().disjoint_union(&trefoil());
        assert!(d.validate().is_valid());
        assert!(!d.is_connected_projection());
        assert!(matches!(d.faces(), Err(Error::DisconnectedProjection { pieces: 2 })));
        assert_eq!(d.seifert_circles().unwrap().canonical_genus, 2);
    }

    #[test]
    fn smoothing_trefoil_gives_hopf_link() {
        let h = trefoil().smooth(0).unwrap();
        assert!(h.validate().is_valid(), "{}", h.validate());
        assert_eq!(h.crossing_count(), 2);
        assert_eq!(h.component_count(), 2);
        let k = kink().smooth(0).unwrap();
        assert_eq!(k, Diagram::unlink(2));
    }

    #[test]
    fn switch_is_an_involution() {
        let t = trefoil();
        for i in 0..3 {
            let s = t.switch(i).unwrap();
            assert!(s.validate().is_valid());
            assert_eq!(s.writhe(), 1);
            assert_eq!(s.switch(i).unwrap(), t);
        }
        assert_eq!(t.mirror().mirror(), t);
        assert!(matches!(t.switch(3), Err(Error::CrossingOutOfRange { .. })));
    }

    #[test]
    fn reversal_keeps_knot_signs() {
        let t = trefoil();
        let r = t.reverse_components(&[0]);
        assert!(r.validate().is_valid(), "{}", r.validate());
        assert_eq!(r.writhe(), 3);
        assert!(t.is_isomorphic_unoriented(&r));
    }

    #[test]
    fn alternation() {
        assert!(trefoil().is_alternating());
        assert!(!trefoil().switch(0).unwrap().is_alternating());
    }
}
