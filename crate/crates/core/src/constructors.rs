//! Diagram families and local moves: pretzels, (2, n) torus links, 4-plats,
//! closed braids, twist insertion and removal, flat and Whitehead doubles,
//! and the deflation of a 4-plat to the trefoil.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::diagram::{ArcLabel, Diagram, Sign};
use crate::error::{Error, Result};
use crate::planar::{Builder, End, Hint, Planar};

const SW: u8 = 0;
const SE: u8 = 1;
const NE: u8 = 2;
const NW: u8 = 3;

const S: u8 = 0;
const E: u8 = 1;
const N: u8 = 2;
const W: u8 = 3;

/// Ends of a vertical twist chain, as (left, right) pairs.
struct Chain {
    crossings: Vec<usize>,
    top: [End; 2],
    bottom: [End; 2],
}

/// Stacks `len` crossings vertically; `even_over` puts the SW-NE strand on top.
fn chain(b: &mut Builder, len: usize, even_over: bool) -> Chain {
    if len == 0 {
        let (l, r) = (b.point(), b.point());
        return Chain { crossings: Vec::new(), top: [l, r], bottom: [l, r] };
    }
    let xs: Vec<usize> = (0..len).map(|_| b.crossing(even_over)).collect();
    for w in xs.windows(2) {
        b.connect(End::Port(w[0], SW), End::Port(w[1], NW));
        b.connect(End::Port(w[0], SE), End::Port(w[1], NE));
    }
    let (first, last) = (xs[0], xs[len - 1]);
    Chain {
        top: [End::Port(first, NW), End::Port(first, NE)],
        bottom: [End::Port(last, SW), End::Port(last, SE)],
        crossings: xs,
    }
}

fn invalid(msg: impl Into<alloc::string::String>) -> Error {
    Error::InvalidSpec(msg.into())
}

/// Closed 2-braid with `n` positive crossings; `torus2(3)` is the right-handed trefoil.
pub fn torus2(n: usize) -> Result<Diagram> {
    if n < 2 {
        return Err(invalid(format!("torus2 needs at least 2 crossings, got {n}")));
    }
    let mut b = Builder::new();
    let c = chain(&mut b, n, true);
    b.connect(c.top[0], c.bottom[0]);
    b.connect(c.top[1], c.bottom[1]);
    let planar = b.finish();
    let hints = [Hint { crossing: 0, strand: 0, forward: false }, Hint { crossing: 0, strand: 1, forward: false }];
    Ok(planar.to_diagram(&hints).diagram)
}

/// Standard pretzel diagram: one vertical band of `|k|` half-twists per entry.
pub fn pretzel(twists: &[i32]) -> Result<Diagram> {
    if twists.is_empty() {
        return Err(invalid("a pretzel needs at least one band"));
    }
    if twists.contains(&0) {
        return Err(invalid("pretzel bands must have nonzero twisting"));
    }
    let mut b = Builder::new();
    let bands: Vec<Chain> = twists.iter().map(|&k| chain(&mut b, k.unsigned_abs() as usize, k < 0)).collect();
    let m = bands.len();
    for i in 0..m {
        let j = (i + 1) % m;
        b.connect(bands[i].top[1], bands[j].top[0]);
        b.connect(bands[i].bottom[1], bands[j].bottom[0]);
    }
    let planar = b.finish();
    let heads: Vec<usize> = bands.iter().map(|c| c.crossings[0]).collect();
    let cycles = planar.strand_cycles();
    let k = cycles.len().min(16);
    let mut best = (0usize, None);
    for mask in 0u32..(1 << k) {
        let dirs = directions(&planar, &cycles, mask, (0, 0, false));
        let score = heads.iter().filter(|&&x| dirs[x][0] != dirs[x][1]).count();
        if best.1.is_none() || score > best.0 {
            best = (score, Some(dirs));
        }
    }
    Ok(planar.to_diagram(&Planar::hints_from(&best.1.unwrap())).diagram)
}

/// Strand directions with every component run forward from its first strand,
/// except that `anchor` fixes one strand's direction, then `mask` flips components.
fn directions(planar: &Planar, cycles: &[Vec<(usize, u8, bool)>], mask: u32, anchor: (usize, u8, bool)) -> Vec<[bool; 2]> {
    let mut dirs = vec![[true; 2]; planar.len()];
    for (ci, cyc) in cycles.iter().enumerate() {
        let mut flip = ci < 32 && mask >> ci & 1 == 1;
        if let Some(&(_, _, rel)) = cyc.iter().find(|&&(x, s, _)| (x, s) == (anchor.0, anchor.1)) {
            flip ^= rel != anchor.2;
        }
        for &(x, s, f) in cyc {
            dirs[x][s as usize] = f != flip;
        }
    }
    dirs
}

/// Braid generators on strands `pos`, `pos + 1` (0-based, drawn downward).
struct Strands {
    top: Vec<End>,
    cur: Vec<End>,
}

impl Strands {
    fn new(b: &mut Builder, n: usize) -> Self {
        let top: Vec<End> = (0..n).map(|_| b.point()).collect();
        Self { cur: top.clone(), top }
    }

    fn cross(&mut self, b: &mut Builder, pos: usize, even_over: bool) -> usize {
        let x = b.crossing(even_over);
        b.connect(self.cur[pos], End::Port(x, NW));
        b.connect(self.cur[pos + 1], End::Port(x, NE));
        self.cur[pos] = End::Port(x, SW);
        self.cur[pos + 1] = End::Port(x, SE);
        x
    }

    fn bottom(&self, b: &mut Builder) -> Vec<End> {
        self.cur
            .iter()
            .map(|&e| {
                let p = b.point();
                b.connect(e, p);
                p
            })
            .collect()
    }
}

/// The alternating 4-plat of `σ2^a1 σ1^-a2 σ2^a3 ...`; `four_plat(&[1, 1, 1])` is the left-handed trefoil.
pub fn four_plat(exponents: &[u32]) -> Result<Diagram> {
    if exponents.len().is_multiple_of(2) {
        return Err(invalid(format!("a 4-plat word needs an odd number of syllables, got {}", exponents.len())));
    }
    if exponents.contains(&0) {
        return Err(invalid("4-plat exponents must be positive"));
    }
    let mut b = Builder::new();
    let mut st = Strands::new(&mut b, 4);
    for (i, &a) in exponents.iter().enumerate() {
        for _ in 0..a {
            if i % 2 == 0 {
                st.cross(&mut b, 1, true);
            } else {
                st.cross(&mut b, 0, false);
            }
        }
    }
    let bottom = st.bottom(&mut b);
    b.connect(st.top[0], st.top[1]);
    b.connect(st.top[2], st.top[3]);
    b.connect(bottom[0], bottom[1]);
    b.connect(bottom[2], bottom[3]);
    Ok(b.finish().to_diagram(&[]).diagram)
}

/// Closure of a braid on `strands` strands; `k` is `σk` and `-k` is `σk^-1`.
pub fn braid_closure(strands: usize, word: &[i32]) -> Result<Diagram> {
    if strands == 0 {
        return Err(invalid("a braid needs at least one strand"));
    }
    let mut b = Builder::new();
    let mut st = Strands::new(&mut b, strands);
    let mut hints = Vec::new();
    for &g in word {
        let pos = g.unsigned_abs() as usize;
        if g == 0 || pos >= strands {
            return Err(invalid(format!("generator {g} is not valid on {strands} strands")));
        }
        let x = st.cross(&mut b, pos - 1, g > 0);
        hints.push(Hint { crossing: x, strand: 0, forward: false });
        hints.push(Hint { crossing: x, strand: 1, forward: false });
    }
    let bottom = st.bottom(&mut b);
    for i in 0..strands {
        b.connect(st.top[i], bottom[i]);
    }
    Ok(b.finish().to_diagram(&hints).diagram)
}

/// A pair of opposite corners of a crossing, in PD slot terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CornerAxis {
    /// Corners 0 and 2.
    Corners02,
    /// Corners 1 and 3.
    Corners13,
}

impl CornerAxis {
    fn parity(self) -> u8 {
        match self {
            CornerAxis::Corners02 => 0,
            CornerAxis::Corners13 => 1,
        }
    }

    fn from_parity(p: u8) -> Self {
        if p.is_multiple_of(2) {
            CornerAxis::Corners02
        } else {
            CornerAxis::Corners13
        }
    }
}

/// The axis along which extra half-twists are stacked.
///
/// Along the parallel axis the two strands run the same way through the
/// twist region, so a full twist there joins the ends like the oriented
/// smoothing; along the antiparallel axis they run opposite ways.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TwistAxis {
    Parallel,
    Antiparallel,
    Fixed(CornerAxis),
}

impl TwistAxis {
    fn parity(self, sign: Sign) -> u8 {
        let parallel = match sign {
            Sign::Positive => 1,
            Sign::Negative => 0,
        };
        match self {
            TwistAxis::Parallel => parallel,
            TwistAxis::Antiparallel => 1 - parallel,
            TwistAxis::Fixed(c) => c.parity(),
        }
    }
}

fn insert_twists(d: &Diagram, index: usize, axis: TwistAxis, total: usize) -> Result<Diagram> {
    d.switch(index)?;
    let x = d.crossings()[index];
    let j = axis.parity(x.sign);
    let (mut p, dirs) = Planar::from_diagram(d);
    let old = p.partner[index];
    let chain_even = p.even_over[index] ^ (j == 1);
    let mut ids = vec![index];
    for _ in 1..total {
        ids.push(p.partner.len());
        p.partner.push([(0, 0); 4]);
        p.even_over.push(chain_even);
    }
    p.even_over[index] = chain_even;
    for w in ids.windows(2) {
        p.partner[w[0]][SW as usize] = (w[1], NW);
        p.partner[w[1]][NW as usize] = (w[0], SW);
        p.partner[w[0]][SE as usize] = (w[1], NE);
        p.partner[w[1]][NE as usize] = (w[0], SE);
    }
    let last = *ids.last().unwrap();
    let new_port = |port: u8| -> (usize, u8) {
        let local = (port + 4 - j) % 4;
        if local >= 2 {
            (index, local)
        } else {
            (last, local)
        }
    };
    let mut hints = Planar::hints_from(&dirs);
    hints.retain(|h| h.crossing != index);
    for port in 0..4u8 {
        let (y, q) = old[port as usize];
        let here = new_port(port);
        let there = if y == index { new_port(q) } else { (y, q) };
        p.partner[here.0][here.1 as usize] = there;
        p.partner[there.0][there.1 as usize] = here;
        let incoming = x.is_incoming(port as usize);
        hints.push(Hint { crossing: here.0, strand: here.1 % 2, forward: (here.1 < 2) == incoming });
    }
    Ok(p.to_diagram(&hints).diagram)
}

/// Replaces crossing `index` by three half-twists of the same handedness.
pub fn twist_replace(d: &Diagram, index: usize, axis: TwistAxis) -> Result<Diagram> {
    insert_twists(d, index, axis, 3)
}

/// Replaces crossing `index` by a full twist (two crossings).
pub fn half_to_full(d: &Diagram, index: usize, axis: TwistAxis) -> Result<Diagram> {
    insert_twists(d, index, axis, 2)
}

/// Outcome of [`full_to_half`]: the new diagram and the move that undoes it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Contraction {
    pub diagram: Diagram,
    pub crossing: usize,
    pub axis: CornerAxis,
}

/// Merges crossing `index` with the crossing across the bigon at `corner`,
/// turning a full twist into a half-twist.
pub fn full_to_half(d: &Diagram, index: usize, corner: u8) -> Result<Contraction> {
    d.switch(index)?;
    let a = corner % 4;
    let (p, dirs) = Planar::from_diagram(d);
    let (k, qa) = p.partner[index][a as usize];
    let (k2, b) = p.partner[index][((a + 1) % 4) as usize];
    if k != k2 || k == index || qa != (b + 1) % 4 {
        return Err(Error::NoTwistPartner { crossing: index });
    }
    if (p.even_over[index] ^ (a % 2 == 1)) != (p.even_over[k] ^ (b % 2 == 1)) {
        return Err(Error::NotATwist { crossing: index, other: k });
    }
    let mut partner = p.partner.clone();
    let new_port = |port: u8| -> (usize, u8) {
        if port == (b + 2) % 4 {
            (index, a)
        } else {
            (index, (a + 1) % 4)
        }
    };
    for port in [(b + 2) % 4, (b + 3) % 4] {
        let (y, q) = p.partner[k][port as usize];
        let here = new_port(port);
        let there = if y == k { new_port(q) } else { (y, q) };
        partner[here.0][here.1 as usize] = there;
        partner[there.0][there.1 as usize] = here;
    }
    let shift = |y: usize| if y > k { y - 1 } else { y };
    let mut out = Planar { partner: Vec::new(), even_over: Vec::new(), free_loops: p.free_loops };
    for y in 0..p.len() {
        if y == k {
            continue;
        }
        out.partner.push(partner[y].map(|(z, q)| (shift(z), q)));
        out.even_over.push(p.even_over[y]);
    }
    let mut hints = Planar::hints_from(&dirs);
    hints.retain(|h| h.crossing != k);
    for h in hints.iter_mut() {
        h.crossing = shift(h.crossing);
    }
    let oriented = out.to_diagram(&hints);
    let crossing = shift(index);
    let axis = CornerAxis::from_parity(oriented.slot_of_port(crossing, a));
    Ok(Contraction { diagram: oriented.diagram, crossing, axis })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Clasp {
    Positive,
    Negative,
}

/// How a double is assembled.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DoubleOptions {
    /// Signed number of full twists between the two parallel copies.
    pub full_twists: i32,
    pub clasp: Option<Clasp>,
    /// Put the twists inside the small square of a doubled crossing.
    pub hidden_twists: bool,
    /// Arc of the input whose parallel pair receives the twists and clasp; arc 1 if unset.
    pub site: Option<ArcLabel>,
}

impl DoubleOptions {
    pub fn flat(full_twists: i32) -> Self {
        Self { full_twists, clasp: None, hidden_twists: false, site: None }
    }

    pub fn whitehead(full_twists: i32, clasp: Clasp) -> Self {
        Self { full_twists, clasp: Some(clasp), hidden_twists: false, site: None }
    }
}

/// Flat double `D(K, n)`: the knot and its reversed blackboard parallel.
pub fn flat_double(d: &Diagram, full_twists: i32) -> Result<Diagram> {
    double(d, &DoubleOptions::flat(full_twists))
}

/// Whitehead double `W(K, n, ±)`.
pub fn whitehead_double(d: &Diagram, full_twists: i32, clasp: Clasp) -> Result<Diagram> {
    double(d, &DoubleOptions::whitehead(full_twists, clasp))
}

pub fn double(d: &Diagram, opts: &DoubleOptions) -> Result<Diagram> {
    if d.component_count() != 1 {
        return Err(Error::NotAKnot { components: d.component_count() });
    }
    double_any(d, opts)
}

/// Flat double of a link: every component is doubled, giving twice as many components.
pub fn flat_double_link(d: &Diagram, full_twists: i32) -> Result<Diagram> {
    double_any(d, &DoubleOptions::flat(full_twists))
}

fn double_any(d: &Diagram, opts: &DoubleOptions) -> Result<Diagram> {
    let report = d.validate();
    if !report.is_valid() {
        return Err(Error::InvalidDiagram(report));
    }
    let site = opts.site.unwrap_or(1);
    if site == 0 || site as usize > d.arc_count() {
        return Err(Error::NoSuchArc { arc: site });
    }
    if d.crossing_count() == 0 {
        if opts.full_twists != 0 || opts.clasp.is_some() {
            return Err(invalid("twists and clasps need a diagram with at least one crossing"));
        }
        return Ok(Diagram::unlink(2 * d.component_count()));
    }
    let ends = d.arc_ends();
    let twist_len = 2 * opts.full_twists.unsigned_abs() as usize;
    let twist_type = opts.full_twists > 0;
    let Some((tail_block, _)) = ends[site as usize].tail else {
        return Err(invalid(format!("arc {site} meets no crossing")));
    };

    let mut b = Builder::new();
    // blocks[x] = [LB, RB, LT, RT]
    let blocks: Vec<[usize; 4]> = (0..d.crossing_count())
        .map(|_| [b.crossing(false), b.crossing(false), b.crossing(false), b.crossing(false)])
        .collect();
    let mut hints = Vec::new();
    for blk in &blocks {
        let [lb, rb, lt, rt] = *blk;
        for (x, s0, s1) in [(lb, true, true), (rb, false, true), (lt, true, false), (rt, false, false)] {
            hints.push(Hint { crossing: x, strand: 0, forward: s0 });
            hints.push(Hint { crossing: x, strand: 1, forward: s1 });
        }
    }
    for (x, blk) in blocks.iter().enumerate() {
        let [lb, rb, lt, rt] = *blk;
        b.connect(End::Port(lb, E), End::Port(rb, W));
        b.connect(End::Port(lt, E), End::Port(rt, W));
        if opts.hidden_twists && x == tail_block {
            let c = chain(&mut b, twist_len, twist_type);
            b.connect(c.top[0], End::Port(lt, S));
            b.connect(c.top[1], End::Port(rt, S));
            b.connect(c.bottom[0], End::Port(lb, N));
            b.connect(c.bottom[1], End::Port(rb, N));
        } else {
            b.connect(End::Port(lb, N), End::Port(lt, S));
            b.connect(End::Port(rb, N), End::Port(rt, S));
        }
    }
    let side = |x: usize, p: usize| -> (End, End) {
        let [lb, rb, lt, rt] = blocks[x];
        match p as u8 {
            S => (End::Port(lb, S), End::Port(rb, S)),
            E => (End::Port(rb, E), End::Port(rt, E)),
            N => (End::Port(rt, N), End::Port(lt, N)),
            _ => (End::Port(lt, W), End::Port(lb, W)),
        }
    };
    for a in 1..=d.arc_count() {
        let Some((x, p)) = ends[a].tail else {
            for _ in 0..2 {
                let (u, w) = (b.point(), b.point());
                b.connect(u, w);
                b.connect(u, w);
            }
            continue;
        };
        let (y, q) = ends[a].head.unwrap();
        let (first_t, second_t) = side(x, p);
        let (first_h, second_h) = side(y, q);
        if a as ArcLabel != site {
            b.connect(first_t, second_h);
            b.connect(second_t, first_h);
            continue;
        }
        let (mut west, mut east) = (first_t, second_t);
        if !opts.hidden_twists {
            let c = chain(&mut b, twist_len, twist_type);
            b.connect(west, c.top[0]);
            b.connect(east, c.top[1]);
            [west, east] = c.bottom;
        }
        match opts.clasp {
            None => {
                b.connect(west, second_h);
                b.connect(east, first_h);
            }
            Some(clasp) => {
                let positive = clasp == Clasp::Positive;
                let c1 = b.crossing(positive);
                let c2 = b.crossing(!positive);
                b.connect(End::Port(c1, W), west);
                b.connect(End::Port(c1, E), End::Port(c2, W));
                b.connect(End::Port(c1, S), second_h);
                b.connect(End::Port(c1, N), End::Port(c2, N));
                b.connect(End::Port(c2, E), east);
                b.connect(End::Port(c2, S), first_h);
            }
        }
    }
    Ok(b.finish().to_diagram(&hints).diagram)
}

/// A move applied to a diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Move {
    /// [`half_to_full`] at `crossing` along a fixed corner axis.
    HalfToFull { crossing: usize, axis: CornerAxis },
}

impl Move {
    pub fn apply(&self, d: &Diagram) -> Result<Diagram> {
        match *self {
            Move::HalfToFull { crossing, axis } => half_to_full(d, crossing, TwistAxis::Fixed(axis)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeflationStep {
    /// The diagram after contracting one full twist.
    pub result: Diagram,
    /// The 4-plat word `result` is isomorphic to, when it is one.
    pub word: Option<Vec<u32>>,
    /// Undoes the step: applied to `result` it rebuilds the previous diagram.
    pub inverse: Move,
}

/// A chain of full-to-half contractions from a 4-plat down to the trefoil `(1, 1, 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeflationPath {
    pub word: Vec<u32>,
    pub start: Diagram,
    pub steps: Vec<DeflationStep>,
}

impl DeflationPath {
    pub fn end(&self) -> &Diagram {
        self.steps.last().map_or(&self.start, |s| &s.result)
    }
}

/// Crossing correspondence `a -> b` up to reversing components, if any.
pub fn isomorphism(a: &Diagram, b: &Diagram) -> Option<Vec<usize>> {
    if a.crossing_count() != b.crossing_count() || a.component_count() != b.component_count() {
        return None;
    }
    let cb = b.canonical_form();
    let mut inv = vec![0; b.crossing_count()];
    for (i, &c) in cb.crossing_map.iter().enumerate() {
        inv[c] = i;
    }
    let k = a.component_count().min(16);
    (0u32..(1 << k)).find_map(|mask| {
        let which: Vec<usize> = (0..k).filter(|i| mask >> i & 1 == 1).collect();
        let ca = a.reverse_components(&which).canonical_form();
        (ca.diagram == cb.diagram).then(|| ca.crossing_map.iter().map(|&c| inv[c]).collect())
    })
}

fn contractions(d: &Diagram) -> impl Iterator<Item = Contraction> + '_ {
    (0..d.crossing_count()).flat_map(move |i| (0..4u8).filter_map(move |a| full_to_half(d, i, a).ok()))
}

fn step(c: Contraction, word: Option<Vec<u32>>) -> DeflationStep {
    DeflationStep { inverse: Move::HalfToFull { crossing: c.crossing, axis: c.axis }, result: c.diagram, word }
}

/// Lowers each exponent to 1, then strips leading `σ2 σ1^-1` pairs, until
/// the word is `(1, 1, 1)`.
pub fn deflation_path(exponents: &[u32]) -> Result<DeflationPath> {
    let start = four_plat(exponents)?;
    if exponents.len() < 3 {
        return Err(invalid("the deflation path needs at least three syllables"));
    }
    let mut word = exponents.to_vec();
    let mut cur = start.clone();
    let mut steps = Vec::new();
    while word != [1, 1, 1] {
        if let Some(i) = word.iter().position(|&a| a > 1) {
            let mut next = word.clone();
            next[i] -= 1;
            let target = four_plat(&next)?;
            let found = contractions(&cur).find(|c| isomorphism(&c.diagram, &target).is_some());
            let c = found.ok_or_else(|| invalid(format!("no contraction of {word:?} reaches {next:?}")))?;
            cur = c.diagram.clone();
            steps.push(step(c, Some(next.clone())));
            word = next;
        } else {
            let next = vec![1; word.len() - 2];
            let target = four_plat(&next)?;
            let found = contractions(&cur).find_map(|c1| {
                let c2 = contractions(&c1.diagram).find(|c2| isomorphism(&c2.diagram, &target).is_some());
                c2.map(|c2| (c1, c2))
            });
            let (c1, c2) = found.ok_or_else(|| invalid(format!("no block removal takes {word:?} to {next:?}")))?;
            steps.push(step(c1, None));
            cur = c2.diagram.clone();
            steps.push(step(c2, Some(next.clone())));
            word = next;
        }
    }
    Ok(DeflationPath { word: exponents.to_vec(), start, steps })
}

/// Runs a deflation path backwards from its end, undoing each contraction.
/// Returns the rebuilt diagram, which is isomorphic to `path.start`.
pub fn replay(path: &DeflationPath) -> Result<Diagram> {
    let mut d = path.end().clone();
    for k in (0..path.steps.len()).rev() {
        let step = &path.steps[k];
        let map = isomorphism(&step.result, &d)
            .ok_or_else(|| invalid(format!("replay diverged before undoing step {k}")))?;
        let Move::HalfToFull { crossing, axis } = step.inverse;
        d = half_to_full(&d, map[crossing], TwistAxis::Fixed(axis))?;
    }
    if isomorphism(&d, &path.start).is_none() {
        return Err(invalid("replayed diagram differs from the starting 4-plat"));
    }
    Ok(d)
}
