//! Canonical relabelling of PD diagrams.

use alloc::vec;
use alloc::vec::Vec;

use crate::diagram::{ArcLabel, Canonical, Crossing, Diagram};

struct Labelled {
    key: (Vec<usize>, Vec<Crossing>),
    crossing_order: Vec<usize>,
}

/// Relabels one projection piece starting from arc `start`.
fn label_from(d: &Diagram, start: ArcLabel, succ: &[ArcLabel], ends: &[crate::diagram::ArcEnds]) -> Labelled {
    let n = succ.len() - 1;
    let mut new_label = vec![0 as ArcLabel; n + 1];
    let mut next: ArcLabel = 1;
    let mut comp_lens = Vec::new();
    let mut crossing_seen = vec![false; d.crossing_count()];
    let mut crossing_order: Vec<usize> = Vec::new();
    let mut pending = vec![start];
    let mut cursor = 0;
    loop {
        let Some(s) = pending.pop() else {
            // continue from the earliest crossing with an unlabelled strand
            let mut found = None;
            while cursor < crossing_order.len() && found.is_none() {
                let x = &d.crossings()[crossing_order[cursor]];
                for slot in [0, x.over_in_slot()] {
                    let a = x.slots[slot];
                    if new_label[a as usize] == 0 {
                        found = Some(a);
                        break;
                    }
                }
                if found.is_none() {
                    cursor += 1;
                }
            }
            match found {
                Some(a) => {
                    pending.push(a);
                    continue;
                }
                None => break,
            }
        };
        let mut a = s;
        let mut len = 0;
        while new_label[a as usize] == 0 {
            new_label[a as usize] = next;
            next += 1;
            len += 1;
            if let Some((xi, _)) = ends[a as usize].head {
                if !crossing_seen[xi] {
                    crossing_seen[xi] = true;
                    crossing_order.push(xi);
                }
            }
            a = succ[a as usize];
        }
        comp_lens.push(len);
    }
    let mut crossings: Vec<Crossing> = crossing_order
        .iter()
        .map(|&xi| {
            let mut x = d.crossings()[xi];
            for a in x.slots.iter_mut() {
                *a = new_label[*a as usize];
            }
            x
        })
        .collect();
    let mut perm: Vec<usize> = (0..crossings.len()).collect();
    perm.sort_by_key(|&i| crossings[i]);
    let sorted_order = perm.iter().map(|&i| crossing_order[i]).collect();
    crossings.sort();
    Labelled { key: (comp_lens, crossings), crossing_order: sorted_order }
}

pub(crate) fn canonical_diagram(d: &Diagram) -> Canonical {
    let succ = {
        let mut s = vec![0; d.arc_count() + 1];
        for comp in d.components() {
            for (i, &a) in comp.iter().enumerate() {
                s[a as usize] = comp[(i + 1) % comp.len()];
            }
        }
        s
    };
    let ends = d.arc_ends();
    let mut done = vec![false; d.arc_count() + 1];
    let mut pieces: Vec<Labelled> = Vec::new();
    for comp in d.components() {
        if done[comp[0] as usize] || ends[comp[0] as usize].head.is_none() {
            continue;
        }
        // every arc reachable from this component belongs to the same piece
        let probe = label_from(d, comp[0], &succ, &ends);
        let mut piece_arcs = Vec::new();
        for &xi in &probe.crossing_order {
            piece_arcs.extend(d.crossings()[xi].slots);
        }
        piece_arcs.sort_unstable();
        piece_arcs.dedup();
        let mut best: Option<Labelled> = None;
        for &a in &piece_arcs {
            done[a as usize] = true;
            let cand = label_from(d, a, &succ, &ends);
            if best.as_ref().is_none_or(|b| cand.key < b.key) {
                best = Some(cand);
            }
        }
        pieces.push(best.unwrap());
    }
    pieces.sort_by(|a, b| a.key.cmp(&b.key));

    let mut crossings = Vec::new();
    let mut components = Vec::new();
    let mut crossing_map = vec![0; d.crossing_count()];
    let mut offset: ArcLabel = 0;
    for piece in pieces {
        let (lens, xs) = piece.key;
        for (k, &orig) in piece.crossing_order.iter().enumerate() {
            crossing_map[orig] = crossings.len() + k;
        }
        crossings.extend(xs.into_iter().map(|mut x| {
            for a in x.slots.iter_mut() {
                *a += offset;
            }
            x
        }));
        for len in lens {
            components.push((offset + 1..=offset + len as ArcLabel).collect());
            offset += len as ArcLabel;
        }
    }
    for _ in 0..d.free_loop_count() {
        offset += 1;
        components.push(vec![offset]);
    }
    Canonical { diagram: Diagram::from_parts_unchecked(crossings, components), crossing_map }
}
