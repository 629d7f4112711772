use std::collections::HashMap;

use super::{ArcId, Crossing, PlanarDiagram};
use crate::braid::BraidWord;
use crate::error::Result;

/// A strand piece that has not yet been merged into an arc.
pub type Segment = usize;

/// Assembles a PD code from braid pieces and crossing-free wires.
///
/// Each braid contributes crossings over fresh segments; [`join`] glues an
/// outgoing segment to an incoming one. [`finish`] merges glued segments
/// into arcs and turns crossing-free closed classes into free loops.
///
/// Within a braid, strand positions are numbered left to right as seen with
/// the strands running upward. A positive letter `σ_i` carries the strand at
/// position `i` over to position `i+1`; a negative letter carries the strand
/// at position `i+1` over to position `i`.
///
/// [`join`]: DiagramBuilder::join
/// [`finish`]: DiagramBuilder::finish
#[derive(Debug, Default)]
pub struct DiagramBuilder {
    parent: Vec<Segment>,
    crossings: Vec<[Segment; 4]>,
    signs: Vec<i8>,
}

impl DiagramBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    fn fresh(&mut self) -> Segment {
        self.parent.push(self.parent.len());
        self.parent.len() - 1
    }

    fn find(&mut self, mut x: Segment) -> Segment {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Adds the crossings of `word`; returns the incoming and outgoing
    /// segment at each strand position.
    pub fn add_braid(&mut self, word: &BraidWord) -> (Vec<Segment>, Vec<Segment>) {
        let ins: Vec<Segment> = (0..word.strands()).map(|_| self.fresh()).collect();
        let mut cur = ins.clone();
        for &g in word.letters() {
            let left = g.unsigned_abs() as usize - 1;
            let right = left + 1;
            let (l_out, r_out) = (self.fresh(), self.fresh());
            // [under_in, over_in, under_out, over_out]
            let ports = if g > 0 {
                [cur[right], cur[left], l_out, r_out]
            } else {
                [cur[left], cur[right], r_out, l_out]
            };
            self.crossings.push(ports);
            self.signs.push(if g > 0 { 1 } else { -1 });
            cur[left] = l_out;
            cur[right] = r_out;
        }
        (ins, cur)
    }

    pub fn join(&mut self, out: Segment, into: Segment) {
        let (a, b) = (self.find(out), self.find(into));
        if a != b {
            self.parent[a.max(b)] = a.min(b);
        }
    }

    /// Arcs are numbered from 1 in order of first appearance along the
    /// crossing list.
    pub fn finish(mut self) -> Result<PlanarDiagram> {
        let mut ids: HashMap<Segment, ArcId> = HashMap::new();
        let mut crossings = Vec::with_capacity(self.crossings.len());
        let raw = std::mem::take(&mut self.crossings);
        let signs = std::mem::take(&mut self.signs);
        for (ports, sign) in raw.iter().zip(&signs) {
            let mut arcs = [0 as ArcId; 4];
            for (slot, &seg) in ports.iter().enumerate() {
                let root = self.find(seg);
                let next = ids.len() as ArcId + 1;
                arcs[slot] = *ids.entry(root).or_insert(next);
            }
            crossings.push(Crossing::new(*sign, arcs[0], arcs[1], arcs[2], arcs[3]));
        }
        let mut roots = std::collections::HashSet::new();
        for s in 0..self.parent.len() {
            let r = self.find(s);
            roots.insert(r);
        }
        let free_loops = roots.iter().filter(|r| !ids.contains_key(r)).count();
        PlanarDiagram::new(crossings, free_loops)
    }
}
