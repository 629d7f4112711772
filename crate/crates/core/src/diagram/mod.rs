//! Oriented planar link diagrams as PD codes.
//!
//! A crossing lists its four arcs as `(under_in, over_in, under_out,
//! over_out)` together with an explicit sign. The cyclic order of the ports
//! around a crossing is fixed by the sign: `(under_in, over_in, under_out,
//! over_out)` counterclockwise for a positive crossing, the mirrored order for
//! a negative one. That rotation system is what [`PlanarDiagram::is_planar`]
//! checks.
//!
//! Orientation-respecting smoothing joins `under_in -> over_out` and
//! `over_in -> under_out` at every crossing, whatever its sign.

mod builder;
mod pd;

use std::collections::{BTreeMap, HashMap};

pub use builder::DiagramBuilder;

use crate::braid::BraidWord;
use crate::error::{Error, Result};

pub type ArcId = u32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Crossing {
    pub sign: i8,
    pub under_in: ArcId,
    pub over_in: ArcId,
    pub under_out: ArcId,
    pub over_out: ArcId,
}

impl Crossing {
    pub fn new(sign: i8, under_in: ArcId, over_in: ArcId, under_out: ArcId, over_out: ArcId) -> Self {
        Self { sign, under_in, over_in, under_out, over_out }
    }

    /// Ports in counterclockwise order.
    fn rotation(&self) -> [(ArcId, bool); 4] {
        // (arc, is_input)
        if self.sign > 0 {
            [
                (self.under_in, true),
                (self.over_in, true),
                (self.under_out, false),
                (self.over_out, false),
            ]
        } else {
            [
                (self.under_in, true),
                (self.over_out, false),
                (self.under_out, false),
                (self.over_in, true),
            ]
        }
    }

    /// The same crossing with over and under exchanged.
    pub fn switched(&self) -> Crossing {
        Crossing {
            sign: -self.sign,
            under_in: self.over_in,
            over_in: self.under_in,
            under_out: self.over_out,
            over_out: self.under_out,
        }
    }
}

/// Which strand of a crossing an arc end belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strand {
    Under,
    Over,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlanarDiagram {
    crossings: Vec<Crossing>,
    free_loops: usize,
}

/// Where an arc starts and ends.
#[derive(Clone, Copy, Debug)]
pub(crate) struct ArcEnds {
    /// crossing index the arc leaves, and on which strand
    pub from: (usize, Strand),
    /// crossing index the arc enters, and on which strand
    pub to: (usize, Strand),
}

impl PlanarDiagram {
    /// Validates the closed-diagram invariant: every arc is an input port
    /// exactly once and an output port exactly once.
    pub fn new(crossings: Vec<Crossing>, free_loops: usize) -> Result<Self> {
        let d = Self { crossings, free_loops };
        d.validate()?;
        Ok(d)
    }

    pub(crate) fn from_parts_unchecked(crossings: Vec<Crossing>, free_loops: usize) -> Self {
        Self { crossings, free_loops }
    }

    fn validate(&self) -> Result<()> {
        if self.crossings.is_empty() && self.free_loops == 0 {
            return Err(Error::InvalidDiagram("empty diagram".into()));
        }
        let mut ins: HashMap<ArcId, usize> = HashMap::new();
        let mut outs: HashMap<ArcId, usize> = HashMap::new();
        for (k, c) in self.crossings.iter().enumerate() {
            if c.sign != 1 && c.sign != -1 {
                return Err(Error::InvalidDiagram(format!("crossing {k} has sign {}", c.sign)));
            }
            for a in [c.under_in, c.over_in] {
                if ins.insert(a, k).is_some() {
                    return Err(Error::InvalidDiagram(format!("arc {a} enters two crossings")));
                }
            }
            for a in [c.under_out, c.over_out] {
                if outs.insert(a, k).is_some() {
                    return Err(Error::InvalidDiagram(format!("arc {a} leaves two crossings")));
                }
            }
        }
        for a in ins.keys() {
            if !outs.contains_key(a) {
                return Err(Error::InvalidDiagram(format!("arc {a} never leaves a crossing")));
            }
        }
        for a in outs.keys() {
            if !ins.contains_key(a) {
                return Err(Error::InvalidDiagram(format!("arc {a} never enters a crossing")));
            }
        }
        Ok(())
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    /// Arc identifiers in ascending order.
    pub fn arcs(&self) -> Vec<ArcId> {
        let mut arcs: Vec<ArcId> =
            self.crossings.iter().flat_map(|c| [c.under_out, c.over_out]).collect();
        arcs.sort_unstable();
        arcs
    }

    pub(crate) fn arc_ends(&self) -> HashMap<ArcId, ArcEnds> {
        let mut from = HashMap::with_capacity(self.crossings.len() * 2);
        let mut to = HashMap::with_capacity(self.crossings.len() * 2);
        for (k, c) in self.crossings.iter().enumerate() {
            from.insert(c.under_out, (k, Strand::Under));
            from.insert(c.over_out, (k, Strand::Over));
            to.insert(c.under_in, (k, Strand::Under));
            to.insert(c.over_in, (k, Strand::Over));
        }
        from.into_iter().map(|(a, f)| (a, ArcEnds { from: f, to: to[&a] })).collect()
    }

    /// Closure of a braid word, strand `p` at the top wired back to strand `p`
    /// at the bottom.
    pub fn braid_closure(word: &BraidWord) -> PlanarDiagram {
        let mut b = DiagramBuilder::new();
        let (ins, outs) = b.add_braid(word);
        for (o, i) in outs.into_iter().zip(ins) {
            b.join(o, i);
        }
        b.finish().expect("braid closure is a closed diagram")
    }

    /// Sum of crossing signs.
    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign as i64).sum()
    }

    /// Number of link components, free loops included.
    pub fn component_count(&self) -> usize {
        let ends = self.arc_ends();
        let next = |a: ArcId| -> ArcId {
            let (k, strand) = ends[&a].to;
            let c = &self.crossings[k];
            match strand {
                Strand::Under => c.under_out,
                Strand::Over => c.over_out,
            }
        };
        count_orbits(self.arcs(), next) + self.free_loops
    }

    /// Seifert circles: the count (free loops included) and the circle each
    /// arc lies on. Free loops take the highest circle ids.
    pub fn seifert_circles(&self) -> SeifertCircles {
        let ends = self.arc_ends();
        let next = |a: ArcId| -> ArcId {
            let (k, strand) = ends[&a].to;
            let c = &self.crossings[k];
            match strand {
                Strand::Under => c.over_out,
                Strand::Over => c.under_out,
            }
        };
        let mut assignment = BTreeMap::new();
        let mut count = 0;
        for a in self.arcs() {
            if assignment.contains_key(&a) {
                continue;
            }
            let mut cur = a;
            while !assignment.contains_key(&cur) {
                assignment.insert(cur, count);
                cur = next(cur);
            }
            count += 1;
        }
        SeifertCircles { count: count + self.free_loops, assignment }
    }

    pub fn seifert_graph(&self) -> SeifertGraph {
        let circles = self.seifert_circles();
        let edges = self
            .crossings
            .iter()
            .map(|c| SeifertEdge {
                a: circles.assignment[&c.under_in],
                b: circles.assignment[&c.over_in],
                sign: c.sign,
            })
            .collect();
        SeifertGraph { vertices: circles.count, edges }
    }

    /// Genus-zero check of the ribbon graph given by the port rotation at each
    /// crossing: `V - E + F = 2` on every connected piece.
    pub fn is_planar(&self) -> bool {
        let n = self.crossings.len();
        if n == 0 {
            return true;
        }
        // darts 4k..4k+4 are the ports of crossing k in rotation order
        let mut in_dart = HashMap::new();
        let mut out_dart = HashMap::new();
        for (k, c) in self.crossings.iter().enumerate() {
            for (slot, (arc, is_in)) in c.rotation().into_iter().enumerate() {
                let d = 4 * k + slot;
                if is_in {
                    in_dart.insert(arc, d);
                } else {
                    out_dart.insert(arc, d);
                }
            }
        }
        let mut alpha = vec![0usize; 4 * n];
        for (arc, &d_in) in &in_dart {
            let d_out = out_dart[arc];
            alpha[d_in] = d_out;
            alpha[d_out] = d_in;
        }
        let sigma = |d: usize| 4 * (d / 4) + (d % 4 + 1) % 4;
        let faces = count_orbits(0..4 * n, |d| sigma(alpha[d]));
        let pieces = self.pieces().len();
        // V - E + F = 2 per piece, with E = 2V
        faces == n + 2 * pieces
    }

    /// Crossing indices grouped by connected piece of the crossing graph,
    /// each group sorted, groups ordered by smallest member.
    pub fn pieces(&self) -> Vec<Vec<usize>> {
        let n = self.crossings.len();
        let ends = self.arc_ends();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for e in ends.values() {
            let (a, b) = (find(&mut parent, e.from.0), find(&mut parent, e.to.0));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for k in 0..n {
            let r = find(&mut parent, k);
            groups.entry(r).or_default().push(k);
        }
        groups.into_values().collect()
    }

    /// Sub-diagram made of the given crossings, no free loops.
    pub(crate) fn sub_diagram(&self, crossings: &[usize]) -> PlanarDiagram {
        PlanarDiagram::from_parts_unchecked(
            crossings.iter().map(|&k| self.crossings[k]).collect(),
            0,
        )
    }

    /// Exchanges over and under at crossing `k`.
    pub fn switch(&self, k: usize) -> PlanarDiagram {
        let mut crossings = self.crossings.clone();
        crossings[k] = crossings[k].switched();
        PlanarDiagram::from_parts_unchecked(crossings, self.free_loops)
    }

    /// Oriented smoothing of crossing `k`.
    pub fn smooth(&self, k: usize) -> PlanarDiagram {
        let c = self.crossings[k];
        let mut crossings: Vec<Crossing> =
            self.crossings.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, c)| *c).collect();
        let mut loops = self.free_loops;
        let mut pairs = [(c.under_in, c.over_out), (c.over_in, c.under_out)];
        for p in 0..2 {
            let (keep, gone) = pairs[p];
            if keep == gone {
                loops += 1;
                continue;
            }
            let rename = |a: &mut ArcId| {
                if *a == gone {
                    *a = keep;
                }
            };
            for x in crossings.iter_mut() {
                rename(&mut x.under_in);
                rename(&mut x.over_in);
                rename(&mut x.under_out);
                rename(&mut x.over_out);
            }
            if p == 0 {
                rename(&mut pairs[1].0);
                rename(&mut pairs[1].1);
            }
        }
        PlanarDiagram::from_parts_unchecked(crossings, loops)
    }

    /// A labelling-independent key for a connected diagram without free
    /// loops: the lexicographically smallest relabelled crossing list over all
    /// traversal start arcs.
    pub fn canonical_key(&self) -> Vec<Crossing> {
        let ends = self.arc_ends();
        let mut best: Option<Vec<Crossing>> = None;
        for start in self.arcs() {
            let cand = self.relabel_from(start, &ends);
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
        best.unwrap_or_default()
    }

    fn relabel_from(&self, start: ArcId, ends: &HashMap<ArcId, ArcEnds>) -> Vec<Crossing> {
        let mut label: HashMap<ArcId, ArcId> = HashMap::with_capacity(ends.len());
        let mut order: Vec<usize> = Vec::with_capacity(self.crossings.len());
        let mut seen = vec![false; self.crossings.len()];
        let mut next_label: ArcId = 0;
        let mut pending = vec![start];
        let mut scan = 0;
        loop {
            let Some(first) = pending.pop() else {
                // pick up the next unvisited strand at the earliest discovered crossing
                let mut found = None;
                while scan < order.len() {
                    let c = &self.crossings[order[scan]];
                    if let Some(a) = [c.under_in, c.over_in].into_iter().find(|a| !label.contains_key(a)) {
                        found = Some(a);
                        break;
                    }
                    scan += 1;
                }
                match found {
                    Some(a) => {
                        pending.push(a);
                        continue;
                    }
                    None => break,
                }
            };
            let mut a = first;
            while !label.contains_key(&a) {
                label.insert(a, next_label);
                next_label += 1;
                let (k, strand) = ends[&a].to;
                if !seen[k] {
                    seen[k] = true;
                    order.push(k);
                }
                let c = &self.crossings[k];
                a = match strand {
                    Strand::Under => c.under_out,
                    Strand::Over => c.over_out,
                };
            }
        }
        order
            .iter()
            .map(|&k| {
                let c = &self.crossings[k];
                Crossing::new(c.sign, label[&c.under_in], label[&c.over_in], label[&c.under_out], label[&c.over_out])
            })
            .collect()
    }

    /// Relabels arcs `1..=m` in ascending order of their current ids.
    pub fn compact(&self) -> PlanarDiagram {
        let map: HashMap<ArcId, ArcId> =
            self.arcs().into_iter().enumerate().map(|(k, a)| (a, k as ArcId + 1)).collect();
        let crossings = self
            .crossings
            .iter()
            .map(|c| Crossing::new(c.sign, map[&c.under_in], map[&c.over_in], map[&c.under_out], map[&c.over_out]))
            .collect();
        PlanarDiagram::from_parts_unchecked(crossings, self.free_loops)
    }

    /// Disjoint union; arcs of `other` are shifted past those of `self`.
    pub fn disjoint_union(&self, other: &PlanarDiagram) -> PlanarDiagram {
        let shift = self.arcs().last().copied().unwrap_or(0);
        let mut crossings = self.crossings.clone();
        crossings.extend(other.crossings.iter().map(|c| {
            Crossing::new(c.sign, c.under_in + shift, c.over_in + shift, c.under_out + shift, c.over_out + shift)
        }));
        PlanarDiagram::from_parts_unchecked(crossings, self.free_loops + other.free_loops)
    }
}

fn count_orbits<T, I>(items: I, next: impl Fn(T) -> T) -> usize
where
    T: Copy + Eq + std::hash::Hash,
    I: IntoIterator<Item = T>,
{
    let mut seen = std::collections::HashSet::new();
    let mut orbits = 0;
    for x in items {
        if seen.contains(&x) {
            continue;
        }
        orbits += 1;
        let mut cur = x;
        while seen.insert(cur) {
            cur = next(cur);
        }
    }
    orbits
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeifertCircles {
    pub count: usize,
    pub assignment: BTreeMap<ArcId, usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SeifertEdge {
    pub a: usize,
    pub b: usize,
    pub sign: i8,
}

/// One vertex per Seifert circle, one signed edge per crossing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeifertGraph {
    pub vertices: usize,
    pub edges: Vec<SeifertEdge>,
}

impl SeifertGraph {
    /// Edges grouped by unordered vertex pair.
    pub fn multiplicities(&self) -> BTreeMap<(usize, usize), Vec<i8>> {
        let mut out: BTreeMap<(usize, usize), Vec<i8>> = BTreeMap::new();
        for e in &self.edges {
            out.entry((e.a.min(e.b), e.a.max(e.b))).or_default().push(e.sign);
        }
        out
    }
}
