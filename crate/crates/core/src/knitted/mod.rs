//! Knitted diagrams: braid boxes joined by crossing-free wires.
//!
//! A [`KnittedTemplate`] records only the boxes and a perfect matching of box
//! outputs to box inputs; the plane embedding is implied by the cyclic port
//! order of each box (inputs left to right along the bottom, outputs right to
//! left along the top, counterclockwise) and checked for genus zero. A
//! [`KnittedDiagram`] fills the boxes with braid words.

mod bipartite;
mod eval;
mod json;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

pub use bipartite::{from_bipartite_graph, BipartiteKnitting, PlaneGraph};
pub use eval::{eval_hecke, eval_hecke_with, extreme_minus_fast, verify_theorem, verify_theorem_with, TheoremReport};
pub use json::KnittedJson;

use crate::braid::{full_twist_word, BraidWord};
use crate::diagram::{DiagramBuilder, PlanarDiagram};
use crate::error::{Error, Result};

/// A box port: `(box index, strand position)`, positions counted left to
/// right with the strands running upward.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Port {
    pub boxed: usize,
    pub pos: usize,
}

impl Port {
    pub fn new(boxed: usize, pos: usize) -> Self {
        Self { boxed, pos }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnittedTemplate {
    boxes: Vec<usize>,
    // output port -> input port
    wiring: BTreeMap<Port, Port>,
}

impl KnittedTemplate {
    /// Builds a template from box strand counts and `(output, input)` wires.
    /// The wires must match every output with exactly one input.
    pub fn new(boxes: Vec<usize>, wires: impl IntoIterator<Item = (Port, Port)>) -> Result<Self> {
        if boxes.is_empty() {
            return Err(Error::InvalidTemplate("no boxes".into()));
        }
        if let Some(k) = boxes.iter().position(|&n| n == 0) {
            return Err(Error::InvalidTemplate(format!("box {k} has no strands")));
        }
        let exists = |p: &Port| p.boxed < boxes.len() && p.pos < boxes[p.boxed];
        let mut wiring = BTreeMap::new();
        let mut used_inputs = BTreeSet::new();
        for (out, inp) in wires {
            if !exists(&out) {
                return Err(Error::InvalidTemplate(format!("no such output b{}.out{}", out.boxed, out.pos)));
            }
            if !exists(&inp) {
                return Err(Error::InvalidTemplate(format!("no such input b{}.in{}", inp.boxed, inp.pos)));
            }
            if wiring.insert(out, inp).is_some() {
                return Err(Error::InvalidTemplate(format!("output b{}.out{} wired twice", out.boxed, out.pos)));
            }
            if !used_inputs.insert(inp) {
                return Err(Error::InvalidTemplate(format!("input b{}.in{} wired twice", inp.boxed, inp.pos)));
            }
        }
        for (b, &n) in boxes.iter().enumerate() {
            for pos in 0..n {
                if !wiring.contains_key(&Port::new(b, pos)) {
                    return Err(Error::InvalidTemplate(format!("output b{b}.out{pos} is not wired")));
                }
            }
        }
        Ok(Self { boxes, wiring })
    }

    /// The closed-braid template: one box, strand `p` wired back to itself.
    pub fn braid_closure(n: usize) -> Self {
        Self::new(vec![n], (0..n).map(|p| (Port::new(0, p), Port::new(0, p))))
            .expect("braid closure wiring is a matching")
    }

    pub fn boxes(&self) -> &[usize] {
        &self.boxes
    }

    pub fn box_count(&self) -> usize {
        self.boxes.len()
    }

    /// `(output, input)` pairs in output order.
    pub fn wires(&self) -> impl Iterator<Item = (Port, Port)> + '_ {
        self.wiring.iter().map(|(o, i)| (*o, *i))
    }

    pub fn disjoint_union(&self, other: &KnittedTemplate) -> KnittedTemplate {
        let shift = self.boxes.len();
        let mut boxes = self.boxes.clone();
        boxes.extend_from_slice(&other.boxes);
        let wires = self.wires().chain(other.wires().map(|(o, i)| {
            (Port::new(o.boxed + shift, o.pos), Port::new(i.boxed + shift, i.pos))
        }));
        KnittedTemplate::new(boxes, wires).expect("union of matchings is a matching")
    }

    /// Seifert circles with every box filled by the trivial braid, each as the
    /// sequence of ports it passes through.
    pub fn circles(&self) -> Vec<Vec<Port>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for &start in self.wiring.keys() {
            if seen.contains(&start) {
                continue;
            }
            let mut circle = Vec::new();
            let mut p = start;
            while seen.insert(p) {
                circle.push(p);
                p = self.wiring[&p];
            }
            out.push(circle);
        }
        out
    }

    pub fn seifert_count(&self) -> usize {
        self.circles().len()
    }

    /// Genus-zero check of the ribbon graph with one vertex per box.
    pub fn is_planar(&self) -> bool {
        // darts of box b: offset[b] + k for k in 0..2n, counterclockwise:
        // in_0 .. in_{n-1}, out_{n-1} .. out_0
        let mut offset = Vec::with_capacity(self.boxes.len());
        let mut total = 0;
        for &n in &self.boxes {
            offset.push(total);
            total += 2 * n;
        }
        let in_dart = |p: Port| offset[p.boxed] + p.pos;
        let out_dart = |p: Port| offset[p.boxed] + 2 * self.boxes[p.boxed] - 1 - p.pos;
        let mut alpha = vec![0; total];
        for (o, i) in self.wires() {
            alpha[out_dart(o)] = in_dart(i);
            alpha[in_dart(i)] = out_dart(o);
        }
        let box_of = |d: usize| offset.partition_point(|&x| x <= d) - 1;
        let sigma = |d: usize| {
            let b = box_of(d);
            let deg = 2 * self.boxes[b];
            offset[b] + (d - offset[b] + 1) % deg
        };
        let mut seen = vec![false; total];
        let mut faces = 0;
        for d in 0..total {
            if seen[d] {
                continue;
            }
            faces += 1;
            let mut cur = d;
            while !seen[cur] {
                seen[cur] = true;
                cur = sigma(alpha[cur]);
            }
        }
        let vertices = self.boxes.len();
        let edges = total / 2;
        faces + vertices == edges + 2 * self.box_components()
    }

    fn box_components(&self) -> usize {
        let mut parent: Vec<usize> = (0..self.boxes.len()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for (o, i) in self.wires() {
            let (a, b) = (find(&mut parent, o.boxed), find(&mut parent, i.boxed));
            parent[a] = b;
        }
        (0..self.boxes.len()).filter(|&b| find(&mut parent, b) == b).count()
    }

    /// Checks the knitting-pattern conditions. Failures are reported, not
    /// raised.
    pub fn validate(&self) -> ValidationReport {
        let mut failures = Vec::new();
        if !self.is_planar() {
            failures.push(ValidationFailure::NonPlanar);
        }
        let circles = self.circles();
        let mut boxes_of: Vec<BTreeSet<usize>> = Vec::with_capacity(circles.len());
        for (c, circle) in circles.iter().enumerate() {
            let mut boxes = BTreeSet::new();
            for p in circle {
                if !boxes.insert(p.boxed) {
                    failures.push(ValidationFailure::CircleRevisitsBox { circle: c, boxed: p.boxed });
                }
            }
            boxes_of.push(boxes);
        }
        for a in 0..circles.len() {
            for b in a + 1..circles.len() {
                let shared: Vec<usize> = boxes_of[a].intersection(&boxes_of[b]).copied().collect();
                if shared.len() >= 2 {
                    failures.push(ValidationFailure::SharedBoxes { circles: (a, b), boxes: shared });
                }
            }
        }
        ValidationReport { failures }
    }

    pub fn ensure_valid(&self) -> Result<()> {
        let report = self.validate();
        if report.is_valid() {
            Ok(())
        } else {
            Err(Error::InvalidTemplate(report.to_string()))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ValidationFailure {
    /// The wiring cannot be drawn in the plane without crossings.
    NonPlanar,
    /// A Seifert circle passes through the same box twice.
    CircleRevisitsBox { circle: usize, boxed: usize },
    /// Two Seifert circles pass through two or more common boxes.
    SharedBoxes { circles: (usize, usize), boxes: Vec<usize> },
}

impl fmt::Display for ValidationFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValidationFailure::NonPlanar => write!(f, "wiring is not planar"),
            ValidationFailure::CircleRevisitsBox { circle, boxed } => {
                write!(f, "circle {circle} passes through box {boxed} more than once")
            }
            ValidationFailure::SharedBoxes { circles, boxes } => {
                write!(f, "circles {} and {} share boxes {:?}", circles.0, circles.1, boxes)
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub failures: Vec<ValidationFailure>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.failures.is_empty() {
            return write!(f, "valid");
        }
        let parts: Vec<String> = self.failures.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join("; "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnittedDiagram {
    template: KnittedTemplate,
    words: Vec<BraidWord>,
}

impl KnittedDiagram {
    pub fn new(template: KnittedTemplate, words: Vec<BraidWord>) -> Result<Self> {
        if words.len() != template.box_count() {
            return Err(Error::InvalidTemplate(format!(
                "{} words for {} boxes",
                words.len(),
                template.box_count()
            )));
        }
        for (k, (w, &n)) in words.iter().zip(template.boxes()).enumerate() {
            if w.strands() != n {
                return Err(Error::InvalidTemplate(format!(
                    "word for box {k} has {} strands, box has {n}",
                    w.strands()
                )));
            }
        }
        Ok(Self { template, words })
    }

    /// Every box filled with the trivial braid.
    pub fn trivial(template: KnittedTemplate) -> Self {
        let words = template.boxes().iter().map(|&n| BraidWord::identity(n)).collect();
        Self { template, words }
    }

    pub fn braid_closure(word: &BraidWord) -> Self {
        Self {
            template: KnittedTemplate::braid_closure(word.strands()),
            words: vec![word.clone()],
        }
    }

    pub fn template(&self) -> &KnittedTemplate {
        &self.template
    }

    pub fn words(&self) -> &[BraidWord] {
        &self.words
    }

    pub fn seifert_count(&self) -> usize {
        self.template.seifert_count()
    }

    pub fn writhe(&self) -> i64 {
        self.words.iter().map(|w| w.writhe()).sum()
    }

    /// Same template, new box contents.
    pub fn replace_words(&self, words: Vec<BraidWord>) -> Result<Self> {
        Self::new(self.template.clone(), words)
    }

    /// The PD code of the knitted diagram.
    pub fn compile(&self) -> Result<PlanarDiagram> {
        self.template.ensure_valid()?;
        Ok(self.compile_unchecked())
    }

    /// Compiles without re-validating the template; the caller vouches for
    /// it (templates built by this crate's samplers are validated on
    /// construction).
    pub(crate) fn compile_unchecked(&self) -> PlanarDiagram {
        let mut b = DiagramBuilder::new();
        let ends: Vec<_> = self.words.iter().map(|w| b.add_braid(w)).collect();
        for (o, i) in self.template.wires() {
            b.join(ends[o.boxed].1[o.pos], ends[i.boxed].0[i.pos]);
        }
        b.finish().expect("a perfect matching closes every strand")
    }

    /// A positive full twist prefixed to every box.
    pub fn ft(&self) -> KnittedDiagram {
        let words = self
            .words
            .iter()
            .map(|w| full_twist_word(w.strands()).concat(w).expect("same strand count"))
            .collect();
        Self { template: self.template.clone(), words }
    }
}
