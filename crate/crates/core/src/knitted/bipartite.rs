use std::collections::{BTreeSet, VecDeque};

use super::{KnittedDiagram, KnittedTemplate, Port};
use crate::braid::BraidWord;
use crate::error::{Error, Result};

/// A plane graph given by its rotation system: `rotation[v]` lists the
/// neighbours of `v` in counterclockwise order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneGraph {
    pub rotation: Vec<Vec<usize>>,
}

impl PlaneGraph {
    pub fn new(rotation: Vec<Vec<usize>>) -> Self {
        Self { rotation }
    }

    /// Rotation system read off straight-line vertex positions.
    pub fn from_positions(points: &[(f64, f64)], edges: &[(usize, usize)]) -> Self {
        let mut rotation = vec![Vec::new(); points.len()];
        for &(a, b) in edges {
            rotation[a].push(b);
            rotation[b].push(a);
        }
        for (v, nbrs) in rotation.iter_mut().enumerate() {
            let (x, y) = points[v];
            nbrs.sort_by(|&a, &b| {
                let ta = (points[a].1 - y).atan2(points[a].0 - x);
                let tb = (points[b].1 - y).atan2(points[b].0 - x);
                ta.total_cmp(&tb)
            });
        }
        Self { rotation }
    }

    pub fn vertex_count(&self) -> usize {
        self.rotation.len()
    }
}

/// The knitted template of a plane bipartite graph, with the edge behind
/// each box.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteKnitting {
    pub template: KnittedTemplate,
    /// `(u, w)` per box: `u` on the counterclockwise side (box position 0),
    /// `w` on the clockwise side (position 1).
    pub edges: Vec<(usize, usize)>,
}

impl BipartiteKnitting {
    /// Fills box `k` with a single crossing of sign `signs[k]`.
    pub fn with_signs(&self, signs: &[i8]) -> Result<KnittedDiagram> {
        if signs.len() != self.edges.len() {
            return Err(Error::InvalidGraph(format!("{} signs for {} edges", signs.len(), self.edges.len())));
        }
        let words = signs
            .iter()
            .map(|&s| BraidWord::new(2, vec![if s > 0 { 1 } else { -1 }]))
            .collect::<Result<Vec<_>>>()?;
        KnittedDiagram::new(self.template.clone(), words)
    }
}

/// Turns a connected, simple, bipartite plane graph into a knitted template:
/// each vertex becomes a Seifert circle (counterclockwise on one colour
/// class, clockwise on the other) and each edge a 2-strand box.
pub fn from_bipartite_graph(g: &PlaneGraph) -> Result<BipartiteKnitting> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::InvalidGraph("need at least one edge".into()));
    }
    for (v, nbrs) in g.rotation.iter().enumerate() {
        let mut seen = BTreeSet::new();
        for &w in nbrs {
            if w >= n {
                return Err(Error::InvalidGraph(format!("vertex {v} lists unknown neighbour {w}")));
            }
            if w == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {v}")));
            }
            if !seen.insert(w) {
                return Err(Error::InvalidGraph(format!("multiple edges between {v} and {w}")));
            }
            if !g.rotation[w].contains(&v) {
                return Err(Error::InvalidGraph(format!("edge {v}-{w} listed only at {v}")));
            }
        }
    }
    let mut colour = vec![None; n];
    colour[0] = Some(0u8);
    let mut queue = VecDeque::from([0]);
    while let Some(v) = queue.pop_front() {
        let c = colour[v].expect("queued vertices are coloured");
        for &w in &g.rotation[v] {
            match colour[w] {
                None => {
                    colour[w] = Some(1 - c);
                    queue.push_back(w);
                }
                Some(cw) if cw == c => {
                    return Err(Error::InvalidGraph(format!("edge {v}-{w} joins equal colours")));
                }
                Some(_) => {}
            }
        }
    }
    if let Some(v) = colour.iter().position(Option::is_none) {
        return Err(Error::InvalidGraph(format!("vertex {v} is not connected to vertex 0")));
    }

    let mut edges = Vec::new();
    for (u, nbrs) in g.rotation.iter().enumerate() {
        if colour[u] == Some(0) {
            edges.extend(nbrs.iter().map(|&w| (u, w)));
        }
    }
    let box_of = |a: usize, b: usize| {
        let key = if colour[a] == Some(0) { (a, b) } else { (b, a) };
        edges.iter().position(|&e| e == key).expect("every edge has a box")
    };
    let mut wires = Vec::new();
    for (v, nbrs) in g.rotation.iter().enumerate() {
        let (order, pos): (Vec<usize>, usize) = if colour[v] == Some(0) {
            (nbrs.clone(), 0)
        } else {
            (nbrs.iter().rev().copied().collect(), 1)
        };
        for j in 0..order.len() {
            let here = box_of(v, order[j]);
            let next = box_of(v, order[(j + 1) % order.len()]);
            wires.push((Port::new(here, pos), Port::new(next, pos)));
        }
    }
    let template = KnittedTemplate::new(vec![2; edges.len()], wires)?;
    let report = template.validate();
    if !report.is_valid() {
        return Err(Error::InvalidGraph(format!("rotation system is not planar: {report}")));
    }
    Ok(BipartiteKnitting { template, edges })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge_is_two_strand_closure() {
        let g = PlaneGraph::new(vec![vec![1], vec![0]]);
        let k = from_bipartite_graph(&g).unwrap();
        assert_eq!(k.template.seifert_count(), 2);
        assert_eq!(k.template, KnittedTemplate::braid_closure(2));
    }

    #[test]
    fn square() {
        let pts = [(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)];
        let g = PlaneGraph::from_positions(&pts, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let k = from_bipartite_graph(&g).unwrap();
        assert_eq!(k.template.box_count(), 4);
        assert_eq!(k.template.seifert_count(), 4);
        assert!(k.template.validate().is_valid());
    }

    #[test]
    fn rejects_bad_graphs() {
        let triangle = PlaneGraph::new(vec![vec![1, 2], vec![2, 0], vec![0, 1]]);
        assert!(matches!(from_bipartite_graph(&triangle), Err(Error::InvalidGraph(_))));
        let multi = PlaneGraph::new(vec![vec![1, 1], vec![0, 0]]);
        assert!(matches!(from_bipartite_graph(&multi), Err(Error::InvalidGraph(_))));
        let lopsided = PlaneGraph::new(vec![vec![1], vec![]]);
        assert!(from_bipartite_graph(&lopsided).is_err());
    }

    #[test]
    fn non_planar_rotation_is_rejected() {
        // K_{3,3} has no planar rotation system
        let rot = vec![vec![3, 4, 5], vec![3, 4, 5], vec![3, 4, 5], vec![0, 1, 2], vec![0, 1, 2], vec![0, 1, 2]];
        assert!(from_bipartite_graph(&PlaneGraph::new(rot)).is_err());
    }
}
