//! Test helpers, including a deliberately naive skein evaluator that shares
//! no code with the library's: no memo table, no splitting into pieces, and
//! base points chosen at random.

#![allow(dead_code)]

use std::collections::{HashMap, HashSet};

use knitweave::braid::BraidWord;
use knitweave::diagram::PlanarDiagram;
use knitweave::laurent::LaurentVZ;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn word(n: usize, letters: &[i32]) -> BraidWord {
    BraidWord::new(n, letters.to_vec()).unwrap()
}

pub fn closure(n: usize, letters: &[i32]) -> PlanarDiagram {
    PlanarDiagram::braid_closure(&word(n, letters))
}

pub fn vz(terms: &[((i64, i64), i64)]) -> LaurentVZ {
    LaurentVZ::from_terms(terms.iter().copied())
}

/// `[sign, under_in, over_in, under_out, over_out]`
type X = [i64; 5];

#[derive(Clone, Debug)]
struct Naive {
    xs: Vec<X>,
    loops: usize,
}

impl Naive {
    fn from(d: &PlanarDiagram) -> Self {
        let xs = d
            .crossings()
            .iter()
            .map(|c| [c.sign as i64, c.under_in as i64, c.over_in as i64, c.under_out as i64, c.over_out as i64])
            .collect();
        Naive { xs, loops: d.free_loops() }
    }

    /// arc -> (crossing, entered on the under strand)
    fn heads(&self) -> HashMap<i64, (usize, bool)> {
        let mut m = HashMap::new();
        for (k, x) in self.xs.iter().enumerate() {
            m.insert(x[1], (k, true));
            m.insert(x[2], (k, false));
        }
        m
    }

    fn next_arc(&self, arc: i64, heads: &HashMap<i64, (usize, bool)>) -> i64 {
        let (k, under) = heads[&arc];
        if under {
            self.xs[k][3]
        } else {
            self.xs[k][4]
        }
    }

    /// One start arc per component.
    fn component_starts(&self) -> Vec<Vec<i64>> {
        let heads = self.heads();
        let mut arcs: Vec<i64> = heads.keys().copied().collect();
        arcs.sort();
        let mut seen = HashSet::new();
        let mut comps = Vec::new();
        for a in arcs {
            if seen.contains(&a) {
                continue;
            }
            let mut comp = Vec::new();
            let mut cur = a;
            while seen.insert(cur) {
                comp.push(cur);
                cur = self.next_arc(cur, &heads);
            }
            comps.push(comp);
        }
        comps
    }

    fn random_base_points(&self, rng: &mut ChaCha8Rng) -> Vec<i64> {
        let mut comps = self.component_starts();
        comps.shuffle(rng);
        comps.iter().map(|c| c[rng.gen_range(0..c.len())]).collect()
    }

    fn bad_crossing(&self, base: &[i64]) -> Option<usize> {
        let heads = self.heads();
        let mut visited = vec![false; self.xs.len()];
        for &start in base {
            let mut cur = start;
            loop {
                let (k, under) = heads[&cur];
                if !visited[k] {
                    if under {
                        return Some(k);
                    }
                    visited[k] = true;
                }
                cur = self.next_arc(cur, &heads);
                if cur == start {
                    break;
                }
            }
        }
        None
    }

    fn switched(&self, k: usize) -> Naive {
        let mut out = self.clone();
        let [s, ui, oi, uo, oo] = self.xs[k];
        out.xs[k] = [-s, oi, ui, oo, uo];
        out
    }

    fn smoothed(&self, k: usize) -> Naive {
        let [_, ui, oi, uo, oo] = self.xs[k];
        let mut xs: Vec<X> = self.xs.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, x)| *x).collect();
        let mut loops = self.loops;
        let mut pending = vec![(oi, uo)];
        let mut first = (ui, oo);
        loop {
            let (keep, gone) = first;
            if keep == gone {
                loops += 1;
            } else {
                for x in xs.iter_mut() {
                    for a in x.iter_mut().skip(1) {
                        if *a == gone {
                            *a = keep;
                        }
                    }
                }
                for p in pending.iter_mut() {
                    if p.0 == gone {
                        p.0 = keep;
                    }
                    if p.1 == gone {
                        p.1 = keep;
                    }
                }
            }
            match pending.pop() {
                Some(p) => first = p,
                None => break,
            }
        }
        Naive { xs, loops }
    }

    fn eval(&self, base: Option<Vec<i64>>, rng: &mut ChaCha8Rng) -> LaurentVZ {
        let base = base.unwrap_or_else(|| self.random_base_points(rng));
        match self.bad_crossing(&base) {
            None => {
                let writhe: i64 = self.xs.iter().map(|x| x[0]).sum();
                let comps = base.len() + self.loops;
                LaurentVZ::delta_pow(comps as u32 - 1).shift(-writhe, 0)
            }
            Some(k) => {
                let switched = self.switched(k).eval(Some(base), rng);
                let smoothed = self.smoothed(k).eval(None, rng).shift(0, 1);
                if self.xs[k][0] > 0 {
                    &switched + &smoothed
                } else {
                    &switched - &smoothed
                }
            }
        }
    }
}

/// Framed HOMFLY by unmemoized skein recursion with random base points.
pub fn naive_homfly(d: &PlanarDiagram, rng: &mut ChaCha8Rng) -> LaurentVZ {
    Naive::from(d).eval(None, rng)
}
