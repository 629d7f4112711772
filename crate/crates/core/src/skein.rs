//! Framed HOMFLY evaluation by the skein tree.
//!
//! Conventions: `H(L+) - H(L-) = z H(L0)`, a positive kink contributes
//! `v^-1`, a negative kink `v`, and `H = v^-w P` with `P(unknot) = 1`.
//!
//! Each connected piece is walked from its lowest arc, components taken in
//! order of their lowest arc. The first crossing met on its under strand is
//! switched; the smoothing carries the `z` weight. A diagram with no such
//! crossing is descending, hence an unlink, and evaluates to
//! `v^-w ((v^-1 - v)/z)^(c-1)`.

use std::collections::HashSet;

use dashmap::DashMap;

use crate::diagram::{Crossing, PlanarDiagram, Strand};
use crate::error::{Error, Result};
use crate::laurent::{LaurentVZ, LaurentZ};

/// Skein evaluator with a memo table keyed on canonical forms of connected
/// pieces. The table may be shared across threads.
#[derive(Debug, Default)]
pub struct SkeinEvaluator {
    memo: DashMap<Vec<Crossing>, LaurentVZ>,
}

impl SkeinEvaluator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    /// Framed HOMFLY polynomial `H(d)`. Non-planar PD codes are rejected.
    pub fn homfly_framed(&self, d: &PlanarDiagram) -> Result<LaurentVZ> {
        if !d.is_planar() {
            return Err(Error::NonPlanar);
        }
        Ok(self.eval(d))
    }

    /// Evaluation without the planarity gate, for diagrams known to be
    /// planar by construction.
    pub(crate) fn eval(&self, d: &PlanarDiagram) -> LaurentVZ {
        let pieces = d.pieces();
        let factors = pieces.len() + d.free_loops();
        let mut acc = LaurentVZ::delta_pow(factors as u32 - 1);
        for piece in pieces {
            let sub = d.sub_diagram(&piece);
            acc = &acc * &self.eval_connected(&sub);
        }
        acc
    }

    fn eval_connected(&self, d: &PlanarDiagram) -> LaurentVZ {
        let key = d.canonical_key();
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }
        let value = match first_ascending_crossing(d) {
            None => descending_value(d),
            Some(k) => {
                let sign = d.crossings()[k].sign as i64;
                let switched = self.eval_connected(&d.switch(k));
                let smoothed = self.eval(&d.smooth(k));
                // H(L+) = H(L-) + z H(L0);  H(L-) = H(L+) - z H(L0)
                let zterm = smoothed.shift(0, 1);
                if sign > 0 {
                    &switched + &zterm
                } else {
                    &switched - &zterm
                }
            }
        };
        self.memo.insert(key, value.clone());
        value
    }
}

/// First crossing reached along its under strand in the base-point
/// traversal, if any.
pub(crate) fn first_ascending_crossing(d: &PlanarDiagram) -> Option<usize> {
    let ends = d.arc_ends();
    let mut visited_arcs = HashSet::new();
    let mut visited = vec![false; d.crossing_count()];
    for start in d.arcs() {
        if visited_arcs.contains(&start) {
            continue;
        }
        let mut a = start;
        while visited_arcs.insert(a) {
            let (k, strand) = ends[&a].to;
            let c = &d.crossings()[k];
            if !visited[k] {
                visited[k] = true;
                if strand == Strand::Under {
                    return Some(k);
                }
            }
            a = match strand {
                Strand::Under => c.under_out,
                Strand::Over => c.over_out,
            };
        }
    }
    None
}

fn descending_value(d: &PlanarDiagram) -> LaurentVZ {
    LaurentVZ::delta_pow(d.component_count() as u32 - 1).shift(-d.writhe(), 0)
}

/// `H(d)` with a throwaway memo table.
pub fn homfly_framed(d: &PlanarDiagram) -> Result<LaurentVZ> {
    SkeinEvaluator::new().homfly_framed(d)
}

/// `P(d) = v^w H(d)`.
pub fn homfly_unframed(d: &PlanarDiagram) -> Result<LaurentVZ> {
    Ok(homfly_framed(d)?.shift(d.writhe(), 0))
}

/// `(H_-, H_+)`: the coefficients of `v^(1-s)` and `v^(s-1)`.
pub fn extreme_coeffs(h: &LaurentVZ, s: usize) -> (LaurentZ, LaurentZ) {
    let s = s as i64;
    (h.coeff_of_v(1 - s), h.coeff_of_v(s - 1))
}

/// Whether every v-exponent lies in `[1-s, s-1]`.
pub fn mfw_check(h: &LaurentVZ, s: usize) -> bool {
    let s = s as i64;
    h.terms().all(|((v, _), _)| (1 - s..=s - 1).contains(&v))
}

/// v-exponents all congruent to `s-1` and z-exponents all congruent to
/// `components-1`, mod 2.
pub fn parity_check(h: &LaurentVZ, s: usize, components: usize) -> bool {
    let (pv, pz) = ((s as i64 - 1).rem_euclid(2), (components as i64 - 1).rem_euclid(2));
    h.terms().all(|((v, z), _)| v.rem_euclid(2) == pv && z.rem_euclid(2) == pz)
}

/// Vanishing predicted by a pair of Seifert circles joined by exactly one
/// crossing: `(H_+ = 0, H_- = 0)`.
pub fn mp_vanishing(d: &PlanarDiagram) -> (bool, bool) {
    let mut plus = false;
    let mut minus = false;
    for signs in d.seifert_graph().multiplicities().values() {
        if let [sign] = signs.as_slice() {
            if *sign > 0 {
                plus = true;
            } else {
                minus = true;
            }
        }
    }
    (plus, minus)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomflyResult {
    pub framed: LaurentVZ,
    pub unframed: LaurentVZ,
    pub seifert_count: usize,
    pub writhe: i64,
}

impl HomflyResult {
    pub fn from_framed(d: &PlanarDiagram, framed: LaurentVZ) -> Self {
        let writhe = d.writhe();
        Self {
            unframed: framed.shift(writhe, 0),
            framed,
            seifert_count: d.seifert_circles().count,
            writhe,
        }
    }

    pub fn evaluate(evaluator: &SkeinEvaluator, d: &PlanarDiagram) -> Result<Self> {
        Ok(Self::from_framed(d, evaluator.homfly_framed(d)?))
    }

    pub fn extremes(&self) -> (LaurentZ, LaurentZ) {
        extreme_coeffs(&self.framed, self.seifert_count)
    }

    pub fn mfw_holds(&self) -> bool {
        mfw_check(&self.framed, self.seifert_count)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;

    fn closure(n: usize, letters: &[i32]) -> PlanarDiagram {
        PlanarDiagram::braid_closure(&BraidWord::new(n, letters.to_vec()).unwrap())
    }

    fn vz(terms: &[((i64, i64), i64)]) -> LaurentVZ {
        LaurentVZ::from_terms(terms.iter().copied())
    }

    fn trefoil_h() -> LaurentVZ {
        vz(&[((-1, 0), 2), ((1, 0), -1), ((-1, 2), 1)])
    }

    #[test]
    fn framed_examples() {
        assert_eq!(homfly_framed(&closure(1, &[])).unwrap(), LaurentVZ::one());
        assert_eq!(homfly_framed(&closure(2, &[1])).unwrap(), vz(&[((-1, 0), 1)]));
        assert_eq!(
            homfly_framed(&closure(2, &[1, 1])).unwrap(),
            vz(&[((-1, -1), 1), ((1, -1), -1), ((-1, 1), 1)])
        );
        assert_eq!(homfly_framed(&closure(2, &[1, 1, 1])).unwrap(), trefoil_h());
    }

    #[test]
    fn unframed_examples() {
        assert_eq!(homfly_unframed(&closure(2, &[1])).unwrap(), LaurentVZ::one());
        assert_eq!(
            homfly_unframed(&closure(2, &[1, 1, 1])).unwrap(),
            vz(&[((2, 0), 2), ((4, 0), -1), ((2, 2), 1)])
        );
        assert_eq!(
            homfly_unframed(&closure(2, &[-1, -1, -1])).unwrap(),
            vz(&[((-2, 0), 2), ((-4, 0), -1), ((-2, 2), 1)])
        );
    }

    #[test]
    fn negative_kink_is_v() {
        assert_eq!(homfly_framed(&closure(2, &[-1])).unwrap(), vz(&[((1, 0), 1)]));
    }

    #[test]
    fn extreme_examples() {
        let d = LaurentVZ::delta_pow(1);
        assert_eq!(extreme_coeffs(&d, 2), (LaurentZ::monomial(-1, 1), LaurentZ::monomial(-1, -1)));
        assert_eq!(
            extreme_coeffs(&trefoil_h(), 2),
            (LaurentZ::from_terms([(0, 2), (2, 1)]), LaurentZ::monomial(0, -1))
        );
        assert_eq!(extreme_coeffs(&vz(&[((-1, 0), 1)]), 2), (LaurentZ::one(), LaurentZ::zero()));
    }

    #[test]
    fn mfw_examples() {
        assert!(mfw_check(&LaurentVZ::one(), 1));
        assert!(mfw_check(&vz(&[((-1, 0), 1)]), 2));
        assert!(!mfw_check(&vz(&[((2, 0), 1)]), 2));
        assert!(mfw_check(&LaurentVZ::zero(), 1));
    }

    #[test]
    fn mp_examples() {
        assert_eq!(mp_vanishing(&closure(2, &[1])), (true, false));
        assert_eq!(mp_vanishing(&closure(2, &[-1])), (false, true));
        assert_eq!(mp_vanishing(&closure(2, &[1, 1])), (false, false));
        let (_, plus) = extreme_coeffs(&homfly_framed(&closure(2, &[1])).unwrap(), 2);
        assert!(plus.is_zero());
    }

    #[test]
    fn rejects_non_planar() {
        let virtual_hopf = PlanarDiagram::parse_pd("X[2,1,4,3;+] X[3,4,1,2;-]").unwrap();
        assert_eq!(homfly_framed(&virtual_hopf), Err(Error::NonPlanar));
    }

    #[test]
    fn split_union_multiplies_by_delta() {
        let a = closure(2, &[1, 1, 1]);
        let b = closure(3, &[1, -2, 1]);
        let ha = homfly_framed(&a).unwrap();
        let hb = homfly_framed(&b).unwrap();
        let hu = homfly_framed(&a.disjoint_union(&b)).unwrap();
        assert_eq!(hu, &(&ha * &hb) * &LaurentVZ::delta_pow(1));
    }

    #[test]
    fn memo_is_reused() {
        let ev = SkeinEvaluator::new();
        let d = closure(3, &[1, -2, 1, -2, 1, -2]);
        let first = ev.homfly_framed(&d).unwrap();
        let size = ev.memo_len();
        assert_eq!(ev.homfly_framed(&d).unwrap(), first);
        assert_eq!(ev.memo_len(), size);
    }
}
