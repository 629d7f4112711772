use crate::braid::{half_twist_word, BraidWord, Permutation};
use crate::error::Result;
use crate::hecke::HeckeElement;
use crate::laurent::{LaurentVZ, LaurentZ};
use crate::par;
use crate::skein::{extreme_coeffs, SkeinEvaluator};

use super::KnittedDiagram;

/// `H(D)` computed through the Hecke algebra: every box word is expanded in
/// the positive permutation basis and each tuple of basis braids is evaluated
/// by the skein tree, weighted by the product of coefficients.
pub fn eval_hecke(k: &KnittedDiagram) -> Result<LaurentVZ> {
    eval_hecke_with(&SkeinEvaluator::new(), k)
}

/// As [`eval_hecke`], sharing `evaluator`'s memo table across tuples (and
/// across calls).
pub fn eval_hecke_with(evaluator: &SkeinEvaluator, k: &KnittedDiagram) -> Result<LaurentVZ> {
    k.template.ensure_valid()?;
    let expansions: Vec<Vec<(BraidWord, LaurentZ)>> = k
        .words
        .iter()
        .map(|w| {
            HeckeElement::expand_word(w)
                .iter()
                .map(|(p, c): (&Permutation, &LaurentZ)| (p.reduced_word(), c.clone()))
                .collect()
        })
        .collect();
    let total: usize = expansions.iter().map(Vec::len).product();
    let parts = par::map_range(total, |mut index| {
        let mut words = Vec::with_capacity(expansions.len());
        let mut weight = LaurentZ::one();
        for terms in &expansions {
            let (w, c) = &terms[index % terms.len()];
            index /= terms.len();
            words.push(w.clone());
            weight = &weight * c;
        }
        let d = KnittedDiagram { template: k.template.clone(), words }.compile_unchecked();
        evaluator.eval(&d).scale_z(&weight)
    });
    Ok(parts.into_iter().sum())
}

/// `H_-(D)` from top coefficients alone:
/// `z^(1-s) * prod_i top(Δ_i β_i)` with `Δ_i` the positive half twist.
pub fn extreme_minus_fast(k: &KnittedDiagram) -> Result<LaurentZ> {
    k.template.ensure_valid()?;
    let mut acc = LaurentZ::one();
    for w in &k.words {
        let twisted = half_twist_word(w.strands()).concat(w)?;
        acc = &acc * &HeckeElement::expand_word(&twisted).top_coeff();
    }
    Ok(acc.shift(1 - k.seifert_count() as i64))
}

/// Outcome of checking `H_-(D) = (-1)^(s-1) H_+(FT D)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremReport {
    pub seifert_count: usize,
    pub framed: LaurentVZ,
    pub framed_ft: LaurentVZ,
    /// Coefficient of `v^(1-s)` in `H(D)`.
    pub h_minus: LaurentZ,
    /// Coefficient of `v^(s-1)` in `H(FT D)`.
    pub h_plus_ft: LaurentZ,
    pub fast_h_minus: LaurentZ,
    pub identity_holds: bool,
    pub fast_agrees: bool,
}

impl TheoremReport {
    pub fn from_parts(s: usize, framed: LaurentVZ, framed_ft: LaurentVZ, fast_h_minus: LaurentZ) -> Self {
        let (h_minus, _) = extreme_coeffs(&framed, s);
        let (_, h_plus_ft) = extreme_coeffs(&framed_ft, s);
        let mut report = Self {
            seifert_count: s,
            framed,
            framed_ft,
            h_minus,
            h_plus_ft,
            fast_h_minus,
            identity_holds: false,
            fast_agrees: false,
        };
        report.recheck();
        report
    }

    fn recheck(&mut self) {
        let sign = if self.seifert_count % 2 == 1 { 1 } else { -1 };
        let rhs = self.h_plus_ft.scale(&sign.into());
        self.identity_holds = self.h_minus == rhs;
        self.fast_agrees = self.fast_h_minus == self.h_minus;
    }

    /// Perturbs the `H_+(FT D)` side by one and re-runs the comparison; used
    /// to check that failures are actually reported.
    pub fn with_fault(mut self) -> Self {
        self.h_plus_ft = &self.h_plus_ft + &LaurentZ::one();
        self.recheck();
        self
    }

    pub fn passed(&self) -> bool {
        self.identity_holds && self.fast_agrees
    }

    /// `(-1)^(s-1)`.
    pub fn sign(&self) -> i32 {
        if self.seifert_count % 2 == 1 {
            1
        } else {
            -1
        }
    }
}

pub fn verify_theorem(k: &KnittedDiagram) -> Result<TheoremReport> {
    verify_theorem_with(&SkeinEvaluator::new(), k)
}

pub fn verify_theorem_with(evaluator: &SkeinEvaluator, k: &KnittedDiagram) -> Result<TheoremReport> {
    let framed = eval_hecke_with(evaluator, k)?;
    let framed_ft = eval_hecke_with(evaluator, &k.ft())?;
    let fast = extreme_minus_fast(k)?;
    Ok(TheoremReport::from_parts(k.seifert_count(), framed, framed_ft, fast))
}
