//! Seeded randomized checks over braid closures and knitted templates.
//!
//! Sample `i` draws from its own ChaCha8 stream, so results do not depend on
//! evaluation order and parallel runs aggregate to the same summary as
//! sequential ones.

use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::braid::BraidWord;
use crate::knitted::{verify_theorem_with, KnittedDiagram, KnittedTemplate, Port};
use crate::par;
use crate::skein::{extreme_coeffs, mfw_check, mp_vanishing, parity_check, SkeinEvaluator};

/// Template draws per sample before falling back to a braid closure.
pub const MAX_TEMPLATE_RETRIES: usize = 10_000;

/// Diagrams with more crossings than this skip the direct skein comparison.
pub const PATH_CHECK_MAX_CROSSINGS: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CampaignConfig {
    pub seed: u64,
    pub count: usize,
    pub max_boxes: usize,
    pub max_strands: usize,
    pub max_word_len: usize,
}

impl Default for CampaignConfig {
    fn default() -> Self {
        Self { seed: 0, count: 100, max_boxes: 3, max_strands: 3, max_word_len: 4 }
    }
}

pub fn sample_rng(seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng
}

pub fn random_word(rng: &mut impl Rng, strands: usize, max_len: usize) -> BraidWord {
    let len = if strands < 2 { 0 } else { rng.gen_range(0..=max_len) };
    let letters = (0..len)
        .map(|_| {
            let g = rng.gen_range(1..strands as i32);
            if rng.gen_bool(0.5) {
                g
            } else {
                -g
            }
        })
        .collect();
    BraidWord::new(strands, letters).expect("letters drawn in range")
}

/// Rejection-samples a valid template: random box sizes and a uniformly
/// random output-to-input matching. Returns the template and the number of
/// rejected draws.
pub fn random_template(rng: &mut impl Rng, max_boxes: usize, max_strands: usize) -> Option<(KnittedTemplate, usize)> {
    for retries in 0..MAX_TEMPLATE_RETRIES {
        // single boxes only pass validation as braid closures, which the
        // even samples already cover
        let m = rng.gen_range(2.min(max_boxes.max(1))..=max_boxes.max(1));
        let boxes: Vec<usize> = (0..m).map(|_| rng.gen_range(1..=max_strands.max(1))).collect();
        let ports: Vec<Port> = boxes
            .iter()
            .enumerate()
            .flat_map(|(b, &n)| (0..n).map(move |p| Port::new(b, p)))
            .collect();
        let mut inputs = ports.clone();
        inputs.shuffle(rng);
        let template = KnittedTemplate::new(boxes, ports.into_iter().zip(inputs)).expect("a permutation is a matching");
        if template.validate().is_valid() {
            return Some((template, retries));
        }
    }
    None
}

pub fn random_sample(cfg: &CampaignConfig, index: usize) -> (KnittedDiagram, usize) {
    let mut rng = sample_rng(cfg.seed, index);
    let template = if index.is_multiple_of(2) {
        None
    } else {
        random_template(&mut rng, cfg.max_boxes, cfg.max_strands)
    };
    match template {
        Some((t, retries)) => {
            let words = t.boxes().iter().map(|&n| random_word(&mut rng, n, cfg.max_word_len)).collect();
            (KnittedDiagram::new(t, words).expect("words sized to boxes"), retries)
        }
        None => {
            let n = rng.gen_range(1..=cfg.max_strands.max(1));
            (KnittedDiagram::braid_closure(&random_word(&mut rng, n, cfg.max_word_len)), 0)
        }
    }
}

/// Per-sample verdicts; `None` means the check did not apply.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SampleOutcome {
    pub index: usize,
    pub braid_closure: bool,
    pub retries: usize,
    pub theorem: bool,
    pub fast_path: bool,
    pub path_equivalence: Option<bool>,
    pub mfw: bool,
    pub parity: bool,
    pub mp: bool,
    pub diagram: String,
    pub error: Option<String>,
}

impl SampleOutcome {
    pub fn passed(&self) -> bool {
        self.error.is_none()
            && self.theorem
            && self.fast_path
            && self.path_equivalence != Some(false)
            && self.mfw
            && self.parity
            && self.mp
    }

    fn failed_checks(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if self.error.is_some() {
            out.push("error");
        }
        for (ok, name) in [
            (self.theorem, "theorem"),
            (self.fast_path, "fast-path"),
            (self.path_equivalence != Some(false), "path-equivalence"),
            (self.mfw, "mfw"),
            (self.parity, "parity"),
            (self.mp, "mp"),
        ] {
            if !ok {
                out.push(name);
            }
        }
        out
    }
}

pub fn check_sample(evaluator: &SkeinEvaluator, k: &KnittedDiagram) -> SampleOutcome {
    let mut out = SampleOutcome {
        braid_closure: k.template().box_count() == 1 && *k.template() == KnittedTemplate::braid_closure(k.template().boxes()[0]),
        diagram: serde_json::to_string(&crate::knitted::KnittedJson::from_diagram(k)).expect("plain data"),
        ..Default::default()
    };
    let report = match verify_theorem_with(evaluator, k) {
        Ok(r) => r,
        Err(e) => {
            out.error = Some(e.to_string());
            return out;
        }
    };
    out.theorem = report.identity_holds;
    out.fast_path = report.fast_agrees;
    let s = report.seifert_count;
    let d = k.compile_unchecked();
    let d_ft = k.ft().compile_unchecked();
    if d.crossing_count() <= PATH_CHECK_MAX_CROSSINGS {
        out.path_equivalence = Some(evaluator.homfly_framed(&d).as_ref() == Ok(&report.framed));
    }
    let components = d.component_count();
    out.mfw = mfw_check(&report.framed, s) && mfw_check(&report.framed_ft, s);
    out.parity = parity_check(&report.framed, s, components) && parity_check(&report.framed_ft, s, components);
    out.mp = [(&d, &report.framed), (&d_ft, &report.framed_ft)].iter().all(|(diagram, h)| {
        let (plus_zero, minus_zero) = mp_vanishing(diagram);
        let (minus, plus) = extreme_coeffs(h, s);
        (!plus_zero || plus.is_zero()) && (!minus_zero || minus.is_zero())
    });
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CampaignSummary {
    pub config: CampaignConfig,
    pub outcomes: Vec<SampleOutcome>,
}

impl CampaignSummary {
    pub fn passed(&self) -> usize {
        self.outcomes.iter().filter(|o| o.passed()).count()
    }

    pub fn all_passed(&self) -> bool {
        self.passed() == self.outcomes.len()
    }

    pub fn first_failure(&self) -> Option<&SampleOutcome> {
        self.outcomes.iter().find(|o| !o.passed())
    }

    pub fn render(&self) -> String {
        let c = &self.config;
        let n = self.outcomes.len();
        let closures = self.outcomes.iter().filter(|o| o.braid_closure).count();
        let retries: usize = self.outcomes.iter().map(|o| o.retries).sum();
        let count = |f: &dyn Fn(&SampleOutcome) -> bool| self.outcomes.iter().filter(|o| f(o)).count();
        let path_run = count(&|o| o.path_equivalence.is_some());
        let mut s = String::new();
        let _ = writeln!(
            s,
            "random-test seed={} count={} max-boxes={} max-strands={} max-word-len={}",
            c.seed, c.count, c.max_boxes, c.max_strands, c.max_word_len
        );
        let _ = writeln!(s, "samples: {closures} braid closures, {} knitted templates, {retries} template retries", n - closures);
        let _ = writeln!(s, "theorem:          {}/{n}", count(&|o| o.theorem));
        let _ = writeln!(s, "fast path:        {}/{n}", count(&|o| o.fast_path));
        let _ = writeln!(s, "path equivalence: {}/{path_run}", count(&|o| o.path_equivalence == Some(true)));
        let _ = writeln!(s, "mfw:              {}/{n}", count(&|o| o.mfw));
        let _ = writeln!(s, "parity:           {}/{n}", count(&|o| o.parity));
        let _ = writeln!(s, "mp:               {}/{n}", count(&|o| o.mp));
        if let Some(f) = self.first_failure() {
            let _ = writeln!(
                s,
                "first failure: sample {} (seed {}, stream {}) failed {}",
                f.index,
                c.seed,
                f.index,
                f.failed_checks().join(", ")
            );
            if let Some(e) = &f.error {
                let _ = writeln!(s, "  error: {e}");
            }
            let _ = writeln!(s, "  diagram: {}", f.diagram);
        }
        let _ = writeln!(s, "{}/{n} pass", self.passed());
        s
    }
}

pub fn run_campaign(cfg: &CampaignConfig) -> CampaignSummary {
    run_campaign_with(&SkeinEvaluator::new(), cfg)
}

pub fn run_campaign_with(evaluator: &SkeinEvaluator, cfg: &CampaignConfig) -> CampaignSummary {
    let outcomes = par::map_range(cfg.count, |i| {
        let (k, retries) = random_sample(cfg, i);
        SampleOutcome { index: i, retries, ..check_sample(evaluator, &k) }
    });
    CampaignSummary { config: *cfg, outcomes }
}
