mod common;

use common::*;
use knitweave::campaign::{random_template, random_word, sample_rng};
use knitweave::diagram::PlanarDiagram;
use knitweave::knitted::{eval_hecke, KnittedDiagram};
use knitweave::skein::{homfly_framed, SkeinEvaluator};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn oracle_agrees_on_hand_values() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    assert_eq!(naive_homfly(&closure(2, &[1]), &mut rng), vz(&[((-1, 0), 1)]));
    assert_eq!(
        naive_homfly(&closure(2, &[1, 1]), &mut rng),
        vz(&[((-1, -1), 1), ((1, -1), -1), ((-1, 1), 1)])
    );
    assert_eq!(
        naive_homfly(&closure(2, &[1, 1, 1]), &mut rng),
        vz(&[((-1, 0), 2), ((1, 0), -1), ((-1, 2), 1)])
    );
}

#[test]
fn oracle_matches_skein_on_braid_closures() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let ev = SkeinEvaluator::new();
    for _ in 0..300 {
        let n = rng.gen_range(1..=4);
        let w = random_word(&mut rng, n, 8);
        let d = PlanarDiagram::braid_closure(&w);
        assert_eq!(naive_homfly(&d, &mut rng), ev.homfly_framed(&d).unwrap(), "word {w} on {n} strands");
    }
}

#[test]
fn oracle_matches_on_knitted_diagrams() {
    let ev = SkeinEvaluator::new();
    let mut checked = 0;
    for i in 0..400 {
        let mut rng = sample_rng(11, i);
        let (t, _) = random_template(&mut rng, 3, 3).unwrap();
        let words = t.boxes().iter().map(|&n| random_word(&mut rng, n, 3)).collect();
        let k = KnittedDiagram::new(t, words).unwrap();
        let d = k.compile().unwrap();
        if d.crossing_count() > 8 {
            continue;
        }
        checked += 1;
        let direct = ev.homfly_framed(&d).unwrap();
        assert_eq!(naive_homfly(&d, &mut rng), direct, "{}", k.to_json_string());
        assert_eq!(eval_hecke(&k).unwrap(), direct, "{}", k.to_json_string());
    }
    assert!(checked > 100, "only {checked} diagrams were small enough");
}

#[test]
fn oracle_matches_on_split_unions() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let a = closure(3, &[1, -2, 1]);
    let b = closure(2, &[-1, -1, -1]);
    let d = a.disjoint_union(&b);
    assert_eq!(naive_homfly(&d, &mut rng), homfly_framed(&d).unwrap());
    let with_loop = PlanarDiagram::parse_pd(&format!("{d} O")).unwrap();
    assert_eq!(naive_homfly(&with_loop, &mut rng), homfly_framed(&with_loop).unwrap());
}
