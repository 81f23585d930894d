use std::sync::Arc;

use super::*;
use crate::complex::{standard_complex, Complex2};
use crate::mapping::bouquet_map;
use crate::perimeter::Weighting;
use crate::presentation::Presentation;
use crate::word::Word;

fn complex(gens: &[&str], rels: &[&str]) -> Arc<Complex2> {
    Arc::new(standard_complex(&Presentation::from_strs(gens, rels).unwrap()))
}

fn bouquet(x: &Arc<Complex2>, words: &[&[i64]]) -> CombMap {
    let ws: Vec<Word> = words.iter().map(|w| Word::from_signed(w)).collect();
    bouquet_map(x.clone(), &ws, None).unwrap()
}

#[test]
fn torus_generators_close_up() {
    let x = complex(&["a", "b"], &["a b a^-1 b^-1"]);
    let w = Weighting::unit(&x);
    let (m, trace) = reduce(bouquet(&x, &[&[1], &[2]]), &w, ReduceOptions::strict()).unwrap();
    assert_eq!(trace.initial.perimeter, 4);
    assert_eq!(trace.last().perimeter, 0);
    assert_eq!(trace.count(|k| matches!(k, StepKind::Attach { complete: true, .. })), 1);
    assert_eq!(m.domain().num_cells(), 1);
    let p = extract_presentation(&m).unwrap();
    assert_eq!(p.num_generators(), 2);
    assert_eq!(p.relators().len(), 1);
    assert_eq!(p.relators()[0].len(), 4);
}

#[test]
fn free_group_only_folds() {
    let x = complex(&["a", "b"], &[]);
    let w = Weighting::unit(&x);
    let (m, trace) = reduce(bouquet(&x, &[&[1, 1], &[1, 2]]), &w, ReduceOptions::strict()).unwrap();
    assert_eq!(trace.moves(), 1);
    assert!(trace.steps.iter().all(|s| s.kind.is_fold()));
    let p = extract_presentation(&m).unwrap();
    assert_eq!((p.num_generators(), p.relators().len()), (2, 0));
}

#[test]
fn perimeter_never_rises_in_strict_mode() {
    let x = complex(&["a", "b", "c"], &["a b a^-1 b^-1", "a c a^-1 c^-1", "b c b^-1 c^-1"]);
    let w = Weighting::unit(&x);
    let (_, trace) = reduce(bouquet(&x, &[&[1, 2], &[2, 3], &[3, -1]]), &w, ReduceOptions::strict()).unwrap();
    let mut prev = trace.initial;
    for s in &trace.steps {
        assert!(s.after.perimeter <= prev.perimeter, "{trace}");
        if s.kind.is_fold() || s.kind.is_attach() {
            assert!(s.after.complexity() < prev.complexity());
        }
        prev = s.after;
    }
}

#[test]
fn complete_attachment_drops_at_least_a_weight() {
    let x = complex(&["a", "b"], &["a b a^-1 b^-1"]);
    let w = Weighting::unit(&x);
    let (_, trace) = reduce(bouquet(&x, &[&[1, 2, -1, -2]]), &w, ReduceOptions::strict()).unwrap();
    for s in &trace.steps {
        if let StepKind::Attach { complete: true, delta, .. } = s.kind {
            assert!(delta <= -4);
        }
    }
}

#[test]
fn proper_power_gets_whole_packet() {
    let x = complex(&["a", "b"], &["(a a b)^3"]);
    let w = Weighting::unit(&x);
    let (m, trace) = reduce(bouquet(&x, &[&[1, 1, 2]]), &w, ReduceOptions::strict()).unwrap();
    // the three siblings coincide once the circle closes after one period
    assert_eq!(m.domain().num_cells(), 1);
    assert!(crate::mapping::is_packed(&m));
    // the packet closes up and the cyclic group of order 3 appears
    let p = extract_presentation(&m).unwrap();
    assert_eq!(p.num_generators(), 1);
    assert!(p.relators().iter().all(|r| r.len() == 3));
    assert!(trace.last().perimeter < trace.initial.perimeter);
}

#[test]
fn weak_mode_needs_a_limit() {
    let x = complex(&["a", "b"], &["a b a^-1 b^-1"]);
    let w = Weighting::unit(&x);
    let opts = ReduceOptions { mode: ReductionMode::Weak, step_limit: None };
    assert!(matches!(reduce(bouquet(&x, &[&[1]]), &w, opts), Err(ReduceError::WeakNeedsLimit)));
}

#[test]
fn step_limit_reports_partial_trace() {
    let x = complex(&["a", "b"], &[]);
    let w = Weighting::unit(&x);
    let m = bouquet(&x, &[&[1, 1], &[1, 1], &[1, 1]]);
    match reduce(m, &w, ReduceOptions::strict().with_limit(1)) {
        Err(ReduceError::StepLimit { limit: 1, trace, .. }) => assert_eq!(trace.steps.len(), 1),
        other => panic!("{other:?}"),
    }
}

#[test]
fn stale_site_is_rejected() {
    let x = complex(&["a", "b"], &["a b a^-1 b^-1"]);
    let w = Weighting::unit(&x);
    let m = bouquet(&x, &[&[1], &[2]]);
    let table = CandidateTable::new(&x, &w, ReductionMode::Strict);
    let site = find_attachment(&m, &table, ReductionMode::Strict).unwrap();
    assert!(site.complete);
    let mut other = bouquet(&x, &[&[2]]);
    assert!(matches!(attach_packet(&mut other, &w, &site), Err(ReduceError::StaleSite)));
}

#[test]
fn incomplete_attachment_matches_s_form() {
    let x = complex(&["a", "b"], &["a b a^-1 b^-1"]);
    let w = Weighting::unit(&x);
    let mut m = bouquet(&x, &[&[1, 2, -1]]);
    let table = CandidateTable::new(&x, &w, ReductionMode::Strict);
    let site = find_attachment(&m, &table, ReductionMode::Strict).unwrap();
    assert!(!site.complete);
    assert_eq!(site.candidate.length, 3);
    let before = crate::perimeter::map_perimeter(&w, &m);
    let out = attach_packet(&mut m, &w, &site).unwrap();
    assert_eq!(out.delta, -2);
    assert_eq!(crate::perimeter::map_perimeter(&w, &m) as i64, before as i64 + out.delta);
}

#[test]
fn trace_lines() {
    let x = complex(&["a", "b"], &["a b a^-1 b^-1"]);
    let w = Weighting::unit(&x);
    let (_, trace) = reduce(bouquet(&x, &[&[1], &[2]]), &w, ReduceOptions::strict()).unwrap();
    let text = trace.to_string();
    assert_eq!(text.lines().next(), Some("step=1 kind=attach-complete P=0 edges=2"));
    assert_eq!(trace.initial.perimeter, 4);
}

#[test]
fn relator_bound_and_euler() {
    let x = complex(&["a", "b"], &["a b a^-1 b^-1"]);
    let w = Weighting::unit(&x);
    let m = bouquet(&x, &[&[1, 2], &[2]]);
    assert_eq!(relator_bound(&w, &[Word::from_signed(&[1, 2]), Word::from_signed(&[2])]), 6);
    assert_eq!(euler_perimeter(&m, &w), -1 + 6);
}

#[test]
fn disconnected_domain_has_no_presentation() {
    let x = complex(&["a"], &[]);
    let y = Complex2::new(2, vec![], vec![]).unwrap();
    let m = CombMap::new(y, x, vec![0, 0], vec![], vec![], None).unwrap();
    assert!(matches!(extract_presentation(&m), Err(ReduceError::Disconnected)));
}
