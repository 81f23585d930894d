#![allow(dead_code)]

pub mod stallings;

use rand::Rng;
use twocell::word::free_reduce;
use twocell::{Complex2, Word};

/// A random freely reduced word with at most `max_len` letters over `k` generators.
pub fn random_word(rng: &mut impl Rng, k: usize, max_len: usize) -> Word {
    let n = rng.gen_range(0..=max_len);
    let mut s: Vec<i64> = Vec::with_capacity(n);
    while s.len() < n {
        let g = rng.gen_range(1..=k as i64);
        let g = if rng.gen() { g } else { -g };
        if s.last() != Some(&-g) {
            s.push(g);
        }
    }
    Word::from_signed(&s)
}

/// A word that mostly follows a boundary of `x`, so reductions meet attachment sites.
pub fn relator_heavy_word(rng: &mut impl Rng, x: &Complex2) -> Word {
    let k = x.num_edges();
    if x.num_cells() == 0 || rng.gen_bool(0.3) {
        return random_word(rng, k, 6);
    }
    let c = rng.gen_range(0..x.num_cells());
    let len = x.boundary_len(c);
    let start = rng.gen_range(0..len);
    let take = rng.gen_range(len / 2..=len).max(1);
    let mut s: Vec<i64> = (0..take)
        .map(|i| {
            let d = x.boundary_at(c, start + i);
            let g = d.edge as i64 + 1;
            if d.inv { -g } else { g }
        })
        .collect();
    if rng.gen() {
        s = s.into_iter().rev().map(|g| -g).collect();
    }
    let g = rng.gen_range(1..=k as i64);
    s.push(if rng.gen() { g } else { -g });
    free_reduce(&Word::from_signed(&s))
}

/// `χ + P` after the start and after every step that is not immediately tidied by redundant-cell
/// removal or packing repair, labelled by the step that began the move.
pub fn settled_euler_perimeter(trace: &twocell::ReductionTrace) -> Vec<(&'static str, i64)> {
    use twocell::reduction::StepKind;
    let value = |s: &twocell::reduction::Snapshot| s.euler + s.perimeter as i64;
    let mut out = vec![("start", value(&trace.initial))];
    let mut label = "start";
    for (i, s) in trace.steps.iter().enumerate() {
        if !matches!(s.kind, StepKind::RemoveRedundant { .. } | StepKind::RepairPacking { .. }) {
            label = s.kind.label();
        }
        let tidied = trace
            .steps
            .get(i + 1)
            .is_some_and(|n| matches!(n.kind, StepKind::RemoveRedundant { .. } | StepKind::RepairPacking { .. }));
        if !tidied {
            out.push((label, value(&s.after)));
        }
    }
    out
}
