use std::collections::VecDeque;

use super::ReduceError;
use crate::complex::DirEdge;
use crate::mapping::CombMap;
use crate::perimeter::{map_perimeter, path_perimeter, Weighting};
use crate::presentation::Presentation;
use crate::word::{cyclic_reduce, free_reduce, Letter, Word};

/// Reads off `π₁` of a connected domain: a breadth-first spanning tree from the basepoint,
/// generators `x1, x2, …` for the other edges in index order, relators from the 2-cells.
pub fn extract_presentation(m: &CombMap) -> Result<Presentation, ReduceError> {
    let y = m.domain();
    if y.num_vertices() == 0 {
        return Ok(Presentation::with_letters(0, Vec::new()).expect("empty presentation"));
    }
    if !m.is_connected() {
        return Err(ReduceError::Disconnected);
    }
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); y.num_vertices()];
    for (e, edge) in y.edges().iter().enumerate() {
        incident[edge.source].push(e);
        if edge.target != edge.source {
            incident[edge.target].push(e);
        }
    }
    let root = m.basepoint().unwrap_or(0);
    let mut seen = vec![false; y.num_vertices()];
    let mut tree = vec![false; y.num_edges()];
    seen[root] = true;
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        for &e in &incident[u] {
            let edge = y.edge(e);
            let v = if edge.source == u { edge.target } else { edge.source };
            if !seen[v] {
                seen[v] = true;
                tree[e] = true;
                queue.push_back(v);
            }
        }
    }
    let mut gen = vec![usize::MAX; y.num_edges()];
    let mut k = 0;
    for e in 0..y.num_edges() {
        if !tree[e] {
            gen[e] = k;
            k += 1;
        }
    }
    let relators = y
        .boundaries()
        .iter()
        .map(|b| {
            let w = Word::from_letters(b.iter().filter(|d| !tree[d.edge]).map(|d| Letter::new(gen[d.edge], d.inv)));
            cyclic_reduce(&free_reduce(&w))
        })
        .filter(|w| !w.is_empty())
        .collect();
    let names = (1..=k).map(|i| format!("x{i}")).collect();
    Ok(Presentation::new(names, relators).expect("generated names are valid"))
}

/// `Σ_w P(w)`: the perimeter of the bouquet of the given words, before any folding.
pub fn relator_bound(w: &Weighting, words: &[Word]) -> u64 {
    words
        .iter()
        .map(|u| path_perimeter(w, &u.letters().iter().map(|&l| DirEdge::from(l)).collect::<Vec<_>>()))
        .sum()
}

/// `χ(Y) + P(Y → X)`.
pub fn euler_perimeter(m: &CombMap, w: &Weighting) -> i64 {
    m.euler_characteristic() + map_perimeter(w, m) as i64
}
