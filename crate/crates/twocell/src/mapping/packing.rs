use std::collections::{HashMap, HashSet};

use super::{CellImage, CombMap};
use crate::complex::DirEdge;

type CellKey = (usize, Vec<(DirEdge, usize)>);

fn min_rotation<T: Ord + Clone>(s: &[T]) -> Vec<T> {
    let n = s.len();
    (0..n)
        .map(|k| s[k..].iter().chain(&s[..k]).cloned().collect::<Vec<T>>())
        .min()
        .unwrap_or_default()
}

/// Boundary cycle of a domain cell together with the codomain side under each position, up to
/// rotation and reversal. Two cells are redundant copies of each other exactly when keys agree.
fn key_for(boundary: &[DirEdge], image: CellImage, m: usize) -> CellKey {
    let n = boundary.len();
    let fwd: Vec<(DirEdge, usize)> =
        (0..n).map(|j| (boundary[j], image.position(j, m))).collect();
    let bwd: Vec<(DirEdge, usize)> = (0..n)
        .map(|j| {
            let (d, p) = fwd[n - 1 - j];
            (d.inverse(), p)
        })
        .collect();
    (image.cell, min_rotation(&fwd).min(min_rotation(&bwd)))
}

fn cell_key(map: &CombMap, s: usize) -> CellKey {
    let ci = map.cell_image[s];
    key_for(map.domain.boundary(s), ci, map.codomain.boundary_len(ci.cell))
}

/// Deletes later copies of 2-cells that share a boundary cycle and image. Returns how many went.
pub fn remove_redundant(map: &mut CombMap) -> usize {
    let mut seen = HashSet::new();
    let doomed: Vec<bool> =
        (0..map.domain.num_cells()).map(|s| !seen.insert(cell_key(map, s))).collect();
    let n = doomed.iter().filter(|&&d| d).count();
    if n > 0 {
        map.remove_cells(&doomed);
    }
    n
}

/// Packet siblings that a packed map would need but does not have.
fn missing_siblings(map: &CombMap) -> Vec<(usize, CellImage)> {
    let x = &map.codomain;
    let mut keys: HashSet<CellKey> = (0..map.domain.num_cells()).map(|s| cell_key(map, s)).collect();
    let mut periods = HashMap::new();
    let mut out = Vec::new();
    for s in 0..map.domain.num_cells() {
        let ci = map.cell_image[s];
        let (p, n) = *periods
            .entry(ci.cell)
            .or_insert_with(|| x.cell_period(ci.cell).expect("image cell exists"));
        let len = x.boundary_len(ci.cell);
        for k in 1..n {
            let sib = CellImage { offset: (ci.offset + k * p) % len, ..ci };
            if keys.insert(key_for(map.domain.boundary(s), sib, len)) {
                out.push((s, sib));
            }
        }
    }
    out
}

/// True if every 2-cell of the domain comes with its whole packet.
pub fn is_packed(map: &CombMap) -> bool {
    missing_siblings(map).is_empty()
}

/// Adds the missing packet siblings along existing boundary cycles. Returns how many were added.
pub fn repair_packing(map: &mut CombMap) -> usize {
    let missing = missing_siblings(map);
    for &(s, sib) in &missing {
        let b = map.domain.boundary(s).to_vec();
        map.add_cell(b, sib);
    }
    missing.len()
}
