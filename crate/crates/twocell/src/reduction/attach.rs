use std::collections::{BTreeSet, HashMap, HashSet};

use serde::Serialize;

use super::{CandidateQ, CandidateTable, ReduceError, ReductionMode};
use crate::complex::{DirEdge, Side};
use crate::mapping::{remove_redundant, Adjacency, CellImage, CombMap, PathInY};
use crate::perimeter::{missing_weight, Weighting};

/// A maximal lift of a boundary subpath `Q` of some 2-cell along which the packet does not lift.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AttachmentSite {
    pub candidate: CandidateQ,
    pub lift: PathInY,
    /// `Q` is the whole boundary.
    pub complete: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AttachOutcome {
    pub complete: bool,
    pub delta: i64,
    pub cells_added: usize,
    pub edges_added: usize,
}

/// Missing weight summed over a set of domain edges.
pub(crate) fn local_missing(w: &Weighting, m: &CombMap, edges: &BTreeSet<usize>) -> u64 {
    let mut present: HashMap<usize, BTreeSet<Side>> = edges.iter().map(|&e| (e, BTreeSet::new())).collect();
    for (s, b) in m.domain.boundaries().iter().enumerate() {
        for (j, d) in b.iter().enumerate() {
            if let Some(set) = present.get_mut(&d.edge) {
                set.insert(m.image_side(s, j));
            }
        }
    }
    edges
        .iter()
        .map(|&e| {
            let p: Vec<Side> = present[&e].iter().copied().collect();
            missing_weight(w, m.edge_image[e].edge, &p)
        })
        .sum()
}

struct Run {
    start: usize,
    lift: PathInY,
    order: usize,
}

/// Maximal runs through `(y, p)` seeds whose side is absent, for one codomain cell.
fn runs_for_cell(m: &CombMap, adj: &Adjacency, present: &[Vec<Side>], c: usize) -> Vec<Run> {
    let x = &m.codomain;
    let r = x.boundary(c);
    let len = r.len();
    let mut by_edge: HashMap<usize, Vec<usize>> = HashMap::new();
    for (p, d) in r.iter().enumerate() {
        by_edge.entry(d.edge).or_default().push(p);
    }
    let mut visited: HashSet<(usize, usize)> = HashSet::new();
    let mut out = Vec::new();
    for (y, here) in present.iter().enumerate().take(m.domain.num_edges()) {
        let img = m.edge_image[y];
        let Some(ps) = by_edge.get(&img.edge) else { continue };
        for &p in ps {
            if visited.contains(&(y, p)) || here.contains(&Side { cell: c, position: p }) {
                continue;
            }
            let dy = DirEdge::new(y, img != r[p]);
            let mut fwd = vec![dy];
            let mut fwd_v = vec![m.domain.target(dy)];
            while fwd.len() < len {
                let q = (p + fwd.len()) % len;
                match adj.step(*fwd_v.last().unwrap(), r[q]) {
                    Some((e, v)) => {
                        fwd.push(e);
                        fwd_v.push(v);
                    }
                    None => break,
                }
            }
            let mut back = Vec::new();
            let mut back_v = vec![m.domain.source(dy)];
            while fwd.len() + back.len() < len {
                let q = (p + len - 1 - back.len()) % len;
                match adj.step(*back_v.last().unwrap(), r[q].inverse()) {
                    Some((e, v)) => {
                        back.push(e.inverse());
                        back_v.push(v);
                    }
                    None => break,
                }
            }
            let start = (p + len - back.len()) % len;
            back.reverse();
            back_v.reverse();
            back.extend(fwd);
            back_v.extend(fwd_v);
            let lift = PathInY { vertices: back_v, edges: back };
            for (k, d) in lift.edges.iter().enumerate() {
                visited.insert((d.edge, (start + k) % len));
            }
            out.push(Run { start, lift, order: out.len() });
        }
    }
    out
}

/// The next attachment site, or `None` when the map is reduced.
///
/// `(weak mode and strict site, cell, longest first, discovery order)`.
type SiteKey = (bool, usize, std::cmp::Reverse<usize>, usize);

/// Strict mode takes the lowest-indexed cell with a site, then the longest `Q`, then discovery
/// order. Weak mode ranks equality sites (`P(S) = n·Wt`) ahead of strict ones and otherwise
/// orders the same way.
pub fn find_attachment(m: &CombMap, table: &CandidateTable, mode: ReductionMode) -> Option<AttachmentSite> {
    let adj = Adjacency::new(m);
    let present = m.present_sides();
    let mut best: Option<(SiteKey, AttachmentSite)> = None;
    for c in 0..m.codomain.num_cells() {
        for run in runs_for_cell(m, &adj, &present, c) {
            let Some(q) = table.get(c, run.start, run.lift.len()) else { continue };
            if mode == ReductionMode::Strict && !q.strict {
                continue;
            }
            let key = (mode == ReductionMode::Weak && q.strict, c, std::cmp::Reverse(q.length), run.order);
            if best.as_ref().is_none_or(|(k, _)| key < *k) {
                best = Some((key, AttachmentSite { candidate: q, complete: q.length == m.codomain.boundary_len(c), lift: run.lift }));
            }
        }
        if mode == ReductionMode::Strict && best.is_some() {
            break;
        }
    }
    best.map(|(_, s)| s)
}

fn check_site(m: &CombMap, site: &AttachmentSite) -> Result<(), ReduceError> {
    let q = site.candidate;
    let x = &m.codomain;
    if q.cell >= x.num_cells() || site.lift.len() != q.length || site.lift.vertices.len() != q.length + 1 {
        return Err(ReduceError::StaleSite);
    }
    for (k, &d) in site.lift.edges.iter().enumerate() {
        if d.edge >= m.domain.num_edges()
            || m.domain.source(d) != site.lift.vertices[k]
            || m.domain.target(d) != site.lift.vertices[k + 1]
            || m.image_of(d) != x.boundary_at(q.cell, q.start + k)
        {
            return Err(ReduceError::StaleSite);
        }
    }
    Ok(())
}

/// Attaches the packet of the site's cell along its lift, then drops redundant cells.
///
/// For incomplete `Q` the complement `S` is added as a new arc and `ΔP = P(S) − n·Wt(R)`.
/// For complete `Q` the endpoints are identified and `ΔP` is measured on the edges of `Q`.
pub fn attach_packet(m: &mut CombMap, w: &Weighting, site: &AttachmentSite) -> Result<AttachOutcome, ReduceError> {
    check_site(m, site)?;
    let q = site.candidate;
    let x = m.codomain.clone();
    let len = x.boundary_len(q.cell);
    let (period, n) = x.cell_period(q.cell)?;
    let mut circle = site.lift.edges.clone();
    let outcome = if q.length < len {
        let (u, v) = (site.lift.end(), site.lift.start());
        let mut at = u;
        let s_len = len - q.length;
        for k in 0..s_len {
            let d = x.boundary_at(q.cell, q.start + q.length + k);
            let next = if k + 1 == s_len { v } else { m.add_vertex(x.target(d)) };
            circle.push(m.add_edge(at, next, d));
            at = next;
        }
        for k in 0..n {
            m.add_cell(circle.clone(), CellImage::new(q.cell, (q.start + k * period) % len));
        }
        AttachOutcome {
            complete: false,
            delta: q.s_perimeter as i64 - q.bound as i64,
            cells_added: n,
            edges_added: s_len,
        }
    } else {
        let edges: BTreeSet<usize> = circle.iter().map(|d| d.edge).collect();
        let before = local_missing(w, m, &edges);
        m.identify_vertices(&[(site.lift.start(), site.lift.end())]);
        for k in 0..n {
            m.add_cell(circle.clone(), CellImage::new(q.cell, (q.start + k * period) % len));
        }
        let after = local_missing(w, m, &edges);
        AttachOutcome { complete: true, delta: after as i64 - before as i64, cells_added: n, edges_added: 0 }
    };
    let removed = remove_redundant(m);
    Ok(AttachOutcome { cells_added: outcome.cells_added - removed, ..outcome })
}
