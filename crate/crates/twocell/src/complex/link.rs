use std::collections::{BTreeSet, HashMap, VecDeque};

use super::{Complex2, ComplexError, DirEdge};

/// The link of a vertex: one node per edge-end at the vertex, one link edge per corner of a 2-cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkGraph {
    /// `(edge, at_target)`: the end of `edge` lying at the vertex.
    pub nodes: Vec<(usize, bool)>,
    /// One entry per corner, so parallel link edges appear more than once.
    pub edges: Vec<(usize, usize)>,
    /// Shortest cycle in the underlying simple graph; `None` for a forest.
    pub girth: Option<usize>,
}

fn arrival_end(d: DirEdge) -> (usize, bool) {
    (d.edge, !d.inv)
}

fn departure_end(d: DirEdge) -> (usize, bool) {
    (d.edge, d.inv)
}

pub fn link_graph(x: &Complex2, v: usize) -> Result<LinkGraph, ComplexError> {
    if v >= x.num_vertices() {
        return Err(ComplexError::UnknownVertex(v));
    }
    let mut nodes = Vec::new();
    let mut index = HashMap::new();
    for (i, e) in x.edges().iter().enumerate() {
        for (at_target, w) in [(false, e.source), (true, e.target)] {
            if w == v {
                index.insert((i, at_target), nodes.len());
                nodes.push((i, at_target));
            }
        }
    }
    let mut edges = Vec::new();
    for b in x.boundaries() {
        let n = b.len();
        for i in 0..n {
            let (d, e) = (b[i], b[(i + 1) % n]);
            if x.target(d) != v {
                continue;
            }
            edges.push((index[&arrival_end(d)], index[&departure_end(e)]));
        }
    }
    let girth = simple_girth(nodes.len(), &edges);
    Ok(LinkGraph { nodes, edges, girth })
}

fn simple_girth(n: usize, edges: &[(usize, usize)]) -> Option<usize> {
    let simple: BTreeSet<(usize, usize)> = edges
        .iter()
        .filter(|(a, b)| a != b)
        .map(|&(a, b)| (a.min(b), a.max(b)))
        .collect();
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in &simple {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut best: Option<usize> = None;
    for root in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            if best.is_some_and(|g| 2 * dist[u] >= g) {
                break;
            }
            for &w in &adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    best = Some(best.map_or(len, |g| g.min(len)));
                }
            }
        }
    }
    best
}
