use std::collections::HashMap;

use super::{CombMap, MapError};
use crate::complex::DirEdge;

/// A path in a complex: `vertices.len() == edges.len() + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PathInY {
    pub vertices: Vec<usize>,
    pub edges: Vec<DirEdge>,
}

impl PathInY {
    pub fn trivial(v: usize) -> Self {
        PathInY { vertices: vec![v], edges: Vec::new() }
    }

    pub fn start(&self) -> usize {
        self.vertices[0]
    }

    pub fn end(&self) -> usize {
        *self.vertices.last().expect("a path has a vertex")
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_closed(&self) -> bool {
        self.start() == self.end()
    }
}

/// Outgoing directed edges at each domain vertex, keyed by their image.
#[derive(Clone, Debug)]
pub struct Adjacency {
    out: HashMap<(usize, DirEdge), (DirEdge, usize)>,
}

impl Adjacency {
    /// Assumes a 1-immersion; where images collide the lower edge index wins.
    pub fn new(m: &CombMap) -> Self {
        let mut out = HashMap::new();
        for (e, edge) in m.domain.edges().iter().enumerate().rev() {
            let img = m.edge_image[e];
            out.insert((edge.source, img), (DirEdge::fwd(e), edge.target));
            out.insert((edge.target, img.inverse()), (DirEdge::new(e, true), edge.source));
        }
        Adjacency { out }
    }

    /// The domain edge leaving `v` over `image`, with its far endpoint.
    pub fn step(&self, v: usize, image: DirEdge) -> Option<(DirEdge, usize)> {
        self.out.get(&(v, image)).copied()
    }

    /// The longest prefix of `path` that lifts from `start`.
    pub fn lift_prefix(&self, path: &[DirEdge], start: usize) -> PathInY {
        let mut p = PathInY::trivial(start);
        for &d in path {
            match self.step(p.end(), d) {
                Some((e, w)) => {
                    p.edges.push(e);
                    p.vertices.push(w);
                }
                None => break,
            }
        }
        p
    }
}

/// The lift of a codomain path starting at a domain vertex, or `None` if it dies.
pub fn lift_path(m: &CombMap, path: &[DirEdge], start: usize) -> Result<Option<PathInY>, MapError> {
    if start >= m.domain.num_vertices() {
        return Err(MapError::StartMismatch);
    }
    if let Some(&d) = path.first() {
        if m.codomain.source(d) != m.vertex_image[start] {
            return Err(MapError::StartMismatch);
        }
    }
    if !m.is_1_immersion() {
        return Err(MapError::NotImmersion);
    }
    let p = Adjacency::new(m).lift_prefix(path, start);
    Ok((p.len() == path.len()).then_some(p))
}
