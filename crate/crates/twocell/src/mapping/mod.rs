//! Combinatorial maps `Y → X`: construction, folding, packing, lifting and fiber products.

mod bouquet;
mod fiber;
mod fold;
mod lift;
mod packing;

pub use bouquet::bouquet_map;
pub use fiber::{fiber_product, FiberProduct};
pub use fold::{apply_fold, find_fold, fold_once, fold_to_immersion, Fold};
pub use lift::{lift_path, Adjacency, PathInY};
pub use packing::{is_packed, remove_redundant, repair_packing};

use std::collections::BTreeSet;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complex::{Complex2, ComplexError, DirEdge, Side};

/// Where a domain 2-cell goes: position `j` of its boundary lands on position
/// `offset + j` of `∂cell`, or on `offset − j` traversed backwards when `reflected`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CellImage {
    pub cell: usize,
    pub offset: usize,
    pub reflected: bool,
}

impl CellImage {
    pub fn new(cell: usize, offset: usize) -> Self {
        CellImage { cell, offset, reflected: false }
    }

    /// Codomain boundary position hit by domain position `j`, for a boundary of length `m`.
    pub fn position(self, j: usize, m: usize) -> usize {
        if self.reflected {
            (self.offset + m - j % m) % m
        } else {
            (self.offset + j) % m
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error("expected {expected} {what} images, got {got}")]
    WrongLength { what: &'static str, expected: usize, got: usize },
    #[error("image of vertex {0} is not a codomain vertex")]
    BadVertexImage(usize),
    #[error("edge {0} is not mapped compatibly with its endpoints")]
    EdgeEndpointMismatch(usize),
    #[error("cell {cell} boundary does not match its image at position {position}")]
    BoundaryMismatch { cell: usize, position: usize },
    #[error("cell {0} maps to a cell of a different boundary length")]
    BoundaryLength(usize),
    #[error("the codomain must have a single vertex")]
    NotOneVertex,
    #[error("word uses generator {0}, which the codomain lacks")]
    UnknownGenerator(usize),
    #[error("no fold is available")]
    NoFold,
    #[error("the map is not a 1-immersion")]
    NotImmersion,
    #[error("start vertex does not map to the start of the path")]
    StartMismatch,
    #[error("maps have different codomains")]
    CodomainMismatch,
    #[error("map has no basepoint")]
    NoBasepoint,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CombMap {
    pub(crate) domain: Complex2,
    pub(crate) codomain: Arc<Complex2>,
    pub(crate) vertex_image: Vec<usize>,
    pub(crate) edge_image: Vec<DirEdge>,
    pub(crate) cell_image: Vec<CellImage>,
    pub(crate) basepoint: Option<usize>,
    /// A second tracked vertex, such as the free end of a whisker.
    pub(crate) marked: Option<usize>,
}

/// Two edge-ends at one vertex with the same outgoing image.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ImmersionWitness {
    pub vertex: usize,
    /// `(edge, at_target)` for each offending end.
    pub first: (usize, bool),
    pub second: (usize, bool),
}

impl CombMap {
    pub fn new(
        domain: Complex2,
        codomain: Arc<Complex2>,
        vertex_image: Vec<usize>,
        edge_image: Vec<DirEdge>,
        cell_image: Vec<CellImage>,
        basepoint: Option<usize>,
    ) -> Result<Self, MapError> {
        let m = CombMap {
            domain,
            codomain,
            vertex_image,
            edge_image,
            cell_image,
            basepoint,
            marked: None,
        };
        m.validate()?;
        Ok(m)
    }

    /// The identity map of `x`, based at vertex 0 if there is one.
    pub fn identity(x: Arc<Complex2>) -> Self {
        let domain = Complex2::from_parts_unchecked(x.vertex_count, x.edges.clone(), x.cells.clone());
        CombMap {
            vertex_image: (0..x.num_vertices()).collect(),
            edge_image: (0..x.num_edges()).map(DirEdge::fwd).collect(),
            cell_image: (0..x.num_cells()).map(|c| CellImage::new(c, 0)).collect(),
            basepoint: (x.num_vertices() > 0).then_some(0),
            marked: None,
            domain,
            codomain: x,
        }
    }

    /// Inclusion of the one-vertex subgraph spanned by the listed codomain edges.
    pub fn subgraph(x: Arc<Complex2>, edges: &[usize]) -> Result<Self, MapError> {
        if !x.is_one_vertex() {
            return Err(MapError::NotOneVertex);
        }
        if let Some(&e) = edges.iter().find(|&&e| e >= x.num_edges()) {
            return Err(MapError::UnknownGenerator(e));
        }
        let domain = Complex2::from_parts_unchecked(
            1,
            vec![crate::complex::Edge { source: 0, target: 0 }; edges.len()],
            Vec::new(),
        );
        Self::new(
            domain,
            x,
            vec![0],
            edges.iter().map(|&e| DirEdge::fwd(e)).collect(),
            Vec::new(),
            Some(0),
        )
    }

    pub fn validate(&self) -> Result<(), MapError> {
        let (y, x) = (&self.domain, &*self.codomain);
        y.validate()?;
        let check_len = |what, expected, got| {
            if expected == got {
                Ok(())
            } else {
                Err(MapError::WrongLength { what, expected, got })
            }
        };
        check_len("vertex", y.num_vertices(), self.vertex_image.len())?;
        check_len("edge", y.num_edges(), self.edge_image.len())?;
        check_len("cell", y.num_cells(), self.cell_image.len())?;
        if let Some(v) = self.vertex_image.iter().position(|&v| v >= x.num_vertices()) {
            return Err(MapError::BadVertexImage(v));
        }
        for (i, e) in y.edges().iter().enumerate() {
            let d = self.edge_image[i];
            if d.edge >= x.num_edges()
                || x.source(d) != self.vertex_image[e.source]
                || x.target(d) != self.vertex_image[e.target]
            {
                return Err(MapError::EdgeEndpointMismatch(i));
            }
        }
        for (s, b) in y.boundaries().iter().enumerate() {
            let ci = self.cell_image[s];
            if ci.cell >= x.num_cells() || x.boundary_len(ci.cell) != b.len() {
                return Err(MapError::BoundaryLength(s));
            }
            for (j, &d) in b.iter().enumerate() {
                if self.image_of(d) != self.expected_image(s, j) {
                    return Err(MapError::BoundaryMismatch { cell: s, position: j });
                }
            }
        }
        if let Some(p) = self.basepoint {
            if p >= y.num_vertices() {
                return Err(MapError::Complex(ComplexError::UnknownVertex(p)));
            }
        }
        Ok(())
    }

    pub fn domain(&self) -> &Complex2 {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<Complex2> {
        &self.codomain
    }

    pub fn vertex_image(&self) -> &[usize] {
        &self.vertex_image
    }

    pub fn edge_image(&self) -> &[DirEdge] {
        &self.edge_image
    }

    pub fn cell_image(&self) -> &[CellImage] {
        &self.cell_image
    }

    pub fn basepoint(&self) -> Option<usize> {
        self.basepoint
    }

    pub fn marked(&self) -> Option<usize> {
        self.marked
    }

    pub fn with_basepoint(mut self, p: usize) -> Self {
        self.basepoint = Some(p);
        self
    }

    pub fn with_marked(mut self, q: usize) -> Self {
        self.marked = Some(q);
        self
    }

    /// Image of a directed domain edge.
    pub fn image_of(&self, d: DirEdge) -> DirEdge {
        self.edge_image[d.edge].oriented(d.inv)
    }

    /// The codomain directed edge that position `j` of domain cell `s` must cover.
    fn expected_image(&self, s: usize, j: usize) -> DirEdge {
        let ci = self.cell_image[s];
        let m = self.codomain.boundary_len(ci.cell);
        self.codomain.boundary_at(ci.cell, ci.position(j, m)).oriented(ci.reflected)
    }

    /// Codomain side covered by position `j` of domain cell `s`.
    pub fn image_side(&self, s: usize, j: usize) -> Side {
        let ci = self.cell_image[s];
        let m = self.codomain.boundary_len(ci.cell);
        Side { cell: ci.cell, position: ci.position(j, m) }
    }

    /// For every domain edge, the sorted codomain sides present at it.
    pub fn present_sides(&self) -> Vec<Vec<Side>> {
        let mut t: Vec<BTreeSet<Side>> = vec![BTreeSet::new(); self.domain.num_edges()];
        for (s, b) in self.domain.boundaries().iter().enumerate() {
            for (j, d) in b.iter().enumerate() {
                t[d.edge].insert(self.image_side(s, j));
            }
        }
        t.into_iter().map(|s| s.into_iter().collect()).collect()
    }

    /// True if distinct sides at each domain edge have distinct images.
    pub fn is_near_immersion(&self) -> bool {
        let mut seen: Vec<BTreeSet<Side>> = vec![BTreeSet::new(); self.domain.num_edges()];
        for (s, b) in self.domain.boundaries().iter().enumerate() {
            for (j, d) in b.iter().enumerate() {
                if !seen[d.edge].insert(self.image_side(s, j)) {
                    return false;
                }
            }
        }
        true
    }

    /// `Ok` if no vertex has two edge-ends with the same outgoing image.
    pub fn check_1_immersion(&self) -> Result<(), ImmersionWitness> {
        match find_fold(self) {
            None => Ok(()),
            Some(f) => Err(ImmersionWitness {
                vertex: f.vertex,
                first: f.keep_end,
                second: f.remove_end,
            }),
        }
    }

    pub fn is_1_immersion(&self) -> bool {
        self.check_1_immersion().is_ok()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.domain.euler_characteristic()
    }

    /// True if the domain is connected (an empty domain counts as connected).
    pub fn is_connected(&self) -> bool {
        let y = &self.domain;
        if y.num_vertices() == 0 {
            return true;
        }
        let mut uf = UnionFind::new(y.num_vertices());
        for e in y.edges() {
            uf.union(e.source, e.target);
        }
        (1..y.num_vertices()).all(|v| uf.find(v) == uf.find(0))
    }

    /// Replaces the vertex set by its quotient under the given identifications, keeping the
    /// least-indexed vertex of each class and the relative order of survivors.
    pub(crate) fn identify_vertices(&mut self, pairs: &[(usize, usize)]) {
        if pairs.iter().all(|&(a, b)| a == b) {
            return;
        }
        let n = self.domain.vertex_count;
        let mut uf = UnionFind::new(n);
        for &(a, b) in pairs {
            uf.union(a, b);
        }
        let mut new_id = vec![usize::MAX; n];
        let mut count = 0;
        let mut image = Vec::new();
        for v in 0..n {
            let r = uf.find(v);
            if new_id[r] == usize::MAX {
                new_id[r] = count;
                image.push(self.vertex_image[v]);
                count += 1;
            }
            new_id[v] = new_id[r];
        }
        for e in &mut self.domain.edges {
            e.source = new_id[e.source];
            e.target = new_id[e.target];
        }
        self.domain.vertex_count = count;
        self.vertex_image = image;
        self.basepoint = self.basepoint.map(|p| new_id[p]);
        self.marked = self.marked.map(|q| new_id[q]);
    }

    pub(crate) fn add_vertex(&mut self, image: usize) -> usize {
        self.domain.vertex_count += 1;
        self.vertex_image.push(image);
        self.domain.vertex_count - 1
    }

    /// Adds an edge from `from` to `to` covering the codomain directed edge `image`.
    pub(crate) fn add_edge(&mut self, from: usize, to: usize, image: DirEdge) -> DirEdge {
        let e = self.domain.edges.len();
        if image.inv {
            self.domain.edges.push(crate::complex::Edge { source: to, target: from });
            self.edge_image.push(image.inverse());
            DirEdge::new(e, true)
        } else {
            self.domain.edges.push(crate::complex::Edge { source: from, target: to });
            self.edge_image.push(image);
            DirEdge::fwd(e)
        }
    }

    pub(crate) fn add_cell(&mut self, boundary: Vec<DirEdge>, image: CellImage) -> usize {
        self.domain.cells.push(boundary);
        self.cell_image.push(image);
        self.domain.cells.len() - 1
    }

    pub(crate) fn remove_cells(&mut self, doomed: &[bool]) {
        let mut k = 0;
        self.domain.cells.retain(|_| {
            k += 1;
            !doomed[k - 1]
        });
        let mut k = 0;
        self.cell_image.retain(|_| {
            k += 1;
            !doomed[k - 1]
        });
    }
}

/// Every way a closed path in the codomain can be the boundary image of a 2-cell.
pub fn cell_images_for(x: &Complex2, boundary_image: &[DirEdge]) -> Vec<CellImage> {
    let m = boundary_image.len();
    let mut out = Vec::new();
    for c in 0..x.num_cells() {
        if x.boundary_len(c) != m || m == 0 {
            continue;
        }
        for reflected in [false, true] {
            for offset in 0..m {
                let ci = CellImage { cell: c, offset, reflected };
                let ok = (0..m).all(|j| {
                    boundary_image[j] == x.boundary_at(c, ci.position(j, m)).oriented(reflected)
                });
                if ok {
                    out.push(ci);
                }
            }
        }
    }
    out
}

#[derive(Clone, Debug)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    /// Merges the classes of `a` and `b`; the smaller root survives.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = (ra.min(rb), ra.max(rb));
        self.parent[hi] = lo;
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{standard_complex, Edge};
    use crate::presentation::Presentation;

    #[test]
    fn identity_is_valid_and_immersed() {
        let x = Arc::new(standard_complex(
            &Presentation::from_strs(&["a", "b"], &["a b a^-1 b^-1"]).unwrap(),
        ));
        let id = CombMap::identity(x);
        assert_eq!(id.validate(), Ok(()));
        assert!(id.is_1_immersion());
        assert!(id.is_near_immersion());
    }

    #[test]
    fn reflected_cell_images_validate() {
        let x = Arc::new(standard_complex(&Presentation::from_strs(&["a", "b"], &["a b"]).unwrap()));
        let y = Complex2::new(
            2,
            vec![Edge { source: 0, target: 1 }, Edge { source: 1, target: 0 }],
            vec![vec![DirEdge::new(1, true), DirEdge::new(0, true)]],
        )
        .unwrap();
        let imgs = cell_images_for(&x, &[DirEdge::new(1, true), DirEdge::new(0, true)]);
        assert_eq!(imgs, vec![CellImage { cell: 0, offset: 1, reflected: true }]);
        let m = CombMap::new(
            y,
            x,
            vec![0, 0],
            vec![DirEdge::fwd(0), DirEdge::fwd(1)],
            imgs,
            Some(0),
        )
        .unwrap();
        assert_eq!(m.image_side(0, 0), Side { cell: 0, position: 1 });
        assert_eq!(m.image_side(0, 1), Side { cell: 0, position: 0 });
    }

    #[test]
    fn bad_boundary_image_is_rejected() {
        let x = Arc::new(standard_complex(&Presentation::from_strs(&["a", "b"], &["a b"]).unwrap()));
        let y = Complex2::new(
            1,
            vec![Edge { source: 0, target: 0 }, Edge { source: 0, target: 0 }],
            vec![vec![DirEdge::fwd(0), DirEdge::fwd(1)]],
        )
        .unwrap();
        let r = CombMap::new(
            y,
            x,
            vec![0],
            vec![DirEdge::fwd(1), DirEdge::fwd(0)],
            vec![CellImage::new(0, 0)],
            Some(0),
        );
        assert!(matches!(r, Err(MapError::BoundaryMismatch { .. })));
    }
}
