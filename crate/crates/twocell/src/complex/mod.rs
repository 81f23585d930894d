//! Combinatorial 2-complexes: cells, sides, periods, packets, links and pieces.

mod link;
mod packet;
mod pieces;

pub use link::{link_graph, LinkGraph};
pub use packet::{build_packet, Packet};
pub use pieces::{
    check_small_cancellation, compute_pieces, compute_pieces_with, min_piece_cover, Occurrence,
    PiecePair, PieceTable, SmallCancellationReport,
};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::presentation::Presentation;
use crate::word::{cyclic_period, Letter, Word};

/// An edge traversed in a given direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DirEdge {
    pub edge: usize,
    pub inv: bool,
}

impl DirEdge {
    pub fn new(edge: usize, inv: bool) -> Self {
        DirEdge { edge, inv }
    }

    pub fn fwd(edge: usize) -> Self {
        DirEdge { edge, inv: false }
    }

    pub fn inverse(self) -> Self {
        DirEdge { edge: self.edge, inv: !self.inv }
    }

    /// Applies an orientation: `self` if `flip` is false, its inverse otherwise.
    pub fn oriented(self, flip: bool) -> Self {
        DirEdge { edge: self.edge, inv: self.inv ^ flip }
    }
}

impl From<Letter> for DirEdge {
    fn from(l: Letter) -> Self {
        DirEdge { edge: l.gen, inv: l.inv }
    }
}

impl From<DirEdge> for Letter {
    fn from(d: DirEdge) -> Self {
        Letter { gen: d.edge, inv: d.inv }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub source: usize,
    pub target: usize,
}

/// A boundary position of a 2-cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Side {
    pub cell: usize,
    pub position: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("edge {edge} has an endpoint outside the {vertices} vertices")]
    VertexOutOfRange { edge: usize, vertices: usize },
    #[error("cell {cell} refers to edge {edge}, which does not exist")]
    EdgeOutOfRange { cell: usize, edge: usize },
    #[error("cell {0} has an empty boundary")]
    EmptyBoundary(usize),
    #[error("boundary of cell {cell} does not chain at position {position}")]
    BrokenBoundary { cell: usize, position: usize },
    #[error("boundary of cell {cell} backtracks at position {position}")]
    Backtrack { cell: usize, position: usize },
    #[error("no edge {0}")]
    UnknownEdge(usize),
    #[error("no cell {0}")]
    UnknownCell(usize),
    #[error("no vertex {0}")]
    UnknownVertex(usize),
    #[error("subpath start {start} length {length} does not fit a boundary of length {boundary}")]
    InvalidSubpath { start: usize, length: usize, boundary: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Complex2 {
    pub(crate) vertex_count: usize,
    pub(crate) edges: Vec<Edge>,
    pub(crate) cells: Vec<Vec<DirEdge>>,
    /// Display names; empty means `e0`, `e1`, ….
    pub(crate) edge_names: Vec<String>,
}

impl Complex2 {
    /// Builds a complex, checking that every boundary is a closed immersed path.
    pub fn new(
        vertex_count: usize,
        edges: Vec<Edge>,
        cells: Vec<Vec<DirEdge>>,
    ) -> Result<Self, ComplexError> {
        let x = Complex2 { vertex_count, edges, cells, edge_names: Vec::new() };
        x.validate()?;
        Ok(x)
    }

    pub fn with_names(
        vertex_count: usize,
        edges: Vec<Edge>,
        cells: Vec<Vec<DirEdge>>,
        edge_names: Vec<String>,
    ) -> Result<Self, ComplexError> {
        assert_eq!(edge_names.len(), edges.len(), "one name per edge");
        let x = Complex2 { vertex_count, edges, cells, edge_names };
        x.validate()?;
        Ok(x)
    }

    pub(crate) fn from_parts_unchecked(
        vertex_count: usize,
        edges: Vec<Edge>,
        cells: Vec<Vec<DirEdge>>,
    ) -> Self {
        let x = Complex2 { vertex_count, edges, cells, edge_names: Vec::new() };
        debug_assert_eq!(x.validate(), Ok(()));
        x
    }

    pub fn validate(&self) -> Result<(), ComplexError> {
        for (i, e) in self.edges.iter().enumerate() {
            if e.source >= self.vertex_count || e.target >= self.vertex_count {
                return Err(ComplexError::VertexOutOfRange { edge: i, vertices: self.vertex_count });
            }
        }
        for (c, b) in self.cells.iter().enumerate() {
            if b.is_empty() {
                return Err(ComplexError::EmptyBoundary(c));
            }
            if let Some(d) = b.iter().find(|d| d.edge >= self.edges.len()) {
                return Err(ComplexError::EdgeOutOfRange { cell: c, edge: d.edge });
            }
            let n = b.len();
            for i in 0..n {
                let (d, e) = (b[i], b[(i + 1) % n]);
                if self.target(d) != self.source(e) {
                    return Err(ComplexError::BrokenBoundary { cell: c, position: i });
                }
                if e == d.inverse() {
                    return Err(ComplexError::Backtrack { cell: c, position: i });
                }
            }
        }
        Ok(())
    }

    pub fn num_vertices(&self) -> usize {
        self.vertex_count
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn num_cells(&self) -> usize {
        self.cells.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> Edge {
        self.edges[e]
    }

    pub fn edge_name(&self, e: usize) -> String {
        self.edge_names.get(e).cloned().unwrap_or_else(|| format!("e{e}"))
    }

    pub fn edge_names(&self) -> Vec<String> {
        (0..self.edges.len()).map(|e| self.edge_name(e)).collect()
    }

    pub fn boundary(&self, c: usize) -> &[DirEdge] {
        &self.cells[c]
    }

    pub fn boundaries(&self) -> &[Vec<DirEdge>] {
        &self.cells
    }

    pub fn boundary_len(&self, c: usize) -> usize {
        self.cells[c].len()
    }

    pub fn source(&self, d: DirEdge) -> usize {
        let e = self.edges[d.edge];
        if d.inv {
            e.target
        } else {
            e.source
        }
    }

    pub fn target(&self, d: DirEdge) -> usize {
        let e = self.edges[d.edge];
        if d.inv {
            e.source
        } else {
            e.target
        }
    }

    /// Directed edge at position `i` of `∂c`, taken cyclically.
    pub fn boundary_at(&self, c: usize, i: usize) -> DirEdge {
        let b = &self.cells[c];
        b[i % b.len()]
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count as i64 - self.edges.len() as i64 + self.cells.len() as i64
    }

    pub fn total_sides(&self) -> usize {
        self.cells.iter().map(|b| b.len()).sum()
    }

    /// All sides of `x` traversing edge `e` in either direction.
    pub fn sides_at(&self, e: usize) -> Result<Vec<Side>, ComplexError> {
        if e >= self.edges.len() {
            return Err(ComplexError::UnknownEdge(e));
        }
        Ok(self
            .cells
            .iter()
            .enumerate()
            .flat_map(|(c, b)| {
                b.iter()
                    .enumerate()
                    .filter(move |(_, d)| d.edge == e)
                    .map(move |(i, _)| Side { cell: c, position: i })
            })
            .collect())
    }

    /// `sides_at` for every edge at once.
    pub fn side_table(&self) -> Vec<Vec<Side>> {
        let mut t = vec![Vec::new(); self.edges.len()];
        for (c, b) in self.cells.iter().enumerate() {
            for (i, d) in b.iter().enumerate() {
                t[d.edge].push(Side { cell: c, position: i });
            }
        }
        t
    }

    /// `(period length, exponent)` of the boundary of `c` as a cyclic edge word.
    pub fn cell_period(&self, c: usize) -> Result<(usize, usize), ComplexError> {
        let b = self.cells.get(c).ok_or(ComplexError::UnknownCell(c))?;
        let p = cyclic_period(b);
        Ok((p, b.len() / p))
    }

    pub fn boundary_word(&self, c: usize) -> Word {
        Word(self.cells[c].iter().map(|&d| d.into()).collect())
    }

    /// True if there is one vertex and every edge is a loop at it.
    pub fn is_one_vertex(&self) -> bool {
        self.vertex_count == 1
    }
}

/// One vertex, one edge per generator, one 2-cell per relator.
pub fn standard_complex(p: &Presentation) -> Complex2 {
    let edges = vec![Edge { source: 0, target: 0 }; p.num_generators()];
    let cells = p
        .relators()
        .iter()
        .map(|r| r.0.iter().map(|&l| DirEdge::from(l)).collect())
        .collect();
    Complex2::with_names(1, edges, cells, p.generators().to_vec())
        .expect("relators of a presentation are cyclically reduced")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn std(gens: &[&str], rels: &[&str]) -> Complex2 {
        standard_complex(&Presentation::from_strs(gens, rels).unwrap())
    }

    #[test]
    fn standard_complex_shapes() {
        let x = std(&["a", "b"], &["a b a^-1 b^-1"]);
        assert_eq!((x.num_vertices(), x.num_edges(), x.num_cells()), (1, 2, 1));
        assert_eq!(x.boundary_len(0), 4);
        let x = std(&["a"], &[]);
        assert_eq!((x.num_vertices(), x.num_edges(), x.num_cells()), (1, 1, 0));
        let x = std(&["a", "b"], &["(a a b)^3"]);
        assert_eq!(x.boundary_len(0), 9);
    }

    #[test]
    fn side_counts() {
        let x = std(&["a", "b"], &["(a a b)^3"]);
        assert_eq!(x.sides_at(0).unwrap().len(), 6);
        assert_eq!(x.sides_at(1).unwrap().len(), 3);
        assert!(x.sides_at(2).is_err());
        let x = std(&["a"], &[]);
        assert!(x.sides_at(0).unwrap().is_empty());
    }

    #[test]
    fn periods() {
        let x = std(&["a", "b"], &["(a a b)^3", "a b a^-1 b^-1", "a^6"]);
        assert_eq!(x.cell_period(0).unwrap(), (3, 3));
        assert_eq!(x.cell_period(1).unwrap(), (4, 1));
        assert_eq!(x.cell_period(2).unwrap(), (1, 6));
    }

    #[test]
    fn validation_rejects_bad_boundaries() {
        let edges = vec![Edge { source: 0, target: 1 }, Edge { source: 1, target: 0 }];
        let ok = Complex2::new(2, edges.clone(), vec![vec![DirEdge::fwd(0), DirEdge::fwd(1)]]);
        assert!(ok.is_ok());
        let broken = Complex2::new(2, edges.clone(), vec![vec![DirEdge::fwd(0), DirEdge::fwd(0)]]);
        assert!(matches!(broken, Err(ComplexError::BrokenBoundary { .. })));
        let back = Complex2::new(2, edges, vec![vec![DirEdge::fwd(0), DirEdge::new(0, true)]]);
        assert!(matches!(back, Err(ComplexError::Backtrack { .. })));
    }
}
