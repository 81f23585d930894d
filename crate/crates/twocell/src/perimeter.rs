//! Side weightings and perimeters of maps, paths and packets.

use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::complex::{build_packet, Complex2, ComplexError, DirEdge, Side};
use crate::mapping::CombMap;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeightError {
    #[error("expected weights for {expected} cells, got {got}")]
    CellCount { expected: usize, got: usize },
    #[error("cell {cell} has {expected} sides but {got} weights")]
    SideCount { cell: usize, expected: usize, got: usize },
    #[error("cell {0} has total weight 0")]
    ZeroCell(usize),
    #[error("expected one weight per edge ({expected}), got {got}")]
    EdgeCount { expected: usize, got: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PerimeterError {
    #[error("the map is not a near-immersion")]
    NotNearImmersion,
    #[error("weighting does not belong to this complex")]
    WrongComplex,
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

/// Nonnegative integer weights on the sides of a complex, with cached edge perimeters and cell weights.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Weighting {
    sides: Vec<Vec<u64>>,
    edge_perimeter: Vec<u64>,
    cell_weight: Vec<u64>,
}

impl Weighting {
    /// Checks shape and that every cell weighs something.
    pub fn new(x: &Complex2, sides: Vec<Vec<u64>>) -> Result<Self, WeightError> {
        let w = Self::from_raw(x, sides)?;
        w.validate()?;
        Ok(w)
    }

    /// Checks shape only; cells of weight zero are allowed.
    pub fn from_raw(x: &Complex2, sides: Vec<Vec<u64>>) -> Result<Self, WeightError> {
        if sides.len() != x.num_cells() {
            return Err(WeightError::CellCount { expected: x.num_cells(), got: sides.len() });
        }
        for (c, s) in sides.iter().enumerate() {
            if s.len() != x.boundary_len(c) {
                return Err(WeightError::SideCount {
                    cell: c,
                    expected: x.boundary_len(c),
                    got: s.len(),
                });
            }
        }
        let mut edge_perimeter = vec![0; x.num_edges()];
        for (c, b) in x.boundaries().iter().enumerate() {
            for (i, d) in b.iter().enumerate() {
                edge_perimeter[d.edge] += sides[c][i];
            }
        }
        let cell_weight = sides.iter().map(|s| s.iter().sum()).collect();
        Ok(Weighting { sides, edge_perimeter, cell_weight })
    }

    pub fn unit(x: &Complex2) -> Self {
        let sides = (0..x.num_cells()).map(|c| vec![1; x.boundary_len(c)]).collect();
        Self::new(x, sides).expect("boundaries are nonempty")
    }

    /// Every side lying over edge `e` gets `per_edge[e]`.
    pub fn per_edge(x: &Complex2, per_edge: &[u64]) -> Result<Self, WeightError> {
        if per_edge.len() != x.num_edges() {
            return Err(WeightError::EdgeCount { expected: x.num_edges(), got: per_edge.len() });
        }
        let sides = x
            .boundaries()
            .iter()
            .map(|b| b.iter().map(|d| per_edge[d.edge]).collect())
            .collect();
        Self::new(x, sides)
    }

    /// Every side of cell `c` gets `per_cell[c]`.
    pub fn per_cell(x: &Complex2, per_cell: &[u64]) -> Result<Self, WeightError> {
        if per_cell.len() != x.num_cells() {
            return Err(WeightError::CellCount { expected: x.num_cells(), got: per_cell.len() });
        }
        let sides = (0..x.num_cells()).map(|c| vec![per_cell[c]; x.boundary_len(c)]).collect();
        Self::new(x, sides)
    }

    pub fn validate(&self) -> Result<(), WeightError> {
        match self.cell_weight.iter().position(|&w| w == 0) {
            Some(c) => Err(WeightError::ZeroCell(c)),
            None => Ok(()),
        }
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    /// True if the shape matches `x`.
    pub fn fits(&self, x: &Complex2) -> bool {
        self.sides.len() == x.num_cells()
            && self.edge_perimeter.len() == x.num_edges()
            && self.sides.iter().enumerate().all(|(c, s)| s.len() == x.boundary_len(c))
    }

    pub fn side_weights(&self) -> &[Vec<u64>] {
        &self.sides
    }

    pub fn side(&self, s: Side) -> u64 {
        self.sides[s.cell][s.position]
    }

    pub fn edge_perimeter(&self, e: usize) -> u64 {
        self.edge_perimeter[e]
    }

    pub fn edge_perimeters(&self) -> &[u64] {
        &self.edge_perimeter
    }

    pub fn cell_weight(&self, c: usize) -> u64 {
        self.cell_weight[c]
    }

    pub fn cell_weights(&self) -> &[u64] {
        &self.cell_weight
    }

    /// True if every side over an edge has the same weight as every other side over it.
    pub fn is_per_edge(&self, x: &Complex2) -> Option<Vec<u64>> {
        let mut per: Vec<Option<u64>> = vec![None; x.num_edges()];
        for (c, b) in x.boundaries().iter().enumerate() {
            for (i, d) in b.iter().enumerate() {
                let w = self.sides[c][i];
                match per[d.edge] {
                    None => per[d.edge] = Some(w),
                    Some(v) if v == w => {}
                    Some(_) => return None,
                }
            }
        }
        Some(per.into_iter().map(|v| v.unwrap_or(1)).collect())
    }
}

pub fn edge_perimeter(w: &Weighting, e: usize) -> u64 {
    w.edge_perimeter(e)
}

pub fn cell_weight(w: &Weighting, c: usize) -> u64 {
    w.cell_weight(c)
}

/// Missing weight at a domain edge lying over codomain edge `x_edge`, given its present sides.
pub(crate) fn missing_weight(w: &Weighting, x_edge: usize, present: &[Side]) -> u64 {
    w.edge_perimeter(x_edge) - present.iter().map(|&s| w.side(s)).sum::<u64>()
}

/// The defining double sum: weights of codomain sides missing at each domain edge.
pub fn map_perimeter(w: &Weighting, m: &CombMap) -> u64 {
    m.present_sides()
        .iter()
        .enumerate()
        .map(|(y, present)| missing_weight(w, m.edge_image()[y].edge, present))
        .sum()
}

/// `Σ P(φ(y)) − Σ Wt(φ(S))`, valid for near-immersions only.
pub fn map_perimeter_fast(w: &Weighting, m: &CombMap) -> Result<u64, PerimeterError> {
    if !m.is_near_immersion() {
        return Err(PerimeterError::NotNearImmersion);
    }
    let edges: u64 = m.edge_image().iter().map(|d| w.edge_perimeter(d.edge)).sum();
    let cells: u64 = m.cell_image().iter().map(|ci| w.cell_weight(ci.cell)).sum();
    Ok(edges - cells)
}

pub fn path_perimeter(w: &Weighting, path: &[DirEdge]) -> u64 {
    path.iter().map(|d| w.edge_perimeter(d.edge)).sum()
}

/// Perimeter of the subpath of `∂c` of `length` edges starting at `start`.
pub fn subpath_perimeter(w: &Weighting, x: &Complex2, c: usize, start: usize, length: usize) -> u64 {
    (start..start + length).map(|i| w.edge_perimeter(x.boundary_at(c, i).edge)).sum()
}

pub fn packet_perimeter(w: &Weighting, x: &Arc<Complex2>, c: usize) -> Result<u64, PerimeterError> {
    if !w.fits(x) {
        return Err(PerimeterError::WrongComplex);
    }
    map_perimeter_fast(w, &build_packet(x, c)?.projection)
}

/// The four quantities of `P(R̃) = P(Q) + P(S) − n·Wt(R)` for `Q` a boundary subpath and `S` its complement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SForm {
    pub packet: u64,
    pub q: u64,
    pub s: u64,
    pub n_weight: u64,
}

impl SForm {
    pub fn identity_holds(&self) -> bool {
        self.packet + self.n_weight == self.q + self.s
    }
}

pub fn sform_check(
    w: &Weighting,
    x: &Arc<Complex2>,
    c: usize,
    start: usize,
    length: usize,
) -> Result<SForm, PerimeterError> {
    let len = x.boundary_len(c);
    if start >= len || length > len {
        return Err(ComplexError::InvalidSubpath { start, length, boundary: len }.into());
    }
    let (_, n) = x.cell_period(c)?;
    let f = SForm {
        packet: packet_perimeter(w, x, c)?,
        q: subpath_perimeter(w, x, c, start, length),
        s: subpath_perimeter(w, x, c, start + length, len - length),
        n_weight: n as u64 * w.cell_weight(c),
    };
    debug_assert!(f.identity_holds());
    Ok(f)
}
