use serde::{Deserialize, Serialize};

use super::{link_graph, Complex2, ComplexError, DirEdge};
use crate::exec::{map_range, Execution};

/// A reading of a cell boundary: from `offset`, forwards or (with `inv`) backwards with inverted edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Occurrence {
    pub cell: usize,
    pub offset: usize,
    pub inv: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PiecePair {
    pub a: Occurrence,
    pub b: Occurrence,
    pub length: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PieceTable {
    /// Every ordered pair of essentially distinct occurrences with a common prefix.
    pub pairs: Vec<PiecePair>,
    /// `forward[c][i]`: longest piece read forwards from position `i` of `∂c`.
    pub forward: Vec<Vec<usize>>,
    /// Longest piece in each cell boundary.
    pub max_piece: Vec<usize>,
}

fn letter(x: &Complex2, o: Occurrence, k: usize) -> DirEdge {
    let b = x.boundary(o.cell);
    let m = b.len();
    if o.inv {
        b[(o.offset + m - k % m) % m].inverse()
    } else {
        b[(o.offset + k) % m]
    }
}

/// Occurrences related by a symmetry of the boundaries read identically all the way round.
fn equivalent(x: &Complex2, a: Occurrence, b: Occurrence) -> bool {
    let m = x.boundary_len(a.cell);
    m == x.boundary_len(b.cell) && (0..m).all(|k| letter(x, a, k) == letter(x, b, k))
}

fn common_prefix(x: &Complex2, a: Occurrence, b: Occurrence) -> usize {
    let cap = x.boundary_len(a.cell).min(x.boundary_len(b.cell));
    (0..cap).take_while(|&k| letter(x, a, k) == letter(x, b, k)).count()
}

fn occurrences(x: &Complex2) -> Vec<Occurrence> {
    let mut v = Vec::with_capacity(2 * x.total_sides());
    for c in 0..x.num_cells() {
        for inv in [false, true] {
            for offset in 0..x.boundary_len(c) {
                v.push(Occurrence { cell: c, offset, inv });
            }
        }
    }
    v
}

pub fn compute_pieces(x: &Complex2) -> PieceTable {
    compute_pieces_with(x, Execution::default())
}

pub fn compute_pieces_with(x: &Complex2, exec: Execution) -> PieceTable {
    let occ = occurrences(x);
    let rows: Vec<Vec<PiecePair>> = map_range(exec, occ.len(), |ia| {
        let a = occ[ia];
        occ.iter()
            .filter(|&&b| letter(x, a, 0) == letter(x, b, 0))
            .filter(|&&b| !equivalent(x, a, b))
            .map(|&b| PiecePair { a, b, length: common_prefix(x, a, b) })
            .collect()
    });
    let mut forward: Vec<Vec<usize>> =
        (0..x.num_cells()).map(|c| vec![0; x.boundary_len(c)]).collect();
    for p in rows.iter().flatten() {
        if !p.a.inv {
            let f = &mut forward[p.a.cell][p.a.offset];
            *f = (*f).max(p.length);
        }
    }
    let max_piece = forward.iter().map(|f| f.iter().copied().max().unwrap_or(0)).collect();
    PieceTable { pairs: rows.into_iter().flatten().collect(), forward, max_piece }
}

impl PieceTable {
    /// Fewest pieces concatenating to the subpath of `∂c` of `length` edges from `start`;
    /// `None` if some edge lies in no piece.
    pub fn min_cover(&self, c: usize, start: usize, length: usize) -> Result<Option<usize>, ComplexError> {
        let f = self.forward.get(c).ok_or(ComplexError::UnknownCell(c))?;
        let m = f.len();
        if start >= m.max(1) || length > m {
            return Err(ComplexError::InvalidSubpath { start, length, boundary: m });
        }
        let (mut pos, mut left, mut count) = (start, length, 0);
        while left > 0 {
            let step = f[pos % m].min(left);
            if step == 0 {
                return Ok(None);
            }
            pos += step;
            left -= step;
            count += 1;
        }
        Ok(Some(count))
    }

    /// Fewest pieces covering the whole cycle `∂c`, over all cut points.
    pub fn cyclic_cover(&self, c: usize) -> Option<usize> {
        let m = self.forward[c].len();
        (0..m).filter_map(|s| self.min_cover(c, s, m).ok().flatten()).min()
    }
}

/// Convenience form of [`PieceTable::min_cover`] that computes the piece table first.
pub fn min_piece_cover(
    x: &Complex2,
    c: usize,
    start: usize,
    length: usize,
) -> Result<Option<usize>, ComplexError> {
    compute_pieces(x).min_cover(c, start, length)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SmallCancellationReport {
    pub p: usize,
    pub q: usize,
    pub c_p: bool,
    /// Cell whose boundary is covered by fewer than `p` pieces, with its cover.
    pub c_p_witness: Option<(usize, usize)>,
    /// `(numerator, denominator)` of α if requested.
    pub alpha: Option<(u64, u64)>,
    pub c_prime: Option<bool>,
    /// `(cell, piece length, boundary length)` violating C'(α).
    pub c_prime_witness: Option<(usize, usize, usize)>,
    pub t_q: bool,
    /// `(vertex, girth)` with girth below `q`.
    pub t_q_witness: Option<(usize, usize)>,
    pub t_q_method: &'static str,
}

impl SmallCancellationReport {
    pub fn holds(&self) -> bool {
        self.c_p && self.t_q && self.c_prime.unwrap_or(true)
    }
}

pub fn check_small_cancellation(
    x: &Complex2,
    table: &PieceTable,
    p: usize,
    q: usize,
    alpha: Option<(u64, u64)>,
) -> SmallCancellationReport {
    let c_p_witness = (0..x.num_cells())
        .filter_map(|c| table.cyclic_cover(c).filter(|&k| k < p).map(|k| (c, k)))
        .next();
    let c_prime_witness = alpha.and_then(|(num, den)| {
        (0..x.num_cells())
            .map(|c| (c, table.max_piece[c], x.boundary_len(c)))
            .find(|&(_, piece, len)| piece as u64 * den >= num * len as u64)
    });
    let t_q_witness = (0..x.num_vertices())
        .filter_map(|v| {
            let g = link_graph(x, v).expect("vertex in range").girth?;
            (g < q).then_some((v, g))
        })
        .next();
    SmallCancellationReport {
        p,
        q,
        c_p: c_p_witness.is_none(),
        c_p_witness,
        alpha,
        c_prime: alpha.map(|_| c_prime_witness.is_none()),
        c_prime_witness,
        t_q: t_q_witness.is_none(),
        t_q_witness,
        t_q_method: "T(q) via link girth",
    }
}
