use serde::Serialize;

use super::ReductionMode;
use crate::complex::Complex2;
use crate::perimeter::{subpath_perimeter, Weighting};

/// A boundary subpath `Q` of a 2-cell whose complement `S` is light enough to trade for `Q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CandidateQ {
    pub cell: usize,
    pub start: usize,
    pub length: usize,
    /// `P(S)`, zero when `Q` is the whole boundary.
    pub s_perimeter: u64,
    /// `n·Wt(R)`.
    pub bound: u64,
    pub strict: bool,
}

/// Every `Q` admissible in the given mode: `P(S) < n·Wt(R)` when strict, `≤` when weak.
pub fn enumerate_candidates(x: &Complex2, w: &Weighting, mode: ReductionMode) -> Vec<CandidateQ> {
    let mut out = Vec::new();
    for c in 0..x.num_cells() {
        let m = x.boundary_len(c);
        let (_, n) = x.cell_period(c).expect("cell exists");
        let bound = n as u64 * w.cell_weight(c);
        for start in 0..m {
            for length in 1..=m {
                let s = if length == m { 0 } else { subpath_perimeter(w, x, c, start + length, m - length) };
                let strict = s < bound;
                if strict || (mode == ReductionMode::Weak && s == bound) {
                    out.push(CandidateQ { cell: c, start, length, s_perimeter: s, bound, strict });
                }
            }
        }
    }
    out
}

/// Lookup by `(cell, start, length)`.
#[derive(Clone, Debug)]
pub struct CandidateTable {
    entries: Vec<Vec<Option<CandidateQ>>>,
    lens: Vec<usize>,
}

impl CandidateTable {
    pub fn new(x: &Complex2, w: &Weighting, mode: ReductionMode) -> Self {
        let lens: Vec<usize> = (0..x.num_cells()).map(|c| x.boundary_len(c)).collect();
        let mut entries: Vec<Vec<Option<CandidateQ>>> = lens.iter().map(|&m| vec![None; m * m]).collect();
        for q in enumerate_candidates(x, w, mode) {
            let m = lens[q.cell];
            entries[q.cell][q.start * m + q.length - 1] = Some(q);
        }
        CandidateTable { entries, lens }
    }

    pub fn get(&self, cell: usize, start: usize, length: usize) -> Option<CandidateQ> {
        let m = self.lens[cell];
        if length == 0 || length > m {
            return None;
        }
        self.entries[cell][(start % m) * m + length - 1]
    }

    pub fn len(&self) -> usize {
        self.entries.iter().map(|e| e.iter().flatten().count()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::standard_complex;
    use crate::presentation::Presentation;

    fn torus() -> Complex2 {
        standard_complex(&Presentation::from_strs(&["a", "b"], &["a b a^-1 b^-1"]).unwrap())
    }

    #[test]
    fn torus_unit_weights() {
        let x = torus();
        let w = Weighting::unit(&x);
        // P(S) = 2(4 − ℓ) against Wt = 4.
        let strict = enumerate_candidates(&x, &w, ReductionMode::Strict);
        assert_eq!(strict.len(), 8);
        assert!(strict.iter().all(|q| q.strict && q.length >= 3));
        let t = CandidateTable::new(&x, &w, ReductionMode::Strict);
        assert_eq!(t.get(0, 3, 3).unwrap().s_perimeter, 2);
        assert_eq!(t.get(0, 3, 1), None);
        assert_eq!(t.get(0, 0, 0), None);
    }

    #[test]
    fn weak_adds_equality_cases() {
        let x = torus();
        let w = Weighting::unit(&x);
        let weak = enumerate_candidates(&x, &w, ReductionMode::Weak);
        assert_eq!(weak.len(), 12);
        assert!(weak.iter().filter(|q| !q.strict).all(|q| q.length == 2 && q.s_perimeter == 4));
    }

    #[test]
    fn proper_power_counts_exponent() {
        let x = standard_complex(&Presentation::from_strs(&["a", "b"], &["(a a b)^3"]).unwrap());
        let w = Weighting::unit(&x);
        let t = CandidateTable::new(&x, &w, ReductionMode::Strict);
        assert_eq!(t.get(0, 0, 9).unwrap().bound, 27);
        // S = a a b has P = 15 < 27.
        assert!(t.get(0, 0, 6).unwrap().strict);
        assert_eq!(t.get(0, 1, 1), None);
    }
}
