//! Weighted perimeter calculus on combinatorial 2-complexes.
//!
//! Presentations become standard 2-complexes; maps into them are reduced by folding and packet
//! attachment while a weighted perimeter decreases. The result is a finite presentation of the
//! subgroup carried by the map, together with checkers for the perimeter inequalities that
//! certify coherence or local quasiconvexity.

pub mod complex;
pub mod exec;
pub mod criteria;
pub mod fixtures;
pub mod input;
pub mod mapping;
pub mod perimeter;
pub mod presentation;
pub mod reduction;
pub mod subgroups;
pub mod word;

pub use complex::{standard_complex, Complex2, DirEdge, Side};
pub use exec::Execution;
pub use mapping::{CellImage, CombMap};
pub use perimeter::Weighting;
pub use presentation::Presentation;
pub use reduction::{reduce, ReduceOptions, ReductionMode, ReductionTrace};
pub use word::{Letter, Word};
