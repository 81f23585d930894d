use std::sync::Arc;

use super::{CombMap, MapError};
use crate::complex::{Complex2, DirEdge};
use crate::word::Word;

/// A wedge of subdivided circles at the basepoint, one per word, plus an optional open arc (the
/// whisker) from the basepoint to a marked vertex. Empty words contribute nothing.
pub fn bouquet_map(
    x: Arc<Complex2>,
    words: &[Word],
    whisker: Option<&Word>,
) -> Result<CombMap, MapError> {
    if !x.is_one_vertex() {
        return Err(MapError::NotOneVertex);
    }
    let all = words.iter().chain(whisker);
    if let Some(l) = all.flat_map(|w| w.letters()).find(|l| l.gen >= x.num_edges()) {
        return Err(MapError::UnknownGenerator(l.gen));
    }
    let mut m = CombMap {
        domain: Complex2::from_parts_unchecked(1, Vec::new(), Vec::new()),
        codomain: x,
        vertex_image: vec![0],
        edge_image: Vec::new(),
        cell_image: Vec::new(),
        basepoint: Some(0),
        marked: None,
    };
    for w in words {
        let n = w.len();
        let mut at = 0;
        for (i, &l) in w.letters().iter().enumerate() {
            let next = if i + 1 == n { 0 } else { m.add_vertex(0) };
            m.add_edge(at, next, DirEdge::from(l));
            at = next;
        }
    }
    if let Some(u) = whisker {
        let mut at = 0;
        for &l in u.letters() {
            let next = m.add_vertex(0);
            m.add_edge(at, next, DirEdge::from(l));
            at = next;
        }
        m.marked = Some(at);
    }
    debug_assert_eq!(m.validate(), Ok(()));
    Ok(m)
}
