use std::collections::HashMap;

use super::{remove_redundant, CombMap, MapError};
use crate::complex::DirEdge;

/// Two edges sharing a vertex end with equal outgoing image.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fold {
    pub vertex: usize,
    pub keep: usize,
    pub remove: usize,
    /// The removed edge runs opposite to the kept one.
    pub flip: bool,
    pub keep_end: (usize, bool),
    pub remove_end: (usize, bool),
}

/// The first fold in edge-index order, if any.
pub fn find_fold(m: &CombMap) -> Option<Fold> {
    let mut seen: HashMap<(usize, DirEdge), (usize, bool)> = HashMap::new();
    for (e, edge) in m.domain.edges().iter().enumerate() {
        for (at_target, v) in [(false, edge.source), (true, edge.target)] {
            let out = m.edge_image[e].oriented(at_target);
            if let Some(&(k, k_target)) = seen.get(&(v, out)) {
                return Some(Fold {
                    vertex: v,
                    keep: k,
                    remove: e,
                    flip: k_target != at_target,
                    keep_end: (k, k_target),
                    remove_end: (e, at_target),
                });
            }
            seen.insert((v, out), (e, at_target));
        }
    }
    None
}

/// Identifies the two edges of a fold (and their far endpoints) in place.
pub fn apply_fold(m: &mut CombMap, f: Fold) {
    let (k, r) = (m.domain.edges[f.keep], m.domain.edges[f.remove]);
    let pairs = if f.flip {
        [(k.source, r.target), (k.target, r.source)]
    } else {
        [(k.source, r.source), (k.target, r.target)]
    };
    m.domain.edges.remove(f.remove);
    m.edge_image.remove(f.remove);
    let keep = if f.keep > f.remove { f.keep - 1 } else { f.keep };
    for b in &mut m.domain.cells {
        for d in b.iter_mut() {
            if d.edge == f.remove {
                *d = DirEdge::new(keep, d.inv ^ f.flip);
            } else if d.edge > f.remove {
                d.edge -= 1;
            }
        }
    }
    m.identify_vertices(&pairs);
}

/// Single-step form: performs the first available fold.
pub fn fold_once(m: &CombMap) -> Result<CombMap, MapError> {
    let f = find_fold(m).ok_or(MapError::NoFold)?;
    let mut out = m.clone();
    apply_fold(&mut out, f);
    Ok(out)
}

/// Folds until the map is a 1-immersion, then removes redundant 2-cells. Returns the fold count.
pub fn fold_to_immersion(m: &mut CombMap) -> usize {
    let mut n = 0;
    while let Some(f) = find_fold(m) {
        apply_fold(m, f);
        n += 1;
    }
    remove_redundant(m);
    n
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::standard_complex;
    use crate::mapping::bouquet_map;
    use crate::presentation::Presentation;
    use std::sync::Arc;

    fn free2() -> Arc<crate::complex::Complex2> {
        Arc::new(standard_complex(&Presentation::from_strs(&["a", "b"], &[]).unwrap()))
    }

    fn words(x: &crate::complex::Complex2, ws: &[&str]) -> Vec<crate::word::Word> {
        let names = x.edge_names();
        ws.iter().map(|w| crate::presentation::parse_word(w, &names).unwrap()).collect()
    }

    #[test]
    fn stallings_graph_of_a2_ab() {
        let x = free2();
        let mut m = bouquet_map(x.clone(), &words(&x, &["a a", "a b"]), None).unwrap();
        assert!(!m.is_1_immersion());
        let once = fold_once(&m).unwrap();
        assert!(once.is_1_immersion());
        assert_eq!(fold_to_immersion(&mut m), 1);
        assert_eq!((m.domain().num_vertices(), m.domain().num_edges()), (2, 3));
        assert_eq!(m.validate(), Ok(()));
    }

    #[test]
    fn immersed_map_is_unchanged() {
        let x = free2();
        let mut m = bouquet_map(x.clone(), &words(&x, &["a b"]), None).unwrap();
        let before = m.clone();
        assert_eq!(fold_to_immersion(&mut m), 0);
        assert_eq!(m, before);
        assert_eq!(fold_once(&m), Err(MapError::NoFold));
    }

    #[test]
    fn backtrack_collapses() {
        let x = free2();
        let m0 = bouquet_map(x.clone(), &[], Some(&words(&x, &["a a^-1"])[0])).unwrap();
        assert_eq!(m0.domain().num_edges(), 0);
        let w = crate::word::Word::from_signed(&[1, -1]);
        let mut m = bouquet_map(x, &[w], None).unwrap();
        assert_eq!(m.domain().num_edges(), 2);
        fold_to_immersion(&mut m);
        assert_eq!((m.domain().num_vertices(), m.domain().num_edges()), (2, 1));
    }

    #[test]
    fn witness_names_both_ends() {
        let x = free2();
        let m = bouquet_map(x.clone(), &words(&x, &["a", "a"]), None).unwrap();
        let w = m.check_1_immersion().unwrap_err();
        assert_eq!(w.vertex, 0);
        assert_eq!((w.first.0, w.second.0), (0, 1));
    }
}
