use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use super::{CellImage, CombMap, MapError};
use crate::complex::{Complex2, DirEdge, Edge};

/// `A ⊗ B` with its maps to both factors and to the common codomain.
#[derive(Clone, Debug)]
pub struct FiberProduct {
    pub to_codomain: CombMap,
    pub to_a: CombMap,
    pub to_b: CombMap,
    /// Product vertex `v` is the pair `pairs[v]`.
    pub pairs: Vec<(usize, usize)>,
    /// The component through the pair of basepoints, mapped to the codomain.
    pub based: Option<CombMap>,
}

/// Directed edge of a domain running along `∂R` at codomain position `p`, for cell `s` over `R`.
fn along(m: &CombMap, s: usize, p: usize) -> DirEdge {
    let ci = m.cell_image[s];
    let len = m.domain.boundary_len(s);
    if ci.reflected {
        m.domain.boundary(s)[(ci.offset + len - p) % len].inverse()
    } else {
        m.domain.boundary(s)[(p + len - ci.offset) % len]
    }
}

/// Image of a product cell (read along `∂R` from 0) in the factor cell `s`.
fn factor_image(m: &CombMap, s: usize) -> CellImage {
    let ci = m.cell_image[s];
    let len = m.domain.boundary_len(s);
    if ci.reflected {
        CellImage { cell: s, offset: ci.offset, reflected: true }
    } else {
        CellImage { cell: s, offset: (len - ci.offset) % len, reflected: false }
    }
}

pub fn fiber_product(a: &CombMap, b: &CombMap) -> Result<FiberProduct, MapError> {
    if !Arc::ptr_eq(&a.codomain, &b.codomain) && *a.codomain != *b.codomain {
        return Err(MapError::CodomainMismatch);
    }
    let x = a.codomain.clone();
    let (ya, yb) = (&a.domain, &b.domain);

    let mut pairs = Vec::new();
    let mut vid = HashMap::new();
    for va in 0..ya.num_vertices() {
        for vb in 0..yb.num_vertices() {
            if a.vertex_image[va] == b.vertex_image[vb] {
                vid.insert((va, vb), pairs.len());
                pairs.push((va, vb));
            }
        }
    }

    let mut edges = Vec::new();
    let mut edge_pairs = Vec::new();
    let mut eid = HashMap::new();
    for ea in 0..ya.num_edges() {
        for eb in 0..yb.num_edges() {
            let (ia, ib) = (a.edge_image[ea], b.edge_image[eb]);
            if ia.edge != ib.edge {
                continue;
            }
            let flip = ia.inv != ib.inv;
            let (sa, ta) = (ya.edge(ea).source, ya.edge(ea).target);
            let eb_dir = DirEdge::new(eb, flip);
            let (sb, tb) = (yb.source(eb_dir), yb.target(eb_dir));
            eid.insert((ea, eb), edges.len());
            edges.push(Edge { source: vid[&(sa, sb)], target: vid[&(ta, tb)] });
            edge_pairs.push((ea, eb, flip));
        }
    }

    let mut cells = Vec::new();
    let mut cell_pairs = Vec::new();
    for s in 0..ya.num_cells() {
        for t in 0..yb.num_cells() {
            let r = a.cell_image[s].cell;
            if r != b.cell_image[t].cell {
                continue;
            }
            let boundary = (0..x.boundary_len(r))
                .map(|p| {
                    let (da, db) = (along(a, s, p), along(b, t, p));
                    DirEdge::new(eid[&(da.edge, db.edge)], da.inv)
                })
                .collect();
            cells.push(boundary);
            cell_pairs.push((s, t, r));
        }
    }

    let product = Complex2::from_parts_unchecked(pairs.len(), edges, cells);
    let to_codomain = CombMap {
        vertex_image: pairs.iter().map(|&(va, _)| a.vertex_image[va]).collect(),
        edge_image: edge_pairs.iter().map(|&(ea, _, _)| a.edge_image[ea]).collect(),
        cell_image: cell_pairs.iter().map(|&(_, _, r)| CellImage::new(r, 0)).collect(),
        basepoint: None,
        marked: None,
        domain: product.clone(),
        codomain: x,
    };
    let to_a = CombMap {
        vertex_image: pairs.iter().map(|&(va, _)| va).collect(),
        edge_image: edge_pairs.iter().map(|&(ea, _, _)| DirEdge::fwd(ea)).collect(),
        cell_image: cell_pairs.iter().map(|&(s, _, _)| factor_image(a, s)).collect(),
        basepoint: None,
        marked: None,
        domain: product.clone(),
        codomain: Arc::new(ya.clone()),
    };
    let to_b = CombMap {
        vertex_image: pairs.iter().map(|&(_, vb)| vb).collect(),
        edge_image: edge_pairs.iter().map(|&(_, eb, flip)| DirEdge::new(eb, flip)).collect(),
        cell_image: cell_pairs.iter().map(|&(_, t, _)| factor_image(b, t)).collect(),
        basepoint: None,
        marked: None,
        domain: product,
        codomain: Arc::new(yb.clone()),
    };
    debug_assert_eq!(to_codomain.validate(), Ok(()));
    debug_assert_eq!(to_a.validate(), Ok(()));
    debug_assert_eq!(to_b.validate(), Ok(()));

    let based = match (a.basepoint, b.basepoint) {
        (Some(pa), Some(pb)) => vid.get(&(pa, pb)).map(|&v| component(&to_codomain, v)),
        _ => None,
    };
    let mut fp = FiberProduct { to_codomain, to_a, to_b, pairs, based };
    if let (Some(pa), Some(pb)) = (a.basepoint, b.basepoint) {
        if let Some(&v) = vid.get(&(pa, pb)) {
            fp.to_codomain.basepoint = Some(v);
            fp.to_a.basepoint = Some(v);
            fp.to_b.basepoint = Some(v);
        }
    }
    Ok(fp)
}

/// The connected component of `root`, re-indexed with `root` as vertex 0 and basepoint.
pub(crate) fn component(m: &CombMap, root: usize) -> CombMap {
    let y = &m.domain;
    let mut incident = vec![Vec::new(); y.num_vertices()];
    for (e, edge) in y.edges().iter().enumerate() {
        incident[edge.source].push(e);
        incident[edge.target].push(e);
    }
    let mut vnew = vec![usize::MAX; y.num_vertices()];
    let mut order = vec![root];
    vnew[root] = 0;
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for &e in &incident[v] {
            for w in [y.edge(e).source, y.edge(e).target] {
                if vnew[w] == usize::MAX {
                    vnew[w] = order.len();
                    order.push(w);
                    queue.push_back(w);
                }
            }
        }
    }
    let mut enew = vec![usize::MAX; y.num_edges()];
    let mut edges = Vec::new();
    let mut edge_image = Vec::new();
    for (e, edge) in y.edges().iter().enumerate() {
        if vnew[edge.source] != usize::MAX {
            enew[e] = edges.len();
            edges.push(Edge { source: vnew[edge.source], target: vnew[edge.target] });
            edge_image.push(m.edge_image[e]);
        }
    }
    let mut cells = Vec::new();
    let mut cell_image = Vec::new();
    for (s, bd) in y.boundaries().iter().enumerate() {
        if enew[bd[0].edge] != usize::MAX {
            cells.push(bd.iter().map(|d| DirEdge::new(enew[d.edge], d.inv)).collect());
            cell_image.push(m.cell_image[s]);
        }
    }
    let out = CombMap {
        domain: Complex2::from_parts_unchecked(order.len(), edges, cells),
        codomain: m.codomain.clone(),
        vertex_image: order.iter().map(|&v| m.vertex_image[v]).collect(),
        edge_image,
        cell_image,
        basepoint: Some(0),
        marked: m.marked.and_then(|q| (vnew[q] != usize::MAX).then(|| vnew[q])),
    };
    debug_assert_eq!(out.validate(), Ok(()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::standard_complex;
    use crate::mapping::{bouquet_map, fold_to_immersion};
    use crate::presentation::Presentation;
    use crate::word::Word;

    fn folded(x: &Arc<Complex2>, ws: &[&[i64]]) -> CombMap {
        let ws: Vec<Word> = ws.iter().map(|w| Word::from_signed(w)).collect();
        let mut m = bouquet_map(x.clone(), &ws, None).unwrap();
        fold_to_immersion(&mut m);
        m
    }

    #[test]
    fn cyclic_covers_multiply() {
        let x = Arc::new(standard_complex(&Presentation::from_strs(&["a"], &[]).unwrap()));
        let fp = fiber_product(&folded(&x, &[&[1, 1]]), &folded(&x, &[&[1, 1, 1]])).unwrap();
        let c = fp.based.unwrap();
        assert_eq!((c.domain.num_vertices(), c.domain.num_edges()), (6, 6));
        assert_eq!(fp.to_codomain.domain.num_vertices(), 6);
    }

    #[test]
    fn diagonal_is_a_copy() {
        let x = Arc::new(standard_complex(&Presentation::from_strs(&["a", "b"], &[]).unwrap()));
        let a = folded(&x, &[&[1, 1], &[1, 2, -1]]);
        let fp = fiber_product(&a, &a).unwrap();
        let c = fp.based.unwrap();
        assert_eq!(c.domain.num_vertices(), a.domain.num_vertices());
        assert_eq!(c.domain.num_edges(), a.domain.num_edges());
    }

    #[test]
    fn disjoint_images_give_a_point() {
        let x = Arc::new(standard_complex(&Presentation::from_strs(&["a", "b"], &[]).unwrap()));
        let fp = fiber_product(&folded(&x, &[&[1]]), &folded(&x, &[&[2]])).unwrap();
        let c = fp.based.unwrap();
        assert_eq!((c.domain.num_vertices(), c.domain.num_edges()), (1, 0));
    }

    #[test]
    fn projections_commute_on_cells() {
        let x = Arc::new(standard_complex(&Presentation::from_strs(&["a", "b"], &["(a a b)^3"]).unwrap()));
        let packet = crate::complex::build_packet(&x, 0).unwrap().projection;
        let fp = fiber_product(&packet, &packet).unwrap();
        assert_eq!(fp.to_codomain.domain.num_cells(), 9);
        for c in 0..fp.to_codomain.domain.num_cells() {
            let m = fp.to_codomain.domain.boundary_len(c);
            for j in 0..m {
                let direct = fp.to_codomain.image_side(c, j);
                let sa = fp.to_a.image_side(c, j);
                assert_eq!(packet.image_side(sa.cell, sa.position), direct);
                let sb = fp.to_b.image_side(c, j);
                assert_eq!(packet.image_side(sb.cell, sb.position), direct);
            }
        }
    }
}
