use std::sync::Arc;

use super::{Complex2, ComplexError, DirEdge, Edge};
use crate::mapping::{CellImage, CombMap};

/// The packet of a 2-cell `R = Wⁿ`: a circle of `n·|W|` edges carrying `n` cells rotated by `|W|`.
#[derive(Clone, Debug)]
pub struct Packet {
    pub projection: CombMap,
    pub cell_offsets: Vec<usize>,
}

impl Packet {
    pub fn complex(&self) -> &Complex2 {
        self.projection.domain()
    }
}

pub fn build_packet(x: &Arc<Complex2>, c: usize) -> Result<Packet, ComplexError> {
    let (p, n) = x.cell_period(c)?;
    let b = x.boundary(c);
    let len = b.len();
    let mut edges = Vec::with_capacity(len);
    let mut edge_image = Vec::with_capacity(len);
    let mut circle = Vec::with_capacity(len);
    for (i, &d) in b.iter().enumerate() {
        let (from, to) = (i, (i + 1) % len);
        if d.inv {
            edges.push(Edge { source: to, target: from });
            edge_image.push(d.inverse());
            circle.push(DirEdge::new(i, true));
        } else {
            edges.push(Edge { source: from, target: to });
            edge_image.push(d);
            circle.push(DirEdge::fwd(i));
        }
    }
    let cell_offsets: Vec<usize> = (0..n).map(|k| k * p).collect();
    let domain = Complex2::from_parts_unchecked(len, edges, vec![circle; n]);
    let vertex_image = (0..len).map(|i| x.source(b[i])).collect();
    let cell_image = cell_offsets.iter().map(|&o| CellImage::new(c, o)).collect();
    let projection = CombMap::new(domain, x.clone(), vertex_image, edge_image, cell_image, Some(0))
        .expect("packet projection is a combinatorial map");
    Ok(Packet { projection, cell_offsets })
}
