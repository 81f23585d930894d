//! Named complexes, weightings and maps that recur in examples and tests.

use std::sync::Arc;

use crate::complex::{standard_complex, Complex2, DirEdge, Edge};
use crate::mapping::{cell_images_for, CellImage, CombMap};
use crate::perimeter::Weighting;
use crate::presentation::Presentation;

pub fn presentation(gens: &[&str], rels: &[&str]) -> Presentation {
    Presentation::from_strs(gens, rels).expect("fixture presentation parses")
}

pub fn complex(gens: &[&str], rels: &[&str]) -> Arc<Complex2> {
    Arc::new(standard_complex(&presentation(gens, rels)))
}

/// `⟨a,b,c | [a,b], [a,c], [b,c]⟩`.
pub fn z3_presentation() -> Presentation {
    presentation(&["a", "b", "c"], &["a b a^-1 b^-1", "a c a^-1 c^-1", "b c b^-1 c^-1"])
}

pub fn z3() -> Arc<Complex2> {
    Arc::new(standard_complex(&z3_presentation()))
}

/// Side weights `(1,2,3,4), (1,2,0,0), (1,3,5,0)` on the three commutator cells.
pub fn z3_weighted(x: &Complex2) -> Weighting {
    Weighting::new(x, vec![vec![1, 2, 3, 4], vec![1, 2, 0, 0], vec![1, 3, 5, 0]]).expect("positive cell weights")
}

/// A map from an explicit domain, choosing the first unreflected image for each cell.
pub fn map_from_cells(
    x: Arc<Complex2>,
    vertex_count: usize,
    edges: Vec<(usize, usize, DirEdge)>,
    cells: Vec<Vec<DirEdge>>,
) -> CombMap {
    let edge_image: Vec<DirEdge> = edges.iter().map(|e| e.2).collect();
    let cell_image: Vec<CellImage> = cells
        .iter()
        .map(|b| {
            let img: Vec<DirEdge> = b.iter().map(|d| edge_image[d.edge].oriented(d.inv)).collect();
            cell_images_for(&x, &img).into_iter().find(|ci| !ci.reflected).expect("boundary is a cell of x")
        })
        .collect();
    let mut vertex_image = vec![0; vertex_count];
    for (s, t, d) in &edges {
        vertex_image[*s] = x.source(*d);
        vertex_image[*t] = x.target(*d);
    }
    let domain = Complex2::new(vertex_count, edges.iter().map(|&(s, t, _)| Edge { source: s, target: t }).collect(), cells)
        .expect("fixture domain is valid");
    CombMap::new(domain, x, vertex_image, edge_image, cell_image, Some(0)).expect("fixture map is valid")
}

/// The unit cube in the universal cover of [`z3`] with four walls and a bottom but no top.
pub fn z3_open_box() -> CombMap {
    let x = z3();
    let v = |x: usize, y: usize, z: usize| x + 2 * y + 4 * z;
    let mut edges = Vec::new();
    let mut id = std::collections::HashMap::new();
    for (dir, gen) in [((1, 0, 0), 0), ((0, 1, 0), 1), ((0, 0, 1), 2)] {
        for i in 0..2 {
            for j in 0..2 {
                let start = match dir {
                    (1, 0, 0) => (0, i, j),
                    (0, 1, 0) => (i, 0, j),
                    _ => (i, j, 0),
                };
                let end = (start.0 + dir.0, start.1 + dir.1, start.2 + dir.2);
                id.insert((start, gen), edges.len());
                edges.push((v(start.0, start.1, start.2), v(end.0, end.1, end.2), DirEdge::fwd(gen)));
            }
        }
    }
    // boundary of the unit square spanned by generators g < h at corner p
    let square = |p: (usize, usize, usize), g: usize, h: usize| {
        let step = |p: (usize, usize, usize), k: usize| match k {
            0 => (p.0 + 1, p.1, p.2),
            1 => (p.0, p.1 + 1, p.2),
            _ => (p.0, p.1, p.2 + 1),
        };
        let q = step(p, g);
        let r = step(p, h);
        vec![
            DirEdge::fwd(id[&(p, g)]),
            DirEdge::fwd(id[&(q, h)]),
            DirEdge::new(id[&(r, g)], true),
            DirEdge::new(id[&(p, h)], true),
        ]
    };
    let cells = vec![
        square((0, 0, 0), 0, 1),
        square((0, 0, 0), 0, 2),
        square((0, 1, 0), 0, 2),
        square((0, 0, 0), 1, 2),
        square((1, 0, 0), 1, 2),
    ];
    map_from_cells(x, 8, edges, cells)
}

/// Two squares glued along a common edge `x`, as a complex in its own right.
pub fn two_squares() -> Arc<Complex2> {
    // vertices 0 -x-> 1, square one through 2 and 3, square two through 4 and 5
    let edges = vec![
        Edge { source: 0, target: 1 },
        Edge { source: 1, target: 2 },
        Edge { source: 2, target: 3 },
        Edge { source: 3, target: 0 },
        Edge { source: 1, target: 4 },
        Edge { source: 4, target: 5 },
        Edge { source: 5, target: 0 },
    ];
    let f = DirEdge::fwd;
    let cells = vec![vec![f(0), f(1), f(2), f(3)], vec![f(0), f(4), f(5), f(6)]];
    let names = ["x", "e1", "e2", "e3", "f1", "f2", "f3"].map(String::from).to_vec();
    Arc::new(Complex2::with_names(6, edges, cells, names).expect("two squares"))
}

/// `(φ, ψ)`: the identity of [`two_squares`] and the map folding both squares onto the first.
pub fn two_squares_maps() -> (CombMap, CombMap) {
    let x = two_squares();
    let phi = CombMap::identity(x.clone());
    let y = (*x).clone();
    let psi = CombMap::new(
        y,
        x,
        vec![0, 1, 2, 3, 2, 3],
        [0, 1, 2, 3, 1, 2, 3].map(DirEdge::fwd).to_vec(),
        vec![CellImage::new(0, 0), CellImage::new(0, 0)],
        Some(0),
    )
    .expect("folding map is valid");
    (phi, psi)
}

/// `⟨a,b | (aab)³⟩`.
pub fn aab_cubed() -> Arc<Complex2> {
    complex(&["a", "b"], &["(a a b)^3"])
}

/// `⟨a,b | aba⁻¹b⁻¹⟩`.
pub fn torus() -> Arc<Complex2> {
    complex(&["a", "b"], &["a b a^-1 b^-1"])
}

/// The image of the closed path `a⁻¹b⁻¹ab` in the cylinder cover of [`torus`] for `⟨ab⁻¹⟩`:
/// three vertices and four edges with perimeter 8 under unit weights.
pub fn cylinder_start() -> CombMap {
    let (a, b) = (DirEdge::fwd(0), DirEdge::fwd(1));
    // p = 0, q = 1, r = 2
    let edges = vec![(1, 0, a), (1, 0, b), (2, 1, b), (2, 1, a)];
    map_from_cells(torus(), 3, edges, vec![])
}

/// `⟨a₁…a_g | a₁²…a_g²⟩`.
pub fn nonorientable_surface(g: usize) -> Presentation {
    let gens: Vec<String> = (1..=g).map(|i| format!("a{i}")).collect();
    let rel = gens.iter().map(|a| format!("{a}^2")).collect::<Vec<_>>().join(" ");
    let gens: Vec<&str> = gens.iter().map(String::as_str).collect();
    presentation(&gens, &[&rel])
}

/// `⟨a₁,b₁…a_g,b_g | [a₁,b₁]…[a_g,b_g]⟩`.
pub fn orientable_surface(g: usize) -> Presentation {
    let gens: Vec<String> = (1..=g).flat_map(|i| [format!("a{i}"), format!("b{i}")]).collect();
    let rel = (1..=g).map(|i| format!("a{i} b{i} a{i}^-1 b{i}^-1")).collect::<Vec<_>>().join(" ");
    let gens: Vec<&str> = gens.iter().map(String::as_str).collect();
    presentation(&gens, &[&rel])
}

/// `⟨a…e | (abcde)a(abcde)b(abcde)c(abcde)d(abcde)e⟩`.
pub fn modify_one_relator() -> Presentation {
    presentation(&["a", "b", "c", "d", "e"], &["(a b c d e) a (a b c d e) b (a b c d e) c (a b c d e) d (a b c d e) e"])
}

/// The same group after introducing `f = abcde`.
pub fn modify() -> Presentation {
    presentation(&["a", "b", "c", "d", "e", "f"], &["a b c d e f^-1", "f a f b f c f d f e"])
}

/// Weight 1 on sides over `a…e`, 0 over `f`.
pub fn modify_weighting(x: &Complex2) -> Weighting {
    Weighting::per_edge(x, &[1, 1, 1, 1, 1, 0]).expect("both cells weigh 5")
}

/// Two relators `U, V` on generators `1…8` with equal letter counts.
pub fn uv() -> Presentation {
    let gens = ["1", "2", "3", "4", "5", "6", "7", "8"];
    presentation(
        &gens,
        &[
            "1 4 3 7 2 5 4 8 3 6 5 1 4 7 6 2 5 8 7 3 6 1 8 4 7 2 1 5 8 3 2 6",
            "1 1 1 1 2 2 2 2 3 3 3 3 4 4 4 4 5 5 5 5 6 6 6 6 7 7 7 7 8 8 8 8",
        ],
    )
}

/// Sides of `U` weigh 1 and sides of `V` weigh 3.
pub fn uv_weighting(x: &Complex2) -> Weighting {
    Weighting::per_cell(x, &[1, 3]).expect("positive")
}

/// `⟨a,b,c,d | abcd dacb badc⟩`.
pub fn magnus_example() -> Presentation {
    presentation(&["a", "b", "c", "d"], &["a b c d d a c b b a d c"])
}

/// Fixture suite of small presentations with assorted periods, exponents and piece structure.
pub fn presentation_suite() -> Vec<Presentation> {
    vec![
        presentation(&["a", "b"], &["a b a^-1 b^-1"]),
        z3_presentation(),
        presentation(&["a", "b"], &["(a a b)^3"]),
        presentation(&["a", "b"], &["(a a b b)^2"]),
        nonorientable_surface(3),
        orientable_surface(2),
        modify(),
        uv(),
        magnus_example(),
        presentation(&["a", "b", "c"], &["(a b)^2", "b c b^-1 c^-2", "(c a^-1)^3"]),
    ]
}

/// The finite cyclic cover of a one-vertex complex for `generator i ↦ shifts[i] mod m`, keeping
/// the 2-cells whose boundary lifts to a closed path.
pub fn cyclic_cover(x: &Arc<Complex2>, shifts: &[usize], m: usize) -> CombMap {
    assert!(x.is_one_vertex() && shifts.len() == x.num_edges() && m > 0);
    let ne = x.num_edges();
    let mut edges = Vec::with_capacity(ne * m);
    for v in 0..m {
        for (g, shift) in shifts.iter().enumerate() {
            edges.push((v, (v + shift) % m, DirEdge::fwd(g)));
        }
    }
    let mut cells = Vec::new();
    let mut images = Vec::new();
    for c in 0..x.num_cells() {
        for v in 0..m {
            let mut at = v;
            let mut b = Vec::with_capacity(x.boundary_len(c));
            for &d in x.boundary(c) {
                if d.inv {
                    at = (at + m - shifts[d.edge] % m) % m;
                    b.push(DirEdge::new(at * ne + d.edge, true));
                } else {
                    b.push(DirEdge::fwd(at * ne + d.edge));
                    at = (at + shifts[d.edge]) % m;
                }
            }
            if at == v {
                cells.push(b);
                images.push(CellImage::new(c, 0));
            }
        }
    }
    let domain = Complex2::new(m, edges.iter().map(|&(s, t, _)| Edge { source: s, target: t }).collect(), cells)
        .expect("cover is a complex");
    CombMap::new(domain, x.clone(), vec![0; m], edges.iter().map(|e| e.2).collect(), images, Some(0))
        .expect("cover map is valid")
}

/// The sub-map on the chosen cells and edges, closed up under boundaries. Vertices are kept.
pub fn subcomplex(m: &CombMap, keep_cells: &[bool], keep_edges: &[bool]) -> CombMap {
    let y = m.domain();
    let mut edge_on: Vec<bool> = (0..y.num_edges()).map(|e| keep_edges.get(e).copied().unwrap_or(false)).collect();
    for (s, b) in y.boundaries().iter().enumerate() {
        if keep_cells.get(s).copied().unwrap_or(false) {
            for d in b {
                edge_on[d.edge] = true;
            }
        }
    }
    let mut new_id = vec![usize::MAX; y.num_edges()];
    let mut edges = Vec::new();
    let mut edge_image = Vec::new();
    for e in 0..y.num_edges() {
        if edge_on[e] {
            new_id[e] = edges.len();
            edges.push(y.edge(e));
            edge_image.push(m.edge_image()[e]);
        }
    }
    let mut cells = Vec::new();
    let mut cell_image = Vec::new();
    for (s, b) in y.boundaries().iter().enumerate() {
        if keep_cells.get(s).copied().unwrap_or(false) {
            cells.push(b.iter().map(|d| DirEdge::new(new_id[d.edge], d.inv)).collect());
            cell_image.push(m.cell_image()[s]);
        }
    }
    let domain = Complex2::new(y.num_vertices(), edges, cells).expect("subcomplex is a complex");
    CombMap::new(domain, m.codomain().clone(), m.vertex_image().to_vec(), edge_image, cell_image, m.basepoint())
        .expect("restriction is a map")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perimeter::{map_perimeter, map_perimeter_fast};

    #[test]
    fn open_box_perimeters() {
        let m = z3_open_box();
        assert!(m.is_1_immersion());
        assert_eq!(map_perimeter(&Weighting::unit(m.codomain()), &m), 28);
        assert_eq!(map_perimeter(&z3_weighted(m.codomain()), &m), 54);
    }

    #[test]
    fn two_squares_fold() {
        let (phi, psi) = two_squares_maps();
        let w = Weighting::unit(phi.codomain());
        assert_eq!(map_perimeter(&w, &phi), 0);
        assert_eq!(map_perimeter(&w, &psi), 1);
        assert!(!psi.is_near_immersion());
    }

    #[test]
    fn cylinder_start_perimeter() {
        let m = cylinder_start();
        assert!(m.is_1_immersion());
        assert_eq!(map_perimeter(&Weighting::unit(m.codomain()), &m), 8);
    }

    #[test]
    fn covers_are_near_immersions() {
        let x = z3();
        let m = cyclic_cover(&x, &[1, 2, 0], 3);
        assert_eq!(m.domain().num_cells(), 9);
        assert!(m.is_near_immersion() && m.is_1_immersion());
        let w = Weighting::unit(&x);
        assert_eq!(map_perimeter(&w, &m), map_perimeter_fast(&w, &m).unwrap());
        assert_eq!(map_perimeter(&w, &m), 0);
        let sub = subcomplex(&m, &[true, false, true], &[]);
        assert_eq!(sub.domain().num_cells(), 2);
        assert_eq!(map_perimeter(&w, &sub), map_perimeter_fast(&w, &sub).unwrap());
    }

    #[test]
    fn uv_letter_counts_match() {
        let p = uv();
        let count = |r: usize, g: usize| p.relators()[r].letters().iter().filter(|l| l.gen == g).count();
        assert!((0..8).all(|g| count(0, g) == 4 && count(1, g) == 4));
    }
}
