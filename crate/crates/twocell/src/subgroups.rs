//! Subgroup presentations, membership and intersections built on the reduction engine.

use std::sync::Arc;

use thiserror::Error;

use crate::complex::Complex2;
use crate::criteria::{certify, magnus_weighting, CertificateLevel, Verdict};
use crate::exec::{join, Execution};
use crate::mapping::{bouquet_map, fiber_product, CellImage, CombMap, MapError};
use crate::perimeter::Weighting;
use crate::presentation::Presentation;
use crate::reduction::{extract_presentation, reduce, ReduceError, ReduceOptions, ReductionTrace};
use crate::word::{free_reduce, Word};

#[derive(Debug, Clone, Error)]
pub enum SubgroupError {
    #[error("no criterion certifies this weighted complex; rerun with force")]
    NoCertificate,
    #[error("Magnus weighting rejected: {}", .0.notes.join("; "))]
    MagnusInvalid(Box<Verdict>),
    #[error(transparent)]
    Reduce(#[from] ReduceError),
    #[error(transparent)]
    Map(#[from] MapError),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SubgroupOptions {
    /// Run even without a certificate; results are then flagged heuristic.
    pub force: bool,
    pub step_limit: Option<usize>,
    pub exec: Execution,
}

impl SubgroupOptions {
    pub fn forced() -> Self {
        SubgroupOptions { force: true, ..Self::default() }
    }

    fn reduce_options(&self) -> ReduceOptions {
        ReduceOptions { step_limit: self.step_limit, ..ReduceOptions::strict() }
    }
}

#[derive(Clone, Debug)]
pub struct SubgroupResult {
    pub presentation: Presentation,
    /// Every reduction run, in pipeline order.
    pub traces: Vec<ReductionTrace>,
    pub certificate: Option<Verdict>,
    /// No certificate backs the answer.
    pub heuristic: bool,
    /// The final complex the presentation was read from.
    pub map: CombMap,
}

#[derive(Clone, Debug)]
pub struct Membership {
    pub member: bool,
    pub trace: ReductionTrace,
    pub certificate: Option<Verdict>,
    pub heuristic: bool,
}

fn gate(x: &Complex2, w: &Weighting, level: CertificateLevel, force: bool) -> Result<Option<Verdict>, SubgroupError> {
    match certify(x, w, level) {
        Some(v) => Ok(Some(v)),
        None if force => Ok(None),
        None => Err(SubgroupError::NoCertificate),
    }
}

fn reduced_bouquet(
    x: &Arc<Complex2>,
    w: &Weighting,
    gens: &[Word],
    opts: &SubgroupOptions,
) -> Result<(CombMap, ReductionTrace), SubgroupError> {
    let gens: Vec<Word> = gens.iter().map(free_reduce).collect();
    let m = bouquet_map(x.clone(), &gens, None)?;
    Ok(reduce(m, w, opts.reduce_options())?)
}

/// A presentation of `⟨gens⟩ ≤ π₁X`, read off the reduced bouquet of the generators.
pub fn subgroup_presentation(
    x: &Arc<Complex2>,
    w: &Weighting,
    gens: &[Word],
    opts: SubgroupOptions,
) -> Result<SubgroupResult, SubgroupError> {
    let certificate = gate(x, w, CertificateLevel::Coherent, opts.force)?;
    let (map, trace) = reduced_bouquet(x, w, gens, &opts)?;
    Ok(SubgroupResult {
        presentation: extract_presentation(&map)?,
        traces: vec![trace],
        heuristic: certificate.is_none(),
        certificate,
        map,
    })
}

/// Whether `u ∈ ⟨gens⟩`: a whisker reading `u` hangs off the bouquet and `u` is a member exactly
/// when reduction closes it up.
pub fn member(
    x: &Arc<Complex2>,
    w: &Weighting,
    gens: &[Word],
    u: &Word,
    opts: SubgroupOptions,
) -> Result<Membership, SubgroupError> {
    let certificate = gate(x, w, CertificateLevel::Coherent, opts.force)?;
    let gens: Vec<Word> = gens.iter().map(free_reduce).collect();
    let m = bouquet_map(x.clone(), &gens, Some(&free_reduce(u)))?;
    let (m, trace) = reduce(m, w, opts.reduce_options())?;
    Ok(Membership {
        member: m.basepoint() == m.marked(),
        trace,
        heuristic: certificate.is_none(),
        certificate,
    })
}

/// Hangs a copy of every 2-cell of `X` at every vertex, glued at that vertex only: one copy per
/// boundary position (up to the period) that passes through the vertex's image.
pub fn augment_vertices(m: &mut CombMap) {
    let x = m.codomain().clone();
    let n = m.domain().num_vertices();
    for v in 0..n {
        let at = m.vertex_image()[v];
        for c in 0..x.num_cells() {
            let len = x.boundary_len(c);
            let (period, _) = x.cell_period(c).expect("cell exists");
            for i in (0..period).filter(|&i| x.source(x.boundary_at(c, i)) == at) {
                let mut circle = Vec::with_capacity(len);
                let mut from = v;
                for k in 0..len {
                    let d = x.boundary_at(c, i + k);
                    let to = if k + 1 == len { v } else { m.add_vertex(x.target(d)) };
                    circle.push(m.add_edge(from, to, d));
                    from = to;
                }
                m.add_cell(circle, CellImage::new(c, i));
            }
        }
    }
}

fn based_presentation(a: &CombMap, b: &CombMap) -> Result<(Presentation, CombMap), SubgroupError> {
    let fp = fiber_product(a, b)?;
    let based = match fp.based {
        Some(m) => m,
        None => return Err(MapError::NoBasepoint.into()),
    };
    Ok((extract_presentation(&based)?, based))
}

/// `H ∩ K`: reduce both bouquets, augment every vertex, reduce again, and take the based
/// component of the fiber product.
pub fn intersect(
    x: &Arc<Complex2>,
    w: &Weighting,
    h: &[Word],
    k: &[Word],
    opts: SubgroupOptions,
) -> Result<SubgroupResult, SubgroupError> {
    let certificate = gate(x, w, CertificateLevel::Strict, opts.force)?;
    let pipeline = |gens: &[Word]| -> Result<(CombMap, Vec<ReductionTrace>), SubgroupError> {
        let (mut a, t1) = reduced_bouquet(x, w, gens, &opts)?;
        augment_vertices(&mut a);
        let (a, t2) = reduce(a, w, opts.reduce_options())?;
        Ok((a, vec![t1, t2]))
    };
    let (ra, rb) = join(opts.exec, || pipeline(h), || pipeline(k));
    let ((a, ta), (b, tb)) = (ra?, rb?);
    let (presentation, map) = based_presentation(&a, &b)?;
    Ok(SubgroupResult {
        presentation,
        traces: ta.into_iter().chain(tb).collect(),
        heuristic: certificate.is_none(),
        certificate,
        map,
    })
}

/// `π₁M ∩ H` for the Magnus subgraph `M` spanned by the given generators, using the weighting
/// that vanishes on `M`.
pub fn magnus_intersect(
    x: &Arc<Complex2>,
    magnus: &[usize],
    h: &[Word],
    opts: SubgroupOptions,
) -> Result<SubgroupResult, SubgroupError> {
    let (w, verdict) = magnus_weighting(x, magnus);
    if !verdict.is_holds() {
        return Err(SubgroupError::MagnusInvalid(Box::new(verdict)));
    }
    let certificate = gate(x, &w, CertificateLevel::Strict, opts.force)?;
    let (a, trace) = reduced_bouquet(x, &w, h, &opts)?;
    let sub = CombMap::subgraph(x.clone(), magnus)?;
    let (presentation, map) = based_presentation(&a, &sub)?;
    Ok(SubgroupResult { presentation, traces: vec![trace], heuristic: certificate.is_none(), certificate, map })
}
