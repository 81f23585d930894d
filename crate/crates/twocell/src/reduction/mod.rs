//! Perimeter reduction: fold, pack and attach packets until no admissible site remains.

mod attach;
mod candidates;
mod extract;

pub use attach::{attach_packet, find_attachment, AttachOutcome, AttachmentSite};
pub use candidates::{enumerate_candidates, CandidateQ, CandidateTable};
pub use extract::{euler_perimeter, extract_presentation, relator_bound};

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::complex::ComplexError;
use crate::mapping::{apply_fold, find_fold, remove_redundant, repair_packing, CombMap, MapError};
use crate::perimeter::{map_perimeter, WeightError, Weighting};
use attach::local_missing;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ReductionMode {
    /// Only sites with `P(S) < n·Wt(R)`. Terminates.
    #[default]
    Strict,
    /// Also sites with `P(S) = n·Wt(R)`. May run forever, so a step limit is required.
    Weak,
}

#[derive(Debug, Clone, Error)]
pub enum ReduceError {
    #[error(transparent)]
    Weighting(#[from] WeightError),
    #[error("weighting does not fit the codomain")]
    WrongComplex,
    #[error("weak reduction needs a step limit")]
    WeakNeedsLimit,
    #[error("step limit {limit} reached with P = {perimeter}")]
    StepLimit { limit: usize, perimeter: u64, map: Box<CombMap>, trace: Box<ReductionTrace> },
    #[error("attachment site no longer matches the map")]
    StaleSite,
    #[error("domain is not connected")]
    Disconnected,
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Map(#[from] MapError),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ReduceOptions {
    pub mode: ReductionMode,
    pub step_limit: Option<usize>,
}

impl ReduceOptions {
    pub fn strict() -> Self {
        ReduceOptions::default()
    }

    pub fn weak(step_limit: usize) -> Self {
        ReduceOptions { mode: ReductionMode::Weak, step_limit: Some(step_limit) }
    }

    pub fn with_limit(mut self, step_limit: usize) -> Self {
        self.step_limit = Some(step_limit);
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum StepKind {
    Fold { keep: usize, remove: usize },
    Attach { candidate: CandidateQ, complete: bool, delta: i64 },
    RepairPacking { added: usize },
    RemoveRedundant { removed: usize },
}

impl StepKind {
    pub fn label(&self) -> &'static str {
        match self {
            StepKind::Fold { .. } => "fold",
            StepKind::Attach { complete: true, .. } => "attach-complete",
            StepKind::Attach { complete: false, .. } => "attach-incomplete",
            StepKind::RepairPacking { .. } => "repair",
            StepKind::RemoveRedundant { .. } => "redundant",
        }
    }

    pub fn is_fold(&self) -> bool {
        matches!(self, StepKind::Fold { .. })
    }

    pub fn is_attach(&self) -> bool {
        matches!(self, StepKind::Attach { .. })
    }
}

/// Sizes of the map after a step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Snapshot {
    pub perimeter: u64,
    pub vertices: usize,
    pub edges: usize,
    pub cells: usize,
    pub euler: i64,
}

impl Snapshot {
    fn of(m: &CombMap, perimeter: u64) -> Self {
        let y = m.domain();
        Snapshot {
            perimeter,
            vertices: y.num_vertices(),
            edges: y.num_edges(),
            cells: y.num_cells(),
            euler: y.euler_characteristic(),
        }
    }

    /// `(P, |edges|)`, which strictly decreases lexicographically on every fold and strict attachment.
    pub fn complexity(&self) -> (u64, usize) {
        (self.perimeter, self.edges)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub kind: StepKind,
    pub after: Snapshot,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionTrace {
    pub mode: ReductionMode,
    pub initial: Snapshot,
    pub steps: Vec<TraceStep>,
}

impl ReductionTrace {
    pub fn last(&self) -> Snapshot {
        self.steps.last().map_or(self.initial, |s| s.after)
    }

    pub fn count(&self, pred: impl Fn(&StepKind) -> bool) -> usize {
        self.steps.iter().filter(|s| pred(&s.kind)).count()
    }

    /// Folds plus attachments.
    pub fn moves(&self) -> usize {
        self.count(|k| k.is_fold() || k.is_attach())
    }
}

impl fmt::Display for ReductionTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.steps.iter().enumerate() {
            writeln!(f, "step={} kind={} P={} edges={}", i + 1, s.kind.label(), s.after.perimeter, s.after.edges)?;
        }
        Ok(())
    }
}

/// Reduces `m` and returns the reduced map with its trace.
pub fn reduce(m: CombMap, w: &Weighting, opts: ReduceOptions) -> Result<(CombMap, ReductionTrace), ReduceError> {
    reduce_observed(m, w, opts, &mut |_, _| {})
}

struct Engine<'a> {
    map: CombMap,
    w: &'a Weighting,
    limit: Option<usize>,
    perimeter: u64,
    trace: ReductionTrace,
    observer: &'a mut dyn FnMut(&TraceStep, &CombMap),
}

impl Engine<'_> {
    fn ready(&self) -> Result<(), ReduceError> {
        match self.limit {
            Some(limit) if self.trace.steps.len() >= limit => Err(ReduceError::StepLimit {
                limit,
                perimeter: self.perimeter,
                map: Box::new(self.map.clone()),
                trace: Box::new(self.trace.clone()),
            }),
            _ => Ok(()),
        }
    }

    fn record(&mut self, kind: StepKind, delta: i64) {
        self.perimeter = (self.perimeter as i64 + delta) as u64;
        debug_assert_eq!(self.perimeter, map_perimeter(self.w, &self.map), "after {kind:?}");
        let step = TraceStep { kind, after: Snapshot::of(&self.map, self.perimeter) };
        (self.observer)(&step, &self.map);
        self.trace.steps.push(step);
    }

    fn tidy(&mut self) -> Result<(), ReduceError> {
        while let Some(f) = find_fold(&self.map) {
            self.ready()?;
            let edges = BTreeSet::from([f.keep, f.remove]);
            let before = local_missing(self.w, &self.map, &edges);
            apply_fold(&mut self.map, f);
            let keep = if f.keep > f.remove { f.keep - 1 } else { f.keep };
            let after = local_missing(self.w, &self.map, &BTreeSet::from([keep]));
            self.record(StepKind::Fold { keep: f.keep, remove: f.remove }, after as i64 - before as i64);
        }
        let mut probe = self.map.clone();
        if remove_redundant(&mut probe) > 0 {
            self.ready()?;
            let removed = remove_redundant(&mut self.map);
            self.record(StepKind::RemoveRedundant { removed }, 0);
        }
        let mut probe = self.map.clone();
        if repair_packing(&mut probe) > 0 {
            self.ready()?;
            let added = repair_packing(&mut self.map);
            let p = map_perimeter(self.w, &self.map);
            self.record(StepKind::RepairPacking { added }, p as i64 - self.perimeter as i64);
        }
        Ok(())
    }
}

/// [`reduce`] with a callback invoked after every step.
pub fn reduce_observed(
    m: CombMap,
    w: &Weighting,
    opts: ReduceOptions,
    observer: &mut dyn FnMut(&TraceStep, &CombMap),
) -> Result<(CombMap, ReductionTrace), ReduceError> {
    w.validate()?;
    if !w.fits(m.codomain()) {
        return Err(ReduceError::WrongComplex);
    }
    if opts.mode == ReductionMode::Weak && opts.step_limit.is_none() {
        return Err(ReduceError::WeakNeedsLimit);
    }
    let table = CandidateTable::new(m.codomain(), w, opts.mode);
    let perimeter = map_perimeter(w, &m);
    let trace = ReductionTrace { mode: opts.mode, initial: Snapshot::of(&m, perimeter), steps: Vec::new() };
    let mut e = Engine { map: m, w, limit: opts.step_limit, perimeter, trace, observer };
    loop {
        e.tidy()?;
        let Some(site) = find_attachment(&e.map, &table, opts.mode) else { break };
        e.ready()?;
        let out = attach_packet(&mut e.map, w, &site)?;
        let kind = StepKind::Attach { candidate: site.candidate, complete: out.complete, delta: out.delta };
        e.record(kind, out.delta);
    }
    Ok((e.map, e.trace))
}

#[cfg(test)]
mod tests;
