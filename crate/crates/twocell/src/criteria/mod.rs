//! Sufficient conditions for coherence and local quasiconvexity, each returning a [`Verdict`].
//!
//! A failing verdict only means the criterion does not apply its conclusion; it never
//! certifies incoherence.

mod checks;
mod verdict;

pub use checks::{
    check_equalweights, check_few_occurrences, check_min_generator, check_one_relator_torsion, check_sc_weight,
    check_sc_weight_with, magnus_weighting, power_theorem, MinGenerator, PowerError, ScVariant,
};
pub use verdict::{Conclusion, Outcome, Verdict, Witness};

use thiserror::Error;

use crate::complex::Complex2;
use crate::perimeter::Weighting;
use crate::presentation::Presentation;
use crate::word::period_exponent;

pub const CRITERIA: &[&str] = &[
    "one-relator-torsion",
    "equal-weights",
    "min-generator",
    "sc-c6t3",
    "sc-c4t4",
    "sc-c6t3-strict",
    "sc-c4t4-strict",
    "few-occurrences",
    "power",
    "magnus",
];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown criterion `{0}`")]
pub struct UnknownCriterion(pub String);

/// Everything a checker might need about one input.
#[derive(Clone, Copy, Debug)]
pub struct CriteriaInput<'a> {
    pub presentation: &'a Presentation,
    pub complex: &'a Complex2,
    pub weighting: &'a Weighting,
    /// Generator indices spanning a Magnus subgraph, if one was named.
    pub magnus: Option<&'a [usize]>,
}

/// The single relator as `(period, exponent)`, if there is exactly one.
fn one_relator(p: &Presentation) -> Option<(crate::word::Word, usize)> {
    match p.relators() {
        [r] => period_exponent(r).ok(),
        _ => None,
    }
}

/// Runs one criterion by id; `"all"` runs every criterion in [`CRITERIA`] order.
pub fn run_criterion(id: &str, input: CriteriaInput<'_>) -> Result<Vec<Verdict>, UnknownCriterion> {
    if id == "all" {
        return Ok(CRITERIA.iter().flat_map(|c| run_criterion(c, input).expect("known id")).collect());
    }
    let CriteriaInput { presentation: p, complex: x, weighting: w, magnus } = input;
    let v = match id {
        "one-relator-torsion" => check_one_relator_torsion(x, w),
        "equal-weights" => match one_relator(p) {
            Some((wd, n)) => check_equalweights(&wd, n),
            None => Verdict::inapplicable(id, "needs exactly one relator"),
        },
        "min-generator" => match one_relator(p) {
            Some((wd, n)) => check_min_generator(&wd, n, p.num_generators()).verdict,
            None => Verdict::inapplicable(id, "needs exactly one relator"),
        },
        "sc-c6t3" => check_sc_weight(x, w, ScVariant::C6T3, false),
        "sc-c4t4" => check_sc_weight(x, w, ScVariant::C4T4, false),
        "sc-c6t3-strict" => check_sc_weight(x, w, ScVariant::C6T3, true),
        "sc-c4t4-strict" => check_sc_weight(x, w, ScVariant::C4T4, true),
        "few-occurrences" => check_few_occurrences(p),
        "power" => power_from_relators(p),
        "magnus" => match magnus {
            Some(m) => magnus_weighting(x, m).1,
            None => Verdict::inapplicable(id, "no Magnus generators named"),
        },
        _ => return Err(UnknownCriterion(id.to_string())),
    };
    Ok(vec![v])
}

/// The power theorem applied to the periods of the relators, with their exponents.
fn power_from_relators(p: &Presentation) -> Verdict {
    if p.relators().is_empty() {
        return Verdict::inapplicable("power", "no relators");
    }
    let (words, exps): (Vec<_>, Vec<_>) =
        p.relators().iter().map(|r| period_exponent(r).expect("relators are nonempty")).map(|(w, n)| (w, n as u64)).unzip();
    match power_theorem(&words, Some(&exps)) {
        Ok((_, v)) => v,
        Err(e) => Verdict::inapplicable("power", e.to_string()),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CertificateLevel {
    /// Any holding verdict computed from the complex and its weighting.
    Coherent,
    /// A strict small-cancellation weight verdict, as intersections require.
    Strict,
}

/// The first holding verdict that certifies `(x, w)` at the requested level.
pub fn certify(x: &Complex2, w: &Weighting, level: CertificateLevel) -> Option<Verdict> {
    if x.num_cells() == 0 {
        return Some(Verdict::holds("free", Conclusion::Both).note("no 2-cells: the group is free"));
    }
    if !w.fits(x) || !w.is_valid() {
        return None;
    }
    let strict = [(ScVariant::C6T3, true), (ScVariant::C4T4, true)];
    let loose = [(ScVariant::C6T3, false), (ScVariant::C4T4, false)];
    let sc = |list: &[(ScVariant, bool)]| {
        list.iter().map(|&(v, s)| check_sc_weight(x, w, v, s)).find(|v| v.is_holds())
    };
    match level {
        CertificateLevel::Strict => sc(&strict),
        CertificateLevel::Coherent => Some(check_one_relator_torsion(x, w))
            .filter(|v| v.is_holds())
            .or_else(|| sc(&loose))
            .or_else(|| sc(&strict)),
    }
}
