use serde::Serialize;

use super::{Conclusion, Verdict, Witness};
use crate::complex::{check_small_cancellation, compute_pieces_with, Complex2, PieceTable};
use crate::exec::{map_range, Execution};
use crate::perimeter::{subpath_perimeter, Weighting};
use crate::presentation::Presentation;
use crate::word::{period_exponent, Word};

pub(crate) fn subpath_word(x: &Complex2, c: usize, start: usize, length: usize) -> String {
    let w = Word::from_letters((0..length).map(|k| x.boundary_at(c, start + k).into()));
    w.display(&x.edge_names()).to_string()
}

/// A violation of `P(S) ≤ bound` (or `<` when strict) over the listed subpaths of one cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Worst {
    excess: i64,
    cell: usize,
    start: usize,
    length: usize,
    perimeter: u64,
    bound: u64,
}

fn worse(a: Option<Worst>, b: Option<Worst>) -> Option<Worst> {
    match (a, b) {
        (Some(a), Some(b)) => Some(if b.excess > a.excess { b } else { a }),
        (a, None) => a,
        (None, b) => b,
    }
}

fn violates(p: u64, bound: u64, strict: bool) -> bool {
    if strict {
        p >= bound
    } else {
        p > bound
    }
}

fn subpath_witness(x: &Complex2, w: Worst) -> Witness {
    Witness::Subpath {
        cell: w.cell,
        start: w.start,
        length: w.length,
        word: subpath_word(x, w.cell, w.start, w.length),
        perimeter: w.perimeter,
        bound: w.bound,
    }
}

/// `n·Wt(R)` for each cell.
fn packet_weights(x: &Complex2, w: &Weighting) -> Vec<u64> {
    (0..x.num_cells())
        .map(|c| x.cell_period(c).expect("cell exists").1 as u64 * w.cell_weight(c))
        .collect()
}

/// One-relator groups with torsion: `P(S) ≤ n·Wt(R)` for every subpath `S` with `|S| < |W|`.
pub fn check_one_relator_torsion(x: &Complex2, w: &Weighting) -> Verdict {
    const ID: &str = "one-relator-torsion";
    if x.num_cells() != 1 || x.num_vertices() != 1 {
        return Verdict::inapplicable(ID, "needs a single 0-cell and a single 2-cell");
    }
    if !w.fits(x) || !w.is_valid() {
        return Verdict::inapplicable(ID, "weighting does not fit the complex");
    }
    let (period, n) = x.cell_period(0).expect("one cell");
    if n <= 1 {
        return Verdict::inapplicable(ID, format!("exponent {n} is not greater than 1"));
    }
    let bound = packet_weights(x, w)[0];
    let m = x.boundary_len(0);
    let mut worst = None;
    let mut max_p = 0;
    for start in 0..m {
        for length in 1..period {
            let p = subpath_perimeter(w, x, 0, start, length);
            max_p = max_p.max(p);
            if violates(p, bound, false) {
                let v = Worst { excess: p as i64 - bound as i64, cell: 0, start, length, perimeter: p, bound };
                worst = worse(worst, Some(v));
            }
        }
    }
    let summary = format!("max P(S) over |S| < {period} is {max_p}; n·Wt(R) = {bound}");
    match worst {
        None => Verdict::holds(ID, Conclusion::Coherent).note(summary),
        Some(v) => Verdict::fails(ID, vec![subpath_witness(x, v)]).note(summary),
    }
}

/// `⟨A | Wⁿ⟩` is coherent once `n ≥ |W| − 1`, and locally quasiconvex once `n ≥ 3|W|`.
pub fn check_equalweights(w: &Word, n: usize) -> Verdict {
    const ID: &str = "equal-weights";
    if w.is_empty() || !w.is_cyclically_reduced() {
        return Verdict::inapplicable(ID, "W must be nonempty and cyclically reduced");
    }
    let len = w.len();
    let coherent = n + 1 >= len;
    let lqc = n >= 3 * len;
    let bounds = format!("n = {n}; coherence needs n ≥ {}; local quasiconvexity needs n ≥ {}", len - 1, 3 * len);
    match (coherent, lqc) {
        (true, true) => Verdict::holds(ID, Conclusion::Both).note(bounds),
        (true, false) => Verdict::holds(ID, Conclusion::Coherent).note(bounds),
        _ => Verdict::fails(
            ID,
            vec![Witness::Bound { name: "n".into(), value: n as u64, required: len as u64 - 1 }],
        )
        .note(bounds),
    }
}

/// The outcome of [`check_min_generator`] with the 0/1 weighting it certifies with.
#[derive(Clone, Debug)]
pub struct MinGenerator {
    pub verdict: Verdict,
    /// Generator index attaining the minimum and its occurrence count `k`.
    pub generator: Option<(usize, usize)>,
    pub complex: Complex2,
    pub weighting: Option<Weighting>,
}

/// `⟨a₁…a_r | Wⁿ⟩` is coherent when some generator occurs `k ≤ n` times in `W`.
///
/// `n = 1` is reported inapplicable.
pub fn check_min_generator(w: &Word, n: usize, num_generators: usize) -> MinGenerator {
    const ID: &str = "min-generator";
    let r = num_generators.max(w.max_gen().map_or(0, |g| g + 1));
    let names = crate::presentation::default_names(r);
    let pres = Presentation::new(names, if w.is_empty() { vec![] } else { vec![w.pow(n.max(1))] });
    let complex = match pres {
        Ok(p) => crate::complex::standard_complex(&p),
        Err(_) => crate::complex::standard_complex(&Presentation::with_letters(r, vec![]).expect("no relators")),
    };
    let empty = |verdict| MinGenerator { verdict, generator: None, complex: complex.clone(), weighting: None };
    if w.is_empty() || !w.is_cyclically_reduced() {
        return empty(Verdict::inapplicable(ID, "W must be nonempty and cyclically reduced"));
    }
    if n < 2 {
        return empty(Verdict::inapplicable(ID, "needs exponent n ≥ 2"));
    }
    let mut counts = vec![0usize; r];
    for l in w.letters() {
        counts[l.gen] += 1;
    }
    let (g, k) = counts
        .iter()
        .enumerate()
        .filter(|(_, &c)| c > 0)
        .map(|(g, &c)| (g, c))
        .min_by_key(|&(g, c)| (c, g))
        .expect("nonempty word");
    let sides = complex.boundaries().iter().map(|b| b.iter().map(|d| u64::from(d.edge == g)).collect()).collect();
    let weighting = Weighting::new(&complex, sides).expect("cell weight n·k > 0");
    let name = complex.edge_name(g);
    let verdict = if n >= k {
        Verdict::holds(ID, Conclusion::Coherent)
    } else {
        Verdict::fails(ID, vec![Witness::Bound { name: "n".into(), value: n as u64, required: k as u64 }])
    }
    .note(format!("{name} occurs {k} times in W; weight 1 on its sides, 0 elsewhere"));
    MinGenerator { verdict, generator: Some((g, k)), complex, weighting: Some(weighting) }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ScVariant {
    /// `C(6)-T(3)`, subpaths of at most three pieces.
    C6T3,
    /// `C(4)-T(4)`, subpaths of at most two pieces.
    C4T4,
}

impl ScVariant {
    pub fn pieces(self) -> usize {
        match self {
            ScVariant::C6T3 => 3,
            ScVariant::C4T4 => 2,
        }
    }

    fn pq(self) -> (usize, usize) {
        match self {
            ScVariant::C6T3 => (6, 3),
            ScVariant::C4T4 => (4, 4),
        }
    }

    pub fn id(self, strict: bool) -> &'static str {
        match (self, strict) {
            (ScVariant::C6T3, false) => "sc-c6t3",
            (ScVariant::C6T3, true) => "sc-c6t3-strict",
            (ScVariant::C4T4, false) => "sc-c4t4",
            (ScVariant::C4T4, true) => "sc-c4t4-strict",
        }
    }
}

pub fn check_sc_weight(x: &Complex2, w: &Weighting, variant: ScVariant, strict: bool) -> Verdict {
    check_sc_weight_with(x, w, variant, strict, Execution::default())
}

/// Small-cancellation weight test: `P(S) ≤ n·Wt(R)` (`<` when strict) for every subpath `S` of a
/// boundary that is a concatenation of at most three (C6T3) or two (C4T4) pieces.
pub fn check_sc_weight_with(x: &Complex2, w: &Weighting, variant: ScVariant, strict: bool, exec: Execution) -> Verdict {
    let id = variant.id(strict);
    if !w.fits(x) || !w.is_valid() {
        return Verdict::inapplicable(id, "weighting does not fit the complex");
    }
    let table = compute_pieces_with(x, exec);
    check_sc_weight_table(x, w, &table, variant, strict, exec)
}

pub(crate) fn check_sc_weight_table(
    x: &Complex2,
    w: &Weighting,
    table: &PieceTable,
    variant: ScVariant,
    strict: bool,
    exec: Execution,
) -> Verdict {
    let id = variant.id(strict);
    let (p, q) = variant.pq();
    let sc = check_small_cancellation(x, table, p, q, None);
    if !sc.holds() {
        let mut v = Verdict::inapplicable(id, format!("C({p})-T({q}) fails"));
        if let Some((c, k)) = sc.c_p_witness {
            v = v.witness(Witness::SmallCancellation {
                condition: format!("C({p})"),
                detail: format!("cell {c} is covered by {k} pieces"),
            });
        }
        if let Some((vx, g)) = sc.t_q_witness {
            v = v.witness(Witness::SmallCancellation {
                condition: format!("T({q})"),
                detail: format!("link of vertex {vx} has girth {g}"),
            });
        }
        return v;
    }
    let bounds = packet_weights(x, w);
    let k = variant.pieces();
    let per_cell: Vec<Option<Worst>> = map_range(exec, x.num_cells(), |c| {
        let m = x.boundary_len(c);
        let bound = bounds[c];
        let mut worst = None;
        for start in 0..m {
            for length in 1..m {
                match table.min_cover(c, start, length).expect("subpath in range") {
                    Some(cover) if cover <= k => {}
                    _ => break,
                }
                let p = subpath_perimeter(w, x, c, start, length);
                if violates(p, bound, strict) {
                    let v = Worst { excess: p as i64 - bound as i64, cell: c, start, length, perimeter: p, bound };
                    worst = worse(worst, Some(v));
                }
            }
        }
        worst
    });
    let worst = per_cell.into_iter().fold(None, worse);
    let rel = if strict { "<" } else { "≤" };
    let summary = format!("P(S) {rel} n·Wt(R) for every S of at most {k} consecutive pieces");
    match worst {
        None => {
            let c = if strict { Conclusion::Both } else { Conclusion::Coherent };
            Verdict::holds(id, c).note(summary)
        }
        Some(v) => Verdict::fails(id, vec![subpath_witness(x, v)]).note(format!("needed: {summary}")),
    }
}

/// `C'(1/n)` together with every generator occurring at most `n/3` times.
pub fn check_few_occurrences(p: &Presentation) -> Verdict {
    const ID: &str = "few-occurrences";
    let x = crate::complex::standard_complex(p);
    let table = compute_pieces_with(&x, Execution::default());
    // largest n with every piece shorter than |∂R|/n
    let n = (0..x.num_cells())
        .filter(|&c| table.max_piece[c] > 0)
        .map(|c| (x.boundary_len(c) - 1) / table.max_piece[c])
        .min();
    let counts = crate::presentation::generator_occurrences(p);
    let Some(n) = n else {
        return Verdict::holds(ID, Conclusion::Both).note("no pieces: C'(1/n) holds for every n");
    };
    let bad: Vec<Witness> = counts
        .iter()
        .enumerate()
        .filter(|(_, &c)| 3 * c > n)
        .map(|(g, &c)| Witness::Occurrences { generator: p.generators()[g].clone(), count: c, limit: format!("{n}/3") })
        .collect();
    let note = format!("largest n with C'(1/n) is {n}");
    if bad.is_empty() {
        Verdict::holds(ID, Conclusion::Both).note(note)
    } else {
        Verdict::fails(ID, bad).note(note)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum PowerError {
    #[error("no words given")]
    NoWords,
    #[error("word {0} is empty or not cyclically reduced")]
    NotCyclicallyReduced(usize),
    #[error("word {index} is a proper power (exponent {exponent})")]
    ProperPower { index: usize, exponent: usize },
    #[error("words {0} and {1} are conjugate up to inversion")]
    ConjugatePair(usize, usize),
    #[error("{words} words but {exponents} exponents")]
    ExponentCount { words: usize, exponents: usize },
}

/// `N = ⌈6·|W_max|/|W_min|·Σ|Wᵢ|⌉`. With exponents, coherent when every `nᵢ ≥ N` and
/// locally quasiconvex when every `nᵢ > N`.
pub fn power_theorem(words: &[Word], exponents: Option<&[u64]>) -> Result<(u64, Verdict), PowerError> {
    const ID: &str = "power";
    if words.is_empty() {
        return Err(PowerError::NoWords);
    }
    for (i, w) in words.iter().enumerate() {
        if w.is_empty() || !w.is_cyclically_reduced() {
            return Err(PowerError::NotCyclicallyReduced(i));
        }
        let (_, e) = period_exponent(w).map_err(|_| PowerError::NotCyclicallyReduced(i))?;
        if e > 1 {
            return Err(PowerError::ProperPower { index: i, exponent: e });
        }
    }
    for i in 0..words.len() {
        for j in i + 1..words.len() {
            let (u, v) = (&words[i], &words[j]);
            if crate::word::cyclically_conjugate(u, v) || crate::word::cyclically_conjugate(u, &v.inverse()) {
                return Err(PowerError::ConjugatePair(i, j));
            }
        }
    }
    let lens: Vec<u64> = words.iter().map(|w| w.len() as u64).collect();
    let (max, min, sum) = (*lens.iter().max().unwrap(), *lens.iter().min().unwrap(), lens.iter().sum::<u64>());
    let n = (6 * max * sum).div_ceil(min);
    let note = format!("N = 6·{max}/{min}·{sum} = {n}");
    let Some(exps) = exponents else {
        return Ok((n, Verdict::inapplicable(ID, "no exponents supplied").note(note)));
    };
    if exps.len() != words.len() {
        return Err(PowerError::ExponentCount { words: words.len(), exponents: exps.len() });
    }
    let short: Vec<Witness> = exps
        .iter()
        .enumerate()
        .filter(|(_, &e)| e < n)
        .map(|(i, &e)| Witness::Bound { name: format!("n{}", i + 1), value: e, required: n })
        .collect();
    let verdict = if !short.is_empty() {
        Verdict::fails(ID, short)
    } else if exps.iter().all(|&e| e > n) {
        Verdict::holds(ID, Conclusion::Both)
    } else {
        Verdict::holds(ID, Conclusion::Coherent)
    };
    Ok((n, verdict.note(note)))
}

/// Weight 0 on sides over the Magnus generators, 1 elsewhere. Fails when a relator uses only
/// Magnus generators, in which case they generate a free factor.
pub fn magnus_weighting(x: &Complex2, magnus: &[usize]) -> (Weighting, Verdict) {
    const ID: &str = "magnus";
    let sides: Vec<Vec<u64>> =
        x.boundaries().iter().map(|b| b.iter().map(|d| u64::from(!magnus.contains(&d.edge))).collect()).collect();
    let w = Weighting::from_raw(x, sides).expect("shape matches");
    if !x.is_one_vertex() {
        return (w, Verdict::inapplicable(ID, "needs a single 0-cell"));
    }
    if let Some(&g) = magnus.iter().find(|&&g| g >= x.num_edges()) {
        return (w, Verdict::inapplicable(ID, format!("generator {g} does not exist")));
    }
    let zero: Vec<Witness> = (0..x.num_cells())
        .filter(|&c| w.cell_weight(c) == 0)
        .map(|c| Witness::Cell { cell: c, detail: "relator uses only Magnus generators: free-factor case".into() })
        .collect();
    let verdict = if zero.is_empty() {
        Verdict::holds(ID, Conclusion::None)
            .note("weighting valid with P = 0 on the Magnus subgraph; intersections also need a strict certificate")
    } else {
        Verdict::fails(ID, zero)
    };
    (w, verdict)
}
