use std::path::Path;
use std::sync::Arc;

use serde_json::{json, Value};
use thiserror::Error;
use twocell::criteria::{run_criterion, CriteriaInput, UnknownCriterion};
use twocell::input::InputFile;
use twocell::perimeter::WeightError;
use twocell::presentation::ParseError;
use twocell::subgroups::{intersect, magnus_intersect, member, subgroup_presentation, SubgroupError, SubgroupOptions, SubgroupResult};
use twocell::{standard_complex, Complex2, Weighting, Word};

use crate::report;
use crate::{Command, RunArgs};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}:{source}")]
    Parse { path: String, source: ParseError },
    #[error(transparent)]
    Weights(#[from] WeightError),
    #[error(transparent)]
    Criterion(#[from] UnknownCriterion),
    #[error("unknown word list `@{0}`")]
    UnknownList(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("in `{text}`: {source}")]
    Word { text: String, source: ParseError },
    #[error(transparent)]
    Subgroup(#[from] SubgroupError),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Subgroup(SubgroupError::NoCertificate) => 3,
            _ => 2,
        }
    }
}

pub struct Output {
    pub text: String,
    pub code: u8,
}

struct Loaded {
    file: InputFile,
    x: Arc<Complex2>,
    w: Weighting,
}

fn load(path: &Path) -> Result<Loaded, CliError> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: shown.clone(), source })?;
    let file = InputFile::parse(&text).map_err(|source| CliError::Parse { path: shown, source })?;
    let x = Arc::new(standard_complex(&file.presentation));
    let w = file.weighting(&x)?;
    Ok(Loaded { file, x, w })
}

fn words(l: &Loaded, spec: &str) -> Result<Vec<Word>, CliError> {
    if let Some(name) = spec.strip_prefix('@') {
        return l.file.word_list(name).map(<[Word]>::to_vec).ok_or_else(|| CliError::UnknownList(name.to_string()));
    }
    if spec.trim().is_empty() {
        return Ok(Vec::new());
    }
    spec.split(',').map(|t| word(l, t)).collect()
}

fn word(l: &Loaded, text: &str) -> Result<Word, CliError> {
    l.file.presentation.parse_word(text).map_err(|source| CliError::Word { text: text.to_string(), source })
}

fn generator_indices(l: &Loaded, spec: &str) -> Result<Vec<usize>, CliError> {
    spec.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|g| l.file.presentation.generator_index(g).ok_or_else(|| CliError::UnknownGenerator(g.to_string())))
        .collect()
}

fn options(run: &RunArgs) -> SubgroupOptions {
    SubgroupOptions { force: run.force, step_limit: run.step_limit, ..SubgroupOptions::default() }
}

fn write_trace(run: &RunArgs, traces: &[twocell::ReductionTrace]) -> Result<(), CliError> {
    if let Some(path) = &run.trace {
        std::fs::write(path, report::trace_file(traces))
            .map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
    }
    Ok(())
}

fn subgroup_output(run: &RunArgs, r: &SubgroupResult) -> Result<Output, CliError> {
    write_trace(run, &r.traces)?;
    let text = if run.json {
        report::pretty(&json!({
            "presentation": report::presentation(&r.presentation),
            "certificate": report::certificate(r.certificate.as_ref()),
            "heuristic": r.heuristic,
            "steps": report::steps(&r.traces),
        }))
    } else {
        let mut s = report::presentation_text(&r.presentation);
        if r.heuristic {
            s.push_str("(heuristic: no certificate)\n");
        }
        s
    };
    Ok(Output { text, code: 0 })
}

pub fn run(cmd: Command) -> Result<Output, CliError> {
    match cmd {
        Command::Info { file, json } => {
            let l = load(&file)?;
            let v = report::info(&l.file.presentation, &l.x, &l.w);
            let text = if json { report::pretty(&v) } else { report::info_text(&v) };
            Ok(Output { text, code: 0 })
        }
        Command::Check { file, criterion, magnus } => {
            let l = load(&file)?;
            let magnus = magnus.map(|m| generator_indices(&l, &m)).transpose()?;
            let input = CriteriaInput {
                presentation: &l.file.presentation,
                complex: &l.x,
                weighting: &l.w,
                magnus: magnus.as_deref(),
            };
            let verdicts = run_criterion(&criterion, input)?;
            if criterion == "all" {
                let code = if verdicts.iter().any(|v| v.is_holds()) {
                    0
                } else if verdicts.iter().all(|v| v.is_inapplicable()) {
                    3
                } else {
                    1
                };
                let v = Value::Array(verdicts.iter().map(report::verdict).collect());
                Ok(Output { text: report::pretty(&v), code })
            } else {
                let v = &verdicts[0];
                Ok(Output { text: report::pretty(&report::verdict(v)), code: v.exit_code() as u8 })
            }
        }
        Command::Subgroup { file, run } => {
            let l = load(&file)?;
            let gens = words(&l, &run.gens)?;
            let r = subgroup_presentation(&l.x, &l.w, &gens, options(&run))?;
            subgroup_output(&run, &r)
        }
        Command::Member { file, word: text, run } => {
            let l = load(&file)?;
            let gens = words(&l, &run.gens)?;
            let u = word(&l, &text)?;
            let m = member(&l.x, &l.w, &gens, &u, options(&run))?;
            write_trace(&run, std::slice::from_ref(&m.trace))?;
            let out = if run.json {
                report::pretty(&json!({
                    "member": m.member,
                    "certificate": report::certificate(m.certificate.as_ref()),
                    "heuristic": m.heuristic,
                    "steps": m.trace.steps.len(),
                }))
            } else {
                format!("{}\n", m.member)
            };
            Ok(Output { text: out, code: if m.member { 0 } else { 1 } })
        }
        Command::Intersect { file, other, magnus, run } => {
            let l = load(&file)?;
            let h = words(&l, &run.gens)?;
            let r = match (other, magnus) {
                (_, Some(m)) => magnus_intersect(&l.x, &generator_indices(&l, &m)?, &h, options(&run))?,
                (Some(k), None) => intersect(&l.x, &l.w, &h, &words(&l, &k)?, options(&run))?,
                (None, None) => unreachable!("clap requires --with or --magnus"),
            };
            subgroup_output(&run, &r)
        }
    }
}
