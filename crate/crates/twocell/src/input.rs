//! The line-oriented input file.
//!
//! ```text
//! # comments run to end of line
//! gens a b
//! rel (a a b)^3
//! weights unit              # or: weights gen a 2 / weights rel 1: 1 2 3 ...
//! words H: a^2, a b
//! ```
//!
//! `gens` appears once and first. `weights gen` lines adjust a unit base and may not be mixed
//! with `weights rel` lines, which must then give one weight per boundary position of every
//! relator (after cyclic reduction). Relators are 1-indexed.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::complex::Complex2;
use crate::perimeter::{WeightError, Weighting};
use crate::presentation::{parse_word, valid_name, ParseError, ParseErrorKind, Presentation};
use crate::word::Word;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeightSpec {
    /// Every side weighs 1, except sides over the listed generators.
    Unit { overrides: BTreeMap<usize, u64> },
    /// One weight per boundary position of each relator.
    PerSide(Vec<Vec<u64>>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InputFile {
    pub presentation: Presentation,
    pub weights: WeightSpec,
    pub words: BTreeMap<String, Vec<Word>>,
}

fn syntax(line: usize, column: usize, msg: impl Into<String>) -> ParseError {
    ParseError::new(line, column, ParseErrorKind::Syntax(msg.into()))
}

fn parse_u64(tok: &str, line: usize, column: usize) -> Result<u64, ParseError> {
    tok.parse().map_err(|_| syntax(line, column, format!("expected a nonnegative integer, found `{tok}`")))
}

/// Splits `text` on whitespace, keeping 1-based columns.
fn tokens(text: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in text.char_indices().chain(std::iter::once((text.len(), ' '))) {
        match (c.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push((s + 1, &text[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    out
}

enum Pending {
    Gen(usize, usize, String, u64),
    Rel(usize, usize, usize, Vec<u64>),
}

impl InputFile {
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut gens: Option<Vec<String>> = None;
        let mut rels: Vec<(usize, usize, &str)> = Vec::new();
        let mut unit_seen = false;
        let mut pending = Vec::new();
        let mut lists: Vec<(usize, usize, String, &str)> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let body = raw.split('#').next().unwrap_or("");
            let toks = tokens(body);
            let Some(&(col, kw)) = toks.first() else { continue };
            let rest_at = col - 1 + kw.len();
            let rest = &body[rest_at..];
            match kw {
                "gens" => {
                    if gens.is_some() {
                        return Err(syntax(line, col, "`gens` given twice"));
                    }
                    if !rels.is_empty() || !lists.is_empty() {
                        return Err(syntax(line, col, "`gens` must come first"));
                    }
                    gens = Some(toks[1..].iter().map(|t| t.1.to_string()).collect());
                }
                "rel" => {
                    if gens.is_none() {
                        return Err(syntax(line, col, "`rel` before `gens`"));
                    }
                    rels.push((line, rest_at, rest));
                }
                "weights" => match toks.get(1) {
                    Some(&(_, "unit")) if toks.len() == 2 => unit_seen = true,
                    Some(&(_, "gen")) if toks.len() == 4 => {
                        let v = parse_u64(toks[3].1, line, toks[3].0)?;
                        pending.push(Pending::Gen(line, toks[2].0, toks[2].1.to_string(), v));
                    }
                    Some(&(c, "rel")) => {
                        let after = &body[c - 1 + 3..];
                        let (k, ints) = after
                            .split_once(':')
                            .ok_or_else(|| syntax(line, c, "expected `weights rel <k>: <ints>`"))?;
                        let k: usize = k
                            .trim()
                            .parse()
                            .ok()
                            .filter(|&k| k > 0)
                            .ok_or_else(|| syntax(line, c, "relator index must be a positive integer"))?;
                        let base = c - 1 + 3 + k.to_string().len();
                        let vals = tokens(ints)
                            .into_iter()
                            .map(|(tc, t)| parse_u64(t, line, base + tc))
                            .collect::<Result<Vec<_>, _>>()?;
                        pending.push(Pending::Rel(line, c, k, vals));
                    }
                    _ => return Err(syntax(line, col, "expected `weights unit`, `weights gen <name> <int>` or `weights rel <k>: <ints>`")),
                },
                "words" => {
                    let (name, _) =
                        rest.split_once(':').ok_or_else(|| syntax(line, col, "expected `words <name>: <word>, ...`"))?;
                    let name = name.trim();
                    if !valid_name(name) {
                        return Err(syntax(line, col, format!("invalid list name `{name}`")));
                    }
                    let at = rest_at + rest.find(':').expect("split") + 1;
                    lists.push((line, at, name.to_string(), &body[at..]));
                }
                _ => return Err(syntax(line, col, format!("unknown directive `{kw}`"))),
            }
        }
        let names = gens.ok_or_else(|| syntax(1, 1, "missing `gens` line"))?;
        let mut words = Vec::new();
        for &(line, at, text) in &rels {
            let w = parse_word(text, &names).map_err(|e| e.at_line(line, at))?;
            if crate::word::cyclic_reduce(&w).is_empty() {
                return Err(ParseError::new(line, at + 1, ParseErrorKind::EmptyRelator(words.len() + 1)));
            }
            words.push(w);
        }
        let presentation =
            Presentation::new(names, words).map_err(|e| ParseError::new(1, 1, ParseErrorKind::Presentation(e)))?;
        let weights = Self::resolve_weights(&presentation, unit_seen, pending)?;
        let mut word_lists = BTreeMap::new();
        for (line, at, name, text) in lists {
            let mut ws = Vec::new();
            let mut off = at;
            for part in text.split(',') {
                ws.push(parse_word(part, presentation.generators()).map_err(|e| e.at_line(line, off))?);
                off += part.len() + 1;
            }
            if word_lists.insert(name.clone(), ws).is_some() {
                return Err(syntax(line, 1, format!("word list `{name}` given twice")));
            }
        }
        Ok(InputFile { presentation, weights, words: word_lists })
    }

    fn resolve_weights(p: &Presentation, unit_seen: bool, pending: Vec<Pending>) -> Result<WeightSpec, ParseError> {
        let has_rel = pending.iter().any(|d| matches!(d, Pending::Rel(..)));
        let has_gen = pending.iter().any(|d| matches!(d, Pending::Gen(..)));
        if has_rel && (has_gen || unit_seen) {
            let line = pending.iter().map(|d| match d {
                Pending::Gen(l, ..) | Pending::Rel(l, ..) => *l,
            });
            return Err(syntax(line.max().unwrap_or(1), 1, "`weights rel` cannot be mixed with other weight directives"));
        }
        if !has_rel {
            let mut overrides = BTreeMap::new();
            for d in pending {
                let Pending::Gen(line, col, name, v) = d else { unreachable!() };
                let g = p
                    .generator_index(&name)
                    .ok_or_else(|| ParseError::new(line, col, ParseErrorKind::UnknownGenerator(name.clone())))?;
                if overrides.insert(g, v).is_some() {
                    return Err(syntax(line, col, format!("weight for `{name}` given twice")));
                }
            }
            return Ok(WeightSpec::Unit { overrides });
        }
        let mut sides: Vec<Option<Vec<u64>>> = vec![None; p.relators().len()];
        for d in pending {
            let Pending::Rel(line, col, k, vals) = d else { unreachable!() };
            let Some(slot) = sides.get_mut(k - 1) else {
                return Err(syntax(line, col, format!("there is no relator {k}")));
            };
            let len = p.relators()[k - 1].len();
            if vals.len() != len {
                return Err(syntax(line, col, format!("relator {k} has {len} sides, got {} weights", vals.len())));
            }
            if slot.replace(vals).is_some() {
                return Err(syntax(line, col, format!("weights for relator {k} given twice")));
            }
        }
        if let Some(k) = sides.iter().position(Option::is_none) {
            return Err(syntax(1, 1, format!("no `weights rel {}` line", k + 1)));
        }
        Ok(WeightSpec::PerSide(sides.into_iter().map(Option::unwrap).collect()))
    }

    /// The weighting on the standard complex of the presentation.
    pub fn weighting(&self, x: &Complex2) -> Result<Weighting, WeightError> {
        match &self.weights {
            WeightSpec::Unit { overrides } => {
                let per: Vec<u64> = (0..x.num_edges()).map(|g| overrides.get(&g).copied().unwrap_or(1)).collect();
                Weighting::per_edge(x, &per)
            }
            WeightSpec::PerSide(s) => Weighting::new(x, s.clone()),
        }
    }

    pub fn word_list(&self, name: &str) -> Option<&[Word]> {
        self.words.get(name).map(Vec::as_slice)
    }

    /// Canonical text; parsing it gives back `self`.
    pub fn serialize(&self) -> String {
        let p = &self.presentation;
        let mut s = format!("gens {}\n", p.generators().join(" "));
        for r in p.relators() {
            writeln!(s, "rel {}", p.format_word(r)).unwrap();
        }
        match &self.weights {
            WeightSpec::Unit { overrides } => {
                s.push_str("weights unit\n");
                for (g, v) in overrides {
                    writeln!(s, "weights gen {} {v}", p.generators()[*g]).unwrap();
                }
            }
            WeightSpec::PerSide(sides) => {
                for (k, ws) in sides.iter().enumerate() {
                    let ints: Vec<String> = ws.iter().map(u64::to_string).collect();
                    writeln!(s, "weights rel {}: {}", k + 1, ints.join(" ")).unwrap();
                }
            }
        }
        for (name, ws) in &self.words {
            let items: Vec<String> = ws.iter().map(|w| p.format_word(w)).collect();
            writeln!(s, "words {name}: {}", items.join(", ")).unwrap();
        }
        s
    }
}
