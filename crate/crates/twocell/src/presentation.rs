//! Group presentations and the word grammar.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::word::{cyclic_reduce, free_reduce, Letter, Word};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<Word>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("duplicate generator name `{0}`")]
    DuplicateGenerator(String),
    #[error("invalid generator name `{0}`")]
    InvalidName(String),
    #[error("relator {0} uses a generator index out of range")]
    GeneratorOutOfRange(usize),
    #[error("relator {0} is empty after reduction")]
    EmptyRelator(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("{0}")]
    Syntax(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("relator {0} is empty after reduction")]
    EmptyRelator(usize),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

impl ParseError {
    pub(crate) fn new(line: usize, column: usize, kind: ParseErrorKind) -> Self {
        ParseError { line, column, kind }
    }

    pub(crate) fn at_line(mut self, line: usize, column_offset: usize) -> Self {
        self.line = line;
        self.column += column_offset;
        self
    }
}

pub(crate) fn valid_name(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_alphanumeric() || c == '_')
}

impl Presentation {
    /// Validates names and relators. Relators are freely and cyclically reduced; an empty result is an error.
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Self, PresentationError> {
        let mut seen = HashMap::new();
        for g in &generators {
            if !valid_name(g) {
                return Err(PresentationError::InvalidName(g.clone()));
            }
            if seen.insert(g.as_str(), ()).is_some() {
                return Err(PresentationError::DuplicateGenerator(g.clone()));
            }
        }
        let mut rels = Vec::with_capacity(relators.len());
        for (k, r) in relators.iter().enumerate() {
            if r.0.iter().any(|l| l.gen >= generators.len()) {
                return Err(PresentationError::GeneratorOutOfRange(k + 1));
            }
            let c = cyclic_reduce(r);
            if c.is_empty() {
                return Err(PresentationError::EmptyRelator(k + 1));
            }
            rels.push(c);
        }
        Ok(Presentation { generators, relators: rels })
    }

    /// A presentation whose generators are named `a`, `b`, … (or `x1`, `x2`, … beyond 26).
    pub fn with_letters(n: usize, relators: Vec<Word>) -> Result<Self, PresentationError> {
        Self::new(default_names(n), relators)
    }

    /// Parses generator names and relators written in the word grammar.
    pub fn from_strs(gens: &[&str], rels: &[&str]) -> Result<Self, ParseError> {
        let names: Vec<String> = gens.iter().map(|s| s.to_string()).collect();
        let mut words = Vec::new();
        for (k, r) in rels.iter().enumerate() {
            let w = parse_word(r, &names).map_err(|e| e.at_line(k + 1, 0))?;
            words.push(w);
        }
        Self::new(names, words).map_err(|e| ParseError::new(0, 0, e.into()))
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    pub fn parse_word(&self, text: &str) -> Result<Word, ParseError> {
        parse_word(text, &self.generators)
    }

    pub fn format_word(&self, w: &Word) -> String {
        w.display(&self.generators).to_string()
    }
}

pub(crate) fn default_names(n: usize) -> Vec<String> {
    if n <= 26 {
        (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
    } else {
        (1..=n).map(|i| format!("x{i}")).collect()
    }
}

/// Occurrence count of each generator, in either orientation, across all relators.
pub fn generator_occurrences(p: &Presentation) -> Vec<usize> {
    let mut counts = vec![0; p.num_generators()];
    for r in p.relators() {
        for l in &r.0 {
            counts[l.gen] += 1;
        }
    }
    counts
}

/// Parses a presentation file; see [`crate::input::InputFile`] for the grammar.
pub fn parse_presentation(text: &str) -> Result<Presentation, ParseError> {
    crate::input::InputFile::parse(text).map(|f| f.presentation)
}

struct WordParser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    names: &'a [String],
    lookup: HashMap<&'a str, usize>,
}

/// Parses one word. Tokens are `name`, `name^k`, `name^-k` and `( word )^k`, separated by
/// whitespace. A run of name characters that is not itself a generator is split greedily into the
/// longest generator names, so `ab^2` reads as `a b^2` when `a` and `b` are generators.
pub fn parse_word(text: &str, names: &[String]) -> Result<Word, ParseError> {
    let mut p = WordParser {
        chars: text.char_indices().collect(),
        pos: 0,
        names,
        lookup: names.iter().enumerate().map(|(i, n)| (n.as_str(), i)).collect(),
    };
    let w = p.sequence(0)?;
    if p.pos < p.chars.len() {
        return Err(p.err(ParseErrorKind::Syntax(format!("unexpected `{}`", p.chars[p.pos].1))));
    }
    Ok(free_reduce(&w))
}

impl WordParser<'_> {
    fn column(&self) -> usize {
        self.chars.get(self.pos).map(|&(i, _)| i + 1).unwrap_or_else(|| {
            self.chars.last().map(|&(i, c)| i + c.len_utf8() + 1).unwrap_or(1)
        })
    }

    fn err(&self, kind: ParseErrorKind) -> ParseError {
        ParseError::new(1, self.column(), kind)
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn sequence(&mut self, depth: usize) -> Result<Word, ParseError> {
        let mut out = Vec::new();
        loop {
            self.skip_ws();
            match self.peek() {
                None => break,
                Some(')') if depth > 0 => break,
                Some('(') => {
                    self.pos += 1;
                    let inner = self.sequence(depth + 1)?;
                    self.skip_ws();
                    if self.peek() != Some(')') {
                        return Err(self.err(ParseErrorKind::Syntax("expected `)`".into())));
                    }
                    self.pos += 1;
                    let e = self.exponent()?;
                    out.extend(power(&inner.0, e));
                }
                Some(c) if c.is_alphanumeric() || c == '_' => {
                    let start = self.pos;
                    while matches!(self.peek(), Some(c) if c.is_alphanumeric() || c == '_') {
                        self.pos += 1;
                    }
                    let run: String = self.chars[start..self.pos].iter().map(|&(_, c)| c).collect();
                    let gens = self.split_run(&run, start)?;
                    let e = self.exponent()?;
                    let (last, rest) = gens.split_last().expect("nonempty run");
                    out.extend(rest.iter().map(|&g| Letter::pos(g)));
                    out.extend(power(&[Letter::pos(*last)], e));
                }
                Some(c) => {
                    return Err(self.err(ParseErrorKind::Syntax(format!("unexpected `{c}`"))));
                }
            }
        }
        Ok(Word(out))
    }

    fn split_run(&self, run: &str, start: usize) -> Result<Vec<usize>, ParseError> {
        if let Some(&g) = self.lookup.get(run) {
            return Ok(vec![g]);
        }
        let mut out = Vec::new();
        let mut rest = run;
        while !rest.is_empty() {
            let best = self
                .names
                .iter()
                .enumerate()
                .filter(|(_, n)| rest.starts_with(n.as_str()))
                .max_by_key(|(_, n)| n.len());
            match best {
                Some((g, n)) => {
                    out.push(g);
                    rest = &rest[n.len()..];
                }
                None => {
                    let column = self.chars[start].0 + 1;
                    return Err(ParseError::new(
                        1,
                        column,
                        ParseErrorKind::UnknownGenerator(run.to_string()),
                    ));
                }
            }
        }
        Ok(out)
    }

    fn exponent(&mut self) -> Result<i64, ParseError> {
        if self.peek() != Some('^') {
            return Ok(1);
        }
        self.pos += 1;
        let neg = if self.peek() == Some('-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err(ParseErrorKind::Syntax("expected an integer exponent".into())));
        }
        let digits: String = self.chars[start..self.pos].iter().map(|&(_, c)| c).collect();
        let v: i64 = digits
            .parse()
            .map_err(|_| self.err(ParseErrorKind::Syntax("exponent too large".into())))?;
        Ok(if neg { -v } else { v })
    }
}

fn power(base: &[Letter], e: i64) -> Vec<Letter> {
    let unit: Vec<Letter> = if e < 0 {
        base.iter().rev().map(|l| l.inverse()).collect()
    } else {
        base.to_vec()
    };
    let mut out = Vec::with_capacity(unit.len() * e.unsigned_abs() as usize);
    for _ in 0..e.unsigned_abs() {
        out.extend_from_slice(&unit);
    }
    out
}
