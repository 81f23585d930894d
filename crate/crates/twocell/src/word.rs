//! Signed letters and words over a free generating set.

use std::fmt;

use serde::{Deserialize, Serialize};

/// A generator index together with an orientation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Letter {
    pub gen: usize,
    pub inv: bool,
}

impl Letter {
    pub fn new(gen: usize, inv: bool) -> Self {
        Letter { gen, inv }
    }

    pub fn pos(gen: usize) -> Self {
        Letter { gen, inv: false }
    }

    pub fn neg(gen: usize) -> Self {
        Letter { gen, inv: true }
    }

    pub fn inverse(self) -> Self {
        Letter { gen: self.gen, inv: !self.inv }
    }

    pub fn cancels(self, other: Letter) -> bool {
        self.gen == other.gen && self.inv != other.inv
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Self {
        Word(letters.into_iter().collect())
    }

    /// Builds a word from signed one-based indices: `3` is the third generator, `-3` its inverse.
    pub fn from_signed(indices: &[i64]) -> Self {
        Word(
            indices
                .iter()
                .map(|&i| {
                    assert!(i != 0, "signed generator index must be nonzero");
                    Letter::new(i.unsigned_abs() as usize - 1, i < 0)
                })
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn pow(&self, n: usize) -> Word {
        let mut v = Vec::with_capacity(self.len() * n);
        for _ in 0..n {
            v.extend_from_slice(&self.0);
        }
        Word(v)
    }

    /// Rotation starting at position `k`.
    pub fn rotate(&self, k: usize) -> Word {
        if self.is_empty() {
            return self.clone();
        }
        let k = k % self.len();
        let mut v = self.0[k..].to_vec();
        v.extend_from_slice(&self.0[..k]);
        Word(v)
    }

    pub fn max_gen(&self) -> Option<usize> {
        self.0.iter().map(|l| l.gen).max()
    }

    pub fn is_freely_reduced(&self) -> bool {
        self.0.windows(2).all(|p| !p[0].cancels(p[1]))
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        self.is_freely_reduced()
            && (self.len() < 2 || !self.0[0].cancels(self.0[self.len() - 1]))
    }

    /// Renders the word with the given generator names, `^-1` marking inverses.
    pub fn display<'a>(&'a self, names: &'a [String]) -> WordDisplay<'a> {
        WordDisplay { word: self, names }
    }
}

pub struct WordDisplay<'a> {
    word: &'a Word,
    names: &'a [String],
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.word.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            match self.names.get(l.gen) {
                Some(n) => f.write_str(n)?,
                None => write!(f, "g{}", l.gen)?,
            }
            if l.inv {
                f.write_str("^-1")?;
            }
        }
        Ok(())
    }
}

pub fn free_reduce(w: &Word) -> Word {
    let mut out: Vec<Letter> = Vec::with_capacity(w.len());
    for &l in &w.0 {
        match out.last() {
            Some(&top) if top.cancels(l) => {
                out.pop();
            }
            _ => out.push(l),
        }
    }
    Word(out)
}

pub fn cyclic_reduce(w: &Word) -> Word {
    let r = free_reduce(w);
    let v = &r.0;
    let (mut i, mut j) = (0, v.len());
    while j >= i + 2 && v[i].cancels(v[j - 1]) {
        i += 1;
        j -= 1;
    }
    Word(v[i..j].to_vec())
}

/// Smallest period of a cyclic sequence whose length is a multiple of it.
pub(crate) fn cyclic_period<T: PartialEq>(s: &[T]) -> usize {
    let n = s.len();
    (1..=n)
        .find(|&p| n.is_multiple_of(p) && (p..n).all(|i| s[i] == s[i - p]))
        .unwrap_or(n)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("period of the empty word is undefined")]
pub struct EmptyWordError;

/// Writes `w` as `period^exponent` with the exponent maximal.
pub fn period_exponent(w: &Word) -> Result<(Word, usize), EmptyWordError> {
    if w.is_empty() {
        return Err(EmptyWordError);
    }
    let p = cyclic_period(&w.0);
    Ok((Word(w.0[..p].to_vec()), w.len() / p))
}

fn is_rotation(u: &[Letter], v: &[Letter]) -> bool {
    if u.len() != v.len() {
        return false;
    }
    if u.is_empty() {
        return true;
    }
    (0..v.len()).any(|k| (0..u.len()).all(|i| u[i] == v[(i + k) % v.len()]))
}

/// True iff `u` is a cyclic rotation of `v` or of `v⁻¹`.
pub fn cyclically_conjugate(u: &Word, v: &Word) -> bool {
    is_rotation(&u.0, &v.0) || is_rotation(&u.0, &v.inverse().0)
}
