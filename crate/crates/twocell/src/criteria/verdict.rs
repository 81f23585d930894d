use std::fmt;

use serde::{Serialize, Serializer};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Conclusion {
    Coherent,
    LocallyQuasiconvex,
    Both,
    None,
}

impl Conclusion {
    pub fn as_str(self) -> &'static str {
        match self {
            Conclusion::Coherent => "coherent",
            Conclusion::LocallyQuasiconvex => "locally-quasiconvex",
            Conclusion::Both => "both",
            Conclusion::None => "none",
        }
    }

    pub fn coherent(self) -> bool {
        matches!(self, Conclusion::Coherent | Conclusion::Both)
    }

    pub fn locally_quasiconvex(self) -> bool {
        matches!(self, Conclusion::LocallyQuasiconvex | Conclusion::Both)
    }
}

impl fmt::Display for Conclusion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for Conclusion {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Holds,
    Fails,
    /// The hypotheses of the criterion are not met; says nothing either way.
    Inapplicable,
}

/// Evidence attached to a verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    /// A boundary subpath `S` of a cell and the inequality it was tested against.
    Subpath { cell: usize, start: usize, length: usize, word: String, perimeter: u64, bound: u64 },
    SmallCancellation { condition: String, detail: String },
    Occurrences { generator: String, count: usize, limit: String },
    Bound { name: String, value: u64, required: u64 },
    Cell { cell: usize, detail: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub criterion: String,
    pub outcome: Outcome,
    pub conclusion: Conclusion,
    pub witnesses: Vec<Witness>,
    pub notes: Vec<String>,
}

impl Verdict {
    pub fn holds(criterion: &str, conclusion: Conclusion) -> Self {
        Verdict {
            criterion: criterion.to_string(),
            outcome: Outcome::Holds,
            conclusion,
            witnesses: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn fails(criterion: &str, witnesses: Vec<Witness>) -> Self {
        Verdict {
            criterion: criterion.to_string(),
            outcome: Outcome::Fails,
            conclusion: Conclusion::None,
            witnesses,
            notes: Vec::new(),
        }
    }

    pub fn inapplicable(criterion: &str, reason: impl Into<String>) -> Self {
        Verdict {
            criterion: criterion.to_string(),
            outcome: Outcome::Inapplicable,
            conclusion: Conclusion::None,
            witnesses: Vec::new(),
            notes: vec![format!("inapplicable: {}", reason.into())],
        }
    }

    pub fn note(mut self, n: impl Into<String>) -> Self {
        self.notes.push(n.into());
        self
    }

    pub fn witness(mut self, w: Witness) -> Self {
        self.witnesses.push(w);
        self
    }

    pub fn is_holds(&self) -> bool {
        self.outcome == Outcome::Holds
    }

    pub fn is_inapplicable(&self) -> bool {
        self.outcome == Outcome::Inapplicable
    }

    /// 0 holds, 1 fails, 3 inapplicable.
    pub fn exit_code(&self) -> i32 {
        match self.outcome {
            Outcome::Holds => 0,
            Outcome::Fails => 1,
            Outcome::Inapplicable => 3,
        }
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Verdict", 5)?;
        st.serialize_field("criterion", &self.criterion)?;
        st.serialize_field("holds", &self.is_holds())?;
        st.serialize_field("conclusion", &self.conclusion)?;
        st.serialize_field("witnesses", &self.witnesses)?;
        st.serialize_field("notes", &self.notes)?;
        st.end()
    }
}
