use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    Holds,
    Fails,
    Inconclusive,
}

/// Counterexample payload: the basis indices involved and the offending
/// values, rendered exactly.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub indices: Vec<usize>,
    pub values: Vec<String>,
    pub description: String,
}

impl Witness {
    pub fn new(indices: Vec<usize>, values: Vec<String>, description: impl Into<String>) -> Self {
        Witness { indices, values, description: description.into() }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub check: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
    pub notes: String,
}

impl Verdict {
    pub fn holds(check: &str, notes: impl Into<String>) -> Self {
        Verdict { check: check.into(), status: Status::Holds, witness: None, notes: notes.into() }
    }

    pub fn fails(check: &str, witness: Witness) -> Self {
        let notes = witness.description.clone();
        Verdict { check: check.into(), status: Status::Fails, witness: Some(witness), notes }
    }

    pub fn inconclusive(check: &str, notes: impl Into<String>) -> Self {
        Verdict { check: check.into(), status: Status::Inconclusive, witness: None, notes: notes.into() }
    }

    pub fn is_holds(&self) -> bool {
        self.status == Status::Holds
    }

    pub fn is_fails(&self) -> bool {
        self.status == Status::Fails
    }

    /// Conjunction of several verdicts under a new name: the first Fails wins,
    /// otherwise any Inconclusive makes the whole Inconclusive.
    pub fn all(check: &str, parts: &[Verdict]) -> Verdict {
        if let Some(f) = parts.iter().find(|v| v.is_fails()) {
            let mut w = f.witness.clone().expect("Fails carries a witness");
            w.description = format!("{}: {}", f.check, w.description);
            return Verdict::fails(check, w);
        }
        let pending: Vec<_> = parts
            .iter()
            .filter(|v| v.status == Status::Inconclusive)
            .map(|v| format!("{}: {}", v.check, v.notes))
            .collect();
        if pending.is_empty() {
            Verdict::holds(check, format!("{} checks hold", parts.len()))
        } else {
            Verdict::inconclusive(check, pending.join("; "))
        }
    }
}
