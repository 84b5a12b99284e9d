use std::fmt::Display;

use serde::Serialize;

use crate::algebra::{Matrix, Ring};

/// Where and how an identity broke: the order `n`, a cell or index label,
/// and both sides rendered as text.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub n: usize,
    pub location: String,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of one identity check. `failure` is the first mismatch found.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub failure: Option<Failure>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            failure: None,
            notes: Vec::new(),
        }
    }

    pub fn fail(name: impl Into<String>, failure: Failure) -> Self {
        Check {
            name: name.into(),
            failure: Some(failure),
            notes: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn values<T: PartialEq + Display>(
        name: impl Into<String>,
        n: usize,
        location: impl Into<String>,
        lhs: &T,
        rhs: &T,
    ) -> Self {
        if lhs == rhs {
            return Check::pass(name);
        }
        Check::fail(
            name,
            Failure {
                n,
                location: location.into(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            },
        )
    }

    /// Compares two matrices and records the first differing cell.
    pub fn matrices<R: Ring>(
        name: impl Into<String>,
        n: usize,
        lhs: &Matrix<R>,
        rhs: &Matrix<R>,
    ) -> Self {
        if lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols() {
            return Check::fail(
                name,
                Failure {
                    n,
                    location: "shape".into(),
                    lhs: format!("{}x{}", lhs.rows(), lhs.cols()),
                    rhs: format!("{}x{}", rhs.rows(), rhs.cols()),
                },
            );
        }
        match lhs.first_mismatch(rhs) {
            None => Check::pass(name),
            Some((i, j)) => Check::fail(
                name,
                Failure {
                    n,
                    location: format!("({i}, {j})"),
                    lhs: lhs.get(i, j).to_string(),
                    rhs: rhs.get(i, j).to_string(),
                },
            ),
        }
    }

    /// Folds several checks into one named check that keeps the first
    /// failure and every note.
    pub fn all(name: impl Into<String>, checks: impl IntoIterator<Item = Check>) -> Self {
        let mut out = Check::pass(name);
        for c in checks {
            if out.failure.is_none() {
                if let Some(mut f) = c.failure {
                    f.location = format!("{}: {}", c.name, f.location);
                    out.failure = Some(f);
                }
            }
            out.notes.extend(c.notes);
        }
        out
    }
}
