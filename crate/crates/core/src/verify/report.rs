use std::fmt;

use serde::Serialize;

use crate::ring::Ring;
use crate::series::TruncatedSeries;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// The first coefficient at which two constructions disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub n: i64,
    pub expected: String,
    pub actual: String,
}

/// Outcome of one check. Only the four schema fields are serialised; `notes`
/// carry extra context for the text output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub check: String,
    pub order: usize,
    pub status: Status,
    pub first_failure: Option<Failure>,
    #[serde(skip)]
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        };
        write!(f, "{tag} {} (order {})", self.check, self.order)?;
        if let Some(fail) = &self.first_failure {
            write!(f, ": n = {}, expected {}, actual {}", fail.n, fail.expected, fail.actual)?;
        }
        for note in &self.notes {
            write!(f, "\n    {note}")?;
        }
        Ok(())
    }
}

/// Accumulates sub-check results; the first mismatch wins.
#[derive(Debug)]
pub(crate) struct Checker {
    check: &'static str,
    order: usize,
    failure: Option<Failure>,
    notes: Vec<String>,
}

impl Checker {
    pub fn new(check: &'static str, order: usize) -> Self {
        Self {
            check,
            order,
            failure: None,
            notes: Vec::new(),
        }
    }

    pub fn note(&mut self, note: String) {
        self.notes.push(note);
    }

    fn fail(&mut self, label: &str, n: i64, expected: String, actual: String) {
        if self.failure.is_none() {
            self.notes.insert(0, format!("first mismatch in: {label}"));
            self.failure = Some(Failure { n, expected, actual });
        }
    }

    /// Records a mismatch unless `expected == actual`.
    pub fn value<T: PartialEq + fmt::Display>(&mut self, label: &str, n: i64, expected: &T, actual: &T) {
        if expected != actual {
            self.fail(label, n, expected.to_string(), actual.to_string());
        }
    }

    /// Records a failure when `ok` is false.
    pub fn holds(&mut self, label: &str, n: i64, ok: bool, expected: impl fmt::Display, actual: impl fmt::Display) {
        if !ok {
            self.fail(label, n, expected.to_string(), actual.to_string());
        }
    }

    /// Compares coefficient `i` of both series, reporting it as `q^{exponent(i)}`.
    pub fn series<R: Ring>(
        &mut self,
        label: &str,
        expected: &TruncatedSeries<R>,
        actual: &TruncatedSeries<R>,
        exponent: impl Fn(usize) -> usize,
    ) {
        if expected.order() != actual.order() {
            self.fail(label, -1, format!("order {}", expected.order()), format!("order {}", actual.order()));
            return;
        }
        let hit = expected.coeffs().iter().zip(actual.coeffs()).position(|(a, b)| a != b);
        if let Some(i) = hit {
            self.fail(
                label,
                exponent(i) as i64,
                expected.coeffs()[i].to_string(),
                actual.coeffs()[i].to_string(),
            );
        }
    }

    pub fn finish(self) -> VerificationReport {
        VerificationReport {
            check: self.check.to_string(),
            order: self.order,
            status: if self.failure.is_some() { Status::Fail } else { Status::Pass },
            first_failure: self.failure,
            notes: self.notes,
        }
    }
}
