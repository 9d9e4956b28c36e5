//! Verdict lines shared by every verification routine.

use std::fmt;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Pass,
    Fail,
    /// Printed formula agrees with the derived one.
    Match,
    /// Printed and derived coefficients differ only by a basis rescaling.
    Normalization,
    /// Printed formula disagrees with the derived one (informational).
    Mismatch,
    /// Ladder walked off the lattice; image is the zero function.
    Annihilated,
    Info,
}

impl Verdict {
    pub fn label(self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Match => "MATCH",
            Verdict::Normalization => "NORMALIZATION",
            Verdict::Mismatch => "MISMATCH",
            Verdict::Annihilated => "ANNIHILATED",
            Verdict::Info => "INFO",
        }
    }

    pub fn pass_if(ok: bool) -> Verdict {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckLine {
    pub verdict: Verdict,
    pub name: String,
    pub detail: String,
}

impl fmt::Display for CheckLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.detail.is_empty() {
            write!(f, "{} {}", self.verdict, self.name)
        } else {
            write!(f, "{} {}: {}", self.verdict, self.name, self.detail)
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Report {
    pub lines: Vec<CheckLine>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, verdict: Verdict, name: impl Into<String>, detail: impl Into<String>) {
        self.lines.push(CheckLine {
            verdict,
            name: name.into(),
            detail: detail.into(),
        });
    }

    pub fn extend(&mut self, other: Report) {
        self.lines.extend(other.lines);
    }

    /// True unless some line is `FAIL`.
    pub fn all_pass(&self) -> bool {
        self.lines.iter().all(|l| l.verdict != Verdict::Fail)
    }

    pub fn count(&self, verdict: Verdict) -> usize {
        self.lines.iter().filter(|l| l.verdict == verdict).count()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in &self.lines {
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}
