//! Executable checks of the results on inverse sets.
//!
//! Each check scans a ring and returns a [`CheckVerdict`]: `pass`,
//! `violation` with witness elements, or `skipped` with the unmet
//! precondition in the note. Rings with at most [`FULL_LIMIT`] elements are
//! quantified exhaustively; larger ones over a fixed stride sample of
//! [`SAMPLE_SIZE`] elements (always including 0 and 1), and the verdict is
//! marked `sampled`.

mod checks;
mod context;
mod replay;

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

pub use checks::*;
pub use context::{stride_sample, Lab, FULL_LIMIT, SAMPLE_SIZE};
pub use replay::replay;

use crate::error::{Error, Result};
use crate::ring::{Elem, Ring};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Status {
    Pass,
    Violation,
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Violation => "violation",
            Status::Skipped => "skipped",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub name: String,
    pub value: Elem,
}

impl Witness {
    pub fn new(name: &str, value: Elem) -> Witness {
        Witness { name: name.to_string(), value }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckName {
    InnerParam,
    ReflMap,
    Decomposition,
    Invariance,
    JainPrasad,
    SubsetCriterion,
    TheoremInner,
    Nielsen,
    TheoremReflexive,
    Hartwig,
    ExampleClaims,
}

impl CheckName {
    pub const ALL: [CheckName; 11] = [
        CheckName::InnerParam,
        CheckName::ReflMap,
        CheckName::Decomposition,
        CheckName::Invariance,
        CheckName::JainPrasad,
        CheckName::SubsetCriterion,
        CheckName::TheoremInner,
        CheckName::Nielsen,
        CheckName::TheoremReflexive,
        CheckName::Hartwig,
        CheckName::ExampleClaims,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckName::InnerParam => "inner_param",
            CheckName::ReflMap => "refl_map",
            CheckName::Decomposition => "decomposition",
            CheckName::Invariance => "invariance",
            CheckName::JainPrasad => "jain_prasad",
            CheckName::SubsetCriterion => "subset_criterion",
            CheckName::TheoremInner => "theorem_inner",
            CheckName::Nielsen => "nielsen",
            CheckName::TheoremReflexive => "theorem_reflexive",
            CheckName::Hartwig => "hartwig",
            CheckName::ExampleClaims => "example_claims",
        }
    }

    /// Parses a comma-separated list, or `all`.
    pub fn parse_list(text: &str) -> Result<Vec<CheckName>> {
        if text.trim() == "all" {
            return Ok(CheckName::ALL.to_vec());
        }
        text.split(',').map(str::trim).filter(|s| !s.is_empty()).map(str::parse).collect()
    }
}

impl FromStr for CheckName {
    type Err = Error;

    fn from_str(s: &str) -> Result<CheckName> {
        CheckName::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::UnknownCheck(s.to_string()))
    }
}

impl fmt::Display for CheckName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone)]
pub struct CheckVerdict {
    pub name: CheckName,
    pub status: Status,
    pub witnesses: Vec<Witness>,
    pub note: String,
    pub elapsed: Duration,
    pub sampled: bool,
}

impl CheckVerdict {
    pub fn witness(&self, name: &str) -> Option<&Elem> {
        self.witnesses.iter().find(|w| w.name == name).map(|w| &w.value)
    }
}

/// What a check found, before timing is attached.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub status: Status,
    pub witnesses: Vec<Witness>,
    pub note: String,
}

impl Outcome {
    pub fn pass(note: impl Into<String>) -> Outcome {
        Outcome { status: Status::Pass, witnesses: Vec::new(), note: note.into() }
    }

    pub fn violation(witnesses: Vec<Witness>, note: impl Into<String>) -> Outcome {
        Outcome { status: Status::Violation, witnesses, note: note.into() }
    }

    pub fn skipped(note: impl Into<String>) -> Outcome {
        Outcome { status: Status::Skipped, witnesses: Vec::new(), note: note.into() }
    }
}

/// Runs one check on a prepared lab.
pub fn run_check(lab: &Lab, name: CheckName) -> CheckVerdict {
    let start = Instant::now();
    let outcome = match name {
        CheckName::InnerParam => inner_param(lab),
        CheckName::ReflMap => refl_map(lab),
        CheckName::Decomposition => decomposition(lab),
        CheckName::Invariance => invariance(lab),
        CheckName::JainPrasad => jain_prasad(lab),
        CheckName::SubsetCriterion => subset_criterion(lab),
        CheckName::TheoremInner => theorem_inner(lab),
        CheckName::Nielsen => nielsen(lab),
        CheckName::TheoremReflexive => theorem_reflexive(lab),
        CheckName::Hartwig => hartwig(lab),
        CheckName::ExampleClaims => example_claims(lab),
    };
    let mut note = outcome.note;
    if lab.sampled() {
        note = format!("sampled over {} elements; {note}", lab.domain().len());
    }
    CheckVerdict {
        name,
        status: outcome.status,
        witnesses: outcome.witnesses,
        note,
        elapsed: start.elapsed(),
        sampled: lab.sampled(),
    }
}

/// Runs one check on `ring`; an unenumerable ring gives `skipped`.
pub fn check(ring: &Ring, name: CheckName) -> CheckVerdict {
    match Lab::new(ring) {
        Ok(lab) => run_check(&lab, name),
        Err(e) => skipped_verdict(name, &e),
    }
}

fn skipped_verdict(name: CheckName, e: &Error) -> CheckVerdict {
    CheckVerdict {
        name,
        status: Status::Skipped,
        witnesses: Vec::new(),
        note: e.to_string(),
        elapsed: Duration::ZERO,
        sampled: false,
    }
}

pub fn check_inner_param(ring: &Ring) -> CheckVerdict {
    check(ring, CheckName::InnerParam)
}

pub fn check_refl_map(ring: &Ring) -> CheckVerdict {
    check(ring, CheckName::ReflMap)
}

pub fn check_decomposition(ring: &Ring) -> CheckVerdict {
    check(ring, CheckName::Decomposition)
}

pub fn check_invariance(ring: &Ring) -> CheckVerdict {
    check(ring, CheckName::Invariance)
}

pub fn check_jain_prasad(ring: &Ring) -> CheckVerdict {
    check(ring, CheckName::JainPrasad)
}

pub fn check_subset_criterion(ring: &Ring) -> CheckVerdict {
    check(ring, CheckName::SubsetCriterion)
}

pub fn check_theorem_inner(ring: &Ring) -> CheckVerdict {
    check(ring, CheckName::TheoremInner)
}

pub fn check_nielsen(ring: &Ring) -> CheckVerdict {
    check(ring, CheckName::Nielsen)
}

pub fn check_theorem_reflexive(ring: &Ring) -> CheckVerdict {
    check(ring, CheckName::TheoremReflexive)
}

pub fn check_hartwig(ring: &Ring) -> CheckVerdict {
    check(ring, CheckName::Hartwig)
}

pub fn check_example_claims(ring: &Ring) -> CheckVerdict {
    check(ring, CheckName::ExampleClaims)
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub tool_version: &'static str,
    pub ring: String,
    pub kind: &'static str,
    pub size: u64,
    /// `None` when the ring is too large to decide.
    pub semiprime: Option<bool>,
    /// Sorted by check name.
    pub checks: Vec<CheckVerdict>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Summary {
    pub pass: usize,
    pub violation: usize,
    pub skipped: usize,
}

impl SuiteReport {
    pub fn summary(&self) -> Summary {
        let mut s = Summary::default();
        for c in &self.checks {
            match c.status {
                Status::Pass => s.pass += 1,
                Status::Violation => s.violation += 1,
                Status::Skipped => s.skipped += 1,
            }
        }
        s
    }
}

/// Runs the selected checks (deduplicated, ordered by name). `budget`
/// overrides the ring's enumeration budget.
pub fn run_suite(ring: &Ring, selection: &[CheckName], budget: Option<u64>) -> SuiteReport {
    let ring = match budget {
        Some(b) => ring.clone().with_budget(b),
        None => ring.clone(),
    };
    let mut names = selection.to_vec();
    names.sort_by_key(|c| c.as_str());
    names.dedup();
    let lab = Lab::new(&ring);
    let checks = names
        .iter()
        .map(|&name| match &lab {
            Ok(lab) => run_check(lab, name),
            Err(e) => skipped_verdict(name, e),
        })
        .collect();
    let semiprime = match (&lab, names.is_empty()) {
        (Ok(lab), false) => Some(lab.semiprime().semiprime),
        _ => crate::ring::is_semiprime(&ring).ok().map(|v| v.semiprime),
    };
    SuiteReport {
        tool_version: env!("CARGO_PKG_VERSION"),
        ring: ring.describe(),
        kind: ring.kind().as_str(),
        size: ring.size(),
        semiprime,
        checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip_and_unknown_names_fail() {
        for c in CheckName::ALL {
            assert_eq!(c.as_str().parse::<CheckName>().unwrap(), c);
        }
        assert_eq!("bogus".parse::<CheckName>().unwrap_err(), Error::UnknownCheck("bogus".into()));
        assert_eq!(CheckName::parse_list("all").unwrap().len(), 11);
        assert_eq!(CheckName::parse_list("nielsen, hartwig").unwrap(), [CheckName::Nielsen, CheckName::Hartwig]);
        assert!(CheckName::parse_list("nielsen,nope").is_err());
    }

    #[test]
    fn empty_selection_gives_empty_report() {
        let report = run_suite(&Ring::zmod(6).unwrap(), &[], None);
        assert!(report.checks.is_empty());
        assert_eq!(report.summary(), Summary::default());
    }

    #[test]
    fn suite_is_sorted_by_name() {
        let report = run_suite(&Ring::zmod(6).unwrap(), &[CheckName::TheoremInner, CheckName::Hartwig], None);
        let names: Vec<_> = report.checks.iter().map(|c| c.name.as_str()).collect();
        assert_eq!(names, ["hartwig", "theorem_inner"]);
    }

    #[test]
    fn budget_exceeded_skips() {
        let report = run_suite(&Ring::matrix(3, 3).unwrap(), &[CheckName::Nielsen], Some(1000));
        assert_eq!(report.checks[0].status, Status::Skipped);
        assert!(report.checks[0].note.contains("budget"), "{}", report.checks[0].note);
        assert_eq!(report.semiprime, None);
    }
}
