//! Check reports.
//!
//! Every verifier in this crate produces a [`Report`]: an ordered list of
//! checks, each carrying a stable machine-readable anchor, a human-readable
//! claim, a pass/fail status and, on failure, a concrete witness. Checks are
//! appended in deterministic order so reports are reproducible byte for
//! byte.

use crate::prelude::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug)]
pub struct Check {
    /// Stable identifier of the claim being checked, e.g. `rel.predual.bijection`.
    pub anchor: String,
    /// Human-readable statement of the claim.
    pub claim: String,
    pub status: Status,
    /// Concrete counterexample or context on failure.
    pub witness: Option<String>,
    /// Description of the finite test set the claim was verified on.
    pub test_set: String,
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Report { checks: Vec::new() }
    }

    pub fn pass(&mut self, anchor: &str, claim: &str, test_set: &str) {
        self.checks.push(Check {
            anchor: anchor.to_owned(),
            claim: claim.to_owned(),
            status: Status::Pass,
            witness: None,
            test_set: test_set.to_owned(),
        });
    }

    pub fn fail(&mut self, anchor: &str, claim: &str, witness: String, test_set: &str) {
        self.checks.push(Check {
            anchor: anchor.to_owned(),
            claim: claim.to_owned(),
            status: Status::Fail,
            witness: Some(witness),
            test_set: test_set.to_owned(),
        });
    }

    /// Record an equality check, synthesising the witness on mismatch.
    pub fn check_eq<T: PartialEq + core::fmt::Debug>(
        &mut self,
        anchor: &str,
        claim: &str,
        test_set: &str,
        lhs: &T,
        rhs: &T,
    ) {
        if lhs == rhs {
            self.pass(anchor, claim, test_set);
        } else {
            self.fail(
                anchor,
                claim,
                format!("lhs = {lhs:?}, rhs = {rhs:?}"),
                test_set,
            );
        }
    }

    pub fn merge(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.failures().next()
    }
}

impl core::fmt::Display for Report {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        for c in &self.checks {
            let status = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            };
            write!(f, "{status} {} — {}", c.anchor, c.claim)?;
            if let Some(w) = &c.witness {
                write!(f, " [witness: {w}]")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
