use std::fmt;

use serde::Serialize;

/// Most witnesses kept per failing check.
pub const MAX_WITNESSES: usize = 5;

/// One named check with its verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    /// Offending inputs when the check failed, or notable instances.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<String>,
}

impl CheckOutcome {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        CheckOutcome {
            name: name.into(),
            passed,
            detail: detail.into(),
            witnesses: Vec::new(),
        }
    }

    pub fn with_witnesses(mut self, witnesses: Vec<String>) -> Self {
        self.witnesses = witnesses;
        self
    }
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "CHECK {} {} {}", self.name, verdict, self.detail)?;
        for w in &self.witnesses {
            write!(f, "\n  witness: {w}")?;
        }
        Ok(())
    }
}

/// Counts cases and remembers the first few failures.
#[derive(Debug)]
pub struct Tally {
    name: String,
    cases: usize,
    failures: usize,
    witnesses: Vec<String>,
}

impl Tally {
    pub fn new(name: impl Into<String>) -> Self {
        Tally {
            name: name.into(),
            cases: 0,
            failures: 0,
            witnesses: Vec::new(),
        }
    }

    /// Records one case; `witness` is only rendered on failure.
    pub fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.witnesses.len() < MAX_WITNESSES {
                self.witnesses.push(witness());
            }
        }
    }

    pub fn cases(&self) -> usize {
        self.cases
    }

    pub fn finish(self) -> CheckOutcome {
        self.finish_with(String::new())
    }

    /// Like `finish`, with extra text after the case count.
    pub fn finish_with(self, note: impl Into<String>) -> CheckOutcome {
        let note = note.into();
        let mut detail = format!("{} cases, {} failures", self.cases, self.failures);
        if !note.is_empty() {
            detail.push_str("; ");
            detail.push_str(&note);
        }
        // a sweep over an empty corpus proves nothing
        let passed = self.failures == 0 && self.cases > 0;
        CheckOutcome::new(self.name, passed, detail).with_witnesses(self.witnesses)
    }
}

/// A sequence of outcomes in the order they were run.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<CheckOutcome>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn extend(&mut self, outcomes: impl IntoIterator<Item = CheckOutcome>) {
        self.checks.extend(outcomes);
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "passed": self.passed(),
            "checks": self.checks,
        })
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}
