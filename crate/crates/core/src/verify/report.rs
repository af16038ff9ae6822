use std::fmt;

use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub witness: Option<String>,
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.name, if self.passed { "PASS" } else { "FAIL" })?;
        if let Some(w) = &self.witness {
            write!(f, " [{w}]")?;
        }
        Ok(())
    }
}

/// Named pass/fail checks with optional witnesses, preceded by free-form
/// notes about how the checks were interpreted.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    notes: Vec<String>,
    checks: Vec<CheckOutcome>,
}

impl TheoremReport {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a note unless an identical one is already present.
    pub fn note(&mut self, text: impl Into<String>) {
        let text = text.into();
        if !self.notes.contains(&text) {
            self.notes.push(text);
        }
    }

    pub fn push(&mut self, name: impl Into<String>, passed: bool, witness: Option<String>) {
        self.checks.push(CheckOutcome {
            name: name.into(),
            passed,
            witness,
        });
    }

    pub fn notes(&self) -> &[String] {
        &self.notes
    }

    pub fn checks(&self) -> &[CheckOutcome] {
        &self.checks
    }

    pub fn check(&self, name: &str) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn extend(&mut self, other: TheoremReport) {
        for n in other.notes {
            self.note(n);
        }
        self.checks.extend(other.checks);
    }
}

impl fmt::Display for TheoremReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for n in &self.notes {
            writeln!(f, "# {n}")?;
        }
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}
