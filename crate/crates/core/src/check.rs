use std::fmt;

use serde::{Deserialize, Serialize};

/// Tally for one identity checked over many cases.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub name: String,
    pub checked: u64,
    pub failures: u64,
    pub first_failure: Option<String>,
}

impl CheckOutcome {
    pub fn new(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            checked: 0,
            failures: 0,
            first_failure: None,
        }
    }

    /// Counts one case; `detail` is only evaluated for the first failure.
    pub fn record(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(detail());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0 && self.checked > 0
    }
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "ok  " } else { "FAIL" };
        write!(f, "{status} {} ({} cases", self.name, self.checked)?;
        if self.failures > 0 {
            write!(f, ", {} failed", self.failures)?;
        }
        f.write_str(")")?;
        if let Some(d) = &self.first_failure {
            write!(f, "\n     first failure: {d}")?;
        }
        Ok(())
    }
}

pub fn all_passed(outcomes: &[CheckOutcome]) -> bool {
    outcomes.iter().all(CheckOutcome::passed)
}
