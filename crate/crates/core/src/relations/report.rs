use serde::Serialize;

/// One instance on which an identity did not hold (or could not be
/// evaluated).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub instance: String,
    pub detail: String,
}

/// Outcome of one verification sweep.
///
/// Sweeps made of several sub-checks keep them in `parts`; the parent's
/// `instances_checked` is then the sum over the parts. A report whose
/// `asserted` flag is false only records findings and never counts as
/// failed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub asserted: bool,
    pub instances_checked: u64,
    pub failures: Vec<Failure>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub parts: Vec<SuiteReport>,
    /// Only filled in when the caller asks for timings, so that reports stay
    /// reproducible byte for byte by default.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

impl SuiteReport {
    pub fn new(suite: impl Into<String>) -> Self {
        SuiteReport {
            suite: suite.into(),
            asserted: true,
            instances_checked: 0,
            failures: Vec::new(),
            parts: Vec::new(),
            wall_time_ms: None,
        }
    }

    pub fn from_parts(suite: impl Into<String>, parts: Vec<SuiteReport>) -> Self {
        let mut r = SuiteReport::new(suite);
        r.instances_checked = parts.iter().map(|p| p.instances_checked).sum();
        r.parts = parts;
        r
    }

    pub fn report_only(mut self) -> Self {
        self.asserted = false;
        for p in &mut self.parts {
            *p = p.clone().report_only();
        }
        self
    }

    /// Failures here and in every part.
    pub fn total_failures(&self) -> usize {
        self.failures.len() + self.parts.iter().map(|p| p.total_failures()).sum::<usize>()
    }

    /// No failures in any asserted report.
    pub fn passed(&self) -> bool {
        (!self.asserted || self.failures.is_empty()) && self.parts.iter().all(|p| p.passed())
    }

    /// Looks up a part by name, depth first.
    pub fn find(&self, suite: &str) -> Option<&SuiteReport> {
        if self.suite == suite {
            return Some(self);
        }
        self.parts.iter().find_map(|p| p.find(suite))
    }
}
