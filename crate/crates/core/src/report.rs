//! Structured verdicts for axiom checks.

use crate::tensor::Tensor;

/// A single violated condition at a specific basis tuple, with the exact
/// nonzero residual over the output spaces.
#[derive(Clone, Debug)]
pub struct Violation {
    pub condition: String,
    pub indices: Vec<usize>,
    pub residual: Tensor,
}

/// The outcome of running a family of named conditions. Empty violation list
/// means the structure satisfies every condition exactly.
#[derive(Clone, Debug, Default)]
pub struct CheckReport {
    violations: Vec<Violation>,
}

impl CheckReport {
    pub fn ok_report() -> Self {
        CheckReport::default()
    }

    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    pub fn push(&mut self, v: Violation) {
        debug_assert!(!v.residual.is_zero(), "residuals must be nonzero");
        self.violations.push(v);
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.violations.extend(other.violations);
    }

    /// Condition ids that have at least one violation, deduplicated in order.
    pub fn failed_conditions(&self) -> Vec<String> {
        let mut seen = Vec::new();
        for v in &self.violations {
            if !seen.contains(&v.condition) {
                seen.push(v.condition.clone());
            }
        }
        seen
    }

    pub fn condition_failed(&self, id: &str) -> bool {
        self.violations.iter().any(|v| v.condition == id)
    }
}

/// Records a whole-tensor violation under one label (empty index tuple).
pub fn push_whole(report: &mut CheckReport, condition: &str, residual: Tensor) {
    report.push(Violation {
        condition: condition.to_string(),
        indices: vec![],
        residual,
    });
}

impl std::fmt::Display for CheckReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.ok() {
            return write!(f, "ok");
        }
        writeln!(f, "{} violation(s):", self.violations.len())?;
        for v in &self.violations {
            writeln!(f, "  {} at {:?}: residual {:?}", v.condition, v.indices, v.residual)?;
        }
        Ok(())
    }
}
