//! Suite reports and their human and JSON renderings.

use serde::Serialize;

use pseudalg::check::CheckReport;
use pseudalg::module::FreeModule;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    /// The check's hypotheses do not hold; nothing is asserted.
    Skip,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Skip => "skip",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckEntry {
    pub name: String,
    /// The first failing witness; empty when the check passes.
    pub inputs: Vec<String>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub defect: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckEntry {
    /// Summarizes `check`, rendering the first defect over `module`.
    pub fn from_check(prefix: &str, check: &CheckReport, module: &FreeModule) -> Self {
        let first = check.failures().next();
        Self {
            name: format!("{prefix}{}", check.name),
            inputs: first.map(|c| c.inputs.clone()).unwrap_or_default(),
            verdict: if first.is_some() { Verdict::Fail } else { Verdict::Pass },
            defect: first.and_then(|c| c.defect.as_ref()).map(|d| d.render(module)),
            note: None,
        }
    }

    pub fn skipped(name: String, note: impl Into<String>) -> Self {
        Self { name, inputs: Vec::new(), verdict: Verdict::Skip, defect: None, note: Some(note.into()) }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<CheckEntry>,
    pub verdict: Verdict,
}

impl Report {
    pub fn new(suite: impl Into<String>, checks: Vec<CheckEntry>) -> Self {
        let verdict = if checks.iter().any(|c| c.verdict == Verdict::Fail) {
            Verdict::Fail
        } else {
            Verdict::Pass
        };
        Self { suite: suite.into(), checks, verdict }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// One line per check, followed by the witness of a failure.
    pub fn to_human(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!("{:<4}  {}", c.verdict.as_str(), c.name));
            if let Some(note) = &c.note {
                out.push_str(&format!("  ({note})"));
            }
            out.push('\n');
            if c.verdict == Verdict::Fail {
                out.push_str(&format!("      at ({}): {}\n", c.inputs.join(", "), c.defect.as_deref().unwrap_or("-")));
            }
        }
        out.push_str(&format!("suite {}: {}\n", self.suite, self.verdict.as_str()));
        out
    }
}
