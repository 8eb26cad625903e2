use std::path::Path;

use anyhow::{Context, Result};
use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::config::SuiteConfig;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    ExactPass,
    ExactFail,
    McPass,
    McFail,
}

impl Status {
    pub fn passed(self) -> bool {
        matches!(self, Status::ExactPass | Status::McPass)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseReport {
    pub suite: String,
    pub case_id: String,
    pub params: Value,
    pub status: Status,
    pub lhs_hash: String,
    pub rhs_hash: String,
    pub details: Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub suite: String,
    pub config: SuiteConfig,
    pub passed: usize,
    pub failed: usize,
    pub cases: Vec<CaseReport>,
}

impl Report {
    pub fn new(suite: &str, config: &SuiteConfig, mut cases: Vec<CaseReport>) -> Self {
        cases.sort_by(|a, b| a.case_id.cmp(&b.case_id));
        let passed = cases.iter().filter(|c| c.status.passed()).count();
        Self { suite: suite.to_string(), config: config.clone(), passed, failed: cases.len() - passed, cases }
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    /// Merges several suite reports into one, keeping case order by id.
    pub fn merge(name: &str, config: &SuiteConfig, parts: Vec<Report>) -> Self {
        Self::new(name, config, parts.into_iter().flat_map(|r| r.cases).collect())
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_json()).with_context(|| format!("writing report to {}", path.display()))
    }

    pub fn summary(&self) -> String {
        let mut out = String::new();
        for c in self.cases.iter().filter(|c| !c.status.passed()) {
            out.push_str(&format!("FAIL {} {} {}\n", c.suite, c.case_id, c.details));
        }
        out.push_str(&format!("{}: {} passed, {} failed\n", self.suite, self.passed, self.failed));
        out
    }
}

pub fn digest(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}
