use std::path::PathBuf;

use anyhow::{bail, Result};
use clap::ValueEnum;
use serde::Serialize;

use hua_radon::algebra::MAX_DIM;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FrameMode {
    Canonical,
    Random,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteConfig {
    pub m_values: Vec<usize>,
    pub max_degree: usize,
    pub frame_mode: FrameMode,
    pub seed: u64,
    pub mc_samples: usize,
    #[serde(skip)]
    pub report_path: Option<PathBuf>,
    /// Worker threads; `Some(1)` forces the sequential path.
    #[serde(skip)]
    pub jobs: Option<usize>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            m_values: vec![3, 4, 5],
            max_degree: 4,
            frame_mode: FrameMode::Canonical,
            seed: 42,
            mc_samples: 100_000,
            report_path: None,
            jobs: None,
        }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<()> {
        if self.m_values.is_empty() {
            bail!("no dimensions given");
        }
        for &m in &self.m_values {
            if !(3..=MAX_DIM).contains(&m) {
                bail!("dimension {m} outside 3..={MAX_DIM}");
            }
        }
        if self.mc_samples < 2 {
            bail!("need at least 2 Monte-Carlo samples");
        }
        Ok(())
    }
}
