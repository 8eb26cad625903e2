//! Verification suites. Each suite expands its parameter grid into cases,
//! runs them (possibly in parallel) and collects one report entry per case.

mod coefficients;
mod inversion;
mod lemmas;
mod mc;

use anyhow::{bail, Result};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use hua_radon::algebra::{format_multivector, FloatMultivector, Multivector};
use hua_radon::exec::Exec;
use hua_radon::integrate::McEstimate;
use hua_radon::poly::PolyMV;
use hua_radon::random;
use hua_radon::transforms::{IsotropicFrame, KernelKind};
use hua_radon::zonal::zonal_monogenic;

use crate::config::{FrameMode, SuiteConfig};
use crate::report::{digest, CaseReport, Report, Status};

pub use mc::MC_GROUPS;

pub const MC_Z_LIMIT: f64 = 5.0;

/// Suite names with a one-line description.
pub const SUITES: [(&str, &str); 5] = [
    ("lemmas", "algebra, operator, Fischer, zonal and frame-average identities"),
    ("coefficients", "φ and ρ against the exact pipeline, ϑ and Pfaff–Saalschütz"),
    ("inversion-hua", "reconstruction from the dual Hua-Radon composition"),
    ("inversion-polarized", "reconstruction from the dual polarized composition"),
    ("mc-crosscheck", "exact integrals against seeded Monte-Carlo estimates"),
];

pub enum Outcome {
    Exact { pass: bool, lhs: String, rhs: String, details: Value },
    Mc { label: String, estimate: McEstimate, exact: Multivector },
}

impl Outcome {
    pub fn equal(lhs: String, rhs: String, details: Value) -> Self {
        Outcome::Exact { pass: lhs == rhs, lhs, rhs, details }
    }

    pub fn polys(lhs: &PolyMV, rhs: &PolyMV) -> Self {
        Self::equal(hua_radon::poly::format_poly(lhs), hua_radon::poly::format_poly(rhs), Value::Null)
    }
}

type Job = Box<dyn Fn(&mut ChaCha8Rng) -> Result<Outcome, String> + Send + Sync>;

pub struct Case {
    pub id: String,
    pub params: Value,
    job: Job,
}

pub fn case<F>(id: String, params: Value, job: F) -> Case
where
    F: Fn(&mut ChaCha8Rng) -> Result<Outcome, String> + Send + Sync + 'static,
{
    Case { id, params, job: Box::new(job) }
}

/// Per-case generator, a function of the seed and the case id only.
fn case_rng(seed: u64, id: &str) -> ChaCha8Rng {
    let mut h = Sha256::new();
    h.update(seed.to_le_bytes());
    h.update(id.as_bytes());
    ChaCha8Rng::from_seed(h.finalize().into())
}

fn float_json(a: &FloatMultivector) -> Value {
    let map: serde_json::Map<String, Value> = a
        .terms
        .iter()
        .map(|(b, c)| (format!("{:?}", b.indices()), json!([c.re, c.im])))
        .collect();
    Value::Object(map)
}

fn run_case(suite: &str, seed: u64, c: &Case) -> CaseReport {
    let mut rng = case_rng(seed, &c.id);
    let (status, lhs_hash, rhs_hash, details) = match (c.job)(&mut rng) {
        Ok(Outcome::Exact { pass, lhs, rhs, details }) => {
            let status = if pass { Status::ExactPass } else { Status::ExactFail };
            let details = if pass || !details.is_null() { details } else { json!({ "lhs": lhs, "rhs": rhs }) };
            (status, digest(&lhs), digest(&rhs), details)
        }
        Ok(Outcome::Mc { label, estimate, exact }) => {
            let z = estimate.z_score(&exact);
            let status = if z < MC_Z_LIMIT { Status::McPass } else { Status::McFail };
            let exact_text = format_multivector(&exact);
            let mean = float_json(&estimate.mean);
            let details = json!({
                "case": label,
                "exact": exact_text,
                "mc_mean": mean,
                "mc_stderr": float_json(&estimate.stderr),
                "samples": estimate.samples,
                "z_score": z,
            });
            (status, digest(&mean.to_string()), digest(&exact_text), details)
        }
        Err(e) => (Status::ExactFail, String::new(), String::new(), json!({ "error": e })),
    };
    CaseReport {
        suite: suite.to_string(),
        case_id: c.id.clone(),
        params: c.params.clone(),
        status,
        lhs_hash,
        rhs_hash,
        details,
    }
}

fn run_cases(suite: &str, config: &SuiteConfig, cases: Vec<Case>, exec: Exec) -> Report {
    let entries = exec.map(&cases, |c| run_case(suite, config.seed, c));
    Report::new(suite, config, entries)
}

fn exec_for(config: &SuiteConfig) -> Exec {
    if config.jobs == Some(1) {
        Exec::Sequential
    } else {
        Exec::Parallel
    }
}

fn build_cases(name: &str, config: &SuiteConfig, exec: Exec) -> Result<Vec<Case>> {
    Ok(match name {
        "lemmas" => lemmas::cases(config),
        "coefficients" => coefficients::cases(config, exec),
        "inversion-hua" => inversion::cases(config, KernelKind::Hua, exec),
        "inversion-polarized" => inversion::cases(config, KernelKind::Polarized, exec),
        "mc-crosscheck" => mc::cases(config, None, exec)?,
        other => bail!("unknown suite `{other}`; see --list-suites"),
    })
}

fn with_pool<T: Send>(config: &SuiteConfig, f: impl FnOnce() -> T + Send) -> Result<T> {
    match config.jobs {
        Some(n) if n > 1 => Ok(rayon::ThreadPoolBuilder::new().num_threads(n).build()?.install(f)),
        _ => Ok(f()),
    }
}

fn finish(report: Report, config: &SuiteConfig) -> Result<Report> {
    if let Some(path) = &config.report_path {
        report.write(path)?;
    }
    Ok(report)
}

/// Runs a named suite and writes the report if a path is configured.
pub fn run_suite(name: &str, config: &SuiteConfig) -> Result<Report> {
    config.validate()?;
    let exec = exec_for(config);
    let cases = build_cases(name, config, exec)?;
    let report = with_pool(config, || run_cases(name, config, cases, exec))?;
    finish(report, config)
}

/// Runs the Monte-Carlo cross-checks, optionally restricted to one group.
pub fn run_mc(group: Option<&str>, config: &SuiteConfig) -> Result<Report> {
    config.validate()?;
    let exec = exec_for(config);
    let cases = mc::cases(config, group, exec)?;
    let report = with_pool(config, || run_cases("mc-crosscheck", config, cases, exec))?;
    finish(report, config)
}

pub fn frame_for(config: &SuiteConfig, m: usize, rng: &mut ChaCha8Rng) -> IsotropicFrame {
    match config.frame_mode {
        FrameMode::Canonical => IsotropicFrame::canonical(m),
        FrameMode::Random => IsotropicFrame::random(rng, m),
    }
}

/// A random left-monogenic polynomial of degree `k` in `z`.
pub fn random_monogenic(rng: &mut ChaCha8Rng, m: usize, k: usize) -> PolyMV {
    // right factors can be zero divisors
    loop {
        let y = random::real_vector(rng, m);
        let c = random::multivector(rng, m, 2);
        let p = zonal_monogenic(m, k).at_y(&y).rename(&["z"]).right_mul(&c);
        if !p.is_zero() {
            return p;
        }
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}
