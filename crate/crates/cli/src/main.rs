use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use hua_radon::poly::format_poly;
use hua_radon::zonal::{zonal_harmonic, zonal_monogenic};
use hua_radon_cli::{run_mc, run_suite, FrameMode, Report, SuiteConfig, MC_GROUPS, SUITES};

#[derive(Parser)]
#[command(name = "hua-radon", version, about = "Exact verification of the Hua-Radon transform identities")]
struct Cli {
    /// Print the available suites and exit.
    #[arg(long)]
    list_suites: bool,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand)]
enum Command {
    /// Run one exact verification suite.
    Verify {
        #[arg(value_enum)]
        suite: VerifySuite,
        #[command(flatten)]
        common: Common,
    },
    /// Zonal kernel utilities.
    Kernel {
        #[command(subcommand)]
        action: KernelAction,
    },
    /// Compare exact integrals with seeded Monte-Carlo estimates.
    McCrosscheck {
        /// One of sphere, stiefel, lie-sphere; all groups when omitted.
        #[arg(long)]
        suite: Option<String>,
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifySuite {
    Lemmas,
    Coefficients,
    InversionHua,
    InversionPolarized,
}

impl VerifySuite {
    fn name(self) -> &'static str {
        match self {
            VerifySuite::Lemmas => "lemmas",
            VerifySuite::Coefficients => "coefficients",
            VerifySuite::InversionHua => "inversion-hua",
            VerifySuite::InversionPolarized => "inversion-polarized",
        }
    }
}

#[derive(Subcommand)]
enum KernelAction {
    /// Print the zonal kernel in the polynomial text format.
    Dump {
        #[arg(long = "type", value_enum)]
        kind: KernelType,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum KernelType {
    /// Zonal harmonic K_{m,k}(x, y).
    #[value(name = "K")]
    K,
    /// Zonal monogenic C_{m,k}(x, y).
    #[value(name = "C")]
    C,
}

#[derive(Args)]
struct Common {
    /// Dimensions to check, comma separated.
    #[arg(long, value_delimiter = ',', default_values_t = [3usize, 4, 5])]
    m: Vec<usize>,
    #[arg(long, default_value_t = 4)]
    max_degree: usize,
    #[arg(long, value_enum, default_value_t = FrameMode::Canonical)]
    frame: FrameMode,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Write the JSON report here.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Worker threads; 1 runs sequentially.
    #[arg(long)]
    jobs: Option<usize>,
}

impl Common {
    fn config(&self, mc_samples: usize) -> SuiteConfig {
        SuiteConfig {
            m_values: self.m.clone(),
            max_degree: self.max_degree,
            frame_mode: self.frame,
            seed: self.seed,
            mc_samples,
            report_path: self.report.clone(),
            jobs: self.jobs,
        }
    }
}

fn conclude(report: &Report) -> ExitCode {
    print!("{}", report.summary());
    if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    if cli.list_suites {
        for (name, about) in SUITES {
            println!("{name:<20} {about}");
        }
        println!("mc-crosscheck groups: {}", MC_GROUPS.join(", "));
        return Ok(ExitCode::SUCCESS);
    }
    match cli.command {
        None => bail!("no command given; try --help"),
        Some(Command::Verify { suite, common }) => {
            let report = run_suite(suite.name(), &common.config(SuiteConfig::default().mc_samples))?;
            Ok(conclude(&report))
        }
        Some(Command::McCrosscheck { suite, samples, common }) => {
            let report = run_mc(suite.as_deref(), &common.config(samples))?;
            Ok(conclude(&report))
        }
        Some(Command::Kernel { action: KernelAction::Dump { kind, m, k } }) => {
            if !(3..=hua_radon::algebra::MAX_DIM).contains(&m) {
                bail!("dimension {m} outside 3..={}", hua_radon::algebra::MAX_DIM);
            }
            let kernel = match kind {
                KernelType::K => zonal_harmonic(m, k),
                KernelType::C => zonal_monogenic(m, k),
            };
            print!("{}", format_poly(&kernel.body));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
