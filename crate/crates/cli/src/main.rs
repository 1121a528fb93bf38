use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::de::DeserializeOwned;

use equicurve_cli::jobs::{self, CompressParams, CurveKind, CurveParams, RamifyParams, SplitParams};
use equicurve_cli::{verify_paper_suite, Context, Entry, JobError, Report, RunConfig};
use equicurve_core::arith::tower::FieldTower;

#[derive(Parser, Debug)]
#[command(name = "equicurve", version, about = "Exact checks for equivariant curve constructions")]
struct Cli {
    /// Field tower descriptor (JSON).
    #[arg(long, global = true)]
    field: Option<PathBuf>,
    /// Also write the report as JSON to this path.
    #[arg(long, global = true)]
    report: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    /// Seed for the randomized property checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Negative control: misread residue witnesses.
    #[arg(long, global = true, hide = true)]
    mutate_residue: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether the quaternion symbol (f, g) splits over K(x).
    Split {
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long, allow_hyphen_values = true)]
        g: String,
        /// Write the certificate or witness as JSON.
        #[arg(long)]
        emit_proof: Option<PathBuf>,
    },
    /// Trace form, discriminant, w2 and the Serre class of an etale algebra.
    Invariant {
        #[arg(long)]
        etale: PathBuf,
    },
    /// Equivariant compression of P^1 for a finite group.
    Compress {
        #[arg(long)]
        group: String,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        verify_only: bool,
    },
    /// Build one of the hyperelliptic or Klein constructions.
    BuildCurve {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        params: Option<PathBuf>,
    },
    /// Polynomial with prescribed ramification over the given branch values.
    Ramify {
        #[arg(long)]
        spec: PathBuf,
    },
    /// Cover of prime degree with monodromy S_m.
    SmCover {
        #[arg(long)]
        m: u32,
    },
    /// Run every reproduction check.
    VerifyPaper,
}

#[derive(clap::ValueEnum, Clone, Copy, Debug)]
enum KindArg {
    EvenCyclic,
    Klein,
    EvenDihedral,
}

impl From<KindArg> for CurveKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::EvenCyclic => CurveKind::EvenCyclic,
            KindArg::Klein => CurveKind::Klein,
            KindArg::EvenDihedral => CurveKind::EvenDihedral,
        }
    }
}

fn read(path: &Path) -> Result<String, JobError> {
    fs::read_to_string(path).map_err(|e| JobError::Usage(format!("{}: {e}", path.display())))
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, JobError> {
    serde_json::from_str(&read(path)?).map_err(|e| JobError::Usage(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), JobError> {
    fs::write(path, text).map_err(|e| JobError::Usage(format!("{}: {e}", path.display())))
}

/// Prints the entry's lines and wraps it in a one-entry report.
fn single(cfg: &RunConfig, e: Entry) -> Report {
    emit(&e.detail.iter().map(|l| format!("{l}\n")).collect::<String>());
    Report { config: cfg.echo(), entries: vec![e] }
}

/// Writes to stdout; a closed pipe is not an error.
fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn run(cli: Cli) -> Result<i32, JobError> {
    let cfg = RunConfig {
        seed: cli.seed,
        jobs: cli.jobs.max(1),
        mutate_residue: cli.mutate_residue,
        ..RunConfig::default()
    };
    let mut ctx = Context::new(cfg.clone());
    if let Some(path) = &cli.field {
        let tower = FieldTower::from_json(&read(path)?, &cfg.square)
            .map_err(|e| JobError::Usage(format!("{}: {e}", path.display())))?;
        ctx.tower = Some(tower);
    }

    let report = match cli.command {
        Command::Split { f, g, emit_proof } => {
            let (entry, proof) = jobs::split(&ctx, &SplitParams { f, g })?;
            if let Some(path) = emit_proof {
                write(&path, &serde_json::to_string_pretty(&proof).expect("json value"))?;
            }
            single(&cfg, entry)
        }
        Command::Invariant { etale } => single(&cfg, jobs::invariant(&ctx, &read_json(&etale)?)?),
        Command::Compress { group, n, verify_only } => {
            single(&cfg, jobs::compress(&ctx, &CompressParams { group, n, verify_only })?)
        }
        Command::BuildCurve { kind, params } => {
            let p: CurveParams = match params {
                Some(path) => read_json(&path)?,
                None => CurveParams { n: None, a: None, h: None },
            };
            single(&cfg, jobs::build_curve(&ctx, kind.into(), &p)?)
        }
        Command::Ramify { spec } => single(&cfg, jobs::ramify(&ctx, &read_json::<RamifyParams>(&spec)?)?),
        Command::SmCover { m } => single(&cfg, jobs::sm_cover(&ctx, m)?),
        Command::VerifyPaper => {
            let r = verify_paper_suite(&cfg)?;
            emit(&r.render());
            r
        }
    };
    if let Some(path) = &cli.report {
        write(path, &serde_json::to_string_pretty(&report).expect("report serializes"))?;
    }
    Ok(report.exit_code())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("equicurve: {e}");
            ExitCode::from(2)
        }
    }
}
