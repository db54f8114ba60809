//! `staircase`: command-line front end for corner posets, dense arrays,
//! bubble-sort traces, identity verification and conjecture sweeps.
//!
//! Exit codes: 0 success, 1 identity failure, 2 conjecture violation,
//! 64 usage error, 65 domain error, 74 I/O error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use staircase::bruhat::Orbit;
use staircase::dl::{enumerate_dl_on, vrt_base};
use staircase::dominant::AntilinearizedPoset;
use staircase::identities::{
    conjecture_sweep, default_degree, verify_cauchy_bs, verify_cauchy_moebius, verify_vdk, SweepSummary,
    VerificationReport,
};
use staircase::shapes::{Composition, Partition, StaircaseShape};

const EXIT_IDENTITY_FAILURE: u8 = 1;
const EXIT_CONJECTURE_VIOLATION: u8 = 2;
const EXIT_USAGE: u8 = 64;
const EXIT_DOMAIN: u8 = 65;
const EXIT_IO: u8 = 74;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Identity {
    Vdk,
    CauchyBs,
    CauchyMoebius,
}

#[derive(Debug, Parser)]
#[command(name = "staircase", version, about = "Exact combinatorics of staircase shapes")]
struct Cli {
    /// Output format (each command has its own default).
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Worker threads for verification and sweeps.
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    jobs: Option<u16>,
    /// Directory for JSON report files.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Staircase corners and their Hasse diagram.
    Corners { shape: StaircaseShape },
    /// Hasse diagram of the corner poset, or of DL(λ) with --lambda.
    Hasse {
        shape: StaircaseShape,
        #[arg(long)]
        lambda: Option<Partition>,
        /// With --lambda: draw the whole Bruhat orbit of column sums and
        /// fill the dominant ones.
        #[arg(long, requires = "lambda")]
        orbit: bool,
    },
    /// DL-dense arrays with value multiset λ and their order.
    Dl { shape: StaircaseShape, lambda: Partition },
    /// Bubble-sort trace of a composition.
    Bsort {
        /// Use the worked nine-position example poset.
        #[arg(long, conflicts_with_all = ["poset", "shape"])]
        example_arbor: bool,
        /// Poset JSON file: {"m":..,"elements":[..],"covers":[[small,large],..]}.
        #[arg(long, conflicts_with = "shape")]
        poset: Option<PathBuf>,
        /// Use the corner poset of this shape placed by columns.
        #[arg(long)]
        shape: Option<StaircaseShape>,
        composition: Composition,
    },
    /// Verify a character identity.
    Verify {
        #[arg(value_enum)]
        identity: Identity,
        shape: StaircaseShape,
        /// Truncation degree for the Cauchy identities.
        #[arg(long)]
        degree: Option<u32>,
        /// Partition for the van der Kallen identity.
        #[arg(long)]
        lambda: Option<Partition>,
    },
    /// Möbius ranges and shellability certificates over canonical shapes.
    Sweep {
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u16).range(1..))]
        max_corners: u16,
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..))]
        max_weight: u32,
    },
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Domain(String),
    Io(PathBuf, std::io::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Domain(_) => EXIT_DOMAIN,
            CliError::Io(..) => EXIT_IO,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Domain(m) => write!(f, "error: {m}"),
            CliError::Io(p, e) => write!(f, "error: {}: {e}", p.display()),
        }
    }
}

fn domain(e: impl std::fmt::Display) -> CliError {
    CliError::Domain(e.to_string())
}

/// Resolved options shared by all commands.
struct Config {
    format: Format,
    out: Option<PathBuf>,
}

/// What a command produced: text for stdout and an exit status.
struct Output {
    stdout: String,
    code: u8,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Self { stdout, code: 0 }
    }
}

fn json(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON values serialize");
    s.push('\n');
    s
}

fn write_report(dir: &Path, name: &str, value: &impl serde::Serialize) -> Result<(), CliError> {
    fs::create_dir_all(dir).map_err(|e| CliError::Io(dir.to_path_buf(), e))?;
    let path = dir.join(name);
    let body = serde_json::to_string_pretty(value).expect("reports serialize");
    fs::write(&path, body + "\n").map_err(|e| CliError::Io(path, e))
}

fn check_fits(lambda: &Partition, corners: usize) -> Result<(), CliError> {
    if lambda.length() > corners {
        return Err(CliError::Domain(format!(
            "lambda {lambda} has {} parts but the shape has only {corners} corners",
            lambda.length()
        )));
    }
    Ok(())
}

fn cmd_corners(shape: &StaircaseShape, cfg: &Config) -> Output {
    let cp = shape.corners();
    Output::ok(match cfg.format {
        Format::Text => cp.to_text(),
        Format::Json => json(&cp.to_json()),
        Format::Dot => cp.to_dot(),
    })
}

fn cmd_hasse(shape: &StaircaseShape, lambda: Option<&Partition>, orbit: bool, cfg: &Config) -> Result<Output, CliError> {
    let cp = Arc::new(shape.corners());
    let Some(lambda) = lambda else {
        return Ok(cmd_corners(shape, cfg));
    };
    check_fits(lambda, cp.len())?;
    if orbit {
        let o = Orbit::new(lambda, shape.columns()).map_err(domain)?;
        let base = vrt_base(&cp);
        let dominant: Vec<usize> = o
            .elements()
            .iter()
            .enumerate()
            .filter(|(_, d)| base.is_dominant(d).unwrap_or(false))
            .map(|(k, _)| k)
            .collect();
        return Ok(Output::ok(match cfg.format {
            Format::Dot => o.to_dot_highlighted(&dominant),
            Format::Json => json(&serde_json::json!({"orbit": o.to_json(), "dominant": dominant})),
            Format::Text => {
                let mut s = String::new();
                for (k, d) in o.elements().iter().enumerate() {
                    let mark = if dominant.contains(&k) { " *" } else { "" };
                    s.push_str(&format!("{k}: {d}{mark}\n"));
                }
                s
            }
        }));
    }
    let dl = enumerate_dl_on(cp, lambda);
    Ok(Output::ok(match cfg.format {
        Format::Dot => dl.to_dot(&[]),
        Format::Json => json(&dl.to_json()),
        Format::Text => dl.to_text(),
    }))
}

fn cmd_dl(shape: &StaircaseShape, lambda: &Partition, cfg: &Config) -> Result<Output, CliError> {
    let cp = Arc::new(shape.corners());
    check_fits(lambda, cp.len())?;
    let dl = enumerate_dl_on(cp, lambda);
    Ok(Output::ok(match cfg.format {
        Format::Text => dl.to_text(),
        Format::Json => json(&dl.to_json()),
        Format::Dot => dl.to_dot(&[]),
    }))
}

fn cmd_bsort(
    example_arbor: bool,
    poset: Option<&Path>,
    shape: Option<&StaircaseShape>,
    d: &Composition,
    cfg: &Config,
) -> Result<Output, CliError> {
    let base = match (example_arbor, poset, shape) {
        (true, _, _) => AntilinearizedPoset::example_arbor(),
        (_, Some(path), _) => {
            let body = fs::read_to_string(path).map_err(|e| CliError::Io(path.to_path_buf(), e))?;
            let value: serde_json::Value =
                serde_json::from_str(&body).map_err(|e| CliError::Domain(format!("{}: {e}", path.display())))?;
            AntilinearizedPoset::from_json(&value).map_err(domain)?
        }
        (_, _, Some(s)) => vrt_base(&s.corners()),
        _ => {
            return Err(CliError::Usage(
                "bsort needs one of --example-arbor, --poset FILE or --shape SHAPE".into(),
            ))
        }
    };
    let trace = base.bubble_sort_traced(d).map_err(domain)?;
    Ok(Output::ok(match cfg.format {
        Format::Json => json(&trace.to_json()),
        _ => trace.to_text(),
    }))
}

fn report_output(report: &VerificationReport, cfg: &Config) -> Result<Output, CliError> {
    if let Some(dir) = &cfg.out {
        let name = format!("{}-{}.json", report.identity, shape_slug(&report.shape));
        write_report(dir, &name, report)?;
    }
    let stdout = match cfg.format {
        Format::Json => json(&serde_json::to_value(report).expect("reports serialize")),
        _ => format!("{}\n", report.summary()),
    };
    let code = if report.passed() { 0 } else { EXIT_IDENTITY_FAILURE };
    Ok(Output { stdout, code })
}

fn shape_slug(heights: &[usize]) -> String {
    heights.iter().map(ToString::to_string).collect::<Vec<_>>().join("_")
}

fn cmd_verify(
    identity: Identity,
    shape: &StaircaseShape,
    degree: Option<u32>,
    lambda: Option<&Partition>,
    cfg: &Config,
) -> Result<Output, CliError> {
    let n = degree.unwrap_or_else(|| default_degree(shape));
    let report = match identity {
        Identity::Vdk => {
            let lambda = lambda.ok_or_else(|| CliError::Usage("verify vdk needs --lambda".into()))?;
            check_fits(lambda, shape.corners().len())?;
            verify_vdk(shape, lambda)
        }
        Identity::CauchyBs => verify_cauchy_bs(shape, n),
        Identity::CauchyMoebius => verify_cauchy_moebius(shape, n),
    };
    report_output(&report, cfg)
}

fn sweep_text(s: &SweepSummary) -> String {
    let (lo, hi) = s.mobius_range().unwrap_or((0, 0));
    let mut out = format!(
        "sweep: canonical shapes with <= {} corners, 1 <= |lambda| <= {}\ninstances {}\nmobius range [{lo}, {hi}]\nregular formula {}\nshellability certified {}, inconclusive {}\n",
        s.max_corners,
        s.max_weight,
        s.entries.len(),
        if s.regular_formula_holds() { "holds" } else { "FAILS" },
        s.entries.len() - s.inconclusive,
        s.inconclusive,
    );
    for v in &s.violations {
        out.push_str(&format!("{v}\n"));
    }
    out
}

fn cmd_sweep(max_corners: usize, max_weight: u32, cfg: &Config) -> Result<Output, CliError> {
    let summary = conjecture_sweep(max_corners, max_weight);
    if let Some(dir) = &cfg.out {
        write_report(dir, "sweep.json", &summary)?;
        if !summary.violations.is_empty() {
            write_report(dir, "conjecture-violations.json", &summary.violations)?;
        }
    }
    let stdout = match cfg.format {
        Format::Json => json(&serde_json::to_value(&summary).expect("summaries serialize")),
        _ => sweep_text(&summary),
    };
    let code = if summary.violations.is_empty() { 0 } else { EXIT_CONJECTURE_VIOLATION };
    Ok(Output { stdout, code })
}

fn run(cli: Cli) -> Result<Output, CliError> {
    if let Some(jobs) = cli.jobs {
        // Only fails if a pool already exists, which cannot happen here.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(usize::from(jobs)).build_global();
    }
    let default = match cli.command {
        Command::Hasse { .. } => Format::Dot,
        _ => Format::Text,
    };
    let cfg = Config {
        format: cli.format.unwrap_or(default),
        out: cli.out,
    };
    match &cli.command {
        Command::Corners { shape } => Ok(cmd_corners(shape, &cfg)),
        Command::Hasse { shape, lambda, orbit } => cmd_hasse(shape, lambda.as_ref(), *orbit, &cfg),
        Command::Dl { shape, lambda } => cmd_dl(shape, lambda, &cfg),
        Command::Bsort {
            example_arbor,
            poset,
            shape,
            composition,
        } => cmd_bsort(*example_arbor, poset.as_deref(), shape.as_ref(), composition, &cfg),
        Command::Verify {
            identity,
            shape,
            degree,
            lambda,
        } => cmd_verify(*identity, shape, *degree, lambda.as_ref(), &cfg),
        Command::Sweep {
            max_corners,
            max_weight,
        } => cmd_sweep(usize::from(*max_corners), *max_weight, &cfg),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code())
        }
    }
}
