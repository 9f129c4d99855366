//! Command-line driver: group-side verdicts, prime scans, densities,
//! cross-validation and Hasse certificates.
//!
//! Exit codes: 0 on success, 1 when an `--assert-*` flag (or a
//! cross-validation verdict) fails, 2 on input errors.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};

use cyclesplit::etale::{
    cycle_split_density, is_combinatorially_cycle_split, IndexReport,
};
use cyclesplit::hasse::fks_witness;
use cyclesplit::input::{load_fibre, load_group, load_scan};
use cyclesplit::rational::{parse_rational, rational_to_string, Rational};
use cyclesplit::scan::{scan, PrimeScanRecord, ScanSummary};

#[derive(Parser)]
#[command(
    name = "cyclesplit",
    version,
    about = "Cycle-splitness of étale algebras: group verdicts, prime scans, densities and Hasse certificates"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Per-class combinatorial indices and the splitness verdict of a
    /// fibre specification.
    GroupAnalyze {
        /// Fibre specification (JSON).
        spec: PathBuf,
        /// Target zero-cycle degree.
        #[arg(long = "r", default_value_t = 1)]
        r: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Exit 1 unless the fibre is combinatorially r-cycle-split.
        #[arg(long)]
        assert_split: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Factor the defining polynomials modulo every prime up to a bound.
    Scan {
        /// Scan specification (JSON).
        spec: PathBuf,
        #[arg(long = "r", default_value_t = 1)]
        r: u64,
        #[arg(long, default_value_t = 100_000)]
        primes_up_to: u64,
        /// Absolute tolerance for frequency comparisons (rational or
        /// decimal).
        #[arg(long, default_value = "0.02")]
        tolerance: String,
        /// json: aggregated summary. csv: per-prime log.
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Exit 1 if any unramified prime is non-split.
        #[arg(long)]
        assert_split: bool,
        /// Exit 1 unless the empirical split density is within the
        /// tolerance of this rational.
        #[arg(long)]
        assert_density: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact Chebotarev density of r-cycle-split places for a fibre
    /// specification.
    Density {
        spec: PathBuf,
        #[arg(long = "r", default_value_t = 1)]
        r: u64,
        /// Exit 1 unless the density equals this rational exactly.
        #[arg(long)]
        assert_density: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Fein–Kantor–Schacher certificate for a proper subgroup.
    Hasse {
        /// Group file (JSON).
        group: PathBuf,
        /// Name of a subgroup declared in the group file.
        #[arg(long)]
        subgroup: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Scan and compare Frobenius statistics against the model named in
    /// the scan specification; exit 1 when the comparison fails.
    CrossValidate {
        spec: PathBuf,
        #[arg(long = "r", default_value_t = 1)]
        r: u64,
        #[arg(long, default_value_t = 100_000)]
        primes_up_to: u64,
        #[arg(long, default_value = "0.02")]
        tolerance: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    if let Ok(threads) = std::env::var("CYCLESPLIT_THREADS") {
        if let Ok(n) = threads.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build_global();
        }
    }
    match run() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => {
            let mut f = std::fs::File::create(path)
                .with_context(|| format!("cannot create {}", path.display()))?;
            writeln!(f, "{text}")?;
        }
        None => println!("{text}"),
    }
    Ok(())
}

fn parse_tolerance(s: &str) -> anyhow::Result<Rational> {
    let t = parse_rational(s).map_err(|e| anyhow!(e))?;
    if t <= Rational::from_integer(0) || t >= Rational::from_integer(1) {
        return Err(anyhow!("tolerance must lie strictly between 0 and 1"));
    }
    Ok(t)
}

fn index_report_csv(report: &IndexReport) -> String {
    let mut rows = vec!["class,representative,size,index,divides_r".to_string()];
    for row in &report.classes {
        rows.push(format!(
            "{},\"{}\",{},{},{}",
            row.class, row.representative, row.size, row.index, row.divides_r
        ));
    }
    rows.join("\n")
}

fn records_csv(records: &[PrimeScanRecord]) -> String {
    let mut rows = vec!["p,ramified,component_patterns,index,verdict,witness_maxdeg".to_string()];
    for rec in records {
        let patterns = rec
            .components
            .iter()
            .map(|c| {
                c.patterns
                    .iter()
                    .map(|p| {
                        p.0.iter()
                            .map(|d| d.to_string())
                            .collect::<Vec<_>>()
                            .join(".")
                    })
                    .collect::<Vec<_>>()
                    .join("|")
            })
            .collect::<Vec<_>>()
            .join(";");
        rows.push(format!(
            "{},{},{},{},{},{}",
            rec.prime,
            rec.ramified,
            patterns,
            rec.index.map_or(String::new(), |i| i.to_string()),
            rec.split.map_or(String::new(), |s| s.to_string()),
            rec.witness_maxdeg.map_or(String::new(), |m| m.to_string()),
        ));
    }
    rows.join("\n")
}

fn run_scan(
    spec: &Path,
    r: u64,
    primes_up_to: u64,
    tolerance: &str,
) -> anyhow::Result<(Vec<PrimeScanRecord>, ScanSummary)> {
    let tolerance = parse_tolerance(tolerance)?;
    let spec = load_scan(spec, r, primes_up_to, tolerance)?;
    Ok(scan(&spec)?)
}

fn run() -> anyhow::Result<ExitCode> {
    let cli = Cli::parse();
    match cli.command {
        Command::GroupAnalyze {
            spec,
            r,
            format,
            assert_split,
            out,
        } => {
            if r < 1 {
                return Err(anyhow!("--r must be at least 1"));
            }
            let fibre = load_fibre(&spec)?;
            let report = is_combinatorially_cycle_split(&fibre, r);
            let text = match format {
                Format::Json => serde_json::to_string_pretty(&report)?,
                Format::Csv => index_report_csv(&report),
            };
            emit(&out, &text)?;
            if assert_split && !report.verdict {
                eprintln!("assertion failed: fibre is not combinatorially {r}-cycle-split");
                return Ok(ExitCode::from(1));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Scan {
            spec,
            r,
            primes_up_to,
            tolerance,
            format,
            assert_split,
            assert_density,
            out,
        } => {
            let (records, summary) = run_scan(&spec, r, primes_up_to, &tolerance)?;
            let text = match format {
                Format::Json => serde_json::to_string_pretty(&summary)?,
                Format::Csv => records_csv(&records),
            };
            emit(&out, &text)?;
            if assert_split && summary.split_count != summary.unramified_count {
                eprintln!(
                    "assertion failed: {} of {} unramified primes are non-split",
                    summary.unramified_count - summary.split_count,
                    summary.unramified_count
                );
                return Ok(ExitCode::from(1));
            }
            if let Some(target) = assert_density {
                let target = parse_rational(&target).map_err(|e| anyhow!(e))?;
                let tolerance = parse_tolerance(&tolerance)?;
                let empirical = summary
                    .split_density
                    .as_deref()
                    .map(parse_rational)
                    .transpose()
                    .map_err(|e| anyhow!(e))?
                    .ok_or_else(|| anyhow!("no unramified primes; density undefined"))?;
                let diff = if empirical >= target {
                    empirical - target
                } else {
                    target - empirical
                };
                if diff > tolerance {
                    eprintln!(
                        "assertion failed: split density {} differs from {} by more than {}",
                        rational_to_string(&empirical),
                        rational_to_string(&target),
                        rational_to_string(&tolerance)
                    );
                    return Ok(ExitCode::from(1));
                }
            }
            if let Some(cv) = &summary.cross_validation {
                if !cv.pass {
                    eprintln!("assertion failed: cross-validation against the model failed");
                    return Ok(ExitCode::from(1));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Density {
            spec,
            r,
            assert_density,
            out,
        } => {
            if r < 1 {
                return Err(anyhow!("--r must be at least 1"));
            }
            let fibre = load_fibre(&spec)?;
            let density = cycle_split_density(&fibre, r);
            emit(&out, &rational_to_string(&density))?;
            if let Some(target) = assert_density {
                let target = parse_rational(&target).map_err(|e| anyhow!(e))?;
                if density != target {
                    eprintln!(
                        "assertion failed: density is {}, expected {}",
                        rational_to_string(&density),
                        rational_to_string(&target)
                    );
                    return Ok(ExitCode::from(1));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Hasse {
            group,
            subgroup,
            out,
        } => {
            let loaded = load_group(&group)?;
            let handle = loaded
                .subgroups
                .get(&subgroup)
                .ok_or_else(|| anyhow!("group file declares no subgroup named {subgroup:?}"))?;
            let cert = fks_witness(&loaded.group, handle)?;
            let name = group
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| group.display().to_string());
            let doc = serde_json::json!({
                "group": name,
                "subgroup": subgroup,
                "witness": cert.witness_cycles,
                "witness_order": cert.witness_order,
                "prime": cert.prime,
                "certified_index": cert.certified_index,
            });
            emit(&out, &serde_json::to_string_pretty(&doc)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::CrossValidate {
            spec,
            r,
            primes_up_to,
            tolerance,
            out,
        } => {
            let (_, summary) = run_scan(&spec, r, primes_up_to, &tolerance)?;
            let report = summary
                .cross_validation
                .as_ref()
                .ok_or_else(|| anyhow!("scan specification names no model to validate against"))?;
            emit(&out, &serde_json::to_string_pretty(report)?)?;
            let density_ok = summary.density_within_tolerance.unwrap_or(true);
            if !report.pass || !density_ok {
                eprintln!("cross-validation failed");
                return Ok(ExitCode::from(1));
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}
