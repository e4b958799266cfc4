use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use berge_core::campaign::{run_campaign, CampaignSpec, Claim, Mode, Span, VerificationReport};
use berge_core::connectivity::is_k_connected;
use berge_core::constructions::ConstructionSpec;
use berge_core::io::{load, save, to_text, write_json, Loaded};
use berge_core::lollipop::grow_long_cycle;
use berge_core::search::{codiameter_with, longest_berge_cycle, SearchError, SearchOptions};

/// Exact Berge-cycle tools for uniform hypergraphs.
#[derive(Parser)]
#[command(name = "berge", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    H1,
    H2,
    H3,
    Complete,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a construction and write it as a hypergraph file.
    Gen {
        family: Family,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        q: Option<usize>,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        /// Output file; stdout when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Longest Berge cycle.
    Circumference {
        file: PathBuf,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Minimum over vertex pairs of the longest Berge path between them.
    Codiameter {
        file: PathBuf,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Whether the incidence graph is k-connected; exits 1 if not.
    Connectivity {
        file: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Heuristic long cycle by lollipop improvement.
    Grow { file: PathBuf },
    /// Run a verification campaign; exits 1 if any instance fails.
    Verify {
        claim: String,
        #[arg(long, default_value = "3")]
        r: String,
        #[arg(long, default_value = "5")]
        k: String,
        #[arg(long, default_value = "6")]
        n: String,
        #[arg(long, default_value = "exhaustive")]
        mode: String,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = berge_core::campaign::DEFAULT_BUDGET)]
        budget: u64,
        /// Turn isomorphism dedup off for exhaustive runs.
        #[arg(long)]
        no_dedup: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn print_json(value: &serde_json::Value) {
    let text = serde_json::to_string_pretty(value).expect("json values serialize");
    // a closed pipe downstream is not an error worth a panic
    let _ = writeln!(std::io::stdout(), "{text}");
}

fn load_file(path: &Path) -> Result<Loaded> {
    Ok(load(path)?)
}

fn labels_json(loaded: &Loaded, ids: &[usize]) -> serde_json::Value {
    match &loaded.labels {
        Some(l) => json!(ids.iter().map(|&v| l[v].clone()).collect::<Vec<_>>()),
        None => serde_json::Value::Null,
    }
}

fn generate(
    family: Family,
    k: Option<usize>,
    r: usize,
    q: Option<usize>,
    s: Option<usize>,
    n: Option<usize>,
) -> Result<ConstructionSpec> {
    let need = |x: Option<usize>, name: &str| {
        x.ok_or_else(|| anyhow!("--{name} is required for this family"))
    };
    Ok(match family {
        Family::H1 => ConstructionSpec::H1 {
            k: need(k, "k")?,
            r,
            q: need(q, "q")?,
        },
        Family::H2 => ConstructionSpec::H2 {
            k: need(k, "k")?,
            r,
            n: need(n, "n")?,
        },
        Family::H3 => ConstructionSpec::H3 {
            r,
            s: need(s, "s")?,
        },
        Family::Complete => ConstructionSpec::Complete {
            n: need(n, "n")?,
            r,
        },
    })
}

fn configure_threads() -> Result<()> {
    if let Ok(v) = std::env::var("BERGE_THREADS") {
        let threads: usize = v
            .parse()
            .with_context(|| format!("BERGE_THREADS must be a positive integer, got `{v}`"))?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads.max(1))
            .build_global()
            .context("configuring the worker pool")?;
    }
    Ok(())
}

fn summarize(report: &VerificationReport) {
    eprintln!(
        "{}: {} checked, {} passed, {} failed, {} skipped, {} filtered, {} duplicates ({:.1}s)",
        report.spec.claim,
        report.instances_checked,
        report.passes,
        report.failures.len(),
        report.skipped,
        report.filtered,
        report.duplicates,
        report.wall_time_secs
    );
    for f in &report.failures {
        eprintln!(
            "  FAIL {} [{}] {}: measured {}, required {:?} {}",
            f.label, f.params, f.property, f.measured, f.relation, f.required
        );
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    configure_threads()?;
    match cli.command {
        Command::Gen {
            family,
            k,
            r,
            q,
            s,
            n,
            output,
        } => {
            let h = generate(family, k, r, q, s, n)?.generate()?;
            match output {
                Some(path) => save(&h, None, &path)?,
                None => {
                    let _ = write!(std::io::stdout(), "{}", to_text(&h, None));
                }
            }
        }
        Command::Circumference { file, budget } => {
            let loaded = load_file(&file)?;
            let opts = SearchOptions {
                node_budget: budget,
                target: None,
            };
            let (cycle, exact) = match longest_berge_cycle(&loaded.hypergraph, opts) {
                Ok(c) => (c, true),
                Err(SearchError::BudgetExhausted { incumbent, .. }) => {
                    log::warn!("budget exhausted; reporting the best cycle found");
                    (incumbent, false)
                }
                Err(e) => return Err(e.into()),
            };
            let (vertices, edges) = cycle.map(|c| (c.vertices, c.edges)).unwrap_or_default();
            print_json(&json!({
                "length": vertices.len(),
                "exact": exact,
                "vertices": vertices,
                "edges": edges,
                "labels": labels_json(&loaded, &vertices),
            }));
        }
        Command::Codiameter { file, budget } => {
            let loaded = load_file(&file)?;
            let opts = SearchOptions {
                node_budget: budget,
                target: None,
            };
            let c = codiameter_with(&loaded.hypergraph, opts)?;
            let witness = c.witness.map(|(u, v, p)| {
                json!({
                    "u": u,
                    "v": v,
                    "path": p.map(|p| json!({ "length": p.len(), "vertices": p.vertices, "edges": p.edges })),
                })
            });
            print_json(&json!({ "codiameter": c.value, "witness": witness }));
        }
        Command::Connectivity { file, k } => {
            let loaded = load_file(&file)?;
            let w = is_k_connected(&loaded.hypergraph, k);
            print_json(&serde_json::to_value(&w)?);
            if !w.is_connected() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Grow { file } => {
            let loaded = load_file(&file)?;
            let out = grow_long_cycle(&loaded.hypergraph, None)?;
            print_json(&json!({
                "length": out.cycle.len(),
                "vertices": out.cycle.vertices,
                "edges": out.cycle.edges,
                "labels": labels_json(&loaded, &out.cycle.vertices),
                "score": out.score,
                "moves": out.trace.len(),
                "lollipop": out.lollipop,
            }));
        }
        Command::Verify {
            claim,
            r,
            k,
            n,
            mode,
            samples,
            seed,
            budget,
            no_dedup,
            output,
        } => {
            let claim: Claim = claim.parse()?;
            let mode: Mode = mode.parse()?;
            let mut spec =
                CampaignSpec::new(claim, r.parse::<Span>()?, k.parse()?, n.parse()?, mode);
            spec.samples = samples;
            spec.seed = seed;
            spec.budget = budget;
            if no_dedup {
                spec.dedup = Some(false);
            }
            let report = run_campaign(&spec)?;
            summarize(&report);
            match output {
                Some(path) => write_json(&report, &path)?,
                None => print_json(&serde_json::to_value(&report)?),
            }
            if !report.all_passed() {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
