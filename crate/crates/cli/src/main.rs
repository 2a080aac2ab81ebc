use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use log::{info, warn};

use gpcover::bounds::{bound_report, lower_bound, BoundReport};
use gpcover::constructions::best_construction;
use gpcover::cover::{check_cover, Cover, CoverCertificate};
use gpcover::harness::{export, sweep, verify_theorems, ExportFormat, SweepOptions, TheoremOptions};
use gpcover::solver::{beta_exact_with, SolverConfig};
use gpcover::{Execution, PetersenGraph};

#[derive(Parser)]
#[command(name = "gpcover", version, about = "Vertex covers of generalized Petersen graphs P(n,k)")]
struct Cli {
    /// Run campaigns on one thread.
    #[arg(long, global = true)]
    sequential: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum CoverMethod {
    Solver,
    Construction,
    /// The best construction when it meets the lower bound, else the solver.
    Auto,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Dimacs,
    Json,
    Cert,
}

#[derive(Subcommand)]
enum Command {
    /// Exact vertex cover number with a witness certificate (JSON).
    Beta {
        n: usize,
        k: usize,
        /// Branch-and-bound node budget.
        #[arg(long)]
        budget: Option<u64>,
        /// Wall-clock limit in seconds.
        #[arg(long)]
        time_limit: Option<f64>,
    },
    /// Print a cover certificate.
    Cover {
        n: usize,
        k: usize,
        #[arg(long, value_enum, default_value = "auto")]
        method: CoverMethod,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Check a certificate file against P(n,k).
    VerifyCover {
        n: usize,
        k: usize,
        #[arg(long)]
        cert: PathBuf,
        /// Also require the cover to be minimum.
        #[arg(long)]
        minimum: bool,
    },
    /// Lower bound, closed-form upper bounds and exact formula.
    Bounds {
        n: usize,
        k: usize,
        #[arg(long)]
        csv: bool,
    },
    /// Check the conjectured bound on every pair with n <= max_n.
    Sweep {
        #[arg(long)]
        max_n: usize,
        /// JSON-lines cache to resume from and append to.
        #[arg(long)]
        resume: Option<PathBuf>,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        budget: Option<u64>,
        /// Write one CSV row per pair here.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Run the structural property suites on every pair with n <= max_n.
    VerifyTheorems {
        #[arg(long)]
        max_n: usize,
        /// Random covers per pair.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
    },
    /// Write the graph (or a minimum cover certificate) to stdout or a file.
    Export {
        n: usize,
        k: usize,
        #[arg(long, value_enum)]
        format: FormatArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn solver_config(budget: Option<u64>, time_limit: Option<f64>) -> SolverConfig {
    let mut config = SolverConfig::default();
    if let Some(b) = budget {
        config.node_budget = b;
    }
    config.time_budget = time_limit.map(Duration::from_secs_f64);
    config
}

fn print_json<T: serde::Serialize + ?Sized>(value: &T) -> anyhow::Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    let execution = if cli.sequential { Execution::Sequential } else { Execution::Parallel };
    match cli.command {
        Command::Beta { n, k, budget, time_limit } => {
            let g = PetersenGraph::new(n, k)?;
            let result = beta_exact_with(&g, &solver_config(budget, time_limit))?;
            print_json(&result.report())?;
        }
        Command::Cover { n, k, method, budget } => {
            let g = PetersenGraph::new(n, k)?;
            let from_solver = |g: &PetersenGraph| -> anyhow::Result<CoverCertificate> {
                let r = beta_exact_with(g, &solver_config(budget, None))?;
                let mut cert = r.witness.to_certificate();
                cert.method = Some("solver".into());
                Ok(cert)
            };
            let cert = match method {
                CoverMethod::Solver => from_solver(&g)?,
                CoverMethod::Construction => best_construction(&g).to_certificate(),
                CoverMethod::Auto => {
                    let best = best_construction(&g);
                    if best.cover.size() == lower_bound(n, k)? {
                        best.to_certificate()
                    } else {
                        from_solver(&g)?
                    }
                }
            };
            print_json(&cert)?;
        }
        Command::VerifyCover { n, k, cert, minimum } => {
            let g = PetersenGraph::new(n, k)?;
            let text = fs::read_to_string(&cert).with_context(|| format!("reading {}", cert.display()))?;
            let parsed: CoverCertificate = serde_json::from_str(&text).context("parsing certificate")?;
            if (parsed.n, parsed.k) != (n, k) {
                bail!("certificate is for P({},{}), not P({n},{k})", parsed.n, parsed.k);
            }
            let cover = Cover::from_certificate(&parsed)?;
            if let Err(e) = check_cover(&g, &cover) {
                println!("FAIL {e}");
                return Ok(false);
            }
            if let Some(claimed) = parsed.claimed_bound {
                if cover.size() > claimed {
                    println!("FAIL size {} exceeds claimed bound {claimed}", cover.size());
                    return Ok(false);
                }
            }
            if minimum {
                let beta = beta_exact_with(&g, &SolverConfig::default())?.beta;
                if cover.size() != beta {
                    println!("FAIL size {} but beta(P({n},{k})) = {beta}", cover.size());
                    return Ok(false);
                }
            }
            println!("OK cover of P({n},{k}) with {} vertices", cover.size());
        }
        Command::Bounds { n, k, csv } => {
            let report = bound_report(n, k)?;
            if csv {
                println!("{}\n{}", BoundReport::CSV_HEADER, report.csv_row());
            } else {
                print_json(&report)?;
            }
        }
        Command::Sweep { max_n, resume, jobs, budget, csv } => {
            let mut options = SweepOptions::new(max_n);
            options.cache = resume;
            options.jobs = jobs;
            options.execution = execution;
            if let Some(b) = budget {
                options.node_budget = b;
            }
            let summary = sweep(&options)?;
            info!("{} pairs, {} from cache, {} computed", summary.pairs, summary.from_cache, summary.computed);
            if let Some(path) = csv {
                let mut out = String::from("n,k,beta,lower,exact,min_upper,conjecture,satisfied\n");
                for r in &summary.records {
                    let opt = |x: Option<usize>| x.map(|v| v.to_string()).unwrap_or_default();
                    let sat = r.conjecture_satisfied.map(|b| b.to_string()).unwrap_or_default();
                    out.push_str(&format!(
                        "{},{},{},{},{},{},{},{sat}\n",
                        r.n,
                        r.k,
                        opt(r.beta),
                        r.lower,
                        opt(r.exact),
                        r.min_upper,
                        r.conjecture
                    ));
                }
                fs::write(&path, out).with_context(|| format!("writing {}", path.display()))?;
            }
            for (n, k) in &summary.unresolved {
                warn!("P({n},{k}) unresolved within the node budget");
            }
            for (n, k) in &summary.violations {
                println!("VIOLATION P({n},{k})");
            }
            for f in &summary.check_failures {
                println!("CHECK FAILED {f}");
            }
            println!(
                "sweep n<={max_n}: {} pairs, {} violations, {} unresolved, {} check failures",
                summary.pairs,
                summary.violations.len(),
                summary.unresolved.len(),
                summary.check_failures.len()
            );
            return Ok(summary.is_clean());
        }
        Command::VerifyTheorems { max_n, samples, seed } => {
            let report = verify_theorems(&TheoremOptions { max_n, samples, seed, execution })?;
            for (property, checked, skipped, failures) in report.tally() {
                let verdict = if failures == 0 { "PASS" } else { "FAIL" };
                println!("{verdict} {property:?}: {checked} pairs checked, {skipped} skipped, {failures} failures");
            }
            for f in report.failures() {
                println!("  {f}");
            }
            return Ok(report.passed());
        }
        Command::Export { n, k, format, out } => {
            let g = PetersenGraph::new(n, k)?;
            let (format, cover) = match format {
                FormatArg::Dimacs => (ExportFormat::Dimacs, None),
                FormatArg::Json => (ExportFormat::Json, None),
                FormatArg::Cert => {
                    (ExportFormat::Certificate, Some(beta_exact_with(&g, &SolverConfig::default())?.witness))
                }
            };
            let text = export(&g, format, cover.as_ref())?;
            match out {
                Some(path) => fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?,
                None => print!("{text}"),
            }
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
