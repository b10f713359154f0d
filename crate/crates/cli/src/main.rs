//! `matchdim` command-line front end.
//!
//! Exit codes: 0 on success, 1 when a verification or property check fails,
//! 2 on any input error.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use matchdim_core::format::{parse_graph, to_dot, to_edge_list, to_json};
use matchdim_core::invariants::DEFAULT_ORACLE_CAP;
use matchdim_core::verifier::{run_lemma_suites, sweep_theorem, SuiteSizes};
use matchdim_core::{
    construct, dispatch_case, invariant_profile, oracle_profile, Graph, OracleConfig, VertexSet,
};

const ORACLE_CAP_VAR: &str = "MATCHDIM_ORACLE_CAP";

#[derive(Parser)]
#[command(
    name = "matchdim",
    version,
    about = "Exact matching invariants and realising constructions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the graph realising (ind-match, min-match, match, dim) = (a, b, c, d).
    Construct {
        a: usize,
        b: usize,
        c: usize,
        d: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Write the graph here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute the four invariants of a graph file (`-` reads standard input).
    Invariants {
        input: PathBuf,
        /// Also run the exhaustive oracle and report agreement.
        #[arg(long)]
        oracle: bool,
    },
    /// Construct and solve every feasible tuple with b up to --max-b.
    Verify {
        #[arg(long)]
        max_b: usize,
        #[arg(long, default_value_t = 0)]
        d_slack: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Add per-tuple wall-clock time to each report.
        #[arg(long)]
        timings: bool,
    },
    /// Add a vertex adjacent to everything outside an independent set.
    Suspend {
        input: PathBuf,
        /// Comma-separated vertex indices; empty for the empty set.
        #[arg(long, allow_hyphen_values = true)]
        set: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the property suites over a seeded random corpus.
    Lemmas {
        #[arg(long)]
        corpus_size: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Edges,
    Dot,
}

impl Format {
    fn render(self, g: &Graph) -> String {
        match self {
            Format::Json => to_json(g) + "\n",
            Format::Edges => to_edge_list(g),
            Format::Dot => to_dot(g),
        }
    }
}

enum Outcome {
    Success,
    CheckFailed,
}

fn read_graph(path: &Path) -> anyhow::Result<Graph> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .context("reading standard input")?;
        s
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    Ok(parse_graph(&text)?)
}

fn write_graph(g: &Graph, format: Format, out: Option<&Path>) -> anyhow::Result<()> {
    let text = format.render(g);
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => io::stdout()
            .write_all(text.as_bytes())
            .context("writing standard output"),
    }
}

fn oracle_config() -> anyhow::Result<OracleConfig> {
    match std::env::var(ORACLE_CAP_VAR) {
        Ok(v) => {
            let cap = v
                .trim()
                .parse()
                .map_err(|_| anyhow!("{ORACLE_CAP_VAR}={v:?} is not a non-negative integer"))?;
            Ok(OracleConfig { cap })
        }
        Err(std::env::VarError::NotPresent) => Ok(OracleConfig {
            cap: DEFAULT_ORACLE_CAP,
        }),
        Err(e) => bail!("{ORACLE_CAP_VAR}: {e}"),
    }
}

fn thread_pool(jobs: usize) -> anyhow::Result<rayon::ThreadPool> {
    if jobs == 0 {
        bail!("--jobs must be at least 1");
    }
    Ok(rayon::ThreadPoolBuilder::new().num_threads(jobs).build()?)
}

fn parse_set(csv: &str) -> anyhow::Result<VertexSet> {
    csv.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse()
                .map_err(|_| anyhow!("{s:?} in --set is not a vertex index"))
        })
        .collect()
}

fn cmd_construct(
    a: usize,
    b: usize,
    c: usize,
    d: usize,
    format: Format,
    out: Option<&Path>,
) -> anyhow::Result<Outcome> {
    let case = dispatch_case(a, b, c, d)?;
    let g = construct(a, b, c, d)?;
    write_graph(&g, format, out)?;
    let summary = format!("case {case}: {} vertices, {} edges", g.order(), g.size());
    if out.is_some() {
        println!("{summary}");
    } else {
        eprintln!("{summary}");
    }
    Ok(Outcome::Success)
}

fn cmd_invariants(input: &Path, with_oracle: bool) -> anyhow::Result<Outcome> {
    let g = read_graph(input)?;
    let p = invariant_profile(&g)?;
    let mut report = json!({
        "connected": g.is_connected(),
        "dim": p.dim,
        "ind_match": p.ind_match,
        "match": p.matching,
        "min_match": p.min_match,
    });
    let mut outcome = Outcome::Success;
    if with_oracle {
        let o = oracle_profile(&g, &oracle_config()?)?;
        let agrees = o == p;
        if let Value::Object(map) = &mut report {
            map.insert("oracle".into(), serde_json::to_value(o)?);
            map.insert("oracle_agrees".into(), agrees.into());
        }
        if !agrees {
            outcome = Outcome::CheckFailed;
        }
    }
    println!("{report}");
    Ok(outcome)
}

fn cmd_verify(max_b: usize, d_slack: usize, jobs: usize, timings: bool) -> anyhow::Result<Outcome> {
    if max_b == 0 {
        bail!("--max-b must be at least 1");
    }
    let reports = thread_pool(jobs)?.install(|| sweep_theorem(max_b, d_slack))?;
    let mut stdout = io::stdout().lock();
    for r in &reports {
        writeln!(stdout, "{}", r.to_json_line(timings))?;
    }
    let passed = reports.iter().filter(|r| r.passed).count();
    let failed = reports.len() - passed;
    let summary =
        json!({ "failed": failed, "passed": passed, "summary": true, "total": reports.len() });
    writeln!(stdout, "{summary}")?;
    Ok(if failed == 0 {
        Outcome::Success
    } else {
        Outcome::CheckFailed
    })
}

fn cmd_suspend(
    input: &Path,
    set: &str,
    format: Format,
    out: Option<&Path>,
) -> anyhow::Result<Outcome> {
    let g = read_graph(input)?;
    let s = parse_set(set)?;
    let h = g.s_suspension(&s)?;
    write_graph(&h, format, out)?;
    Ok(Outcome::Success)
}

fn cmd_lemmas(corpus_size: usize, seed: u64, jobs: usize) -> anyhow::Result<Outcome> {
    if corpus_size == 0 {
        bail!("--corpus-size must be at least 1");
    }
    let cfg = oracle_config()?;
    let reports = thread_pool(jobs)?
        .install(|| run_lemma_suites(SuiteSizes::uniform(corpus_size), seed, &cfg))?;
    let mut stdout = io::stdout().lock();
    for r in &reports {
        writeln!(stdout, "{}", r.to_json_line())?;
    }
    Ok(if reports.iter().all(|r| r.passed) {
        Outcome::Success
    } else {
        Outcome::CheckFailed
    })
}

fn run(cli: Cli) -> anyhow::Result<Outcome> {
    match cli.command {
        Command::Construct {
            a,
            b,
            c,
            d,
            format,
            out,
        } => cmd_construct(a, b, c, d, format, out.as_deref()),
        Command::Invariants { input, oracle } => cmd_invariants(&input, oracle),
        Command::Verify {
            max_b,
            d_slack,
            jobs,
            timings,
        } => cmd_verify(max_b, d_slack, jobs, timings),
        Command::Suspend {
            input,
            set,
            format,
            out,
        } => cmd_suspend(&input, &set, format, out.as_deref()),
        Command::Lemmas {
            corpus_size,
            seed,
            jobs,
        } => cmd_lemmas(corpus_size, seed, jobs),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(Outcome::Success) => ExitCode::SUCCESS,
        Ok(Outcome::CheckFailed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
