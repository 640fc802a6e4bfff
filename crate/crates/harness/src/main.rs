//! `eqgraph` CLI: seeded learning experiments over feedback-graph domains.
//!
//! Verbs: `learn` (run trials, emit CSV), `median` (exact weighted median
//! of a support file), `verify` (invariant suite), `sample-linext`
//! (near-uniform linear extensions), `bounds` (reference query bounds).
//! Exit codes: 0 success, 1 invariant failure, 2 config error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use eqgraph::{
    beta_for, csv_string, emit_csv, initial_support_size, load_weights, run_experiment,
    theoretical_bound, verify_suite, ConfigDraft, DomainKind, ExperimentConfig, HarnessError,
};
use eqgraph_core::{exact_median, gamma_potential, DomainAdapter, Error as CoreError, ModelId};
use eqgraph_clustering::{ClusteringSpace, FeedbackMode};
use eqgraph_ranking::{
    default_chain_steps, sample_linear_extension, AdjacentSwapDomain, BlockMoveDomain,
    PartialOrderConstraints, Permutation,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Parser)]
#[command(name = "eqgraph", about = "Interactive-learning experiments over feedback graphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run learning trials and emit a CSV of per-trial records.
    Learn(RunArgs),
    /// Compute the exact weighted median of a support set from a weight file.
    Median(MedianArgs),
    /// Run the deterministic invariant-verification suite.
    Verify {
        /// core | ranking | clustering | classify | all
        #[arg(long, default_value = "all")]
        scope: String,
    },
    /// Draw near-uniform linear extensions of a partial order.
    #[command(name = "sample-linext")]
    SampleLinext {
        #[arg(long)]
        n: usize,
        /// Markov-chain steps per draw (default: the calibrated budget).
        #[arg(long)]
        steps: Option<usize>,
        #[arg(long, default_value_t = 1)]
        draws: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Optional constraint file: one `a b` pair per line, a before b.
        #[arg(long)]
        constraints: Option<PathBuf>,
    },
    /// Print the reference query bound for a configuration.
    Bounds(RunArgs),
}

#[derive(Args)]
struct RunArgs {
    /// key=value configuration file; flags below override it.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    trials: Option<usize>,
    /// CSV output path (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
    /// ranking | clustering | classify
    #[arg(long)]
    domain: Option<String>,
    /// ranking: bubble|insertion; clustering: unspecified|specified
    #[arg(long)]
    feedback: Option<String>,
    /// classify: hypercube|hyperplane
    #[arg(long)]
    mode: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    p: Option<f64>,
    #[arg(long)]
    delta: Option<f64>,
    /// uniform | adversarial | confirm-spam
    #[arg(long)]
    noise: Option<String>,
    /// uniform-valid | adversarial-valid | adversary
    #[arg(long)]
    oracle: Option<String>,
    /// gamma-exact | phi-exact | sampled | greedy-clustering | hyperplane-lp
    #[arg(long)]
    median: Option<String>,
    /// all | intervals | file:<path>  (clustering)
    #[arg(long)]
    family: Option<String>,
    /// file:<path> of sample points (classify)
    #[arg(long)]
    points: Option<String>,
}

#[derive(Args)]
struct MedianArgs {
    #[command(flatten)]
    run: RunArgs,
    /// Weight file: one `model_index weight` pair per line.
    #[arg(long)]
    weights: PathBuf,
}

fn build_config(args: &RunArgs) -> Result<ExperimentConfig, HarnessError> {
    let mut draft = ConfigDraft::new();
    if let Some(path) = &args.config {
        draft.load_file(path)?;
    }
    draft.set_opt("domain", args.domain.clone())?;
    draft.set_opt("feedback", args.feedback.clone())?;
    draft.set_opt("mode", args.mode.clone())?;
    draft.set_opt("n", args.n.map(|v| v.to_string()))?;
    draft.set_opt("k", args.k.map(|v| v.to_string()))?;
    draft.set_opt("d", args.d.map(|v| v.to_string()))?;
    draft.set_opt("p", args.p.map(|v| v.to_string()))?;
    draft.set_opt("delta", args.delta.map(|v| v.to_string()))?;
    draft.set_opt("noise", args.noise.clone())?;
    draft.set_opt("oracle", args.oracle.clone())?;
    draft.set_opt("median", args.median.clone())?;
    draft.set_opt("trials", args.trials.map(|v| v.to_string()))?;
    draft.set_opt("seed", args.seed.map(|v| v.to_string()))?;
    draft.set_opt("family", args.family.clone())?;
    draft.set_opt("points", args.points.clone())?;
    draft.build()
}

fn cmd_learn(args: &RunArgs) -> Result<u8, HarnessError> {
    let config = build_config(args)?;
    let (records, summary) = run_experiment(&config)?;
    match &args.out {
        Some(path) => {
            emit_csv(&records, path)?;
            println!("wrote {} records to {}", records.len(), path.display());
        }
        None => print!("{}", csv_string(&records)),
    }
    eprintln!(
        "trials {} | mean queries {:.2} | 95th pct {} | success rate {:.3} | bound violations {}{}",
        summary.trials,
        summary.mean_queries,
        summary.p95_queries,
        summary.success_rate,
        summary.bound_violations,
        if summary.bound_is_leading_term {
            " | bound column is the noisy leading term (lower-order terms omitted)"
        } else {
            ""
        }
    );
    Ok(if summary.bound_violations > 0 { 1 } else { 0 })
}

fn report_median<A: DomainAdapter + ?Sized>(
    adapter: &A,
    entries: &[(usize, f64)],
    render: impl Fn(ModelId) -> String,
) -> Result<(), HarnessError> {
    for &(idx, _) in entries {
        if idx >= adapter.model_count() {
            return Err(HarnessError::Config(format!(
                "model index {idx} out of range 0..{}",
                adapter.model_count()
            )));
        }
    }
    let support: Vec<ModelId> = entries.iter().map(|&(i, _)| ModelId(i)).collect();
    let weights: Vec<f64> = entries.iter().map(|&(_, w)| w).collect();
    let (median, phi) =
        exact_median(adapter, &support, &weights).map_err(HarnessError::Core)?;
    let gamma = gamma_potential(adapter, &support, &weights, median);
    println!("median model {}", median.index());
    println!("rendering    {}", render(median));
    println!("gamma        {gamma}");
    println!("phi          {phi}");
    Ok(())
}

fn cmd_median(args: &MedianArgs) -> Result<u8, HarnessError> {
    let config = build_config(&args.run)?;
    let entries = load_weights(&args.weights)?;
    match config.domain {
        DomainKind::RankingBubble => {
            let dom = AdjacentSwapDomain::new(config.n);
            report_median(&dom, &entries, |id| {
                format!("{:?}", Permutation::from_lehmer(id, config.n).items())
            })?;
        }
        DomainKind::RankingInsertion => {
            let dom = BlockMoveDomain::new(config.n);
            report_median(&dom, &entries, |id| {
                format!("{:?}", Permutation::from_lehmer(id, config.n).items())
            })?;
        }
        DomainKind::ClusteringUnspecified | DomainKind::ClusteringSpecified => {
            let mode = if config.domain == DomainKind::ClusteringUnspecified {
                FeedbackMode::Unspecified
            } else {
                FeedbackMode::Specified
            };
            let space = ClusteringSpace::new(config.n, mode);
            report_median(&space, &entries, |id| {
                format!("{:?}", space.clustering(id).blocks())
            })?;
        }
        DomainKind::ClassifyHypercube | DomainKind::ClassifyHyperplane => {
            let n_points = match &config.points {
                Some(path) => eqgraph::load_points(Path::new(path), config.d)?.len(),
                None => config.n,
            };
            let dom = eqgraph_classify::HypercubeDomain::new(n_points);
            report_median(&dom, &entries, |id| {
                (0..n_points)
                    .map(|i| if id.index() >> i & 1 == 1 { '1' } else { '0' })
                    .collect()
            })?;
        }
    }
    Ok(0)
}

fn cmd_verify(scope: &str) -> Result<u8, HarnessError> {
    let results = verify_suite(scope)?;
    let mut failed = 0;
    for r in &results {
        println!(
            "[{}] {} — {}",
            if r.passed { "PASS" } else { "FAIL" },
            r.name,
            r.detail
        );
        if !r.passed {
            failed += 1;
        }
    }
    println!("{} checks, {} failed", results.len(), failed);
    Ok(if failed > 0 { 1 } else { 0 })
}

fn cmd_sample_linext(
    n: usize,
    steps: Option<usize>,
    draws: usize,
    seed: u64,
    constraints_path: Option<&PathBuf>,
) -> Result<u8, HarnessError> {
    if n == 0 || n > 20 {
        return Err(HarnessError::Config(format!("n = {n} outside 1..=20")));
    }
    let mut constraints = PartialOrderConstraints::new(n);
    if let Some(path) = constraints_path {
        let text = std::fs::read_to_string(path)?;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            let bad = || {
                HarnessError::Config(format!(
                    "{}:{}: expected `a b` with a, b < {n}",
                    path.display(),
                    lineno + 1
                ))
            };
            let mut it = line.split_whitespace();
            let a: usize = it.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
            let b: usize = it.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
            if it.next().is_some() || a >= n || b >= n {
                return Err(bad());
            }
            constraints.add(a, b).map_err(|_| {
                HarnessError::Config(format!(
                    "{}:{}: `{a} {b}` contradicts earlier constraints",
                    path.display(),
                    lineno + 1
                ))
            })?;
        }
    }
    let steps = steps.unwrap_or_else(|| default_chain_steps(n));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..draws {
        let perm = sample_linear_extension(&constraints, steps, &mut rng);
        let line: Vec<String> = perm.items().iter().map(usize::to_string).collect();
        println!("{}", line.join(" "));
    }
    Ok(0)
}

fn cmd_bounds(args: &RunArgs) -> Result<u8, HarnessError> {
    let config = build_config(args)?;
    let n0 = initial_support_size(&config)?;
    let bound = theoretical_bound(&config, n0);
    println!("domain            {}", config.domain.name());
    println!("candidates (N0)   {n0}");
    println!("beta              {}", beta_for(&config));
    println!("bound             {bound}");
    if config.p < 1.0 {
        println!("note              leading term only; lower-order terms omitted");
    }
    Ok(0)
}

fn exit_code_for(err: &HarnessError) -> u8 {
    match err {
        HarnessError::Config(_) | HarnessError::Io(_) => 2,
        HarnessError::Core(CoreError::InvalidSchedule(_))
        | HarnessError::Core(CoreError::InvalidParameter(_)) => 2,
        HarnessError::Core(_) => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.cmd {
        Cmd::Learn(args) => cmd_learn(args),
        Cmd::Median(args) => cmd_median(args),
        Cmd::Verify { scope } => cmd_verify(scope),
        Cmd::SampleLinext {
            n,
            steps,
            draws,
            seed,
            constraints,
        } => cmd_sample_linext(*n, *steps, *draws, *seed, constraints.as_ref()),
        Cmd::Bounds(args) => cmd_bounds(args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}
