//! Command-line front end for the representation pipeline.
//!
//! Exit codes: 0 success, 1 invalid configuration or input, 2 verification
//! failed, 3 retry or search caps exceeded. Machine-readable lines use the
//! stable prefixes CONFIG, RESULT, VIOLATION, BOUND, and SUPPORT; all
//! output is a pure function of the arguments and input files.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use setrep::builder::{
    assemble_representation, build_representation, BuildOptions,
};
use setrep::counting::{first_n_where_argument_holds, verify_counting_argument, CountReport};
use setrep::decompose::decompose;
use setrep::generate::{gen_random_linear, gen_union_of_matchings};
use setrep::hypergraph::{parse_hypergraph, Hypergraph};
use setrep::oracle::{theta_k_exact, theta_tilde_exact, OracleLimits};
use setrep::params::Mode;
use setrep::representation::parse_representation;
use setrep::verify::{sampled_verify, verify_representation, VerificationReport};
use setrep::Error;

#[derive(Parser)]
#[command(name = "setrep", version, about = "Threshold set representations of uniform hypergraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a random instance and write it as a .hg file
    Gen(GenArgs),
    /// Split a hypergraph's edges into matchings
    Decompose(DecomposeArgs),
    /// Build a verified representation of a hypergraph
    Represent(RepresentArgs),
    /// Check a representation against a hypergraph
    Verify(VerifyArgs),
    /// Exhaustively compute minimum representation sizes (tiny instances)
    Exact(ExactArgs),
    /// Evaluate the counting lower bound
    Bounds(BoundsArgs),
}

#[derive(Args)]
struct GenArgs {
    /// Random model: "union" (of almost-perfect matchings) or "linear"
    #[arg(long, default_value = "union", value_parser = ["union", "linear"])]
    model: String,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    r: usize,
    /// Number of matchings (union) or maximum degree (linear)
    #[arg(long)]
    delta: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output .hg path
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct DecomposeArgs {
    /// Input .hg path
    #[arg(long)]
    graph: PathBuf,
    /// Optional output .dec path
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct RepresentArgs {
    /// Input .hg path
    #[arg(long)]
    graph: PathBuf,
    #[arg(long, default_value_t = Mode::General)]
    mode: Mode,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output .rep path
    #[arg(long)]
    out: PathBuf,
    /// Multiplier on the ground-segment size (1.0 = the guaranteed formulas)
    #[arg(long, default_value_t = 1.0)]
    scale: f64,
    #[arg(long, default_value_t = 100)]
    max_family_retries: u32,
    #[arg(long, default_value_t = 10)]
    max_build_retries: u32,
    /// Skip the final verification sweep (families are still certified)
    #[arg(long)]
    assemble_only: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Input .hg path
    #[arg(long)]
    graph: PathBuf,
    /// Input .rep path
    #[arg(long)]
    rep: PathBuf,
    /// Check this many sampled non-edges instead of every tuple
    #[arg(long)]
    sample: Option<usize>,
    /// Seed for sampled checking
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct ExactArgs {
    /// Input .hg path
    #[arg(long)]
    graph: PathBuf,
    /// Fixed intersection threshold
    #[arg(long, conflicts_with = "tilde")]
    k: Option<u64>,
    /// Minimize over all thresholds
    #[arg(long)]
    tilde: bool,
    #[arg(long, default_value_t = 8)]
    max_t: usize,
    #[arg(long, default_value_t = 8)]
    max_n: usize,
}

#[derive(Args)]
struct BoundsArgs {
    #[arg(long)]
    n: u64,
    #[arg(long)]
    r: u64,
    #[arg(long)]
    delta: u64,
    /// Also scan for the first n where each inequality holds
    #[arg(long)]
    scan: bool,
    #[arg(long, default_value_t = 10_000)]
    scan_limit: u64,
    /// Also emit the report as a CSV header and row
    #[arg(long)]
    csv: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(classify(&e))
        }
    }
}

/// Caps and retry budgets exit 3, everything else that errors is an input
/// or configuration problem.
fn classify(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<Error>() {
        Some(Error::RetriesExhausted { .. }) | Some(Error::CapExceeded(_)) => 3,
        _ => 1,
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Gen(args) => gen(args),
        Command::Decompose(args) => decompose_cmd(args),
        Command::Represent(args) => represent(args),
        Command::Verify(args) => verify(args),
        Command::Exact(args) => exact(args),
        Command::Bounds(args) => bounds(args),
    }
}

fn read_graph(path: &Path) -> Result<Hypergraph> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    Ok(parse_hypergraph(&text)?)
}

fn gen(args: GenArgs) -> Result<u8> {
    println!(
        "CONFIG gen model={} n={} r={} delta={} seed={} out={}",
        args.model,
        args.n,
        args.r,
        args.delta,
        args.seed,
        args.out.display()
    );
    let g = match args.model.as_str() {
        "union" => gen_union_of_matchings(args.n, args.r, args.delta, args.seed)?,
        _ => gen_random_linear(args.n, args.r, args.delta, args.seed)?,
    };
    let mut text = format!(
        "# model {}\n# n {} r {} delta {}\n# seed {}\n",
        args.model, args.n, args.r, args.delta, args.seed
    );
    text.push_str(&g.to_hg_string());
    std::fs::write(&args.out, text)
        .with_context(|| format!("writing {}", args.out.display()))?;
    println!("RESULT edges {}", g.edge_count());
    println!("RESULT maxDegree {}", g.degree_profile().max_degree);
    Ok(0)
}

fn decompose_cmd(args: DecomposeArgs) -> Result<u8> {
    println!(
        "CONFIG decompose graph={} out={}",
        args.graph.display(),
        args.out.as_ref().map_or("-".into(), |p| p.display().to_string())
    );
    let g = read_graph(&args.graph)?;
    let d = decompose(&g);
    println!("RESULT matchings {}", d.l());
    if let Some(out) = args.out {
        std::fs::write(&out, d.to_dec_string())
            .with_context(|| format!("writing {}", out.display()))?;
    }
    Ok(0)
}

fn represent(args: RepresentArgs) -> Result<u8> {
    println!(
        "CONFIG represent graph={} mode={} seed={} scale={} maxFamilyRetries={} maxBuildRetries={} assembleOnly={} out={}",
        args.graph.display(),
        args.mode,
        args.seed,
        args.scale,
        args.max_family_retries,
        args.max_build_retries,
        args.assemble_only,
        args.out.display()
    );
    let g = read_graph(&args.graph)?;
    let opts = BuildOptions {
        max_family_retries: args.max_family_retries,
        max_build_retries: args.max_build_retries,
        constant_scale: args.scale,
    };
    let rep = if args.assemble_only {
        assemble_representation(&g, args.mode, args.seed, &opts)?
    } else {
        build_representation(&g, args.mode, args.seed, &opts)?
    };
    std::fs::write(&args.out, rep.to_rep_string())
        .with_context(|| format!("writing {}", args.out.display()))?;
    let meta = rep.meta.as_ref().expect("builder output carries metadata");
    println!("RESULT matchings {}", meta.l);
    println!("RESULT segment {}", meta.t);
    println!("RESULT groundSize {}", rep.ground_size);
    println!("RESULT k {}", rep.k);
    let mut attempts = String::new();
    for a in &meta.family_attempts {
        let _ = write!(attempts, " {a}");
    }
    println!("RESULT familyAttempts{attempts}");
    Ok(0)
}

fn print_report(report: &VerificationReport) {
    println!("RESULT valid {}", report.valid);
    println!(
        "RESULT mode {}",
        if report.exhaustive { "exhaustive" } else { "sampled" }
    );
    println!("RESULT checkedTuples {}", report.checked_tuples);
    if let Some(min) = report.min_edge_count {
        println!("RESULT minEdgeCount {min}");
    }
    if let Some(max) = report.max_non_edge_count {
        println!("RESULT maxNonEdgeCount {max}");
    }
    for v in &report.violations {
        let verts: Vec<String> = v.tuple.iter().map(|x| x.to_string()).collect();
        println!(
            "VIOLATION {} {} {}",
            verts.join(" "),
            v.count,
            if v.is_edge { "edge" } else { "nonedge" }
        );
    }
    if report.truncated {
        println!("RESULT violationsTruncated true");
    }
}

fn verify(args: VerifyArgs) -> Result<u8> {
    println!(
        "CONFIG verify graph={} rep={} sample={} seed={}",
        args.graph.display(),
        args.rep.display(),
        args.sample.map_or("-".into(), |s| s.to_string()),
        args.seed
    );
    let g = read_graph(&args.graph)?;
    let text = std::fs::read_to_string(&args.rep)
        .with_context(|| format!("reading {}", args.rep.display()))?;
    let rep = parse_representation(&text)?;
    let report = match args.sample {
        Some(count) => sampled_verify(&g, &rep, count, args.seed)?,
        None => verify_representation(&g, &rep)?,
    };
    print_report(&report);
    Ok(if report.valid { 0 } else { 2 })
}

fn exact(args: ExactArgs) -> Result<u8> {
    println!(
        "CONFIG exact graph={} k={} tilde={} maxT={} maxN={}",
        args.graph.display(),
        args.k.map_or("-".into(), |k| k.to_string()),
        args.tilde,
        args.max_t,
        args.max_n
    );
    let g = read_graph(&args.graph)?;
    let limits = OracleLimits {
        max_t: args.max_t,
        max_n: args.max_n,
    };
    let result = match (args.k, args.tilde) {
        (Some(k), false) => theta_k_exact(&g, k, &limits)?,
        (None, true) => theta_tilde_exact(&g, &limits)?,
        _ => {
            return Err(Error::InvalidInput(
                "exact needs exactly one of --k <k> or --tilde".into(),
            )
            .into())
        }
    };
    println!("RESULT value {}", result.value);
    println!("RESULT witnessK {}", result.witness_k);
    for (element, support) in result.witness_supports.iter().enumerate() {
        let verts: Vec<String> = support.iter().map(|v| v.to_string()).collect();
        println!("SUPPORT {element}: {}", verts.join(" "));
    }
    Ok(0)
}

fn print_bound_report(report: &CountReport) {
    println!("BOUND {:<18} {}", "n", report.n);
    println!("BOUND {:<18} {}", "r", report.r);
    println!("BOUND {:<18} {}", "delta", report.delta);
    match &report.exact_matchings {
        Some(count) => println!("BOUND {:<18} {}", "exactMatchings", count),
        None => println!("BOUND {:<18} -", "exactMatchings"),
    }
    println!("BOUND {:<18} {}", "lnMatchingsLB", report.ln_matchings_lb);
    println!("BOUND {:<18} {}", "lnGraphsLB", report.ln_graphs_lb);
    println!("BOUND {:<18} {}", "threshold", report.threshold);
    println!("BOUND {:<18} {}", "argumentHolds", report.argument_holds);
    println!("BOUND {:<18} {}", "intermediate", report.intermediate);
    println!("BOUND {:<18} {}", "intermediateHolds", report.intermediate_holds);
}

fn bounds(args: BoundsArgs) -> Result<u8> {
    println!(
        "CONFIG bounds n={} r={} delta={} scan={} scanLimit={} csv={}",
        args.n, args.r, args.delta, args.scan, args.scan_limit, args.csv
    );
    let report = verify_counting_argument(args.n, args.r, args.delta)?;
    print_bound_report(&report);
    if args.csv {
        println!("n,r,delta,lnMatchingsLB,lnGraphsLB,threshold,argumentHolds,intermediate,intermediateHolds");
        println!(
            "{},{},{},{},{},{},{},{},{}",
            report.n,
            report.r,
            report.delta,
            report.ln_matchings_lb,
            report.ln_graphs_lb,
            report.threshold,
            report.argument_holds,
            report.intermediate,
            report.intermediate_holds
        );
    }
    if args.scan {
        match first_n_where_argument_holds(args.r, args.delta, args.scan_limit) {
            Some(n) => println!("RESULT firstArgumentHolds {n}"),
            None => println!("RESULT firstArgumentHolds none"),
        }
        let first_inter = (args.r.max(args.delta)..=args.scan_limit).find(|&n| {
            verify_counting_argument(n, args.r, args.delta)
                .map_or(false, |rep| rep.intermediate_holds)
        });
        match first_inter {
            Some(n) => println!("RESULT firstIntermediateHolds {n}"),
            None => println!("RESULT firstIntermediateHolds none"),
        }
    }
    Ok(0)
}
