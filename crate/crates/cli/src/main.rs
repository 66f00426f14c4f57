//! Batch command-line front end: analyze graphs, recognize uniform-length
//! domination, generate certified instances, and run the exhaustive
//! verification sweep. Multi-graph inputs are newline-delimited graph6;
//! a single human-written graph can be passed as an edge list. Structured
//! output is one JSON record per line and is byte-deterministic for a given
//! input and configuration, independent of the worker count.

use std::io::Read;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use domseq::format::{graph6_string, parse_edgelist, parse_graph6};
use domseq::generators::{
    gen_complete, gen_complete_multipartite, gen_cycle, gen_friendship_complement, gen_k_uniform,
    gen_path, gen_two_uniform, ComponentRecipe, GenSpec,
};
use domseq::graph::Graph;
use domseq::sequences::{profile_capped, DominationProfile, DEFAULT_SOLVER_CAP};
use domseq::uniformity::{
    classify_open_uniform_capped, classify_total_uniform_capped, is_k_uniform_bruteforce_capped,
    recognize_uniform_structural, Certificate, Classification, UniformityReport,
};
use domseq::verify::sweep_size;

#[derive(Parser)]
#[command(
    name = "domseq",
    version,
    about = "Exact domination-sequence analysis and uniform-graph recognition for small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Worker threads (default: DOMSEQ_WORKERS, else available parallelism)
    #[arg(long, global = true)]
    workers: Option<usize>,

    /// Output mode
    #[arg(long, global = true, value_enum, default_value_t = OutputMode::Human)]
    output: OutputMode,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputMode {
    Human,
    Structured,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InputFormat {
    /// Newline-delimited graph6, one graph per line
    Graph6,
    /// A single graph as an edge list (first line n, then `u v` lines)
    Edgelist,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Structural,
    Brute,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Per-graph domination profile plus closed/total/open classification
    Analyze {
        /// Input path, or '-' for stdin
        #[arg(default_value = "-")]
        input: String,
        #[arg(long, value_enum, default_value_t = InputFormat::Graph6)]
        format: InputFormat,
        /// Exact-solver vertex cap; larger graphs get structural results only
        #[arg(long, default_value_t = DEFAULT_SOLVER_CAP)]
        cap: usize,
    },
    /// k-uniform recognition (structural, brute force, or both with an
    /// agreement check; disagreement exits 2)
    Recognize {
        #[arg(default_value = "-")]
        input: String,
        #[arg(long, value_enum, default_value_t = InputFormat::Graph6)]
        format: InputFormat,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
        #[arg(long, default_value_t = DEFAULT_SOLVER_CAP)]
        cap: usize,
    },
    /// Emit graphs as graph6 lines (structured mode adds recipe sidecars)
    Generate {
        #[command(subcommand)]
        family: Family,
    },
    /// Sweep all labeled graphs up to a size and verify every
    /// characterization; any counterexample exits 2
    Verify {
        /// Largest size to sweep (1..=7, or 8 with --opt-in-n8)
        #[arg(long, default_value_t = 7)]
        n: usize,
        /// Allow the 268-million-graph n=8 sweep
        #[arg(long)]
        opt_in_n8: bool,
    },
}

#[derive(Subcommand)]
enum Family {
    /// Complete graph K_n (1-uniform)
    Complete { n: usize },
    /// Path P_n
    Path { n: usize },
    /// Cycle C_n
    Cycle { n: usize },
    /// Complete multipartite graph with the given part sizes
    Multipartite {
        #[arg(required = true)]
        parts: Vec<usize>,
    },
    /// Complement of a disjoint union of K_{p,q} pieces (2-uniform);
    /// each piece is written p,q
    TwoUniform {
        #[arg(required = true, value_parser = parse_piece)]
        pieces: Vec<(usize, usize)>,
    },
    /// Complement of the friendship graph K_1 v tK_2 (3-uniform, twin-free)
    FriendshipComplement { t: usize },
    /// Random certified k-uniform instances from seeded recipes
    Random {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Vertex budget per instance (at most 64)
        #[arg(long, default_value_t = 20)]
        budget: usize,
        #[arg(long, default_value_t = 1)]
        count: usize,
    },
}

fn parse_piece(s: &str) -> Result<(usize, usize), String> {
    let (p, q) = s
        .split_once(',')
        .ok_or_else(|| format!("expected p,q got {s:?}"))?;
    Ok((
        p.trim().parse().map_err(|e| format!("{e}"))?,
        q.trim().parse().map_err(|e| format!("{e}"))?,
    ))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let pool = build_pool(cli.workers)?;
    match cli.command {
        Command::Analyze { input, format, cap } => {
            pool.install(|| analyze(&input, format, cap, cli.output))
        }
        Command::Recognize {
            input,
            format,
            method,
            cap,
        } => pool.install(|| recognize(&input, format, method, cap, cli.output)),
        Command::Generate { family } => generate(family, cli.output),
        Command::Verify { n, opt_in_n8 } => pool.install(|| verify(n, opt_in_n8, cli.output)),
    }
}

fn build_pool(workers: Option<usize>) -> Result<rayon::ThreadPool> {
    let threads = workers
        .or_else(|| {
            std::env::var("DOMSEQ_WORKERS")
                .ok()
                .and_then(|s| s.parse().ok())
        })
        .unwrap_or_else(|| {
            std::thread::available_parallelism()
                .map(|p| p.get())
                .unwrap_or(1)
        });
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .context("building worker pool")
}

fn read_input(path: &str) -> Result<Vec<u8>> {
    if path == "-" {
        let mut buf = Vec::new();
        std::io::stdin()
            .read_to_end(&mut buf)
            .context("reading stdin")?;
        Ok(buf)
    } else {
        std::fs::read(path).with_context(|| format!("reading {path}"))
    }
}

/// Parses the input into (1-based index, graph-or-error) pairs.
fn load_graphs(path: &str, format: InputFormat) -> Result<Vec<(usize, Result<Graph, String>)>> {
    let bytes = read_input(path)?;
    Ok(match format {
        InputFormat::Edgelist => vec![(1, parse_edgelist(&bytes).map_err(|e| e.to_string()))],
        InputFormat::Graph6 => String::from_utf8_lossy(&bytes)
            .lines()
            .enumerate()
            .filter(|(_, line)| !line.trim().is_empty())
            .map(|(i, line)| (i + 1, parse_graph6(line.trim().as_bytes()).map_err(|e| e.to_string())))
            .collect(),
    })
}

// ---------------------------------------------------------------------------
// analyze
// ---------------------------------------------------------------------------

#[derive(Serialize)]
#[serde(untagged)]
enum Record<T: Serialize> {
    Ok(T),
    Err { index: usize, error: String },
}

#[derive(Serialize)]
struct AnalyzeRecord {
    index: usize,
    graph6: String,
    n: usize,
    edges: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    profile: Option<DominationProfile>,
    closed: UniformityReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    total: Option<UniformityReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    open: Option<UniformityReport>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    warnings: Vec<String>,
}

fn analyze(path: &str, format: InputFormat, cap: usize, output: OutputMode) -> Result<ExitCode> {
    let inputs = load_graphs(path, format)?;
    let records: Vec<Record<AnalyzeRecord>> = inputs
        .into_par_iter()
        .map(|(index, parsed)| match parsed {
            Err(error) => Record::Err { index, error },
            Ok(g) => Record::Ok(analyze_one(index, &g, cap)),
        })
        .collect();

    let mut had_errors = false;
    for record in &records {
        match output {
            OutputMode::Structured => println!("{}", serde_json::to_string(record)?),
            OutputMode::Human => match record {
                Record::Err { index, error } => {
                    println!("graph {index}: parse error: {error}");
                }
                Record::Ok(r) => {
                    println!("graph {}: n={} edges={} graph6={}", r.index, r.n, r.edges, r.graph6);
                    match &r.profile {
                        Some(p) => println!("  {}", describe_profile(p)),
                        None => println!("  profile: (skipped)"),
                    }
                    println!("  closed: {}", describe_report(&r.closed));
                    println!("  total:  {}", describe_opt_report(&r.total));
                    println!("  open:   {}", describe_opt_report(&r.open));
                    for w in &r.warnings {
                        println!("  warning: {w}");
                    }
                }
            },
        }
        if let Record::Err { .. } = record {
            had_errors = true;
        }
    }
    Ok(if had_errors { ExitCode::from(1) } else { ExitCode::SUCCESS })
}

fn analyze_one(index: usize, g: &Graph, cap: usize) -> AnalyzeRecord {
    let mut warnings = Vec::new();
    let profile = match profile_capped(g, cap) {
        Ok(p) => Some(p),
        Err(e) => {
            warnings.push(format!("{e}; exact parameters omitted"));
            None
        }
    };
    let closed = recognize_uniform_structural(g);
    let total = match classify_total_uniform_capped(g, cap) {
        Ok(rep) => Some(rep),
        Err(e) => {
            warnings.push(format!("total classification: {e}"));
            None
        }
    };
    let open = match classify_open_uniform_capped(g, cap) {
        Ok(rep) => Some(rep),
        Err(e) => {
            warnings.push(format!("open classification: {e}"));
            None
        }
    };
    AnalyzeRecord {
        index,
        graph6: graph6_string(g),
        n: g.n(),
        edges: g.edge_count(),
        profile,
        closed,
        total,
        open,
        warnings,
    }
}

fn describe_profile(p: &DominationProfile) -> String {
    let opt = |v: Option<usize>| v.map_or("-".to_string(), |x| x.to_string());
    format!(
        "gamma={} gamma_gr={} gamma_t={} gamma_gr_t={} min_dom_ons={} max_dom_ons={}",
        p.gamma,
        p.gamma_gr,
        opt(p.gamma_t),
        opt(p.gamma_gr_t),
        opt(p.min_dom_ons),
        opt(p.max_dom_ons)
    )
}

fn describe_report(r: &UniformityReport) -> String {
    let cert = match &r.certificate {
        Some(Certificate::StructuralDecomposition { components, .. }) => {
            format!(" (structural decomposition, {} components)", components.len())
        }
        Some(Certificate::MultipartiteWitness { parts }) => {
            format!(" (complete multipartite, {} parts)", parts.len())
        }
        Some(Certificate::LengthWitness { short, long }) => {
            format!(" (lengths {} and {} witnessed)", short.len(), long.len())
        }
        Some(Certificate::BruteForce { lengths }) => format!(" (brute force, lengths {lengths:?})"),
        None => String::new(),
    };
    match r.classification {
        Classification::Uniform { k } => format!("uniform k={k}{cert}"),
        Classification::NonUniform => format!("non-uniform{cert}"),
        Classification::Undefined => "undefined (no vertices or an isolated vertex)".to_string(),
    }
}

fn describe_opt_report(r: &Option<UniformityReport>) -> String {
    r.as_ref().map_or("(skipped)".to_string(), describe_report)
}

// ---------------------------------------------------------------------------
// recognize
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct RecognizeRecord {
    index: usize,
    graph6: String,
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    structural: Option<UniformityReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    brute: Option<UniformityReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    agree: Option<bool>,
}

fn recognize(
    path: &str,
    format: InputFormat,
    method: Method,
    cap: usize,
    output: OutputMode,
) -> Result<ExitCode> {
    let inputs = load_graphs(path, format)?;
    let records: Vec<Record<RecognizeRecord>> = inputs
        .into_par_iter()
        .map(|(index, parsed)| match parsed {
            Err(error) => Record::Err { index, error },
            Ok(g) => match recognize_one(index, &g, method, cap) {
                Ok(r) => Record::Ok(r),
                Err(error) => Record::Err {
                    index,
                    error: error.to_string(),
                },
            },
        })
        .collect();

    let mut had_errors = false;
    let mut had_mismatch = false;
    for record in &records {
        match record {
            Record::Err { .. } => had_errors = true,
            Record::Ok(r) if r.agree == Some(false) => had_mismatch = true,
            _ => {}
        }
        match output {
            OutputMode::Structured => println!("{}", serde_json::to_string(record)?),
            OutputMode::Human => match record {
                Record::Err { index, error } => println!("graph {index}: error: {error}"),
                Record::Ok(r) => {
                    let mut parts = Vec::new();
                    if let Some(rep) = &r.structural {
                        parts.push(format!("structural: {}", describe_report(rep)));
                    }
                    if let Some(rep) = &r.brute {
                        parts.push(format!("brute: {}", describe_report(rep)));
                    }
                    if let Some(agree) = r.agree {
                        parts.push(if agree {
                            "agreement".to_string()
                        } else {
                            "MISMATCH".to_string()
                        });
                    }
                    println!("graph {}: {}", r.index, parts.join("; "));
                }
            },
        }
    }
    Ok(if had_mismatch {
        ExitCode::from(2)
    } else if had_errors {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn recognize_one(
    index: usize,
    g: &Graph,
    method: Method,
    cap: usize,
) -> Result<RecognizeRecord> {
    let structural = matches!(method, Method::Structural | Method::Both)
        .then(|| recognize_uniform_structural(g));
    let brute = match method {
        Method::Brute | Method::Both => Some(is_k_uniform_bruteforce_capped(g, cap)?),
        Method::Structural => None,
    };
    let agree = match (&structural, &brute) {
        (Some(s), Some(b)) => Some(s.classification == b.classification),
        _ => None,
    };
    Ok(RecognizeRecord {
        index,
        graph6: graph6_string(g),
        n: g.n(),
        structural,
        brute,
        agree,
    })
}

// ---------------------------------------------------------------------------
// generate
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct GenerateRecord {
    graph6: String,
    n: usize,
    edges: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    claimed_k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    spec: Option<GenSpec>,
}

fn generate(family: Family, output: OutputMode) -> Result<ExitCode> {
    let batch: Vec<(Graph, Option<GenSpec>)> = match family {
        Family::Complete { n } => {
            let spec = GenSpec {
                components: vec![ComponentRecipe::Complete { size: n }],
                twin_inflation: Default::default(),
                seed: 0,
            };
            vec![(gen_complete(n)?, Some(spec))]
        }
        Family::Path { n } => vec![(gen_path(n)?, None)],
        Family::Cycle { n } => vec![(gen_cycle(n)?, None)],
        Family::Multipartite { parts } => vec![(gen_complete_multipartite(&parts)?, None)],
        Family::TwoUniform { pieces } => {
            let spec = GenSpec {
                components: vec![ComponentRecipe::TwoUniform {
                    pieces: pieces.clone(),
                }],
                twin_inflation: Default::default(),
                seed: 0,
            };
            vec![(gen_two_uniform(&pieces)?, Some(spec))]
        }
        Family::FriendshipComplement { t } => {
            let spec = GenSpec {
                components: vec![
                    ComponentRecipe::Complete { size: 1 },
                    ComponentRecipe::TwoUniform {
                        pieces: vec![(1, 1); t.max(1)],
                    },
                ],
                twin_inflation: Default::default(),
                seed: 0,
            };
            vec![(gen_friendship_complement(t)?, Some(spec))]
        }
        Family::Random { seed, budget, count } => {
            if budget > domseq::MAX_VERTICES {
                bail!("budget {budget} exceeds the {}-vertex cap", domseq::MAX_VERTICES);
            }
            (0..count)
                .map(|i| {
                    let spec = GenSpec::random(seed.wrapping_add(i as u64), budget);
                    let (g, _) = gen_k_uniform(&spec)?;
                    Ok((g, Some(spec)))
                })
                .collect::<Result<_>>()?
        }
    };

    for (g, spec) in batch {
        let record = GenerateRecord {
            graph6: graph6_string(&g),
            n: g.n(),
            edges: g.edge_count(),
            claimed_k: spec.as_ref().map(GenSpec::implied_k),
            spec,
        };
        match output {
            OutputMode::Structured => println!("{}", serde_json::to_string(&record)?),
            OutputMode::Human => {
                println!("{}", record.graph6);
                if let Some(k) = record.claimed_k {
                    eprintln!(
                        "# n={} edges={} claimed_k={} spec={}",
                        record.n,
                        record.edges,
                        k,
                        serde_json::to_string(&record.spec)?
                    );
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct VerifySizeRecord {
    n: usize,
    graphs: u64,
    elapsed_ms: u128,
    checks: Vec<VerifyCheckRecord>,
}

#[derive(Serialize)]
struct VerifyCheckRecord {
    name: &'static str,
    checked: u64,
    failures: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    first_failure: Option<FailureRecord>,
}

#[derive(Serialize)]
struct FailureRecord {
    graph6: String,
    detail: String,
}

fn verify(max_n: usize, opt_in_n8: bool, output: OutputMode) -> Result<ExitCode> {
    let limit = if opt_in_n8 { 8 } else { 7 };
    if max_n == 0 || max_n > limit {
        bail!(
            "verify supports 1 <= n <= {limit}{}",
            if opt_in_n8 { "" } else { " (use --opt-in-n8 for the n=8 sweep)" }
        );
    }
    let mut failures = 0u64;
    for n in 1..=max_n {
        let start = Instant::now();
        let sweep = sweep_size(n)?;
        let elapsed = start.elapsed();
        failures += sweep.checks.total_failures();
        match output {
            OutputMode::Structured => {
                let record = VerifySizeRecord {
                    n,
                    graphs: sweep.graphs,
                    elapsed_ms: elapsed.as_millis(),
                    checks: sweep
                        .checks
                        .named()
                        .into_iter()
                        .map(|(name, c)| VerifyCheckRecord {
                            name,
                            checked: c.checked,
                            failures: c.failures,
                            first_failure: c.first_failure.as_ref().map(|f| FailureRecord {
                                graph6: f.graph6.clone(),
                                detail: f.detail.clone(),
                            }),
                        })
                        .collect(),
                };
                println!("{}", serde_json::to_string(&record)?);
            }
            OutputMode::Human => {
                println!("n={n}: {} graphs in {elapsed:.1?}", sweep.graphs);
                for (name, counter) in sweep.checks.named() {
                    print!(
                        "  {name}: {} checked, {} failures",
                        counter.checked, counter.failures
                    );
                    match &counter.first_failure {
                        Some(f) => println!("  [first: {} — {}]", f.graph6, f.detail),
                        None => println!(),
                    }
                }
            }
        }
    }
    if failures > 0 {
        eprintln!("verification FAILED with {failures} counterexamples");
        Ok(ExitCode::from(2))
    } else {
        if output == OutputMode::Human {
            println!("all checks passed, zero counterexamples");
        }
        Ok(ExitCode::SUCCESS)
    }
}
