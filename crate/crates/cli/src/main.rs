//! Command-line surface for the covering-energy library: graph generation,
//! minimum covering search, energy and characteristic polynomial
//! computation, the seeded verification corpus, and the closed-form tables.
//!
//! Exit codes: 0 success, 1 validation/usage error, 2 I/O error,
//! 3 verification counterexample.

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use cover_energy::covering::{
    min_2_covering_bruteforce_with_bound, min_2_covering_exact,
    min_3_covering_bruteforce_with_bound, min_3_covering_exact, CoverSet,
};
use cover_energy::families::{
    gen_complete, gen_path, gen_random, gen_star_rays, radicand_discrepancy_report,
    star3_energy_closed, StarParams,
};
use cover_energy::io::{parse_graph_auto, round_sig, write_edge_list, write_json};
use cover_energy::spectral::{build_covering_matrix, char_poly, covering_energy};
use cover_energy::verify::{run_verify, VerifyConfig, MIN_CORPUS_N};
use cover_energy::Graph;
use serde::Serialize;
use std::path::PathBuf;
use std::process::ExitCode;

/// Environment variable overriding the brute-force search bound.
const MAX_N_ENV: &str = "COVER_ENERGY_MAX_N";
const DEFAULT_SEARCH_BOUND: usize = 20;

#[derive(Parser)]
#[command(
    name = "cover-energy",
    version,
    about = "Minimum 3-path coverings, covering matrices and covering energy"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Star,
    Path,
    Complete,
    Random,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Edgelist,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Exact,
    Bruteforce,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFamily {
    Star3,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph from a family and print it
    Gen {
        #[arg(long)]
        family: Family,
        /// Ray count (star family)
        #[arg(long)]
        m: Option<usize>,
        /// Ray length (star family)
        #[arg(long = "ray-len")]
        ray_len: Option<usize>,
        /// Vertex count (path, complete, random families)
        #[arg(long)]
        n: Option<usize>,
        /// Edge probability (random family)
        #[arg(long)]
        p: Option<f64>,
        /// RNG seed (random family)
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Edgelist)]
        format: OutputFormat,
    },
    /// Search for a minimum covering of a graph file
    Mincover {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Exact)]
        method: Method,
        /// Covering order: 2 (vertex cover) or 3 (3-path covering)
        #[arg(long, default_value_t = 3)]
        k: u8,
    },
    /// Covering energy of a graph file under a cover set
    Energy {
        #[arg(long = "in")]
        input: PathBuf,
        /// Comma-separated vertex ids, e.g. "0,3,5"
        #[arg(long)]
        cover: Option<String>,
        /// Use the exact minimum 3-covering as the cover
        #[arg(long = "min-cover")]
        min_cover: bool,
    },
    /// Exact integer characteristic polynomial of the covering matrix
    Charpoly {
        #[arg(long = "in")]
        input: PathBuf,
        /// Comma-separated vertex ids; defaults to the cover embedded in a
        /// JSON input
        #[arg(long)]
        cover: Option<String>,
    },
    /// Run the seeded random-graph property corpus
    Verify {
        #[arg(long, default_value_t = 2000)]
        trials: u64,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long = "max-n", default_value_t = 12)]
        max_n: usize,
    },
    /// Closed-form versus numeric energy table (CSV)
    FamilyTable {
        #[arg(long, value_enum)]
        family: TableFamily,
        #[arg(long = "m-from")]
        m_from: usize,
        #[arg(long = "m-to")]
        m_to: usize,
    },
    /// Radicand discrepancy report for the star cubic (JSON)
    Discrepancy {
        #[arg(long = "m-from", default_value_t = 2)]
        m_from: usize,
        #[arg(long = "m-to", default_value_t = 50)]
        m_to: usize,
    },
}

enum CliError {
    Usage(String),
    Io(String),
    Counterexample,
}

impl CliError {
    fn usage(msg: impl Into<String>) -> CliError {
        CliError::Usage(msg.into())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Counterexample) => ExitCode::from(3),
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Gen { family, m, ray_len, n, p, seed, format } => {
            let graph = generate(family, m, ray_len, n, p, seed)?;
            match format {
                OutputFormat::Edgelist => print!("{}", write_edge_list(&graph)),
                OutputFormat::Json => print!("{}", write_json(&graph, None)),
            }
            Ok(())
        }
        Command::Mincover { input, method, k } => mincover(&input, method, k),
        Command::Energy { input, cover, min_cover } => energy(&input, cover, min_cover),
        Command::Charpoly { input, cover } => charpoly_cmd(&input, cover),
        Command::Verify { trials, seed, max_n } => verify(trials, seed, max_n),
        Command::FamilyTable { family: TableFamily::Star3, m_from, m_to } => {
            family_table(m_from, m_to)
        }
        Command::Discrepancy { m_from, m_to } => discrepancy(m_from, m_to),
    }
}

fn require<T>(value: Option<T>, flag: &str, family: &str) -> Result<T, CliError> {
    value.ok_or_else(|| CliError::usage(format!("--{flag} is required for --family {family}")))
}

fn forbid<T>(value: &Option<T>, flag: &str, family: &str) -> Result<(), CliError> {
    if value.is_some() {
        return Err(CliError::usage(format!(
            "--{flag} does not apply to --family {family}"
        )));
    }
    Ok(())
}

fn generate(
    family: Family,
    m: Option<usize>,
    ray_len: Option<usize>,
    n: Option<usize>,
    p: Option<f64>,
    seed: Option<u64>,
) -> Result<Graph, CliError> {
    match family {
        Family::Star => {
            forbid(&n, "n", "star")?;
            forbid(&p, "p", "star")?;
            forbid(&seed, "seed", "star")?;
            let rays = require(m, "m", "star")?;
            let ray_len = require(ray_len, "ray-len", "star")?;
            gen_star_rays(StarParams { rays, ray_len }).map_err(|e| CliError::usage(e.to_string()))
        }
        Family::Path | Family::Complete => {
            let name = if family == Family::Path { "path" } else { "complete" };
            forbid(&m, "m", name)?;
            forbid(&ray_len, "ray-len", name)?;
            forbid(&p, "p", name)?;
            forbid(&seed, "seed", name)?;
            let n = require(n, "n", name)?;
            Ok(if family == Family::Path { gen_path(n) } else { gen_complete(n) })
        }
        Family::Random => {
            forbid(&m, "m", "random")?;
            forbid(&ray_len, "ray-len", "random")?;
            let n = require(n, "n", "random")?;
            let p = require(p, "p", "random")?;
            let seed = require(seed, "seed", "random")?;
            gen_random(n, p, seed).map_err(|e| CliError::usage(e.to_string()))
        }
    }
}

fn read_graph(path: &PathBuf) -> Result<(Graph, Option<CoverSet>), CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    parse_graph_auto(&text).map_err(|e| CliError::usage(format!("{}: {e}", path.display())))
}

fn parse_cover(spec: &str, g: &Graph) -> Result<CoverSet, CliError> {
    let mut members = Vec::new();
    for part in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let v: usize = part
            .parse()
            .map_err(|_| CliError::usage(format!("bad cover vertex {part:?}")))?;
        members.push(v);
    }
    CoverSet::three(members, g.vertex_count()).map_err(|e| CliError::usage(e.to_string()))
}

fn search_bound() -> Result<usize, CliError> {
    match std::env::var(MAX_N_ENV) {
        Err(_) => Ok(DEFAULT_SEARCH_BOUND),
        Ok(text) => text
            .parse()
            .map_err(|_| CliError::usage(format!("bad {MAX_N_ENV} value {text:?}"))),
    }
}

#[derive(Serialize)]
struct MinCoverJson<'a> {
    k: u8,
    method: &'a str,
    n: usize,
    size: usize,
    cover: &'a [usize],
}

fn mincover(input: &PathBuf, method: Method, k: u8) -> Result<(), CliError> {
    let (g, _) = read_graph(input)?;
    let cover = match (k, method) {
        (3, Method::Exact) => min_3_covering_exact(&g),
        (2, Method::Exact) => min_2_covering_exact(&g),
        (3, Method::Bruteforce) => min_3_covering_bruteforce_with_bound(&g, search_bound()?)
            .map_err(|e| CliError::usage(e.to_string()))?,
        (2, Method::Bruteforce) => min_2_covering_bruteforce_with_bound(&g, search_bound()?)
            .map_err(|e| CliError::usage(e.to_string()))?,
        _ => return Err(CliError::usage(format!("--k must be 2 or 3, got {k}"))),
    };
    let json = serde_json::to_string(&MinCoverJson {
        k,
        method: match method {
            Method::Exact => "exact",
            Method::Bruteforce => "bruteforce",
        },
        n: g.vertex_count(),
        size: cover.len(),
        cover: cover.members(),
    })
    .expect("mincover serializes");
    println!("{json}");
    Ok(())
}

fn energy(input: &PathBuf, cover: Option<String>, min_cover: bool) -> Result<(), CliError> {
    let (g, embedded) = read_graph(input)?;
    if cover.is_some() && min_cover {
        return Err(CliError::usage("--cover and --min-cover are mutually exclusive"));
    }
    let q = if min_cover {
        min_3_covering_exact(&g)
    } else if let Some(spec) = cover {
        parse_cover(&spec, &g)?
    } else if let Some(embedded) = embedded {
        embedded
    } else {
        return Err(CliError::usage(
            "no cover given: pass --cover, --min-cover, or a JSON input with a cover field",
        ));
    };
    let report = covering_energy(&g, &q)
        .map_err(|e| CliError::usage(format!("eigensolver failure: {e}")))?;
    print!("{}", report.to_json_string());
    Ok(())
}

#[derive(Serialize)]
struct CharPolyJson<'a> {
    n: usize,
    cover: &'a [usize],
    /// Decimal strings, λ^n first; exact beyond i64/f64 range.
    coefficients: Vec<String>,
}

fn charpoly_cmd(input: &PathBuf, cover: Option<String>) -> Result<(), CliError> {
    let (g, embedded) = read_graph(input)?;
    let q = match (cover, embedded) {
        (Some(spec), _) => parse_cover(&spec, &g)?,
        (None, Some(embedded)) => embedded,
        (None, None) => {
            return Err(CliError::usage(
                "no cover given: pass --cover or a JSON input with a cover field",
            ))
        }
    };
    let p = char_poly(&build_covering_matrix(&g, &q));
    let json = serde_json::to_string(&CharPolyJson {
        n: g.vertex_count(),
        cover: q.members(),
        coefficients: p.coefficients().iter().map(|c| c.to_string()).collect(),
    })
    .expect("charpoly serializes");
    println!("{json}");
    Ok(())
}

fn verify(trials: u64, seed: u64, max_n: usize) -> Result<(), CliError> {
    if max_n < MIN_CORPUS_N {
        return Err(CliError::usage(format!("--max-n must be at least {MIN_CORPUS_N}")));
    }
    let outcome = run_verify(&VerifyConfig::new(trials, seed, max_n));
    println!("trials: {trials}");
    println!("seed: {seed}");
    println!("max-n: {max_n}");
    for s in &outcome.stats {
        println!("{}: checked {}, failures {}", s.property, s.checked, s.failures);
    }
    for c in &outcome.counterexamples {
        println!("counterexample trial={} property={}", c.trial, c.property);
        println!(
            "cover: {}",
            c.cover.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
        );
        println!("detail: {}", c.detail);
        println!("graph:");
        print!("{}", write_edge_list(&c.graph));
    }
    if outcome.pass() {
        println!("result: pass");
        Ok(())
    } else {
        println!("result: fail");
        Err(CliError::Counterexample)
    }
}

fn fmt_sig(x: f64) -> String {
    round_sig(x, 12).to_string()
}

fn family_table(m_from: usize, m_to: usize) -> Result<(), CliError> {
    if m_from < 2 || m_to < m_from {
        return Err(CliError::usage("need 2 <= m-from <= m-to"));
    }
    println!("m,energy_closed,energy_numeric,abs_diff");
    for m in m_from..=m_to {
        let closed = star3_energy_closed(m).map_err(|e| CliError::usage(e.to_string()))?;
        let g = gen_star_rays(StarParams { rays: m, ray_len: 2 })
            .map_err(|e| CliError::usage(e.to_string()))?;
        let q = CoverSet::three([0], g.vertex_count()).expect("center in range");
        let numeric = covering_energy(&g, &q)
            .map_err(|e| CliError::usage(format!("eigensolver failure: {e}")))?
            .energy;
        println!(
            "{m},{},{},{}",
            fmt_sig(closed),
            fmt_sig(numeric),
            fmt_sig((closed - numeric).abs())
        );
    }
    Ok(())
}

fn discrepancy(m_from: usize, m_to: usize) -> Result<(), CliError> {
    if m_from < 2 || m_to < m_from {
        return Err(CliError::usage("need 2 <= m-from <= m-to"));
    }
    let reports: Vec<_> = (m_from..=m_to).map(radicand_discrepancy_report).collect();
    let json = serde_json::to_string(&reports).expect("reports serialize");
    println!("{json}");
    Ok(())
}
