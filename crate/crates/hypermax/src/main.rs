//! Command-line front end: generators, checker, bounds, search, oracles.
//!
//! Exit codes are a stable scripting contract: 0 success (or a maximal
//! verdict), 1 checked-and-negative verdict, 2 usage or parse error,
//! 3 guard violation or overflow.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use hypermax::connectivity::{
    edge_connectivity, edge_connectivity_bruteforce, is_super_edge_connected, strength,
    strength_bruteforce, StrengthTree,
};
use hypermax::constructions::{
    build_m, build_nt, build_one_max_partition, build_one_max_star, BuildStrategy, TreeSpec,
};
use hypermax::extremal::{
    audit_maximal, is_k_edge_maximal, lower_bound, m_membership, upper_bound, AuditReport,
    MaximalityReport, Witness,
};
use hypermax::search::{csv_table, enumerate_maximal, SearchLimits};
use hypermax::{threshold_t, Error, Hypergraph};

#[derive(Parser)]
#[command(name = "hypermax", version, about = "Edge-connectivity and k-edge-maximality toolkit for r-uniform hypergraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a member of one of the extremal families
    Gen {
        #[command(subcommand)]
        family: GenFamily,
    },
    /// Analyze a hypergraph file and certify k-edge-maximality
    Check(CheckArgs),
    /// Print the size bounds and threshold for (n, k, r)
    Bounds(BoundsArgs),
    /// Exhaustively enumerate k-edge-maximal hypergraphs
    Search(SearchArgs),
    /// Evaluate a definition literally by brute force
    Oracle(OracleArgs),
}

#[derive(Subcommand)]
enum GenFamily {
    /// Complete core plus vertices attached with k edges each (meets the upper bound)
    M {
        #[arg(long)]
        n: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        k: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        r: u64,
        /// Switch to seeded-random edge choices (default: lexicographic)
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Complete blocks along a tree joined by covering crossing edges (meets the lower bound)
    Nt {
        #[arg(long)]
        t: u64,
        #[arg(long)]
        r: u64,
        /// Tree file, or the shorthands path<s> and star<s>
        #[arg(long)]
        tree: String,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The two 1-edge-maximal families
    OneMax {
        #[arg(long)]
        variant: OneMaxVariant,
        #[arg(long)]
        n: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        r: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OneMaxVariant {
    Star,
    Partition,
}

#[derive(Args)]
struct CheckArgs {
    file: PathBuf,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    k: u64,
    /// Also audit the structural consequences of maximality
    #[arg(long)]
    audit: bool,
    /// Include the strength decomposition (text outline, or a tree object
    /// in JSON output)
    #[arg(long)]
    tree: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct BoundsArgs {
    #[arg(long)]
    n: u64,
    #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
    k: u64,
    #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
    r: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    n: u64,
    #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
    k: u64,
    #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
    r: u64,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Write the CSV table here as well as to stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// Write every maximal hypergraph found into this directory
    #[arg(long)]
    dump: Option<PathBuf>,
    /// Disable the minimum-degree pruning rule
    #[arg(long)]
    no_prune: bool,
}

#[derive(Args)]
struct OracleArgs {
    mode: OracleMode,
    file: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleMode {
    /// Brute-force edge-connectivity over all vertex subsets
    Kappa,
    /// Brute-force strength over all induced subhypergraphs
    Strength,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn main() {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Gen { family } => cmd_gen(family),
        Command::Check(args) => cmd_check(args),
        Command::Bounds(args) => cmd_bounds(args),
        Command::Search(args) => cmd_search(args),
        Command::Oracle(args) => cmd_oracle(args),
    };
    std::process::exit(code.unwrap_or_else(|c| c));
}

fn fail(e: &Error) -> i32 {
    eprintln!("error: {e}");
    match e {
        Error::Parse { .. } => 2,
        _ => 3,
    }
}

fn read_file(path: &Path) -> Result<String, i32> {
    fs::read_to_string(path).map_err(|e| {
        eprintln!("error: cannot read {}: {e}", path.display());
        2
    })
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), i32> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| {
            eprintln!("error: cannot write {}: {e}", path.display());
            2
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_gen(family: GenFamily) -> Result<i32, i32> {
    match family {
        GenFamily::M { n, k, r, seed, out } => {
            let strategy = seed.map_or(BuildStrategy::Lexicographic, BuildStrategy::Seeded);
            let h =
                build_m(n as usize, k as usize, r as usize, strategy).map_err(|e| fail(&e))?;
            let bound = upper_bound(n as usize, k as usize, r as usize).map_err(|e| fail(&e))?;
            emit(&h.to_text(), out.as_deref())?;
            eprintln!("edges={} upper_bound={bound}", h.edge_count());
            Ok(0)
        }
        GenFamily::Nt { t, r, tree, seed, out } => {
            let tree = parse_tree_arg(&tree)?;
            let strategy = seed.map_or(BuildStrategy::Lexicographic, BuildStrategy::Seeded);
            let (h, k) =
                build_nt(t as usize, r as usize, &tree, strategy).map_err(|e| fail(&e))?;
            let bound = lower_bound(h.n(), k, r as usize).map_err(|e| fail(&e))?;
            emit(&h.to_text(), out.as_deref())?;
            eprintln!("k={k} edges={} lower_bound={bound}", h.edge_count());
            Ok(0)
        }
        GenFamily::OneMax { variant, n, r, out } => {
            let (n, r) = (n as usize, r as usize);
            let (h, bound) = match variant {
                OneMaxVariant::Star => {
                    (build_one_max_star(n, r).map_err(|e| fail(&e))?, n - r + 1)
                }
                OneMaxVariant::Partition => (
                    build_one_max_partition(n, r).map_err(|e| fail(&e))?,
                    (n + r - 3) / (r - 1),
                ),
            };
            emit(&h.to_text(), out.as_deref())?;
            eprintln!("edges={} bound={bound}", h.edge_count());
            Ok(0)
        }
    }
}

fn parse_tree_arg(arg: &str) -> Result<TreeSpec, i32> {
    for (prefix, build) in [
        ("path", TreeSpec::path as fn(usize) -> hypermax::Result<TreeSpec>),
        ("star", TreeSpec::star as fn(usize) -> hypermax::Result<TreeSpec>),
    ] {
        if let Some(rest) = arg.strip_prefix(prefix) {
            if let Ok(s) = rest.parse::<usize>() {
                return build(s).map_err(|e| fail(&e));
            }
        }
    }
    let text = read_file(Path::new(arg))?;
    TreeSpec::parse_text(&text).map_err(|e| fail(&e))
}

#[derive(Serialize)]
struct BoundsOut {
    t: usize,
    lower: u64,
    upper: u64,
    attains_upper: bool,
}

#[derive(Serialize)]
struct CheckOut<'a> {
    n: usize,
    r: usize,
    m: usize,
    min_degree: usize,
    kappa: Option<usize>,
    strength: usize,
    super_edge_connected: Option<bool>,
    report: &'a MaximalityReport,
    bounds: Option<BoundsOut>,
    m_member: Option<bool>,
    audit: Option<&'a AuditReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    strength_tree: Option<&'a StrengthTree>,
}

fn cmd_check(args: CheckArgs) -> Result<i32, i32> {
    let k = args.k as usize;
    let text = read_file(&args.file)?;
    let h = Hypergraph::parse_text(&text).map_err(|e| fail(&e))?;
    let t = threshold_t(k, h.r()).map_err(|e| fail(&e))?;

    let kappa = if h.n() >= 2 {
        Some(edge_connectivity(&h).map_err(|e| fail(&e))?.0)
    } else {
        None
    };
    let (strength_value, stree) = strength(&h);
    let super_ec = if (2..=20).contains(&h.n()) {
        Some(is_super_edge_connected(&h).map_err(|e| fail(&e))?.0)
    } else {
        None
    };
    let report = is_k_edge_maximal(&h, k);
    let bounds = if k >= 2 && h.n() >= t {
        let lower = lower_bound(h.n(), k, h.r()).map_err(|e| fail(&e))?;
        let upper = upper_bound(h.n(), k, h.r()).map_err(|e| fail(&e))?;
        Some(BoundsOut {
            t,
            lower,
            upper,
            attains_upper: h.edge_count() as u64 == upper,
        })
    } else {
        None
    };
    let m_member = match &bounds {
        Some(b) if report.is_maximal() && b.attains_upper => {
            Some(m_membership(&h, k).map_err(|e| fail(&e))?.is_some())
        }
        _ => None,
    };
    let audit = if args.audit && report.is_maximal() && k >= 2 {
        Some(audit_maximal(&h, k).map_err(|e| fail(&e))?)
    } else {
        None
    };

    if args.format == Format::Json {
        let out = CheckOut {
            n: h.n(),
            r: h.r(),
            m: h.edge_count(),
            min_degree: h.min_degree(),
            kappa,
            strength: strength_value,
            super_edge_connected: super_ec,
            report: &report,
            bounds,
            m_member,
            audit: audit.as_ref(),
            strength_tree: args.tree.then_some(&stree),
        };
        println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
    } else {
        println!("n={} r={} m={}", h.n(), h.r(), h.edge_count());
        println!("k={k} t={t}");
        match kappa {
            Some(v) => println!("kappa={v}"),
            None => println!("kappa=undefined (n < 2)"),
        }
        println!("strength={strength_value}");
        println!("min_degree={}", h.min_degree());
        match super_ec {
            Some(v) => println!("super_edge_connected={v}"),
            None => println!("super_edge_connected=skipped (n outside 2..=20)"),
        }
        println!("verdict={}", report.verdict.as_str());
        match &report.witness {
            Some(Witness::StrengthExceedsK { subset, kappa }) => {
                println!("witness: subset {subset:?} induces kappa={kappa} > k={k}");
            }
            Some(Witness::AddableNonEdge { edge, strength_after }) => {
                println!(
                    "witness: adding edge {edge:?} keeps strength at {strength_after} <= k={k}"
                );
            }
            None => {}
        }
        match &bounds {
            Some(b) => println!(
                "bounds: lower={} upper={} attains_upper={}",
                b.lower, b.upper, b.attains_upper
            ),
            None => println!("bounds: not applicable (k < 2 or n < t)"),
        }
        if let Some(member) = m_member {
            println!("m_member={member}");
        }
        if let Some(a) = &audit {
            print!("{}", a.to_text());
        }
        if args.tree {
            println!("strength decomposition:");
            print!("{}", stree.to_outline());
        }
    }

    let audit_ok = audit.as_ref().is_none_or(AuditReport::all_pass);
    Ok(if report.is_maximal() && audit_ok { 0 } else { 1 })
}

fn cmd_bounds(args: BoundsArgs) -> Result<i32, i32> {
    let (n, k, r) = (args.n as usize, args.k as usize, args.r as usize);
    let t = threshold_t(k, r).map_err(|e| fail(&e))?;
    let lower = lower_bound(n, k, r).map_err(|e| fail(&e))?;
    let upper = upper_bound(n, k, r).map_err(|e| fail(&e))?;
    if args.format == Format::Json {
        let out = serde_json::json!({
            "n": n, "k": k, "r": r, "t": t, "lower": lower, "upper": upper,
        });
        println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
    } else {
        println!("t={t} lower={lower} upper={upper}");
    }
    Ok(0)
}

fn cmd_search(args: SearchArgs) -> Result<i32, i32> {
    let limits = SearchLimits {
        jobs: args.jobs,
        prune: !args.no_prune,
        ..SearchLimits::default()
    };
    let (n, k, r) = (args.n as usize, args.k as usize, args.r as usize);
    let (summary, stream) = enumerate_maximal(n, k, r, &limits).map_err(|e| fail(&e))?;
    let csv = csv_table(std::slice::from_ref(&summary));
    print!("{csv}");
    if let Some(path) = &args.out {
        fs::write(path, &csv).map_err(|e| {
            eprintln!("error: cannot write {}: {e}", path.display());
            2
        })?;
    }
    if let Some(dir) = &args.dump {
        fs::create_dir_all(dir).map_err(|e| {
            eprintln!("error: cannot create {}: {e}", dir.display());
            2
        })?;
        for (i, h) in stream.iter().enumerate() {
            let path = dir.join(format!("max_{n}_{k}_{r}_{i}.hg"));
            fs::write(&path, h.to_text()).map_err(|e| {
                eprintln!("error: cannot write {}: {e}", path.display());
                2
            })?;
        }
    }
    Ok(0)
}

fn cmd_oracle(args: OracleArgs) -> Result<i32, i32> {
    let text = read_file(&args.file)?;
    let h = Hypergraph::parse_text(&text).map_err(|e| fail(&e))?;
    let value = match args.mode {
        OracleMode::Kappa => edge_connectivity_bruteforce(&h).map_err(|e| fail(&e))?,
        OracleMode::Strength => strength_bruteforce(&h).map_err(|e| fail(&e))?,
    };
    println!("{value}");
    Ok(0)
}
