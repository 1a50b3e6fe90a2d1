//! Command-line front end: poset files in, reports/DOT/documents out.
//!
//! Exit codes: 0 success and every verdict passed, 1 a verification
//! verdict failed, 2 malformed input or usage. The one nuance is
//! `validate`, whose whole purpose is judging the input: there a
//! structurally broken poset is the *verdict* (`valid=fail(..)`, exit 1),
//! while a file that doesn't even parse stays an input error (exit 2).

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use realposet_core::coord::Coord;
use realposet_core::decomp::{
    antichain_layering, chain_partition, disjointify, extend_to_maximal_chain, height,
    verify_antichain_partition, verify_chain_partition, width,
};
use realposet_core::generators::GenSpec;
use realposet_core::incomp::{check_interval_structure, components, count_nontrivial_components, IncompGraph};
use realposet_core::oracles::{oracle_verify_cover, CoverCheck};
use realposet_core::poset::{ElementId, RealisticPoset};
use realposet_core::witness::{cover_incomparables, determining_subchain, verify_unique_extension};

pub mod dot;
pub mod format;
pub mod report;
pub mod selftest;

use dot::{export_dot, Overlay};
use format::{format_poset, parse_poset, ParseError};
use report::{ids_csv, sha256_hex, Report};
use selftest::{run_selftest, SelftestConfig};

#[derive(Parser)]
#[command(name = "realposet", version)]
#[command(about = "Decompositions and witness chains for posets on rational coordinates")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Kind {
    #[value(name = "forward_dag")]
    ForwardDag,
    #[value(name = "k_chains")]
    KChains,
    #[value(name = "interval_order")]
    IntervalOrder,
}

#[derive(Subcommand)]
pub enum Command {
    /// Generate a poset document from a seeded random family
    Gen {
        #[arg(long, value_enum)]
        kind: Kind,
        /// Number of elements
        #[arg(long)]
        n: u32,
        /// forward_dag: edge probability as p/q (default 1/2);
        /// k_chains: chain count k (default 2); interval_order: none
        #[arg(long)]
        param: Option<String>,
        /// k_chains only: cross-chain relation probability p/q (default 1/4)
        #[arg(long)]
        cross: Option<String>,
        #[arg(long)]
        seed: u64,
        /// Write the document here instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the order invariants of a poset file
    Validate { file: PathBuf },
    /// Width, height, and incomparability component structure
    Analyze { file: PathBuf },
    /// Minimum partition into chains
    Chains {
        file: PathBuf,
        /// Emit DOT with chain coloring instead of a report
        #[arg(long)]
        dot: bool,
        /// Extend each chain to a maximal one, then re-disjointify
        #[arg(long)]
        via_maximal: bool,
    },
    /// Partition into antichain layers
    Antichains {
        file: PathBuf,
        /// Emit DOT with layers pinned to shared ranks
        #[arg(long)]
        dot: bool,
    },
    /// Witness cover for a chain given by ids, e.g. --chain 1,3,5
    Witness {
        file: PathBuf,
        #[arg(long)]
        chain: String,
        /// Also compute the determining subchain and verify by enumeration
        #[arg(long)]
        determining: bool,
    },
    /// Run the randomized property suite
    Selftest {
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long, default_value_t = 12)]
        max_n: u32,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {err}")]
    Io { path: PathBuf, err: io::Error },
    #[error("{path}: {err}")]
    Parse { path: PathBuf, err: ParseError },
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

pub fn run(cli: Cli) -> i32 {
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn dispatch(cmd: Command) -> Result<i32, CliError> {
    match cmd {
        Command::Gen { kind, n, param, cross, seed, out } => cmd_gen(kind, n, param, cross, seed, out),
        Command::Validate { file } => cmd_validate(&file),
        Command::Analyze { file } => cmd_analyze(&file),
        Command::Chains { file, dot, via_maximal } => cmd_chains(&file, dot, via_maximal),
        Command::Antichains { file, dot } => cmd_antichains(&file, dot),
        Command::Witness { file, chain, determining } => cmd_witness(&file, &chain, determining),
        Command::Selftest { trials, max_n, seed } => {
            let (text, ok) = run_selftest(&SelftestConfig { trials, max_n, seed });
            print!("{text}");
            Ok(i32::from(!ok))
        }
    }
}

fn parse_prob(s: &str, flag: &str) -> Result<Coord, CliError> {
    let p: Coord = s
        .parse()
        .map_err(|e| usage(format!("{flag} {s:?}: {e}")))?;
    if p < Coord::integer(0) || p > Coord::integer(1) {
        return Err(usage(format!("{flag} must lie in [0, 1], got {p}")));
    }
    Ok(p)
}

fn cmd_gen(
    kind: Kind,
    n: u32,
    param: Option<String>,
    cross: Option<String>,
    seed: u64,
    out: Option<PathBuf>,
) -> Result<i32, CliError> {
    if cross.is_some() && !matches!(kind, Kind::KChains) {
        return Err(usage("--cross only applies to --kind k_chains"));
    }
    let spec = match kind {
        Kind::ForwardDag => GenSpec::ForwardDag {
            n,
            edge_prob: match &param {
                Some(s) => parse_prob(s, "--param")?,
                None => Coord::new(1, 2).unwrap(),
            },
            seed,
        },
        Kind::KChains => {
            let k: u32 = match &param {
                Some(s) => s
                    .parse()
                    .map_err(|_| usage(format!("--param {s:?}: expected chain count")))?,
                None => 2.min(n.max(1)),
            };
            if k == 0 || k > n.max(1) {
                return Err(usage(format!("--param {k} must lie in 1..={}", n.max(1))));
            }
            GenSpec::KChains {
                n,
                k,
                cross_prob: match &cross {
                    Some(s) => parse_prob(s, "--cross")?,
                    None => Coord::new(1, 4).unwrap(),
                },
                seed,
            }
        }
        Kind::IntervalOrder => {
            if param.is_some() {
                return Err(usage("--param does not apply to --kind interval_order"));
            }
            GenSpec::IntervalOrder { n, seed }
        }
    };
    let p = spec.generate();
    let text = format!("# {}\n{}", spec.describe(), format_poset(&p));
    match out {
        Some(path) => fs::write(&path, text).map_err(|err| CliError::Io { path, err })?,
        None => print!("{text}"),
    }
    Ok(0)
}

fn read_input(path: &Path) -> Result<(String, String), CliError> {
    let text = fs::read_to_string(path).map_err(|err| CliError::Io {
        path: path.to_owned(),
        err,
    })?;
    let hash = format!("sha256:{}", sha256_hex(text.as_bytes()));
    Ok((text, hash))
}

/// Parse for a command that merely consumes the poset: any failure,
/// including build failures, is an input error.
fn load_poset(path: &Path) -> Result<(RealisticPoset, String), CliError> {
    let (text, hash) = read_input(path)?;
    let p = parse_poset(&text).map_err(|err| CliError::Parse {
        path: path.to_owned(),
        err,
    })?;
    Ok((p, hash))
}

fn cmd_validate(path: &Path) -> Result<i32, CliError> {
    let (text, hash) = read_input(path)?;
    let mut r = Report::new();
    r.push("input", &hash);
    match parse_poset(&text) {
        Ok(p) => {
            r.push("n", p.len());
            r.verdict("valid", &p.validate());
        }
        // The document is well-formed but names no realistic poset; that
        // is this command's negative verdict, not a usage error.
        Err(ParseError::Build(e)) => {
            r.push("valid", format_args!("fail({e})"));
            print!("{r}");
            return Ok(1);
        }
        Err(err) => {
            return Err(CliError::Parse {
                path: path.to_owned(),
                err,
            })
        }
    }
    print!("{r}");
    Ok(r.exit_code())
}

fn cmd_analyze(path: &Path) -> Result<i32, CliError> {
    let (p, hash) = load_poset(path)?;
    let mut r = Report::new();
    r.push("input", &hash);
    r.push("n", p.len());
    r.push("width", width(&p));
    r.push("height", height(&p));
    let g = IncompGraph::build(&p);
    let comps = components(&g, &p);
    r.push("components", comps.len());
    r.push("components_nontrivial", count_nontrivial_components(&comps));
    for (i, c) in comps.iter().enumerate() {
        r.push(&format!("hull_{i}"), format_args!("{}..{}", c.lo, c.hi));
    }
    r.verdict("interval_structure", &check_interval_structure(&p, &comps));
    print!("{r}");
    Ok(r.exit_code())
}

fn cmd_chains(path: &Path, dot: bool, via_maximal: bool) -> Result<i32, CliError> {
    let (p, hash) = load_poset(path)?;
    let cp = if via_maximal {
        let maximal: Result<Vec<_>, _> = chain_partition(&p)
            .chains
            .iter()
            .map(|c| extend_to_maximal_chain(&p, c))
            .collect();
        let maximal = maximal.map_err(|e| usage(format!("extension failed: {e}")))?;
        disjointify(&p, &maximal).map_err(|e| usage(format!("disjointify failed: {e}")))?
    } else {
        chain_partition(&p)
    };
    if dot {
        print!("{}", export_dot(&p, Overlay::Chains(&cp)));
        return Ok(0);
    }
    let mut r = Report::new();
    r.push("input", &hash);
    r.push("n", p.len());
    r.push("construction", if via_maximal { "via_maximal" } else { "minimum" });
    r.push("width", width(&p));
    r.push("chains", cp.chains.len());
    for (i, c) in cp.chains.iter().enumerate() {
        r.push(&format!("chain_{i}"), ids_csv(c));
    }
    r.verdict("partition", &verify_chain_partition(&p, &cp));
    print!("{r}");
    Ok(r.exit_code())
}

fn cmd_antichains(path: &Path, dot: bool) -> Result<i32, CliError> {
    let (p, hash) = load_poset(path)?;
    let ap = antichain_layering(&p);
    if dot {
        print!("{}", export_dot(&p, Overlay::Antichains(&ap)));
        return Ok(0);
    }
    let mut r = Report::new();
    r.push("input", &hash);
    r.push("n", p.len());
    r.push("height", height(&p));
    r.push("antichains", ap.layers.len());
    for (i, layer) in ap.layers.iter().enumerate() {
        r.push(&format!("antichain_{i}"), ids_csv(layer));
    }
    r.verdict("partition", &verify_antichain_partition(&p, &ap));
    print!("{r}");
    Ok(r.exit_code())
}

fn parse_chain_flag(s: &str, n: usize) -> Result<Vec<ElementId>, CliError> {
    let mut ids = Vec::new();
    for tok in s.split(',') {
        let tok = tok.trim();
        let id: u32 = tok
            .parse()
            .map_err(|_| usage(format!("--chain: bad element id {tok:?}")))?;
        if id as usize >= n {
            return Err(usage(format!("--chain: element id {id} out of range (n={n})")));
        }
        ids.push(ElementId::new(id));
    }
    Ok(ids)
}

fn cmd_witness(path: &Path, chain: &str, determining: bool) -> Result<i32, CliError> {
    let (p, hash) = load_poset(path)?;
    let ids = parse_chain_flag(chain, p.len())?;
    let cover = cover_incomparables(&p, &ids).map_err(|e| usage(format!("--chain: {e}")))?;
    let mut r = Report::new();
    r.push("input", &hash);
    r.push("n", p.len());
    r.push("chain", ids_csv(&cover.base_chain));
    r.push("target", ids_csv(&cover.target));
    r.push("witnesses", ids_csv(&cover.witnesses));
    r.verdict(
        "cover",
        &oracle_verify_cover(&p, &cover.target, &cover.witnesses, CoverCheck::Exact),
    );
    if determining {
        let xs = determining_subchain(&p, &cover.base_chain)
            .map_err(|e| usage(format!("--determining: {e}")))?;
        r.push("determining", ids_csv(&xs));
        let verdict = verify_unique_extension(&p, &xs, &cover.base_chain)
            .map_err(|e| usage(format!("--determining: {e}")))?;
        r.verdict("unique_extension", &verdict);
    }
    print!("{r}");
    Ok(r.exit_code())
}
