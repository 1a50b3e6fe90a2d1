//! End-to-end randomized property suite, runnable from the binary.
//!
//! Every trial draws its instance from a stream keyed by (seed, property,
//! trial), so the whole report is a pure function of the flags: same
//! seed, same bytes out. Trials run sequentially; each property counts
//! how many of its trials held and the suite passes only at full score.
//!
//! Properties that lean on an exponential oracle or enumeration clamp
//! their instance size to that check's limit; everything else uses the
//! full `--max-n` range.

use std::fmt::Write as _;

use realposet_core::coord::Coord;
use realposet_core::decomp::{
    antichain_layering, chain_partition, disjointify, extend_to_maximal_chain, height,
    verify_antichain_partition, verify_chain_partition, width,
};
use realposet_core::generators::{GenSpec, Stream};
use realposet_core::incomp::{check_interval_structure, components, IncompGraph};
use realposet_core::oracles::{
    oracle_longest_chain, oracle_max_antichain, oracle_verify_cover, CoverCheck,
};
use realposet_core::witness::{cover_incomparables, determining_subchain, verify_unique_extension};

use crate::format::{format_poset, parse_poset};

#[derive(Clone, Copy)]
pub struct SelftestConfig {
    pub trials: u64,
    pub max_n: u32,
    pub seed: u64,
}

type Prop = fn(&SelftestConfig, u64) -> bool;

/// Kept sorted by name; the report prints in this order.
const PROPS: &[(&str, Prop)] = &[
    ("prop_build_validate", prop_build_validate),
    ("prop_chain_partition_minimum", prop_chain_partition_minimum),
    ("prop_determining_subchain", prop_determining_subchain),
    ("prop_disjointify_partition", prop_disjointify_partition),
    ("prop_interval_components", prop_interval_components),
    ("prop_k_width_bound", prop_k_width_bound),
    ("prop_layering_matches_height", prop_layering_matches_height),
    ("prop_roundtrip_format", prop_roundtrip_format),
    ("prop_witness_cover_exact", prop_witness_cover_exact),
];

/// Instance for (property, trial), clamped to `cap` elements. The stream
/// id spreads property index and trial far apart so no two draws collide.
fn draw(cfg: &SelftestConfig, prop: u64, trial: u64, cap: u32) -> GenSpec {
    let mut s = Stream::new(cfg.seed, (prop << 40) | trial);
    let max_n = cfg.max_n.min(cap).max(1);
    let n = 1 + s.below(max_n as u64) as u32;
    let seed = s.next_u64();
    match trial % 3 {
        0 => GenSpec::ForwardDag {
            n,
            edge_prob: Coord::new(1 + s.below(8) as i64, 8).unwrap(),
            seed,
        },
        1 => GenSpec::KChains {
            n,
            k: 1 + s.below(n.min(5) as u64) as u32,
            cross_prob: Coord::new(s.below(5) as i64, 16).unwrap(),
            seed,
        },
        _ => GenSpec::IntervalOrder { n, seed },
    }
}

fn prop_build_validate(cfg: &SelftestConfig, trial: u64) -> bool {
    let p = draw(cfg, 0, trial, u32::MAX).generate();
    p.validate().is_pass()
}

fn prop_chain_partition_minimum(cfg: &SelftestConfig, trial: u64) -> bool {
    let p = draw(cfg, 1, trial, 16).generate();
    let cp = chain_partition(&p);
    verify_chain_partition(&p, &cp).is_pass()
        && cp.chains.len() == width(&p)
        && oracle_max_antichain(&p).is_ok_and(|w| w == width(&p))
}

fn prop_determining_subchain(cfg: &SelftestConfig, trial: u64) -> bool {
    let p = draw(cfg, 2, trial, 14).generate();
    chain_partition(&p).chains.iter().all(|c| {
        let Ok(ys) = extend_to_maximal_chain(&p, c) else {
            return false;
        };
        let Ok(xs) = determining_subchain(&p, &ys) else {
            return false;
        };
        verify_unique_extension(&p, &xs, &ys).is_ok_and(|v| v.is_pass())
    })
}

fn prop_disjointify_partition(cfg: &SelftestConfig, trial: u64) -> bool {
    let p = draw(cfg, 3, trial, u32::MAX).generate();
    let maximal: Result<Vec<_>, _> = chain_partition(&p)
        .chains
        .iter()
        .map(|c| extend_to_maximal_chain(&p, c))
        .collect();
    let Ok(maximal) = maximal else { return false };
    disjointify(&p, &maximal)
        .is_ok_and(|dj| verify_chain_partition(&p, &dj).is_pass())
}

fn prop_interval_components(cfg: &SelftestConfig, trial: u64) -> bool {
    let p = draw(cfg, 4, trial, u32::MAX).generate();
    let g = IncompGraph::build(&p);
    let comps = components(&g, &p);
    check_interval_structure(&p, &comps).is_pass()
        && comps.iter().map(|c| c.vertices.len()).sum::<usize>() == p.len()
}

fn prop_k_width_bound(cfg: &SelftestConfig, trial: u64) -> bool {
    let mut s = Stream::new(cfg.seed, (5 << 40) | trial);
    let n = 1 + s.below(cfg.max_n.max(1) as u64) as u32;
    let k = 1 + s.below(n.min(6) as u64) as u32;
    let spec = GenSpec::KChains {
        n,
        k,
        cross_prob: Coord::new(s.below(4) as i64, 16).unwrap(),
        seed: s.next_u64(),
    };
    width(&spec.generate()) <= k as usize
}

fn prop_layering_matches_height(cfg: &SelftestConfig, trial: u64) -> bool {
    let p = draw(cfg, 6, trial, u32::MAX).generate();
    let ap = antichain_layering(&p);
    verify_antichain_partition(&p, &ap).is_pass()
        && ap.layers.len() == height(&p)
        && height(&p) == oracle_longest_chain(&p)
}

fn prop_roundtrip_format(cfg: &SelftestConfig, trial: u64) -> bool {
    let p = draw(cfg, 7, trial, u32::MAX).generate();
    parse_poset(&format_poset(&p)).is_ok_and(|q| q == p)
}

fn prop_witness_cover_exact(cfg: &SelftestConfig, trial: u64) -> bool {
    let p = draw(cfg, 8, trial, u32::MAX).generate();
    chain_partition(&p).chains.iter().all(|c| {
        let Ok(ys) = extend_to_maximal_chain(&p, c) else {
            return false;
        };
        let Ok(cover) = cover_incomparables(&p, &ys) else {
            return false;
        };
        oracle_verify_cover(&p, &cover.target, &cover.witnesses, CoverCheck::Exact).is_pass()
    })
}

/// Returns the report text and whether every property went clean.
pub fn run_selftest(cfg: &SelftestConfig) -> (String, bool) {
    let mut out = String::new();
    let _ = writeln!(out, "trials={}", cfg.trials);
    let _ = writeln!(out, "max_n={}", cfg.max_n);
    let _ = writeln!(out, "seed={}", cfg.seed);
    let mut all_pass = true;
    for &(name, prop) in PROPS {
        let passes = (0..cfg.trials).filter(|&t| prop(cfg, t)).count() as u64;
        let _ = writeln!(out, "{name}={passes}/{}", cfg.trials);
        all_pass &= passes == cfg.trials;
    }
    let _ = writeln!(out, "selftest={}", if all_pass { "pass" } else { "fail" });
    (out, all_pass)
}
