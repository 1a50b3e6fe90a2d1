//! Generator-driven trials: every structural guarantee the library makes,
//! checked against the independent oracles over a mixed diet of random
//! instances. Sizes here stay small enough for debug builds; the binary's
//! self-test and the acceptance suite rerun the same properties at scale.

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
use realposet_core::poset::{ElementId, RealisticPoset};
use realposet_core::witness::{
    cover_incomparables, determining_subchain, verify_unique_extension,
};

/// Rotate through the three generator families, drawing shape parameters
/// from a stream that is independent of the instance's own seed.
fn mixed_spec(trial: u64, seed_base: u64, max_n: u32) -> GenSpec {
    let mut s = Stream::new(seed_base, trial);
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

#[test]
fn chain_decomposition_matches_minimum_everywhere() {
    for trial in 0..300 {
        let spec = mixed_spec(trial, 0xD11_0001, 16);
        let p = spec.generate();
        let cp = chain_partition(&p);
        assert!(
            verify_chain_partition(&p, &cp).is_pass(),
            "{}: invalid partition",
            spec.describe()
        );
        let w = width(&p);
        assert_eq!(cp.chains.len(), w, "{}: partition not minimum", spec.describe());
        assert_eq!(
            w,
            oracle_max_antichain(&p).unwrap(),
            "{}: width off",
            spec.describe()
        );
    }
}

#[test]
fn antichain_layering_matches_longest_chain_everywhere() {
    for trial in 0..300 {
        let spec = mixed_spec(trial, 0xD11_0002, 60);
        let p = spec.generate();
        let ap = antichain_layering(&p);
        assert!(
            verify_antichain_partition(&p, &ap).is_pass(),
            "{}: invalid layering",
            spec.describe()
        );
        let h = height(&p);
        assert_eq!(ap.layers.len(), h, "{}: layer count off", spec.describe());
        assert_eq!(
            h,
            oracle_longest_chain(&p),
            "{}: height off",
            spec.describe()
        );
    }
}

#[test]
fn incomparability_components_are_disjoint_intervals_everywhere() {
    for trial in 0..300 {
        let spec = mixed_spec(trial, 0xD11_0003, 60);
        let p = spec.generate();
        let g = IncompGraph::build(&p);
        let comps = components(&g, &p);
        assert!(
            check_interval_structure(&p, &comps).is_pass(),
            "{}: interval structure violated",
            spec.describe()
        );
        let covered: usize = comps.iter().map(|c| c.vertices.len()).sum();
        assert_eq!(covered, p.len(), "{}: components miss elements", spec.describe());
    }
}

/// Extend every chain of the minimum partition to a maximal chain, then
/// check each one gets an exact incomparability cover by members of the
/// other chains.
#[test]
fn maximal_chains_cover_their_incomparables_everywhere() {
    for trial in 0..200 {
        let spec = mixed_spec(trial, 0xD11_0004, 24);
        let p = spec.generate();
        let cp = chain_partition(&p);
        let maximal: Vec<Vec<ElementId>> = cp
            .chains
            .iter()
            .map(|c| extend_to_maximal_chain(&p, c).unwrap())
            .collect();
        for ys in &maximal {
            let cover = cover_incomparables(&p, ys).unwrap();
            assert!(
                oracle_verify_cover(&p, &cover.target, &cover.witnesses, CoverCheck::Exact)
                    .is_pass(),
                "{}: cover for {:?} not exact",
                spec.describe(),
                ys
            );
            // A maximal chain's incomparables are exactly its complement.
            let mut rest: Vec<ElementId> = p.elements().filter(|x| !ys.contains(x)).collect();
            rest.sort_by_key(|&x| p.rank(x));
            assert_eq!(cover.target, rest, "{}", spec.describe());
        }
        // The disjointified extensions must still partition the ground set.
        let dj = disjointify(&p, &maximal).unwrap();
        assert!(verify_chain_partition(&p, &dj).is_pass(), "{}", spec.describe());
    }
}

#[test]
fn determining_subchains_pin_their_maximal_chain_everywhere() {
    for trial in 0..200 {
        let spec = mixed_spec(trial, 0xD11_0005, 14);
        let p = spec.generate();
        for c in chain_partition(&p).chains {
            let ys = extend_to_maximal_chain(&p, &c).unwrap();
            let xs = determining_subchain(&p, &ys).unwrap();
            assert!(
                verify_unique_extension(&p, &xs, &ys).unwrap().is_pass(),
                "{}: {:?} does not pin {:?}",
                spec.describe(),
                xs,
                ys
            );
        }
    }
}

/// In a two-chain poset the incomparability graph is bipartite across the
/// chains: no two members of one chain are ever incomparable.
#[test]
fn two_chain_posets_have_no_incomparable_pairs_within_a_chain() {
    for trial in 0..200 {
        let mut s = Stream::new(0xD11_0006, trial);
        let n = 2 + s.below(20) as u32;
        let spec = GenSpec::KChains {
            n,
            k: 2,
            cross_prob: Coord::new(s.below(6) as i64, 16).unwrap(),
            seed: s.next_u64(),
        };
        let p = spec.generate();
        for c in chain_partition(&p).chains {
            for (i, &a) in c.iter().enumerate() {
                for &b in &c[i + 1..] {
                    assert!(p.is_comparable(a, b), "{}", spec.describe());
                }
            }
        }
    }
}

#[test]
fn k_chain_posets_never_exceed_width_k() {
    for trial in 0..300 {
        let mut s = Stream::new(0xD11_0007, trial);
        let n = 1 + s.below(40) as u32;
        let k = 1 + s.below(n.min(6) as u64) as u32;
        let spec = GenSpec::KChains {
            n,
            k,
            cross_prob: Coord::new(s.below(4) as i64, 16).unwrap(),
            seed: s.next_u64(),
        };
        let p = spec.generate();
        assert!(
            width(&p) <= k as usize,
            "{}: width {} exceeds {}",
            spec.describe(),
            width(&p),
            k
        );
    }
}

/// Frozen outputs for fixed seeds. Any change to generator consumption
/// order, shuffling, or poset construction shows up here first.
#[test]
fn generator_outputs_are_pinned() {
    let covers = |p: &RealisticPoset| -> Vec<(u32, u32)> {
        p.hasse_covers().iter().map(|&(a, b)| (a.get(), b.get())).collect()
    };

    let p = GenSpec::ForwardDag {
        n: 8,
        edge_prob: Coord::new(1, 2).unwrap(),
        seed: 42,
    }
    .generate();
    assert_eq!(
        covers(&p),
        vec![(0, 1), (0, 2), (1, 4), (1, 5), (2, 5), (3, 4), (4, 6), (4, 7), (5, 7)]
    );
    assert_eq!((width(&p), height(&p)), (3, 4));
    let cp = chain_partition(&p);
    let chains: Vec<Vec<u32>> = cp
        .chains
        .iter()
        .map(|c| c.iter().map(|e| e.get()).collect())
        .collect();
    assert_eq!(chains, vec![vec![0, 1, 5], vec![2, 7], vec![3, 4, 6]]);
    let g = IncompGraph::build(&p);
    assert_eq!(components(&g, &p).len(), 1);

    let q = GenSpec::KChains {
        n: 12,
        k: 3,
        cross_prob: Coord::new(1, 4).unwrap(),
        seed: 7,
    }
    .generate();
    assert_eq!((width(&q), height(&q)), (3, 8));
    assert_eq!(
        covers(&q),
        vec![
            (0, 1), (1, 2), (1, 3), (2, 4), (3, 5), (4, 6), (4, 7),
            (5, 6), (5, 7), (6, 10), (7, 8), (7, 9), (9, 10), (10, 11)
        ]
    );

    let r = GenSpec::IntervalOrder { n: 6, seed: 3 }.generate();
    assert_eq!(covers(&r), vec![(1, 5), (2, 0), (5, 0)]);
    assert_eq!((width(&r), height(&r)), (4, 3));
}
