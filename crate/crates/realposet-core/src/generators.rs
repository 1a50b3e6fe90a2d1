//! Seeded poset generators for tests and the self-test harness.
//!
//! Reproducibility is part of the contract: the same spec must yield the
//! same poset on every platform, forever. All randomness therefore flows
//! through [`Stream`], a thin wrapper over ChaCha8 that performs its own
//! integer reductions — no range or distribution helpers whose rounding
//! could drift between library versions.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coord::Coord;
use crate::poset::{ElementId, RealisticPoset};

/// Denominator for interval-order endpoints.
pub const INTERVAL_DENOM: i64 = 1 << 20;

/// A deterministic random stream, split by `(seed, stream_id)` so that
/// independent trials can draw from unrelated streams of one seed.
pub struct Stream(ChaCha8Rng);

impl Stream {
    pub fn new(seed: u64, stream_id: u64) -> Self {
        // Expand the 64-bit seed into the 256-bit key so that nearby seeds
        // do not share key bytes.
        let mut state = seed;
        let mut key = [0u8; 32];
        for chunk in key.chunks_exact_mut(8) {
            chunk.copy_from_slice(&splitmix64(&mut state).to_le_bytes());
        }
        let mut rng = ChaCha8Rng::from_seed(key);
        rng.set_stream(stream_id);
        Stream(rng)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform-ish draw from `[0, bound)` by modulo reduction. The bias is
    /// below 2^-40 for every bound used here, far beneath statistical
    /// relevance, and the reduction is trivially portable.
    pub fn below(&mut self, bound: u64) -> u64 {
        debug_assert!(bound > 0);
        self.next_u64() % bound
    }

    /// True with probability exactly `p` (for the ideal uniform `u64`):
    /// draws `u` and accepts iff `u * denom < numer * 2^64`.
    pub fn bernoulli(&mut self, p: Coord) -> bool {
        assert!(
            p >= Coord::integer(0) && p <= Coord::integer(1),
            "probability must lie in [0, 1]"
        );
        let u = self.next_u64() as u128;
        u * (p.denom() as u128) < (p.numer() as u128) << 64
    }

    /// Fisher–Yates shuffle.
    pub fn shuffle<T>(&mut self, xs: &mut [T]) {
        for i in (1..xs.len()).rev() {
            let j = self.below(i as u64 + 1) as usize;
            xs.swap(i, j);
        }
    }
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Everything needed to regenerate a poset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GenSpec {
    /// Integer coordinates `1..=n`; each forward pair related independently
    /// with probability `edge_prob`.
    ForwardDag { n: u32, edge_prob: Coord, seed: u64 },
    /// Elements dealt round-robin over a shuffled order into `k` chains;
    /// forward pairs across chains added with probability `cross_prob`.
    /// Width never exceeds `k`.
    KChains { n: u32, k: u32, cross_prob: Coord, seed: u64 },
    /// Random rational intervals; `x ≺ y` iff `x`'s interval ends before
    /// `y`'s starts. Coordinates are the (pairwise distinct) left endpoints.
    IntervalOrder { n: u32, seed: u64 },
}

impl GenSpec {
    pub fn generate(&self) -> RealisticPoset {
        match *self {
            GenSpec::ForwardDag { n, edge_prob, seed } => gen_forward_dag(n, edge_prob, seed),
            GenSpec::KChains { n, k, cross_prob, seed } => gen_k_chains(n, k, cross_prob, seed),
            GenSpec::IntervalOrder { n, seed } => gen_interval_order(n, seed),
        }
    }

    /// One-line echo for reports.
    pub fn describe(&self) -> String {
        match *self {
            GenSpec::ForwardDag { n, edge_prob, seed } => {
                format!("kind=forward_dag n={n} param={edge_prob} seed={seed}")
            }
            GenSpec::KChains { n, k, cross_prob, seed } => {
                format!("kind=k_chains n={n} param={k} cross={cross_prob} seed={seed}")
            }
            GenSpec::IntervalOrder { n, seed } => {
                format!("kind=interval_order n={n} seed={seed}")
            }
        }
    }
}

/// Random DAG on integer coordinates `1..=n`: every pair `(i, j)` with
/// `i < j` is related with probability `edge_prob`.
pub fn gen_forward_dag(n: u32, edge_prob: Coord, seed: u64) -> RealisticPoset {
    let mut stream = Stream::new(seed, 0);
    let coords = (1..=i64::from(n)).map(Coord::integer).collect();
    let mut relations = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if stream.bernoulli(edge_prob) {
                relations.push((ElementId::new(i), ElementId::new(j)));
            }
        }
    }
    RealisticPoset::build(coords, &relations)
        .expect("distinct integer coordinates and forward pairs always build")
}

/// Poset of width at most `k`: a shuffled round-robin deal into `k` chains
/// (each fully related along the coordinate order), plus random forward
/// cross-chain pairs. Requires `1 <= k <= n`.
pub fn gen_k_chains(n: u32, k: u32, cross_prob: Coord, seed: u64) -> RealisticPoset {
    assert!(k >= 1 && k <= n, "need 1 <= k <= n");
    let mut stream = Stream::new(seed, 0);
    let mut order: Vec<u32> = (0..n).collect();
    stream.shuffle(&mut order);
    let mut chain_of = alloc::vec![0u32; n as usize];
    for (slot, &e) in order.iter().enumerate() {
        chain_of[e as usize] = slot as u32 % k;
    }

    let coords = (1..=i64::from(n)).map(Coord::integer).collect();
    let mut relations = Vec::new();
    // Consecutive same-chain members; closure fills in the rest.
    let mut last_of: Vec<Option<u32>> = alloc::vec![None; k as usize];
    for e in 0..n {
        let c = chain_of[e as usize] as usize;
        if let Some(prev) = last_of[c] {
            relations.push((ElementId::new(prev), ElementId::new(e)));
        }
        last_of[c] = Some(e);
    }
    for i in 0..n {
        for j in i + 1..n {
            if chain_of[i as usize] != chain_of[j as usize] && stream.bernoulli(cross_prob) {
                relations.push((ElementId::new(i), ElementId::new(j)));
            }
        }
    }
    RealisticPoset::build(coords, &relations)
        .expect("distinct integer coordinates and forward pairs always build")
}

/// Interval order: element `i` owns `[l_i, r_i]` with rational endpoints on
/// the grid `1/2^20`, left endpoints pairwise distinct (collisions are
/// redrawn), and `i ≺ j` iff `r_i < l_j`.
pub fn gen_interval_order(n: u32, seed: u64) -> RealisticPoset {
    let mut stream = Stream::new(seed, 0);
    let mut lefts: Vec<i64> = Vec::with_capacity(n as usize);
    let mut rights: Vec<i64> = Vec::with_capacity(n as usize);
    let mut used: Vec<i64> = Vec::new();
    for _ in 0..n {
        let l = loop {
            let l = stream.below(INTERVAL_DENOM as u64) as i64;
            if let Err(slot) = used.binary_search(&l) {
                used.insert(slot, l);
                break l;
            }
        };
        let len = stream.below(INTERVAL_DENOM as u64) as i64;
        lefts.push(l);
        rights.push(l + len);
    }
    let coords = lefts
        .iter()
        .map(|&l| Coord::new(l, INTERVAL_DENOM).expect("nonzero denominator"))
        .collect();
    let mut relations = Vec::new();
    for (i, &r) in rights.iter().enumerate() {
        for (j, &l) in lefts.iter().enumerate() {
            if r < l {
                relations.push((ElementId::new(i as u32), ElementId::new(j as u32)));
            }
        }
    }
    RealisticPoset::build(coords, &relations)
        .expect("interval containment always yields a realistic order")
}
