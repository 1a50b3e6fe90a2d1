//! Chain partitions and antichain layerings.
//!
//! Width is computed as `n - m` where `m` is a maximum matching in the
//! bipartite graph with one left and one right copy of every element and an
//! edge per closed pair `a ≺ b`: matched edges splice elements into paths,
//! and paths through a transitively closed order are chains, so a maximum
//! matching is exactly a minimum chain cover — which equals the maximum
//! antichain size. Height dually comes from peeling minimal elements layer
//! by layer; the number of layers equals the longest chain length because
//! every element sits in the layer indexed by the longest chain ending at it.
//!
//! Everything is deterministic: the matching pivots and the neighbor lists
//! are scanned in ascending coordinate order, so ties always break toward
//! smaller coordinates.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::poset::{ElementId, RealisticPoset};
use crate::Verdict;

/// Disjoint chains covering the ground set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainPartition {
    /// Each chain ascends in coordinate; [`chain_partition`] orders chains by
    /// their minimum coordinate and produces exactly `width` of them.
    pub chains: Vec<Vec<ElementId>>,
}

/// Disjoint antichains covering the ground set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AntichainPartition {
    /// `layers[i]` holds the elements whose longest chain ending at them has
    /// exactly `i + 1` elements; each layer ascends in coordinate.
    pub layers: Vec<Vec<ElementId>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DecompError {
    /// The supplied element set contains an incomparable pair.
    NotAChain { a: ElementId, b: ElementId },
    /// The supplied chains miss `missing`, so no partition can be formed.
    CoverageGap { missing: ElementId },
}

impl fmt::Display for DecompError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            DecompError::NotAChain { a, b } => {
                write!(f, "elements {a} and {b} are incomparable, not a chain")
            }
            DecompError::CoverageGap { missing } => {
                write!(f, "element {missing} is not covered by the supplied chains")
            }
        }
    }
}

impl core::error::Error for DecompError {}

/// Augmenting-path search. `visited` is per-left-pivot scratch; `into[b]` is
/// the left element currently matched into `b`.
fn augment(
    p: &RealisticPoset,
    a: ElementId,
    visited: &mut [bool],
    into: &mut [Option<ElementId>],
) -> bool {
    for &b in p.strictly_above(a) {
        if visited[b.index()] {
            continue;
        }
        visited[b.index()] = true;
        match into[b.index()] {
            None => {
                into[b.index()] = Some(a);
                return true;
            }
            Some(prev) => {
                if augment(p, prev, visited, into) {
                    into[b.index()] = Some(a);
                    return true;
                }
            }
        }
    }
    false
}

/// Runs the matching; returns for every element the next element on its
/// chain, if any.
fn matched_successors(p: &RealisticPoset) -> Vec<Option<ElementId>> {
    let n = p.len();
    let mut into: Vec<Option<ElementId>> = vec![None; n];
    let mut visited = vec![false; n];
    for &a in p.by_coord() {
        visited.fill(false);
        augment(p, a, &mut visited, &mut into);
    }
    let mut next: Vec<Option<ElementId>> = vec![None; n];
    for b in p.elements() {
        if let Some(a) = into[b.index()] {
            next[a.index()] = Some(b);
        }
    }
    next
}

/// Maximum antichain size, via the minimum chain cover.
pub fn width(p: &RealisticPoset) -> usize {
    let matched = matched_successors(p).iter().filter(|s| s.is_some()).count();
    p.len() - matched
}

/// Partitions the ground set into `width` chains.
pub fn chain_partition(p: &RealisticPoset) -> ChainPartition {
    let next = matched_successors(p);
    let mut has_pred = vec![false; p.len()];
    for s in next.iter().flatten() {
        has_pred[s.index()] = true;
    }
    let mut chains = Vec::new();
    for &start in p.by_coord() {
        if has_pred[start.index()] {
            continue;
        }
        let mut chain = vec![start];
        let mut cur = start;
        while let Some(s) = next[cur.index()] {
            chain.push(s);
            cur = s;
        }
        chains.push(chain);
    }
    ChainPartition { chains }
}

/// Grows `chain` to a maximal chain by one ascending-coordinate sweep,
/// inserting every element comparable to all current members.
pub fn extend_to_maximal_chain(
    p: &RealisticPoset,
    chain: &[ElementId],
) -> Result<Vec<ElementId>, DecompError> {
    let mut cur = checked_chain(p, chain)?;
    let mut member = vec![false; p.len()];
    for &c in &cur {
        member[c.index()] = true;
    }
    for &e in p.by_coord() {
        if member[e.index()] {
            continue;
        }
        let pos = cur.partition_point(|&c| p.rank(c) < p.rank(e));
        // Comparability with the nearest members on both sides extends to the
        // whole chain by transitivity.
        let fits = (pos == 0 || p.is_lt(cur[pos - 1], e))
            && (pos == cur.len() || p.is_lt(e, cur[pos]));
        if fits {
            cur.insert(pos, e);
            member[e.index()] = true;
        }
    }
    Ok(cur)
}

/// Restricts each chain to the elements not claimed by an earlier chain,
/// dropping chains that end up empty. The result partitions the ground set
/// into (sub)chains; the relative chain order is preserved.
pub fn disjointify(
    p: &RealisticPoset,
    chains: &[Vec<ElementId>],
) -> Result<ChainPartition, DecompError> {
    let mut seen = vec![false; p.len()];
    let mut out = Vec::new();
    for chain in chains {
        let sorted = p.sorted_by_coord(chain);
        let part: Vec<ElementId> =
            sorted.into_iter().filter(|&e| !seen[e.index()]).collect();
        for &e in &part {
            seen[e.index()] = true;
        }
        if !part.is_empty() {
            out.push(part);
        }
    }
    if let Some(&missing) = p.by_coord().iter().find(|&&e| !seen[e.index()]) {
        return Err(DecompError::CoverageGap { missing });
    }
    Ok(ChainPartition { chains: out })
}

/// Number of elements on a longest chain.
pub fn height(p: &RealisticPoset) -> usize {
    let mut ending_at = vec![0usize; p.len()];
    let mut best = 0;
    for &x in p.by_coord() {
        let head = p
            .strictly_below(x)
            .iter()
            .map(|&b| ending_at[b.index()])
            .max()
            .unwrap_or(0);
        ending_at[x.index()] = 1 + head;
        best = best.max(ending_at[x.index()]);
    }
    best
}

/// Partitions the ground set into `height` antichains by repeatedly removing
/// the minimal elements.
pub fn antichain_layering(p: &RealisticPoset) -> AntichainPartition {
    let mut remaining = vec![0usize; p.len()];
    for x in p.elements() {
        remaining[x.index()] = p.strictly_below(x).len();
    }
    let mut current: Vec<ElementId> =
        p.by_coord().iter().copied().filter(|&x| remaining[x.index()] == 0).collect();
    let mut layers = Vec::new();
    while !current.is_empty() {
        let mut next = Vec::new();
        for &x in &current {
            for &y in p.strictly_above(x) {
                remaining[y.index()] -= 1;
                if remaining[y.index()] == 0 {
                    next.push(y);
                }
            }
        }
        next.sort_by_key(|&y| p.rank(y));
        layers.push(core::mem::replace(&mut current, next));
    }
    AntichainPartition { layers }
}

/// How a claimed partition into chains or antichains fails.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartitionViolation {
    /// `element` is covered `times` times instead of exactly once.
    Coverage { element: ElementId, times: usize },
    /// Part `part` contains the incomparable pair `(a, b)`.
    NotChain { part: usize, a: ElementId, b: ElementId },
    /// Part `part` contains the comparable pair `(a, b)`.
    NotAntichain { part: usize, a: ElementId, b: ElementId },
}

impl fmt::Display for PartitionViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            PartitionViolation::Coverage { element, times } => {
                write!(f, "element {element} appears {times} times across parts")
            }
            PartitionViolation::NotChain { part, a, b } => {
                write!(f, "part {part} holds the incomparable pair ({a},{b})")
            }
            PartitionViolation::NotAntichain { part, a, b } => {
                write!(f, "part {part} holds the comparable pair ({a},{b})")
            }
        }
    }
}

pub fn verify_chain_partition(
    p: &RealisticPoset,
    cp: &ChainPartition,
) -> Verdict<PartitionViolation> {
    if let Verdict::Fail(v) = verify_coverage(p, &cp.chains) {
        return Verdict::Fail(v);
    }
    for (pi, part) in cp.chains.iter().enumerate() {
        let sorted = p.sorted_by_coord(part);
        for w in sorted.windows(2) {
            if !p.is_lt(w[0], w[1]) {
                return Verdict::Fail(PartitionViolation::NotChain {
                    part: pi,
                    a: w[0],
                    b: w[1],
                });
            }
        }
    }
    Verdict::Pass
}

pub fn verify_antichain_partition(
    p: &RealisticPoset,
    ap: &AntichainPartition,
) -> Verdict<PartitionViolation> {
    if let Verdict::Fail(v) = verify_coverage(p, &ap.layers) {
        return Verdict::Fail(v);
    }
    for (pi, part) in ap.layers.iter().enumerate() {
        for (i, &a) in part.iter().enumerate() {
            for &b in &part[i + 1..] {
                if p.is_comparable(a, b) {
                    return Verdict::Fail(PartitionViolation::NotAntichain { part: pi, a, b });
                }
            }
        }
    }
    Verdict::Pass
}

fn verify_coverage(p: &RealisticPoset, parts: &[Vec<ElementId>]) -> Verdict<PartitionViolation> {
    let mut times = vec![0usize; p.len()];
    for part in parts {
        for &e in part {
            times[e.index()] += 1;
        }
    }
    for x in p.elements() {
        if times[x.index()] != 1 {
            return Verdict::Fail(PartitionViolation::Coverage {
                element: x,
                times: times[x.index()],
            });
        }
    }
    Verdict::Pass
}

fn checked_chain(p: &RealisticPoset, chain: &[ElementId]) -> Result<Vec<ElementId>, DecompError> {
    let sorted = p.sorted_by_coord(chain);
    for w in sorted.windows(2) {
        if !p.is_lt(w[0], w[1]) {
            return Err(DecompError::NotAChain { a: w[0], b: w[1] });
        }
    }
    Ok(sorted)
}
