//! Brute-force reference computations.
//!
//! Everything in this file exists to check the real algorithms, so it must
//! not share code with them: no imports from `decomp`, `witness`, or
//! `incomp`, only direct queries against the poset. A source-level test
//! enforces that rule. Exhaustive search keeps these honest and slow — the
//! antichain oracle is guarded at 24 elements.

use alloc::vec;
use core::fmt;

use crate::poset::{ElementId, RealisticPoset};
use crate::Verdict;

/// Largest poset the exponential antichain search accepts.
pub const MAX_ANTICHAIN_ORACLE_LIMIT: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleError {
    TooLarge { n: usize, limit: usize },
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            OracleError::TooLarge { n, limit } => {
                write!(f, "poset has {n} elements, oracle accepts at most {limit}")
            }
        }
    }
}

impl core::error::Error for OracleError {}

/// Size of a maximum antichain, by branch-and-bound over comparability
/// bitmasks (an antichain is an independent set of the comparability graph).
pub fn oracle_max_antichain(p: &RealisticPoset) -> Result<usize, OracleError> {
    let n = p.len();
    if n > MAX_ANTICHAIN_ORACLE_LIMIT {
        return Err(OracleError::TooLarge { n, limit: MAX_ANTICHAIN_ORACLE_LIMIT });
    }
    let mut comp = vec![0u32; n];
    for i in 0..n {
        for j in i + 1..n {
            if p.is_comparable(ElementId::new(i as u32), ElementId::new(j as u32)) {
                comp[i] |= 1 << j;
                comp[j] |= 1 << i;
            }
        }
    }
    let all = (1u32 << n) - 1; // n <= 24 < 32
    let mut best = 0;
    branch(all, 0, &comp, &mut best);
    Ok(best)
}

fn branch(candidates: u32, size: usize, comp: &[u32], best: &mut usize) {
    if size + candidates.count_ones() as usize <= *best {
        return;
    }
    if candidates == 0 {
        *best = size;
        return;
    }
    let v = candidates.trailing_zeros() as usize;
    // Take v first so the bound tightens early.
    branch(candidates & !comp[v] & !(1 << v), size + 1, comp, best);
    branch(candidates & !(1 << v), size, comp, best);
}

/// Number of elements on a longest chain, by dynamic programming downward in
/// coordinate order over the successor rows.
pub fn oracle_longest_chain(p: &RealisticPoset) -> usize {
    let mut len_from = vec![0usize; p.len()];
    let mut best = 0;
    for &x in p.by_coord().iter().rev() {
        let tail = p
            .strictly_above(x)
            .iter()
            .map(|&s| len_from[s.index()])
            .max()
            .unwrap_or(0);
        len_from[x.index()] = 1 + tail;
        best = best.max(len_from[x.index()]);
    }
    best
}

/// Which relationship the witness union must have with the target set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoverCheck {
    /// Union of witness incomparables equals the target exactly.
    Exact,
    /// Union of witness incomparables contains the target.
    Contains,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoverViolation {
    /// A target element incomparable to no witness.
    NotCovered(ElementId),
    /// An element incomparable to some witness but outside the target
    /// (`Exact` mode only).
    Extraneous(ElementId),
}

impl fmt::Display for CoverViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            CoverViolation::NotCovered(e) => write!(f, "element {e} is not covered"),
            CoverViolation::Extraneous(e) => write!(f, "element {e} is covered but not targeted"),
        }
    }
}

/// Checks `union of incomparables(w) over witnesses` against `target`, by
/// direct pairwise comparability tests.
pub fn oracle_verify_cover(
    p: &RealisticPoset,
    target: &[ElementId],
    witnesses: &[ElementId],
    check: CoverCheck,
) -> Verdict<CoverViolation> {
    let mut in_target = vec![false; p.len()];
    for &t in target {
        in_target[t.index()] = true;
    }
    for &t in target {
        let covered = witnesses.iter().any(|&w| !p.is_comparable(w, t));
        if !covered {
            return Verdict::Fail(CoverViolation::NotCovered(t));
        }
    }
    if check == CoverCheck::Exact {
        for &v in p.by_coord() {
            if in_target[v.index()] {
                continue;
            }
            if witnesses.iter().any(|&w| !p.is_comparable(w, v)) {
                return Verdict::Fail(CoverViolation::Extraneous(v));
            }
        }
    }
    Verdict::Pass
}
