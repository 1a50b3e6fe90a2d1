//! Witness chains: small certifying subsets of a chain.
//!
//! Given a maximal chain `Y`, a handful of its elements usually suffices to
//! pin `Y` down: a subchain `X ⊆ Y` is *determining* when `Y` is the only
//! maximal chain containing `X`. The construction goes through covers by
//! incomparability: if every element incomparable to `Y` is incomparable to
//! some witness `b ∈ X`, then an element comparable to all of `X` is
//! comparable to all of `Y` (it cannot be incomparable to `Y`, or a witness
//! would flag it), so the intersection of the witnesses' comparability cones
//! collapses to `Y` itself by maximality.
//!
//! The witnesses are harvested from walks in the incomparability graph. For
//! a poset split into two chains `X`, `Y`, each graph component meeting `X`
//! is walked from its least to its greatest `X`-member; the walk alternates
//! sides because chains are edge-free, and each `Y`-vertex on it is
//! incomparable to every `X`-element whose coordinate falls between its two
//! `X`-neighbors on the walk — the interval trapping argument that also makes
//! components interval-shaped. Finitely many walk vertices therefore cover
//! all of `X`.
//!
//! Internal `assert!`s here check conclusions that are theorems given the
//! preconditions; if one fires, the implementation (not the caller) is wrong.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::decomp::chain_partition;
use crate::incomp::{components, IncompGraph};
use crate::poset::{ElementId, RealisticPoset};
use crate::Verdict;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessError {
    /// The two supplied sets are not disjoint chains covering everything.
    NotAPartitionIntoTwoChains,
    /// `element` is comparable to the entire partner chain, so no witness on
    /// that chain can cover it.
    UncoverableElement(ElementId),
    /// The supplied set contains an incomparable pair.
    NotAChain { a: ElementId, b: ElementId },
    /// The supplied chain leaves `extender` comparable to all its members.
    NotMaximalChain { extender: ElementId },
    /// The poset exceeds the exhaustive-enumeration guard.
    TooLarge { n: usize, limit: usize },
}

impl fmt::Display for WitnessError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            WitnessError::NotAPartitionIntoTwoChains => {
                write!(f, "input is not a partition into two chains")
            }
            WitnessError::UncoverableElement(x) => {
                write!(f, "element {x} is comparable to the whole partner chain")
            }
            WitnessError::NotAChain { a, b } => {
                write!(f, "elements {a} and {b} are incomparable, not a chain")
            }
            WitnessError::NotMaximalChain { extender } => {
                write!(f, "chain is not maximal: element {extender} extends it")
            }
            WitnessError::TooLarge { n, limit } => {
                write!(f, "poset has {n} elements, enumeration accepts at most {limit}")
            }
        }
    }
}

impl core::error::Error for WitnessError {}

/// A set of witnesses drawn from a base chain, covering a target set by
/// incomparability: every target element is incomparable to some witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessCover {
    /// The chain the witnesses were drawn from, ascending by coordinate.
    pub base_chain: Vec<ElementId>,
    /// Witnesses, a subchain of `base_chain`, ascending by coordinate.
    pub witnesses: Vec<ElementId>,
    /// The covered set, ascending by coordinate. For
    /// [`cover_incomparables`] the union of the witnesses' incomparables
    /// equals this set exactly.
    pub target: Vec<ElementId>,
}

/// For a poset partitioned into two chains, picks witnesses on `y_chain`
/// covering all of `x_chain` by incomparability.
///
/// Witnesses come from breadth-first walks inside each incomparability
/// component that meets `x_chain`; a component that meets it in a single
/// element contributes that element's least-coordinate neighbor.
pub fn cover_partner_chain(
    p: &RealisticPoset,
    x_chain: &[ElementId],
    y_chain: &[ElementId],
) -> Result<WitnessCover, WitnessError> {
    let xs = p.sorted_by_coord(x_chain);
    let ys = p.sorted_by_coord(y_chain);
    if !p.is_chain(&xs) || !p.is_chain(&ys) || xs.len() + ys.len() != p.len() {
        return Err(WitnessError::NotAPartitionIntoTwoChains);
    }
    let mut on_x = vec![false; p.len()];
    for &x in &xs {
        on_x[x.index()] = true;
    }
    if ys.iter().any(|&y| on_x[y.index()]) {
        return Err(WitnessError::NotAPartitionIntoTwoChains);
    }

    let g = IncompGraph::build(p);
    let mut witnesses: Vec<ElementId> = Vec::new();
    for comp in components(&g, p) {
        let a: Vec<ElementId> =
            comp.vertices.iter().copied().filter(|&v| on_x[v.index()]).collect();
        let (&z, &xm) = match (a.first(), a.last()) {
            (Some(z), Some(xm)) => (z, xm),
            _ => continue, // component lies entirely on the y side
        };
        if comp.is_trivial() {
            // A lone x-element is comparable to every y-element.
            return Err(WitnessError::UncoverableElement(z));
        }
        if z == xm {
            // Single x-element in a nontrivial component: any neighbor is a
            // y-side witness for it; take the least one.
            let b = g.neighbors(z)[0];
            debug_assert!(!on_x[b.index()]);
            witnesses.push(b);
            continue;
        }
        let path = g.path(z, xm).expect("endpoints share a component");
        // Chains are edge-free in the incomparability graph, so the walk
        // alternates x, y, x, y, ..., x.
        assert!(path.len() % 2 == 1);
        for (i, &v) in path.iter().enumerate() {
            assert_eq!(on_x[v.index()], i % 2 == 0, "walk must alternate sides");
        }
        for step in path.chunks_exact(2).zip(path.iter().skip(2).step_by(2)) {
            let ([a_cur, b], &a_next) = (step.0.try_into().unwrap(), step.1);
            witnesses.push(b);
            // b is incomparable to every x-element whose coordinate lies
            // between its two walk neighbors, whichever way they lean.
            let (r0, r1) = (p.rank(a_cur), p.rank(a_next));
            let (lo, hi) = if r0 < r1 { (r0, r1) } else { (r1, r0) };
            for &c in &p.by_coord()[lo..=hi] {
                if on_x[c.index()] {
                    assert!(
                        !p.is_comparable(c, b),
                        "walk vertex must cover the trapped interval"
                    );
                }
            }
        }
    }

    witnesses.sort_by_key(|&b| p.rank(b));
    witnesses.dedup();
    for &x in &xs {
        assert!(
            witnesses.iter().any(|&b| !p.is_comparable(x, b)),
            "every x-element is covered by some witness"
        );
    }
    Ok(WitnessCover { base_chain: ys, witnesses, target: xs })
}

/// Picks witnesses on `y_chain` whose incomparables united are exactly the
/// set of elements incomparable to `y_chain`.
///
/// The incomparables of the chain are themselves partitioned into chains;
/// each of those, together with `y_chain`, induces a two-chain poset handled
/// by [`cover_partner_chain`], and the witness sets are merged.
pub fn cover_incomparables(
    p: &RealisticPoset,
    y_chain: &[ElementId],
) -> Result<WitnessCover, WitnessError> {
    let ys = checked_chain(p, y_chain)?;
    let target = p.incomparables_of_set(&ys);
    if target.is_empty() {
        return Ok(WitnessCover { base_chain: ys, witnesses: Vec::new(), target });
    }
    let mut in_target = vec![false; p.len()];
    for &t in &target {
        in_target[t.index()] = true;
    }

    let (sub, back) = p.induced(&target);
    let mut witnesses: Vec<ElementId> = Vec::new();
    for sub_chain in chain_partition(&sub).chains {
        let x_i: Vec<ElementId> = sub_chain.iter().map(|&v| back[v.index()]).collect();

        let mut universe = x_i.clone();
        universe.extend_from_slice(&ys);
        let (p_i, back_i) = p.induced(&universe);
        let mut fwd = vec![u32::MAX; p.len()];
        for (new, &old) in back_i.iter().enumerate() {
            fwd[old.index()] = new as u32;
        }
        let local = |v: ElementId| ElementId::new(fwd[v.index()]);
        let x_loc: Vec<ElementId> = x_i.iter().copied().map(local).collect();
        let y_loc: Vec<ElementId> = ys.iter().copied().map(local).collect();

        let cover = cover_partner_chain(&p_i, &x_loc, &y_loc)
            .expect("two disjoint chains with mutual incomparables always admit a cover");
        for &b_loc in &cover.witnesses {
            let b = back_i[b_loc.index()];
            // Everything a witness is incomparable to, even inside the
            // reduced poset, is incomparable to the base chain as a whole.
            for w in p_i.incomparables(b_loc) {
                assert!(in_target[back_i[w.index()].index()]);
            }
            witnesses.push(b);
        }
    }

    witnesses.sort_by_key(|&b| p.rank(b));
    witnesses.dedup();
    // The union of the witnesses' incomparables is exactly the target: every
    // witness sits on the chain, and every chain of the target got covered.
    let union = p.incomparables_of_set(&witnesses);
    assert_eq!(union, target, "witness union must equal the incomparables of the chain");
    Ok(WitnessCover { base_chain: ys, witnesses, target })
}

/// For a maximal chain `Y`, returns a subchain `X ⊆ Y` such that `Y` is
/// exactly the set of elements comparable to all of `X` — and hence the only
/// maximal chain containing `X`.
pub fn determining_subchain(
    p: &RealisticPoset,
    y_chain: &[ElementId],
) -> Result<Vec<ElementId>, WitnessError> {
    let ys = checked_chain(p, y_chain)?;
    if let Some(extender) = chain_extender(p, &ys) {
        return Err(WitnessError::NotMaximalChain { extender });
    }

    let cover = cover_incomparables(p, &ys)?;

    // Intersection over witnesses of (comparables of the witness); with no
    // witnesses the intersection is the whole ground set.
    let mut hits = vec![0usize; p.len()];
    for &b in &cover.witnesses {
        let mut incomparable = vec![false; p.len()];
        for w in p.incomparables(b) {
            incomparable[w.index()] = true;
        }
        for v in p.elements() {
            if !incomparable[v.index()] {
                hits[v.index()] += 1;
            }
        }
    }
    let cone: Vec<ElementId> = p
        .by_coord()
        .iter()
        .copied()
        .filter(|&v| hits[v.index()] == cover.witnesses.len())
        .collect();
    assert_eq!(cone, ys, "comparability cones of the witnesses must cut out the chain");

    Ok(cover.witnesses)
}

/// Default guard for [`verify_unique_extension`].
pub const MAX_ENUMERATION_LIMIT: usize = 14;

/// Why the maximal chains containing `X` are not exactly `{Y}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UniqueExtensionViolation {
    /// A maximal chain containing `X` that differs from `Y`.
    UnexpectedChain(Vec<ElementId>),
    /// `Y` itself is not a maximal chain containing `X`.
    MissingExpected,
}

impl fmt::Display for UniqueExtensionViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UniqueExtensionViolation::UnexpectedChain(chain) => {
                write!(f, "another maximal chain contains the subchain:")?;
                for e in chain {
                    write!(f, " {e}")?;
                }
                Ok(())
            }
            UniqueExtensionViolation::MissingExpected => {
                write!(f, "the expected chain is not a maximal chain containing the subchain")
            }
        }
    }
}

/// Exhaustively enumerates the maximal chains containing `x_chain` and
/// checks the result is exactly `{y_chain}`. Guarded by
/// [`MAX_ENUMERATION_LIMIT`] elements.
pub fn verify_unique_extension(
    p: &RealisticPoset,
    x_chain: &[ElementId],
    y_chain: &[ElementId],
) -> Result<Verdict<UniqueExtensionViolation>, WitnessError> {
    verify_unique_extension_with_limit(p, x_chain, y_chain, MAX_ENUMERATION_LIMIT)
}

pub fn verify_unique_extension_with_limit(
    p: &RealisticPoset,
    x_chain: &[ElementId],
    y_chain: &[ElementId],
    limit: usize,
) -> Result<Verdict<UniqueExtensionViolation>, WitnessError> {
    if p.len() > limit {
        return Err(WitnessError::TooLarge { n: p.len(), limit });
    }
    let xs = p.sorted_by_coord(x_chain);
    let ys = p.sorted_by_coord(y_chain);

    // Candidates must be comparable to every required element.
    let candidate: Vec<bool> = p
        .by_coord()
        .iter()
        .map(|&v| xs.iter().all(|&x| p.is_comparable(v, x)))
        .collect();
    let x_ranks: Vec<usize> = xs.iter().map(|&x| p.rank(x)).collect();

    let mut found: Vec<Vec<ElementId>> = Vec::new();
    let mut chain: Vec<ElementId> = Vec::new();
    enumerate(p, &candidate, &x_ranks, &mut chain, 0, 0, &mut found);

    if found.len() == 1 && found[0] == ys {
        return Ok(Verdict::Pass);
    }
    match found.into_iter().find(|c| *c != ys) {
        Some(other) => Ok(Verdict::Fail(UniqueExtensionViolation::UnexpectedChain(other))),
        None => Ok(Verdict::Fail(UniqueExtensionViolation::MissingExpected)),
    }
}

/// Depth-first enumeration over ranks of every maximal chain containing all
/// required ranks. `covered` counts required ranks already on the chain; a
/// branch dies once it skips past an uncovered one.
fn enumerate(
    p: &RealisticPoset,
    candidate: &[bool],
    x_ranks: &[usize],
    chain: &mut Vec<ElementId>,
    start_rank: usize,
    covered: usize,
    found: &mut Vec<Vec<ElementId>>,
) {
    let deadline = if covered < x_ranks.len() { x_ranks[covered] } else { usize::MAX };
    let mut extendable_up = false;
    for r in start_rank..p.len() {
        if r > deadline {
            break;
        }
        let v = p.by_coord()[r];
        if !candidate[r] {
            continue;
        }
        if let Some(&last) = chain.last() {
            if !p.is_lt(last, v) {
                continue;
            }
        }
        extendable_up = true;
        chain.push(v);
        let covered_next = covered + usize::from(r == deadline);
        enumerate(p, candidate, x_ranks, chain, r + 1, covered_next, found);
        chain.pop();
    }
    // A chain already holding all required elements and extendable by v
    // above its top has v comparable to all members (transitivity), so
    // extendable_up == false is exactly upward-maximality. Sideways or
    // downward insertions still need the full check.
    if covered == x_ranks.len() && !extendable_up && chain_extender(p, chain).is_none() {
        found.push(chain.clone());
    }
}

/// Least-coordinate element outside `chain` (sorted by coordinate) that is
/// comparable to all its members; `None` means the chain is maximal.
fn chain_extender(p: &RealisticPoset, chain: &[ElementId]) -> Option<ElementId> {
    p.by_coord().iter().copied().find(|&v| {
        if chain.binary_search_by_key(&p.rank(v), |&c| p.rank(c)).is_ok() {
            return false;
        }
        let pos = chain.partition_point(|&c| p.rank(c) < p.rank(v));
        // Comparability with the flanking members extends to the whole chain.
        (pos == 0 || p.is_lt(chain[pos - 1], v)) && (pos == chain.len() || p.is_lt(v, chain[pos]))
    })
}

fn checked_chain(p: &RealisticPoset, chain: &[ElementId]) -> Result<Vec<ElementId>, WitnessError> {
    let sorted = p.sorted_by_coord(chain);
    for w in sorted.windows(2) {
        if !p.is_lt(w[0], w[1]) {
            return Err(WitnessError::NotAChain { a: w[0], b: w[1] });
        }
    }
    Ok(sorted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coord::Coord;
    use crate::oracles::{oracle_verify_cover, CoverCheck};

    fn id(i: u32) -> ElementId {
        ElementId::new(i)
    }

    fn ids(raw: &[u32]) -> Vec<ElementId> {
        raw.iter().map(|&i| id(i)).collect()
    }

    fn int_coords(n: i64) -> Vec<Coord> {
        (1..=n).map(Coord::integer).collect()
    }

    fn p1() -> RealisticPoset {
        RealisticPoset::build(int_coords(4), &[(id(0), id(2)), (id(0), id(3)), (id(1), id(3))])
            .unwrap()
    }

    fn fixture_f() -> RealisticPoset {
        let rel = [
            (0, 2), (0, 4), (2, 4), (1, 3), (1, 5), (3, 5),
            (1, 2), (1, 4), (0, 3), (0, 5), (2, 5),
        ];
        let rel: Vec<_> = rel.iter().map(|&(a, b)| (id(a), id(b))).collect();
        RealisticPoset::build(int_coords(6), &rel).unwrap()
    }

    #[test]
    fn partner_cover_on_p1() {
        let p = p1();
        let cover = cover_partner_chain(&p, &ids(&[0, 2]), &ids(&[1, 3])).unwrap();
        assert_eq!(cover.witnesses, ids(&[1]));
        assert_eq!(cover.target, ids(&[0, 2]));
        assert!(oracle_verify_cover(&p, &cover.target, &cover.witnesses, CoverCheck::Contains)
            .is_pass());
    }

    #[test]
    fn partner_cover_on_fixture_f() {
        let p = fixture_f();
        // Component {0,1} covers 0 via the walk 0–1; component {2,3,4,5}
        // covers {2,4} via the walk 2–3–4.
        let cover = cover_partner_chain(&p, &ids(&[0, 2, 4]), &ids(&[1, 3, 5])).unwrap();
        assert_eq!(cover.witnesses, ids(&[1, 3]));
        assert!(oracle_verify_cover(&p, &ids(&[0, 2, 4]), &cover.witnesses, CoverCheck::Contains)
            .is_pass());
    }

    #[test]
    fn partner_cover_rejects_uncoverable_elements() {
        // 0 < 1 < 2 split as {1} vs {0,2}: 1 is incomparable to nothing.
        let p = RealisticPoset::build(int_coords(3), &[(id(0), id(1)), (id(1), id(2))]).unwrap();
        assert_eq!(
            cover_partner_chain(&p, &ids(&[1]), &ids(&[0, 2])),
            Err(WitnessError::UncoverableElement(id(1)))
        );
    }

    #[test]
    fn partner_cover_rejects_bad_partitions() {
        let p = p1();
        for (x, y) in [
            (ids(&[0, 2]), ids(&[1])),        // not covering
            (ids(&[0, 2]), ids(&[0, 1, 3])),  // overlapping
            (ids(&[0, 1]), ids(&[2, 3])),     // x not a chain
        ] {
            assert_eq!(
                cover_partner_chain(&p, &x, &y),
                Err(WitnessError::NotAPartitionIntoTwoChains)
            );
        }
    }

    #[test]
    fn empty_x_chain_needs_no_witnesses() {
        let rel: Vec<_> = (0..2).map(|i| (id(i), id(i + 1))).collect();
        let p = RealisticPoset::build(int_coords(3), &rel).unwrap();
        let cover = cover_partner_chain(&p, &[], &ids(&[0, 1, 2])).unwrap();
        assert!(cover.witnesses.is_empty());
        assert!(cover.target.is_empty());
    }

    #[test]
    fn incomparable_cover_on_p1() {
        let p = p1();
        let cover = cover_incomparables(&p, &ids(&[1, 3])).unwrap();
        assert_eq!(cover.target, ids(&[0, 2]));
        assert_eq!(cover.witnesses, ids(&[1]));
        assert!(oracle_verify_cover(&p, &cover.target, &cover.witnesses, CoverCheck::Exact)
            .is_pass());
    }

    #[test]
    fn incomparable_cover_on_fixture_f() {
        let p = fixture_f();
        let cover = cover_incomparables(&p, &ids(&[1, 3, 5])).unwrap();
        assert_eq!(cover.target, ids(&[0, 2, 4]));
        assert_eq!(cover.witnesses, ids(&[1, 3]));
        assert!(oracle_verify_cover(&p, &cover.target, &cover.witnesses, CoverCheck::Exact)
            .is_pass());
    }

    #[test]
    fn total_order_chain_has_empty_cover() {
        let rel: Vec<_> = (0..3).map(|i| (id(i), id(i + 1))).collect();
        let p = RealisticPoset::build(int_coords(4), &rel).unwrap();
        let cover = cover_incomparables(&p, &ids(&[0, 1, 2, 3])).unwrap();
        assert!(cover.witnesses.is_empty());
        assert!(cover.target.is_empty());
        // ... and a middle subchain also works without witnesses.
        let cover = cover_incomparables(&p, &ids(&[1, 2])).unwrap();
        assert!(cover.witnesses.is_empty());
    }

    #[test]
    fn cover_rejects_non_chains() {
        let p = p1();
        assert_eq!(
            cover_incomparables(&p, &ids(&[2, 3])),
            Err(WitnessError::NotAChain { a: id(2), b: id(3) })
        );
    }

    #[test]
    fn determining_subchain_on_fixture_f() {
        let p = fixture_f();
        let x = determining_subchain(&p, &ids(&[1, 3, 5])).unwrap();
        assert_eq!(x, ids(&[1, 3]));
        assert!(verify_unique_extension(&p, &x, &ids(&[1, 3, 5])).unwrap().is_pass());
    }

    #[test]
    fn determining_subchain_on_p1() {
        let p = p1();
        let x = determining_subchain(&p, &ids(&[1, 3])).unwrap();
        assert_eq!(x, ids(&[1]));
        assert!(verify_unique_extension(&p, &x, &ids(&[1, 3])).unwrap().is_pass());
    }

    #[test]
    fn determining_rejects_non_maximal_chains() {
        let p = fixture_f();
        // Both 2 and 3 extend {1,5}; 2 has the smaller coordinate.
        assert_eq!(
            determining_subchain(&p, &ids(&[1, 5])),
            Err(WitnessError::NotMaximalChain { extender: id(2) })
        );
    }

    #[test]
    fn determining_on_total_order_is_empty() {
        let rel: Vec<_> = (0..3).map(|i| (id(i), id(i + 1))).collect();
        let p = RealisticPoset::build(int_coords(4), &rel).unwrap();
        let full = ids(&[0, 1, 2, 3]);
        assert_eq!(determining_subchain(&p, &full).unwrap(), ids(&[]));
        assert!(verify_unique_extension(&p, &[], &full).unwrap().is_pass());
    }

    #[test]
    fn unique_extension_detects_ambiguity() {
        let p = fixture_f();
        // The empty subchain is extended by every maximal chain.
        let verdict = verify_unique_extension(&p, &[], &ids(&[1, 3, 5])).unwrap();
        match verdict {
            Verdict::Fail(UniqueExtensionViolation::UnexpectedChain(other)) => {
                assert_ne!(other, ids(&[1, 3, 5]));
                assert!(p.is_chain(&other));
            }
            v => panic!("expected an unexpected-chain failure, got {v:?}"),
        }
        // A non-maximal expected chain loses to its own extension.
        let verdict = verify_unique_extension(&p, &ids(&[1, 3]), &ids(&[1, 3])).unwrap();
        assert_eq!(
            verdict,
            Verdict::Fail(UniqueExtensionViolation::UnexpectedChain(ids(&[1, 3, 5])))
        );
        // An impossible subchain leaves nothing to extend.
        let verdict = verify_unique_extension(&p, &ids(&[2, 3]), &ids(&[1, 3, 5])).unwrap();
        assert_eq!(verdict, Verdict::Fail(UniqueExtensionViolation::MissingExpected));
    }

    #[test]
    fn unique_extension_guard() {
        let p = RealisticPoset::build(int_coords(15), &[]).unwrap();
        assert_eq!(
            verify_unique_extension(&p, &[], &[]),
            Err(WitnessError::TooLarge { n: 15, limit: MAX_ENUMERATION_LIMIT })
        );
        assert!(verify_unique_extension_with_limit(&p, &[], &[], 15).is_ok());
    }

    #[test]
    fn unique_extension_on_trivial_posets() {
        let p = RealisticPoset::build(Vec::new(), &[]).unwrap();
        assert!(verify_unique_extension(&p, &[], &[]).unwrap().is_pass());

        let p = RealisticPoset::build(int_coords(1), &[]).unwrap();
        assert!(verify_unique_extension(&p, &[], &ids(&[0])).unwrap().is_pass());
        assert!(verify_unique_extension(&p, &ids(&[0]), &ids(&[0])).unwrap().is_pass());
    }
}
