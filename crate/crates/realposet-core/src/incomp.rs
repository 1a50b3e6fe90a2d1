//! The incomparability graph and its interval-shaped components.
//!
//! For posets on real coordinates the connected components of the
//! incomparability graph are not arbitrary vertex sets: each component is
//! exactly the set of elements whose coordinate lies in the component's hull
//! `[lo, hi]`, and the hulls of distinct components are pairwise disjoint.
//! (If some element sat inside a foreign hull, walking the component from its
//! minimum to its maximum would have to step over that element's coordinate;
//! the endpoints of the stepping edge are incomparable to it, contradicting
//! its absence from the component.) `check_interval_structure` re-verifies
//! that shape on request instead of trusting it.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::coord::Coord;
use crate::poset::{ElementId, RealisticPoset};
use crate::Verdict;

/// Undirected graph joining incomparable pairs; adjacency rows are ascending
/// by coordinate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncompGraph {
    adj: Vec<Vec<ElementId>>,
}

impl IncompGraph {
    pub fn build(p: &RealisticPoset) -> Self {
        IncompGraph { adj: p.elements().map(|x| p.incomparables(x)).collect() }
    }

    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn neighbors(&self, x: ElementId) -> &[ElementId] {
        &self.adj[x.index()]
    }

    /// Number of unordered incomparable pairs.
    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Shortest path from `from` to `to` by breadth-first search, expanding
    /// neighbors in ascending coordinate order (so the result is canonical).
    /// `None` when the two vertices lie in different components.
    pub fn path(&self, from: ElementId, to: ElementId) -> Option<Vec<ElementId>> {
        let mut parent: Vec<Option<ElementId>> = vec![None; self.len()];
        let mut seen = vec![false; self.len()];
        seen[from.index()] = true;
        let mut queue = VecDeque::new();
        queue.push_back(from);
        while let Some(v) = queue.pop_front() {
            if v == to {
                let mut path = vec![v];
                let mut cur = v;
                while let Some(prev) = parent[cur.index()] {
                    path.push(prev);
                    cur = prev;
                }
                path.reverse();
                return Some(path);
            }
            for &w in self.neighbors(v) {
                if !seen[w.index()] {
                    seen[w.index()] = true;
                    parent[w.index()] = Some(v);
                    queue.push_back(w);
                }
            }
        }
        None
    }
}

/// One connected component of the incomparability graph together with its
/// coordinate hull.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncompComponent {
    /// Members, ascending by coordinate.
    pub vertices: Vec<ElementId>,
    /// Coordinate of the minimum member.
    pub lo: Coord,
    /// Coordinate of the maximum member.
    pub hi: Coord,
}

impl IncompComponent {
    /// A single element comparable to everything else.
    pub fn is_trivial(&self) -> bool {
        self.vertices.len() == 1
    }
}

/// Connected components, sorted by ascending `lo`.
///
/// Starting a breadth-first search from the least-coordinate unvisited vertex
/// already discovers components in ascending-`lo` order.
pub fn components(g: &IncompGraph, p: &RealisticPoset) -> Vec<IncompComponent> {
    debug_assert_eq!(g.len(), p.len());
    let mut seen = vec![false; p.len()];
    let mut out = Vec::new();
    for &start in p.by_coord() {
        if seen[start.index()] {
            continue;
        }
        seen[start.index()] = true;
        let mut queue = VecDeque::new();
        queue.push_back(start);
        let mut vertices = vec![start];
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if !seen[w.index()] {
                    seen[w.index()] = true;
                    vertices.push(w);
                    queue.push_back(w);
                }
            }
        }
        vertices.sort_by_key(|&v| p.rank(v));
        let (lo, hi) = (p.coord(vertices[0]), p.coord(*vertices.last().unwrap()));
        out.push(IncompComponent { vertices, lo, hi });
    }
    debug_assert!(out.windows(2).all(|w| w[0].lo < w[1].lo));
    out
}

/// How a component list can fail to tile the coordinate line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IntervalViolation {
    /// `stranger` has a coordinate inside the hull of component `component`
    /// without being one of its vertices.
    ForeignElement { component: usize, stranger: ElementId },
    /// The hulls of components `a` and `b` intersect.
    HullOverlap { a: usize, b: usize },
}

impl fmt::Display for IntervalViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            IntervalViolation::ForeignElement { component, stranger } => {
                write!(f, "element {stranger} lies inside the hull of component {component}")
            }
            IntervalViolation::HullOverlap { a, b } => {
                write!(f, "hulls of components {a} and {b} overlap")
            }
        }
    }
}

/// Verifies that every component equals the set of all elements inside its
/// hull and that hulls are pairwise disjoint.
pub fn check_interval_structure(
    p: &RealisticPoset,
    comps: &[IncompComponent],
) -> Verdict<IntervalViolation> {
    for (ci, comp) in comps.iter().enumerate() {
        // Elements with coordinate in [lo, hi] are a contiguous rank range.
        let lo_rank = p.by_coord().partition_point(|&v| p.coord(v) < comp.lo);
        let hi_rank = p.by_coord().partition_point(|&v| p.coord(v) <= comp.hi);
        let hull_slice = &p.by_coord()[lo_rank..hi_rank];
        if hull_slice.len() != comp.vertices.len() {
            let stranger = *hull_slice
                .iter()
                .find(|v| !comp.vertices.contains(v))
                .expect("hull slice longer than component must hold a stranger");
            return Verdict::Fail(IntervalViolation::ForeignElement { component: ci, stranger });
        }
        if hull_slice != comp.vertices {
            // Same size but different content: some hull element is foreign.
            let stranger = *hull_slice.iter().find(|v| !comp.vertices.contains(v)).unwrap();
            return Verdict::Fail(IntervalViolation::ForeignElement { component: ci, stranger });
        }
    }
    for i in 1..comps.len() {
        if comps[i - 1].hi >= comps[i].lo {
            return Verdict::Fail(IntervalViolation::HullOverlap { a: i - 1, b: i });
        }
    }
    Verdict::Pass
}

/// Components with at least one incomparable pair inside.
pub fn count_nontrivial_components(comps: &[IncompComponent]) -> usize {
    comps.iter().filter(|c| !c.is_trivial()).count()
}
