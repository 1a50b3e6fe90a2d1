//! The base structure: a finite poset whose elements sit on pairwise distinct
//! rational coordinates such that `x ≺ y` implies `coord(x) < coord(y)`.
//!
//! The strict relation is stored transitively closed, in both directions
//! (`above` and `below`), with every adjacency row sorted by coordinate.
//! Closure costs memory but makes `is_lt` a binary search and keeps every
//! later algorithm free of reachability bookkeeping; the intended scale is a
//! few thousand elements even when dense.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::coord::Coord;
use crate::Verdict;

/// Index of an element within one poset. Dense in `[0, n)`.
///
/// Ids order by index, which is unrelated to coordinate order; use
/// [`RealisticPoset::rank`] when coordinate order matters.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ElementId(u32);

impl ElementId {
    pub fn new(index: u32) -> Self {
        ElementId(index)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Why a relation/coordinate list could not be turned into a poset.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BuildError {
    /// A relation mentions an id outside `[0, n)`.
    InvalidElement { id: ElementId, len: usize },
    /// Two elements share a coordinate.
    DuplicateCoordinate { a: ElementId, b: ElementId },
    /// The input relation has a directed cycle; `at` lies on one.
    CycleDetected { at: ElementId },
    /// An acyclic input pair runs against the coordinates.
    NotRealistic { from: ElementId, to: ElementId },
}

impl fmt::Display for BuildError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            BuildError::InvalidElement { id, len } => {
                write!(f, "relation mentions element {id} but there are only {len} elements")
            }
            BuildError::DuplicateCoordinate { a, b } => {
                write!(f, "elements {a} and {b} share a coordinate")
            }
            BuildError::CycleDetected { at } => {
                write!(f, "input relation has a directed cycle through element {at}")
            }
            BuildError::NotRealistic { from, to } => {
                write!(f, "relation {from} -> {to} does not increase the coordinate")
            }
        }
    }
}

impl core::error::Error for BuildError {}

/// First violated structural invariant found by [`RealisticPoset::validate`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PosetViolation {
    NotIrreflexive { x: ElementId },
    NotAntisymmetric { x: ElementId, y: ElementId },
    /// `x ≺ y` and `y ≺ z` but the pair `(x, z)` is missing.
    NotTransitive { x: ElementId, y: ElementId, z: ElementId },
    /// `x ≺ y` but `coord(x) >= coord(y)`.
    NotRealistic { x: ElementId, y: ElementId },
    /// `above` and `below` disagree on the pair `(x, y)`.
    Inconsistent { x: ElementId, y: ElementId },
}

impl fmt::Display for PosetViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            PosetViolation::NotIrreflexive { x } => write!(f, "element {x} is above itself"),
            PosetViolation::NotAntisymmetric { x, y } => {
                write!(f, "elements {x} and {y} are above each other")
            }
            PosetViolation::NotTransitive { x, y, z } => {
                write!(f, "pair ({x},{z}) missing despite {x} < {y} < {z}")
            }
            PosetViolation::NotRealistic { x, y } => {
                write!(f, "{x} < {y} but coordinates do not increase")
            }
            PosetViolation::Inconsistent { x, y } => {
                write!(f, "above/below disagree on the pair ({x},{y})")
            }
        }
    }
}

/// A finite poset on rational coordinates, immutable after construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealisticPoset {
    coords: Vec<Coord>,
    /// Strict successors of each element, transitively closed, each row
    /// sorted by ascending coordinate.
    above: Vec<Vec<ElementId>>,
    /// Strict predecessors, the exact mirror of `above`.
    below: Vec<Vec<ElementId>>,
    /// All elements sorted by ascending coordinate.
    by_coord: Vec<ElementId>,
    /// Position of each element in `by_coord`.
    rank: Vec<u32>,
}

/// Row-major bit matrix used while closing the relation and when validating.
struct BitMatrix {
    words: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    fn new(n: usize) -> Self {
        let words = n.div_ceil(64);
        BitMatrix { words, bits: vec![0u64; n * words] }
    }

    fn set(&mut self, row: usize, col: usize) {
        self.bits[row * self.words + col / 64] |= 1u64 << (col % 64);
    }

    fn get(&self, row: usize, col: usize) -> bool {
        self.bits[row * self.words + col / 64] >> (col % 64) & 1 == 1
    }

    /// `row dst |= row src`. Rows must be distinct.
    fn or_row(&mut self, dst: usize, src: usize) {
        debug_assert_ne!(dst, src);
        for w in 0..self.words {
            let v = self.bits[src * self.words + w];
            self.bits[dst * self.words + w] |= v;
        }
    }
}

impl RealisticPoset {
    /// Builds a poset from coordinates and any subrelation of the intended
    /// strict order (cover pairs, the full relation, anything in between).
    /// The stored relation is the transitive closure of the input.
    pub fn build(
        coords: Vec<Coord>,
        relations: &[(ElementId, ElementId)],
    ) -> Result<Self, BuildError> {
        let n = coords.len();

        for &(a, b) in relations {
            for id in [a, b] {
                if id.index() >= n {
                    return Err(BuildError::InvalidElement { id, len: n });
                }
            }
        }

        let mut by_coord: Vec<ElementId> = (0..n as u32).map(ElementId::new).collect();
        by_coord.sort_by_key(|&x| (coords[x.index()], x));
        for pair in by_coord.windows(2) {
            if coords[pair[0].index()] == coords[pair[1].index()] {
                return Err(BuildError::DuplicateCoordinate { a: pair[0], b: pair[1] });
            }
        }

        // A cycle is a more fundamental defect than a coordinate clash, so it
        // is diagnosed first, on the raw input relation (Kahn's algorithm).
        {
            let mut indeg = vec![0u32; n];
            let mut out: Vec<Vec<u32>> = vec![Vec::new(); n];
            for &(a, b) in relations {
                indeg[b.index()] += 1;
                out[a.index()].push(b.get());
            }
            let mut queue: Vec<u32> =
                (0..n as u32).filter(|&x| indeg[x as usize] == 0).collect();
            let mut removed = 0usize;
            while let Some(x) = queue.pop() {
                removed += 1;
                for &y in &out[x as usize] {
                    indeg[y as usize] -= 1;
                    if indeg[y as usize] == 0 {
                        queue.push(y);
                    }
                }
            }
            if removed < n {
                let at = (0..n as u32).find(|&x| indeg[x as usize] > 0).unwrap();
                return Err(BuildError::CycleDetected { at: ElementId::new(at) });
            }
        }

        for &(a, b) in relations {
            if coords[a.index()] >= coords[b.index()] {
                return Err(BuildError::NotRealistic { from: a, to: b });
            }
        }

        let mut rank = vec![0u32; n];
        for (r, &x) in by_coord.iter().enumerate() {
            rank[x.index()] = r as u32;
        }

        // Close the relation rank by rank, descending: every edge increases
        // the rank, so each successor's row is final before it is merged.
        let mut direct: Vec<Vec<u32>> = vec![Vec::new(); n];
        for &(a, b) in relations {
            direct[rank[a.index()] as usize].push(rank[b.index()]);
        }
        let mut closed = BitMatrix::new(n);
        for r in (0..n).rev() {
            let succs = core::mem::take(&mut direct[r]);
            for &s in &succs {
                closed.set(r, s as usize);
                closed.or_row(r, s as usize);
            }
        }

        let mut above: Vec<Vec<ElementId>> = vec![Vec::new(); n];
        let mut below: Vec<Vec<ElementId>> = vec![Vec::new(); n];
        for (r, &x) in by_coord.iter().enumerate() {
            for (s, &y) in by_coord.iter().enumerate().skip(r + 1) {
                if closed.get(r, s) {
                    above[x.index()].push(y);
                }
            }
        }
        // Ascending ranks push in ascending coordinate order.
        for &x in &by_coord {
            for &y in &above[x.index()] {
                below[y.index()].push(x);
            }
        }

        Ok(RealisticPoset { coords, above, below, by_coord, rank })
    }

    /// Assembles a poset from explicit adjacency rows without checking any
    /// invariant (rows are only sorted into coordinate order). This exists so
    /// that [`validate`](Self::validate) has something real to catch; data
    /// from `build` never needs it.
    pub fn from_raw_parts(
        coords: Vec<Coord>,
        mut above: Vec<Vec<ElementId>>,
        mut below: Vec<Vec<ElementId>>,
    ) -> Self {
        let n = coords.len();
        assert_eq!(above.len(), n);
        assert_eq!(below.len(), n);
        let mut by_coord: Vec<ElementId> = (0..n as u32).map(ElementId::new).collect();
        by_coord.sort_by_key(|&x| (coords[x.index()], x));
        let mut rank = vec![0u32; n];
        for (r, &x) in by_coord.iter().enumerate() {
            rank[x.index()] = r as u32;
        }
        for row in above.iter_mut().chain(below.iter_mut()) {
            row.sort_by_key(|&x| rank[x.index()]);
        }
        RealisticPoset { coords, above, below, by_coord, rank }
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> + '_ {
        (0..self.coords.len() as u32).map(ElementId::new)
    }

    pub fn coord(&self, x: ElementId) -> Coord {
        self.coords[x.index()]
    }

    /// Position of `x` in ascending coordinate order.
    pub fn rank(&self, x: ElementId) -> usize {
        self.rank[x.index()] as usize
    }

    /// All elements, ascending by coordinate.
    pub fn by_coord(&self) -> &[ElementId] {
        &self.by_coord
    }

    /// Strict successors of `x`, ascending by coordinate.
    pub fn strictly_above(&self, x: ElementId) -> &[ElementId] {
        &self.above[x.index()]
    }

    /// Strict predecessors of `x`, ascending by coordinate.
    pub fn strictly_below(&self, x: ElementId) -> &[ElementId] {
        &self.below[x.index()]
    }

    /// Strict comparison `a ≺ b`.
    pub fn is_lt(&self, a: ElementId, b: ElementId) -> bool {
        let row = &self.above[a.index()];
        row.binary_search_by_key(&self.rank[b.index()], |&y| self.rank[y.index()])
            .is_ok()
    }

    /// Reflexive comparability: `a = b`, `a ≺ b`, or `b ≺ a`.
    pub fn is_comparable(&self, a: ElementId, b: ElementId) -> bool {
        a == b || self.is_lt(a, b) || self.is_lt(b, a)
    }

    /// `{x}` together with everything strictly above it, ascending by
    /// coordinate.
    pub fn up_set(&self, x: ElementId) -> Vec<ElementId> {
        let mut out = Vec::with_capacity(1 + self.above[x.index()].len());
        out.push(x);
        out.extend_from_slice(&self.above[x.index()]);
        out
    }

    /// `{x}` together with everything strictly below it, ascending by
    /// coordinate.
    pub fn down_set(&self, x: ElementId) -> Vec<ElementId> {
        let mut out = Vec::with_capacity(1 + self.below[x.index()].len());
        out.extend_from_slice(&self.below[x.index()]);
        out.push(x);
        out
    }

    /// Elements incomparable to `x`, ascending by coordinate. Never contains
    /// `x` itself.
    pub fn incomparables(&self, x: ElementId) -> Vec<ElementId> {
        // Walk all elements in coordinate order, skipping the two sorted
        // comparability rows and x itself.
        let below = &self.below[x.index()];
        let above = &self.above[x.index()];
        let mut out = Vec::with_capacity(self.len().saturating_sub(1 + below.len() + above.len()));
        let (mut i, mut j) = (0, 0);
        for &v in &self.by_coord {
            if i < below.len() && below[i] == v {
                i += 1;
            } else if j < above.len() && above[j] == v {
                j += 1;
            } else if v != x {
                out.push(v);
            }
        }
        out
    }

    /// Union of `incomparables(x)` over `xs`, ascending by coordinate.
    pub fn incomparables_of_set(&self, xs: &[ElementId]) -> Vec<ElementId> {
        let mut marked = vec![false; self.len()];
        for &x in xs {
            for y in self.incomparables(x) {
                marked[y.index()] = true;
            }
        }
        self.by_coord.iter().copied().filter(|&v| marked[v.index()]).collect()
    }

    /// Checks the five structural invariants — irreflexive, antisymmetric,
    /// transitively closed, coordinate-increasing, and `above`/`below`
    /// mutually consistent — reporting the first violation found.
    pub fn validate(&self) -> Verdict<PosetViolation> {
        let n = self.len();
        let mut up = BitMatrix::new(n);
        let mut down = BitMatrix::new(n);
        for x in self.elements() {
            for &y in &self.above[x.index()] {
                up.set(x.index(), y.index());
            }
            for &y in &self.below[x.index()] {
                down.set(x.index(), y.index());
            }
        }

        for x in self.elements() {
            if up.get(x.index(), x.index()) || down.get(x.index(), x.index()) {
                return Verdict::Fail(PosetViolation::NotIrreflexive { x });
            }
        }
        for x in self.elements() {
            for &y in &self.above[x.index()] {
                if up.get(y.index(), x.index()) {
                    return Verdict::Fail(PosetViolation::NotAntisymmetric { x, y });
                }
            }
        }
        for x in self.elements() {
            for &y in &self.above[x.index()] {
                for &z in &self.above[y.index()] {
                    if z != x && !up.get(x.index(), z.index()) {
                        return Verdict::Fail(PosetViolation::NotTransitive { x, y, z });
                    }
                }
            }
        }
        for x in self.elements() {
            for &y in &self.above[x.index()] {
                if self.coords[x.index()] >= self.coords[y.index()] {
                    return Verdict::Fail(PosetViolation::NotRealistic { x, y });
                }
            }
        }
        for x in self.elements() {
            for &y in &self.above[x.index()] {
                if !down.get(y.index(), x.index()) {
                    return Verdict::Fail(PosetViolation::Inconsistent { x, y });
                }
            }
            for &y in &self.below[x.index()] {
                if !up.get(y.index(), x.index()) {
                    return Verdict::Fail(PosetViolation::Inconsistent { x: y, y: x });
                }
            }
        }
        Verdict::Pass
    }

    /// All strict pairs `(a, b)` of the closed relation, grouped by `a` in
    /// ascending id order.
    pub fn relation_pairs(&self) -> impl Iterator<Item = (ElementId, ElementId)> + '_ {
        self.elements()
            .flat_map(move |a| self.above[a.index()].iter().map(move |&b| (a, b)))
    }

    /// Cover pairs of the Hasse diagram: `a ≺ b` with nothing strictly in
    /// between. Sorted by `(a, b)` id order.
    pub fn hasse_covers(&self) -> Vec<(ElementId, ElementId)> {
        let mut out = Vec::new();
        for a in self.elements() {
            for &b in &self.above[a.index()] {
                // a ≺ z ≺ b for some z iff the rows overlap.
                let between = self.above[a.index()]
                    .iter()
                    .any(|&z| self.rank(z) < self.rank(b) && self.is_lt(z, b));
                if !between {
                    out.push((a, b));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Copies `elems` (deduplicated) and sorts them by ascending coordinate.
    pub fn sorted_by_coord(&self, elems: &[ElementId]) -> Vec<ElementId> {
        let mut out: Vec<ElementId> = elems.to_vec();
        out.sort_by_key(|&x| self.rank[x.index()]);
        out.dedup();
        out
    }

    /// Whether `elems` (as a set) is pairwise comparable. Transitive closure
    /// makes comparability of coordinate-consecutive members sufficient.
    pub fn is_chain(&self, elems: &[ElementId]) -> bool {
        let sorted = self.sorted_by_coord(elems);
        sorted.windows(2).all(|w| self.is_lt(w[0], w[1]))
    }

    /// The induced sub-poset on `elems` (deduplicated), with fresh dense ids
    /// assigned in ascending original-id order. Returns the sub-poset and the
    /// back-map from new ids to original ones.
    pub fn induced(&self, elems: &[ElementId]) -> (RealisticPoset, Vec<ElementId>) {
        let mut back: Vec<ElementId> = elems.to_vec();
        back.sort_unstable();
        back.dedup();
        let mut fwd = vec![u32::MAX; self.len()];
        for (new, &old) in back.iter().enumerate() {
            fwd[old.index()] = new as u32;
        }
        let remap = |old: &ElementId| {
            let new = fwd[old.index()];
            (new != u32::MAX).then_some(ElementId::new(new))
        };

        let coords = back.iter().map(|&old| self.coords[old.index()]).collect();
        // Restricting a closed relation keeps it closed, so the rows can be
        // filtered directly instead of rebuilt.
        let above = back
            .iter()
            .map(|&old| self.above[old.index()].iter().filter_map(remap).collect())
            .collect();
        let below = back
            .iter()
            .map(|&old| self.below[old.index()].iter().filter_map(remap).collect())
            .collect();
        let by_coord: Vec<ElementId> = self.by_coord.iter().filter_map(remap).collect();
        let mut rank = vec![0u32; back.len()];
        for (r, &x) in by_coord.iter().enumerate() {
            rank[x.index()] = r as u32;
        }
        (RealisticPoset { coords, above, below, by_coord, rank }, back)
    }
}
