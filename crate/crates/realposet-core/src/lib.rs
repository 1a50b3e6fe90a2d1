//! Finite partially ordered sets embedded in the real line.
//!
//! Every poset here is *realistic*: the ground set carries pairwise distinct
//! exact rational coordinates, and `x ≺ y` implies `coord(x) < coord(y)`, so
//! ascending coordinate order is always a topological order. On top of that
//! base the crate provides comparability queries, the incomparability graph
//! and its interval-shaped components, minimum chain partitions (width),
//! antichain layerings (height), and witness-chain constructions that exhibit
//! small certifying subchains of maximal chains. Brute-force oracles live in
//! a separate module so the main algorithms can be checked against code that
//! shares nothing with them.
//!
//! The crate is `no_std` (with `alloc`); everything is deterministic, and all
//! types are plain data safe to share across threads for concurrent reads.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod coord;
pub mod decomp;
pub mod generators;
pub mod incomp;
pub mod oracles;
pub mod poset;
pub mod witness;

pub use coord::Coord;
pub use poset::{ElementId, RealisticPoset};

/// Outcome of a verification check. Unlike an error, a `Fail` is a valid,
/// informative result: it carries a concrete counterexample.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict<V> {
    Pass,
    Fail(V),
}

impl<V> Verdict<V> {
    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn is_fail(&self) -> bool {
        !self.is_pass()
    }
}

impl<V: core::fmt::Display> core::fmt::Display for Verdict<V> {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Verdict::Pass => write!(f, "pass"),
            Verdict::Fail(v) => write!(f, "fail({v})"),
        }
    }
}
