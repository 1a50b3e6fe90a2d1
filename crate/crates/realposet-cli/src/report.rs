//! Flat `key=value` report lines: one fact per line, greppable, no
//! nesting. A report remembers whether any verdict it carries failed so
//! the command layer can map that straight to the exit code.

use std::fmt::{self, Display};

use realposet_core::poset::ElementId;
use realposet_core::Verdict;
use sha2::{Digest, Sha256};

#[derive(Default)]
pub struct Report {
    lines: Vec<String>,
    any_failed: bool,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, key: &str, value: impl Display) {
        self.lines.push(format!("{key}={value}"));
    }

    /// Records a verdict line and latches the failure flag on `fail(..)`.
    pub fn verdict<V: Display>(&mut self, key: &str, v: &Verdict<V>) {
        if v.is_fail() {
            self.any_failed = true;
        }
        self.push(key, v);
    }

    pub fn any_failed(&self) -> bool {
        self.any_failed
    }

    /// 0 when every verdict passed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        i32::from(self.any_failed)
    }
}

impl Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in &self.lines {
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    let digest = Sha256::digest(bytes);
    let mut out = String::with_capacity(64);
    for b in digest {
        out.push_str(&format!("{b:02x}"));
    }
    out
}

/// Comma-separated ids, the `--chain` flag's own syntax.
pub fn ids_csv(ids: &[ElementId]) -> String {
    let parts: Vec<String> = ids.iter().map(|x| x.to_string()).collect();
    parts.join(",")
}
