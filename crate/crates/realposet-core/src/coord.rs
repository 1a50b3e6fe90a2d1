//! Exact rational coordinates on the real line.
//!
//! Floats are never used for coordinates: comparisons must be exact, and the
//! rational comparison in `num-rational` is overflow-safe (it compares via
//! continued fractions instead of cross-multiplying).

use core::fmt;
use core::str::FromStr;

use num_rational::Ratio;

/// A point on the real line, stored as a reduced `i64` fraction with a
/// positive denominator.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Coord(Ratio<i64>);

impl Coord {
    /// The integer point `n`.
    pub fn integer(n: i64) -> Self {
        Coord(Ratio::from_integer(n))
    }

    /// `numer/denom`, reduced and sign-normalized. `None` if `denom == 0`.
    pub fn new(numer: i64, denom: i64) -> Option<Self> {
        if denom == 0 {
            None
        } else {
            Some(Coord(Ratio::new(numer, denom)))
        }
    }

    pub fn numer(self) -> i64 {
        *self.0.numer()
    }

    /// Always positive.
    pub fn denom(self) -> i64 {
        *self.0.denom()
    }
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom() == 1 {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

/// Error from parsing a textual coordinate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParseCoordError;

impl fmt::Display for ParseCoordError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "expected an integer or a fraction like 3/4")
    }
}

impl core::error::Error for ParseCoordError {}

impl FromStr for Coord {
    type Err = ParseCoordError;

    /// Accepts `p` or `p/q` with `p`, `q` decimal integers, `q` nonzero.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.split_once('/') {
            None => s
                .parse::<i64>()
                .map(Coord::integer)
                .map_err(|_| ParseCoordError),
            Some((p, q)) => {
                let p = p.parse::<i64>().map_err(|_| ParseCoordError)?;
                let q = q.parse::<i64>().map_err(|_| ParseCoordError)?;
                Coord::new(p, q).ok_or(ParseCoordError)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_and_sign() {
        let c = Coord::new(2, 4).unwrap();
        assert_eq!((c.numer(), c.denom()), (1, 2));
        let c = Coord::new(1, -2).unwrap();
        assert_eq!((c.numer(), c.denom()), (-1, 2));
        assert_eq!(Coord::new(5, 0), None);
    }

    #[test]
    fn ordering_is_exact_for_extreme_fractions() {
        // Cross-multiplying these would overflow i64.
        let a = Coord::new(i64::MAX - 1, i64::MAX).unwrap();
        let b = Coord::new(i64::MAX - 2, i64::MAX - 1).unwrap();
        assert!(b < a);
        assert!(a < Coord::integer(1));
    }

    #[test]
    fn display_and_parse_round_trip() {
        for s in ["0", "-7", "3/4", "-3/4", "1048575/1048576"] {
            let c: Coord = s.parse().unwrap();
            let mut out = alloc::string::String::new();
            core::fmt::write(&mut out, format_args!("{c}")).unwrap();
            assert_eq!(out, s);
        }
        assert!("1/0".parse::<Coord>().is_err());
        assert!("a/2".parse::<Coord>().is_err());
        assert!("1.5".parse::<Coord>().is_err());
        // Non-canonical spellings parse to the same value.
        assert_eq!("2/4".parse::<Coord>(), "1/2".parse::<Coord>());
        assert_eq!("3/-4".parse::<Coord>(), "-3/4".parse::<Coord>());
    }
}
