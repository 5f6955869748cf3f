//! Slopes and peripheral homology classes on the boundary torus.
//!
//! A [`Slope`] is a reduced fraction `num/den` in Q union {1/0} naming an
//! unoriented isotopy class of essential curves on the boundary torus, with
//! `1/0` reserved for the meridian. A [`PeripheralClass`] is an integer pair
//! `(x, y)` in the peripheral homology lattice `Z mu + Z lambda`; unlike a
//! slope it is *not* reduced, so `(2, 0)` and `(1, 0)` are distinct classes.
//!
//! The geometric intersection pairing `Delta((a,b), c/d) = |ad - bc|` lives
//! here as [`PeripheralClass::distance`]; everything downstream (seminorm
//! evaluation, surgery bounds) is built on it.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Errors from slope construction and parsing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SlopeError {
    /// `0/0` does not name a curve class.
    #[error("0/0 is not a slope")]
    Undefined,
    /// Input string is not of the form `c`, `c/d`.
    #[error("cannot parse {0:?} as a slope (expected \"c\" or \"c/d\")")]
    Parse(String),
}

/// A reduced fraction `num/den` in Q union {1/0}.
///
/// Invariants maintained by construction: `gcd(|num|, den) = 1`, `den >= 0`,
/// and `den = 0` forces `num = 1` (every vertical class names the meridian).
/// Equality is therefore structural.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Slope {
    num: i64,
    den: i64,
}

impl Slope {
    /// The meridian slope `1/0`.
    pub const MERIDIAN: Slope = Slope { num: 1, den: 0 };

    /// Build the reduced, sign-normalized slope `num/den`.
    ///
    /// Any input with `den = 0` collapses to the meridian `1/0`; `(0, 0)` is
    /// rejected as undefined.
    pub fn new(num: i64, den: i64) -> Result<Slope, SlopeError> {
        if num == 0 && den == 0 {
            return Err(SlopeError::Undefined);
        }
        if den == 0 {
            return Ok(Slope::MERIDIAN);
        }
        let g = num.abs().gcd(&den.abs());
        let (mut num, mut den) = (num / g, den / g);
        if den < 0 {
            num = -num;
            den = -den;
        }
        Ok(Slope { num, den })
    }

    /// Shorthand for an integral slope `n/1`.
    pub fn integral(n: i64) -> Slope {
        Slope { num: n, den: 1 }
    }

    pub fn numerator(&self) -> i64 {
        self.num
    }

    pub fn denominator(&self) -> i64 {
        self.den
    }

    pub fn is_meridian(&self) -> bool {
        self.den == 0
    }

    /// The primitive peripheral class `num*mu + den*lambda` named by this slope.
    pub fn class(&self) -> PeripheralClass {
        PeripheralClass::new(self.num, self.den)
    }

    /// Geometric intersection number of two slopes, `|ad - bc|`.
    pub fn distance(&self, other: &Slope) -> i64 {
        self.class().distance(other)
    }
}

/// Slopes order as extended rationals with `1/0` greatest.
impl Ord for Slope {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.is_meridian(), other.is_meridian()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            // den > 0 on both sides, so cross-multiplication preserves order.
            (false, false) => (self.num as i128 * other.den as i128)
                .cmp(&(other.num as i128 * self.den as i128)),
        }
    }
}

impl PartialOrd for Slope {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for Slope {
    type Err = SlopeError;

    /// Accepts `"c/d"` or a bare integer `"c"` (read as `c/1`).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let parse_int = |t: &str| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| SlopeError::Parse(s.to_string()))
        };
        match s.split_once('/') {
            Some((num, den)) => Slope::new(parse_int(num)?, parse_int(den)?),
            None => Ok(Slope::integral(parse_int(s)?)),
        }
    }
}

impl Serialize for Slope {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Slope {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(|e: SlopeError| D::Error::custom(e))
    }
}

/// An integer class `x*mu + y*lambda` in the peripheral homology lattice.
///
/// No reduction is performed; seminorms are evaluated on the whole lattice,
/// multiples included.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PeripheralClass {
    pub x: i64,
    pub y: i64,
}

impl PeripheralClass {
    pub const fn new(x: i64, y: i64) -> PeripheralClass {
        PeripheralClass { x, y }
    }

    /// True iff `gcd(|x|, |y|) = 1`; primitive classes are exactly those that
    /// name a slope.
    pub fn is_primitive(&self) -> bool {
        self.x.abs().gcd(&self.y.abs()) == 1
    }

    /// Minimal geometric intersection number with the slope `c/d`:
    /// `Delta((x,y), c/d) = |x*d - y*c|`.
    pub fn distance(&self, slope: &Slope) -> i64 {
        let cross =
            self.x as i128 * slope.den as i128 - self.y as i128 * slope.num as i128;
        cross.unsigned_abs().try_into().expect("intersection number overflows i64")
    }

    /// The slope named by a primitive class in the upper half-lattice
    /// (`y > 0`, or `y = 0` and `x > 0`). Returns `None` otherwise.
    pub fn to_slope(&self) -> Option<Slope> {
        let upper = self.y > 0 || (self.y == 0 && self.x > 0);
        if upper && self.is_primitive() {
            Some(Slope::new(self.x, self.y).expect("primitive class is nonzero"))
        } else {
            None
        }
    }
}

impl fmt::Display for PeripheralClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}
