//! Exact min-plus arithmetic over `T = Q ∪ {∞}`.
//!
//! Tropical addition `⊕` is `min` and tropical multiplication `⊙` is `+`.

mod assignment;
mod matrix;
mod point;

pub use assignment::{
    hall_violation, has_row_saturating_matching, max_matching, min_weight_assignment, Assignment,
};
pub use matrix::TropMatrix;
pub use point::{relsupp, relsupp0, TropPoint};

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::Error;

/// Exact rational coordinate.
pub type Q = BigRational;

pub fn q(p: i64) -> Q {
    Q::from_integer(BigInt::from(p))
}

pub fn q_frac(p: i64, d: i64) -> Q {
    Q::new(BigInt::from(p), BigInt::from(d))
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Trop {
    Fin(Q),
    Inf,
}

impl Trop {
    pub fn zero() -> Trop {
        Trop::Fin(Q::zero())
    }

    pub fn int(p: i64) -> Trop {
        Trop::Fin(q(p))
    }

    pub fn frac(p: i64, d: i64) -> Trop {
        Trop::Fin(q_frac(p, d))
    }

    pub fn is_inf(&self) -> bool {
        matches!(self, Trop::Inf)
    }

    pub fn is_finite(&self) -> bool {
        !self.is_inf()
    }

    pub fn finite(&self) -> Option<&Q> {
        match self {
            Trop::Fin(v) => Some(v),
            Trop::Inf => None,
        }
    }

    /// Tropical sum `⊕`.
    pub fn min(self, other: Trop) -> Trop {
        if other < self {
            other
        } else {
            self
        }
    }

    /// Add a finite shift; `∞` is absorbing.
    pub fn shift(&self, by: &Q) -> Trop {
        match self {
            Trop::Fin(v) => Trop::Fin(v + by),
            Trop::Inf => Trop::Inf,
        }
    }
}

impl From<Q> for Trop {
    fn from(v: Q) -> Self {
        Trop::Fin(v)
    }
}

impl PartialOrd for Trop {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Trop {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Trop::Fin(a), Trop::Fin(b)) => a.cmp(b),
            (Trop::Fin(_), Trop::Inf) => Ordering::Less,
            (Trop::Inf, Trop::Fin(_)) => Ordering::Greater,
            (Trop::Inf, Trop::Inf) => Ordering::Equal,
        }
    }
}

/// Tropical product `⊙`.
impl Add for &Trop {
    type Output = Trop;

    fn add(self, rhs: &Trop) -> Trop {
        match (self, rhs) {
            (Trop::Fin(a), Trop::Fin(b)) => Trop::Fin(a + b),
            _ => Trop::Inf,
        }
    }
}

impl Add for Trop {
    type Output = Trop;

    fn add(self, rhs: Trop) -> Trop {
        &self + &rhs
    }
}

/// Classical difference; `∞ - finite = ∞`. Subtracting `∞` is a logic error.
impl Sub<&Q> for &Trop {
    type Output = Trop;

    fn sub(self, rhs: &Q) -> Trop {
        match self {
            Trop::Fin(a) => Trop::Fin(a - rhs),
            Trop::Inf => Trop::Inf,
        }
    }
}

pub fn format_q(v: &Q) -> String {
    if v.denom().is_one() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

impl fmt::Display for Trop {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Trop::Fin(v) => f.write_str(&format_q(v)),
            Trop::Inf => f.write_str("inf"),
        }
    }
}

impl fmt::Debug for Trop {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub fn parse_q(s: &str) -> Result<Q, Error> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((p, d)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Q::new(p, d))
        }
        None => {
            let p: BigInt = s.parse().map_err(|_| bad())?;
            Ok(Q::from_integer(p))
        }
    }
}

impl FromStr for Trop {
    type Err = Error;

    fn from_str(s: &str) -> Result<Trop, Error> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("inf") || t == "∞" {
            Ok(Trop::Inf)
        } else {
            parse_q(t).map(Trop::Fin)
        }
    }
}
