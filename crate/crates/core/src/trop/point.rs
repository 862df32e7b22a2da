use std::fmt;

use num_traits::Zero;

use super::{Q, Trop};
use crate::error::{Error, Result};
use crate::subset::Subset;

/// Point of tropical projective space, stored with its minimum finite
/// coordinate shifted to zero.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TropPoint {
    coords: Vec<Trop>,
}

impl TropPoint {
    /// Canonical representative of the projective class of `coords`.
    pub fn normalize(coords: Vec<Trop>) -> Result<TropPoint> {
        let min = coords
            .iter()
            .filter_map(Trop::finite)
            .min()
            .cloned()
            .ok_or(Error::AllInfinite)?;
        let coords = coords.iter().map(|c| c - &min).collect();
        Ok(TropPoint { coords })
    }

    pub fn new(coords: Vec<Trop>) -> Result<TropPoint> {
        Self::normalize(coords)
    }

    /// Parse a comma separated list such as `"inf,0,1/2"`.
    pub fn parse(s: &str) -> Result<TropPoint> {
        let coords = s
            .split(',')
            .map(|t| t.parse())
            .collect::<Result<Vec<Trop>>>()?;
        Self::normalize(coords)
    }

    pub fn from_ints(xs: &[i64]) -> TropPoint {
        Self::normalize(xs.iter().map(|&x| Trop::int(x)).collect()).expect("finite input")
    }

    pub fn zero(n: usize) -> TropPoint {
        TropPoint {
            coords: vec![Trop::zero(); n],
        }
    }

    pub fn n(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Trop] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Trop> {
        self.coords
    }

    pub fn get(&self, i: usize) -> &Trop {
        &self.coords[i]
    }

    pub fn is_all_finite(&self) -> bool {
        self.coords.iter().all(Trop::is_finite)
    }

    /// Coordinates equal to `∞`.
    pub fn infinite_set(&self) -> Subset {
        Subset::from_elements((0..self.n()).filter(|&i| self.coords[i].is_inf()))
    }

    /// Finite coordinates, requiring all of them to be finite.
    pub fn finite_coords(&self) -> Result<Vec<Q>> {
        self.coords
            .iter()
            .map(|c| c.finite().cloned().ok_or(Error::InfiniteBase))
            .collect()
    }

    /// `Σ_{i∈S} x_i`, or `∞` if some coordinate in `S` is infinite.
    pub fn sum_over(&self, s: Subset) -> Trop {
        let mut acc = Q::zero();
        for i in s.iter() {
            match &self.coords[i] {
                Trop::Fin(v) => acc += v,
                Trop::Inf => return Trop::Inf,
            }
        }
        Trop::Fin(acc)
    }

    /// Restrict to the coordinates in `s` (renumbered) and renormalize.
    pub fn project(&self, s: Subset) -> Result<TropPoint> {
        Self::normalize(s.iter().map(|i| self.coords[i].clone()).collect())
    }

    /// Inverse of `project` on `s`, filling the other coordinates with `∞`.
    pub fn extend_by_infinity(&self, s: Subset, n: usize) -> TropPoint {
        let mut coords = vec![Trop::Inf; n];
        for (k, i) in s.iter().enumerate() {
            coords[i] = self.coords[k].clone();
        }
        TropPoint { coords }
    }

    /// Coordinatewise `self - x` for an all-finite `x`.
    pub fn minus(&self, x: &[Q]) -> Result<TropPoint> {
        Self::normalize(self.coords.iter().zip(x).map(|(c, xi)| c - xi).collect())
    }

    /// Coordinatewise `self + x` for an all-finite `x`.
    pub fn plus(&self, x: &[Q]) -> TropPoint {
        Self::normalize(self.coords.iter().zip(x).map(|(c, xi)| c.shift(xi)).collect())
            .expect("shifting keeps a finite coordinate")
    }
}

/// Relative support `{ j : (y − x)_j > min_k (y − x)_k }` of `y` at `x`.
pub fn relsupp(x: &TropPoint, y: &TropPoint) -> Result<Subset> {
    let x = x.finite_coords()?;
    if x.len() != y.n() {
        return Err(Error::DimensionMismatch(format!(
            "points of length {} and {}",
            x.len(),
            y.n()
        )));
    }
    let diff = y.minus(&x)?;
    Ok(Subset::from_elements(
        (0..diff.n()).filter(|&j| !diff.get(j).finite().is_some_and(Q::is_zero)),
    ))
}

/// Relative support at the origin.
pub fn relsupp0(y: &TropPoint) -> Subset {
    Subset::from_elements((0..y.n()).filter(|&j| !y.get(j).finite().is_some_and(Q::is_zero)))
}

impl fmt::Debug for TropPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, c) in self.coords.iter().enumerate() {
            if k > 0 {
                write!(f, ":")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for TropPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}
