use std::collections::BTreeMap;

use rayon::prelude::*;

use super::assignment::{hall_violation, min_weight_assignment, Assignment};
use super::{Trop, TropPoint};
use crate::error::{Error, Result};
use crate::subset::{k_subsets, Subset};
use crate::valuated::ValuatedMatroid;

/// Row-major `d × n` tropical matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TropMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<Trop>>,
}

impl TropMatrix {
    pub fn new(entries: Vec<Vec<Trop>>) -> Result<TropMatrix> {
        let rows = entries.len();
        let cols = entries.first().map_or(0, Vec::len);
        if entries.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged matrix rows".into()));
        }
        Ok(TropMatrix {
            rows,
            cols,
            entries,
        })
    }

    /// Parse rows of comma separated entries, e.g. `["0,0,inf", "1,2,3"]`.
    pub fn parse(rows: &[&str]) -> Result<TropMatrix> {
        let entries = rows
            .iter()
            .map(|r| r.split(',').map(str::parse).collect::<Result<Vec<Trop>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::new(entries)
    }

    pub fn from_points(points: &[TropPoint]) -> Result<TropMatrix> {
        Self::new(points.iter().map(|p| p.coords().to_vec()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Vec<Trop>] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[Trop] {
        &self.entries[i]
    }

    pub fn get(&self, i: usize, j: usize) -> &Trop {
        &self.entries[i][j]
    }

    /// Rows as projective points; fails on an all-infinite row.
    pub fn row_points(&self) -> Result<Vec<TropPoint>> {
        self.entries
            .iter()
            .map(|r| TropPoint::normalize(r.clone()))
            .collect()
    }

    /// Columns restricted to `b`, in increasing order.
    fn submatrix(&self, b: Subset) -> Vec<Vec<Trop>> {
        self.entries
            .iter()
            .map(|r| b.iter().map(|j| r[j].clone()).collect())
            .collect()
    }

    /// Optimal assignment for the maximal minor on columns `b`, with
    /// `row_to_col` expressed in the original column indices.
    pub fn minor_assignment(&self, b: Subset) -> Option<Assignment> {
        debug_assert_eq!(b.len(), self.rows);
        let cols: Vec<usize> = b.iter().collect();
        let mut a = min_weight_assignment(&self.submatrix(b))?;
        for c in &mut a.row_to_col {
            *c = cols[*c];
        }
        Some(a)
    }

    /// Tropical maximal minor on the columns `b`.
    pub fn trop_minor(&self, b: Subset) -> Trop {
        match self.minor_assignment(b) {
            Some(a) => Trop::Fin(a.value),
            None => Trop::Inf,
        }
    }

    /// Checks that no `k × (n+1−k)` submatrix is entirely infinite.
    pub fn check_domain(&self) -> Result<()> {
        if self.rows > self.cols {
            return Err(Error::DimensionMismatch(format!(
                "{} rows exceed {} columns",
                self.rows, self.cols
            )));
        }
        let adj: Vec<Subset> = self
            .entries
            .iter()
            .map(|r| Subset::from_elements((0..self.cols).filter(|&j| r[j].is_finite())))
            .collect();
        match hall_violation(&adj) {
            None => Ok(()),
            Some((rows, nbrs)) => Err(Error::OutOfDomain {
                rows,
                cols: nbrs.complement(self.cols),
            }),
        }
    }

    /// The tropical Stiefel map: the vector of tropical maximal minors.
    pub fn stiefel(&self) -> Result<ValuatedMatroid> {
        self.check_domain()?;
        let d = self.rows;
        let values: BTreeMap<Subset, Trop> = k_subsets(self.cols, d)
            .into_par_iter()
            .map(|b| (b, self.trop_minor(b)))
            .collect::<Vec<_>>()
            .into_iter()
            .collect();
        let v = ValuatedMatroid::from_values(self.cols, d, values)?;
        debug_assert!(v.check_pluecker().is_ok());
        Ok(v)
    }

    /// `⊕_i coeffs_i ⊙ row_i`, normalized.
    pub fn trop_cone_sample(&self, coeffs: &[Trop]) -> Result<TropPoint> {
        if coeffs.len() != self.rows {
            return Err(Error::WrongArity {
                expected: self.rows,
                got: coeffs.len(),
            });
        }
        let coords = (0..self.cols)
            .map(|j| {
                coeffs
                    .iter()
                    .zip(&self.entries)
                    .map(|(c, r)| c + &r[j])
                    .min()
                    .unwrap_or(Trop::Inf)
            })
            .collect();
        TropPoint::normalize(coords)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(e: &[usize]) -> Subset {
        Subset::from_elements(e.iter().map(|i| i - 1))
    }

    #[test]
    fn minors_of_first_example() {
        let a = TropMatrix::parse(&["0,0,0,0", "0,0,1,1"]).unwrap();
        assert_eq!(a.trop_minor(s(&[3, 4])), Trop::int(1));
        assert_eq!(a.trop_minor(s(&[1, 2])), Trop::zero());
        let id = TropMatrix::parse(&["0,inf", "inf,0"]).unwrap();
        assert_eq!(id.trop_minor(s(&[1, 2])), Trop::zero());
    }

    #[test]
    fn stiefel_examples() {
        let a = TropMatrix::parse(&["0,0,0,0", "0,0,1,1"]).unwrap();
        let v = a.stiefel().unwrap();
        for b in k_subsets(4, 2) {
            let want = if b == s(&[3, 4]) { Trop::int(1) } else { Trop::zero() };
            assert_eq!(v.value(b), want);
        }

        let a = TropMatrix::parse(&["0,0,0,0,0", "1,1,1,0,0", "inf,0,0,inf,inf"]).unwrap();
        let v = a.stiefel().unwrap();
        for b in k_subsets(5, 3) {
            let want = if b == s(&[1, 2, 3]) {
                Trop::int(1)
            } else if b == s(&[1, 4, 5]) {
                Trop::Inf
            } else {
                Trop::zero()
            };
            assert_eq!(v.value(b), want, "{b}");
        }
    }

    #[test]
    fn out_of_domain_witness() {
        let a = TropMatrix::parse(&["inf,inf", "0,0"]).unwrap();
        assert_eq!(
            a.stiefel(),
            Err(Error::OutOfDomain {
                rows: s(&[1]),
                cols: s(&[1, 2])
            })
        );
        // two rows supported on a single column: 2 × 2 block of ∞
        let a = TropMatrix::parse(&["0,inf,inf", "1,inf,inf"]).unwrap();
        assert_eq!(
            a.check_domain(),
            Err(Error::OutOfDomain {
                rows: s(&[1, 2]),
                cols: s(&[2, 3])
            })
        );
    }

    #[test]
    fn cone_samples() {
        let a = TropMatrix::parse(&["0,0,0,0", "0,0,1,1"]).unwrap();
        let p = |s: &str| TropPoint::parse(s).unwrap();
        assert_eq!(a.trop_cone_sample(&[Trop::zero(), Trop::Inf]).unwrap(), p("0,0,0,0"));
        assert_eq!(a.trop_cone_sample(&[Trop::zero(), Trop::zero()]).unwrap(), p("0,0,0,0"));
        assert_eq!(a.trop_cone_sample(&[Trop::int(1), Trop::zero()]).unwrap(), p("0,0,1,1"));
    }
}
