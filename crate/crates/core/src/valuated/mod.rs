//! Valuated matroids as Plücker vectors on `d`-subsets of `[n]`.

mod subdivision;

pub use subdivision::{CellComplex, SubdivisionCell};

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::subset::{k_subsets, k_subsets_of, Subset};
use crate::trop::{Q, Trop, TropPoint};

/// Failure of a three-term Plücker relation at `(A, C)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PlueckerViolation {
    pub a: Subset,
    pub c: Subset,
}

/// Plücker vector stored by its finite entries, normalized so the minimum
/// entry is zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ValuatedMatroid {
    n: usize,
    d: usize,
    vals: BTreeMap<Subset, Q>,
}

impl ValuatedMatroid {
    /// Normalize a vector of values. Relations are not checked.
    pub fn from_values(
        n: usize,
        d: usize,
        values: impl IntoIterator<Item = (Subset, Trop)>,
    ) -> Result<ValuatedMatroid> {
        if d > n {
            return Err(Error::DimensionMismatch(format!("rank {d} exceeds {n}")));
        }
        let mut vals = BTreeMap::new();
        for (b, v) in values {
            if b.len() != d || !b.is_subset(Subset::full(n)) {
                return Err(Error::DimensionMismatch(format!(
                    "{b} is not a {d}-subset of [{n}]"
                )));
            }
            if let Trop::Fin(v) = v {
                vals.insert(b, v);
            }
        }
        Self::from_finite(n, d, vals)
    }

    fn from_finite(n: usize, d: usize, mut vals: BTreeMap<Subset, Q>) -> Result<ValuatedMatroid> {
        let min = vals.values().min().cloned().ok_or(Error::AllInfinite)?;
        if !min.is_zero() {
            for v in vals.values_mut() {
                *v -= &min;
            }
        }
        Ok(ValuatedMatroid { n, d, vals })
    }

    /// Normalize and verify the tropical Plücker relations.
    pub fn new(
        n: usize,
        d: usize,
        values: impl IntoIterator<Item = (Subset, Trop)>,
    ) -> Result<ValuatedMatroid> {
        let v = Self::from_values(n, d, values)?;
        if let Err(w) = v.check_pluecker() {
            return Err(Error::NotAMatroid(format!(
                "tropical Plücker relation fails at A={}, C={}",
                w.a, w.c
            )));
        }
        Ok(v)
    }

    /// The trivial valuation of a matroid: `0` on bases, `∞` elsewhere.
    pub fn from_matroid(m: &Matroid) -> ValuatedMatroid {
        ValuatedMatroid {
            n: m.n(),
            d: m.rank(),
            vals: m.bases().iter().map(|b| (*b, Q::zero())).collect(),
        }
    }

    /// Tropical hyperplane `H(a)`: rank `n-1`, `H_{[n]∖i} = a_i`. Its linear
    /// space is `{y : min_j (y_j + a_j) attained twice}`.
    pub fn hyperplane(a: &TropPoint) -> ValuatedMatroid {
        let n = a.n();
        let full = Subset::full(n);
        Self::from_values(
            n,
            n - 1,
            (0..n).map(|i| (full.remove(i), a.get(i).clone())),
        )
        .expect("a point has a finite coordinate")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.d
    }

    pub fn value(&self, b: Subset) -> Trop {
        self.vals.get(&b).cloned().map_or(Trop::Inf, Trop::Fin)
    }

    pub fn finite_value(&self, b: Subset) -> Option<&Q> {
        self.vals.get(&b)
    }

    /// Finite entries in increasing mask order.
    pub fn entries(&self) -> impl Iterator<Item = (Subset, &Q)> {
        self.vals.iter().map(|(b, v)| (*b, v))
    }

    /// All `d`-subsets with their values, `∞` included.
    pub fn dense(&self) -> Vec<(Subset, Trop)> {
        k_subsets(self.n, self.d)
            .into_iter()
            .map(|b| (b, self.value(b)))
            .collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.vals.values().all(Q::is_zero)
    }

    pub fn check_pluecker(&self) -> std::result::Result<(), PlueckerViolation> {
        if self.d == 0 || self.d == self.n {
            return Ok(());
        }
        let cs = k_subsets(self.n, self.d + 1);
        for a in k_subsets(self.n, self.d - 1) {
            for &c in &cs {
                let mut best: Option<Q> = None;
                let mut count = 0;
                for j in c.difference(a).iter() {
                    let (Some(x), Some(y)) = (self.vals.get(&a.insert(j)), self.vals.get(&c.remove(j)))
                    else {
                        continue;
                    };
                    let s = x + y;
                    match &best {
                        Some(b) if s > *b => {}
                        Some(b) if s == *b => count += 1,
                        _ => {
                            best = Some(s);
                            count = 1;
                        }
                    }
                }
                if count == 1 {
                    return Err(PlueckerViolation { a, c });
                }
            }
        }
        Ok(())
    }

    pub fn underlying(&self) -> Matroid {
        Matroid::new_unchecked(self.n, self.vals.keys().copied())
            .expect("support of a valuation is nonempty")
    }

    pub fn dual(&self) -> ValuatedMatroid {
        ValuatedMatroid {
            n: self.n,
            d: self.n - self.d,
            vals: self
                .vals
                .iter()
                .map(|(b, v)| (b.complement(self.n), v.clone()))
                .collect(),
        }
    }

    /// `V|J` on the ground set `J`, renumbered to `0..|J|`.
    pub fn restrict(&self, j: Subset) -> Result<ValuatedMatroid> {
        let m = self.underlying();
        let r = m.rank_of(j);
        let bc = m
            .bases()
            .iter()
            .filter(|b| b.intersection(j).len() == r)
            .map(|b| b.difference(j))
            .min()
            .expect("some basis meets J in rk(J) elements");
        self.restrict_with(j, bc)
    }

    /// `V|J` computed through a chosen basis `bc` of `M/J`.
    pub fn restrict_with(&self, j: Subset, bc: Subset) -> Result<ValuatedMatroid> {
        let r = self.d - bc.len();
        let vals: BTreeMap<Subset, Q> = k_subsets_of(j, r)
            .into_iter()
            .filter_map(|b| self.vals.get(&b.union(bc)).map(|v| (b.compress(j), v.clone())))
            .collect();
        if vals.is_empty() {
            return Err(Error::RankCollapse);
        }
        Self::from_finite(j.len(), r, vals)
    }

    pub fn delete(&self, j: Subset) -> Result<ValuatedMatroid> {
        self.restrict(j.complement(self.n))
    }

    /// `V/J = (V*|([n]∖J))*`, renumbered onto `[n]∖J`.
    pub fn contract(&self, j: Subset) -> Result<ValuatedMatroid> {
        Ok(self.dual().restrict(j.complement(self.n))?.dual())
    }

    /// Initial matroid at an all-finite point: the bases minimizing
    /// `V_B − Σ_{i∈B} x_i`.
    pub fn initial_matroid(&self, x: &TropPoint) -> Result<Matroid> {
        Ok(self.initial_matroid_at(&x.finite_coords()?))
    }

    pub fn initial_matroid_at(&self, x: &[Q]) -> Matroid {
        let mut best: Option<Q> = None;
        let mut argmin = Vec::new();
        for (b, v) in &self.vals {
            let w = v - b.iter().map(|i| &x[i]).sum::<Q>();
            match &best {
                Some(m) if w > *m => {}
                Some(m) if w == *m => argmin.push(*b),
                _ => {
                    best = Some(w);
                    argmin = vec![*b];
                }
            }
        }
        Matroid::new_unchecked(self.n, argmin).expect("argmin is nonempty")
    }

    /// A `(d+1)`-set where the minimum of `y_j + V_{C∖j}` is attained once.
    pub fn membership_violation(&self, y: &TropPoint) -> Option<Subset> {
        if y.n() != self.n {
            return Some(Subset::EMPTY);
        }
        for c in k_subsets(self.n, self.d + 1) {
            let mut best: Option<Q> = None;
            let mut count = 0;
            for j in c.iter() {
                let (Trop::Fin(yj), Some(v)) = (y.get(j), self.vals.get(&c.remove(j))) else {
                    continue;
                };
                let s = yj + v;
                match &best {
                    Some(b) if s > *b => {}
                    Some(b) if s == *b => count += 1,
                    _ => {
                        best = Some(s);
                        count = 1;
                    }
                }
            }
            if count == 1 {
                return Some(c);
            }
        }
        None
    }

    /// Whether `y` lies on the tropical linear space `Be(V)`.
    pub fn contains(&self, y: &TropPoint) -> bool {
        self.membership_violation(y).is_none()
    }

    /// Stable sum: `(V + V')_J = min_{B ⊔ B' = J} V_B + V'_{B'}`.
    pub fn stable_sum(&self, other: &ValuatedMatroid) -> Result<ValuatedMatroid> {
        if self.n != other.n || self.d + other.d > self.n {
            return Err(Error::DimensionMismatch(format!(
                "stable sum of ranks {} and {} on {} and {} elements",
                self.d, other.d, self.n, other.n
            )));
        }
        let mut vals = BTreeMap::new();
        for j in k_subsets(self.n, self.d + other.d) {
            let best = k_subsets_of(j, self.d)
                .into_iter()
                .filter_map(|b| Some(self.vals.get(&b)? + other.vals.get(&j.difference(b))?))
                .min();
            if let Some(v) = best {
                vals.insert(j, v);
            }
        }
        Self::from_finite(self.n, self.d + other.d, vals).map_err(|_| Error::EmptySupport)
    }

    /// Stable intersection: `min_{B ∩ B' = J, B ∪ B' = [n]} V_B + V'_{B'}`.
    pub fn stable_intersection(&self, other: &ValuatedMatroid) -> Result<ValuatedMatroid> {
        let n = self.n;
        if n != other.n || self.d + other.d < n {
            return Err(Error::DimensionMismatch(format!(
                "stable intersection of ranks {} and {} on {} and {} elements",
                self.d, other.d, n, other.n
            )));
        }
        let r = self.d + other.d - n;
        let mut vals = BTreeMap::new();
        for j in k_subsets(n, r) {
            let rest = j.complement(n);
            let best = k_subsets_of(rest, self.d - r)
                .into_iter()
                .filter_map(|extra| {
                    let b = j.union(extra);
                    let b2 = rest.difference(extra).union(j);
                    Some(self.vals.get(&b)? + other.vals.get(&b2)?)
                })
                .min();
            if let Some(v) = best {
                vals.insert(j, v);
            }
        }
        Self::from_finite(n, r, vals).map_err(|_| Error::EmptyIntersection)
    }

    /// Move onto `ambient ⊆ [n]`; outside elements become loops.
    pub fn expand_to(&self, ambient: Subset, n: usize) -> ValuatedMatroid {
        ValuatedMatroid {
            n,
            d: self.d,
            vals: self
                .vals
                .iter()
                .map(|(b, v)| (b.expand(ambient), v.clone()))
                .collect(),
        }
    }

    /// Relabel element `i` as `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> ValuatedMatroid {
        ValuatedMatroid {
            n: self.n,
            d: self.d,
            vals: self
                .vals
                .iter()
                .map(|(b, v)| (Subset::from_elements(b.iter().map(|i| perm[i])), v.clone()))
                .collect(),
        }
    }

    pub fn maximal_cells(&self) -> Vec<SubdivisionCell> {
        subdivision::maximal_cells(self)
    }

    pub fn cell_complex(&self) -> Result<CellComplex> {
        subdivision::cell_complex(self)
    }

    /// `v_L(M)` for a connected cell matroid `M` of the subdivision.
    pub fn vertex(&self, cell: &Matroid) -> Result<TropPoint> {
        subdivision::vertex(self, cell)
    }
}

impl fmt::Debug for ValuatedMatroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "V(n={}, d={}, {{", self.n, self.d)?;
        for (k, (b, v)) in self.vals.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{b}: {}", crate::trop::format_q(v))?;
        }
        write!(f, "}})")
    }
}
