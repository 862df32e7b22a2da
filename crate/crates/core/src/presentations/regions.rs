//! The regions `R₀(F, x, L)` and `R∞(F, x, L)` used to count presentation
//! points around a vertex of the subdivision.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lp::{Cmp, LinearProgram, LpResult};
use crate::matroid::Matroid;
use crate::subset::Subset;
use crate::trop::{relsupp, Q, Trop, TropPoint};
use crate::valuated::ValuatedMatroid;

/// The 0/∞ point recording `relsupp_x(y)`: coordinate `j` is `∞` iff `j`
/// lies in the relative support.
pub fn zoom(x: &TropPoint, y: &TropPoint) -> Result<TropPoint> {
    let r = relsupp(x, y)?;
    TropPoint::new(
        (0..y.n())
            .map(|j| if r.contains(j) { Trop::Inf } else { Trop::zero() })
            .collect(),
    )
}

/// `z ∈ R₀(F, x, L)`, i.e. `F ⊆ relsupp_x(z)`.
pub fn r0_member(x: &TropPoint, f: Subset, z: &TropPoint) -> Result<bool> {
    Ok(f.is_subset(relsupp(x, z)?))
}

/// Linear description of the closed cell of `cell` with a slack variable.
///
/// Variables are `y_0..y_{n-1}`, an offset `c` and the slack `s`. Bases of
/// the cell satisfy `V_B − Σ_B y = c`, the other bases `V_B − Σ_B y ≥ c + s`,
/// and `s ≤ 1`. A positive optimum of `s` means the relative interior meets
/// whatever extra constraints were added.
struct CellLp {
    lp: LinearProgram,
    n: usize,
}

impl CellLp {
    fn new(v: &ValuatedMatroid, cell: &Matroid) -> CellLp {
        let n = v.n();
        let mut lp = LinearProgram::new(n + 2);
        for (b, val) in v.entries() {
            let mut row = vec![Q::zero(); n + 2];
            for i in b.iter() {
                row[i] = Q::one();
            }
            row[n] = Q::one();
            if cell.is_basis(b) {
                lp.add(row, Cmp::Eq, val.clone());
            } else {
                row[n + 1] = Q::one();
                lp.add(row, Cmp::Le, val.clone());
            }
        }
        let mut cap = vec![Q::zero(); n + 2];
        cap[n + 1] = Q::one();
        lp.add(cap.clone(), Cmp::Le, Q::one());
        lp.set_objective(cap);
        CellLp { lp, n }
    }

    /// Require `j` to minimize `z − y` over the finite coordinates of `z`.
    fn minimizer(&mut self, z: &TropPoint, j: usize) {
        let zj = z.get(j).finite().expect("finite coordinate");
        for k in 0..self.n {
            if k == j {
                continue;
            }
            if let Trop::Fin(zk) = z.get(k) {
                let mut row = vec![Q::zero(); self.n + 2];
                row[k] = Q::one();
                row[j] = -Q::one();
                self.lp.add(row, Cmp::Le, zk - zj);
            }
        }
    }

    fn interior_reachable(&self) -> bool {
        match self.lp.maximize() {
            LpResult::Optimal { value, .. } => value.is_positive(),
            LpResult::Infeasible => false,
            LpResult::Unbounded => unreachable!("slack is capped"),
        }
    }
}

/// Whether `cell` has nonempty relative interior in the subdivision of `v`.
pub fn is_cell(v: &ValuatedMatroid, cell: &Matroid) -> bool {
    cell.bases().iter().all(|b| v.finite_value(*b).is_some())
        && CellLp::new(v, cell).interior_reachable()
}

/// `z ∈ R∞(F, v_L(M), L)`: `F ⊆ relsupp_y(z)` for every `y` in the relative
/// interior of the cell of `M|F ⊕ M/F`.
///
/// `z` fails exactly when some `j ∈ F` with `z_j` finite can minimize `z − y`
/// for an interior `y`, which is one exact LP per such `j`.
pub fn rinf_member(v: &ValuatedMatroid, m: &Matroid, f: Subset, z: &TropPoint) -> Result<bool> {
    if !m.is_cyclic_flat(f) {
        return Err(Error::NotCyclicFlat(f));
    }
    let candidates: Vec<usize> = f.iter().filter(|&j| z.get(j).is_finite()).collect();
    if candidates.is_empty() {
        return Ok(true);
    }
    let face = m.face_unchecked(f);
    let base = CellLp::new(v, &face);
    if !base.interior_reachable() {
        return Err(Error::CellNotFound(format!("{face:?}")));
    }
    for j in candidates {
        let mut lp = CellLp {
            lp: base.lp.clone(),
            n: base.n,
        };
        lp.minimizer(z, j);
        if lp.interior_reachable() {
            return Ok(false);
        }
    }
    Ok(true)
}
