//! Exact linear programming over the rationals.
//!
//! Dense two-phase tableau simplex with Bland's rule. All variables are free;
//! sign constraints are added as ordinary rows.

use num_traits::{Signed, Zero};

use crate::trop::Q;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cmp {
    Le,
    Ge,
    Eq,
}

#[derive(Clone, Debug)]
pub struct Constraint {
    pub coeffs: Vec<Q>,
    pub cmp: Cmp,
    pub rhs: Q,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpResult {
    Optimal { x: Vec<Q>, value: Q },
    Infeasible,
    Unbounded,
}

/// `maximize objective · x` subject to the constraints, `x` free.
#[derive(Clone, Debug)]
pub struct LinearProgram {
    nvars: usize,
    objective: Vec<Q>,
    constraints: Vec<Constraint>,
}

impl LinearProgram {
    pub fn new(nvars: usize) -> LinearProgram {
        LinearProgram {
            nvars,
            objective: vec![Q::zero(); nvars],
            constraints: Vec::new(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn set_objective(&mut self, objective: Vec<Q>) {
        assert_eq!(objective.len(), self.nvars);
        self.objective = objective;
    }

    pub fn add(&mut self, coeffs: Vec<Q>, cmp: Cmp, rhs: Q) {
        assert_eq!(coeffs.len(), self.nvars);
        self.constraints.push(Constraint { coeffs, cmp, rhs });
    }

    pub fn maximize(&self) -> LpResult {
        Tableau::build(self).solve(self)
    }
}

struct Tableau {
    /// Rows over all columns followed by the right-hand side.
    rows: Vec<Vec<Q>>,
    basis: Vec<usize>,
    /// Columns `0..2*nvars` are `x⁺, x⁻`, then slacks, then artificials.
    n_struct: usize,
    n_nonart: usize,
    ncols: usize,
}

impl Tableau {
    fn build(lp: &LinearProgram) -> Tableau {
        let nv = lp.nvars;
        let n_struct = 2 * nv;
        let n_slack = lp.constraints.iter().filter(|c| c.cmp != Cmp::Eq).count();
        let n_nonart = n_struct + n_slack;
        let m = lp.constraints.len();
        // Worst case every row needs an artificial column.
        let ncols = n_nonart + m;
        let mut rows = Vec::with_capacity(m);
        let mut basis = Vec::with_capacity(m);
        let mut slack = n_struct;
        let mut art = n_nonart;
        for c in &lp.constraints {
            let mut row = vec![Q::zero(); ncols + 1];
            for (k, a) in c.coeffs.iter().enumerate() {
                if !a.is_zero() {
                    row[k] = a.clone();
                    row[nv + k] = -a;
                }
            }
            let slack_col = match c.cmp {
                Cmp::Le => Some((slack, Q::from_integer(1.into()))),
                Cmp::Ge => Some((slack, Q::from_integer((-1).into()))),
                Cmp::Eq => None,
            };
            if let Some((col, v)) = &slack_col {
                row[*col] = v.clone();
                slack += 1;
            }
            row[ncols] = c.rhs.clone();
            if c.rhs.is_negative() {
                for x in row.iter_mut() {
                    *x = -&*x;
                }
            }
            match slack_col {
                Some((col, _)) if row[col].is_positive() => basis.push(col),
                _ => {
                    row[art] = Q::from_integer(1.into());
                    basis.push(art);
                    art += 1;
                }
            }
            rows.push(row);
        }
        Tableau {
            rows,
            basis,
            n_struct,
            n_nonart,
            ncols,
        }
    }

    fn rhs(&self) -> usize {
        self.ncols
    }

    fn pivot(&mut self, obj: &mut [Q], r: usize, j: usize) {
        let inv = self.rows[r][j].recip();
        for x in self.rows[r].iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        let pivot_row = std::mem::take(&mut self.rows[r]);
        let nz: Vec<usize> = (0..pivot_row.len())
            .filter(|&k| !pivot_row[k].is_zero())
            .collect();
        let eliminate = |row: &mut [Q]| {
            if row[j].is_zero() {
                return;
            }
            let f = row[j].clone();
            for &k in &nz {
                let t = &f * &pivot_row[k];
                row[k] -= t;
            }
        };
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i != r {
                eliminate(row);
            }
        }
        eliminate(obj);
        self.rows[r] = pivot_row;
        self.basis[r] = j;
    }

    /// Simplex iterations on `obj` (reduced costs, `obj[rhs] = -value`) over
    /// columns `< limit`. Returns false when unbounded.
    fn run(&mut self, obj: &mut [Q], limit: usize) -> bool {
        let rhs = self.rhs();
        loop {
            let Some(j) = (0..limit).find(|&j| obj[j].is_positive()) else {
                return true;
            };
            let mut best: Option<(usize, Q)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if !row[j].is_positive() {
                    continue;
                }
                let ratio = &row[rhs] / &row[j];
                let better = match &best {
                    None => true,
                    Some((bi, br)) => {
                        ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi])
                    }
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            let Some((r, _)) = best else {
                return false;
            };
            self.pivot(obj, r, j);
        }
    }

    fn solve(mut self, lp: &LinearProgram) -> LpResult {
        let rhs = self.rhs();
        let nv = lp.nvars;
        // Phase 1: maximize minus the sum of artificials.
        let mut obj = vec![Q::zero(); self.ncols + 1];
        for (i, row) in self.rows.iter().enumerate() {
            if self.basis[i] >= self.n_nonart {
                for (k, x) in row.iter().enumerate() {
                    if k < self.n_nonart || k == rhs {
                        obj[k] += x;
                    }
                }
            }
        }
        let bounded = self.run(&mut obj, self.n_nonart);
        debug_assert!(bounded);
        if obj[rhs].is_positive() {
            return LpResult::Infeasible;
        }
        // Drive remaining artificials out of the basis, dropping redundant rows.
        let mut i = 0;
        while i < self.rows.len() {
            if self.basis[i] >= self.n_nonart {
                match (0..self.n_nonart).find(|&k| !self.rows[i][k].is_zero()) {
                    Some(k) => {
                        self.pivot(&mut obj, i, k);
                        i += 1;
                    }
                    None => {
                        self.rows.remove(i);
                        self.basis.remove(i);
                    }
                }
            } else {
                i += 1;
            }
        }
        // Phase 2.
        let mut cost = vec![Q::zero(); self.ncols + 1];
        for (k, c) in lp.objective.iter().enumerate() {
            cost[k] = c.clone();
            cost[nv + k] = -c;
        }
        let mut obj = cost.clone();
        for (i, row) in self.rows.iter().enumerate() {
            let cb = &cost[self.basis[i]];
            if !cb.is_zero() {
                for (k, x) in row.iter().enumerate() {
                    if !x.is_zero() {
                        obj[k] -= cb * x;
                    }
                }
            }
        }
        if !self.run(&mut obj, self.n_nonart) {
            return LpResult::Unbounded;
        }
        let mut x = vec![Q::zero(); nv];
        for (i, &b) in self.basis.iter().enumerate() {
            if b < nv {
                x[b] += &self.rows[i][rhs];
            } else if b < self.n_struct {
                x[b - nv] -= &self.rows[i][rhs];
            }
        }
        LpResult::Optimal {
            x,
            value: -&obj[rhs],
        }
    }
}
