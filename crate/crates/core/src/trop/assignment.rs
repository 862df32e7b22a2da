//! Min-weight assignment and bipartite matching kernels.

use num_traits::Zero;

use super::{Q, Trop};
use crate::subset::Subset;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Assignment {
    pub value: Q,
    /// `row_to_col[i]` is the column matched to row `i`.
    pub row_to_col: Vec<usize>,
}

/// Minimum-weight assignment of all rows of `cost` to distinct columns.
///
/// Shortest augmenting paths with potentials; `∞` entries are absent edges.
/// Returns `None` when no assignment uses only finite entries.
pub fn min_weight_assignment(cost: &[Vec<Trop>]) -> Option<Assignment> {
    let n = cost.len();
    if n == 0 {
        return Some(Assignment {
            value: Q::zero(),
            row_to_col: Vec::new(),
        });
    }
    let m = cost[0].len();
    if m < n {
        return None;
    }
    // 1-based arrays with a virtual column 0, as in the classical formulation.
    let mut u = vec![Q::zero(); n + 1];
    let mut v = vec![Q::zero(); m + 1];
    let mut p = vec![0usize; m + 1];
    let mut way = vec![0usize; m + 1];
    for i in 1..=n {
        p[0] = i;
        let mut j0 = 0usize;
        let mut minv: Vec<Option<Q>> = vec![None; m + 1];
        let mut used = vec![false; m + 1];
        loop {
            used[j0] = true;
            let i0 = p[j0];
            let mut delta: Option<Q> = None;
            let mut j1 = 0usize;
            for j in 1..=m {
                if used[j] {
                    continue;
                }
                if let Trop::Fin(c) = &cost[i0 - 1][j - 1] {
                    let cur = c - &u[i0] - &v[j];
                    if minv[j].as_ref().is_none_or(|mv| cur < *mv) {
                        minv[j] = Some(cur);
                        way[j] = j0;
                    }
                }
                if let Some(mv) = &minv[j] {
                    if delta.as_ref().is_none_or(|d| mv < d) {
                        delta = Some(mv.clone());
                        j1 = j;
                    }
                }
            }
            let delta = delta?;
            for j in 0..=m {
                if used[j] {
                    u[p[j]] += &delta;
                    v[j] -= &delta;
                } else if let Some(mv) = &mut minv[j] {
                    *mv -= &delta;
                }
            }
            j0 = j1;
            if p[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    let mut row_to_col = vec![0usize; n];
    for j in 1..=m {
        if p[j] != 0 {
            row_to_col[p[j] - 1] = j - 1;
        }
    }
    let mut value = Q::zero();
    for (i, &j) in row_to_col.iter().enumerate() {
        match &cost[i][j] {
            Trop::Fin(c) => value += c,
            Trop::Inf => unreachable!("assignment uses only finite entries"),
        }
    }
    Some(Assignment { value, row_to_col })
}

/// Maximum bipartite matching; `adj[i]` is the set of columns adjacent to row `i`.
/// Returns the column matched to each row.
pub fn max_matching(adj: &[Subset]) -> Vec<Option<usize>> {
    let mut col_to_row: Vec<Option<usize>> = vec![None; crate::subset::MAX_ELEMENTS];
    fn augment(
        i: usize,
        adj: &[Subset],
        seen: &mut Subset,
        col_to_row: &mut [Option<usize>],
    ) -> bool {
        for j in adj[i].iter() {
            if seen.contains(j) {
                continue;
            }
            *seen = seen.insert(j);
            if col_to_row[j].is_none_or(|r| augment(r, adj, seen, col_to_row)) {
                col_to_row[j] = Some(i);
                return true;
            }
        }
        false
    }
    for i in 0..adj.len() {
        let mut seen = Subset::EMPTY;
        augment(i, adj, &mut seen, &mut col_to_row);
    }
    let mut row_to_col = vec![None; adj.len()];
    for (j, r) in col_to_row.iter().enumerate() {
        if let Some(r) = r {
            row_to_col[*r] = Some(j);
        }
    }
    row_to_col
}

/// Whether every row can be matched to a distinct column.
pub fn has_row_saturating_matching(adj: &[Subset]) -> bool {
    max_matching(adj).iter().all(Option::is_some)
}

/// A Hall violation `R` with `|N(R)| < |R|`, if one exists.
///
/// Returns `(R, N(R))`. `R` is the set of rows reachable from an unmatched
/// row by alternating paths, so `|N(R)| = |R| - 1`.
pub fn hall_violation(adj: &[Subset]) -> Option<(Subset, Subset)> {
    let row_to_col = max_matching(adj);
    let start = row_to_col.iter().position(Option::is_none)?;
    let mut col_to_row = vec![None; crate::subset::MAX_ELEMENTS];
    for (i, c) in row_to_col.iter().enumerate() {
        if let Some(c) = c {
            col_to_row[*c] = Some(i);
        }
    }
    let mut rows = Subset::singleton(start);
    let mut cols = Subset::EMPTY;
    let mut stack = vec![start];
    while let Some(i) = stack.pop() {
        for j in adj[i].difference(cols).iter() {
            cols = cols.insert(j);
            let r = col_to_row[j].expect("maximum matching has no augmenting path");
            if !rows.contains(r) {
                rows = rows.insert(r);
                stack.push(r);
            }
        }
    }
    Some((rows, cols))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trop::q;

    fn m(rows: &[&[i64]]) -> Vec<Vec<Trop>> {
        rows.iter()
            .map(|r| {
                r.iter()
                    .map(|&x| if x == i64::MAX { Trop::Inf } else { Trop::int(x) })
                    .collect()
            })
            .collect()
    }

    const I: i64 = i64::MAX;

    #[test]
    fn square_assignment() {
        let a = min_weight_assignment(&m(&[&[4, 1, 3], &[2, 0, 5], &[3, 2, 2]])).unwrap();
        assert_eq!(a.value, q(5));
        assert_eq!(a.row_to_col, vec![1, 0, 2]);
    }

    #[test]
    fn infinite_entries_are_absent_edges() {
        let a = min_weight_assignment(&m(&[&[0, I], &[I, 0]])).unwrap();
        assert_eq!(a.value, q(0));
        assert!(min_weight_assignment(&m(&[&[0, I], &[0, I]])).is_none());
        assert!(min_weight_assignment(&m(&[&[I, I], &[0, 0]])).is_none());
    }

    #[test]
    fn negative_and_rectangular() {
        let a = min_weight_assignment(&m(&[&[-3, 5, 0], &[-4, -1, 7]])).unwrap();
        assert_eq!(a.value, q(-4));
    }

    #[test]
    fn hall_witness() {
        // rows 0 and 1 only see column 0
        let adj = [Subset(0b001), Subset(0b001), Subset(0b110)];
        let (r, c) = hall_violation(&adj).unwrap();
        assert_eq!(r, Subset(0b011));
        assert_eq!(c, Subset(0b001));
        assert!(hall_violation(&[Subset(0b01), Subset(0b10)]).is_none());
    }
}
