//! Valuated strict gammoids: minimum-weight linkings in weighted digraphs.
//!
//! For sinks `J` and `I = [n] ∖ J`, the `|I| × n` matrix of edge weights out
//! of `I` has tropical minor on `[n] ∖ B` equal to the cheapest linking from
//! `B` onto `J`, so gammoid valuations are duals of Stiefel images.

use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::subset::{k_subsets, Subset};
use crate::trop::{Q, Trop, TropMatrix, TropPoint};
use crate::valuated::ValuatedMatroid;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedDigraph {
    n: usize,
    sinks: Subset,
    /// `weights[i][j]` for the edge `i → j`; `∞` means no edge.
    weights: Vec<Vec<Trop>>,
}

impl WeightedDigraph {
    /// Build a digraph from its finite edges. Diagonal weights are forced to
    /// zero; graphs with a negative cycle are rejected.
    pub fn new(
        n: usize,
        sinks: Subset,
        edges: impl IntoIterator<Item = (usize, usize, Q)>,
    ) -> Result<WeightedDigraph> {
        if !sinks.is_subset(Subset::full(n)) {
            return Err(Error::DimensionMismatch(format!("sinks {sinks} outside [{n}]")));
        }
        let mut weights = vec![vec![Trop::Inf; n]; n];
        for (i, j, w) in edges {
            if i >= n || j >= n {
                return Err(Error::DimensionMismatch(format!(
                    "edge {} -> {} outside [{n}]",
                    i + 1,
                    j + 1
                )));
            }
            if i != j {
                weights[i][j] = Trop::Fin(w);
            }
        }
        for (i, row) in weights.iter_mut().enumerate() {
            row[i] = Trop::zero();
        }
        let g = WeightedDigraph { n, sinks, weights };
        if let Some(cycle) = g.negative_cycle() {
            return Err(Error::NegativeCycle { cycle });
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sinks(&self) -> Subset {
        self.sinks
    }

    /// Size of the sink set, the rank of the gammoid.
    pub fn rank(&self) -> usize {
        self.sinks.len()
    }

    pub fn weight(&self, i: usize, j: usize) -> &Trop {
        &self.weights[i][j]
    }

    /// Finite off-diagonal edges `(from, to, weight)`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, &Q)> + '_ {
        (0..self.n).flat_map(move |i| {
            (0..self.n).filter_map(move |j| match &self.weights[i][j] {
                Trop::Fin(w) if i != j => Some((i, j, w)),
                _ => None,
            })
        })
    }

    /// Bellman–Ford from a virtual source; returns the vertices of a
    /// negative cycle in order, if any.
    fn negative_cycle(&self) -> Option<Vec<usize>> {
        let n = self.n;
        let mut dist = vec![Q::zero(); n];
        let mut pred: Vec<Option<usize>> = vec![None; n];
        let edges: Vec<(usize, usize, Q)> = self.edges().map(|(i, j, w)| (i, j, w.clone())).collect();
        let mut last = None;
        for _ in 0..n {
            last = None;
            for (i, j, w) in &edges {
                let cand = &dist[*i] + w;
                if cand < dist[*j] {
                    dist[*j] = cand;
                    pred[*j] = Some(*i);
                    last = Some(*j);
                }
            }
            last?;
        }
        let mut v = last?;
        for _ in 0..n {
            v = pred[v].expect("relaxed vertex has a predecessor");
        }
        let mut cycle = vec![v];
        let mut u = pred[v].expect("on a cycle");
        while u != v {
            cycle.push(u);
            u = pred[u].expect("on a cycle");
        }
        cycle.reverse();
        Some(cycle)
    }

    /// Rows indexed by the non-sinks, with the weights of their out-edges.
    pub fn reduction_matrix(&self) -> Option<TropMatrix> {
        let rows: Vec<Vec<Trop>> = self
            .sinks
            .complement(self.n)
            .iter()
            .map(|i| self.weights[i].clone())
            .collect();
        (!rows.is_empty()).then(|| TropMatrix::new(rows).expect("rectangular"))
    }
}

/// Weight of a cheapest linking from `b` onto the sinks.
pub fn linking_value(g: &WeightedDigraph, b: Subset) -> Result<Trop> {
    if b.len() != g.rank() || !b.is_subset(Subset::full(g.n)) {
        return Err(Error::DimensionMismatch(format!(
            "{b} is not a {}-subset of [{}]",
            g.rank(),
            g.n
        )));
    }
    Ok(match g.reduction_matrix() {
        Some(a) => a.trop_minor(b.complement(g.n)),
        None => Trop::zero(),
    })
}

pub fn gammoid_valuation(g: &WeightedDigraph) -> Result<ValuatedMatroid> {
    let values = k_subsets(g.n, g.rank())
        .into_par_iter()
        .map(|b| Ok((b, linking_value(g, b)?)))
        .collect::<Result<Vec<_>>>()?;
    let v = ValuatedMatroid::from_values(g.n, g.rank(), values)?;
    if let Some(a) = g.reduction_matrix() {
        assert_eq!(a.stiefel()?.dual(), v, "linking values disagree with the dual minors");
    }
    Ok(v)
}

/// The lexicographically least basis of a matroid, found greedily.
fn lex_least_basis(v: &ValuatedMatroid) -> Subset {
    let m = v.underlying();
    (0..v.n()).fold(Subset::EMPTY, |acc, i| {
        let next = acc.insert(i);
        if m.is_independent(next) {
            next
        } else {
            acc
        }
    })
}

/// The digraph on `[n]` with sinks `[n] ∖ I` and an edge `i → j` of weight
/// `A_{σ⁻¹(i), j} − A_{σ⁻¹(i), i}` for each `i ∈ I`. Its gammoid valuation is
/// the dual of the Stiefel image of the points.
///
/// `basis` defaults to the lexicographically least basis and `sigma`
/// (row `r` matched to column `sigma[r]`) to an optimal assignment.
pub fn digraph_from_presentation(
    points: &[TropPoint],
    basis: Option<Subset>,
    sigma: Option<&[usize]>,
) -> Result<WeightedDigraph> {
    let a = TropMatrix::from_points(points)?;
    let v = a.stiefel()?;
    let n = a.cols();
    let basis = basis.unwrap_or_else(|| lex_least_basis(&v));
    if basis.len() != a.rows() || v.finite_value(basis).is_none() {
        return Err(Error::NotMinimalMatching);
    }
    let optimal = a.minor_assignment(basis).ok_or(Error::NotMinimalMatching)?;
    let sigma: Vec<usize> = match sigma {
        None => optimal.row_to_col.clone(),
        Some(s) => {
            let mut seen = Subset::EMPTY;
            if s.len() != a.rows() || s.iter().any(|&c| !basis.contains(c)) {
                return Err(Error::NotMinimalMatching);
            }
            for &c in s {
                seen = seen.insert(c);
            }
            let cost = s
                .iter()
                .enumerate()
                .map(|(r, &c)| a.get(r, c).clone())
                .fold(Trop::zero(), |acc, w| &acc + &w);
            if seen != basis || cost != Trop::Fin(optimal.value.clone()) {
                return Err(Error::NotMinimalMatching);
            }
            s.to_vec()
        }
    };
    let mut edges = Vec::new();
    for (r, &i) in sigma.iter().enumerate() {
        let pivot = a.get(r, i).finite().expect("matched entries are finite").clone();
        for j in 0..n {
            if let Trop::Fin(w) = a.get(r, j) {
                if j != i {
                    edges.push((i, j, w - &pivot));
                }
            }
        }
    }
    WeightedDigraph::new(n, basis.complement(n), edges)
}

/// Whether the stable intersection of the hyperplanes `H(a)` over the given
/// points equals `target`.
pub fn stable_intersect_hyperplanes(points: &[TropPoint], target: &ValuatedMatroid) -> Result<bool> {
    let mut iter = points.iter();
    let first = iter
        .next()
        .ok_or_else(|| Error::DimensionMismatch("no hyperplanes".into()))?;
    if points.iter().any(|p| p.n() != target.n()) {
        return Err(Error::DimensionMismatch("hyperplanes in different ambient spaces".into()));
    }
    let mut acc = ValuatedMatroid::hyperplane(first);
    for p in iter {
        acc = acc.stable_intersection(&ValuatedMatroid::hyperplane(p))?;
    }
    Ok(&acc == target)
}
