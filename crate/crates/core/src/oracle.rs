//! Brute-force reference implementations, compiled only for tests and the
//! `oracle` feature.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};
use rand::Rng;

use crate::error::Result;
use crate::gammoid::WeightedDigraph;
use crate::lp::{Cmp, LinearProgram, LpResult};
use crate::matroid::Matroid;
use crate::subset::{k_subsets, subsets_of, Subset};
use crate::transversal::{transversal_matroid, verify_set_presentation, SetSystem};
use crate::trop::{relsupp0, Q, Trop, TropMatrix, TropPoint};
use crate::valuated::ValuatedMatroid;

/// Heap's algorithm over `0..k`.
fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut a: Vec<usize> = (0..k).collect();
    let mut c = vec![0; k];
    out.push(a.clone());
    let mut i = 0;
    while i < k {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            out.push(a.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// Tropical minor on columns `b` by enumerating all bijections.
pub fn trop_minor_bruteforce(a: &TropMatrix, b: Subset) -> Trop {
    let cols: Vec<usize> = b.iter().collect();
    permutations(cols.len())
        .into_iter()
        .map(|p| {
            p.iter()
                .enumerate()
                .fold(Trop::zero(), |acc, (r, &k)| &acc + a.get(r, cols[k]))
        })
        .min()
        .unwrap_or(Trop::Inf)
}

pub fn stiefel_bruteforce(a: &TropMatrix) -> Result<ValuatedMatroid> {
    a.check_domain()?;
    assert!(a.rows() <= 6, "bruteforce minors are limited to six rows");
    ValuatedMatroid::from_values(
        a.cols(),
        a.rows(),
        k_subsets(a.cols(), a.rows())
            .into_iter()
            .map(|b| (b, trop_minor_bruteforce(a, b))),
    )
}

/// Cell of the regular subdivision containing `p ∈ P_M`, read off from an
/// optimal dual solution `max c + p·x` subject to `c + Σ_B x ≤ V_B`.
fn cell_at(v: &ValuatedMatroid, p: &[Q]) -> Matroid {
    let n = v.n();
    let mut lp = LinearProgram::new(n + 1);
    let mut obj = p.to_vec();
    obj.push(Q::one());
    lp.set_objective(obj);
    for (b, val) in v.entries() {
        let mut row = vec![Q::zero(); n + 1];
        for i in b.iter() {
            row[i] = Q::one();
        }
        row[n] = Q::one();
        lp.add(row, Cmp::Le, val.clone());
    }
    match lp.maximize() {
        LpResult::Optimal { x, .. } => v.initial_matroid_at(&x[..n]),
        r => panic!("point of the matroid polytope gave {r:?}"),
    }
}

/// Full-dimensional cells found at random interior points of the matroid
/// polytope.
pub fn subdivision_sample<R: Rng>(v: &ValuatedMatroid, trials: usize, rng: &mut R) -> BTreeSet<Matroid> {
    let bases: Vec<Subset> = v.entries().map(|(b, _)| b).collect();
    let dim = v.underlying().polytope_dim();
    let mut out = BTreeSet::new();
    for _ in 0..trials {
        // Heavy-tailed positive weights spread the points over the polytope
        // instead of concentrating them at the barycenter.
        let weights: Vec<i64> = bases
            .iter()
            .map(|_| rng.gen_range(1..=8) << rng.gen_range(0..16))
            .collect();
        let total: i64 = weights.iter().sum();
        let mut p = vec![Q::zero(); v.n()];
        for (b, w) in bases.iter().zip(&weights) {
            for i in b.iter() {
                p[i] += Q::new((*w).into(), total.into());
            }
        }
        let cell = cell_at(v, &p);
        if cell.polytope_dim() == dim {
            out.insert(cell);
        }
    }
    out
}

/// Multisets of size `k` drawn from `items`, as nondecreasing index lists.
pub fn multisets(len: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(len: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..len {
            cur.push(i);
            rec(len, k, i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(len, k, 0, &mut Vec::new(), &mut out);
    out
}

/// Every set system of `d` nonempty subsets of `[n]` with a transversal of
/// size `d`, grouped by the transversal matroid it presents.
pub fn all_set_presentations(n: usize, d: usize) -> BTreeMap<Matroid, Vec<SetSystem>> {
    let sets: Vec<Subset> = subsets_of(Subset::full(n)).filter(|s| !s.is_empty()).collect();
    let mut out: BTreeMap<Matroid, Vec<SetSystem>> = BTreeMap::new();
    for idx in multisets(sets.len(), d) {
        let s = SetSystem::new(n, idx.iter().map(|&i| sets[i]).collect());
        if let Ok(m) = transversal_matroid(&s) {
            out.entry(m).or_default().push(s);
        }
    }
    for v in out.values_mut() {
        v.sort();
    }
    out
}

/// All set-system presentations of `M`, by exhaustive enumeration.
pub fn presentations_exhaustive(m: &Matroid) -> Vec<SetSystem> {
    assert!(m.n() <= 5, "exhaustive presentations are limited to five elements");
    all_set_presentations(m.n(), m.rank())
        .remove(m)
        .unwrap_or_default()
}

/// Presentations of `M` among set systems whose complements are flats,
/// filtered by the Brualdi–Dinolt conditions.
pub fn presentations_by_flats(m: &Matroid) -> Vec<SetSystem> {
    let flats = m.flats().flats().to_vec();
    let mut out: Vec<SetSystem> = multisets(flats.len(), m.rank())
        .into_iter()
        .map(|idx| SetSystem::from_complements(m.n(), &idx.iter().map(|&i| flats[i]).collect::<Vec<_>>()))
        .filter(|s| verify_set_presentation(m, s))
        .collect();
    out.sort();
    out
}

/// Cheapest vertex-disjoint path system from `b` onto the sinks, by
/// backtracking over simple paths.
pub fn linking_bruteforce(g: &WeightedDigraph, b: Subset) -> Trop {
    fn route(g: &WeightedDigraph, starts: &[usize], used: Subset, ends: Subset) -> Trop {
        let Some((&s, rest)) = starts.split_first() else {
            return Trop::zero();
        };
        let mut best = Trop::Inf;
        extend(g, s, rest, used, ends, Trop::zero(), &mut best);
        best
    }
    fn extend(
        g: &WeightedDigraph,
        at: usize,
        rest: &[usize],
        used: Subset,
        ends: Subset,
        cost: Trop,
        best: &mut Trop,
    ) {
        if g.sinks().contains(at) && !ends.contains(at) {
            let total = &cost + &route(g, rest, used, ends.insert(at));
            if total < *best {
                *best = total;
            }
        }
        for next in 0..g.n() {
            if used.contains(next) {
                continue;
            }
            if let Trop::Fin(w) = g.weight(at, next) {
                let c = cost.shift(w);
                extend(g, next, rest, used.insert(next), ends, c, best);
            }
        }
    }
    let starts: Vec<usize> = b.iter().collect();
    route(g, &starts, b, Subset::EMPTY)
}

/// Mason–Ingleton inequalities over all multisets of cyclic flats of size at
/// most `max_size`; returns a violating family.
pub fn mason_ingleton_multisets(m: &Matroid, max_size: usize) -> Option<Vec<Subset>> {
    let cf = m.cyclic_flats();
    let flats = cf.flats();
    for k in 1..=max_size {
        for idx in multisets(flats.len(), k) {
            let family: Vec<Subset> = idx.iter().map(|&i| flats[i]).collect();
            let (lhs, rhs) = crate::transversal::ingleton_sides(m, &family);
            if lhs > rhs {
                return Some(family);
            }
        }
    }
    None
}

/// Presentation-fan membership by searching every completion of the
/// relative supports by flats.
pub fn fan_member_bruteforce(m: &Matroid, points: &[TropPoint]) -> bool {
    let t = m.cyclic_flats().tau_bottom().max(0) as usize;
    assert_eq!(points.len(), t);
    let fan = ValuatedMatroid::from_matroid(m);
    let mut given = Vec::new();
    for p in points {
        let g = relsupp0(p);
        if !fan.contains(p) || !m.is_independent(g) || !m.is_flat(g) {
            return false;
        }
        given.push(g);
    }
    let flats = m.flats().flats().to_vec();
    multisets(flats.len(), m.rank() - t).into_iter().any(|idx| {
        let mut all = given.clone();
        all.extend(idx.iter().map(|&i| flats[i]));
        verify_set_presentation(m, &SetSystem::from_complements(m.n(), &all))
    })
}
