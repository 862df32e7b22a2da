use std::collections::{BTreeMap, BTreeSet};

use super::Matroid;
use crate::subset::Subset;

/// Lattice of flats, sorted by mask.
#[derive(Clone, Debug)]
pub struct FlatLattice {
    flats: Vec<Subset>,
    ranks: Vec<usize>,
    /// `covers[k]` lists the flats covering `flats[k]`.
    covers: Vec<Vec<usize>>,
}

impl FlatLattice {
    pub(super) fn new(m: &Matroid) -> FlatLattice {
        let mut seen = BTreeSet::new();
        let mut queue = vec![m.closure(Subset::EMPTY)];
        seen.insert(queue[0]);
        while let Some(f) = queue.pop() {
            for e in f.complement(m.n()).iter() {
                let g = m.closure(f.insert(e));
                if seen.insert(g) {
                    queue.push(g);
                }
            }
        }
        let flats: Vec<Subset> = seen.into_iter().collect();
        let ranks: Vec<usize> = flats.iter().map(|f| m.rank_of(*f)).collect();
        let covers = (0..flats.len())
            .map(|a| {
                (0..flats.len())
                    .filter(|&b| ranks[b] == ranks[a] + 1 && flats[a].is_subset(flats[b]))
                    .collect()
            })
            .collect();
        FlatLattice {
            flats,
            ranks,
            covers,
        }
    }

    pub fn flats(&self) -> &[Subset] {
        &self.flats
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn covers(&self, k: usize) -> &[usize] {
        &self.covers[k]
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Subset, usize)> + '_ {
        self.flats.iter().copied().zip(self.ranks.iter().copied())
    }
}

/// Cyclic flats with their Möbius function and the `τ` multiplicities
/// `τ(F) = Σ_{G ⊇ F} μ(F, G) cork(G)`.
#[derive(Clone, Debug)]
pub struct CyclicFlatData {
    /// Sorted by mask.
    cyclic: Vec<Subset>,
    ranks: Vec<usize>,
    corank: Vec<i64>,
    mobius: BTreeMap<(usize, usize), i64>,
    tau: Vec<i64>,
}

impl CyclicFlatData {
    pub(super) fn new(m: &Matroid) -> CyclicFlatData {
        let cyclic: Vec<Subset> = m
            .flats()
            .flats()
            .iter()
            .copied()
            .filter(|f| m.coclosure(*f) == *f)
            .collect();
        let k = cyclic.len();
        let ranks: Vec<usize> = cyclic.iter().map(|f| m.rank_of(*f)).collect();
        let corank: Vec<i64> = ranks.iter().map(|r| (m.rank() - r) as i64).collect();
        // Increasing mask order is a linear extension of inclusion.
        let mut mobius = BTreeMap::new();
        for a in 0..k {
            mobius.insert((a, a), 1);
            for b in a + 1..k {
                if !cyclic[a].is_subset(cyclic[b]) {
                    continue;
                }
                let sum: i64 = (a..b)
                    .filter(|&h| cyclic[a].is_subset(cyclic[h]) && cyclic[h].is_subset(cyclic[b]))
                    .map(|h| mobius[&(a, h)])
                    .sum();
                mobius.insert((a, b), -sum);
            }
        }
        let tau = (0..k)
            .map(|a| {
                (a..k)
                    .filter_map(|b| mobius.get(&(a, b)).map(|mu| mu * corank[b]))
                    .sum()
            })
            .collect();
        CyclicFlatData {
            cyclic,
            ranks,
            corank,
            mobius,
            tau,
        }
    }

    pub fn flats(&self) -> &[Subset] {
        &self.cyclic
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn len(&self) -> usize {
        self.cyclic.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cyclic.is_empty()
    }

    pub fn index_of(&self, f: Subset) -> Option<usize> {
        self.cyclic.binary_search(&f).ok()
    }

    pub fn corank(&self, k: usize) -> i64 {
        self.corank[k]
    }

    /// `μ(F, G)`, zero unless `F ⊆ G`.
    pub fn mobius(&self, f: usize, g: usize) -> i64 {
        self.mobius.get(&(f, g)).copied().unwrap_or(0)
    }

    pub fn tau(&self) -> &[i64] {
        &self.tau
    }

    /// `τ(F)`, extended by zero to sets that are not cyclic flats.
    pub fn tau_of(&self, f: Subset) -> i64 {
        self.index_of(f).map_or(0, |k| self.tau[k])
    }

    /// `τ` at the smallest cyclic flat, the closure of the empty set.
    pub fn tau_bottom(&self) -> i64 {
        self.tau[0]
    }

    /// The distinguished flats: `τ(F)` copies of each cyclic flat `F`.
    /// Only meaningful when every `τ(F)` is nonnegative.
    pub fn distinguished_flats(&self) -> Vec<Subset> {
        self.cyclic
            .iter()
            .zip(&self.tau)
            .flat_map(|(f, &t)| std::iter::repeat_n(*f, t.max(0) as usize))
            .collect()
    }
}
