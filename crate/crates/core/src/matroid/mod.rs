//! Matroids given by an explicit list of bases.

mod lattice;

pub use lattice::{CyclicFlatData, FlatLattice};

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::subset::{k_subsets, Subset};

/// Largest ground set on which the exchange axiom is verified on construction.
const VALIDATE_UP_TO: usize = 12;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matroid {
    n: usize,
    d: usize,
    /// Sorted by mask, without duplicates.
    bases: Vec<Subset>,
}

impl Matroid {
    /// Build a matroid from its bases, validating the basis-exchange axiom
    /// for ground sets of up to twelve elements.
    pub fn new(n: usize, bases: impl IntoIterator<Item = Subset>) -> Result<Matroid> {
        let m = Self::new_unchecked(n, bases)?;
        if n <= VALIDATE_UP_TO {
            m.check_exchange()?;
        }
        Ok(m)
    }

    /// Build without checking basis exchange; only sizes and ranges are checked.
    pub fn new_unchecked(n: usize, bases: impl IntoIterator<Item = Subset>) -> Result<Matroid> {
        let bases: Vec<Subset> = bases
            .into_iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let Some(first) = bases.first() else {
            return Err(Error::NotAMatroid("no bases".into()));
        };
        let d = first.len();
        let full = Subset::full(n);
        if let Some(b) = bases.iter().find(|b| b.len() != d || !b.is_subset(full)) {
            return Err(Error::NotAMatroid(format!(
                "basis {b} has the wrong size or leaves [{n}]"
            )));
        }
        Ok(Matroid { n, d, bases })
    }

    pub fn uniform(d: usize, n: usize) -> Matroid {
        Matroid {
            n,
            d,
            bases: k_subsets(n, d),
        }
    }

    fn check_exchange(&self) -> Result<()> {
        let set: BTreeSet<Subset> = self.bases.iter().copied().collect();
        for &a in &self.bases {
            for &b in &self.bases {
                for x in a.difference(b).iter() {
                    let ok = b
                        .difference(a)
                        .iter()
                        .any(|y| set.contains(&a.remove(x).insert(y)));
                    if !ok {
                        return Err(Error::NotAMatroid(format!(
                            "no exchange for {x1} from {a} into {b}",
                            x1 = x + 1
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.d
    }

    pub fn ground(&self) -> Subset {
        Subset::full(self.n)
    }

    pub fn bases(&self) -> &[Subset] {
        &self.bases
    }

    pub fn is_basis(&self, b: Subset) -> bool {
        self.bases.binary_search(&b).is_ok()
    }

    /// `rk(J) = max_B |B ∩ J|`.
    pub fn rank_of(&self, j: Subset) -> usize {
        let mut best = 0;
        for b in &self.bases {
            best = best.max(b.intersection(j).len());
            if best == self.d || best == j.len() {
                break;
            }
        }
        best
    }

    pub fn corank_of(&self, j: Subset) -> usize {
        self.d - self.rank_of(j)
    }

    pub fn is_independent(&self, j: Subset) -> bool {
        self.bases.iter().any(|b| j.is_subset(*b))
    }

    pub fn closure(&self, j: Subset) -> Subset {
        let r = self.rank_of(j);
        let mut out = j;
        for e in j.complement(self.n).iter() {
            if self.rank_of(j.insert(e)) == r {
                out = out.insert(e);
            }
        }
        out
    }

    pub fn is_flat(&self, j: Subset) -> bool {
        self.closure(j) == j
    }

    /// Rank in the dual matroid, without building it.
    pub fn dual_rank_of(&self, j: Subset) -> usize {
        j.len() + self.rank_of(j.complement(self.n)) - self.d
    }

    pub fn dual_closure(&self, j: Subset) -> Subset {
        let r = self.dual_rank_of(j);
        let mut out = j;
        for e in j.complement(self.n).iter() {
            if self.dual_rank_of(j.insert(e)) == r {
                out = out.insert(e);
            }
        }
        out
    }

    /// Largest cyclic set contained in `j`: `[n] ∖ cl_{M*}([n] ∖ j)`.
    pub fn coclosure(&self, j: Subset) -> Subset {
        self.dual_closure(j.complement(self.n)).complement(self.n)
    }

    /// A flat whose complement is a flat of the dual.
    pub fn is_cyclic_flat(&self, j: Subset) -> bool {
        self.is_flat(j) && self.coclosure(j) == j
    }

    pub fn dual(&self) -> Matroid {
        Matroid {
            n: self.n,
            d: self.n - self.d,
            bases: sorted(self.bases.iter().map(|b| b.complement(self.n))),
        }
    }

    /// `M|J` on the ground set `J`, renumbered to `0..|J|`.
    pub fn restrict(&self, j: Subset) -> Matroid {
        let r = self.rank_of(j);
        Matroid {
            n: j.len(),
            d: r,
            bases: sorted(
                self.bases
                    .iter()
                    .map(|b| b.intersection(j))
                    .filter(|b| b.len() == r)
                    .map(|b| b.compress(j)),
            ),
        }
    }

    /// `M ∖ J`, renumbered to `0..n-|J|`.
    pub fn delete(&self, j: Subset) -> Matroid {
        self.restrict(j.complement(self.n))
    }

    /// `M/J` on the ground set `[n] ∖ J`, renumbered.
    pub fn contract(&self, j: Subset) -> Matroid {
        let r = self.rank_of(j);
        let rest = j.complement(self.n);
        Matroid {
            n: rest.len(),
            d: self.d - r,
            bases: sorted(
                self.bases
                    .iter()
                    .filter(|b| b.intersection(j).len() == r)
                    .map(|b| b.difference(j).compress(rest)),
            ),
        }
    }

    /// Move a matroid on `|ambient|` elements onto `ambient ⊆ [n]`; the
    /// elements outside `ambient` become loops.
    pub fn expand_to(&self, ambient: Subset, n: usize) -> Matroid {
        debug_assert_eq!(ambient.len(), self.n);
        Matroid {
            n,
            d: self.d,
            bases: sorted(self.bases.iter().map(|b| b.expand(ambient))),
        }
    }

    pub fn direct_sum(&self, other: &Matroid) -> Matroid {
        let shift = |b: Subset| Subset(b.0 << self.n);
        let mut bases = Vec::with_capacity(self.bases.len() * other.bases.len());
        for a in &self.bases {
            for b in &other.bases {
                bases.push(a.union(shift(*b)));
            }
        }
        Matroid {
            n: self.n + other.n,
            d: self.d + other.d,
            bases: sorted(bases),
        }
    }

    /// Elements in no basis.
    pub fn loops(&self) -> Subset {
        let any = self.bases.iter().fold(Subset::EMPTY, |acc, b| acc.union(*b));
        any.complement(self.n)
    }

    /// Elements in every basis.
    pub fn coloops(&self) -> Subset {
        self.bases
            .iter()
            .fold(self.ground(), |acc, b| acc.intersection(*b))
    }

    /// Connected components, sorted by smallest element.
    ///
    /// Two elements are in the same component iff they are joined by a chain
    /// of fundamental circuits of one fixed basis.
    pub fn connected_components(&self) -> Vec<Subset> {
        let b0 = self.bases[0];
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        for e in b0.complement(self.n).iter() {
            for b in b0.iter() {
                if self.is_basis(b0.remove(b).insert(e)) {
                    let (x, y) = (find(&mut parent, e), find(&mut parent, b));
                    parent[x] = y;
                }
            }
        }
        let mut comps: Vec<Subset> = Vec::new();
        let mut root_of = vec![usize::MAX; self.n];
        for i in 0..self.n {
            let r = find(&mut parent, i);
            if root_of[r] == usize::MAX {
                root_of[r] = comps.len();
                comps.push(Subset::EMPTY);
            }
            let k = root_of[r];
            comps[k] = comps[k].insert(i);
        }
        comps
    }

    pub fn num_components(&self) -> usize {
        self.connected_components().len()
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.num_components() == 1
    }

    /// `rk(S) + rk([n]∖S) = d`.
    pub fn is_separator(&self, s: Subset) -> bool {
        self.rank_of(s) + self.rank_of(s.complement(self.n)) == self.d
    }

    /// Dimension of the matroid polytope: `n` minus the number of components.
    pub fn polytope_dim(&self) -> usize {
        self.n - self.num_components()
    }

    /// Face of the matroid polytope maximizing `e_F`: `M|F ⊕ M/F` on `[n]`.
    pub fn polytope_face(&self, f: Subset) -> Result<Matroid> {
        if !self.is_flat(f) {
            return Err(Error::NotAFlat(f));
        }
        Ok(self.face_unchecked(f))
    }

    /// Bases with `|B ∩ F| = rk(F)`, for any set `F`.
    pub fn face_unchecked(&self, f: Subset) -> Matroid {
        let r = self.rank_of(f);
        Matroid {
            n: self.n,
            d: self.d,
            bases: self
                .bases
                .iter()
                .copied()
                .filter(|b| b.intersection(f).len() == r)
                .collect(),
        }
    }

    pub fn flats(&self) -> FlatLattice {
        FlatLattice::new(self)
    }

    pub fn cyclic_flats(&self) -> CyclicFlatData {
        CyclicFlatData::new(self)
    }

    /// The matroid obtained by relabelling element `i` as `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Matroid {
        let map = |b: Subset| Subset::from_elements(b.iter().map(|i| perm[i]));
        Matroid {
            n: self.n,
            d: self.d,
            bases: sorted(self.bases.iter().map(|b| map(*b))),
        }
    }
}

fn sorted(it: impl IntoIterator<Item = Subset>) -> Vec<Subset> {
    let mut v: Vec<Subset> = it.into_iter().collect();
    v.sort_unstable();
    v.dedup();
    v
}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M(n={}, d={}, bases=[", self.n, self.d)?;
        for (k, b) in self.bases.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{b}")?;
        }
        write!(f, "])")
    }
}
