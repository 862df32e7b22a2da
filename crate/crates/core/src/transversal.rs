//! Transversal matroids and their set-system presentations.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::matroid::{CyclicFlatData, Matroid};
use crate::subset::{k_subsets, subsets_of, Subset};
use crate::trop::has_row_saturating_matching;

/// A multiset of subsets of `[n]`, kept sorted so equality ignores order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetSystem {
    pub n: usize,
    sets: Vec<Subset>,
}

impl SetSystem {
    pub fn new(n: usize, mut sets: Vec<Subset>) -> SetSystem {
        sets.sort_unstable();
        SetSystem { n, sets }
    }

    /// The sets `[n] ∖ F_i`.
    pub fn from_complements(n: usize, flats: &[Subset]) -> SetSystem {
        Self::new(n, flats.iter().map(|f| f.complement(n)).collect())
    }

    pub fn sets(&self) -> &[Subset] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn complements(&self) -> Vec<Subset> {
        self.sets.iter().map(|s| s.complement(self.n)).collect()
    }

    /// Whether the elements of `b` can be matched to distinct sets.
    pub fn is_transversal_set(&self, b: Subset) -> bool {
        let adj: Vec<Subset> = b
            .iter()
            .map(|e| {
                Subset::from_elements((0..self.sets.len()).filter(|&i| self.sets[i].contains(e)))
            })
            .collect();
        has_row_saturating_matching(&adj)
    }
}

/// The transversal matroid of `S`: `d`-sets admitting a system of distinct
/// representatives of the `d = |S|` sets.
pub fn transversal_matroid(s: &SetSystem) -> Result<Matroid> {
    let d = s.len();
    let bases: Vec<Subset> = k_subsets(s.n, d)
        .into_iter()
        .filter(|b| s.is_transversal_set(*b))
        .collect();
    if bases.is_empty() {
        return Err(Error::NoBasis);
    }
    Matroid::new_unchecked(s.n, bases)
}

/// Why a matroid is not transversal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TauViolation {
    /// `τ(F) < 0` on a cyclic flat.
    Negative { flat: Subset, tau: i64 },
    /// `Σ_{G ⊇ F} τ(G) > cork(F)` on a flat.
    Excess { flat: Subset, sum: i64, corank: i64 },
}

/// A family of cyclic flats violating
/// `Σ_{∅≠I} (−1)^{|I|} rk(∪_I F_i) ≤ −rk(∩ F_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IngletonViolation {
    pub family: Vec<Subset>,
    pub lhs: i64,
    pub rhs: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TransversalVerdict {
    Yes(SetSystem),
    No {
        tau: TauViolation,
        family: IngletonViolation,
    },
}

impl TransversalVerdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, TransversalVerdict::Yes(_))
    }
}

/// The `τ` extended by zero must satisfy the Bonin inequalities.
pub fn tau_test(m: &Matroid) -> std::result::Result<(), TauViolation> {
    let cf = m.cyclic_flats();
    tau_test_with(m, &cf)
}

fn tau_test_with(m: &Matroid, cf: &CyclicFlatData) -> std::result::Result<(), TauViolation> {
    for (k, &t) in cf.tau().iter().enumerate() {
        if t < 0 {
            return Err(TauViolation::Negative {
                flat: cf.flats()[k],
                tau: t,
            });
        }
    }
    for (f, r) in m.flats().iter() {
        let sum: i64 = cf
            .flats()
            .iter()
            .zip(cf.tau())
            .filter(|(g, _)| f.is_subset(**g))
            .map(|(_, t)| t)
            .sum();
        let corank = (m.rank() - r) as i64;
        if sum > corank {
            return Err(TauViolation::Excess {
                flat: f,
                sum,
                corank,
            });
        }
    }
    Ok(())
}

/// Inclusion–exclusion sum and bound for one family.
pub fn ingleton_sides(m: &Matroid, family: &[Subset]) -> (i64, i64) {
    let k = family.len();
    let mut lhs = 0i64;
    for mask in 1u32..(1 << k) {
        let union = (0..k)
            .filter(|i| mask >> i & 1 == 1)
            .fold(Subset::EMPTY, |acc, i| acc.union(family[i]));
        let sign = if mask.count_ones() % 2 == 1 { -1 } else { 1 };
        lhs += sign * m.rank_of(union) as i64;
    }
    let meet = family
        .iter()
        .fold(m.ground(), |acc, f| acc.intersection(*f));
    (lhs, -(m.rank_of(meet) as i64))
}

/// Mason–Ingleton inequalities over families of distinct cyclic flats of
/// size at most `d + 1`, in lexicographic order of the mask-sorted list.
pub fn mason_ingleton_test(m: &Matroid) -> std::result::Result<(), IngletonViolation> {
    let cf = m.cyclic_flats();
    let flats = cf.flats();
    let kmax = (m.rank() + 1).min(flats.len());
    for k in 2..=kmax {
        for combo in combinations(flats.len(), k) {
            let family: Vec<Subset> = combo.iter().map(|&i| flats[i]).collect();
            let (lhs, rhs) = ingleton_sides(m, &family);
            if lhs > rhs {
                return Err(IngletonViolation { family, lhs, rhs });
            }
        }
    }
    Ok(())
}

/// `k`-combinations of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut cur: Option<Vec<usize>> = (k <= n).then(|| (0..k).collect());
    std::iter::from_fn(move || {
        let out = cur.clone()?;
        let c = cur.as_mut().unwrap();
        let mut i = k;
        loop {
            if i == 0 {
                cur = None;
                break;
            }
            i -= 1;
            if c[i] < n - k + i {
                c[i] += 1;
                for j in i + 1..k {
                    c[j] = c[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    })
}

/// The maximal presentation: `τ(F)` copies of `[n] ∖ F`.
pub fn maximal_presentation(m: &Matroid) -> Result<SetSystem> {
    match is_transversal(m) {
        TransversalVerdict::Yes(s) => Ok(s),
        TransversalVerdict::No { .. } => Err(Error::NotTransversal),
    }
}

/// Decide transversality by both the `τ` system and the Mason–Ingleton
/// inequalities.
pub fn is_transversal(m: &Matroid) -> TransversalVerdict {
    let cf = m.cyclic_flats();
    let tau = tau_test_with(m, &cf);
    let ingleton = mason_ingleton_test(m);
    match (tau, ingleton) {
        (Ok(()), Ok(())) => TransversalVerdict::Yes(SetSystem::from_complements(
            m.n(),
            &cf.distinguished_flats(),
        )),
        (Err(tau), Err(family)) => TransversalVerdict::No { tau, family },
        (t, i) => panic!("transversality tests disagree on {m:?}: tau {t:?}, ingleton {i:?}"),
    }
}

/// Why a set system fails to present a matroid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PresentationViolation {
    WrongSize { expected: usize, got: usize },
    /// The complement of set `index` is not a flat.
    NotAFlat { index: usize },
    /// The coclosures of the complements are not the distinguished flats.
    CoclosureMismatch,
    /// `cork(∩_{i∈I} F_i) < |I|` for the index set `I`.
    Hall { indices: Subset },
}

/// The Brualdi–Dinolt characterization of presentations.
pub fn check_set_presentation(
    m: &Matroid,
    s: &SetSystem,
) -> std::result::Result<(), PresentationViolation> {
    let d = m.rank();
    if s.len() != d || s.n != m.n() {
        return Err(PresentationViolation::WrongSize {
            expected: d,
            got: s.len(),
        });
    }
    let flats = s.complements();
    if let Some(index) = flats.iter().position(|f| !m.is_flat(*f)) {
        return Err(PresentationViolation::NotAFlat { index });
    }
    let cf = m.cyclic_flats();
    if cf.tau().iter().any(|&t| t < 0) {
        return Err(PresentationViolation::CoclosureMismatch);
    }
    let mut cocl: Vec<Subset> = flats.iter().map(|f| m.coclosure(*f)).collect();
    cocl.sort_unstable();
    if cocl != cf.distinguished_flats() {
        return Err(PresentationViolation::CoclosureMismatch);
    }
    if let Some(indices) = hall_violation(m, &flats) {
        return Err(PresentationViolation::Hall { indices });
    }
    Ok(())
}

pub fn verify_set_presentation(m: &Matroid, s: &SetSystem) -> bool {
    check_set_presentation(m, s).is_ok()
}

/// An index set `I` with `cork(∩_{i∈I} F_i) < |I|`.
pub fn hall_violation(m: &Matroid, flats: &[Subset]) -> Option<Subset> {
    subsets_of(Subset::full(flats.len())).find(|idx| {
        let meet = idx
            .iter()
            .fold(m.ground(), |acc, i| acc.intersection(flats[i]));
        m.corank_of(meet) < idx.len()
    })
}

/// `{cocl(G_i)} = DF(M)` as multisets.
pub fn is_pseudopresentation(m: &Matroid, flats: &[Subset]) -> bool {
    if flats.len() != m.rank() || flats.iter().any(|g| !m.is_flat(*g)) {
        return false;
    }
    let cf = m.cyclic_flats();
    if cf.tau().iter().any(|&t| t < 0) {
        return false;
    }
    let mut cocl: Vec<Subset> = flats.iter().map(|g| m.coclosure(*g)).collect();
    cocl.sort_unstable();
    cocl == cf.distinguished_flats()
}

/// Multiplicities of the flats `F` whose complements are used.
pub type BetaVector = BTreeMap<Subset, usize>;

/// Largest ground set accepted by [`beta_solutions`].
pub const BETA_MAX_N: usize = 8;

/// All integer solutions of the Bonin system, by backtracking over flats in
/// decreasing size.
pub fn beta_solutions(m: &Matroid) -> Result<Vec<BetaVector>> {
    if m.n() > BETA_MAX_N {
        return Err(Error::DimensionMismatch(format!(
            "beta enumeration supports at most {BETA_MAX_N} elements"
        )));
    }
    let lattice = m.flats();
    let mut flats: Vec<(Subset, i64, bool)> = lattice
        .iter()
        .map(|(f, r)| (f, (m.rank() - r) as i64, m.coclosure(f) == f))
        .collect();
    flats.sort_by(|a, b| b.0.len().cmp(&a.0.len()).then(a.0.cmp(&b.0)));
    let mut out = Vec::new();
    let mut beta = vec![0i64; flats.len()];
    backtrack(&flats, 0, &mut beta, &mut out);
    if out.is_empty() {
        return Err(Error::NotTransversal);
    }
    let cf = m.cyclic_flats();
    for b in &out {
        for (k, &f) in cf.flats().iter().enumerate() {
            let s: usize = b
                .iter()
                .filter(|(g, _)| m.coclosure(**g) == f)
                .map(|(_, c)| c)
                .sum();
            assert_eq!(s as i64, cf.tau()[k], "Bonin solution disagrees with tau");
        }
    }
    Ok(out)
}

fn backtrack(
    flats: &[(Subset, i64, bool)],
    k: usize,
    beta: &mut [i64],
    out: &mut Vec<BetaVector>,
) {
    if k == flats.len() {
        out.push(
            flats
                .iter()
                .zip(beta.iter())
                .filter(|(_, &b)| b > 0)
                .map(|((f, _, _), &b)| (*f, b as usize))
                .collect(),
        );
        return;
    }
    let (f, corank, cyclic) = flats[k];
    let above: i64 = (0..k)
        .filter(|&g| f.is_subset(flats[g].0))
        .map(|g| beta[g])
        .sum();
    let room = corank - above;
    if room < 0 {
        return;
    }
    let range = if cyclic { room..=room } else { 0..=room };
    for b in range {
        beta[k] = b;
        backtrack(flats, k + 1, beta, out);
    }
    beta[k] = 0;
}

/// The set system of a `β` vector.
pub fn beta_set_system(n: usize, beta: &BetaVector) -> SetSystem {
    let flats: Vec<Subset> = beta
        .iter()
        .flat_map(|(f, &c)| std::iter::repeat_n(*f, c))
        .collect();
    SetSystem::from_complements(n, &flats)
}
