//! The regular matroid subdivision induced by a valuation.
//!
//! Cells are initial matroids `V^x`. Maximal cells are found by an exact
//! ascent from the origin followed by a flip traversal across interior
//! facets; lower faces are obtained by slicing cells along flats.

use std::collections::{BTreeMap, VecDeque};

use num_traits::{One, Zero};

use super::ValuatedMatroid;
use crate::error::{Error, Result};
use crate::linalg;
use crate::matroid::Matroid;
use crate::subset::Subset;
use crate::trop::{Q, Trop, TropPoint};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubdivisionCell {
    pub matroid: Matroid,
    /// All-finite point with `V^witness = matroid`.
    pub witness: TropPoint,
    pub is_maximal: bool,
}

/// Loopless cells of the subdivision together with the vertices of the
/// connected ones.
#[derive(Clone, Debug)]
pub struct CellComplex {
    /// Sorted by matroid.
    pub cells: Vec<SubdivisionCell>,
    /// Sorted by matroid.
    pub vertices: Vec<(Matroid, TropPoint)>,
}

impl CellComplex {
    pub fn vertex_of(&self, m: &Matroid) -> Option<&TropPoint> {
        self.vertices
            .binary_search_by(|(k, _)| k.cmp(m))
            .ok()
            .map(|i| &self.vertices[i].1)
    }

    pub fn contains(&self, m: &Matroid) -> bool {
        self.cells.binary_search_by(|c| c.matroid.cmp(m)).is_ok()
    }

    pub fn maximal(&self) -> impl Iterator<Item = &SubdivisionCell> {
        self.cells.iter().filter(|c| c.is_maximal)
    }

    /// Connected cells, which are exactly the maximal cells of a connected
    /// valuation, with their vertices.
    pub fn connected(&self) -> impl Iterator<Item = (&Matroid, &TropPoint)> {
        self.vertices.iter().map(|(m, v)| (m, v))
    }
}

fn weight(v: &ValuatedMatroid, b: Subset, x: &[Q]) -> Q {
    let mut w = v.finite_value(b).expect("basis of the support").clone();
    for i in b.iter() {
        w -= &x[i];
    }
    w
}

/// Smallest `t > 0` at which a basis `B` with `|B ∩ F| > r` reaches the
/// minimum of `V_B − x·e_B − t |B ∩ F|`, where the current minimizers meet
/// `F` in exactly `r` elements.
fn breakpoint(v: &ValuatedMatroid, x: &[Q], f: Subset, r: usize) -> Option<Q> {
    let m = v
        .entries()
        .map(|(b, _)| weight(v, b, x))
        .min()
        .expect("nonempty support");
    v.entries()
        .filter(|(b, _)| b.intersection(f).len() > r)
        .map(|(b, _)| (weight(v, b, x) - &m) / Q::from_integer((b.intersection(f).len() - r).into()))
        .min()
}

fn shifted(x: &[Q], f: Subset, t: &Q) -> Vec<Q> {
    x.iter()
        .enumerate()
        .map(|(i, xi)| if f.contains(i) { xi + t } else { xi.clone() })
        .collect()
}

fn point(x: &[Q]) -> TropPoint {
    TropPoint::normalize(x.iter().cloned().map(Trop::Fin).collect()).expect("finite point")
}

/// Move from the origin to a witness of a maximal cell. Every step adds a
/// basis outside the affine hull of the current cell.
fn ascend(v: &ValuatedMatroid) -> (Matroid, Vec<Q>) {
    let whole = v.underlying();
    let target = whole.num_components();
    let mut x = vec![Q::zero(); v.n()];
    loop {
        let cell = v.initial_matroid_at(&x);
        let comps = cell.connected_components();
        if comps.len() == target {
            return (cell, x);
        }
        let k = *comps
            .iter()
            .find(|k| !whole.is_separator(**k))
            .expect("a finer decomposition has a non-separating block");
        let r = cell.rank_of(k);
        let (dir, r) = if whole.bases().iter().any(|b| b.intersection(k).len() > r) {
            (k, r)
        } else {
            (k.complement(v.n()), v.rank() - r)
        };
        let t = breakpoint(v, &x, dir, r).expect("non-separator admits a breakpoint");
        x = shifted(&x, dir, &t);
    }
}

/// All maximal cells, sorted by matroid.
pub(super) fn maximal_cells(v: &ValuatedMatroid) -> Vec<SubdivisionCell> {
    let whole = v.underlying();
    let target = whole.num_components();
    let (start, x0) = ascend(v);
    let mut seen: BTreeMap<Matroid, Vec<Q>> = BTreeMap::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone(), x0.clone());
    queue.push_back((start, x0));
    while let Some((cell, x)) = queue.pop_front() {
        for (f, r) in cell.flats().iter() {
            let face = cell.face_unchecked(f);
            if face.num_components() != target + 1 {
                continue;
            }
            let Some(t) = breakpoint(v, &x, f, r) else {
                continue;
            };
            let y = shifted(&x, f, &t);
            let next = v.initial_matroid_at(&y);
            debug_assert_eq!(next.num_components(), target);
            if !seen.contains_key(&next) {
                seen.insert(next.clone(), y.clone());
                queue.push_back((next, y));
            }
        }
    }
    seen.into_iter()
        .map(|(matroid, x)| SubdivisionCell {
            matroid,
            witness: point(&x),
            is_maximal: true,
        })
        .collect()
}

pub(super) fn cell_complex(v: &ValuatedMatroid) -> Result<CellComplex> {
    let loops = v.underlying().loops();
    if !loops.is_empty() {
        return Err(Error::HasLoops(loops));
    }
    let mut cells: BTreeMap<Matroid, (Vec<Q>, bool)> = BTreeMap::new();
    let mut stack = Vec::new();
    for c in maximal_cells(v) {
        let x = c.witness.finite_coords()?;
        cells.insert(c.matroid.clone(), (x.clone(), true));
        stack.push((c.matroid, x));
    }
    while let Some((cell, x)) = stack.pop() {
        for (f, r) in cell.flats().iter() {
            let face = cell.face_unchecked(f);
            if face == cell || cells.contains_key(&face) {
                continue;
            }
            let t = breakpoint(v, &x, f, r).map_or_else(Q::one, |t| t / Q::from_integer(2.into()));
            let y = shifted(&x, f, &t);
            debug_assert_eq!(v.initial_matroid_at(&y), face);
            cells.insert(face.clone(), (y.clone(), false));
            stack.push((face, y));
        }
    }
    let mut vertices = Vec::new();
    for (m, (x, _)) in &cells {
        if m.is_connected() {
            let vx = vertex(v, m)?;
            if vx != point(x) {
                return Err(Error::InconsistentCell(format!("{m:?}")));
            }
            vertices.push((m.clone(), vx));
        }
    }
    Ok(CellComplex {
        cells: cells
            .into_iter()
            .map(|(matroid, (x, is_maximal))| SubdivisionCell {
                matroid,
                witness: point(&x),
                is_maximal,
            })
            .collect(),
        vertices,
    })
}

/// Solve `V_B − Σ_{i∈B} x_i = c` over the bases of a connected cell.
pub(super) fn vertex(v: &ValuatedMatroid, cell: &Matroid) -> Result<TropPoint> {
    if !cell.is_connected() {
        return Err(Error::InconsistentCell(format!("{cell:?} is not connected")));
    }
    let n = v.n();
    // Unknowns x_0..x_{n-1}, c; the extra row pins x_0 = 0.
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for &b in cell.bases() {
        let val = v
            .finite_value(b)
            .ok_or_else(|| Error::CellNotFound(format!("{cell:?}")))?;
        let mut row = vec![Q::zero(); n + 1];
        for i in b.iter() {
            row[i] = Q::one();
        }
        row[n] = Q::one();
        rows.push(row);
        rhs.push(val.clone());
    }
    let mut pin = vec![Q::zero(); n + 1];
    pin[0] = Q::one();
    rows.push(pin);
    rhs.push(Q::zero());
    let sol = linalg::solve(&rows, &rhs)
        .ok_or_else(|| Error::InconsistentCell(format!("{cell:?}")))?;
    let x = &sol[..n];
    if &v.initial_matroid_at(x) != cell {
        return Err(Error::CellNotFound(format!("{cell:?}")));
    }
    Ok(point(x))
}
