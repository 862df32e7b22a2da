//! Deciding whether `d` points of `Be(V)` present `V` by counting them in
//! the regions around each vertex.

use rayon::prelude::*;

use super::regions::{r0_member, rinf_member};
use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::subset::Subset;
use crate::trop::TropPoint;
use crate::valuated::ValuatedMatroid;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SigmaKind {
    /// Points in `R₀(F, v)`; at most `cork(F)` allowed.
    Sigma0,
    /// Points in `R∞(F, v)`; exactly `cork(F)` required.
    SigmaInf,
}

impl SigmaKind {
    pub fn as_str(self) -> &'static str {
        match self {
            SigmaKind::Sigma0 => "sigma0",
            SigmaKind::SigmaInf => "sigmainf",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct RegionViolation {
    /// The connected cell whose vertex the regions are taken at.
    pub cell: Matroid,
    pub flat: Subset,
    pub kind: SigmaKind,
    pub count: usize,
    pub bound: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RegionReport {
    pub violations: Vec<RegionViolation>,
}

impl RegionReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Check the region counts of `points` at every vertex of the subdivision.
///
/// Loops are dropped. A disconnected `V` is split along its components: each
/// point must be finite on exactly one component, which must receive as many
/// points as its rank, and each block is then checked on its own.
pub fn verify_presentation(v: &ValuatedMatroid, points: &[TropPoint]) -> Result<RegionReport> {
    let n = v.n();
    if points.len() != v.rank() {
        return Err(Error::WrongArity {
            expected: v.rank(),
            got: points.len(),
        });
    }
    if let Some(p) = points.iter().find(|p| p.n() != n) {
        return Err(Error::DimensionMismatch(format!(
            "point of length {} for a ground set of size {n}",
            p.n()
        )));
    }
    if let Some(index) = points.iter().position(|p| !v.contains(p)) {
        return Err(Error::PointOutsideL { index });
    }
    let m = v.underlying();
    let coloops = m.coloops();
    if !coloops.is_empty() {
        return Err(Error::HasColoops(coloops));
    }
    let core = m.loops().complement(n);
    let mut violations = Vec::new();
    let comps = m.restrict(core).connected_components();
    for k in &comps {
        let block = k.expand(core);
        let mine: Vec<&TropPoint> = points
            .iter()
            .filter(|p| p.infinite_set().is_superset(core.difference(block)))
            .collect();
        let rank = m.rank_of(block);
        if comps.len() > 1 && mine.len() != rank {
            violations.push(RegionViolation {
                cell: m.clone(),
                flat: core.difference(block),
                kind: SigmaKind::SigmaInf,
                count: mine.len(),
                bound: rank,
            });
        }
    }
    if !violations.is_empty() {
        return Ok(RegionReport { violations });
    }
    for k in &comps {
        let block = k.expand(core);
        let vk = v.restrict(block)?;
        let pts = points
            .iter()
            .filter(|p| p.infinite_set().is_superset(core.difference(block)))
            .map(|p| p.project(block))
            .collect::<Result<Vec<_>>>()?;
        for mut w in verify_connected(&vk, &pts)? {
            w.cell = w.cell.expand_to(block, n);
            w.flat = w.flat.expand(block);
            violations.push(w);
        }
    }
    violations.sort();
    Ok(RegionReport { violations })
}

/// Region counts for a connected loopless `V`.
fn verify_connected(v: &ValuatedMatroid, points: &[TropPoint]) -> Result<Vec<RegionViolation>> {
    let cx = v.cell_complex()?;
    let per_cell: Vec<Result<Vec<RegionViolation>>> = cx
        .vertices
        .par_iter()
        .map(|(m, x)| check_cell(v, m, x, points))
        .collect();
    let mut out = Vec::new();
    for r in per_cell {
        out.extend(r?);
    }
    Ok(out)
}

fn check_cell(
    v: &ValuatedMatroid,
    m: &Matroid,
    x: &TropPoint,
    points: &[TropPoint],
) -> Result<Vec<RegionViolation>> {
    let mut out = Vec::new();
    let d = m.rank();
    for (f, r) in m.flats().iter() {
        let mut count = 0;
        for p in points {
            if r0_member(x, f, p)? {
                count += 1;
            }
        }
        if count > d - r {
            out.push(RegionViolation {
                cell: m.clone(),
                flat: f,
                kind: SigmaKind::Sigma0,
                count,
                bound: d - r,
            });
        }
    }
    let cyclic = m.cyclic_flats();
    for (&f, &r) in cyclic.flats().iter().zip(cyclic.ranks()) {
        let mut count = 0;
        for p in points {
            // R∞ ⊆ R₀ at the vertex, so points outside R₀ can be skipped.
            if r0_member(x, f, p)? && rinf_member(v, m, f, p)? {
                count += 1;
            }
        }
        if count != d - r {
            out.push(RegionViolation {
                cell: m.clone(),
                flat: f,
                kind: SigmaKind::SigmaInf,
                count,
                bound: d - r,
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::tests::s;
    use crate::trop::TropMatrix;
    use crate::valuated::tests::{ex1, zoom_example};

    fn pts(rows: &[&str]) -> Vec<TropPoint> {
        rows.iter().map(|r| TropPoint::parse(r).unwrap()).collect()
    }

    #[test]
    fn first_example_rows_present() {
        let report = verify_presentation(&ex1(), &pts(&["0,0,0,0", "0,0,1,1"])).unwrap();
        assert!(report.ok(), "{report:?}");
        assert!(verify_presentation(&ex1(), &pts(&["3,0,0,0", "0,0,1,5/2"]))
            .unwrap()
            .ok());
    }

    #[test]
    fn two_points_on_the_same_side_fail() {
        let report = verify_presentation(&ex1(), &pts(&["1,0,0,0", "0,2,0,0"])).unwrap();
        assert!(!report.ok());
        assert!(report.violations.iter().any(|w| w.kind == SigmaKind::SigmaInf
            && w.flat == s(&[1, 2])
            && w.count == 2
            && w.bound == 1));
    }

    #[test]
    fn points_off_the_space_are_rejected() {
        assert_eq!(
            verify_presentation(&ex1(), &pts(&["0,1,2,3", "0,0,1,1"])),
            Err(Error::PointOutsideL { index: 0 })
        );
    }

    #[test]
    fn zoom_example_rows_present() {
        let rows = pts(&["0,0,0,0,0", "1,1,1,0,0", "inf,0,0,inf,inf"]);
        assert!(verify_presentation(&zoom_example(), &rows).unwrap().ok());
        let bad = pts(&["0,0,0,0,0", "1,1,1,0,0", "1,1,1,0,0"]);
        assert!(zoom_example().contains(&bad[2]));
        assert!(!verify_presentation(&zoom_example(), &bad).unwrap().ok());
    }

    #[test]
    fn direct_sums_split_by_block() {
        let a = TropMatrix::parse(&["0,1,inf,inf", "inf,inf,0,3"]).unwrap();
        let v = a.stiefel().unwrap();
        assert!(verify_presentation(&v, &a.row_points().unwrap()).unwrap().ok());
        let mixed = pts(&["0,1,0,3", "inf,inf,0,3"]);
        if mixed.iter().all(|p| v.contains(p)) {
            assert!(!verify_presentation(&v, &mixed).unwrap().ok());
        }
    }
}
