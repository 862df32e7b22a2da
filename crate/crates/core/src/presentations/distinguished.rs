//! Distinguished matroids and apices: the connected cells of the
//! contractions `V/F` over cyclic flats `F`, weighted by `τ_M(∅)`.

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::subset::Subset;
use crate::transversal::is_transversal;
use crate::trop::TropPoint;
use crate::valuated::ValuatedMatroid;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistinguishedMember {
    /// Connected cell of `V/F`, on the ground set `support` renumbered.
    pub matroid: Matroid,
    /// The cyclic flat `F` of the underlying matroid (loops included).
    pub flat: Subset,
    /// `[n] ∖ F`.
    pub support: Subset,
    /// `τ_M(∅)`.
    pub multiplicity: usize,
    /// Vertex of `matroid` in `Be(V/F)`, extended by `∞` on `F`.
    pub apex: TropPoint,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistinguishedData {
    pub members: Vec<DistinguishedMember>,
}

impl DistinguishedData {
    pub fn total_multiplicity(&self) -> usize {
        self.members.iter().map(|m| m.multiplicity).sum()
    }

    /// Apices repeated according to multiplicity.
    pub fn apices(&self) -> Vec<TropPoint> {
        self.members
            .iter()
            .flat_map(|m| std::iter::repeat_n(m.apex.clone(), m.multiplicity))
            .collect()
    }
}

/// Whether every maximal cell of the subdivision is a transversal matroid.
pub fn has_transversal_facets(v: &ValuatedMatroid) -> bool {
    first_non_transversal_facet(v).is_none()
}

fn first_non_transversal_facet(v: &ValuatedMatroid) -> Option<Matroid> {
    v.maximal_cells()
        .into_iter()
        .map(|c| c.matroid)
        .find(|m| !is_transversal(m).is_yes())
}

/// Whether `V` is the image of a tropical matrix. Decided by the facets;
/// when they are transversal the distinguished apices are also checked to
/// map back onto `V`.
pub fn is_transversal_valuated(v: &ValuatedMatroid) -> bool {
    if !has_transversal_facets(v) {
        return false;
    }
    if !v.underlying().coloops().is_empty() {
        return true;
    }
    let apices = distinguished(v).expect("transversal facets").apices();
    let back = crate::trop::TropMatrix::from_points(&apices)
        .and_then(|a| a.stiefel())
        .expect("apices form an in-domain matrix");
    assert_eq!(&back, v, "distinguished apices do not present V");
    true
}

pub fn distinguished(v: &ValuatedMatroid) -> Result<DistinguishedData> {
    let n = v.n();
    let m = v.underlying();
    let coloops = m.coloops();
    if !coloops.is_empty() {
        return Err(Error::HasColoops(coloops));
    }
    if let Some(bad) = first_non_transversal_facet(v) {
        return Err(Error::NotTransversalFacets(format!("{bad:?}")));
    }
    let mut members = Vec::new();
    let cyclic = m.cyclic_flats();
    for &f in cyclic.flats() {
        let support = f.complement(n);
        if support.is_empty() || !m.contract(f).is_connected() {
            continue;
        }
        let w = v.contract(f)?;
        for cell in w.maximal_cells() {
            let cm = cell.matroid;
            let t = cm.cyclic_flats().tau_bottom();
            if t <= 0 {
                continue;
            }
            let apex = w.vertex(&cm)?.extend_by_infinity(support, n);
            members.push(DistinguishedMember {
                matroid: cm,
                flat: f,
                support,
                multiplicity: t as usize,
                apex,
            });
        }
    }
    let data = DistinguishedData { members };
    if data.total_multiplicity() != v.rank() {
        return Err(Error::MultiplicityMismatch {
            expected: v.rank(),
            found: data.total_multiplicity(),
        });
    }
    Ok(data)
}
