//! Presentations of valuated matroids: multisets of `d` points of `Be(V)`
//! whose matrix has tropical Plücker vector `V`.
//!
//! Two independent deciders are provided. [`verify_presentation`] counts
//! points in regions around the vertices of the subdivision;
//! [`presentation_space_member`] matches points to the distinguished apices
//! and checks each group against a presentation fan.

mod distinguished;
mod fiber;
mod regions;
mod verify;

pub use distinguished::{
    distinguished, has_transversal_facets, is_transversal_valuated, DistinguishedData,
    DistinguishedMember,
};
pub use fiber::{
    contract_presentation, presentation_assignment, presentation_fan_member,
    presentation_space_member, sample_presentation,
};
pub use regions::{is_cell, r0_member, rinf_member, zoom};
pub use verify::{verify_presentation, RegionReport, RegionViolation, SigmaKind};

use crate::trop::TropPoint;
use crate::valuated::ValuatedMatroid;

/// Whether `y` lies on `Be(V)`.
pub fn membership(v: &ValuatedMatroid, y: &TropPoint) -> bool {
    v.contains(y)
}
