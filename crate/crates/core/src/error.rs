use thiserror::Error;

use crate::subset::Subset;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("every coordinate is infinite")]
    AllInfinite,

    #[error("base point has an infinite coordinate")]
    InfiniteBase,

    /// A `k × (n+1-k)` all-infinite submatrix blocks every transversal.
    #[error("matrix outside the Stiefel domain: rows {rows} x columns {cols} are all infinite")]
    OutOfDomain { rows: Subset, cols: Subset },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("basis family is not a matroid: {0}")]
    NotAMatroid(String),

    #[error("minor leaves an empty ground set")]
    EmptyGroundSet,

    #[error("{0} is not a flat")]
    NotAFlat(Subset),

    #[error("{0} is not a cyclic flat")]
    NotCyclicFlat(Subset),

    #[error("minor has empty support")]
    RankCollapse,

    #[error("linear system for connected cell {0} is inconsistent")]
    InconsistentCell(String),

    #[error("stable sum has empty support")]
    EmptySupport,

    #[error("stable intersection has empty support")]
    EmptyIntersection,

    #[error("set system admits no transversal of full size")]
    NoBasis,

    #[error("matroid is not transversal")]
    NotTransversal,

    #[error("cell {0} is not part of the subdivision")]
    CellNotFound(String),

    #[error("distinguished multiplicities sum to {found}, expected {expected}")]
    MultiplicityMismatch { expected: usize, found: usize },

    /// `index` is 0-based; the message counts from 1.
    #[error("point {} does not lie on the tropical linear space", index + 1)]
    PointOutsideL { index: usize },

    #[error("valuated matroid has a non-transversal maximal cell {0}")]
    NotTransversalFacets(String),

    #[error("expected {expected} points, got {got}")]
    WrongArity { expected: usize, got: usize },

    #[error("expected {expected} points infinite on {flat}, found {found}")]
    CountMismatch {
        flat: Subset,
        expected: usize,
        found: usize,
    },

    #[error("digraph has a negative cycle through {cycle:?}")]
    NegativeCycle { cycle: Vec<usize> },

    #[error("matching does not attain the minor of its basis")]
    NotMinimalMatching,

    #[error("coloops are not supported here: {0}")]
    HasColoops(Subset),

    #[error("loops are not supported here: {0}")]
    HasLoops(Subset),

    #[error("parse error: {0}")]
    Parse(String),
}
