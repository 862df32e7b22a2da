//! Exact computations with valuated matroids, tropical linear spaces and
//! presentations of transversal valuated matroids.
//!
//! Ground sets are `[n] = {0, …, n-1}` internally; all JSON uses 1-based
//! elements.

pub mod cli;
pub mod error;
pub mod gammoid;
pub mod json;
pub mod linalg;
pub mod lp;
pub mod matroid;
#[cfg(any(test, feature = "oracle"))]
pub mod oracle;
pub mod presentations;
pub mod subset;
pub mod transversal;
pub mod trop;
pub mod valuated;

pub use error::{Error, Result};
pub use matroid::Matroid;
pub use subset::Subset;
pub use trop::{Trop, TropMatrix, TropPoint, Q};
pub use valuated::ValuatedMatroid;
