//! Multiple lattice tilings: Bolle's criterion, explicit families, affine
//! equivalence and a bounded search for small folds.

mod bolle;
mod equivalence;
mod families;
mod search;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use bolle::{bolle_check, BolleFailure};
pub use equivalence::{affine_equivalence, affine_equivalences, classify_fivefold_family, FivefoldClass, OctagonFamily};
pub use families::*;
pub use search::{candidate_lattices, lattice_multiplicity_search, lattice_multiplicity_search_with, SearchHit};

use crate::geom::{ConvexPolygon, Lattice2, Point2, PolygonError, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MultiError {
    #[error("parameter {value} is outside the range of family {family}")]
    ParamOutOfRange { family: &'static str, value: Rational },
    #[error("vertex {0} is not an interior point of W")]
    VertexOutsideW(Point2),
    #[error("reflection chain is not a convex decagon: {0}")]
    NotConvex(PolygonError),
}

/// A polygon, a lattice of translations and the claimed fold of `P + Λ`.
/// JSON form: `{"polygon": …, "lattice": …, "fold": k}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiTilingInstance {
    pub polygon: ConvexPolygon,
    pub lattice: Lattice2,
    pub fold: u64,
}

impl MultiTilingInstance {
    pub fn new(polygon: ConvexPolygon, lattice: Lattice2, fold: u64) -> Self {
        MultiTilingInstance { polygon, lattice, fold }
    }

    /// Claims the fold `area / det`, which must be a positive integer.
    pub fn with_fold(polygon: ConvexPolygon, lattice: Lattice2) -> Self {
        let k = polygon.area() / lattice.determinant();
        assert!(k.is_integer() && k.is_positive(), "area / det = {k}");
        let fold = k.to_i64().expect("small fold") as u64;
        MultiTilingInstance { polygon, lattice, fold }
    }

    /// Recentered copy; unchanged when the polygon has no center.
    pub fn centered(&self) -> Self {
        match self.polygon.centrally_symmetric_center() {
            Some(c) => MultiTilingInstance {
                polygon: self.polygon.translate(&-&c.to_vec()),
                ..self.clone()
            },
            None => self.clone(),
        }
    }
}
