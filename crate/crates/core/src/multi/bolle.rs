//! Bolle's criterion for multiple lattice tilings by convex polygons.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geom::{ConvexPolygon, Lattice2, Rational};

/// Why `P + Λ` is not a multiple lattice tiling. Edge indices are 0-based:
/// edge `i` runs from vertex `i-1` to vertex `i` of the recentered polygon.
#[derive(Debug, Error, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum BolleFailure {
    #[error("polygon is not centrally symmetric")]
    NotCentrallySymmetric,
    #[error("open edge {0} contains no point of the half lattice")]
    EdgeMissesHalfLattice(usize),
    #[error("edge {0} has its midpoint off the half lattice and is not a lattice vector")]
    EdgeVectorNotInLattice(usize),
    #[error("area / determinant = {0} is not a positive integer")]
    NonIntegralFold(Rational),
}

/// Returns the fold `k = area(P) / det(Λ)` when `P + Λ` is a `k`-fold tiling.
pub fn bolle_check(p: &ConvexPolygon, lattice: &Lattice2) -> Result<u64, BolleFailure> {
    let center = p
        .centrally_symmetric_center()
        .ok_or(BolleFailure::NotCentrallySymmetric)?;
    let p = p.translate(&-&center.to_vec());
    for i in 0..p.len() {
        let (a, b) = p.edge(i);
        if lattice.first_half_lattice_point_on_segment(a, b).is_none() {
            return Err(BolleFailure::EdgeMissesHalfLattice(i));
        }
        if !lattice.half_contains(&a.midpoint(b)) && !lattice.contains(&p.edge_vector(i)) {
            return Err(BolleFailure::EdgeVectorNotInLattice(i));
        }
    }
    let fold = p.area() / lattice.determinant();
    match fold.to_i64() {
        Some(k) if fold.is_integer() && k > 0 => Ok(k as u64),
        _ => Err(BolleFailure::NonIntegralFold(fold)),
    }
}
