//! Exact verification and classification of plane tilings by convex polygons.
//!
//! * [`geom`]: rationals, points, polygons, lattices.
//! * [`classify`]: pentagon/hexagon tile types and Archimedean vertex types.
//! * [`multi`]: Bolle's criterion and the explicit multiple lattice tilings.
//! * [`oracle`]: brute-force covering multiplicity.
//! * [`wheel`]: adjacent wheels at the vertices of a translative patch.
//! * [`svg`]: patch drawings.

pub mod classify;
pub mod exec;
pub mod multi;
pub mod oracle;
pub mod svg;
pub mod wheel;
pub mod geom;

pub use exec::Execution;
pub use geom::*;
