//! Exact 2D primitives.

pub mod lattice;
pub mod polygon;
pub mod rational;
pub mod vector;

pub use lattice::{Lattice2, LatticeError};
pub use polygon::{BoundaryHit, ConvexPolygon, Location, PolygonError};
pub use rational::{q, ParseRationalError, Rational};
pub use vector::{pt, vec2, Mat2, Point2, Vec2};
