//! Strictly convex polygons with exact vertices.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::rational::Rational;
use super::vector::{Mat2, Point2, Vec2};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolygonError {
    #[error("a polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("polygon has zero area")]
    Degenerate,
    #[error("vertices {0} and its neighbours are collinear (or repeated)")]
    Collinear(usize),
    #[error("polygon is not convex at vertex {0}")]
    NotConvex(usize),
    #[error("polygon boundary winds more than once")]
    SelfIntersecting,
    #[error("singular linear map")]
    SingularMatrix,
}

/// Where a point sits relative to a closed polygon.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Location {
    Interior,
    Boundary(BoundaryHit),
    Exterior,
}

/// Which part of the boundary was hit. Edge `i` joins vertex `i - 1` and vertex `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundaryHit {
    Vertex(usize),
    Edge(usize),
}

impl Location {
    pub fn is_interior(&self) -> bool {
        matches!(self, Location::Interior)
    }

    pub fn is_boundary(&self) -> bool {
        matches!(self, Location::Boundary(_))
    }
}

/// A strictly convex polygon with counterclockwise vertices.
///
/// Indexing follows the convention used throughout the crate: edge `i` runs
/// from vertex `i - 1` to vertex `i` (indices mod `n`), and the inner angle at
/// vertex `i` lies between edges `i` and `i + 1`.
#[derive(Clone, Serialize, Deserialize)]
#[serde(try_from = "RawPolygon")]
pub struct ConvexPolygon {
    vertices: Vec<Point2>,
    #[serde(skip)]
    reoriented: bool,
}

#[derive(Deserialize)]
struct RawPolygon {
    vertices: Vec<Point2>,
}

impl TryFrom<RawPolygon> for ConvexPolygon {
    type Error = PolygonError;

    fn try_from(raw: RawPolygon) -> Result<Self, Self::Error> {
        ConvexPolygon::new(raw.vertices)
    }
}

impl PartialEq for ConvexPolygon {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices
    }
}

impl Eq for ConvexPolygon {}

impl std::hash::Hash for ConvexPolygon {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.vertices.hash(state);
    }
}

impl std::fmt::Debug for ConvexPolygon {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(&self.vertices).finish()
    }
}

impl ConvexPolygon {
    /// Validates and normalizes a vertex list. Clockwise input is reversed
    /// (keeping the first vertex first) and flagged via [`Self::was_reoriented`].
    pub fn new(mut vertices: Vec<Point2>) -> Result<Self, PolygonError> {
        let n = vertices.len();
        if n < 3 {
            return Err(PolygonError::TooFewVertices(n));
        }
        let twice_area = shoelace(&vertices);
        if twice_area.is_zero() {
            return Err(PolygonError::Degenerate);
        }
        let reoriented = twice_area.is_negative();
        if reoriented {
            vertices[1..].reverse();
        }
        let poly = ConvexPolygon {
            vertices,
            reoriented,
        };
        poly.check_strictly_convex()?;
        Ok(poly)
    }

    fn check_strictly_convex(&self) -> Result<(), PolygonError> {
        let n = self.len();
        let edges: Vec<Vec2> = (0..n).map(|i| self.edge_vector(i)).collect();
        for i in 0..n {
            let turn = edges[i].cross(&edges[(i + 1) % n]);
            match turn.signum() {
                1 => {}
                0 => return Err(PolygonError::Collinear(i)),
                _ => return Err(PolygonError::NotConvex(i)),
            }
        }
        // All left turns; the edge directions must sweep the circle exactly once.
        let angles: Vec<Rational> = edges.iter().map(Vec2::pseudo_angle).collect();
        let descents = (0..n)
            .filter(|&i| angles[(i + 1) % n] < angles[i])
            .count();
        if descents != 1 {
            return Err(PolygonError::SelfIntersecting);
        }
        Ok(())
    }

    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &Point2 {
        &self.vertices[i % self.vertices.len()]
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// True when the input was clockwise and got reversed at construction.
    pub fn was_reoriented(&self) -> bool {
        self.reoriented
    }

    /// Vector of edge `i`, from vertex `i - 1` to vertex `i`.
    pub fn edge_vector(&self, i: usize) -> Vec2 {
        let n = self.len();
        let i = i % n;
        &self.vertices[i] - &self.vertices[(i + n - 1) % n]
    }

    /// Endpoints `(start, end)` of edge `i`.
    pub fn edge(&self, i: usize) -> (&Point2, &Point2) {
        let n = self.len();
        let i = i % n;
        (&self.vertices[(i + n - 1) % n], &self.vertices[i])
    }

    pub fn edge_midpoint(&self, i: usize) -> Point2 {
        let (a, b) = self.edge(i);
        a.midpoint(b)
    }

    /// Exact enclosed area (shoelace).
    pub fn area(&self) -> Rational {
        shoelace(&self.vertices) * Rational::new(1, 2)
    }

    /// The center of symmetry, if the polygon is centrally symmetric.
    pub fn centrally_symmetric_center(&self) -> Option<Point2> {
        let n = self.len();
        if n % 2 != 0 {
            return None;
        }
        let h = n / 2;
        let sum_x = &self.vertices[0].x + &self.vertices[h].x;
        let sum_y = &self.vertices[0].y + &self.vertices[h].y;
        for i in 1..h {
            let (a, b) = (&self.vertices[i], &self.vertices[i + h]);
            if &a.x + &b.x != sum_x || &a.y + &b.y != sum_y {
                return None;
            }
        }
        let half = Rational::new(1, 2);
        Some(Point2::new(sum_x * &half, sum_y * &half))
    }

    pub fn is_centrally_symmetric(&self) -> bool {
        self.centrally_symmetric_center().is_some()
    }

    pub fn translate(&self, t: &Vec2) -> ConvexPolygon {
        ConvexPolygon {
            vertices: self.vertices.iter().map(|v| v + t).collect(),
            reoriented: false,
        }
    }

    /// Image under a nonsingular linear map; orientation is restored when
    /// `det < 0` by reversing the vertex order (first vertex kept first).
    pub fn apply_linear(&self, m: &Mat2) -> Result<ConvexPolygon, PolygonError> {
        let det = m.det();
        if det.is_zero() {
            return Err(PolygonError::SingularMatrix);
        }
        let mut vertices: Vec<Point2> = self.vertices.iter().map(|v| m.apply_point(v)).collect();
        if det.is_negative() {
            vertices[1..].reverse();
        }
        Ok(ConvexPolygon {
            vertices,
            reoriented: false,
        })
    }

    /// Axis-aligned bounding box `(min, max)`.
    pub fn bbox(&self) -> (Point2, Point2) {
        let mut min = self.vertices[0].clone();
        let mut max = self.vertices[0].clone();
        for v in &self.vertices[1..] {
            if v.x < min.x {
                min.x = v.x.clone();
            }
            if v.y < min.y {
                min.y = v.y.clone();
            }
            if v.x > max.x {
                max.x = v.x.clone();
            }
            if v.y > max.y {
                max.y = v.y.clone();
            }
        }
        (min, max)
    }

    /// Whether the closed polygons share a point (separating axis test).
    pub fn intersects(&self, other: &ConvexPolygon) -> bool {
        !self.separated_by_own_edge(other) && !other.separated_by_own_edge(self)
    }

    fn separated_by_own_edge(&self, other: &ConvexPolygon) -> bool {
        (0..self.len()).any(|i| {
            let (a, _) = self.edge(i);
            let e = self.edge_vector(i);
            // Outward normal of a counterclockwise edge.
            let n = Vec2::new(e.y.clone(), -&e.x);
            let h = n.dot(&a.to_vec());
            other.vertices.iter().all(|v| n.dot(&v.to_vec()) > h)
        })
    }

    /// Exact classification by the signs of the edge cross products.
    pub fn locate(&self, p: &Point2) -> Location {
        let n = self.len();
        let mut zero_edges = 0usize;
        let mut last_zero = 0usize;
        for i in 0..n {
            let (a, b) = self.edge(i);
            match (b - a).cross(&(p - a)).signum() {
                -1 => return Location::Exterior,
                0 => {
                    zero_edges += 1;
                    last_zero = i;
                }
                _ => {}
            }
        }
        if zero_edges == 0 {
            return Location::Interior;
        }
        // Inside the closed polygon and on an edge line, so on that edge.
        let (a, b) = self.edge(last_zero);
        if p == a {
            Location::Boundary(BoundaryHit::Vertex((last_zero + n - 1) % n))
        } else if p == b {
            Location::Boundary(BoundaryHit::Vertex(last_zero))
        } else {
            Location::Boundary(BoundaryHit::Edge(last_zero))
        }
    }

    /// The same polygon listed from vertex `offset`, optionally mirrored
    /// (`v'_i = v_{offset - i}`). Mirrored listings are clockwise.
    pub fn relabeled_vertices(&self, offset: usize, reflected: bool) -> Vec<Point2> {
        let n = self.len();
        (0..n)
            .map(|i| {
                let k = if reflected {
                    (offset + n - i % n) % n
                } else {
                    (offset + i) % n
                };
                self.vertices[k].clone()
            })
            .collect()
    }
}

fn shoelace(vertices: &[Point2]) -> Rational {
    let n = vertices.len();
    let mut acc = Rational::zero();
    for i in 0..n {
        let a = &vertices[i];
        let b = &vertices[(i + 1) % n];
        acc += &a.x * &b.y - &a.y * &b.x;
    }
    acc
}
