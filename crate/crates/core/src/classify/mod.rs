//! Tile-type classification of convex polygons.

mod archimedean;
mod conditions;
mod construct;
mod metrics;
pub mod witness;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use archimedean::{archimedean_vertex_check, canonical_cycle, VertexType, KEPLER_TYPES};
pub use conditions::{conditions, evaluate_group, Condition, Evaluation};
pub use construct::{construct_from_constraints, Affine, Closure, Constraints};
pub use metrics::{compute_metrics, Labeling, PolygonMetrics};

use crate::exec::Execution;
use crate::geom::ConvexPolygon;

/// Default angle tolerance, in radians.
pub const EPS_ANGLE: f64 = 1.0 / (1u64 << 40) as f64;
/// Default relative tolerance for length relations involving sums.
pub const EPS_LEN: f64 = 1.0 / (1u64 << 40) as f64;
/// A failed group whose residual is below this is reported as `Unknown`.
pub const NEAR_MISS: f64 = 1.0 / (1u64 << 20) as f64;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ClassifyError {
    #[error("expected a {expected}-gon, got {got} vertices")]
    WrongArity { expected: usize, got: usize },
    #[error("inner angle at label {0} is numerically 0 or π")]
    DegenerateAngle(usize),
    #[error("angle sum is off by {0} rad")]
    AngleSumMismatch(f64),
    #[error("infeasible constraints: {0}")]
    InfeasibleConstraints(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TileType {
    Hex1,
    Hex2,
    Hex3,
    Pent1,
    Pent2,
    Pent3,
    Pent4,
    Pent5,
    Pent6,
    Pent7,
    Pent8,
    Pent9,
    Pent10,
    Pent11,
    Pent12,
    Pent13,
    Pent14,
    Pent15,
    Triangle,
    Quadrilateral,
}

impl TileType {
    pub const HEXAGONS: [TileType; 3] = [TileType::Hex1, TileType::Hex2, TileType::Hex3];
    pub const PENTAGONS: [TileType; 15] = [
        TileType::Pent1,
        TileType::Pent2,
        TileType::Pent3,
        TileType::Pent4,
        TileType::Pent5,
        TileType::Pent6,
        TileType::Pent7,
        TileType::Pent8,
        TileType::Pent9,
        TileType::Pent10,
        TileType::Pent11,
        TileType::Pent12,
        TileType::Pent13,
        TileType::Pent14,
        TileType::Pent15,
    ];

    /// The 18 hexagon and pentagon types.
    pub fn all_conditional() -> impl Iterator<Item = TileType> {
        Self::HEXAGONS.into_iter().chain(Self::PENTAGONS)
    }

    pub fn arity(self) -> usize {
        match self {
            TileType::Hex1 | TileType::Hex2 | TileType::Hex3 => 6,
            TileType::Triangle => 3,
            TileType::Quadrilateral => 4,
            _ => 5,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Tile,
    NotTile,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TypeMatch {
    #[serde(rename = "type")]
    pub tile_type: TileType,
    pub offset: usize,
    pub reflected: bool,
}

/// Smallest group residual of a type over all labelings.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Residual {
    #[serde(rename = "type")]
    pub tile_type: TileType,
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatchReport {
    pub verdict: Verdict,
    pub matches: Vec<TypeMatch>,
    pub residuals: Vec<Residual>,
}

impl MatchReport {
    pub fn types(&self) -> std::collections::BTreeSet<TileType> {
        self.matches.iter().map(|m| m.tile_type).collect()
    }

    pub fn contains(&self, t: TileType) -> bool {
        self.matches.iter().any(|m| m.tile_type == t)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    pub angle: f64,
    pub len: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            angle: EPS_ANGLE,
            len: EPS_LEN,
        }
    }
}

/// Only polygons with at most six edges can tile.
pub fn edge_count_gate(p: &ConvexPolygon) -> bool {
    p.len() <= 6
}

/// Parallelograms and centrally symmetric hexagons: the one-fold lattice tiles.
pub fn fedorov_check(p: &ConvexPolygon) -> bool {
    matches!(p.len(), 4 | 6) && p.is_centrally_symmetric()
}

fn match_types(p: &ConvexPolygon, types: &[TileType], tol: Tolerances) -> Result<MatchReport, ClassifyError> {
    let n = p.len();
    let mut matches = Vec::new();
    let mut best = vec![f64::INFINITY; types.len()];
    for lab in Labeling::all(n) {
        let m = compute_metrics(p, lab, tol.angle)?;
        for (k, &t) in types.iter().enumerate() {
            let e = evaluate_group(t, &m, tol.angle, tol.len);
            best[k] = best[k].min(e.residual);
            if e.holds {
                matches.push(TypeMatch {
                    tile_type: t,
                    offset: lab.offset,
                    reflected: lab.reflected,
                });
            }
        }
    }
    matches.sort();
    let verdict = if !matches.is_empty() {
        Verdict::Tile
    } else if best.iter().any(|&r| r < NEAR_MISS) {
        Verdict::Unknown
    } else {
        Verdict::NotTile
    };
    let residuals = types
        .iter()
        .zip(best)
        .map(|(&t, residual)| Residual { tile_type: t, residual })
        .collect();
    Ok(MatchReport {
        verdict,
        matches,
        residuals,
    })
}

pub fn classify_hexagon(p: &ConvexPolygon, tol: Tolerances) -> Result<MatchReport, ClassifyError> {
    if p.len() != 6 {
        return Err(ClassifyError::WrongArity { expected: 6, got: p.len() });
    }
    match_types(p, &TileType::HEXAGONS, tol)
}

pub fn classify_pentagon(p: &ConvexPolygon, tol: Tolerances) -> Result<MatchReport, ClassifyError> {
    if p.len() != 5 {
        return Err(ClassifyError::WrongArity { expected: 5, got: p.len() });
    }
    match_types(p, &TileType::PENTAGONS, tol)
}

/// Any convex polygon: triangles and quadrilaterals always tile, seven or
/// more edges never do, pentagons and hexagons are matched against the types.
pub fn classify(p: &ConvexPolygon, tol: Tolerances) -> Result<MatchReport, ClassifyError> {
    let trivial = |t: TileType| MatchReport {
        verdict: Verdict::Tile,
        matches: vec![TypeMatch {
            tile_type: t,
            offset: 0,
            reflected: false,
        }],
        residuals: Vec::new(),
    };
    match p.len() {
        3 => Ok(trivial(TileType::Triangle)),
        4 => Ok(trivial(TileType::Quadrilateral)),
        5 => classify_pentagon(p, tol),
        6 => classify_hexagon(p, tol),
        _ => Ok(MatchReport {
            verdict: Verdict::NotTile,
            matches: Vec::new(),
            residuals: Vec::new(),
        }),
    }
}

pub fn classify_all(
    polys: &[ConvexPolygon],
    tol: Tolerances,
    exec: Execution,
) -> Vec<Result<MatchReport, ClassifyError>> {
    exec.map(polys, |p| classify(p, tol))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{pt, q};

    fn poly(v: &[(i64, i64, i64, i64)]) -> ConvexPolygon {
        ConvexPolygon::new(v.iter().map(|&(a, b, c, d)| pt(q(a, b), q(c, d))).collect()).unwrap()
    }

    fn regular(n: usize) -> ConvexPolygon {
        witness::regular_polygon(n)
    }

    #[test]
    fn house_is_type_one() {
        let house = poly(&[(0, 1, 0, 1), (1, 1, 0, 1), (1, 1, 1, 1), (1, 2, 3, 2), (0, 1, 1, 1)]);
        let r = classify_pentagon(&house, Tolerances::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Tile);
        assert!(r.contains(TileType::Pent1));
    }

    #[test]
    fn regular_pentagon_is_not_a_tile() {
        let r = classify(&regular(5), Tolerances::default()).unwrap();
        assert!(r.matches.is_empty());
        assert_eq!(r.verdict, Verdict::NotTile);
    }

    #[test]
    fn heptagon_fails_gate() {
        let h = regular(7);
        assert!(!edge_count_gate(&h));
        assert_eq!(classify(&h, Tolerances::default()).unwrap().verdict, Verdict::NotTile);
        assert!(edge_count_gate(&regular(5)));
    }

    #[test]
    fn fedorov() {
        assert!(fedorov_check(&poly(&[(0, 1, 0, 1), (1, 1, 0, 1), (1, 1, 1, 1), (0, 1, 1, 1)])));
        let tri = poly(&[(0, 1, 0, 1), (1, 1, 0, 1), (0, 1, 1, 1)]);
        assert!(!fedorov_check(&tri));
        assert_eq!(classify(&tri, Tolerances::default()).unwrap().matches[0].tile_type, TileType::Triangle);
    }

    #[test]
    fn arity_errors() {
        let sq = poly(&[(0, 1, 0, 1), (1, 1, 0, 1), (1, 1, 1, 1), (0, 1, 1, 1)]);
        assert_eq!(
            classify_pentagon(&sq, Tolerances::default()),
            Err(ClassifyError::WrongArity { expected: 5, got: 4 })
        );
        assert!(classify_hexagon(&sq, Tolerances::default()).is_err());
    }

    #[test]
    fn report_json_shape() {
        let house = poly(&[(0, 1, 0, 1), (1, 1, 0, 1), (1, 1, 1, 1), (1, 2, 3, 2), (0, 1, 1, 1)]);
        let r = classify(&house, Tolerances::default()).unwrap();
        let j = serde_json::to_value(&r).unwrap();
        assert_eq!(j["verdict"], "Tile");
        assert_eq!(j["matches"][0]["type"], "Pent1");
        assert!(j["matches"][0]["offset"].is_u64());
        assert!(j["residuals"].as_array().unwrap().len() == 15);
    }
}
