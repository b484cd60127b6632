//! One constructed witness polygon per tile type.

use std::f64::consts::PI;

use super::construct::{construct_from_constraints, rational_unit, Affine, Closure, Constraints};
use super::{ClassifyError, TileType};
use crate::geom::{pt, q, ConvexPolygon, Point2, Rational, Vec2};

fn k(c: f64) -> Affine {
    Affine::constant(c)
}

fn p(i: usize) -> Affine {
    Affine::param(i)
}

fn lin(c: f64, terms: &[(usize, f64)]) -> Affine {
    Affine::linear(c, terms)
}

fn consts(v: &[f64]) -> Vec<Affine> {
    v.iter().map(|&c| k(c)).collect()
}

fn plan(angles: Vec<Affine>, lengths: Vec<Affine>, params: &[f64], closure: Closure) -> Constraints {
    let unknowns = if params.len() == 1 { vec![0] } else { vec![0, 1] };
    Constraints {
        angles,
        lengths,
        params: params.to_vec(),
        unknowns,
        closure,
    }
}

/// Angle pattern shared by types 11, 12 and 14:
/// `α_1 = 90°`, `α_2 = s`, `α_3 = 360° − 2s`, `α_4 = 270° − s`, `α_5 = 2s − 180°`.
fn right_angle_family() -> Vec<Affine> {
    vec![
        k(90.0),
        p(0),
        lin(360.0, &[(0, -2.0)]),
        lin(270.0, &[(0, -1.0)]),
        lin(-180.0, &[(0, 2.0)]),
    ]
}

/// Constraint set whose solution is a polygon of the given type.
pub fn witness_constraints(t: TileType) -> Constraints {
    use Closure::*;
    match t {
        TileType::Hex1 => plan(
            consts(&[130.0, 120.0, 110.0, 125.0, 115.0, 120.0]),
            vec![k(1.0), k(1.3), k(0.8), k(1.0), p(0), p(1)],
            &[1.0, 1.0],
            Edge(6),
        ),
        TileType::Hex2 => plan(
            consts(&[120.0, 115.0, 130.0, 125.0, 110.0, 120.0]),
            vec![k(1.0), k(1.2), p(0), k(1.0), p(0), p(1)],
            &[1.0, 1.0],
            Edge(6),
        ),
        TileType::Hex3 => plan(
            consts(&[120.0, 110.0, 120.0, 130.0, 120.0, 120.0]),
            vec![k(1.0), k(1.0), p(0), p(0), p(1), p(1)],
            &[1.0, 1.0],
            Apex(1),
        ),
        TileType::Pent1 => plan(
            consts(&[110.0, 130.0, 120.0, 95.0, 85.0]),
            vec![k(1.0), k(1.2), k(0.9), p(0), p(1)],
            &[1.0, 1.0],
            Edge(5),
        ),
        TileType::Pent2 => plan(
            consts(&[100.0, 140.0, 100.0, 120.0, 80.0]),
            vec![k(1.0), k(0.8), p(0), k(1.0), p(1)],
            &[1.0, 1.0],
            Edge(5),
        ),
        TileType::Pent3 => plan(
            consts(&[120.0, 100.0, 120.0, 120.0, 80.0]),
            vec![k(1.0), k(1.0), p(0), lin(0.0, &[(0, 1.0), (1, 1.0)]), p(1)],
            &[0.5, 0.5],
            Edge(5),
        ),
        TileType::Pent4 => plan(
            vec![k(90.0), k(120.0), k(90.0), p(0), lin(240.0, &[(0, -1.0)])],
            vec![k(1.0), k(1.0), k(0.8), k(0.8), p(1)],
            &[120.0, 1.0],
            Edge(5),
        ),
        TileType::Pent5 => plan(
            vec![k(60.0), k(130.0), k(120.0), p(0), lin(230.0, &[(0, -1.0)])],
            vec![k(1.0), k(1.0), k(0.6), k(0.6), p(1)],
            &[110.0, 1.0],
            Edge(5),
        ),
        // α_3 = 55°, α_1 = 2·α_3.
        TileType::Pent6 => plan(
            vec![k(110.0), p(0), k(55.0), lin(250.0, &[(0, -1.0)]), k(125.0)],
            vec![k(1.0), k(1.0), p(1), p(1), k(1.0)],
            &[120.0, 1.5],
            Apex(3),
        ),
        // α_2 = 150°, α_4 = t.
        TileType::Pent7 => plan(
            vec![lin(360.0, &[(0, -2.0)]), k(150.0), k(60.0), p(0), lin(-30.0, &[(0, 1.0)])],
            vec![k(1.0), k(1.0), k(1.0), k(1.0), p(1)],
            &[100.0, 1.0],
            Edge(5),
        ),
        // α_1 = 110°, α_4 = t.
        TileType::Pent8 => plan(
            vec![k(110.0), k(140.0), lin(360.0, &[(0, -2.0)]), p(0), lin(-70.0, &[(0, 1.0)])],
            vec![k(1.0), k(1.0), k(1.0), k(1.0), p(1)],
            &[140.0, 1.0],
            Edge(5),
        ),
        // α_4 = 100°.
        TileType::Pent9 => plan(
            consts(&[80.0, 140.0, 130.0, 100.0, 90.0]),
            vec![k(1.0), p(0), p(1), lin(1.0, &[(0, -1.0)]), k(1.0)],
            &[0.5, 1.0],
            Edge(3),
        ),
        // α_5 = 110°, α_4 = t.
        TileType::Pent10 => plan(
            vec![lin(-70.0, &[(0, 1.0)]), k(140.0), lin(360.0, &[(0, -2.0)]), p(0), k(110.0)],
            vec![k(1.0), k(1.0), k(1.0), k(1.0), p(1)],
            &[130.0, 1.0],
            Edge(5),
        ),
        TileType::Pent11 => plan(
            right_angle_family(),
            vec![k(0.2), p(1), k(0.6), k(1.0), k(1.0)],
            &[120.0, 1.0],
            Edge(2),
        ),
        TileType::Pent12 => plan(
            right_angle_family(),
            vec![k(0.5), k(1.0), p(1), k(1.0), lin(1.0, &[(1, -1.0)])],
            &[120.0, 0.4],
            Edge(2),
        ),
        // α_2 = α_5 = 110°.
        TileType::Pent13 => plan(
            consts(&[90.0, 110.0, 90.0, 140.0, 110.0]),
            vec![p(1), p(0), k(1.0), k(1.0), k(2.0)],
            &[1.0, 1.0],
            Edge(1),
        ),
        TileType::Pent14 => plan(
            right_angle_family(),
            vec![k(1.0), p(1), k(1.0), k(2.0), k(2.0)],
            &[145.0, 2.5],
            Edge(2),
        ),
        TileType::Pent15 => plan(
            consts(&[60.0, 135.0, 105.0, 90.0, 150.0]),
            vec![k(2.0), k(1.0), p(0), k(1.0), k(1.0)],
            &[1.9],
            Edge(3),
        ),
        TileType::Triangle => plan(
            consts(&[60.0, 60.0, 60.0]),
            vec![k(1.0), p(0), p(1)],
            &[1.0, 1.0],
            Edge(3),
        ),
        TileType::Quadrilateral => plan(
            consts(&[90.0, 90.0, 90.0, 90.0]),
            vec![k(1.0), k(2.0), p(0), p(1)],
            &[1.0, 2.0],
            Edge(4),
        ),
    }
}

pub fn witness(t: TileType) -> Result<ConvexPolygon, ClassifyError> {
    construct_from_constraints(&witness_constraints(t))
}

/// A centrally symmetric lattice hexagon.
pub fn symmetric_hexagon() -> ConvexPolygon {
    ConvexPolygon::new(vec![
        pt(q(2, 1), q(0, 1)),
        pt(q(1, 1), q(2, 1)),
        pt(q(-1, 1), q(2, 1)),
        pt(q(-2, 1), q(0, 1)),
        pt(q(-1, 1), q(-2, 1)),
        pt(q(1, 1), q(-2, 1)),
    ])
    .expect("convex")
}

/// Regular hexagon of side 1 up to a ~1e-16 rotation of each edge.
///
/// Edges are rational unit vectors at 0°, 60°, 120° and their negatives, so
/// every squared side length is exactly 1.
pub fn regular_hexagon() -> ConvexPolygon {
    let e: Vec<Vec2> = (0..3).map(|k| rational_unit(k as f64 * PI / 3.0)).collect();
    let mut v = Vec::with_capacity(6);
    let mut cur = Point2::origin();
    for i in 0..6 {
        v.push(cur.clone());
        let step = if i < 3 { e[i].clone() } else { -&e[i - 3] };
        cur = &cur + &step;
    }
    ConvexPolygon::new(v).expect("convex")
}

/// Regular `n`-gon of side about 1, with rational coordinates.
///
/// For even `n` the edges are rational unit vectors and their negatives, so
/// the polygon is exactly centrally symmetric and equilateral. For odd `n`
/// the vertices of the circumscribed unit circle are rounded instead.
pub fn regular_polygon(n: usize) -> ConvexPolygon {
    assert!(n >= 3, "a polygon needs three vertices");
    let v: Vec<Point2> = if n % 2 == 0 {
        let e: Vec<Vec2> = (0..n / 2).map(|k| rational_unit(2.0 * PI * k as f64 / n as f64)).collect();
        let mut cur = Point2::origin();
        (0..n)
            .map(|i| {
                let here = cur.clone();
                let step = if i < n / 2 { e[i].clone() } else { -&e[i - n / 2] };
                cur = &cur + &step;
                here
            })
            .collect()
    } else {
        (0..n)
            .map(|k| {
                let t = 2.0 * PI * k as f64 / n as f64;
                Point2::new(
                    Rational::approximate(t.cos(), 1 << 20).expect("finite"),
                    Rational::approximate(t.sin(), 1 << 20).expect("finite"),
                )
            })
            .collect()
    };
    ConvexPolygon::new(v).expect("convex")
}
