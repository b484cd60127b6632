//! The explicit five- and seven-fold lattice tilings by octagons and decagons.

use serde::{Deserialize, Serialize};

use super::{MultiError, MultiTilingInstance};
use crate::geom::{pt, q, ConvexPolygon, Lattice2, Location, Point2, Rational, Vec2};

/// A member of one of the shipped families.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", content = "param")]
pub enum FamilyParam {
    SevenFold,
    Decagon(Point2),
    OctA(Rational),
    OctB(Rational),
    OctAPrime(Rational),
    OctBPrime(Rational),
}

impl FamilyParam {
    pub fn instance(&self) -> Result<MultiTilingInstance, MultiError> {
        match self {
            FamilyParam::SevenFold => Ok(sevenfold_octagon()),
            FamilyParam::Decagon(v) => {
                let p = decagon_from_vertex(v)?;
                Ok(MultiTilingInstance::with_fold(p, Lattice2::integer()))
            }
            FamilyParam::OctA(a) => octagon_alpha(a),
            FamilyParam::OctB(b) => octagon_beta(b),
            FamilyParam::OctAPrime(a) => octagon_alpha_prime(a),
            FamilyParam::OctBPrime(b) => octagon_beta_prime(b),
        }
    }

    /// Short name used on the command line.
    pub fn name(&self) -> &'static str {
        match self {
            FamilyParam::SevenFold => "sevenfold",
            FamilyParam::Decagon(_) => "decagon",
            FamilyParam::OctA(_) => "octA",
            FamilyParam::OctB(_) => "octB",
            FamilyParam::OctAPrime(_) => "octAPrime",
            FamilyParam::OctBPrime(_) => "octBPrime",
        }
    }
}

fn symmetric(half: [Point2; 4]) -> Vec<Point2> {
    let neg: Vec<Point2> = half.iter().map(|p| -p).collect();
    half.into_iter().chain(neg).collect()
}

fn octagon(vertices: Vec<Point2>) -> ConvexPolygon {
    ConvexPolygon::new(vertices).expect("family octagons are convex inside their range")
}

fn check_range(
    family: &'static str,
    x: &Rational,
    lo: Rational,
    hi: Rational,
    hi_closed: bool,
) -> Result<(), MultiError> {
    let ok = *x > lo && (*x < hi || (hi_closed && *x == hi));
    if ok {
        Ok(())
    } else {
        Err(MultiError::ParamOutOfRange {
            family,
            value: x.clone(),
        })
    }
}

/// The seven-fold lattice tiling of the integer lattice by an octagon of area 7.
pub fn sevenfold_octagon() -> MultiTilingInstance {
    let p = octagon(symmetric([
        pt(q(1, 2), q(-3, 2)),
        pt(q(3, 2), q(-1, 2)),
        pt(q(3, 2), q(1, 2)),
        pt(q(1, 2), q(3, 2)),
    ]));
    MultiTilingInstance::with_fold(p, Lattice2::integer())
}

/// Vertices for any `α`, convex only inside the range.
pub fn octagon_alpha_vertices(a: &Rational) -> Vec<Point2> {
    let one = Rational::one();
    symmetric([
        pt(-a, q(-3, 2)),
        pt(&one - a, q(-3, 2)),
        pt(&one + a, q(-1, 2)),
        pt(&one - a, q(1, 2)),
    ])
}

/// Vertices for any `β`, convex only inside the range.
pub fn octagon_beta_vertices(b: &Rational) -> Vec<Point2> {
    let one = Rational::one();
    symmetric([
        pt(b.clone(), q(-2, 1)),
        pt(&one + b, q(-2, 1)),
        pt(&one - b, q(0, 1)),
        pt(b.clone(), q(1, 1)),
    ])
}

/// Octagon over `ℤ²`, `0 < α < 1/4`.
pub fn octagon_alpha(a: &Rational) -> Result<MultiTilingInstance, MultiError> {
    check_range("octA", a, q(0, 1), q(1, 4), false)?;
    Ok(MultiTilingInstance::with_fold(octagon(octagon_alpha_vertices(a)), Lattice2::integer()))
}

/// Octagon over `ℤ²`, `1/4 < β < 1/3`.
pub fn octagon_beta(b: &Rational) -> Result<MultiTilingInstance, MultiError> {
    check_range("octB", b, q(1, 4), q(1, 3), false)?;
    Ok(MultiTilingInstance::with_fold(octagon(octagon_beta_vertices(b)), Lattice2::integer()))
}

pub fn lattice_alpha_prime(a: &Rational) -> Lattice2 {
    Lattice2::new(
        Vec2::new(q(2, 1), q(0, 1)),
        Vec2::new(Rational::one() + a * &q(1, 2), q(1, 1)),
    )
    .expect("independent")
}

pub fn lattice_beta_prime(b: &Rational) -> Lattice2 {
    Lattice2::new(
        Vec2::new(q(2, 1), q(0, 1)),
        Vec2::new(Rational::one() + b * &q(1, 2), q(2, 1)),
    )
    .expect("independent")
}

/// Vertices in clockwise order.
pub fn octagon_alpha_prime_vertices(a: &Rational) -> Vec<Point2> {
    let five_a = a * &q(5, 4);
    let quarter_a = a * &q(1, 4);
    symmetric([
        pt(q(3, 2) - &five_a, q(-2, 1)),
        pt(q(-1, 2) - &five_a, q(-2, 1)),
        pt(&quarter_a - &q(3, 2), q(0, 1)),
        pt(&quarter_a - &q(3, 2), q(1, 1)),
    ])
}

/// Vertices in clockwise order.
pub fn octagon_beta_prime_vertices(b: &Rational) -> Vec<Point2> {
    symmetric([
        pt(q(2, 1) - b, q(-3, 1)),
        pt(-b, q(-3, 1)),
        pt(q(-2, 1), q(-1, 1)),
        pt(q(-2, 1), q(1, 1)),
    ])
}

/// Octagon over `⟨(2,0), (1+α/2, 1)⟩`, `0 < α < 2/3`.
pub fn octagon_alpha_prime(a: &Rational) -> Result<MultiTilingInstance, MultiError> {
    check_range("octAPrime", a, q(0, 1), q(2, 3), false)?;
    let p = octagon(octagon_alpha_prime_vertices(a));
    Ok(MultiTilingInstance::with_fold(p, lattice_alpha_prime(a)))
}

/// Octagon over `⟨(2,0), (1+β/2, 2)⟩`, `0 < β ≤ 1`.
pub fn octagon_beta_prime(b: &Rational) -> Result<MultiTilingInstance, MultiError> {
    check_range("octBPrime", b, q(0, 1), q(1, 1), true)?;
    let p = octagon(octagon_beta_prime_vertices(b));
    Ok(MultiTilingInstance::with_fold(p, lattice_beta_prime(b)))
}

/// Region of admissible first vertices for the five-fold decagons.
pub fn w_region() -> ConvexPolygon {
    ConvexPolygon::new(vec![
        pt(q(-1, 2), q(1, 1)),
        pt(q(-1, 2), q(3, 4)),
        pt(q(-2, 3), q(2, 3)),
        pt(q(-3, 4), q(3, 4)),
    ])
    .expect("convex")
}

/// Edge midpoints `u_1..u_10` shared by every decagon of the family.
pub fn decagon_midpoints() -> Vec<Point2> {
    let half = [
        pt(q(0, 1), q(1, 1)),
        pt(q(1, 1), q(1, 1)),
        pt(q(3, 2), q(1, 2)),
        pt(q(3, 2), q(0, 1)),
        pt(q(1, 1), q(-1, 2)),
    ];
    let neg: Vec<Point2> = half.iter().map(|p| -p).collect();
    half.into_iter().chain(neg).collect()
}

/// Reflects `v_1` successively through the fixed midpoints:
/// `v_{i+1} = 2·u_i − v_i`. The chain closes because the alternating sum of
/// the midpoints vanishes.
pub fn decagon_chain(v1: &Point2) -> Vec<Point2> {
    let u = decagon_midpoints();
    let mut v = vec![v1.clone()];
    for ui in u.iter().take(9) {
        let next = v.last().unwrap().reflect_through(ui);
        v.push(next);
    }
    v
}

pub fn decagon_from_vertex(v1: &Point2) -> Result<ConvexPolygon, MultiError> {
    if w_region().locate(v1) != Location::Interior {
        return Err(MultiError::VertexOutsideW(v1.clone()));
    }
    ConvexPolygon::new(decagon_chain(v1)).map_err(MultiError::NotConvex)
}
