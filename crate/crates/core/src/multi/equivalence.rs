//! Linear equivalence of centered polygons and membership in the five-fold families.

use serde::{Deserialize, Serialize};

use super::families::{decagon_midpoints, octagon_alpha_vertices, octagon_beta_vertices, w_region};
use crate::geom::{q, ConvexPolygon, Location, Mat2, Point2, Rational, Vec2};

/// Relabelings in tie-break order: smallest offset first, unreflected first.
fn labelings(n: usize) -> impl Iterator<Item = (usize, bool)> {
    (0..n).flat_map(|o| [(o, false), (o, true)])
}

/// The map sending `p0, p1` to `q0, q1`, if `p0, p1` are independent.
fn map_pair(p0: &Point2, p1: &Point2, q0: &Point2, q1: &Point2) -> Option<Mat2> {
    let src = Mat2::from_columns(&p0.to_vec(), &p1.to_vec()).inverse()?;
    let dst = Mat2::from_columns(&q0.to_vec(), &q1.to_vec());
    Some(&dst * &src)
}

/// A linear map `M` with `M·P = Q` (as vertex sets, in cyclic order).
///
/// Both polygons are expected to be centered at the origin. Labelings of `Q`
/// are tried by increasing offset, unreflected first; the first verified map
/// is returned.
pub fn affine_equivalence(p: &ConvexPolygon, q_poly: &ConvexPolygon) -> Option<Mat2> {
    equivalences(p, q_poly).next()
}

/// Every linear map `M` with `M·P = Q`, in the order of [`affine_equivalence`].
pub fn affine_equivalences(p: &ConvexPolygon, q_poly: &ConvexPolygon) -> Vec<Mat2> {
    equivalences(p, q_poly).collect()
}

fn equivalences<'a>(p: &'a ConvexPolygon, q_poly: &'a ConvexPolygon) -> impl Iterator<Item = Mat2> + 'a {
    let n = p.len();
    let pv = p.vertices();
    labelings(n)
        .filter(move |_| q_poly.len() == n)
        .filter_map(move |(o, r)| {
            let qv = q_poly.relabeled_vertices(o, r);
            let m = map_pair(&pv[0], &pv[1], &qv[0], &qv[1])?;
            let ok = !m.is_singular() && pv.iter().zip(&qv).all(|(a, b)| m.apply_point(a) == *b);
            ok.then_some(m)
        })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum OctagonFamily {
    /// Integer-lattice octagons with parameter `0 < α < 1/4`.
    OctA,
    /// Integer-lattice octagons with parameter `1/4 < β < 1/3`.
    OctB,
}

impl OctagonFamily {
    fn vertices(self, t: &Rational) -> Vec<Point2> {
        match self {
            OctagonFamily::OctA => octagon_alpha_vertices(t),
            OctagonFamily::OctB => octagon_beta_vertices(t),
        }
    }

    fn in_range(self, t: &Rational) -> bool {
        match self {
            OctagonFamily::OctA => *t > 0 && *t < q(1, 4),
            OctagonFamily::OctB => *t > q(1, 4) && *t < q(1, 3),
        }
    }
}

/// Position among the five-fold lattice tiles, up to linear maps.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "class")]
pub enum FivefoldClass {
    Parallelogram,
    CSHexagon,
    /// `map` carries the recentered input onto the family member at `param`.
    /// `params` lists every parameter of the family reachable by some map.
    OctagonFamily {
        family: OctagonFamily,
        param: Rational,
        params: Vec<Rational>,
        map: Mat2,
    },
    DecagonFamily {
        v1: Point2,
        map: Mat2,
    },
    None,
}

/// Solves `M(t)·p_k = f_k(t)` for `t`, where the family vertices are affine
/// in `t` and `M(t)` is fixed by the first two vertices.
fn solve_octagon(pv: &[Point2], family: OctagonFamily) -> Option<(Rational, Mat2)> {
    let zero = Rational::zero();
    let one = Rational::one();
    let f0 = family.vertices(&zero);
    let f1 = family.vertices(&one);
    let slope: Vec<Vec2> = f0.iter().zip(&f1).map(|(a, b)| b - a).collect();
    let src = Mat2::from_columns(&pv[0].to_vec(), &pv[1].to_vec()).inverse()?;
    let m0 = &Mat2::from_columns(&f0[0].to_vec(), &f0[1].to_vec()) * &src;
    let m1 = &Mat2::from_columns(&slope[0], &slope[1]) * &src;
    // Residual of vertex k is a_k + t·b_k.
    let rows: Vec<(Vec2, Vec2)> = (2..pv.len())
        .map(|k| {
            let a = &m0.apply(&pv[k].to_vec()) - &f0[k].to_vec();
            let b = &m1.apply(&pv[k].to_vec()) - &slope[k];
            (a, b)
        })
        .collect();
    let (a, b) = rows.iter().find(|(_, b)| !b.is_zero())?;
    let t = if !b.x.is_zero() {
        -(&a.x / &b.x)
    } else {
        -(&a.y / &b.y)
    };
    let ok = rows
        .iter()
        .all(|(a, b)| (a + &b.scale(&t)).is_zero());
    if !ok || !family.in_range(&t) {
        return None;
    }
    let m = Mat2::new(
        &m0.a + &(&m1.a * &t),
        &m0.b + &(&m1.b * &t),
        &m0.c + &(&m1.c * &t),
        &m0.d + &(&m1.d * &t),
    );
    if m.is_singular() {
        return None;
    }
    Some((t, m))
}

fn classify_octagon(p: &ConvexPolygon) -> FivefoldClass {
    let mut found: Option<(OctagonFamily, Rational, Mat2)> = None;
    let mut params: Vec<(OctagonFamily, Rational)> = Vec::new();
    for (o, r) in labelings(p.len()) {
        let pv = p.relabeled_vertices(o, r);
        for family in [OctagonFamily::OctA, OctagonFamily::OctB] {
            if let Some((t, m)) = solve_octagon(&pv, family) {
                params.push((family, t.clone()));
                if found.is_none() {
                    found = Some((family, t, m));
                }
            }
        }
    }
    match found {
        Some((family, param, map)) => {
            let mut ps: Vec<Rational> = params
                .into_iter()
                .filter(|(f, _)| *f == family)
                .map(|(_, t)| t)
                .collect();
            ps.sort();
            ps.dedup();
            FivefoldClass::OctagonFamily {
                family,
                param,
                params: ps,
                map,
            }
        }
        None => FivefoldClass::None,
    }
}

fn classify_decagon(p: &ConvexPolygon) -> FivefoldClass {
    let u = decagon_midpoints();
    let w = w_region();
    for (o, r) in labelings(p.len()) {
        let v = p.relabeled_vertices(o, r);
        let mids: Vec<Point2> = (0..10).map(|i| v[i].midpoint(&v[(i + 1) % 10])).collect();
        let Some(m) = map_pair(&mids[0], &mids[1], &u[0], &u[1]) else {
            continue;
        };
        if m.is_singular() || !mids.iter().zip(&u).all(|(a, b)| m.apply_point(a) == *b) {
            continue;
        }
        let v1 = m.apply_point(&v[0]);
        if w.locate(&v1) == Location::Interior {
            return FivefoldClass::DecagonFamily { v1, map: m };
        }
    }
    FivefoldClass::None
}

/// Decides which family of five-fold lattice tiles `P` belongs to, up to
/// nonsingular linear maps.
pub fn classify_fivefold_family(p: &ConvexPolygon) -> FivefoldClass {
    let Some(c) = p.centrally_symmetric_center() else {
        return FivefoldClass::None;
    };
    let p = p.translate(&-&c.to_vec());
    match p.len() {
        4 => FivefoldClass::Parallelogram,
        6 => FivefoldClass::CSHexagon,
        8 => classify_octagon(&p),
        10 => classify_decagon(&p),
        _ => FivefoldClass::None,
    }
}
