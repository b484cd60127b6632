//! Local structure of a lattice multiple tiling around the vertices of its translates.
//!
//! At a vertex `v`, the translates having `v` on their boundary chain into
//! adjacent wheels: each contributes the angle between its two boundary
//! half-lines at `v`, and the half-lines of consecutive members coincide. A
//! wheel closes after turning `2π·w` for some integer `w ≥ 1`. With `φ(v)` the
//! total winding and `ϕ(v)` the number of translates holding `v` in their
//! interior, a `k`-fold tiling satisfies `ϕ(v) + φ(v) = k`.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exec::Execution;
use crate::geom::{BoundaryHit, ConvexPolygon, Lattice2, Location, Point2, Rational, Vec2};
use crate::multi::{bolle_check, BolleFailure};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WheelError {
    #[error("polygon is not centrally symmetric")]
    NotCentrallySymmetric,
    #[error("P + Λ is not a multiple tiling: {0:?}")]
    NotMultipleTiling(BolleFailure),
    #[error("window must span at least three lattice periods per axis")]
    WindowTooSmall,
    #[error("{0} lies outside the window, its star may be truncated")]
    MarginViolation(Point2),
    #[error("{0} is not a vertex of any translate in the patch")]
    NotAVertex(Point2),
    #[error("half-lines at {0} do not close into wheels")]
    ChainingFailure(Point2),
}

/// Closed axis-parallel rectangle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Window {
    pub min: Point2,
    pub max: Point2,
}

impl Window {
    /// `[-r, r]²`.
    pub fn square(r: Rational) -> Self {
        Window {
            min: Point2::new(-&r, -&r),
            max: Point2::new(r.clone(), r),
        }
    }

    pub fn contains(&self, p: &Point2) -> bool {
        self.min.x <= p.x && p.x <= self.max.x && self.min.y <= p.y && p.y <= self.max.y
    }

    pub fn to_polygon(&self) -> ConvexPolygon {
        ConvexPolygon::new(vec![
            self.min.clone(),
            Point2::new(self.max.x.clone(), self.min.y.clone()),
            self.max.clone(),
            Point2::new(self.min.x.clone(), self.max.y.clone()),
        ])
        .expect("window with positive width and height")
    }

    fn width(&self) -> Rational {
        (&self.max.x - &self.min.x).min(&self.max.y - &self.min.y)
    }
}

/// A finite piece of `P + Λ`: every translate meeting the window.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Patch {
    /// Centered at the origin.
    pub polygon: ConvexPolygon,
    pub lattice: Lattice2,
    /// Sorted; contains the zero vector when the window meets `P`.
    pub translations: Vec<Vec2>,
    pub window: Window,
    pub claimed_fold: u64,
}

impl Patch {
    /// Copy with one translate removed, for fault injection.
    pub fn without(&self, x: &Vec2) -> Patch {
        Patch {
            translations: self.translations.iter().filter(|t| *t != x).cloned().collect(),
            ..self.clone()
        }
    }

    /// All translated vertices `v + x` lying in the closed window, without repeats.
    pub fn vertices_in_window(&self) -> Vec<Point2> {
        let set: BTreeSet<Point2> = self
            .translations
            .iter()
            .flat_map(|x| self.polygon.vertices().iter().map(move |v| v + x))
            .filter(|v| self.window.contains(v))
            .collect();
        set.into_iter().collect()
    }
}

pub fn build_patch(p: &ConvexPolygon, lattice: &Lattice2, window: Window) -> Result<Patch, WheelError> {
    let c = p.centrally_symmetric_center().ok_or(WheelError::NotCentrallySymmetric)?;
    let polygon = p.translate(&-&c.to_vec());
    let fold = bolle_check(&polygon, lattice).map_err(WheelError::NotMultipleTiling)?;
    let period = lattice.basis().iter().map(Vec2::max_abs).max().expect("two basis vectors");
    if window.width() < Rational::from_integer(3) * &period {
        return Err(WheelError::WindowTooSmall);
    }
    let translations = crate::oracle::translates_meeting(&polygon, lattice, &window.to_polygon());
    Ok(Patch {
        polygon,
        lattice: lattice.clone(),
        translations,
        window,
        claimed_fold: fold,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexStar {
    pub vertex: Point2,
    /// Translations `x` with `v` on the boundary of `P + x`, sorted.
    pub boundary_members: Vec<Vec2>,
    /// `ϕ(v)`.
    pub interior_count: u64,
}

pub fn vertex_star(patch: &Patch, v: &Point2) -> Result<VertexStar, WheelError> {
    if !patch.window.contains(v) {
        return Err(WheelError::MarginViolation(v.clone()));
    }
    let (lo, hi) = patch.polygon.bbox();
    let mut boundary_members = Vec::new();
    let mut interior_count = 0;
    let mut is_vertex = false;
    for x in &patch.translations {
        let local = v - x;
        if local.x < lo.x || local.x > hi.x || local.y < lo.y || local.y > hi.y {
            continue;
        }
        match patch.polygon.locate(&local) {
            Location::Interior => interior_count += 1,
            Location::Boundary(hit) => {
                is_vertex |= matches!(hit, BoundaryHit::Vertex(_));
                boundary_members.push(x.clone());
            }
            Location::Exterior => {}
        }
    }
    if !is_vertex {
        return Err(WheelError::NotAVertex(v.clone()));
    }
    Ok(VertexStar {
        vertex: v.clone(),
        boundary_members,
        interior_count,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Wheel {
    pub members: Vec<Vec2>,
    pub winding: u64,
}

/// The two boundary half-lines of `P + x` at `v`, as directions, such that
/// sweeping clockwise from the first to the second crosses the interior.
fn half_lines(p: &ConvexPolygon, local: &Point2) -> Option<(Vec2, Vec2)> {
    let n = p.len();
    match p.locate(local) {
        Location::Boundary(BoundaryHit::Vertex(k)) => {
            let prev = p.vertex((k + n - 1) % n) - local;
            let next = p.vertex((k + 1) % n) - local;
            Some((prev.direction(), next.direction()))
        }
        Location::Boundary(BoundaryHit::Edge(i)) => {
            let e = p.edge_vector(i).direction();
            Some((-&e, e))
        }
        _ => None,
    }
}

/// 1 when the clockwise sweep from `a` to `b` lands on or passes the positive x-axis.
fn crossings(a: &Vec2, b: &Vec2) -> u64 {
    let (ta, tb) = (a.pseudo_angle(), b.pseudo_angle());
    u64::from(!ta.is_zero() && (tb.is_zero() || tb > ta))
}

/// Chains the boundary members of a star into adjacent wheels, starting each
/// wheel from the smallest unused translation.
pub fn partition_wheels(star: &VertexStar, p: &ConvexPolygon) -> Result<Vec<Wheel>, WheelError> {
    let fail = || WheelError::ChainingFailure(star.vertex.clone());
    let mut pending: BTreeMap<Vec2, (Vec2, Vec2)> = BTreeMap::new();
    for x in &star.boundary_members {
        let lines = half_lines(p, &(&star.vertex - x)).ok_or_else(fail)?;
        pending.insert(x.clone(), lines);
    }
    let mut wheels = Vec::new();
    while let Some((first, (start, mut current))) = pending.pop_first() {
        let mut members = vec![first];
        let mut winding = crossings(&start, &current);
        while current != start {
            let next = pending
                .iter()
                .find(|(_, (l1, _))| *l1 == current)
                .map(|(x, _)| x.clone())
                .ok_or_else(fail)?;
            let (l1, l2) = pending.remove(&next).expect("just found");
            winding += crossings(&l1, &l2);
            members.push(next);
            current = l2;
        }
        wheels.push(Wheel { members, winding });
    }
    Ok(wheels)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WheelReport {
    pub vertex: Point2,
    /// `φ(v)`, the total winding.
    pub phi: u64,
    /// `ϕ(v)`, the interior count.
    pub varphi: u64,
    pub wheels: Vec<Wheel>,
    pub equation_holds: bool,
}

pub fn analyze_vertex(patch: &Patch, v: &Point2) -> Result<WheelReport, WheelError> {
    let star = vertex_star(patch, v)?;
    let wheels = partition_wheels(&star, &patch.polygon)?;
    let phi = wheels.iter().map(|w| w.winding).sum::<u64>();
    Ok(WheelReport {
        vertex: v.clone(),
        phi,
        varphi: star.interior_count,
        equation_holds: phi + star.interior_count == patch.claimed_fold,
        wheels,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WheelEquationViolation {
    pub vertex: Point2,
    pub varphi: u64,
    /// `None` when the half-lines could not be chained.
    pub phi: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairCount {
    pub varphi: u64,
    pub phi: u64,
    pub count: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WheelEquationReport {
    pub claimed_fold: u64,
    pub checked: u64,
    /// Vertices skipped because their star could not be formed.
    pub skipped: u64,
    pub passed: bool,
    pub histogram: Vec<PairCount>,
    pub violations: Vec<WheelEquationViolation>,
}

pub fn check_wheel_equation(patch: &Patch) -> WheelEquationReport {
    check_wheel_equation_with(patch, Execution::default())
}

pub fn check_wheel_equation_with(patch: &Patch, exec: Execution) -> WheelEquationReport {
    let vertices = patch.vertices_in_window();
    let results = exec.map(&vertices, |v| match vertex_star(patch, v) {
        Err(_) => None,
        Ok(star) => {
            let phi = partition_wheels(&star, &patch.polygon)
                .ok()
                .map(|ws| ws.iter().map(|w| w.winding).sum::<u64>());
            Some((star.interior_count, phi))
        }
    });
    let mut histogram: BTreeMap<(u64, u64), u64> = BTreeMap::new();
    let mut violations = Vec::new();
    let mut checked = 0;
    let mut skipped = 0;
    for (v, r) in vertices.iter().zip(results) {
        let Some((varphi, phi)) = r else {
            skipped += 1;
            continue;
        };
        checked += 1;
        if let Some(phi) = phi {
            *histogram.entry((varphi, phi)).or_default() += 1;
        }
        if phi.map(|f| f + varphi) != Some(patch.claimed_fold) {
            violations.push(WheelEquationViolation {
                vertex: v.clone(),
                varphi,
                phi,
            });
        }
    }
    WheelEquationReport {
        claimed_fold: patch.claimed_fold,
        checked,
        skipped,
        passed: violations.is_empty() && checked > 0,
        histogram: histogram
            .into_iter()
            .map(|((varphi, phi), count)| PairCount { varphi, phi, count })
            .collect(),
        violations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::witness::regular_hexagon;
    use crate::geom::{pt, q};
    use crate::multi::{decagon_from_vertex, sevenfold_octagon, octagon_beta_prime};

    fn unit_square() -> ConvexPolygon {
        ConvexPolygon::new(vec![pt(q(-1, 2), q(-1, 2)), pt(q(1, 2), q(-1, 2)), pt(q(1, 2), q(1, 2)), pt(q(-1, 2), q(1, 2))]).unwrap()
    }

    #[test]
    fn square_patch_and_corner() {
        let patch = build_patch(&unit_square(), &Lattice2::integer(), Window::square(q(2, 1))).unwrap();
        assert_eq!(patch.translations.len(), 25);
        assert_eq!(patch.claimed_fold, 1);
        let star = vertex_star(&patch, &pt(q(1, 2), q(1, 2))).unwrap();
        assert_eq!(star.boundary_members.len(), 4);
        assert_eq!(star.interior_count, 0);
        let wheels = partition_wheels(&star, &patch.polygon).unwrap();
        assert_eq!(wheels.len(), 1);
        assert_eq!(wheels[0].members.len(), 4);
        assert_eq!(wheels[0].winding, 1);
        assert_eq!(wheels[0].members[0], star.boundary_members[0]);
    }

    #[test]
    fn window_errors() {
        assert_eq!(
            build_patch(&unit_square(), &Lattice2::integer(), Window::square(q(1, 1))),
            Err(WheelError::WindowTooSmall)
        );
        let patch = build_patch(&unit_square(), &Lattice2::integer(), Window::square(q(2, 1))).unwrap();
        assert!(matches!(vertex_star(&patch, &pt(q(5, 2), q(1, 2))), Err(WheelError::MarginViolation(_))));
        assert!(matches!(vertex_star(&patch, &pt(q(0, 1), q(1, 2))), Err(WheelError::NotAVertex(_))));
    }

    #[test]
    fn hexagon_corner_is_one_wheel() {
        let h = regular_hexagon();
        let c = h.centrally_symmetric_center().unwrap();
        let h = h.translate(&-&c.to_vec());
        let v = h.vertices();
        // A regular hexagon tiles with the lattice spanned by two of its "long" translations.
        let lat = Lattice2::new(&v[0].to_vec() + &v[1].to_vec(), &v[1].to_vec() + &v[2].to_vec()).unwrap();
        let patch = build_patch(&h, &lat, Window::square(q(8, 1))).unwrap();
        assert_eq!(patch.claimed_fold, 1);
        let r = analyze_vertex(&patch, &v[0]).unwrap();
        assert_eq!(r.wheels.len(), 1);
        assert_eq!(r.wheels[0].members.len(), 3);
        assert_eq!((r.varphi, r.phi), (0, 1));
    }

    #[test]
    fn sevenfold_wheel_equation() {
        let e = sevenfold_octagon();
        let patch = build_patch(&e.polygon, &e.lattice, Window::square(q(3, 1))).unwrap();
        assert_eq!(patch.claimed_fold, 7);
        let r = check_wheel_equation(&patch);
        assert!(r.passed, "{:?}", r.violations);
        assert!(r.checked > 20);
    }

    #[test]
    fn family_members_wheel_equation() {
        let b = octagon_beta_prime(&q(1, 1)).unwrap();
        let patch = build_patch(&b.polygon, &b.lattice, Window::square(q(4, 1))).unwrap();
        assert_eq!(patch.claimed_fold, 5);
        assert!(check_wheel_equation(&patch).passed);

        let d = decagon_from_vertex(&pt(q(-3, 5), q(4, 5))).unwrap();
        let patch = build_patch(&d, &Lattice2::integer(), Window::square(q(4, 1))).unwrap();
        assert_eq!(patch.claimed_fold, 5);
        let v1 = patch.polygon.vertex(0).clone();
        let r = analyze_vertex(&patch, &v1).unwrap();
        assert_eq!(r.varphi + r.phi, 5);
        assert!(check_wheel_equation(&patch).passed);
    }

    #[test]
    fn removed_translate_is_flagged() {
        let e = sevenfold_octagon();
        let patch = build_patch(&e.polygon, &e.lattice, Window::square(q(3, 1))).unwrap();
        let broken = patch.without(&Vec2::zero());
        let r = check_wheel_equation(&broken);
        assert!(!r.passed);
        assert!(r.violations.iter().all(|v| e.polygon.locate(&v.vertex) != Location::Exterior));
    }

    #[test]
    fn partition_ignores_member_order() {
        let e = sevenfold_octagon();
        let patch = build_patch(&e.polygon, &e.lattice, Window::square(q(3, 1))).unwrap();
        let v = patch.polygon.vertex(2).clone();
        let mut star = vertex_star(&patch, &v).unwrap();
        let a = partition_wheels(&star, &patch.polygon).unwrap();
        star.boundary_members.reverse();
        assert_eq!(partition_wheels(&star, &patch.polygon).unwrap(), a);
    }
}
