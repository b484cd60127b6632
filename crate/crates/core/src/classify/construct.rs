//! Exact polygons from angle and edge-length constraints.
//!
//! Angles and lengths are affine functions of a parameter vector. Two (or
//! one) parameters are solved so that the edge vectors close up; the result
//! is then rebuilt with rational unit edge directions, so that equal-length
//! relations between walked edges hold exactly on squared lengths.

use std::f64::consts::PI;

use super::ClassifyError;
use crate::geom::{ConvexPolygon, Point2, Rational, Vec2};

/// Simple fractions are kept when they are this close to the float.
const SNAP: f64 = 1e-15;

/// `constant + Σ coef·params[idx]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Affine {
    pub constant: f64,
    pub terms: Vec<(usize, f64)>,
}

impl Affine {
    pub fn constant(c: f64) -> Self {
        Affine {
            constant: c,
            terms: Vec::new(),
        }
    }

    pub fn param(i: usize) -> Self {
        Affine::linear(0.0, &[(i, 1.0)])
    }

    pub fn linear(c: f64, terms: &[(usize, f64)]) -> Self {
        Affine {
            constant: c,
            terms: terms.to_vec(),
        }
    }

    pub fn eval(&self, params: &[f64]) -> f64 {
        self.constant + self.terms.iter().map(|&(i, k)| k * params[i]).sum::<f64>()
    }

    fn eval_exact(&self, params: &[Rational]) -> Rational {
        let mut acc = rationalize(self.constant);
        for &(i, k) in &self.terms {
            acc += rationalize(k) * &params[i];
        }
        acc
    }
}

/// How the exact polygon is closed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Closure {
    /// Walk every edge except `G_c` (1-based); `G_c` is whatever closes the loop.
    Edge(usize),
    /// Walk every edge except the two meeting at `v_c` (1-based), then place
    /// `v_c`; on the perpendicular bisector when both edges share a length.
    Apex(usize),
}

#[derive(Debug, Clone)]
pub struct Constraints {
    /// Inner angles `α_1..α_n`, in degrees.
    pub angles: Vec<Affine>,
    /// Edge lengths `ℓ_1..ℓ_n`; `ℓ_i` joins `v_{i-1}` and `v_i`.
    pub lengths: Vec<Affine>,
    /// Starting values; the entries listed in `unknowns` are solved for.
    pub params: Vec<f64>,
    pub unknowns: Vec<usize>,
    pub closure: Closure,
}

/// A small-denominator fraction when one is within `SNAP` of `x`, otherwise
/// `x` rounded to a multiple of 2⁻⁵².
fn rationalize(x: f64) -> Rational {
    if let Some(r) = Rational::approximate(x, 10_000) {
        if (r.to_f64() - x).abs() <= SNAP {
            return r;
        }
    }
    let scale = (1u64 << 52) as f64;
    Rational::from_f64_exact((x * scale).round()).expect("finite value") / Rational::from_f64_exact(scale).unwrap()
}

fn directions(angles_deg: &[f64]) -> Vec<f64> {
    let mut phi = 0.0;
    angles_deg
        .iter()
        .map(|a| {
            let here = phi;
            phi += PI - a.to_radians();
            here
        })
        .collect()
}

fn closure_residual(c: &Constraints, params: &[f64]) -> [f64; 2] {
    let angles: Vec<f64> = c.angles.iter().map(|a| a.eval(params)).collect();
    let mut r = [0.0; 2];
    for (phi, l) in directions(&angles).iter().zip(&c.lengths) {
        let l = l.eval(params);
        r[0] += l * phi.cos();
        r[1] += l * phi.sin();
    }
    r
}

/// Gauss-Newton on the closure residual over the unknown parameters.
fn solve(c: &Constraints) -> Result<Vec<f64>, ClassifyError> {
    let mut p = c.params.clone();
    let norm = |r: [f64; 2]| r[0].hypot(r[1]);
    let k = c.unknowns.len();
    if k == 0 || k > 2 {
        return Err(ClassifyError::InfeasibleConstraints("need one or two unknowns".into()));
    }
    for _ in 0..200 {
        let r = closure_residual(c, &p);
        if norm(r) < 1e-15 {
            return Ok(p);
        }
        // Jacobian by central differences, 2 × k.
        let mut jac = vec![[0.0; 2]; k];
        for (col, &u) in c.unknowns.iter().enumerate() {
            let h = 1e-7 * p[u].abs().max(1.0);
            let mut hi = p.clone();
            let mut lo = p.clone();
            hi[u] += h;
            lo[u] -= h;
            let (rh, rl) = (closure_residual(c, &hi), closure_residual(c, &lo));
            jac[col] = [(rh[0] - rl[0]) / (2.0 * h), (rh[1] - rl[1]) / (2.0 * h)];
        }
        // Normal equations JᵀJ δ = −Jᵀr.
        let step: Vec<f64> = if k == 1 {
            let jj = jac[0][0] * jac[0][0] + jac[0][1] * jac[0][1];
            vec![-(jac[0][0] * r[0] + jac[0][1] * r[1]) / jj]
        } else {
            let (a, b, cc, d) = (jac[0][0], jac[1][0], jac[0][1], jac[1][1]);
            let det = a * d - b * cc;
            if det.abs() < 1e-300 {
                return Err(ClassifyError::InfeasibleConstraints("singular closure system".into()));
            }
            vec![-(d * r[0] - b * r[1]) / det, -(-cc * r[0] + a * r[1]) / det]
        };
        let before = norm(r);
        let mut t = 1.0;
        loop {
            let mut trial = p.clone();
            for (s, &u) in step.iter().zip(&c.unknowns) {
                trial[u] += t * s;
            }
            if norm(closure_residual(c, &trial)) < before || t < 1e-6 {
                p = trial;
                break;
            }
            t *= 0.5;
        }
    }
    if norm(closure_residual(c, &p)) < 1e-12 {
        Ok(p)
    } else {
        Err(ClassifyError::InfeasibleConstraints("closure solve did not converge".into()))
    }
}

/// Rational point on the unit circle at angle `theta` (approximately).
pub(crate) fn rational_unit(theta: f64) -> Vec2 {
    let mut th = theta.rem_euclid(2.0 * PI);
    if th > PI {
        th -= 2.0 * PI;
    }
    if th > PI / 2.0 || th <= -PI / 2.0 {
        return -&rational_unit(th - PI);
    }
    // (1 - t², 2t) / (1 + t²) with t = tan(θ/2) ∈ (-1, 1].
    let t = rationalize((th / 2.0).tan());
    let t2 = &t * &t;
    let den = Rational::one() + &t2;
    Vec2::new((Rational::one() - &t2) / &den, Rational::from_integer(2) * &t / &den)
}

pub fn construct_from_constraints(c: &Constraints) -> Result<ConvexPolygon, ClassifyError> {
    let n = c.angles.len();
    if n < 3 || c.lengths.len() != n {
        return Err(ClassifyError::InfeasibleConstraints("need n ≥ 3 angles and n lengths".into()));
    }
    let p = solve(c)?;
    let angles: Vec<f64> = c.angles.iter().map(|a| a.eval(&p)).collect();
    if let Some(i) = angles.iter().position(|&a| !(a > 0.0 && a < 180.0)) {
        return Err(ClassifyError::InfeasibleConstraints(format!("α_{} = {}°", i + 1, angles[i])));
    }
    let lengths: Vec<f64> = c.lengths.iter().map(|l| l.eval(&p)).collect();
    if let Some(i) = lengths.iter().position(|&l| l <= 0.0) {
        return Err(ClassifyError::InfeasibleConstraints(format!("ℓ_{} = {}", i + 1, lengths[i])));
    }
    let phi = directions(&angles);
    let exact_params: Vec<Rational> = p.iter().map(|&x| rationalize(x)).collect();
    let edge = |i: usize| -> Vec2 {
        // 0-based edge index i is G_{i+1}.
        rational_unit(phi[i]).scale(&c.lengths[i].eval_exact(&exact_params))
    };
    // verts[i] is v_{i+1}; edge i runs from verts[i-1] to verts[i].
    let mut verts: Vec<Option<Point2>> = vec![None; n];
    match c.closure {
        Closure::Edge(g) => {
            let start = (g + n - 1) % n; // v_g
            let mut cur = Point2::origin();
            verts[start] = Some(cur.clone());
            for k in 1..n {
                let e = (start + k) % n;
                cur = &cur + &edge(e);
                verts[e] = Some(cur.clone());
            }
        }
        Closure::Apex(a) => {
            let apex = (a + n - 1) % n;
            let next = (apex + 1) % n;
            let prev = (apex + n - 1) % n;
            let mut cur = Point2::origin();
            verts[next] = Some(cur.clone());
            for k in 2..n {
                let e = (apex + k) % n;
                cur = &cur + &edge(e);
                verts[e] = Some(cur.clone());
            }
            let (vp, vn) = (verts[prev].clone().unwrap(), verts[next].clone().unwrap());
            let apex_pt = if c.lengths[apex] == c.lengths[next] {
                // Height above the chord taken from the floating-point layout.
                let chord = &vn - &vp;
                let normal = -&chord.perp();
                let design = {
                    let back = lengths[next];
                    let (x, y) = (phi[next].cos() * back, phi[next].sin() * back);
                    let (vx, vy) = vn.to_f64();
                    (vx - x, vy - y)
                };
                let (mx, my) = vp.midpoint(&vn).to_f64();
                let (nx, ny) = normal.to_f64();
                let s = ((design.0 - mx) * nx + (design.1 - my) * ny) / (nx * nx + ny * ny);
                &vp.midpoint(&vn) + &normal.scale(&rationalize(s))
            } else {
                &vn - &edge(next)
            };
            verts[apex] = Some(apex_pt);
        }
    }
    let verts: Vec<Point2> = verts.into_iter().map(|v| v.expect("every vertex placed")).collect();
    match ConvexPolygon::new(verts) {
        Ok(poly) if !poly.was_reoriented() => Ok(poly),
        Ok(_) => Err(ClassifyError::InfeasibleConstraints("clockwise result".into())),
        Err(e) => Err(ClassifyError::InfeasibleConstraints(e.to_string())),
    }
}
