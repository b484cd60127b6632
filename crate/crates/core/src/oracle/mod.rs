//! Brute-force covering multiplicity of `P + Λ`.
//!
//! The multiplicity of a point is the number of translates `P + λ` containing
//! it in their interior. `P + Λ` is a `k`-fold tiling iff this is `k` almost
//! everywhere; by periodicity it is enough to look at one fundamental cell.

mod arrangement;
mod sample;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use arrangement::{arrangement, Arrangement, Face};
pub use sample::{sampled_multiplicity, sampled_multiplicity_with};

use crate::exec::Execution;
use crate::geom::{ConvexPolygon, Lattice2, Location, Point2, Rational, Vec2};
use crate::multi::MultiTilingInstance;

/// Default bound on the number of translate edges in an arrangement.
pub const DEFAULT_SEGMENT_CAP: usize = 100_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("arrangement needs {segments} segments, above the cap of {cap}")]
    ArrangementOverflow { segments: usize, cap: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum OracleMode {
    Exact,
    Sampled { n: u64, seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub point: Point2,
    pub count: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicityReport {
    /// Only the exact mode ever sets this.
    pub uniform: bool,
    /// The common multiplicity, when every face (or sample) saw the same one.
    pub fold: Option<u64>,
    /// Sample points whose multiplicity differs from the prevailing one.
    pub violations: Vec<Violation>,
    pub mode: OracleMode,
    /// Multiplicity → number of faces (exact) or samples (sampled).
    pub histogram: BTreeMap<u64, u64>,
    /// Sampled mode: draws discarded for landing on a translate boundary.
    #[serde(default)]
    pub skipped: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    pub segment_cap: usize,
    pub exec: Execution,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            segment_cap: DEFAULT_SEGMENT_CAP,
            exec: Execution::default(),
        }
    }
}

/// The half-open cell `{s·a₁ + t·a₂ : 0 ≤ s, t < 1}`, as a closed polygon.
pub fn fundamental_cell(lattice: &Lattice2) -> ConvexPolygon {
    let [a, b] = lattice.basis();
    let o = Point2::origin();
    let pa = &o + a;
    let pb = &o + b;
    let pab = &pa + b;
    ConvexPolygon::new(vec![o, pa, pab, pb]).expect("nondegenerate cell")
}

/// All `λ ∈ Λ` for which `P + λ` meets the closed `region`.
pub fn translates_meeting(p: &ConvexPolygon, lattice: &Lattice2, region: &ConvexPolygon) -> Vec<Vec2> {
    let coords = |pts: &[Point2]| -> Vec<(Rational, Rational)> {
        pts.iter().map(|v| lattice.coordinates(&v.to_vec())).collect()
    };
    let rc = coords(region.vertices());
    let pc = coords(p.vertices());
    let range = |f: fn(&(Rational, Rational)) -> &Rational| -> (i64, i64) {
        let rmin = rc.iter().map(f).min().unwrap();
        let rmax = rc.iter().map(f).max().unwrap();
        let pmin = pc.iter().map(f).min().unwrap();
        let pmax = pc.iter().map(f).max().unwrap();
        let lo = i64::try_from((rmin - pmax).floor()).expect("small range");
        let hi = i64::try_from((rmax - pmin).ceil()).expect("small range");
        (lo, hi)
    };
    let (i0, i1) = range(|c| &c.0);
    let (j0, j1) = range(|c| &c.1);
    let mut out = Vec::new();
    for i in i0..=i1 {
        for j in j0..=j1 {
            let lam = lattice.point(&Rational::from_integer(i), &Rational::from_integer(j));
            if p.translate(&lam).intersects(region) {
                out.push(lam);
            }
        }
    }
    out.sort();
    out
}

/// Counts the translates that contain `x` in their interior and on their boundary.
pub fn covering_multiplicity_at(p: &ConvexPolygon, lattice: &Lattice2, x: &Point2) -> (u64, u64) {
    let single = ConvexPolygon::new(vec![
        x.clone(),
        x + &Vec2::new(Rational::new(1, 1 << 20), Rational::zero()),
        x + &Vec2::new(Rational::zero(), Rational::new(1, 1 << 20)),
    ])
    .expect("tiny triangle");
    let candidates = translates_meeting(p, lattice, &single);
    count_at(p, &candidates, x)
}

pub(crate) fn count_at(p: &ConvexPolygon, translates: &[Vec2], x: &Point2) -> (u64, u64) {
    let mut interior = 0;
    let mut boundary = 0;
    for lam in translates {
        match p.locate(&(x - lam)) {
            Location::Interior => interior += 1,
            Location::Boundary(_) => boundary += 1,
            Location::Exterior => {}
        }
    }
    (interior, boundary)
}

pub fn exact_uniform_multiplicity(p: &ConvexPolygon, lattice: &Lattice2) -> Result<MultiplicityReport, OracleError> {
    exact_uniform_multiplicity_with(p, lattice, OracleConfig::default())
}

pub fn exact_uniform_multiplicity_with(
    p: &ConvexPolygon,
    lattice: &Lattice2,
    config: OracleConfig,
) -> Result<MultiplicityReport, OracleError> {
    let arr = arrangement(p, lattice, config.segment_cap)?;
    let counts = config
        .exec
        .map(&arr.faces, |f| count_at(p, &arr.translates, &f.sample).0);
    let mut histogram: BTreeMap<u64, u64> = BTreeMap::new();
    let mut area_by_count: BTreeMap<u64, Rational> = BTreeMap::new();
    for (f, &c) in arr.faces.iter().zip(&counts) {
        *histogram.entry(c).or_default() += 1;
        *area_by_count.entry(c).or_default() += &f.area;
    }
    let dominant = area_by_count
        .iter()
        .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(a.0)))
        .map(|(&c, _)| c)
        .unwrap_or(0);
    let violations: Vec<Violation> = arr
        .faces
        .iter()
        .zip(&counts)
        .filter(|(_, &c)| c != dominant)
        .map(|(f, &c)| Violation {
            point: f.sample.clone(),
            count: c,
        })
        .collect();
    let uniform = histogram.len() == 1;
    Ok(MultiplicityReport {
        uniform,
        fold: uniform.then_some(dominant),
        violations,
        mode: OracleMode::Exact,
        histogram,
        skipped: 0,
    })
}

/// Whether the oracle confirms that the instance is a tiling of its claimed fold.
pub fn verify_kfold(instance: &MultiTilingInstance, mode: OracleMode) -> Result<bool, OracleError> {
    verify_kfold_with(instance, mode, OracleConfig::default())
}

pub fn verify_kfold_with(
    instance: &MultiTilingInstance,
    mode: OracleMode,
    config: OracleConfig,
) -> Result<bool, OracleError> {
    let report = run(instance, mode, config)?;
    Ok(match mode {
        OracleMode::Exact => report.uniform && report.fold == Some(instance.fold),
        OracleMode::Sampled { .. } => report.fold == Some(instance.fold),
    })
}

/// Runs the oracle in the requested mode.
pub fn run(
    instance: &MultiTilingInstance,
    mode: OracleMode,
    config: OracleConfig,
) -> Result<MultiplicityReport, OracleError> {
    match mode {
        OracleMode::Exact => exact_uniform_multiplicity_with(&instance.polygon, &instance.lattice, config),
        OracleMode::Sampled { n, seed } => Ok(sampled_multiplicity_with(
            &instance.polygon,
            &instance.lattice,
            n,
            seed,
            config.exec,
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{pt, q, Mat2};
    use crate::multi::{sevenfold_octagon, octagon_alpha_prime, octagon_beta};

    fn centered_square(s: Rational) -> ConvexPolygon {
        let h = &s * &q(1, 2);
        ConvexPolygon::new(vec![
            pt(-&h, -&h),
            pt(h.clone(), -&h),
            pt(h.clone(), h.clone()),
            pt(-&h, h.clone()),
        ])
        .unwrap()
    }

    #[test]
    fn point_counts() {
        let z = Lattice2::integer();
        assert_eq!(covering_multiplicity_at(&centered_square(q(1, 1)), &z, &pt(q(1, 4), q(1, 4))), (1, 0));
        let e = sevenfold_octagon();
        assert_eq!(covering_multiplicity_at(&e.polygon, &z, &pt(q(1, 10), q(1, 5))), (7, 0));
        let (i, b) = covering_multiplicity_at(&e.polygon, &z, &pt(q(1, 2), q(0, 1)));
        assert!(i <= 7 && b >= 1 && i + b >= 7);
    }

    #[test]
    fn exact_examples() {
        let e = sevenfold_octagon();
        let r = exact_uniform_multiplicity(&e.polygon, &e.lattice).unwrap();
        assert!(r.uniform && r.violations.is_empty());
        assert_eq!(r.fold, Some(7));

        let ap = octagon_alpha_prime(&q(1, 2)).unwrap();
        let r = exact_uniform_multiplicity(&ap.polygon, &ap.lattice).unwrap();
        assert_eq!(r.fold, Some(5));
    }

    #[test]
    fn scaled_square_is_not_uniform() {
        let r = exact_uniform_multiplicity(&centered_square(q(3, 2)), &Lattice2::integer()).unwrap();
        assert!(!r.uniform);
        assert!(r.fold.is_none());
        assert!(!r.violations.is_empty());
        assert!(r.histogram.len() > 1);
    }

    #[test]
    fn overflow_cap() {
        let e = sevenfold_octagon();
        let cfg = OracleConfig {
            segment_cap: 10,
            exec: Execution::Sequential,
        };
        assert!(matches!(
            exact_uniform_multiplicity_with(&e.polygon, &e.lattice, cfg),
            Err(OracleError::ArrangementOverflow { .. })
        ));
    }

    #[test]
    fn unimodular_basis_change_same_answer() {
        let b = octagon_beta(&q(3, 10)).unwrap();
        let other = Lattice2::new(
            Mat2::from_ints(2, 1, 1, 1).apply(&b.lattice.basis()[0]),
            Mat2::from_ints(2, 1, 1, 1).apply(&b.lattice.basis()[1]),
        )
        .unwrap();
        assert!(other.same_lattice(&b.lattice));
        let r1 = exact_uniform_multiplicity(&b.polygon, &b.lattice).unwrap();
        let r2 = exact_uniform_multiplicity(&b.polygon, &other).unwrap();
        assert_eq!(r1.fold, r2.fold);
        assert_eq!(r1.fold, Some(5));
    }

    #[test]
    fn verify_forged_fold() {
        let e = sevenfold_octagon();
        assert!(verify_kfold(&e, OracleMode::Exact).unwrap());
        let forged = MultiTilingInstance { fold: 6, ..e };
        assert!(!verify_kfold(&forged, OracleMode::Exact).unwrap());
        assert!(!verify_kfold(&forged, OracleMode::Sampled { n: 200, seed: 3 }).unwrap());
    }
}
