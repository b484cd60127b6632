//! Edge lengths and inner angles under a chosen vertex labeling.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::ClassifyError;
use crate::geom::{ConvexPolygon, Rational};

/// Which polygon vertex plays `v_1`, and whether the labels run clockwise.
///
/// Label `v_i` (1-based) is vertex `offset + (i-1)` of the stored
/// counterclockwise list, or `offset - (i-1)` when `reflected`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct Labeling {
    pub offset: usize,
    pub reflected: bool,
}

impl Labeling {
    pub fn new(offset: usize, reflected: bool) -> Self {
        Labeling { offset, reflected }
    }

    /// All `2n` labelings, unreflected first, by increasing offset.
    pub fn all(n: usize) -> impl Iterator<Item = Labeling> {
        [false, true]
            .into_iter()
            .flat_map(move |r| (0..n).map(move |o| Labeling::new(o, r)))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PolygonMetrics {
    pub n: usize,
    /// `angles[i]` is the inner angle at `v_{i+1}`, in radians.
    pub angles: Vec<f64>,
    /// `sq_edge_lengths[i]` is the squared length of the edge ending at `v_{i+1}`.
    pub sq_edge_lengths: Vec<Rational>,
    pub labeling: Labeling,
}

impl PolygonMetrics {
    /// Length of the edge ending at `v_{i+1}`.
    pub fn length(&self, i: usize) -> f64 {
        self.sq_edge_lengths[i].to_f64().sqrt()
    }
}

pub fn compute_metrics(
    p: &ConvexPolygon,
    labeling: Labeling,
    eps_angle: f64,
) -> Result<PolygonMetrics, ClassifyError> {
    let n = p.len();
    let w = p.relabeled_vertices(labeling.offset, labeling.reflected);
    let mut angles = Vec::with_capacity(n);
    let mut sq = Vec::with_capacity(n);
    for k in 0..n {
        let prev = &w[(k + n - 1) % n];
        let next = &w[(k + 1) % n];
        let a = prev - &w[k];
        let b = next - &w[k];
        let alpha = a.cross(&b).abs().to_f64().atan2(a.dot(&b).to_f64());
        if alpha < eps_angle || PI - alpha < eps_angle {
            return Err(ClassifyError::DegenerateAngle(k));
        }
        angles.push(alpha);
        sq.push((&w[k] - prev).norm_sq());
    }
    let excess = angles.iter().sum::<f64>() - (n as f64 - 2.0) * PI;
    if excess.abs() > eps_angle {
        return Err(ClassifyError::AngleSumMismatch(excess));
    }
    Ok(PolygonMetrics {
        n,
        angles,
        sq_edge_lengths: sq,
        labeling,
    })
}
