//! Condition groups for the three hexagon and fifteen pentagon tile types.
//!
//! Indices below are 1-based to match the usual `α_i`, `ℓ_i` notation.

use std::f64::consts::PI;

use super::metrics::PolygonMetrics;
use super::TileType;
use crate::geom::Rational;

#[derive(Debug, Clone, Copy)]
pub enum Condition {
    /// `Σ c·α_i = r·π`.
    Angles(&'static [(usize, f64)], f64),
    /// `ℓ_a = c·ℓ_b` for a positive integer `c`; decided exactly on squares.
    LenRatio(usize, usize, i64),
    /// `Σ c·ℓ_i = 0`; decided in floating point with a relative tolerance.
    LenSum(&'static [(usize, f64)]),
}

use Condition::*;

pub fn conditions(t: TileType) -> &'static [Condition] {
    match t {
        TileType::Hex1 => &[Angles(&[(1, 1.), (2, 1.), (3, 1.)], 2.), LenRatio(1, 4, 1)],
        TileType::Hex2 => &[Angles(&[(1, 1.), (2, 1.), (4, 1.)], 2.), LenRatio(1, 4, 1), LenRatio(3, 5, 1)],
        TileType::Hex3 => &[
            Angles(&[(1, 1.)], 2. / 3.),
            Angles(&[(3, 1.)], 2. / 3.),
            Angles(&[(5, 1.)], 2. / 3.),
            LenRatio(1, 2, 1),
            LenRatio(3, 4, 1),
            LenRatio(5, 6, 1),
        ],
        TileType::Pent1 => &[Angles(&[(1, 1.), (2, 1.), (3, 1.)], 2.)],
        TileType::Pent2 => &[Angles(&[(1, 1.), (2, 1.), (4, 1.)], 2.), LenRatio(1, 4, 1)],
        TileType::Pent3 => &[
            Angles(&[(1, 1.)], 2. / 3.),
            Angles(&[(3, 1.)], 2. / 3.),
            Angles(&[(4, 1.)], 2. / 3.),
            LenRatio(1, 2, 1),
            LenSum(&[(4, 1.), (3, -1.), (5, -1.)]),
        ],
        TileType::Pent4 => &[Angles(&[(1, 1.)], 0.5), Angles(&[(3, 1.)], 0.5), LenRatio(1, 2, 1), LenRatio(3, 4, 1)],
        TileType::Pent5 => &[
            Angles(&[(1, 1.)], 1. / 3.),
            Angles(&[(3, 1.)], 2. / 3.),
            LenRatio(1, 2, 1),
            LenRatio(3, 4, 1),
        ],
        TileType::Pent6 => &[
            Angles(&[(1, 1.), (2, 1.), (4, 1.)], 2.),
            Angles(&[(1, 1.), (3, -2.)], 0.),
            LenRatio(1, 2, 1),
            LenRatio(2, 5, 1),
            LenRatio(3, 4, 1),
        ],
        TileType::Pent7 => &[
            Angles(&[(2, 2.), (3, 1.)], 2.),
            Angles(&[(4, 2.), (1, 1.)], 2.),
            LenRatio(1, 2, 1),
            LenRatio(2, 3, 1),
            LenRatio(3, 4, 1),
        ],
        TileType::Pent8 => &[
            Angles(&[(1, 2.), (2, 1.)], 2.),
            Angles(&[(4, 2.), (3, 1.)], 2.),
            LenRatio(1, 2, 1),
            LenRatio(2, 3, 1),
            LenRatio(3, 4, 1),
        ],
        // 2α_3 + α_4 = 2π; right-hand side π would contradict the angle sum 3π.
        TileType::Pent9 => &[
            Angles(&[(5, 1.)], 0.5),
            Angles(&[(1, 1.), (4, 1.)], 1.),
            Angles(&[(2, 2.), (4, -1.)], 1.),
            Angles(&[(3, 2.), (4, 1.)], 2.),
            LenSum(&[(1, 1.), (2, -1.), (4, -1.)]),
            LenRatio(1, 5, 1),
        ],
        TileType::Pent10 => &[
            Angles(&[(2, 1.), (5, 2.)], 2.),
            Angles(&[(3, 1.), (4, 2.)], 2.),
            LenRatio(1, 2, 1),
            LenRatio(2, 3, 1),
            LenRatio(3, 4, 1),
        ],
        TileType::Pent11 => &[
            Angles(&[(1, 1.)], 0.5),
            Angles(&[(3, 1.), (5, 1.)], 1.),
            Angles(&[(2, 2.), (3, 1.)], 2.),
            LenSum(&[(1, 2.), (3, 1.), (4, -1.)]),
            LenRatio(4, 5, 1),
        ],
        TileType::Pent12 => &[
            Angles(&[(1, 1.)], 0.5),
            Angles(&[(3, 1.), (5, 1.)], 1.),
            Angles(&[(2, 2.), (3, 1.)], 2.),
            LenRatio(4, 1, 2),
            LenSum(&[(3, 1.), (5, 1.), (4, -1.)]),
        ],
        TileType::Pent13 => &[
            Angles(&[(1, 1.)], 0.5),
            Angles(&[(3, 1.)], 0.5),
            Angles(&[(2, 2.), (4, 1.)], 2.),
            Angles(&[(5, 2.), (4, 1.)], 2.),
            LenRatio(3, 4, 1),
            LenRatio(5, 3, 2),
        ],
        TileType::Pent14 => &[
            Angles(&[(1, 1.)], 0.5),
            Angles(&[(2, 2.), (3, 1.)], 2.),
            Angles(&[(3, 1.), (5, 1.)], 1.),
            LenRatio(1, 3, 1),
            LenRatio(4, 1, 2),
            LenRatio(4, 5, 1),
        ],
        // α_2 = 3π/4 is forced by the angle sum.
        TileType::Pent15 => &[
            Angles(&[(1, 1.)], 1. / 3.),
            Angles(&[(2, 1.)], 3. / 4.),
            Angles(&[(3, 1.)], 7. / 12.),
            Angles(&[(4, 1.)], 0.5),
            Angles(&[(5, 1.)], 5. / 6.),
            LenRatio(1, 2, 2),
            LenRatio(2, 4, 1),
            LenRatio(4, 5, 1),
        ],
        TileType::Triangle | TileType::Quadrilateral => &[],
    }
}

/// Outcome of one condition: whether it holds, and how far off it is.
#[derive(Debug, Clone, Copy)]
pub struct Evaluation {
    pub holds: bool,
    pub residual: f64,
}

pub fn evaluate(c: &Condition, m: &PolygonMetrics, eps_angle: f64, eps_len: f64) -> Evaluation {
    match *c {
        Angles(terms, rhs) => {
            let lhs: f64 = terms.iter().map(|&(i, k)| k * m.angles[i - 1]).sum();
            let residual = (lhs - rhs * PI).abs();
            Evaluation {
                holds: residual <= eps_angle,
                residual,
            }
        }
        LenRatio(a, b, k) => {
            let la = &m.sq_edge_lengths[a - 1];
            let lb = &m.sq_edge_lengths[b - 1];
            let holds = *la == lb * &Rational::from_integer(k * k);
            let fa = m.length(a - 1);
            let fb = k as f64 * m.length(b - 1);
            let residual = if holds { 0.0 } else { (fa - fb).abs() / fa.max(fb) };
            Evaluation { holds, residual }
        }
        LenSum(terms) => {
            let mut sum = 0.0;
            let mut scale: f64 = 0.0;
            for &(i, k) in terms {
                let l = m.length(i - 1);
                sum += k * l;
                scale = scale.max(l);
            }
            let residual = sum.abs() / scale;
            Evaluation {
                holds: residual <= eps_len,
                residual,
            }
        }
    }
}

/// Largest residual over a condition group, and whether all conditions hold.
pub fn evaluate_group(t: TileType, m: &PolygonMetrics, eps_angle: f64, eps_len: f64) -> Evaluation {
    let mut holds = true;
    let mut residual: f64 = 0.0;
    for c in conditions(t) {
        let e = evaluate(c, m, eps_angle, eps_len);
        holds &= e.holds;
        residual = residual.max(e.residual);
    }
    Evaluation { holds, residual }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Each pentagon group, read as linear equations in the angles, must be
    /// consistent with the angle sum 3π.
    #[test]
    fn pentagon_angle_groups_admit_angle_sum() {
        for t in TileType::PENTAGONS {
            let rows: Vec<([f64; 5], f64)> = conditions(t)
                .iter()
                .filter_map(|c| match c {
                    Angles(terms, r) => {
                        let mut row = [0.0; 5];
                        for &(i, k) in terms.iter() {
                            row[i - 1] = k;
                        }
                        Some((row, *r))
                    }
                    _ => None,
                })
                .collect();
            let mut all = rows.clone();
            all.push(([1.0; 5], 3.0));
            assert_eq!(rank(&all, true), rank(&all, false), "{t:?} is inconsistent");
        }
    }

    fn rank(rows: &[([f64; 5], f64)], augmented: bool) -> usize {
        let mut m: Vec<Vec<f64>> = rows
            .iter()
            .map(|(r, b)| {
                let mut v = r.to_vec();
                if augmented {
                    v.push(*b);
                }
                v
            })
            .collect();
        let cols = m[0].len();
        let mut rank = 0;
        for c in 0..cols {
            let Some(p) = (rank..m.len()).find(|&r| m[r][c].abs() > 1e-12) else {
                continue;
            };
            m.swap(rank, p);
            for r in 0..m.len() {
                if r != rank {
                    let f = m[r][c] / m[rank][c];
                    for k in 0..cols {
                        m[r][k] -= f * m[rank][k];
                    }
                }
            }
            rank += 1;
        }
        rank
    }
}
