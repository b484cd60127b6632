//! Monte-Carlo covering multiplicity on random dyadic points of a fundamental cell.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{count_at, fundamental_cell, translates_meeting, MultiplicityReport, OracleMode, Violation};
use crate::exec::Execution;
use crate::geom::{ConvexPolygon, Lattice2, Point2, Rational};

/// Lattice coordinates are drawn from `k / 2^GRID_BITS`.
const GRID_BITS: u32 = 30;
/// Redraws allowed for a single sample before giving up on it.
const MAX_REDRAWS: u32 = 64;

pub fn sampled_multiplicity(p: &ConvexPolygon, lattice: &Lattice2, n: u64, seed: u64) -> MultiplicityReport {
    sampled_multiplicity_with(p, lattice, n, seed, Execution::default())
}

/// Sample `i` uses stream `i` of the seeded generator, so results do not
/// depend on the execution mode.
pub fn sampled_multiplicity_with(
    p: &ConvexPolygon,
    lattice: &Lattice2,
    n: u64,
    seed: u64,
    exec: Execution,
) -> MultiplicityReport {
    let cell = fundamental_cell(lattice);
    let translates = translates_meeting(p, lattice, &cell);
    let denom = 1i64 << GRID_BITS;
    let draws = exec.map_range(n as usize, |i| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(i as u64);
        let mut skipped = 0u64;
        for _ in 0..MAX_REDRAWS {
            let s = Rational::new(rng.random_range(0..denom), denom);
            let t = Rational::new(rng.random_range(0..denom), denom);
            let x = lattice.point(&s, &t).to_point();
            let (inside, boundary) = count_at(p, &translates, &x);
            if boundary == 0 {
                return (Some((x, inside)), skipped);
            }
            skipped += 1;
        }
        (None, skipped)
    });
    let mut histogram: BTreeMap<u64, u64> = BTreeMap::new();
    let mut skipped = 0;
    for (hit, s) in &draws {
        skipped += s;
        if let Some((_, c)) = hit {
            *histogram.entry(*c).or_default() += 1;
        }
    }
    let prevailing = histogram
        .iter()
        .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(a.0)))
        .map(|(&c, _)| c);
    let violations = draws
        .into_iter()
        .filter_map(|(hit, _)| hit)
        .filter(|(_, c)| Some(*c) != prevailing)
        .map(|(point, count): (Point2, u64)| Violation { point, count })
        .collect();
    MultiplicityReport {
        uniform: false,
        fold: if histogram.len() == 1 { prevailing } else { None },
        violations,
        mode: OracleMode::Sampled { n, seed },
        histogram,
        skipped,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multi::sevenfold_octagon;

    #[test]
    fn sevenfold_samples() {
        let e = sevenfold_octagon();
        let r = sampled_multiplicity(&e.polygon, &e.lattice, 300, 11);
        assert_eq!(r.fold, Some(7));
        assert_eq!(r.histogram.get(&7), Some(&300));
        assert!(!r.uniform);
    }

    #[test]
    fn modes_and_seeds_reproduce() {
        let e = sevenfold_octagon();
        let a = sampled_multiplicity_with(&e.polygon, &e.lattice, 50, 5, Execution::Sequential);
        let b = sampled_multiplicity_with(&e.polygon, &e.lattice, 50, 5, Execution::Parallel);
        assert_eq!(a, b);
    }
}
