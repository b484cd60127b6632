//! Bounded search for a lattice giving a small fold.
//!
//! A lattice passing Bolle's criterion contains, for every edge, either the
//! edge vector or twice the edge midpoint. So it contains the lattice `A`
//! generated by one such choice per pair of opposite edges, and the search
//! walks the superlattices of each `A` with index up to `pool_bound`. The
//! result is an upper bound on the smallest lattice fold, nothing more.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::bolle_check;
use crate::exec::Execution;
use crate::geom::{ConvexPolygon, Lattice2, Vec2};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchHit {
    pub lattice: Lattice2,
    pub fold: u64,
}

pub fn lattice_multiplicity_search(p: &ConvexPolygon, pool_bound: u64) -> Option<SearchHit> {
    lattice_multiplicity_search_with(p, pool_bound, Execution::default())
}

/// Candidate lattices, deduplicated and ordered by canonical basis.
pub fn candidate_lattices(p: &ConvexPolygon, pool_bound: u64) -> Vec<Lattice2> {
    let Some(c) = p.centrally_symmetric_center() else {
        return Vec::new();
    };
    let p = p.translate(&-&c.to_vec());
    let half = p.len() / 2;
    let two = crate::geom::Rational::from_integer(2);
    let options: Vec<[Vec2; 2]> = (0..half)
        .map(|i| [p.edge_vector(i), p.edge_midpoint(i).to_vec().scale(&two)])
        .collect();
    let mut out: BTreeMap<[Vec2; 2], Lattice2> = BTreeMap::new();
    for mask in 0u32..(1 << half) {
        let gens: Vec<Vec2> = options
            .iter()
            .enumerate()
            .map(|(i, o)| o[((mask >> i) & 1) as usize].clone())
            .collect();
        let Some(base) = Lattice2::from_generators(&gens) else {
            continue;
        };
        for d in 1..=pool_bound.max(1) {
            for l in base.superlattices(d) {
                let key = l.canonical_basis();
                out.entry(key.clone()).or_insert_with(|| {
                    let [a, b] = key;
                    Lattice2::new(a, b).expect("canonical basis")
                });
            }
        }
    }
    out.into_values().collect()
}

pub fn lattice_multiplicity_search_with(
    p: &ConvexPolygon,
    pool_bound: u64,
    exec: Execution,
) -> Option<SearchHit> {
    let candidates = candidate_lattices(p, pool_bound);
    // Candidates are already in canonical order, so the first minimum wins.
    exec.map(&candidates, |l| bolle_check(p, l).ok())
        .into_iter()
        .zip(candidates)
        .filter_map(|(fold, lattice)| fold.map(|fold| SearchHit { lattice, fold }))
        .min_by_key(|h| h.fold)
}
