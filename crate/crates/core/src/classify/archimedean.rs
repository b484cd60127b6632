//! Vertex types of edge-to-edge tilings by regular polygons.

use serde::{Deserialize, Serialize};

use crate::geom::Rational;

/// The eleven Archimedean vertex types.
pub const KEPLER_TYPES: [&[u32]; 11] = [
    &[3, 3, 3, 3, 3, 3],
    &[3, 3, 3, 3, 6],
    &[3, 3, 3, 4, 4],
    &[3, 3, 4, 3, 4],
    &[3, 4, 6, 4],
    &[3, 6, 3, 6],
    &[3, 12, 12],
    &[4, 4, 4, 4],
    &[4, 6, 12],
    &[4, 8, 8],
    &[6, 6, 6],
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum VertexType {
    /// One of the eleven Archimedean types.
    Listed,
    /// The angles close up around a point, but no tiling has this vertex type.
    AngleValidOnly,
    /// The regular polygons' angles do not sum to a full turn.
    Invalid,
}

/// Lexicographically smallest rotation of the sequence or its reversal.
pub fn canonical_cycle(seq: &[u32]) -> Vec<u32> {
    let n = seq.len();
    let mut rev = seq.to_vec();
    rev.reverse();
    [seq.to_vec(), rev]
        .into_iter()
        .flat_map(|s| (0..n).map(move |k| s[k..].iter().chain(&s[..k]).copied().collect::<Vec<_>>()))
        .min()
        .unwrap_or_default()
}

pub fn archimedean_vertex_check(seq: &[u32]) -> VertexType {
    if seq.is_empty() || seq.iter().any(|&k| k < 3) {
        return VertexType::Invalid;
    }
    // Each regular k-gon contributes (1 - 2/k)·π.
    let total: Rational = seq
        .iter()
        .map(|&k| Rational::one() - Rational::new(2, k as i64))
        .sum();
    if total != 2 {
        return VertexType::Invalid;
    }
    let c = canonical_cycle(seq);
    if KEPLER_TYPES.iter().any(|t| canonical_cycle(t) == c) {
        VertexType::Listed
    } else {
        VertexType::AngleValidOnly
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn examples() {
        assert_eq!(archimedean_vertex_check(&[4, 4, 4, 4]), VertexType::Listed);
        assert_eq!(archimedean_vertex_check(&[3, 12, 12]), VertexType::Listed);
        assert_eq!(archimedean_vertex_check(&[12, 3, 12]), VertexType::Listed);
        assert_eq!(archimedean_vertex_check(&[4, 3, 3, 3, 4]), VertexType::Listed);
        assert_eq!(archimedean_vertex_check(&[5, 5, 10]), VertexType::AngleValidOnly);
        assert_eq!(archimedean_vertex_check(&[3, 4, 4, 6]), VertexType::AngleValidOnly);
        assert_eq!(archimedean_vertex_check(&[5, 5, 5]), VertexType::Invalid);
    }

    #[test]
    fn exactly_eleven_listed_classes() {
        let mut listed = BTreeSet::new();
        let mut angle_only = BTreeSet::new();
        let mut seq = Vec::new();
        fn rec(seq: &mut Vec<u32>, listed: &mut BTreeSet<Vec<u32>>, other: &mut BTreeSet<Vec<u32>>) {
            if seq.len() >= 3 {
                match archimedean_vertex_check(seq) {
                    VertexType::Listed => {
                        listed.insert(canonical_cycle(seq));
                    }
                    VertexType::AngleValidOnly => {
                        other.insert(canonical_cycle(seq));
                    }
                    VertexType::Invalid => {}
                }
            }
            // Every further polygon adds at least π/3.
            let turn: f64 = seq.iter().map(|&k| 1.0 - 2.0 / k as f64).sum();
            if seq.len() == 6 || turn > 5.0 / 3.0 + 1e-9 {
                return;
            }
            for k in 3..=12 {
                seq.push(k);
                rec(seq, listed, other);
                seq.pop();
            }
        }
        rec(&mut seq, &mut listed, &mut angle_only);
        assert_eq!(listed.len(), 11);
        assert!(angle_only.contains(&vec![5, 5, 10]));
        assert!(!angle_only.is_empty());
    }
}
