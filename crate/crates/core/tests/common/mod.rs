#![allow(dead_code)]

use rand::Rng;
use tilecheck::multi::{
    decagon_from_vertex, sevenfold_octagon, octagon_alpha, octagon_alpha_prime, octagon_beta, octagon_beta_prime,
    MultiTilingInstance,
};
use tilecheck::{pt, q, ConvexPolygon, Lattice2, Mat2, Point2, Rational, Vec2};

pub const ALPHAS: [(i64, i64); 4] = [(1, 20), (1, 8), (1, 5), (23, 100)];
pub const BETAS: [(i64, i64); 3] = [(26, 100), (3, 10), (329, 1000)];
pub const ALPHA_PRIMES: [(i64, i64); 3] = [(1, 10), (1, 3), (3, 5)];
pub const BETA_PRIMES: [(i64, i64); 3] = [(1, 4), (1, 2), (1, 1)];
/// First decagon vertices inside W.
pub const DECAGON_V1: [(i64, i64, i64, i64); 6] = [
    (-3, 5, 4, 5),
    (-5, 8, 7, 9),
    (-7, 12, 5, 6),
    (-13, 20, 3, 4),
    (-11, 20, 4, 5),
    (-9, 16, 13, 16),
];

pub fn r((a, b): (i64, i64)) -> Rational {
    q(a, b)
}

pub fn decagon_instance(v: (i64, i64, i64, i64)) -> MultiTilingInstance {
    let d = decagon_from_vertex(&pt(q(v.0, v.1), q(v.2, v.3))).expect("vertex inside W");
    MultiTilingInstance::with_fold(d, Lattice2::integer())
}

/// Every five-fold instance exercised by the suites.
pub fn fivefold_instances() -> Vec<(String, MultiTilingInstance)> {
    let mut out = Vec::new();
    for a in ALPHAS {
        out.push((format!("octA({}/{})", a.0, a.1), octagon_alpha(&r(a)).unwrap()));
    }
    for b in BETAS {
        out.push((format!("octB({}/{})", b.0, b.1), octagon_beta(&r(b)).unwrap()));
    }
    for a in ALPHA_PRIMES {
        out.push((format!("octAPrime({}/{})", a.0, a.1), octagon_alpha_prime(&r(a)).unwrap()));
    }
    for b in BETA_PRIMES {
        out.push((format!("octBPrime({}/{})", b.0, b.1), octagon_beta_prime(&r(b)).unwrap()));
    }
    for v in DECAGON_V1 {
        out.push((format!("decagon({}/{}, {}/{})", v.0, v.1, v.2, v.3), decagon_instance(v)));
    }
    out
}

pub fn shipped_instances() -> Vec<(String, MultiTilingInstance)> {
    let mut out = vec![("sevenfold".to_string(), sevenfold_octagon())];
    out.extend(fivefold_instances());
    out
}

/// Centrally symmetric convex `n`-gon with edge vectors in `(1/d)·ℤ²`, `d ≤ 8`,
/// built from `n/2` edge directions sorted by angle.
pub fn random_symmetric_polygon<R: Rng>(rng: &mut R, n: usize, d: i64, reach: i64) -> ConvexPolygon {
    loop {
        let mut edges: Vec<Vec2> = Vec::new();
        while edges.len() < n / 2 {
            let x = rng.random_range(-reach..=reach);
            let y = rng.random_range(0..=reach);
            if (x, y) == (0, 0) || (y == 0 && x < 0) {
                continue;
            }
            let e = Vec2::new(q(x, d), q(y, d));
            if edges.iter().any(|f| f.cross(&e).is_zero()) {
                continue;
            }
            edges.push(e);
        }
        edges.sort_by_key(|e| e.pseudo_angle());
        let mut v = Vec::with_capacity(n);
        let mut cur = Point2::origin();
        for i in 0..n {
            v.push(cur.clone());
            let step = if i < n / 2 { edges[i].clone() } else { -&edges[i - n / 2] };
            cur = &cur + &step;
        }
        if let Ok(p) = ConvexPolygon::new(v) {
            return p;
        }
    }
}

/// Integer matrix with entries in `[-2, 2]` and `1 ≤ |det| ≤ max_det`.
pub fn random_int_matrix<R: Rng>(rng: &mut R, max_det: i64) -> Mat2 {
    loop {
        let e: Vec<i64> = (0..4).map(|_| rng.random_range(-2..=2)).collect();
        let det = e[0] * e[3] - e[1] * e[2];
        if det != 0 && det.abs() <= max_det {
            return Mat2::from_ints(e[0], e[1], e[2], e[3]);
        }
    }
}

/// Nonsingular matrix with entries `p/q`, `|p| ≤ 5`, `1 ≤ q ≤ 4`.
pub fn random_rational_matrix<R: Rng>(rng: &mut R) -> Mat2 {
    loop {
        let mut e = || q(rng.random_range(-5..=5), rng.random_range(1..=4));
        let m = Mat2::new(e(), e(), e(), e());
        if !m.is_singular() {
            return m;
        }
    }
}

pub fn lattice_from(m: &Mat2) -> Lattice2 {
    Lattice2::new(m.column(0), m.column(1)).expect("nonsingular")
}
