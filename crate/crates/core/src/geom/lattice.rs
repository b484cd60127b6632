//! Two-dimensional lattices with rational bases.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::rational::{rational_gcd, Rational};
use super::vector::{Mat2, Point2, Vec2};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("lattice basis vectors are linearly dependent")]
    DependentBasis,
    #[error("singular linear map")]
    SingularMatrix,
}

/// The lattice `{ z1·a1 + z2·a2 : z1, z2 ∈ ℤ }`. JSON form: `{"basis": [[..],[..]]}`.
#[derive(Clone, Serialize, Deserialize)]
#[serde(try_from = "RawLattice")]
pub struct Lattice2 {
    basis: [Vec2; 2],
    #[serde(skip)]
    det: Rational,
}

#[derive(Deserialize)]
struct RawLattice {
    basis: [Vec2; 2],
}

impl TryFrom<RawLattice> for Lattice2 {
    type Error = LatticeError;

    fn try_from(raw: RawLattice) -> Result<Self, Self::Error> {
        let [a, b] = raw.basis;
        Lattice2::new(a, b)
    }
}

impl PartialEq for Lattice2 {
    /// Equality of bases, not of point sets; see [`Lattice2::same_lattice`].
    fn eq(&self, other: &Self) -> bool {
        self.basis == other.basis
    }
}

impl Eq for Lattice2 {}

impl std::fmt::Debug for Lattice2 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Lattice2{:?}", self.basis)
    }
}

impl Lattice2 {
    pub fn new(a1: Vec2, a2: Vec2) -> Result<Self, LatticeError> {
        let det = a1.cross(&a2);
        if det.is_zero() {
            return Err(LatticeError::DependentBasis);
        }
        Ok(Lattice2 {
            basis: [a1, a2],
            det: det.abs(),
        })
    }

    /// The integer lattice ℤ².
    pub fn integer() -> Self {
        Lattice2::new(
            Vec2::new(Rational::one(), Rational::zero()),
            Vec2::new(Rational::zero(), Rational::one()),
        )
        .expect("standard basis")
    }

    pub fn basis(&self) -> &[Vec2; 2] {
        &self.basis
    }

    /// `|det(a1, a2)|`, the area of a fundamental cell.
    pub fn determinant(&self) -> &Rational {
        &self.det
    }

    /// Coordinates `(z1, z2)` of `v` in the basis (rational in general).
    pub fn coordinates(&self, v: &Vec2) -> (Rational, Rational) {
        let [a1, a2] = &self.basis;
        let d = a1.cross(a2);
        (v.cross(a2) / &d, a1.cross(v) / &d)
    }

    pub fn point(&self, z1: &Rational, z2: &Rational) -> Vec2 {
        let [a1, a2] = &self.basis;
        &a1.scale(z1) + &a2.scale(z2)
    }

    pub fn contains(&self, v: &Vec2) -> bool {
        let (z1, z2) = self.coordinates(v);
        z1.is_integer() && z2.is_integer()
    }

    /// Membership in ½Λ.
    pub fn half_contains(&self, p: &Point2) -> bool {
        self.contains(&p.to_vec().scale(&Rational::from_integer(2)))
    }

    /// The points of ½Λ in the open segment `(a, b)` as an arithmetic
    /// progression `a + (b - a)·(u₀ + k)/g` for `k = 0..count`.
    ///
    /// In doubled lattice coordinates ½Λ becomes ℤ². With `d = g·(p, q)` and
    /// `p, q` coprime, the line carries integer points iff `q·x − p·y` is an
    /// integer there, and consecutive ones are one step of `(p, q)` apart.
    fn half_lattice_progression(&self, a: &Point2, b: &Point2) -> Option<(Rational, Rational, BigInt)> {
        assert!(a != b, "degenerate segment");
        let two = Rational::from_integer(2);
        let (sx, sy) = self.coordinates(&a.to_vec().scale(&two));
        let (bx, by) = self.coordinates(&b.to_vec().scale(&two));
        let (dx, dy) = (&bx - &sx, &by - &sy);
        let g = rational_gcd(&dx, &dy);
        let p = (&dx / &g).numer().clone();
        let q = (&dy / &g).numer().clone();
        let c = Rational::from_bigint(q.clone()) * &sx - Rational::from_bigint(p.clone()) * &sy;
        if !c.is_integer() {
            return None;
        }
        let c = c.numer().clone();
        let e = p.extended_gcd(&q);
        let (mut ea, mut eb) = (e.x, e.y);
        if e.gcd.is_negative() {
            ea = -ea;
            eb = -eb;
        }
        // (x0, y0) = (c·eb, −c·ea) satisfies q·x0 − p·y0 = c.
        let u0 = if !p.is_zero() {
            (Rational::from_bigint(&c * &eb) - &sx) / Rational::from_bigint(p)
        } else {
            (Rational::from_bigint(-(&c * &ea)) - &sy) / Rational::from_bigint(q)
        };
        // u ranges over u0 + ℤ; keep 0 < u < g.
        let first = (-&u0).floor() + BigInt::one();
        let last = (&g - &u0).ceil() - BigInt::one();
        if last < first {
            return None;
        }
        let count = &last - &first + BigInt::one();
        Some((u0 + Rational::from_bigint(first), g, count))
    }

    /// The point of ½Λ in the open segment `(a, b)` closest to `a`, if any.
    pub fn first_half_lattice_point_on_segment(&self, a: &Point2, b: &Point2) -> Option<Point2> {
        let (u, g, _) = self.half_lattice_progression(a, b)?;
        Some(a + &(b - a).scale(&(u / g)))
    }

    /// Number of points of ½Λ in the open segment `(a, b)`.
    pub fn half_lattice_count_on_segment(&self, a: &Point2, b: &Point2) -> BigInt {
        self.half_lattice_progression(a, b).map_or_else(BigInt::zero, |(_, _, n)| n)
    }

    /// All points of ½Λ in the open segment `(a, b)`, ordered from `a` to `b`.
    /// Use [`Self::half_lattice_count_on_segment`] first when the lattice may be fine.
    pub fn half_lattice_points_on_segment(&self, a: &Point2, b: &Point2) -> Vec<Point2> {
        let Some((u, g, count)) = self.half_lattice_progression(a, b) else {
            return Vec::new();
        };
        let ab = b - a;
        let mut out = Vec::new();
        let mut k = BigInt::zero();
        let mut u = u;
        while k < count {
            out.push(a + &ab.scale(&(&u / &g)));
            u += Rational::one();
            k += BigInt::one();
        }
        out
    }

    pub fn apply_linear(&self, m: &Mat2) -> Result<Lattice2, LatticeError> {
        if m.is_singular() {
            return Err(LatticeError::SingularMatrix);
        }
        Lattice2::new(m.apply(&self.basis[0]), m.apply(&self.basis[1]))
    }

    /// Whether both lattices are the same point set.
    pub fn same_lattice(&self, other: &Lattice2) -> bool {
        self.det == other.det && other.basis.iter().all(|v| self.contains(v))
    }

    /// Reduced echelon basis `((p, q), (0, r))` with `p, r > 0` and `0 ≤ q < r`.
    /// Two lattices are equal iff their canonical bases are equal.
    pub fn canonical_basis(&self) -> [Vec2; 2] {
        hermite_basis(&self.basis).expect("a lattice basis has rank 2")
    }

    /// The lattice generated by the given vectors, if they span the plane.
    pub fn from_generators(gens: &[Vec2]) -> Option<Lattice2> {
        let [b1, b2] = hermite_basis(gens)?;
        Lattice2::new(b1, b2).ok()
    }

    /// Every sublattice of index `index`, as Hermite forms in this basis:
    /// bases `(h·a1 + k·a2, j·a2)` with `h·j = index` and `0 ≤ k < j`.
    pub fn sublattices(&self, index: u64) -> Vec<Lattice2> {
        let [a1, a2] = &self.basis;
        let mut out = Vec::new();
        for h in 1..=index {
            if index % h != 0 {
                continue;
            }
            let j = index / h;
            for k in 0..j {
                let b1 = &a1.scale(&Rational::from_integer(h as i64))
                    + &a2.scale(&Rational::from_integer(k as i64));
                let b2 = a2.scale(&Rational::from_integer(j as i64));
                out.push(Lattice2::new(b1, b2).expect("nonzero index"));
            }
        }
        out
    }

    /// Every superlattice containing this one with index `index`.
    pub fn superlattices(&self, index: u64) -> Vec<Lattice2> {
        let inv = Rational::new(1, index as i64);
        self.sublattices(index)
            .into_iter()
            .map(|l| {
                let [b1, b2] = l.basis;
                Lattice2::new(b1.scale(&inv), b2.scale(&inv)).expect("nonzero")
            })
            .collect()
    }
}

/// Hermite normal form of the lattice generated by `gens` (rank 2 required).
fn hermite_basis(gens: &[Vec2]) -> Option<[Vec2; 2]> {
    // Clear denominators so the generators live in ℤ².
    let mut l = BigInt::one();
    for g in gens {
        l = l.lcm(g.x.denom()).lcm(g.y.denom());
    }
    let scale = Rational::from_bigint(l.clone());
    let mut rows: Vec<(BigInt, BigInt)> = gens
        .iter()
        .map(|g| {
            let x = (&g.x * &scale).numer().clone();
            let y = (&g.y * &scale).numer().clone();
            (x, y)
        })
        .filter(|(x, y)| !(x.is_zero() && y.is_zero()))
        .collect();
    // Euclid on the first coordinate: collapse to one row with x ≠ 0.
    let mut pivot: Option<(BigInt, BigInt)> = None;
    let mut vertical: Vec<BigInt> = Vec::new();
    for (x, y) in rows.drain(..) {
        if x.is_zero() {
            vertical.push(y);
            continue;
        }
        match pivot.take() {
            None => pivot = Some((x, y)),
            Some((px, py)) => {
                // Combine (px, py) and (x, y) into one row with x = gcd and a
                // leftover row with x = 0.
                let e = px.extended_gcd(&x);
                let g = e.gcd.clone();
                let new_y = &e.x * &py + &e.y * &y;
                let left_y = (&x / &g) * &py - (&px / &g) * &y;
                vertical.push(left_y);
                pivot = Some((g, new_y));
            }
        }
    }
    let (mut px, mut py) = pivot?;
    let mut r = BigInt::zero();
    for v in vertical {
        r = r.gcd(&v);
    }
    if r.is_zero() {
        return None;
    }
    if px.is_negative() {
        px = -px;
        py = -py;
    }
    py = py.mod_floor(&r);
    let inv = Rational::from_big(BigInt::one(), l);
    Some([
        Vec2::new(Rational::from_bigint(px) * &inv, Rational::from_bigint(py) * &inv),
        Vec2::new(Rational::zero(), Rational::from_bigint(r) * &inv),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::rational::q;
    use crate::geom::vector::{pt, vec2};

    fn v(x: (i64, i64), y: (i64, i64)) -> Vec2 {
        vec2(q(x.0, x.1), q(y.0, y.1))
    }

    #[test]
    fn integer_lattice_membership() {
        let z = Lattice2::integer();
        assert!(z.contains(&v((3, 1), (-2, 1))));
        assert!(!z.contains(&v((1, 2), (0, 1))));
    }

    #[test]
    fn skew_lattice_membership() {
        // ⟨(2,0), (1 + α/2, 1)⟩ with α = 1/2.
        let l = Lattice2::new(v((2, 1), (0, 1)), v((5, 4), (1, 1))).unwrap();
        assert!(l.contains(&v((5, 2), (2, 1))));
        assert!(!l.contains(&v((1, 1), (0, 1))));
        assert_eq!(l.determinant(), &q(2, 1));
    }

    #[test]
    fn fine_lattice_counts_without_enumerating() {
        let fine = Lattice2::new(vec2(q(1, 1 << 40), q(0, 1)), vec2(q(0, 1), q(1, 1))).unwrap();
        let (a, b) = (pt(q(0, 1), q(0, 1)), pt(q(1, 1), q(0, 1)));
        assert_eq!(fine.half_lattice_count_on_segment(&a, &b), BigInt::from((1i64 << 41) - 1));
        assert_eq!(fine.first_half_lattice_point_on_segment(&a, &b), Some(pt(q(1, 1 << 41), q(0, 1))));
        // Parallel to the fine direction but off every row of ½Λ.
        assert_eq!(fine.first_half_lattice_point_on_segment(&pt(q(0, 1), q(1, 3)), &pt(q(1, 1), q(1, 3))), None);
    }

    #[test]
    fn half_lattice_points_examples() {
        let z = Lattice2::integer();
        let got = z.half_lattice_points_on_segment(&pt(q(-1, 5), q(-3, 2)), &pt(q(4, 5), q(-3, 2)));
        assert_eq!(got, vec![pt(q(0, 1), q(-3, 2)), pt(q(1, 2), q(-3, 2))]);

        let none = z.half_lattice_points_on_segment(&pt(q(0, 1), q(0, 1)), &pt(q(1, 4), q(1, 4)));
        assert!(none.is_empty());

        let vertical = z.half_lattice_points_on_segment(&pt(q(1, 1), q(-3, 2)), &pt(q(1, 1), q(3, 2)));
        let expected: Vec<Point2> = [(-1, 1), (-1, 2), (0, 1), (1, 2), (1, 1)]
            .iter()
            .map(|&(a, b)| pt(q(1, 1), q(a, b)))
            .collect();
        assert_eq!(vertical, expected);

        // Reversed direction lists points from a to b.
        let rev = z.half_lattice_points_on_segment(&pt(q(1, 1), q(3, 2)), &pt(q(1, 1), q(-3, 2)));
        let mut exp_rev = expected.clone();
        exp_rev.reverse();
        assert_eq!(rev, exp_rev);

        // Off-lattice constant coordinate.
        let off = z.half_lattice_points_on_segment(&pt(q(1, 3), q(0, 1)), &pt(q(1, 3), q(3, 1)));
        assert!(off.is_empty());
    }

    #[test]
    fn unimodular_shear_preserves_integer_lattice() {
        let z = Lattice2::integer();
        let sheared = z.apply_linear(&Mat2::from_ints(1, 1, 0, 1)).unwrap();
        assert_eq!(sheared.determinant(), &q(1, 1));
        assert!(sheared.same_lattice(&z));
        for x in -3..=3 {
            for y in -3..=3 {
                assert!(sheared.contains(&v((x, 1), (y, 1))));
            }
        }
        assert!(!sheared.contains(&v((1, 2), (0, 1))));
    }

    #[test]
    fn generators_and_canonical_form() {
        let gens = [v((2, 1), (-2, 1)), v((3, 1), (0, 1)), v((2, 1), (2, 1)), v((0, 1), (3, 1))];
        let l = Lattice2::from_generators(&gens).unwrap();
        assert!(l.same_lattice(&Lattice2::integer()));
        assert_eq!(l.canonical_basis(), Lattice2::integer().canonical_basis());

        let thin = Lattice2::from_generators(&[v((1, 2), (1, 3)), v((1, 1), (0, 1))]).unwrap();
        assert_eq!(thin.determinant(), &q(1, 3));
        assert!(Lattice2::from_generators(&[v((1, 1), (1, 1)), v((2, 1), (2, 1))]).is_none());
    }

    #[test]
    fn sublattice_counts_match_divisor_sums() {
        let z = Lattice2::integer();
        // σ(n): 1, 3, 4, 7, 6
        let counts: Vec<usize> = (1..=5).map(|n| z.sublattices(n).len()).collect();
        assert_eq!(counts, vec![1, 3, 4, 7, 6]);
        for s in z.superlattices(3) {
            assert_eq!(s.determinant(), &q(1, 3));
            assert!(s.contains(&v((1, 1), (0, 1))) && s.contains(&v((0, 1), (1, 1))));
        }
    }
}
