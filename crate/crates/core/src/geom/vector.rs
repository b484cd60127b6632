//! Exact points, vectors and 2×2 matrices.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::rational::Rational;

/// A point of the plane. JSON form: `["p/q", "p/q"]`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(from = "[Rational; 2]", into = "[Rational; 2]")]
pub struct Point2 {
    pub x: Rational,
    pub y: Rational,
}

/// A displacement (translation vector, edge vector, lattice vector).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(from = "[Rational; 2]", into = "[Rational; 2]")]
pub struct Vec2 {
    pub x: Rational,
    pub y: Rational,
}

impl Point2 {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point2 { x, y }
    }

    pub fn origin() -> Self {
        Point2::default()
    }

    /// Position vector `self - o`.
    pub fn to_vec(&self) -> Vec2 {
        Vec2::new(self.x.clone(), self.y.clone())
    }

    pub fn midpoint(&self, other: &Point2) -> Point2 {
        let half = Rational::new(1, 2);
        Point2::new(
            (&self.x + &other.x) * &half,
            (&self.y + &other.y) * &half,
        )
    }

    /// Point reflection through `center`: `2c - self`.
    pub fn reflect_through(&self, center: &Point2) -> Point2 {
        let two = Rational::from_integer(2);
        Point2::new(
            &two * &center.x - &self.x,
            &two * &center.y - &self.y,
        )
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.x.to_f64(), self.y.to_f64())
    }
}

impl Vec2 {
    pub fn new(x: Rational, y: Rational) -> Self {
        Vec2 { x, y }
    }

    pub fn zero() -> Self {
        Vec2::default()
    }

    pub fn to_point(&self) -> Point2 {
        Point2::new(self.x.clone(), self.y.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn dot(&self, other: &Vec2) -> Rational {
        &self.x * &other.x + &self.y * &other.y
    }

    /// z-component of the 3D cross product; positive when `other` is
    /// counterclockwise from `self`.
    pub fn cross(&self, other: &Vec2) -> Rational {
        &self.x * &other.y - &self.y * &other.x
    }

    pub fn norm_sq(&self) -> Rational {
        self.dot(self)
    }

    /// Rotated a quarter turn counterclockwise.
    pub fn perp(&self) -> Vec2 {
        Vec2::new(-&self.y, self.x.clone())
    }

    pub fn scale(&self, s: &Rational) -> Vec2 {
        Vec2::new(&self.x * s, &self.y * s)
    }

    /// Largest absolute component (the L∞ norm).
    pub fn max_abs(&self) -> Rational {
        self.x.abs().max(self.y.abs())
    }

    /// Canonical representative of the direction of a nonzero vector: the
    /// vector scaled so that its L∞ norm is 1. Two nonzero vectors point the
    /// same way iff their directions are equal.
    pub fn direction(&self) -> Vec2 {
        let m = self.max_abs();
        assert!(!m.is_zero(), "direction of zero vector");
        let inv = m.recip();
        self.scale(&inv)
    }

    /// Exact monotone stand-in for the polar angle, in `[0, 4)`.
    pub fn pseudo_angle(&self) -> Rational {
        let x = &self.x;
        let y = &self.y;
        let zero = Rational::zero();
        if *y >= zero {
            if *x >= zero {
                y / (x + y)
            } else {
                Rational::one() - x / (y - x)
            }
        } else if *x < zero {
            Rational::from_integer(2) - y / (-x - y)
        } else {
            Rational::from_integer(3) + x / (x - y)
        }
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.x.to_f64(), self.y.to_f64())
    }
}

impl From<[Rational; 2]> for Point2 {
    fn from([x, y]: [Rational; 2]) -> Self {
        Point2 { x, y }
    }
}

impl From<Point2> for [Rational; 2] {
    fn from(p: Point2) -> Self {
        [p.x, p.y]
    }
}

impl From<[Rational; 2]> for Vec2 {
    fn from([x, y]: [Rational; 2]) -> Self {
        Vec2 { x, y }
    }
}

impl From<Vec2> for [Rational; 2] {
    fn from(v: Vec2) -> Self {
        [v.x, v.y]
    }
}

impl fmt::Debug for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl fmt::Debug for Vec2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}, {}>", self.x, self.y)
    }
}

impl fmt::Display for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl fmt::Display for Vec2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl Sub<&Point2> for &Point2 {
    type Output = Vec2;
    fn sub(self, rhs: &Point2) -> Vec2 {
        Vec2::new(&self.x - &rhs.x, &self.y - &rhs.y)
    }
}

impl Add<&Vec2> for &Point2 {
    type Output = Point2;
    fn add(self, rhs: &Vec2) -> Point2 {
        Point2::new(&self.x + &rhs.x, &self.y + &rhs.y)
    }
}

impl Sub<&Vec2> for &Point2 {
    type Output = Point2;
    fn sub(self, rhs: &Vec2) -> Point2 {
        Point2::new(&self.x - &rhs.x, &self.y - &rhs.y)
    }
}

impl Add<&Vec2> for &Vec2 {
    type Output = Vec2;
    fn add(self, rhs: &Vec2) -> Vec2 {
        Vec2::new(&self.x + &rhs.x, &self.y + &rhs.y)
    }
}

impl Sub<&Vec2> for &Vec2 {
    type Output = Vec2;
    fn sub(self, rhs: &Vec2) -> Vec2 {
        Vec2::new(&self.x - &rhs.x, &self.y - &rhs.y)
    }
}

impl Neg for &Vec2 {
    type Output = Vec2;
    fn neg(self) -> Vec2 {
        Vec2::new(-&self.x, -&self.y)
    }
}

impl Neg for &Point2 {
    type Output = Point2;
    fn neg(self) -> Point2 {
        Point2::new(-&self.x, -&self.y)
    }
}

/// Row-major 2×2 matrix `[[a, b], [c, d]]` acting on column vectors.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "[[Rational; 2]; 2]", into = "[[Rational; 2]; 2]")]
pub struct Mat2 {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
}

impl Mat2 {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Self {
        Mat2 { a, b, c, d }
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        Mat2::new(a.into(), b.into(), c.into(), d.into())
    }

    pub fn identity() -> Self {
        Mat2::from_ints(1, 0, 0, 1)
    }

    /// Matrix whose columns are `u` and `v`.
    pub fn from_columns(u: &Vec2, v: &Vec2) -> Self {
        Mat2::new(u.x.clone(), v.x.clone(), u.y.clone(), v.y.clone())
    }

    pub fn det(&self) -> Rational {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn is_singular(&self) -> bool {
        self.det().is_zero()
    }

    pub fn inverse(&self) -> Option<Mat2> {
        let det = self.det();
        if det.is_zero() {
            return None;
        }
        let inv = det.recip();
        Some(Mat2::new(
            &self.d * &inv,
            -(&self.b * &inv),
            -(&self.c * &inv),
            &self.a * &inv,
        ))
    }

    pub fn apply(&self, v: &Vec2) -> Vec2 {
        Vec2::new(
            &self.a * &v.x + &self.b * &v.y,
            &self.c * &v.x + &self.d * &v.y,
        )
    }

    pub fn apply_point(&self, p: &Point2) -> Point2 {
        self.apply(&p.to_vec()).to_point()
    }

    pub fn column(&self, i: usize) -> Vec2 {
        match i {
            0 => Vec2::new(self.a.clone(), self.c.clone()),
            _ => Vec2::new(self.b.clone(), self.d.clone()),
        }
    }
}

impl Mul<&Mat2> for &Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: &Mat2) -> Mat2 {
        Mat2::new(
            &self.a * &rhs.a + &self.b * &rhs.c,
            &self.a * &rhs.b + &self.b * &rhs.d,
            &self.c * &rhs.a + &self.d * &rhs.c,
            &self.c * &rhs.b + &self.d * &rhs.d,
        )
    }
}

impl From<[[Rational; 2]; 2]> for Mat2 {
    fn from([[a, b], [c, d]]: [[Rational; 2]; 2]) -> Self {
        Mat2 { a, b, c, d }
    }
}

impl From<Mat2> for [[Rational; 2]; 2] {
    fn from(m: Mat2) -> Self {
        [[m.a, m.b], [m.c, m.d]]
    }
}

impl fmt::Debug for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

/// Point from rational coordinates `(xn/xd, yn/yd)`.
pub fn pt(x: Rational, y: Rational) -> Point2 {
    Point2::new(x, y)
}

/// Vector from rational coordinates.
pub fn vec2(x: Rational, y: Rational) -> Vec2 {
    Vec2::new(x, y)
}
