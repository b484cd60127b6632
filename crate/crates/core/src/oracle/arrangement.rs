//! Faces cut out of a fundamental cell by the edge lines of nearby translates.

use std::collections::BTreeSet;

use super::{fundamental_cell, translates_meeting, OracleError};
use crate::geom::{ConvexPolygon, Lattice2, Point2, Rational, Vec2};

#[derive(Debug, Clone)]
pub struct Face {
    pub polygon: ConvexPolygon,
    pub area: Rational,
    /// A point strictly inside the face.
    pub sample: Point2,
}

#[derive(Debug, Clone)]
pub struct Arrangement {
    pub cell: ConvexPolygon,
    pub translates: Vec<Vec2>,
    /// Distinct lines `n·x = h` with `n` scaled so its first nonzero entry is ±1.
    pub lines: Vec<(Vec2, Rational)>,
    pub faces: Vec<Face>,
}

fn normalized_line(a: &Point2, e: &Vec2) -> (Vec2, Rational) {
    let n = Vec2::new(e.y.clone(), -&e.x);
    let lead = if n.x.is_zero() { n.y.clone() } else { n.x.clone() };
    let s = lead.recip();
    let h = n.dot(&a.to_vec()) * &s;
    (n.scale(&s), h)
}

/// Splits a convex vertex loop by `n·x = h`, returning the parts with positive area.
fn split(verts: &[Point2], n: &Vec2, h: &Rational) -> Option<(Vec<Point2>, Vec<Point2>)> {
    let side: Vec<Rational> = verts.iter().map(|v| n.dot(&v.to_vec()) - h).collect();
    if side.iter().all(|s| !s.is_negative()) || side.iter().all(|s| !s.is_positive()) {
        return None;
    }
    let (mut pos, mut neg) = (Vec::new(), Vec::new());
    let k = verts.len();
    for i in 0..k {
        let j = (i + 1) % k;
        let (a, b) = (&verts[i], &verts[j]);
        let (sa, sb) = (&side[i], &side[j]);
        if !sa.is_negative() {
            pos.push(a.clone());
        }
        if !sa.is_positive() {
            neg.push(a.clone());
        }
        if sa.signum() * sb.signum() < 0 {
            let t = sa / &(sa - sb);
            let x = a + &(b - a).scale(&t);
            pos.push(x.clone());
            neg.push(x);
        }
    }
    Some((pos, neg))
}

fn face(verts: Vec<Point2>) -> Face {
    let polygon = ConvexPolygon::new(verts).expect("split of a convex face is convex");
    let v = polygon.vertices();
    let third = Rational::new(1, 3);
    let sample = Point2::new(
        (&v[0].x + &v[1].x + &v[2].x) * &third,
        (&v[0].y + &v[1].y + &v[2].y) * &third,
    );
    Face {
        area: polygon.area(),
        polygon,
        sample,
    }
}

/// Builds the arrangement for `P + Λ` on the cell spanned by the lattice basis.
pub fn arrangement(p: &ConvexPolygon, lattice: &Lattice2, segment_cap: usize) -> Result<Arrangement, OracleError> {
    let cell = fundamental_cell(lattice);
    let translates = translates_meeting(p, lattice, &cell);
    let segments = translates.len() * p.len();
    if segments > segment_cap {
        return Err(OracleError::ArrangementOverflow { segments, cap: segment_cap });
    }
    let mut lines = BTreeSet::new();
    for lam in &translates {
        for i in 0..p.len() {
            let (a, _) = p.edge(i);
            lines.insert(normalized_line(&(a + lam), &p.edge_vector(i)));
        }
    }
    let lines: Vec<(Vec2, Rational)> = lines.into_iter().collect();
    let mut pieces: Vec<Vec<Point2>> = vec![cell.vertices().to_vec()];
    for (n, h) in &lines {
        let mut next = Vec::with_capacity(pieces.len());
        for piece in pieces {
            match split(&piece, n, h) {
                Some((a, b)) => {
                    next.push(a);
                    next.push(b);
                }
                None => next.push(piece),
            }
        }
        pieces = next;
    }
    let faces = pieces.into_iter().map(|v| face(drop_collinear(v))).collect();
    Ok(Arrangement {
        cell,
        translates,
        lines,
        faces,
    })
}

fn drop_collinear(mut v: Vec<Point2>) -> Vec<Point2> {
    v.dedup();
    while v.len() > 1 && v.first() == v.last() {
        v.pop();
    }
    loop {
        let k = v.len();
        let bad = (0..k).find(|&i| {
            let (a, b, c) = (&v[(i + k - 1) % k], &v[i], &v[(i + 1) % k]);
            (b - a).cross(&(c - b)).is_zero()
        });
        match bad {
            Some(i) => {
                v.remove(i);
            }
            None => return v,
        }
    }
}
