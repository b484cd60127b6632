//! Byte-stable SVG drawings of tiling patches.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::geom::Rational;
use crate::wheel::Patch;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SvgStyle {
    pub fill_opacity: f64,
    pub stroke_width: f64,
    pub mark_lattice_points: bool,
}

impl Default for SvgStyle {
    fn default() -> Self {
        SvgStyle {
            fill_opacity: 0.15,
            stroke_width: 0.02,
            mark_lattice_points: false,
        }
    }
}

fn num(r: &Rational) -> String {
    fmt6(r.to_f64())
}

fn fmt6(x: f64) -> String {
    let s = format!("{x:.6}");
    // Avoid "-0.000000".
    if s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
        "0.000000".into()
    } else {
        s
    }
}

/// One `<path>` per translate, in the order of `patch.translations`. The y
/// axis points up; the view box is the window.
pub fn render_svg(patch: &Patch, style: &SvgStyle) -> String {
    let w = &patch.window;
    let width = &w.max.x - &w.min.x;
    let height = &w.max.y - &w.min.y;
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}">"#,
        num(&w.min.x),
        num(&-&w.max.y),
        num(&width),
        num(&height)
    )
    .unwrap();
    writeln!(
        out,
        r#"<g fill="steelblue" fill-opacity="{}" stroke="black" stroke-width="{}">"#,
        fmt6(style.fill_opacity),
        fmt6(style.stroke_width)
    )
    .unwrap();
    for x in &patch.translations {
        let mut d = String::new();
        for (i, v) in patch.polygon.vertices().iter().enumerate() {
            let p = v + x;
            let cmd = if i == 0 { 'M' } else { 'L' };
            write!(d, "{cmd}{} {} ", num(&p.x), num(&-&p.y)).unwrap();
        }
        d.push('Z');
        writeln!(out, r#"<path d="{d}"/>"#).unwrap();
    }
    out.push_str("</g>\n");
    if style.mark_lattice_points {
        out.push_str("<g fill=\"red\">\n");
        let r = fmt6(style.stroke_width * 2.0);
        for x in &patch.translations {
            writeln!(out, r#"<circle cx="{}" cy="{}" r="{r}"/>"#, num(&x.x), num(&-&x.y)).unwrap();
        }
        out.push_str("</g>\n");
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{pt, q, ConvexPolygon, Lattice2};
    use crate::multi::sevenfold_octagon;
    use crate::wheel::{build_patch, Window};

    #[test]
    fn unit_square_patch() {
        let sq = ConvexPolygon::new(vec![pt(q(-1, 2), q(-1, 2)), pt(q(1, 2), q(-1, 2)), pt(q(1, 2), q(1, 2)), pt(q(-1, 2), q(1, 2))]).unwrap();
        let patch = build_patch(&sq, &Lattice2::integer(), Window::square(q(2, 1))).unwrap();
        let svg = render_svg(&patch, &SvgStyle::default());
        assert_eq!(svg.matches("<path").count(), 25);
        assert!(svg.starts_with(r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="-2.000000 -2.000000 4.000000 4.000000">"#));
        assert!(svg.contains(r#"<path d="M-2.500000 2.500000 L-1.500000 2.500000 L-1.500000 1.500000 L-2.500000 1.500000 Z"/>"#));
    }

    #[test]
    fn stable_output_with_markers() {
        let e = sevenfold_octagon();
        let patch = build_patch(&e.polygon, &e.lattice, Window::square(q(3, 1))).unwrap();
        let style = SvgStyle {
            mark_lattice_points: true,
            ..SvgStyle::default()
        };
        let a = render_svg(&patch, &style);
        assert_eq!(a, render_svg(&patch, &style));
        assert_eq!(a.matches("<path").count(), patch.translations.len());
        assert_eq!(a.matches("<circle").count(), patch.translations.len());
        assert!(!a.contains("-0.000000"));
    }
}
