use tilecheck::classify::witness::witness;
use tilecheck::classify::{classify, TileType, Tolerances};
use tilecheck::multi::{octagon_alpha, FamilyParam, MultiTilingInstance};
use tilecheck::oracle::{covering_multiplicity_at, verify_kfold, OracleMode};
use tilecheck::svg::{render_svg, SvgStyle};
use tilecheck::wheel::{build_patch, check_wheel_equation, Window};
use tilecheck::{pt, q, ConvexPolygon, Point2};

/// Paths of the rendered SVG, back in plane coordinates.
fn svg_polygons(svg: &str) -> Vec<Vec<(f64, f64)>> {
    svg.lines()
        .filter_map(|l| l.strip_prefix(r#"<path d=""#))
        .map(|d| {
            let nums: Vec<f64> = d
                .split(|c: char| c == 'M' || c == 'L' || c == ' ' || c == 'Z' || c == '"')
                .filter_map(|t| t.parse().ok())
                .collect();
            nums.chunks(2).map(|c| (c[0], -c[1])).collect()
        })
        .collect()
}

fn inside(poly: &[(f64, f64)], (x, y): (f64, f64)) -> bool {
    let n = poly.len();
    (0..n).all(|i| {
        let (ax, ay) = poly[i];
        let (bx, by) = poly[(i + 1) % n];
        (bx - ax) * (y - ay) - (by - ay) * (x - ax) > 0.0
    })
}

#[test]
fn rendered_overlap_matches_oracle() {
    let inst = octagon_alpha(&q(1, 5)).unwrap();
    let patch = build_patch(&inst.polygon, &inst.lattice, Window::square(q(3, 1))).unwrap();
    let svg = render_svg(&patch, &SvgStyle::default());
    let polys = svg_polygons(&svg);
    assert_eq!(polys.len(), patch.translations.len());
    let probes = [(1, 7, 2, 9), (-3, 11, 1, 13), (5, 8, -2, 7), (0, 1, 1, 3), (-4, 5, -5, 6)];
    for (a, b, c, d) in probes {
        let x = pt(q(a, b), q(c, d));
        let (count, boundary) = covering_multiplicity_at(&patch.polygon, &patch.lattice, &x);
        assert_eq!(boundary, 0);
        let (fx, fy) = x.to_f64();
        let drawn = polys.iter().filter(|p| inside(p, (fx, fy))).count() as u64;
        assert_eq!(drawn, count, "probe {x}");
        assert_eq!(count, 5);
    }
}

#[test]
fn family_json_drives_every_verifier() {
    let text = serde_json::to_string(&FamilyParam::OctA(q(1, 8)).instance().unwrap()).unwrap();
    assert!(!text.contains('.'), "rationals must serialize as strings: {text}");
    let inst: MultiTilingInstance = serde_json::from_str(&text).unwrap();
    assert!(verify_kfold(&inst, OracleMode::Exact).unwrap());
    assert!(verify_kfold(&inst, OracleMode::Sampled { n: 500, seed: 1 }).unwrap());
    let patch = build_patch(&inst.polygon, &inst.lattice, Window::square(q(4, 1))).unwrap();
    assert!(check_wheel_equation(&patch).passed);
}

#[test]
fn malformed_inputs_are_rejected() {
    let collinear = r#"{"vertices": [["0","0"], ["1","0"], ["2","0"], ["1","1"]]}"#;
    assert!(serde_json::from_str::<ConvexPolygon>(collinear).is_err());
    let zero_denominator = r#"["1/0", "2"]"#;
    assert!(serde_json::from_str::<Point2>(zero_denominator).is_err());
    let float = r#"["0.5", "2"]"#;
    assert!(serde_json::from_str::<Point2>(float).is_err());
    let singular = r#"{"basis": [["1","2"], ["2","4"]]}"#;
    assert!(serde_json::from_str::<tilecheck::Lattice2>(singular).is_err());
}

#[test]
fn witness_json_round_trip_keeps_type() {
    let w = witness(TileType::Pent10).unwrap();
    let back: ConvexPolygon = serde_json::from_str(&serde_json::to_string(&w).unwrap()).unwrap();
    assert_eq!(back, w);
    assert!(classify(&back, Tolerances::default()).unwrap().contains(TileType::Pent10));
}
