mod common;

use std::f64::consts::{PI, TAU};

use common::rng;
use rand::Rng;
use tmarkov::geometry::{
    bad_zones, check_geometric_braid, check_transversal, shadow_sign_rule_holds, local_model, model_grid,
    parse_curve, planar_self_crossings, verify_model_identity, write_curve, Branch, GeometryError,
    Polyline, SampledCurve, DEFAULT_TOLERANCE,
};
use tmarkov::Curve;

const TOL: f64 = DEFAULT_TOLERANCE;

/// A closed curve with prescribed angle `theta(s)`, `s ∈ [0, 1)`. The
/// `(r, z)` pair runs once around a small circle, so the curve is embedded
/// whatever `theta` does.
fn curve_with_theta(samples: usize, theta: impl Fn(f64) -> f64) -> Curve {
    let points = (0..samples)
        .map(|k| {
            let s = k as f64 / samples as f64;
            let t = theta(s);
            let r = 2.0 + 0.3 * (TAU * s).cos();
            [r * t.cos(), r * t.sin(), 0.3 * (TAU * s).sin()]
        })
        .collect();
    SampledCurve::new(vec![Polyline::closed(points)])
}

/// Forward by `2π + back`, then backward by `back`, over `split` and
/// `1 − split` of the parameter.
fn reversal(back: f64, split: f64) -> impl Fn(f64) -> f64 {
    move |s| {
        let top = TAU + back;
        if s < split {
            top * s / split
        } else {
            top - back * (s - split) / (1.0 - split)
        }
    }
}

#[test]
fn standard_circle() {
    let c = Curve::circle(64, 1.0, 0.0);
    let t = check_transversal(&c, TOL).unwrap();
    assert!(t.transversal);
    let b = check_geometric_braid(&c, TOL).unwrap();
    assert!(b.is_braid);
    assert_eq!(b.degree, Some(1));
    assert!(bad_zones(&c).is_empty());

    let back = c.map(Polyline::reversed);
    assert!(!check_transversal(&back, TOL).unwrap().transversal);
    let b = check_geometric_braid(&back, TOL).unwrap();
    assert!(!b.is_braid);
    assert_eq!(b.degree, Some(-1));
}

#[test]
fn double_winding() {
    let eps = 0.1;
    let points = (0..200)
        .map(|k| {
            let s = TAU * k as f64 / 200.0;
            let r = 1.0 + eps * s.cos();
            [r * (2.0 * s).cos(), r * (2.0 * s).sin(), eps * s.sin()]
        })
        .collect();
    let c = SampledCurve::new(vec![Polyline::closed(points)]);
    let b = check_geometric_braid(&c, TOL).unwrap();
    assert!(b.is_braid);
    assert_eq!(b.degree, Some(2));
    assert!(check_transversal(&c, TOL).unwrap().transversal);
}

#[test]
fn kink_breaks_the_braid_property() {
    // θ' = 1 + a·cos changes sign for a > 1.
    let c = curve_with_theta(256, |s| TAU * s + 1.5 * (TAU * s).sin());
    let b = check_geometric_braid(&c, TOL).unwrap();
    assert!(!b.is_braid);
    assert_eq!(b.degree, Some(1));
    let zones = bad_zones(&c);
    assert_eq!(zones.len(), 1);
    assert!(zones.components[0][0].simple);
}

#[test]
fn zone_extents() {
    let c = curve_with_theta(400, reversal(PI / 2.0, 0.75));
    let zones = bad_zones(&c);
    assert_eq!(zones.len(), 1);
    let z = &zones.components[0][0];
    assert!((z.increment + PI / 2.0).abs() < 1e-9, "{}", z.increment);
    assert!(z.simple);
    let (a, b) = z.parameter_interval(400);
    assert!((a - 0.75).abs() < 0.01 && (b - 1.0).abs() < 0.01, "{a} {b}");

    let c = curve_with_theta(800, reversal(3.0 * PI, 2.0 / 3.0));
    let zones = bad_zones(&c);
    assert_eq!(zones.len(), 1);
    let z = &zones.components[0][0];
    // The turn falls between samples, costing part of one edge.
    assert!((z.increment + 3.0 * PI).abs() < 5.0 * PI / 800.0, "{}", z.increment);
    assert!(!z.simple);
    assert_eq!(check_geometric_braid(&c, TOL).unwrap().degree, Some(1));
}

#[test]
fn zones_are_empty_exactly_for_geometric_braids() {
    let mut r = rng(51);
    for _ in 0..100 {
        let a: f64 = r.gen_range(0.0..2.0);
        let phase: f64 = r.gen_range(0.0..TAU);
        let c = curve_with_theta(128, move |s| TAU * s + a * (TAU * s + phase).sin() / 2.0);
        let braid = check_geometric_braid(&c, TOL).unwrap().is_braid;
        assert_eq!(bad_zones(&c).is_empty(), braid, "a={a}");
    }
}

#[test]
fn round_trip_with_a_return_arc() {
    // Rise at θ = 0, return at z = 1 with θ decreasing, descend, then close
    // up at z = 0 with θ increasing.
    let r = 3.0;
    let at = |t: f64, z: f64| [r * t.cos(), r * t.sin(), z];
    let mut points = Vec::new();
    let steps = 16;
    for k in 0..steps {
        points.push(at(0.0, k as f64 / steps as f64));
    }
    let return_start = points.len();
    for k in 0..steps {
        points.push(at(-0.5 * k as f64 / steps as f64, 1.0));
    }
    let return_end = points.len();
    for k in 0..steps {
        points.push(at(-0.5, 1.0 - k as f64 / steps as f64));
    }
    for k in 0..steps {
        points.push(at(-0.5 + 0.5 * k as f64 / steps as f64, 0.0));
    }
    let c = SampledCurve::new(vec![Polyline::closed(points)]);
    let report = check_transversal(&c, TOL).unwrap();
    assert!(!report.transversal);
    let margins = &report.margins[0];
    assert!(margins[return_start + 1..return_end].iter().all(|&m| m < 0.0));
    assert!(margins[1..return_start].iter().all(|&m| m > report.threshold));
}

#[test]
fn degree_is_invariant_under_rotation_and_refinement() {
    let mut r = rng(52);
    for _ in 0..50 {
        let turns = r.gen_range(1..=3);
        let samples = r.gen_range(40..120);
        let eps = 0.05;
        let points = (0..samples)
            .map(|k| {
                let s = TAU * k as f64 / samples as f64;
                let t = turns as f64 * s;
                let rad = 1.0 + eps * s.cos();
                [rad * t.cos(), rad * t.sin(), eps * s.sin()]
            })
            .collect();
        let c = SampledCurve::new(vec![Polyline::closed(points)]);
        let d = check_geometric_braid(&c, TOL).unwrap().degree;
        assert_eq!(d, Some(turns));
        let angle = r.gen_range(0.0..TAU);
        assert_eq!(check_geometric_braid(&c.map(|p| p.rotated(angle)), TOL).unwrap().degree, d);
        let fine = c.map(Polyline::refined);
        assert_eq!(fine.components[0].len(), 2 * samples);
        assert_eq!(check_geometric_braid(&fine, TOL).unwrap().degree, d);
    }
}

#[test]
fn braid_curves_with_rising_z_are_transversal() {
    let mut r = rng(53);
    for _ in 0..50 {
        let rad = r.gen_range(0.5..3.0);
        let samples = r.gen_range(32..128);
        // z rises on the first half and falls only on the second; keep the
        // fall slow enough.
        let amp = r.gen_range(0.0..0.5) * rad * rad;
        let points = (0..samples)
            .map(|k| {
                let s = TAU * k as f64 / samples as f64;
                [rad * s.cos(), rad * s.sin(), amp * (s / 2.0).sin().powi(2) / 2.0]
            })
            .collect();
        let c = SampledCurve::new(vec![Polyline::closed(points)]);
        assert!(check_geometric_braid(&c, TOL).unwrap().is_braid);
        assert!(check_transversal(&c, TOL).unwrap().transversal);
    }
}

#[test]
fn validation_errors() {
    assert!(matches!(check_transversal(&Curve::circle(8, 1.0, 0.0), TOL), Err(GeometryError::TooFewSamples { .. })));
    assert!(matches!(check_transversal(&Curve::new(vec![]), TOL), Err(GeometryError::Empty)));
    let mut c = Curve::circle(32, 1.0, 0.0);
    let p = c.components[0].points[3];
    c.components[0].points[4] = p;
    assert!(matches!(check_transversal(&c, TOL), Err(GeometryError::DegenerateSpacing { .. })));
    let mut c = Curve::circle(32, 1.0, 0.0);
    c.components[0].points[5] = [0.0, 0.0, 0.0];
    assert!(matches!(check_geometric_braid(&c, TOL), Err(GeometryError::AxisProximity { .. })));
}

#[test]
fn local_model_examples() {
    for tau in [0.5, 1.0, 2.0] {
        let c = SampledCurve::new(vec![local_model(tau, 0.0, 101).unwrap()]);
        assert!(check_transversal(&c, TOL).unwrap().transversal, "tau={tau}");
    }
    // The kink closes up at s = ±√τ, inside the arc for 0 < τ < 1.
    for tau in [0.1, 0.5, 0.8] {
        let arc = local_model(tau, 0.0, 101).unwrap();
        assert_eq!(planar_self_crossings(&arc), 1, "tau={tau}");
    }
    for tau in [-0.5, -1.0, -2.0] {
        let arc = local_model(tau, 1.0, 101).unwrap();
        assert_eq!(planar_self_crossings(&arc), 0, "tau={tau}");
    }
    let arc = local_model(0.0, 0.0, 101).unwrap();
    assert_eq!(arc.points[50], [0.0, 0.0, 0.0]);
    assert!(matches!(local_model(0.5, 0.0, 15), Err(GeometryError::TooFewSamples { .. })));
}

#[test]
fn model_identity() {
    assert!(verify_model_identity(&[(0.0, 1.0)]) == 0.0);
    assert!(verify_model_identity(&[(1.0, 0.0)]) == 0.0);
    assert!(verify_model_identity(&model_grid(101, 2.0)) < 1e-9);
    let mut r = rng(54);
    let grid: Vec<(f64, f64)> = (0..10_000).map(|_| (r.gen_range(-2.0..2.0), r.gen_range(-2.0..2.0))).collect();
    assert!(verify_model_identity(&grid) < 1e-9);
}

#[test]
fn shadow_sign_rule_on_random_tangencies() {
    let mut r = rng(55);
    let mut hits = 0;
    for _ in 0..20_000 {
        let outer = Branch { r: r.gen_range(0.1..3.0), dtheta: r.gen_range(-2.0..2.0), dz: r.gen_range(-4.0..4.0) };
        let lambda: f64 = r.gen_range(-3.0..3.0);
        let inner = Branch { r: r.gen_range(0.05..3.0), dtheta: lambda * outer.dtheta, dz: lambda * outer.dz };
        if let Some(holds) = shadow_sign_rule_holds(outer, inner, 1e-9) {
            assert!(holds, "{outer:?} {inner:?}");
            hits += 1;
        }
    }
    assert!(hits > 100, "{hits}");

    // The radius order matters: an outer shadowing branch can go forward.
    let outer = Branch { r: 1.0, dtheta: -1.0, dz: 2.0 };
    let inner = Branch { r: 2.0, dtheta: 1.0, dz: -2.0 };
    assert!(outer.alpha() > 0.0 && inner.alpha() > 0.0);
    assert_eq!(shadow_sign_rule_holds(outer, inner, 1e-9), None);
    assert_eq!(shadow_sign_rule_holds(inner, outer, 1e-9), None);
}

#[test]
fn single_precision_checks() {
    let c = SampledCurve::<f32>::circle(64, 1.0, 0.0);
    assert!(check_transversal(&c, 1e-4).unwrap().transversal);
    assert_eq!(check_geometric_braid(&c, 1e-4).unwrap().degree, Some(1));
    assert!(verify_model_identity(&model_grid::<f32>(101, 2.0)) < 1e-3);
}

#[test]
fn curve_text_round_trips() {
    let two = SampledCurve::new(vec![
        Curve::circle(20, 1.0, 0.0).components[0].clone(),
        local_model(0.5, 1.0, 16).unwrap(),
    ]);
    let parsed: Curve = parse_curve(&write_curve(&two)).unwrap();
    assert_eq!(parsed, two);
    assert!(parse_curve::<f64>("1 2 3\n").is_err());
    assert!(parse_curve::<f64>("component\n1 2\n").is_err());
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../data/standard_circle.curve");
    let shipped: Curve = parse_curve(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(check_geometric_braid(&shipped, TOL).unwrap().degree, Some(1));
}
