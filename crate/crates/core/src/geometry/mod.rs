//! Numerical checks on sampled curves in cylindrical coordinates
//! `(r, θ, z)` with contact form `α = dz + r² dθ = dz + x dy − y dx`.

mod checks;
mod model;

use std::fmt::Write as _;

use thiserror::Error;

use crate::scalar::Real;

pub use checks::{
    bad_zones, bad_zones_with_tol, check_geometric_braid, check_transversal, BraidReport,
    TransversalReport, Zone, ZoneReport, DEFAULT_TOLERANCE,
};
pub use model::{
    shadow_sign_rule_holds, local_model, model_grid, planar_self_crossings, verify_model_identity, Branch,
};

pub const MIN_SAMPLES: usize = 16;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeometryError {
    #[error("component {component} has {got} samples, need at least {min}")]
    TooFewSamples { component: usize, got: usize, min: usize },
    #[error("component {component}: samples {index} and {next} coincide")]
    DegenerateSpacing { component: usize, index: usize, next: usize },
    #[error("component {component}: sample {index} is within {r} of the z-axis")]
    AxisProximity { component: usize, index: usize, r: f64 },
    #[error("the curve has no components")]
    Empty,
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// A polyline of samples `(x, y, z)`, uniformly spaced in its parameter.
/// A closed polyline joins its last sample to its first.
#[derive(Clone, Debug, PartialEq)]
pub struct Polyline<T> {
    pub points: Vec<[T; 3]>,
    pub closed: bool,
}

impl<T: Real> Polyline<T> {
    pub fn closed(points: Vec<[T; 3]>) -> Self {
        Polyline { points, closed: true }
    }

    pub fn open(points: Vec<[T; 3]>) -> Self {
        Polyline { points, closed: false }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Edges as index pairs, including the closing edge.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.points.len();
        let count = if self.closed { n } else { n.saturating_sub(1) };
        (0..count).map(move |i| (i, (i + 1) % n))
    }

    pub fn radius(&self, i: usize) -> T {
        let [x, y, _] = self.points[i];
        x.hypot(y)
    }

    /// Signed angle swept about the z-axis from sample `i` to sample `j`,
    /// in `(−π, π]`.
    pub fn dtheta(&self, i: usize, j: usize) -> T {
        let [x1, y1, _] = self.points[i];
        let [x2, y2, _] = self.points[j];
        (x1 * y2 - y1 * x2).atan2(x1 * x2 + y1 * y2)
    }

    /// Rotation about the z-axis.
    pub fn rotated(&self, angle: T) -> Self {
        let (s, c) = angle.sin_cos();
        let points = self.points.iter().map(|&[x, y, z]| [c * x - s * y, s * x + c * y, z]).collect();
        Polyline { points, closed: self.closed }
    }

    /// Reverses the direction of travel.
    pub fn reversed(&self) -> Self {
        let mut points = self.points.clone();
        points.reverse();
        Polyline { points, closed: self.closed }
    }

    /// Inserts edge midpoints, doubling the sample count.
    pub fn refined(&self) -> Self {
        let mut points = Vec::with_capacity(2 * self.points.len());
        let half = T::of(0.5);
        for (i, j) in self.edges() {
            let (a, b) = (self.points[i], self.points[j]);
            points.push(a);
            points.push([(a[0] + b[0]) * half, (a[1] + b[1]) * half, (a[2] + b[2]) * half]);
        }
        if !self.closed {
            points.extend(self.points.last().copied());
        }
        Polyline { points, closed: self.closed }
    }
}

/// One or more sampled components.
#[derive(Clone, Debug, PartialEq)]
pub struct SampledCurve<T> {
    pub components: Vec<Polyline<T>>,
}

impl<T: Real> SampledCurve<T> {
    pub fn new(components: Vec<Polyline<T>>) -> Self {
        SampledCurve { components }
    }

    /// The circle of radius `r` at height `z`, traversed counterclockwise.
    pub fn circle(samples: usize, r: T, z: T) -> Self {
        Self::new(vec![Polyline::closed(
            (0..samples)
                .map(|k| {
                    let t = T::TAU() * T::of(k as f64) / T::of(samples as f64);
                    [r * t.cos(), r * t.sin(), z]
                })
                .collect(),
        )])
    }

    pub fn map(&self, f: impl Fn(&Polyline<T>) -> Polyline<T>) -> Self {
        Self::new(self.components.iter().map(f).collect())
    }

    /// Sample counts and spacing; used by every check.
    pub fn validate(&self) -> Result<(), GeometryError> {
        if self.components.is_empty() {
            return Err(GeometryError::Empty);
        }
        for (c, p) in self.components.iter().enumerate() {
            if p.len() < MIN_SAMPLES {
                return Err(GeometryError::TooFewSamples { component: c, got: p.len(), min: MIN_SAMPLES });
            }
            for (i, j) in p.edges() {
                let (a, b) = (p.points[i], p.points[j]);
                if a == b {
                    return Err(GeometryError::DegenerateSpacing { component: c, index: i, next: j });
                }
            }
        }
        Ok(())
    }

    /// Mean Euclidean edge length over all components.
    pub fn mean_edge(&self) -> T {
        let mut total = T::zero();
        let mut count = 0usize;
        for p in &self.components {
            for (i, j) in p.edges() {
                let (a, b) = (p.points[i], p.points[j]);
                total = total + ((a[0] - b[0]).powi(2) + (a[1] - b[1]).powi(2) + (a[2] - b[2]).powi(2)).sqrt();
                count += 1;
            }
        }
        if count == 0 {
            T::zero()
        } else {
            total / T::of(count as f64)
        }
    }
}

/// Writes the curve text format: a `component` header (`component open`
/// for open polylines) followed by one `x y z` line per sample.
pub fn write_curve<T: Real>(c: &SampledCurve<T>) -> String {
    let mut out = String::new();
    for p in &c.components {
        out.push_str(if p.closed { "component\n" } else { "component open\n" });
        for [x, y, z] in &p.points {
            let _ = writeln!(out, "{x} {y} {z}");
        }
    }
    out
}

pub fn parse_curve<T: Real>(text: &str) -> Result<SampledCurve<T>, GeometryError> {
    let mut components: Vec<Polyline<T>> = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = crate::braid::strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        let err = |message: String| GeometryError::Parse { line: k + 1, message };
        if let Some(rest) = line.strip_prefix("component") {
            let closed = match rest.trim() {
                "" => true,
                "open" => false,
                other => return Err(err(format!("unknown component flag `{other}`"))),
            };
            components.push(Polyline { points: Vec::new(), closed });
            continue;
        }
        let current = components
            .last_mut()
            .ok_or_else(|| err("sample before the first `component` header".into()))?;
        let values: Vec<f64> = line
            .split_whitespace()
            .map(|t| t.parse::<f64>().map_err(|_| err(format!("bad number `{t}`"))))
            .collect::<Result<_, _>>()?;
        if values.len() != 3 || values.iter().any(|v| !v.is_finite()) {
            return Err(err("expected three finite numbers `x y z`".into()));
        }
        current.points.push([T::of(values[0]), T::of(values[1]), T::of(values[2])]);
    }
    if components.is_empty() {
        return Err(GeometryError::Empty);
    }
    Ok(SampledCurve { components })
}
