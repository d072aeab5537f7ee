use super::{GeometryError, SampledCurve};
use crate::scalar::Real;

/// Default margin, relative to the mean edge length for `α`, and in radians
/// per edge for `dθ`.
pub const DEFAULT_TOLERANCE: f64 = 1e-6;

#[derive(Clone, Debug, PartialEq)]
pub struct TransversalReport<T> {
    pub transversal: bool,
    /// Per component, the central-difference estimate of `α` per edge at
    /// each sample. Open polylines have no entries for their endpoints.
    pub margins: Vec<Vec<T>>,
    pub threshold: T,
    /// `(component, sample, margin)` of the smallest margin.
    pub worst: Option<(usize, usize, T)>,
}

pub fn check_transversal<T: Real>(c: &SampledCurve<T>, tol: T) -> Result<TransversalReport<T>, GeometryError> {
    c.validate()?;
    let threshold = tol * c.mean_edge();
    let half = T::of(0.5);
    let mut margins = Vec::with_capacity(c.components.len());
    let mut worst: Option<(usize, usize, T)> = None;
    for (k, p) in c.components.iter().enumerate() {
        let n = p.len();
        let range = if p.closed { 0..n } else { 1..n - 1 };
        let mut row = Vec::with_capacity(n);
        for i in range {
            let prev = p.points[(i + n - 1) % n];
            let next = p.points[(i + 1) % n];
            let [x, y, _] = p.points[i];
            // dz + x dy − y dx
            let alpha = (next[2] - prev[2]) + x * (next[1] - prev[1]) - y * (next[0] - prev[0]);
            let m = alpha * half;
            if worst.is_none_or(|(_, _, w)| m < w) {
                worst = Some((k, i, m));
            }
            row.push(m);
        }
        margins.push(row);
    }
    let transversal = margins.iter().flatten().all(|&m| m > threshold);
    Ok(TransversalReport { transversal, margins, threshold, worst })
}

#[derive(Clone, Debug, PartialEq)]
pub struct BraidReport<T> {
    pub is_braid: bool,
    /// Total winding about the z-axis, when every component is closed and
    /// the winding is an integer up to a residual below 0.01.
    pub degree: Option<i64>,
    pub residual: T,
    pub min_dtheta: T,
}

pub fn check_geometric_braid<T: Real>(c: &SampledCurve<T>, tol: T) -> Result<BraidReport<T>, GeometryError> {
    c.validate()?;
    let axis = tol * c.mean_edge();
    let mut total = T::zero();
    let mut min_dtheta = T::infinity();
    let mut all_closed = true;
    for (k, p) in c.components.iter().enumerate() {
        for i in 0..p.len() {
            let r = p.radius(i);
            if r <= axis {
                return Err(GeometryError::AxisProximity { component: k, index: i, r: r.to_f64_lossy() });
            }
        }
        all_closed &= p.closed;
        for (i, j) in p.edges() {
            let d = p.dtheta(i, j);
            min_dtheta = min_dtheta.min(d);
            total = total + d;
        }
    }
    let turns = total / T::TAU();
    let residual = (turns - turns.round()).abs();
    let degree = (all_closed && residual < T::of(0.01)).then(|| turns.round().to_f64_lossy() as i64);
    Ok(BraidReport { is_braid: min_dtheta > tol, degree, residual, min_dtheta })
}

/// A maximal run of edges with `dθ ≤ tol`.
#[derive(Clone, Debug, PartialEq)]
pub struct Zone<T> {
    /// First edge of the run.
    pub start: usize,
    /// Number of edges; a zone on a closed polyline may wrap past the end.
    pub edges: usize,
    /// Total `θ` increment along the zone.
    pub increment: T,
    /// Total increment below `2π` in absolute value.
    pub simple: bool,
}

impl<T: Real> Zone<T> {
    /// The zone as a parameter interval in `[0, 1]` units of the
    /// component, possibly with `end > 1` when it wraps.
    pub fn parameter_interval(&self, samples: usize) -> (f64, f64) {
        let n = samples as f64;
        (self.start as f64 / n, (self.start + self.edges) as f64 / n)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ZoneReport<T> {
    pub components: Vec<Vec<Zone<T>>>,
}

impl<T> ZoneReport<T> {
    pub fn is_empty(&self) -> bool {
        self.components.iter().all(|z| z.is_empty())
    }

    pub fn len(&self) -> usize {
        self.components.iter().map(|z| z.len()).sum()
    }
}

pub fn bad_zones<T: Real>(c: &SampledCurve<T>) -> ZoneReport<T> {
    bad_zones_with_tol(c, T::of(DEFAULT_TOLERANCE))
}

pub fn bad_zones_with_tol<T: Real>(c: &SampledCurve<T>, tol: T) -> ZoneReport<T> {
    let two_pi = T::TAU();
    let components = c
        .components
        .iter()
        .map(|p| {
            let d: Vec<T> = p.edges().map(|(i, j)| p.dtheta(i, j)).collect();
            let bad: Vec<bool> = d.iter().map(|&x| x <= tol).collect();
            let m = d.len();
            if m == 0 {
                return Vec::new();
            }
            if bad.iter().all(|&b| b) {
                let increment = d.iter().fold(T::zero(), |a, &x| a + x);
                return vec![Zone { start: 0, edges: m, increment, simple: increment.abs() < two_pi }];
            }
            // on a closed polyline start scanning just after a good edge
            let origin = if p.closed { (0..m).find(|&e| !bad[e]).map_or(0, |e| e + 1) } else { 0 };
            let mut zones = Vec::new();
            let mut run: Option<(usize, usize, T)> = None;
            for step in 0..m {
                let e = (origin + step) % m;
                if bad[e] {
                    let r = run.get_or_insert((e, 0, T::zero()));
                    r.1 += 1;
                    r.2 = r.2 + d[e];
                } else if let Some((start, edges, increment)) = run.take() {
                    zones.push(Zone { start, edges, increment, simple: increment.abs() < two_pi });
                }
            }
            if let Some((start, edges, increment)) = run {
                zones.push(Zone { start, edges, increment, simple: increment.abs() < two_pi });
            }
            zones.sort_by_key(|z| z.start);
            zones
        })
        .collect();
    ZoneReport { components }
}
