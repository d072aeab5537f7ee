use super::{GeometryError, Polyline, MIN_SAMPLES};
use crate::scalar::Real;

/// The arc `x = τ − 3s², y = sτ − s³, z = z₀ + s` for `s ∈ [−1, 1]`.
pub fn local_model<T: Real>(tau: T, z0: T, samples: usize) -> Result<Polyline<T>, GeometryError> {
    if samples < MIN_SAMPLES {
        return Err(GeometryError::TooFewSamples { component: 0, got: samples, min: MIN_SAMPLES });
    }
    let three = T::of(3.0);
    let points = (0..samples)
        .map(|k| {
            let s = T::of(-1.0 + 2.0 * k as f64 / (samples - 1) as f64);
            [tau - three * s * s, s * tau - s * s * s, z0 + s]
        })
        .collect();
    Ok(Polyline::open(points))
}

/// The square grid of `points × points` pairs `(s, τ)` over
/// `[−extent, extent]²`.
pub fn model_grid<T: Real>(points: usize, extent: T) -> Vec<(T, T)> {
    let step = |k: usize| {
        if points < 2 {
            T::zero()
        } else {
            -extent + (extent + extent) * T::of(k as f64) / T::of((points - 1) as f64)
        }
    };
    (0..points).flat_map(|i| (0..points).map(move |j| (step(i), step(j)))).collect()
}

/// Largest `|x·y′ − y·x′ − (τ² + 3s⁴)|` over the grid, with derivatives in
/// `s` taken from the model formulas.
pub fn verify_model_identity<T: Real>(grid: &[(T, T)]) -> T {
    let (three, six) = (T::of(3.0), T::of(6.0));
    grid.iter()
        .map(|&(s, tau)| {
            let x = tau - three * s * s;
            let y = s * tau - s * s * s;
            let dx = -six * s;
            let dy = tau - three * s * s;
            (x * dy - y * dx - (tau * tau + three * s.powi(4))).abs()
        })
        .fold(T::zero(), T::max)
}

/// Transverse self-crossings of the projection to the xy-plane, counting
/// each pair of non-adjacent edges that properly intersect.
pub fn planar_self_crossings<T: Real>(p: &Polyline<T>) -> usize {
    let edges: Vec<(usize, usize)> = p.edges().collect();
    let cross = |o: [T; 3], a: [T; 3], b: [T; 3]| (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
    let mut count = 0;
    for (u, &(a, b)) in edges.iter().enumerate() {
        for &(c, d) in &edges[u + 1..] {
            if a == c || a == d || b == c || b == d {
                continue;
            }
            let (pa, pb, pc, pd) = (p.points[a], p.points[b], p.points[c], p.points[d]);
            let d1 = cross(pc, pd, pa);
            let d2 = cross(pc, pd, pb);
            let d3 = cross(pa, pb, pc);
            let d4 = cross(pa, pb, pd);
            if d1 * d2 < T::zero() && d3 * d4 < T::zero() {
                count += 1;
            }
        }
    }
    count
}

/// First-order data of one branch at a point of the `θz`-projection.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Branch<T> {
    pub r: T,
    pub dtheta: T,
    pub dz: T,
}

impl<T: Real> Branch<T> {
    pub fn alpha(&self) -> T {
        self.dz + self.r * self.r * self.dtheta
    }
}

/// Sign rule at a tangency of two transversal branches in the
/// `θz`-projection: when the inner branch (smaller `r`) shadows an outer
/// branch with `dθ < 0`, the inner one has `dθ < 0` as well.
///
/// Returns `None` when the pair is not such a configuration: either branch
/// not transversal, projections not tangent within `tol`, radii not
/// ordered, or the outer branch not negative.
pub fn shadow_sign_rule_holds<T: Real>(outer: Branch<T>, inner: Branch<T>, tol: T) -> Option<bool> {
    if outer.alpha() <= T::zero() || inner.alpha() <= T::zero() {
        return None;
    }
    let scale = outer.dtheta.hypot(outer.dz) * inner.dtheta.hypot(inner.dz);
    let wedge = outer.dtheta * inner.dz - outer.dz * inner.dtheta;
    if wedge.abs() > tol * scale || inner.r >= outer.r || outer.dtheta >= T::zero() {
        return None;
    }
    Some(inner.dtheta < T::zero())
}
