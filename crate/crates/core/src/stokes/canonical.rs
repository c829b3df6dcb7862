//! Canonical coordinates as critical values of the mirror superpotential,
//! admissibility of a line in the `ħ`-plane, and the ordering it induces.
//!
//! For `P^{n-1}` the superpotential `W = x_1 + ... + x_{n-1} + e^t/(x_1...x_{n-1})`
//! has critical points with all `x_i` equal to an `n`-th root of `e^t`, giving
//! critical values `u_k = n e^{t/n} ζ^k`. For `Gr(r, n)` the superpotential is
//! a sum of `r` independent copies and the values are `u_K = Σ_i u_{k_i}`.
//!
//! Floating point is confined to this module.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::partitions::{enumerate_subsets, BoxContext, SubsetIndex};

/// Relative tolerance used by [`is_admissible`].
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct CanonicalPoint {
    pub label: SubsetIndex,
    pub value: Complex64,
    pub n: usize,
    pub t: Complex64,
}

/// The line `arg ħ ∈ {φ, φ - π}` with a margin `ε` on either side.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AdmissibleLine {
    phi: f64,
    epsilon: f64,
}

impl AdmissibleLine {
    pub fn new(phi: f64, epsilon: f64) -> Result<Self> {
        if !(0.0..PI).contains(&phi) {
            return Err(Error::parse(format!("phi must lie in [0, pi), got {phi}")));
        }
        if epsilon.is_nan() || epsilon <= 0.0 {
            return Err(Error::parse(format!("epsilon must be positive, got {epsilon}")));
        }
        Ok(AdmissibleLine { phi, epsilon })
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    /// `Re[e^{-iφ} u]`.
    pub fn project(&self, u: Complex64) -> f64 {
        project(self.phi, u)
    }
}

fn project(theta: f64, u: Complex64) -> f64 {
    (Complex64::from_polar(1.0, -theta) * u).re
}

fn root_of_unity(k: usize, n: usize) -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * PI * (k % n) as f64 / n as f64)
}

/// `u_k = n e^{t/n} ζ^k`, `k = 1..=n`, labelled by the singleton `{k}`.
pub fn canonical_coords_projective(n: usize, t: Complex64) -> Vec<CanonicalPoint> {
    assert!(n >= 2, "need n >= 2");
    let scale = (t / n as f64).exp() * n as f64;
    (1..=n)
        .map(|k| CanonicalPoint {
            label: SubsetIndex::new(vec![k], n).expect("singleton in range"),
            value: scale * root_of_unity(k, n),
            n,
            t,
        })
        .collect()
}

/// `u_K = Σ_i u_{k_i}` for every `r`-subset `K`, in the canonical box order.
pub fn canonical_coords_grassmannian(ctx: BoxContext, t: Complex64) -> Vec<CanonicalPoint> {
    let base: Vec<Complex64> = canonical_coords_projective(ctx.n, t).into_iter().map(|p| p.value).collect();
    enumerate_subsets(ctx)
        .into_iter()
        .map(|label| {
            let value = label.indices().iter().map(|&k| base[k - 1]).sum();
            CanonicalPoint { label, value, n: ctx.n, t }
        })
        .collect()
}

/// Outcome of an admissibility check.
#[derive(Debug, Clone, PartialEq)]
pub struct Admissibility {
    /// No two points coincide and no separating segment is orthogonal to the line.
    pub admissible: bool,
    /// Every line within `ε` of the given one is admissible too.
    pub sector_admissible: bool,
    /// Pairs of labels whose values coincide within tolerance.
    pub degenerate: Vec<(SubsetIndex, SubsetIndex)>,
    /// Distinct pairs whose separation projects to zero.
    pub orthogonal: Vec<(SubsetIndex, SubsetIndex)>,
}

impl Admissibility {
    pub fn is_degenerate(&self) -> bool {
        !self.degenerate.is_empty()
    }
}

pub fn check_admissible(line: &AdmissibleLine, points: &[CanonicalPoint], tolerance: f64) -> Admissibility {
    let scale = points.iter().map(|p| p.value.norm()).fold(0.0, f64::max);
    let scale = if scale > 0.0 { scale } else { 1.0 };
    let cutoff = tolerance * scale;
    let mut degenerate = Vec::new();
    let mut orthogonal = Vec::new();
    let mut sector_admissible = true;
    for (a, pa) in points.iter().enumerate() {
        for pb in &points[a + 1..] {
            let d = pa.value - pb.value;
            if d.norm() <= cutoff {
                degenerate.push((pa.label.clone(), pb.label.clone()));
                sector_admissible = false;
                continue;
            }
            if line.project(d).abs() <= cutoff {
                orthogonal.push((pa.label.clone(), pb.label.clone()));
            }
            // The bad directions for this pair are arg(d) ± π/2 (mod π).
            let bad = (d.arg() + PI / 2.0).rem_euclid(PI);
            let gap = (line.phi - bad).rem_euclid(PI);
            if gap.min(PI - gap) <= line.epsilon {
                sector_admissible = false;
            }
        }
    }
    let admissible = degenerate.is_empty() && orthogonal.is_empty();
    Admissibility { admissible, sector_admissible: sector_admissible && admissible, degenerate, orthogonal }
}

pub fn is_admissible(line: &AdmissibleLine, points: &[CanonicalPoint]) -> bool {
    check_admissible(line, points, DEFAULT_TOLERANCE).admissible
}

/// Labels sorted by decreasing `Re[e^{-iθ} u]`, for any angle `θ`.
pub fn sort_by_projection(theta: f64, points: &[CanonicalPoint]) -> Vec<SubsetIndex> {
    let mut keyed: Vec<(f64, &SubsetIndex)> = points.iter().map(|p| (project(theta, p.value), &p.label)).collect();
    keyed.sort_by(|a, b| b.0.total_cmp(&a.0));
    keyed.into_iter().map(|(_, l)| l.clone()).collect()
}

/// Orders critical values so that `Re[e^{-iφ} u_i] > Re[e^{-iφ} u_j]` for `i < j`.
pub fn order_by_line(line: &AdmissibleLine, points: &[CanonicalPoint]) -> Result<Vec<SubsetIndex>> {
    if !is_admissible(line, points) {
        return Err(Error::NotAdmissible { phi: line.phi });
    }
    Ok(sort_by_projection(line.phi, points))
}
