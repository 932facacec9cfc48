//! Two-generator analysis: the parameter triple `(β(f), β(g), γ(f, g))`,
//! distance and angle between the axes, and normalized generator pairs
//! built from prescribed parameters.

mod geodesic;

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::algebra::{commutator, is_finite, Matrix2C, ONE};
use crate::moebius::{beta, classify, fixed_points};
use crate::tol::EPS_CLASS;
use crate::{Error, Result};

pub use geodesic::{geodesic_distance, GeodesicH3};

/// Chordal tolerance used to decide that two fixed points coincide.
const FIXED_POINT_TOL: f64 = 1e-9;

/// Relative imaginary part below which `4γ/(β(f)β(g))` is treated as real.
const REAL_RATIO_TOL: f64 = 1e-12;

/// `γ(f, g) = tr([f, g]) − 2`.
pub fn gamma(f: &Matrix2C, g: &Matrix2C) -> Complex64 {
    commutator(f, g).trace() - 2.0
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairParameters {
    pub beta_f: Complex64,
    pub beta_g: Complex64,
    pub gamma: Complex64,
}

impl PairParameters {
    pub fn new(beta_f: Complex64, beta_g: Complex64, gamma: Complex64) -> Self {
        Self { beta_f, beta_g, gamma }
    }

    /// Largest componentwise distance to `other`.
    pub fn max_abs_diff(&self, other: &PairParameters) -> f64 {
        [
            self.beta_f - other.beta_f,
            self.beta_g - other.beta_g,
            self.gamma - other.gamma,
        ]
        .iter()
        .map(|z| z.norm())
        .fold(0.0, f64::max)
    }

    /// `4γ / (β(f)β(g))`, which equals `sinh²(δ + iφ)`.
    pub fn axis_ratio(&self) -> Complex64 {
        4.0 * self.gamma / (self.beta_f * self.beta_g)
    }
}

pub fn pair_parameters(f: &Matrix2C, g: &Matrix2C) -> PairParameters {
    PairParameters::new(beta(f), beta(g), gamma(f, g))
}

/// Distance `δ ≥ 0` and angle `φ ∈ [0, π)` between two axes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AxisGeometry {
    pub delta: f64,
    pub phi: f64,
    pub coplanar: bool,
}

impl AxisGeometry {
    /// `sinh²(δ + iφ)`.
    pub fn sinh_sq(&self) -> Complex64 {
        let s = Complex64::new(self.delta, self.phi).sinh();
        s * s
    }

    /// The axes meet in `H³`.
    pub fn intersecting(&self) -> bool {
        self.delta <= EPS_CLASS
    }
}

/// Solves `sinh²(δ + iφ) = w` for the canonical representative.
///
/// Every solution is `±z₀ + iπk`. Real `w` is handled directly: `w ≥ 0` gives
/// coplanar axes at distance `asinh(√w)`; `−1 ≤ w < 0` gives intersecting
/// axes at angle `asin(√−w) ∈ (0, π/2]`; `w < −1` gives orthogonal skew axes
/// (`φ = π/2`, `cosh δ = √−w`). Otherwise the principal `asinh(√w)` is
/// reflected into `Re ≥ 0` and its imaginary part reduced mod π.
pub fn geometry_from_ratio(w: Complex64) -> AxisGeometry {
    let (delta, phi) = if w.im.abs() <= REAL_RATIO_TOL * w.norm().max(1.0) {
        let x = w.re;
        if x >= 0.0 {
            (x.sqrt().asinh(), 0.0)
        } else if x >= -1.0 {
            (0.0, (-x).sqrt().asin())
        } else {
            ((-x).sqrt().acosh(), PI / 2.0)
        }
    } else {
        let z = w.sqrt().asinh();
        let z = if z.re < 0.0 { -z } else { z };
        let mut phi = z.im.rem_euclid(PI);
        if PI - phi <= EPS_CLASS {
            phi -= PI;
        }
        (z.re, phi.max(0.0))
    };
    let coplanar = phi <= EPS_CLASS || (PI - phi) <= EPS_CLASS;
    AxisGeometry { delta, phi, coplanar }
}

pub fn axis_geometry(f: &Matrix2C, g: &Matrix2C) -> Result<AxisGeometry> {
    let (cf, cg) = (classify(f), classify(g));
    if !cf.kind.is_nonparabolic() || !cg.kind.is_nonparabolic() {
        return Err(Error::ParabolicGenerator);
    }
    if cf.beta.norm() <= EPS_CLASS || cg.beta.norm() <= EPS_CLASS {
        return Err(Error::ParabolicGenerator);
    }
    let params = pair_parameters(f, g);
    let (pf, pg) = (fixed_points(f)?, fixed_points(g)?);
    if pf.same_set(&pg, FIXED_POINT_TOL) {
        return Err(Error::SharedAxis);
    }
    if params.gamma.norm() <= EPS_CLASS {
        return Err(Error::DegenerateParameters);
    }
    Ok(geometry_from_ratio(params.axis_ratio()))
}

pub fn axis_of(f: &Matrix2C) -> Result<GeodesicH3> {
    if !classify(f).kind.is_nonparabolic() {
        return Err(Error::NotApplicable("axis of a parabolic or the identity"));
    }
    let fp = fixed_points(f)?;
    GeodesicH3::new(fp.p1, fp.p2)
}

/// Normalized pair with prescribed parameters: `f = diag(u, 1/u)` and
/// `g = [[a, 1], [c, d]]`.
///
/// Uses `γ = −b c β(f)` for diagonal `f`, so `c = −γ/β(f)`; then
/// `a + d = √(β(g) + 4)` and `ad = 1 + c`.
pub fn group_from_parameters(beta_f: Complex64, beta_g: Complex64, gamma: Complex64) -> Result<(Matrix2C, Matrix2C)> {
    if ![beta_f, beta_g, gamma].into_iter().all(is_finite) {
        return Err(Error::NonFinite);
    }
    if beta_f.norm() <= EPS_CLASS {
        return Err(Error::UnsupportedParameters(
            "beta_f = 0 (parabolic normalization is not implemented)",
        ));
    }
    if gamma.norm() <= EPS_CLASS {
        return Err(Error::DegenerateParameters);
    }

    // u − 1/u = v with v² = β(f); u = (v ± √(v² + 4))/2.
    let v = beta_f.sqrt();
    let s_f = (beta_f + 4.0).sqrt();
    let u = pick_root((v + s_f) / 2.0, (v - s_f) / 2.0);
    let f = Matrix2C::diag(u)?;

    let cg = -gamma / beta_f;
    let trace_g = (beta_g + 4.0).sqrt();
    let product = ONE + cg;
    let disc = (trace_g * trace_g - 4.0 * product).sqrt();
    let (r1, r2) = ((trace_g + disc) / 2.0, (trace_g - disc) / 2.0);
    let a = if r1.norm() >= r2.norm() { r1 } else { r2 };
    // Vieta keeps ad = 1 + c exact up to rounding when a is the larger root.
    let d = if a.norm() > 0.0 { product / a } else { trace_g - a };
    let g = Matrix2C::new(a, ONE, cg, d)?;
    Ok((f, g))
}

/// Larger modulus; on a tie the one with `Im ≥ 0`.
fn pick_root(x: Complex64, y: Complex64) -> Complex64 {
    if (x.norm() - y.norm()).abs() <= EPS_CLASS {
        if x.im >= y.im {
            x
        } else {
            y
        }
    } else if x.norm() > y.norm() {
        x
    } else {
        y
    }
}
