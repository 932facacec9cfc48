//! Single-transformation analysis: β, classification, multiplier,
//! translation length and rotation angle, fixed points, and the action on
//! the extended complex plane.

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;

use crate::algebra::{Matrix2C, ONE};
use crate::tol::{EPS_CLASS, EPS_SING};
use crate::{Error, Result};

/// A point of the Riemann sphere `Ĉ = C ∪ {∞}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExtPoint {
    Finite(Complex64),
    Infinity,
}

impl ExtPoint {
    pub fn finite(re: f64, im: f64) -> Self {
        ExtPoint::Finite(Complex64::new(re, im))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtPoint::Infinity)
    }

    /// Chordal distance on the Riemann sphere (diameter 2).
    pub fn chordal_distance(&self, other: &ExtPoint) -> f64 {
        match (self, other) {
            (ExtPoint::Infinity, ExtPoint::Infinity) => 0.0,
            (ExtPoint::Finite(z), ExtPoint::Infinity) | (ExtPoint::Infinity, ExtPoint::Finite(z)) => {
                2.0 / (1.0 + z.norm_sqr()).sqrt()
            }
            (ExtPoint::Finite(z), ExtPoint::Finite(w)) => {
                2.0 * (z - w).norm() / ((1.0 + z.norm_sqr()) * (1.0 + w.norm_sqr())).sqrt()
            }
        }
    }
}

impl From<Complex64> for ExtPoint {
    fn from(z: Complex64) -> Self {
        ExtPoint::Finite(z)
    }
}

impl fmt::Display for ExtPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtPoint::Finite(z) => write!(f, "{z}"),
            ExtPoint::Infinity => f.write_str("∞"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TransformKind {
    Identity,
    Parabolic,
    Elliptic,
    Hyperbolic,
    StrictlyLoxodromic,
}

impl TransformKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            TransformKind::Identity => "Identity",
            TransformKind::Parabolic => "Parabolic",
            TransformKind::Elliptic => "Elliptic",
            TransformKind::Hyperbolic => "Hyperbolic",
            TransformKind::StrictlyLoxodromic => "StrictlyLoxodromic",
        }
    }

    /// Hyperbolic or strictly loxodromic.
    pub fn is_loxodromic(&self) -> bool {
        matches!(self, TransformKind::Hyperbolic | TransformKind::StrictlyLoxodromic)
    }

    /// Has an axis (two distinct fixed points).
    pub fn is_nonparabolic(&self) -> bool {
        !matches!(self, TransformKind::Identity | TransformKind::Parabolic)
    }
}

impl fmt::Display for TransformKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Classification outcome. `multiplier` is the normal-form multiplier `μ`
/// (`f` is conjugate to `z ↦ μz`, `|μ| ≥ 1`), present only for
/// nonparabolic maps.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransformClass {
    pub kind: TransformKind,
    pub multiplier: Option<Complex64>,
    pub beta: Complex64,
}

/// Translation length `t ≥ 0` along the axis and rotation angle
/// `θ ∈ (−π, π]` about it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TranslationData {
    pub t: f64,
    pub theta: f64,
}

/// The two fixed points of a non-identity map; `p1 == p2` for parabolics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FixedPoints {
    pub p1: ExtPoint,
    pub p2: ExtPoint,
}

impl FixedPoints {
    /// Unordered comparison with chordal tolerance `tol`.
    pub fn same_set(&self, other: &FixedPoints, tol: f64) -> bool {
        let close = |x: &ExtPoint, y: &ExtPoint| x.chordal_distance(y) <= tol;
        (close(&self.p1, &other.p1) && close(&self.p2, &other.p2))
            || (close(&self.p1, &other.p2) && close(&self.p2, &other.p1))
    }

    pub fn shares_point(&self, other: &FixedPoints, tol: f64) -> bool {
        [self.p1, self.p2]
            .iter()
            .any(|x| [other.p1, other.p2].iter().any(|y| x.chordal_distance(y) <= tol))
    }
}

/// `β(f) = tr²(f) − 4`.
pub fn beta(f: &Matrix2C) -> Complex64 {
    let tr = f.trace();
    tr * tr - 4.0
}

/// `f = ±I` within [`EPS_CLASS`].
pub fn is_projective_identity(f: &Matrix2C) -> bool {
    let id = Matrix2C::identity();
    f.max_abs_diff(&id) <= EPS_CLASS || f.max_abs_diff(&id.neg()) <= EPS_CLASS
}

/// Normal-form multiplier `μ = λ²` where `λ` is the eigenvalue of larger
/// modulus; on a tie (elliptic) the root with `Im μ ≥ 0` is taken.
fn multiplier(f: &Matrix2C) -> Complex64 {
    let tr = f.trace();
    // tr² − 4 = β; the roots are (tr ± √β)/2.
    let root = beta(f).sqrt();
    let (plus, minus) = ((tr + root) / 2.0, (tr - root) / 2.0);
    let (big, small) = if plus.norm() >= minus.norm() {
        (plus, minus)
    } else {
        (minus, plus)
    };
    let (mu_big, mu_small) = (big * big, small * small);
    if (mu_big.norm() - mu_small.norm()).abs() <= EPS_CLASS && mu_big.im < 0.0 {
        mu_small
    } else {
        mu_big
    }
}

pub fn classify(f: &Matrix2C) -> TransformClass {
    let beta = beta(f);
    if is_projective_identity(f) {
        return TransformClass {
            kind: TransformKind::Identity,
            multiplier: None,
            beta,
        };
    }
    if beta.norm() <= EPS_CLASS {
        return TransformClass {
            kind: TransformKind::Parabolic,
            multiplier: None,
            beta,
        };
    }
    if beta.im.abs() <= EPS_CLASS && beta.re >= -4.0 - EPS_CLASS && beta.re < -EPS_CLASS {
        // β = −4 (within tolerance) is the half-turn, μ = −1.
        let mu = if (beta.re + 4.0).abs() <= EPS_CLASS {
            Complex64::new(-1.0, 0.0)
        } else {
            let mu = multiplier(f);
            if mu.im < 0.0 {
                mu.conj()
            } else {
                mu
            }
        };
        return TransformClass {
            kind: TransformKind::Elliptic,
            multiplier: Some(mu),
            beta,
        };
    }
    let mu = multiplier(f);
    let kind = if mu.im.abs() <= EPS_CLASS * mu.norm().max(1.0) && mu.re > 1.0 {
        TransformKind::Hyperbolic
    } else {
        TransformKind::StrictlyLoxodromic
    };
    TransformClass {
        kind,
        multiplier: Some(mu),
        beta,
    }
}

/// Translation length and rotation angle from β.
///
/// `cosh t = (|β + 4| + |β|)/4`. The angle satisfies
/// `cos θ = (|β + 4| − |β|)/4`; it is evaluated through the real and
/// imaginary parts of `cosh(t + iθ) = 1 + β/2`, which fixes the sign and stays
/// well conditioned when `θ` is near 0 or π. When `t` is too small to carry
/// the sign, the sign is chosen by the smaller residual of
/// `4 sinh²((t ± iθ)/2) − β`, ties going to `θ ≥ 0`.
pub fn translation_data(f: &Matrix2C) -> Result<TranslationData> {
    let class = classify(f);
    if !class.kind.is_nonparabolic() {
        return Err(Error::NotApplicable("translation data of a parabolic or the identity"));
    }
    Ok(translation_data_from_beta(class.beta))
}

pub(crate) fn translation_data_from_beta(beta: Complex64) -> TranslationData {
    let cosh_t = ((beta + 4.0).norm() + beta.norm()) / 4.0;
    let t = cosh_t.max(1.0).acosh();
    let half = beta / 2.0;
    let cos_theta = ((1.0 + half.re) / cosh_t).clamp(-1.0, 1.0);
    let sinh_t = t.sinh();

    let theta = if sinh_t > 1e-8 {
        let sin_theta = (half.im / sinh_t).clamp(-1.0, 1.0);
        sin_theta.atan2(cos_theta)
    } else {
        let magnitude = (1.0 - cos_theta * cos_theta).max(0.0).sqrt().atan2(cos_theta);
        let residual = |theta: f64| (beta_from_translation(t, theta) - beta).norm();
        if residual(magnitude) <= residual(-magnitude) {
            magnitude
        } else {
            -magnitude
        }
    };
    let theta = if theta <= -PI { PI } else { theta };
    TranslationData { t, theta }
}

/// `4 sinh²((t + iθ)/2)`.
pub fn beta_from_translation(t: f64, theta: f64) -> Complex64 {
    let s = (Complex64::new(t, theta) / 2.0).sinh();
    4.0 * s * s
}

/// Fixed points as roots of `c z² + (d − a) z − b = 0`.
pub fn fixed_points(f: &Matrix2C) -> Result<FixedPoints> {
    if is_projective_identity(f) {
        return Err(Error::IdentityHasAllPoints);
    }
    let (a, b, c, d) = (f.a(), f.b(), f.c(), f.d());
    if c.norm() <= EPS_SING {
        let other = if (d - a).norm() <= EPS_SING {
            ExtPoint::Infinity
        } else {
            ExtPoint::Finite(b / (d - a))
        };
        return Ok(FixedPoints {
            p1: ExtPoint::Infinity,
            p2: other,
        });
    }
    let amd = a - d;
    if beta(f).norm() <= EPS_CLASS {
        let z = ExtPoint::Finite(amd / (2.0 * c));
        return Ok(FixedPoints { p1: z, p2: z });
    }
    // Discriminant (d − a)² + 4bc equals β for det 1.
    let root = beta(f).sqrt();
    let (n_plus, n_minus) = (amd + root, amd - root);
    let num = if n_plus.norm() >= n_minus.norm() {
        n_plus
    } else {
        n_minus
    };
    let z1 = num / (2.0 * c);
    // Product of the roots is −b/c; z1 ≠ 0 since |num| ≥ |√β| > 0.
    let z2 = -b / (c * z1);
    Ok(FixedPoints {
        p1: ExtPoint::Finite(z1),
        p2: ExtPoint::Finite(z2),
    })
}

/// `f(z) = (az + b)/(cz + d)` on the Riemann sphere.
pub fn apply(f: &Matrix2C, z: ExtPoint) -> ExtPoint {
    let (a, b, c, d) = (f.a(), f.b(), f.c(), f.d());
    match z {
        ExtPoint::Infinity => {
            if c.norm() <= EPS_SING {
                ExtPoint::Infinity
            } else {
                ExtPoint::Finite(a / c)
            }
        }
        ExtPoint::Finite(z) => {
            let den = c * z + d;
            if den.norm() <= EPS_SING {
                ExtPoint::Infinity
            } else {
                ExtPoint::Finite((a * z + b) / den)
            }
        }
    }
}

/// `β(f^m) = μ^m − 2 + μ^{−m}`, evaluated as `4 sinh²(m·log μ / 2)`.
pub fn beta_of_power(f: &Matrix2C, m: u64) -> Result<Complex64> {
    let class = classify(f);
    let mu = match (class.kind.is_nonparabolic(), class.multiplier) {
        (true, Some(mu)) => mu,
        _ => return Err(Error::NotApplicable("beta_of_power of a parabolic or the identity")),
    };
    Ok(beta_of_multiplier_power(mu, m))
}

pub(crate) fn beta_of_multiplier_power(mu: Complex64, m: u64) -> Complex64 {
    let s = (mu.ln() * (m as f64) / 2.0).sinh();
    4.0 * s * s
}

/// `μ − 2 + μ⁻¹`.
pub fn beta_from_multiplier(mu: Complex64) -> Complex64 {
    mu - 2.0 + ONE / mu
}
