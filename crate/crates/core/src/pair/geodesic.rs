//! Geodesics of the upper half-space model and a direct numerical distance
//! between two of them.
//!
//! The distance is found by minimizing the point-to-point distance
//! `cosh D = 1 + |x − y|² / (2 x₃ y₃)` over arclength parameters on both
//! geodesics. It shares nothing with the trace-parameter route in the parent
//! module and serves as its oracle.

use num_complex::Complex64;

use crate::moebius::ExtPoint;
use crate::{Error, Result};

/// Chordal separation below which endpoints are considered equal.
const ENDPOINT_TOL: f64 = 1e-9;
/// Arclength search window on each geodesic.
const HALF_WINDOW: f64 = 40.0;
/// Stop the golden-section search once the bracket is this narrow.
const STEP_TOL: f64 = 1e-10;
const MAX_ITERS: usize = 200;

/// A geodesic of `H³`, identified by its two endpoints on `Ĉ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeodesicH3 {
    pub e1: ExtPoint,
    pub e2: ExtPoint,
}

/// A point of upper half-space: boundary coordinate and height.
#[derive(Debug, Clone, Copy)]
struct HPoint {
    z: Complex64,
    h: f64,
}

impl GeodesicH3 {
    pub fn new(e1: ExtPoint, e2: ExtPoint) -> Result<Self> {
        if e1.chordal_distance(&e2) <= ENDPOINT_TOL {
            return Err(Error::DegenerateGeodesic);
        }
        Ok(Self { e1, e2 })
    }

    /// Same endpoint set, in either order.
    pub fn same_as(&self, other: &GeodesicH3, tol: f64) -> bool {
        let close = |x: &ExtPoint, y: &ExtPoint| x.chordal_distance(y) <= tol;
        (close(&self.e1, &other.e1) && close(&self.e2, &other.e2))
            || (close(&self.e1, &other.e2) && close(&self.e2, &other.e1))
    }

    fn shares_endpoint(&self, other: &GeodesicH3) -> bool {
        [self.e1, self.e2].iter().any(|x| {
            [other.e1, other.e2]
                .iter()
                .any(|y| x.chordal_distance(y) <= ENDPOINT_TOL)
        })
    }

    /// Unit-speed parametrization by signed arclength `s`.
    ///
    /// A vertical line over `p` is `(p, e^s)`; a semicircle with center `m`,
    /// radius `r` and direction `u` is `(m + r tanh(s) u, r / cosh(s))`.
    fn point_at(&self, s: f64) -> HPoint {
        match (self.e1, self.e2) {
            (ExtPoint::Finite(p), ExtPoint::Infinity) | (ExtPoint::Infinity, ExtPoint::Finite(p)) => {
                HPoint { z: p, h: s.exp() }
            }
            (ExtPoint::Finite(a), ExtPoint::Finite(b)) => {
                let center = (a + b) / 2.0;
                let radius = (b - a).norm() / 2.0;
                let dir = (b - a) / (b - a).norm();
                HPoint {
                    z: center + dir * (radius * s.tanh()),
                    h: radius / s.cosh(),
                }
            }
            // Excluded by the constructor.
            (ExtPoint::Infinity, ExtPoint::Infinity) => unreachable!("degenerate geodesic"),
        }
    }
}

/// `cosh D − 1` between two points of upper half-space.
fn cosh_dist_minus_one(x: HPoint, y: HPoint) -> f64 {
    let dh = x.h - y.h;
    ((x.z - y.z).norm_sqr() + dh * dh) / (2.0 * x.h * y.h)
}

/// Golden-section minimization of a unimodal `f` on `[lo, hi]`.
fn golden_section(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> (f64, f64) {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    for _ in 0..MAX_ITERS {
        if hi - lo <= STEP_TOL {
            break;
        }
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
        }
    }
    if f1 <= f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

/// Hyperbolic distance between two geodesics with no common endpoint;
/// zero when they cross.
///
/// The distance from a point moving along one geodesic to the other geodesic
/// is convex in arclength, so both nested one-dimensional searches are over
/// unimodal functions.
pub fn geodesic_distance(g1: &GeodesicH3, g2: &GeodesicH3) -> Result<f64> {
    if g1.shares_endpoint(g2) {
        return Err(Error::SharedEndpoint);
    }
    let inner = |s1: f64| {
        let x = g1.point_at(s1);
        golden_section(|s2| cosh_dist_minus_one(x, g2.point_at(s2)), -HALF_WINDOW, HALF_WINDOW).1
    };
    let (_, q) = golden_section(inner, -HALF_WINDOW, HALF_WINDOW);
    // acosh(1 + q) without cancellation near q = 0.
    Ok(2.0 * (q.max(0.0) / 2.0).sqrt().asinh())
}
