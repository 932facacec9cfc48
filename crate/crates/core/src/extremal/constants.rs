use std::f64::consts::PI;

/// Theorem A constant, known to three digits.
pub const LAMBDA_A: f64 = 0.471;
/// The two stated endpoints for the Theorem B constant. They read
/// `0.777 ≥ b ≥ 0.884`, which no `b` satisfies; both are kept and the smaller
/// one is the default.
pub const B_LOW: f64 = 0.777;
pub const B_HIGH: f64 = 0.884;

/// The (2,3,7) triangle-group constants and the Theorem A/B values.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Constants {
    /// `2(cos(2π/7) + cos(π/7) − 1)`.
    pub c: f64,
    /// `2(1 − cos(π/7))`.
    pub d: f64,
    pub lambda_a: f64,
    pub b_low: f64,
    pub b_high: f64,
}

impl Constants {
    pub fn new() -> Self {
        Self {
            c: 2.0 * ((2.0 * PI / 7.0).cos() + (PI / 7.0).cos() - 1.0),
            d: 2.0 * (1.0 - (PI / 7.0).cos()),
            lambda_a: LAMBDA_A,
            b_low: B_LOW,
            b_high: B_HIGH,
        }
    }
}

impl Default for Constants {
    fn default() -> Self {
        Self::new()
    }
}

/// `(16dc, u*)` where `u*` is the positive root of `c⁻²u³ + 4u^{3/2} = 16dc`.
///
/// The left side is strictly increasing on `u > 0`; the root is bracketed on
/// `[0.1, 2]` and bisected until the bracket is below `1e-12`.
pub fn theorem2_proof_constants() -> (f64, f64) {
    let Constants { c, d, .. } = Constants::new();
    let target = 16.0 * d * c;
    let h = |u: f64| u.powi(3) / (c * c) + 4.0 * u.powf(1.5) - target;
    let (mut lo, mut hi) = (0.1, 2.0);
    debug_assert!(h(lo) < 0.0 && h(hi) > 0.0);
    while hi - lo > 1e-12 {
        let mid = 0.5 * (lo + hi);
        if h(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (target, 0.5 * (lo + hi))
}
