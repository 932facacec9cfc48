use std::f64::consts::PI;

use crate::algebra::Matrix2C;
use crate::moebius::{beta_of_multiplier_power, classify, translation_data, TransformKind};
use crate::pair::gamma;
use crate::{Error, Result};

use super::{Bound, Constants, InequalityReport};

pub const DEFAULT_LEMMA3_CAP: u64 = 1_000_000;

/// Largest elliptic order searched for when recovering `n` from an angle.
const MAX_ORDER: u32 = 100_000;
/// `|n θ − 2πk|` allowed when matching a rotation angle to an order.
const ORDER_TOL: f64 = 1e-6;

/// Lower bound `a(n)` on `|γ|` for an elliptic of order `n ≥ 3`.
pub fn a_of_n(n: u32) -> Result<f64> {
    let cos2pi = |k: f64| (2.0 * PI / k).cos();
    match n {
        0..=2 => Err(Error::BadOrder(n)),
        3 => Ok(2.0 * cos2pi(7.0) - 1.0),
        4 | 5 => Ok(2.0 * cos2pi(5.0)),
        6 => Ok(2.0 * cos2pi(6.0)),
        _ => Ok(2.0 * cos2pi(n as f64) - 1.0),
    }
}

/// Order of a rotation by `theta`: the least `n ≥ 1` with `nθ ∈ 2πZ`.
/// `None` for angles that are not rational multiples of `2π` (up to
/// [`MAX_ORDER`]).
pub fn elliptic_order(theta: f64) -> Option<u32> {
    (1..=MAX_ORDER).find(|&n| {
        let x = n as f64 * theta;
        let k = (x / (2.0 * PI)).round();
        (x - 2.0 * PI * k).abs() <= ORDER_TOL
    })
}

/// `(4π/√3) sinh t(f)`.
pub fn lemma3_bound(t: f64) -> f64 {
    4.0 * PI / 3f64.sqrt() * t.sinh()
}

/// Least `m ≤ cap` with `|β(f^m)| ≤ (4π/√3) sinh t(f)`.
pub fn lemma3_find_m(f: &Matrix2C, cap: u64) -> Result<u64> {
    let class = classify(f);
    let mu = match (class.kind.is_loxodromic(), class.multiplier) {
        (true, Some(mu)) => mu,
        _ => return Err(Error::NotApplicable("power search needs a loxodromic")),
    };
    let bound = lemma3_bound(translation_data(f)?.t);
    (1..=cap)
        .find(|&m| beta_of_multiplier_power(mu, m).norm() <= bound)
        .ok_or(Error::CapExceeded { cap })
}

const FUCHSIAN_ASSUMED: &str = "<f,g> Fuchsian: asserted by caller, not verified";
const KLEINIAN_ASSUMED: &str = "<f,g> Kleinian: asserted by caller, not verified";

/// Checks `|γ(f, g)| ≥ rhs` for one of the lemma bounds.
///
/// L2 requires `|β(f)| ≤ c` or `β(f) = β(g)`; L4 requires `f` elliptic of
/// order `n ≥ 3` (taken from `order` when given, which must match `f`) and
/// `g` not of order 2.
pub fn lemma_bound_check(which: Bound, f: &Matrix2C, g: &Matrix2C, order: Option<u32>) -> InequalityReport {
    let k = Constants::new();
    let lhs = gamma(f, g).norm();
    match which {
        Bound::L1 => InequalityReport::evaluated(which, lhs, k.d, FUCHSIAN_ASSUMED.to_string()),
        Bound::L2 => {
            let (cf, cg) = (classify(f), classify(g));
            let small = cf.beta.norm() <= k.c;
            let equal = super::theorems::betas_equal(cf.beta, cg.beta);
            if !(small || equal) {
                return InequalityReport::inapplicable(
                    which,
                    k.d,
                    format!("|beta(f)| = {} > c and beta(f) != beta(g)", cf.beta.norm()),
                );
            }
            let gate = if small { "|beta(f)| <= c" } else { "beta(f) = beta(g)" };
            InequalityReport::evaluated(which, lhs, k.d, format!("{gate}; {KLEINIAN_ASSUMED}"))
        }
        Bound::L4 => {
            let n = match elliptic_order_of(f, order) {
                Ok(n) => n,
                Err(reason) => return InequalityReport::inapplicable(which, f64::NAN, reason),
            };
            let rhs = a_of_n(n).expect("order checked >= 3");
            if is_order_two(g) {
                return InequalityReport::inapplicable(which, rhs, "g has order 2");
            }
            InequalityReport::evaluated(which, lhs, rhs, format!("f elliptic of order {n}; {KLEINIAN_ASSUMED}"))
        }
        other => InequalityReport::inapplicable(other, f64::NAN, "not a lemma bound"),
    }
}

/// Order `n ≥ 3` of an elliptic, or a reason why there is none.
pub(crate) fn elliptic_order_of(f: &Matrix2C, order: Option<u32>) -> std::result::Result<u32, String> {
    let class = classify(f);
    if class.kind != TransformKind::Elliptic {
        return Err(format!("expected an elliptic, got {}", class.kind));
    }
    let theta = translation_data(f).map_err(|e| e.to_string())?.theta;
    let n = match order {
        Some(n) => {
            let x = n as f64 * theta;
            if n == 0 || (x - 2.0 * PI * (x / (2.0 * PI)).round()).abs() > ORDER_TOL {
                return Err(format!("rotation angle {theta} is not of order {n}"));
            }
            n
        }
        None => elliptic_order(theta).ok_or_else(|| format!("rotation angle {theta} has no finite order"))?,
    };
    if n < 3 {
        return Err(format!("elliptic order {n} < 3"));
    }
    Ok(n)
}

fn is_order_two(g: &Matrix2C) -> bool {
    let class = classify(g);
    class.kind == TransformKind::Elliptic && translation_data(g).is_ok_and(|td| elliptic_order(td.theta) == Some(2))
}
