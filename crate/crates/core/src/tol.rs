//! Absolute tolerances shared by the numeric modules.

/// Allowed `|det − 1|` for a matrix accepted as an element of `SL(2, C)`.
pub const EPS_DET: f64 = 1e-9;

/// Below this `|det|` a raw matrix is treated as singular. Also used as the
/// "is zero" threshold for denominators in the action on the Riemann sphere.
pub const EPS_SING: f64 = 1e-12;

/// Classification boundary tolerance (β near 0, near the real axis, near the
/// ends of `[−4, 0]`).
pub const EPS_CLASS: f64 = 1e-9;

/// Slack on `margin = lhs − rhs` below which an inequality still counts as
/// satisfied.
pub const EPS_MARGIN: f64 = 1e-9;
