use std::f64::consts::PI;

use num_complex::Complex64;

use crate::algebra::Matrix2C;
use crate::moebius::{classify, translation_data, TransformClass, TransformKind};
use crate::pair::{axis_geometry, pair_parameters, AxisGeometry};
use crate::tol::EPS_CLASS;
use crate::Result;

use super::lemmas::{a_of_n, elliptic_order_of};
use super::{Bound, Constants, InequalityReport, B_LOW};

const DISCRETE_ASSUMED: &str = "<f,g> discrete: asserted by caller, not verified";

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TheoremOptions {
    /// Constant used on the right of T3 and B.
    pub b: f64,
    /// Elliptic order of `g` for T5; recovered from the rotation angle when
    /// absent.
    pub order: Option<u32>,
}

impl Default for TheoremOptions {
    fn default() -> Self {
        Self { b: B_LOW, order: None }
    }
}

pub(crate) fn betas_equal(x: Complex64, y: Complex64) -> bool {
    (x - y).norm() <= EPS_CLASS * x.norm().max(1.0)
}

struct Pair {
    cf: TransformClass,
    cg: TransformClass,
    t_f: f64,
    t_g: f64,
    geometry: AxisGeometry,
}

fn analyse(f: &Matrix2C, g: &Matrix2C) -> std::result::Result<Pair, String> {
    let (cf, cg) = (classify(f), classify(g));
    let geometry = axis_geometry(f, g).map_err(|e| format!("axis geometry unavailable: {e}"))?;
    let t_f = translation_data(f).map_err(|e| e.to_string())?.t;
    let t_g = translation_data(g).map_err(|e| e.to_string())?.t;
    Ok(Pair {
        cf,
        cg,
        t_f,
        t_g,
        geometry,
    })
}

fn rhs_for(id: Bound, k: &Constants, opts: &TheoremOptions) -> f64 {
    match id {
        Bound::T1 => k.d.sqrt() / 2.0,
        Bound::T2 => 4.0 * k.d,
        Bound::T3 => 3.0 * opts.b / (16.0 * PI * PI),
        Bound::T4 => (3.0 * k.d).sqrt() / (2.0 * PI),
        Bound::A => k.lambda_a * k.lambda_a,
        Bound::B => opts.b,
        // Depends on the elliptic order.
        _ => f64::NAN,
    }
}

/// Evaluates one of the translation-length inequalities on `(f, g)`.
///
/// Hypotheses on generator types, axis position, `sinh δ ≤ 1` (T2, T3),
/// `β(f) = β(g)` (T4) and the elliptic order (T5) are checked; a failed check
/// yields `applicable = false` with the reason. Discreteness is never
/// checked.
pub fn evaluate_theorem(id: Bound, f: &Matrix2C, g: &Matrix2C, opts: &TheoremOptions) -> InequalityReport {
    let k = Constants::new();
    let rhs = rhs_for(id, &k, opts);
    if id.is_lemma() {
        return super::lemma_bound_check(id, f, g, opts.order);
    }
    let p = match analyse(f, g) {
        Ok(p) => p,
        Err(reason) => return InequalityReport::inapplicable(id, rhs, reason),
    };
    let geom = p.geometry;
    let disjoint = !geom.intersecting();
    let both = |pred: fn(&TransformKind) -> bool| pred(&p.cf.kind) && pred(&p.cg.kind);
    let is_hyperbolic = |k: &TransformKind| *k == TransformKind::Hyperbolic;
    let is_loxodromic = |k: &TransformKind| k.is_loxodromic();
    let sinh_delta = geom.delta.sinh();

    let fail = |reason: &str| InequalityReport::inapplicable(id, rhs, reason.to_string());
    let reason = |what: &str| format!("{what}; {DISCRETE_ASSUMED}");

    match id {
        Bound::T1 => {
            if !both(is_hyperbolic) {
                return fail("f and g must both be hyperbolic");
            }
            if !disjoint {
                return fail("axes intersect");
            }
            let lhs = (p.t_f / 2.0).sinh() * (p.t_g / 2.0).sinh() * sinh_delta;
            InequalityReport::evaluated(id, lhs, rhs, reason("hyperbolic generators, disjoint axes"))
        }
        Bound::T2 | Bound::T3 => {
            if !both(is_loxodromic) {
                return fail("f and g must both be loxodromic");
            }
            if !disjoint {
                return fail("axes intersect");
            }
            if sinh_delta > 1.0 + EPS_CLASS {
                return fail("sinh(delta) > 1");
            }
            let lhs = if id == Bound::T2 {
                (p.cf.beta * p.cg.beta).norm() * sinh_delta.powf(4.0 / 3.0)
            } else {
                p.t_f.sinh() * p.t_g.sinh() * sinh_delta.powf(4.0 / 3.0)
            };
            InequalityReport::evaluated(
                id,
                lhs,
                rhs,
                reason("loxodromic generators, disjoint axes, sinh(delta) <= 1"),
            )
        }
        Bound::T4 => {
            if !both(is_loxodromic) {
                return fail("f and g must both be loxodromic");
            }
            if !betas_equal(p.cf.beta, p.cg.beta) {
                return fail("beta mismatch");
            }
            if !disjoint {
                return fail("axes intersect");
            }
            let lhs = p.t_f.sinh() * sinh_delta;
            InequalityReport::evaluated(
                id,
                lhs,
                rhs,
                reason("loxodromic generators with beta(f) = beta(g), disjoint axes"),
            )
        }
        Bound::T5 => {
            if !p.cf.kind.is_loxodromic() {
                return fail("f must be loxodromic");
            }
            let n = match elliptic_order_of(g, opts.order) {
                Ok(n) => n,
                Err(why) => return fail(&format!("g: {why}")),
            };
            let rhs = 3f64.sqrt() * a_of_n(n).expect("order >= 3") / (4.0 * PI);
            if !disjoint {
                return InequalityReport::inapplicable(id, rhs, "axes intersect");
            }
            let lhs = p.t_f.sinh() * (PI / n as f64).sin().powi(2) * sinh_delta * sinh_delta;
            let mut report = InequalityReport::evaluated(
                id,
                lhs,
                rhs,
                reason(&format!("f loxodromic, g elliptic of order {n}, disjoint axes")),
            );
            if n >= 5 {
                report.alt_rhs = Some(3f64.sqrt() * (2.0 * PI / n as f64).cos() / (2.0 * PI));
            }
            report
        }
        Bound::A | Bound::B => {
            let ok = if id == Bound::A {
                both(is_hyperbolic)
            } else {
                both(is_loxodromic)
            };
            if !ok {
                return fail(if id == Bound::A {
                    "f and g must both be hyperbolic"
                } else {
                    "f and g must both be loxodromic"
                });
            }
            if disjoint {
                return fail("axes do not intersect");
            }
            if geom.phi <= EPS_CLASS || PI - geom.phi <= EPS_CLASS {
                return fail("intersection angle must lie in (0, pi)");
            }
            let lhs = if id == Bound::A {
                (p.t_f / 2.0).sinh() * (p.t_g / 2.0).sinh() * geom.phi.sin()
            } else {
                (p.cf.beta * p.cg.beta).norm() * geom.phi.sin().powf(4.0 / 3.0)
            };
            InequalityReport::evaluated(id, lhs, rhs, reason("axes intersect at an angle in (0, pi)"))
        }
        Bound::L1 | Bound::L2 | Bound::L4 => unreachable!("handled above"),
    }
}

/// Step-wise quantities of the hyperbolic, coplanar disjoint-axes argument:
/// `16 sinh²(t_f/2) sinh²(t_g/2) sinh²δ = |β(f)||β(g)| sinh²δ = 4|γ| ≥ 4d`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Theorem1Chain {
    pub translation_side: f64,
    pub beta_side: f64,
    pub four_abs_gamma: f64,
    pub four_d: f64,
}

impl Theorem1Chain {
    pub fn holds(&self, tol: f64) -> bool {
        (self.translation_side - self.beta_side).abs() <= tol
            && (self.beta_side - self.four_abs_gamma).abs() <= tol
            && self.four_abs_gamma >= self.four_d - tol
    }
}

pub fn theorem1_chain(f: &Matrix2C, g: &Matrix2C) -> Result<Theorem1Chain> {
    let geom = axis_geometry(f, g)?;
    let params = pair_parameters(f, g);
    let (tf, tg) = (translation_data(f)?.t, translation_data(g)?.t);
    let s2 = geom.delta.sinh().powi(2);
    Ok(Theorem1Chain {
        translation_side: 16.0 * (tf / 2.0).sinh().powi(2) * (tg / 2.0).sinh().powi(2) * s2,
        beta_side: params.beta_f.norm() * params.beta_g.norm() * s2,
        four_abs_gamma: 4.0 * params.gamma.norm(),
        four_d: 4.0 * Constants::new().d,
    })
}

/// Step-wise quantities of the `|β(f)| ≥ c` branch, after relabeling so that
/// `|β(f)| ≤ |β(g)|`:
///
/// `c⁻²u³ + 4u^{3/2} ≥ |ββ|² sinh⁴δ + 4|ββ| sinh²δ |β(f)| ≥ 16|γ|² + 16|γ||β(f)| ≥ 16dc`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Theorem2Chain {
    pub u: f64,
    pub cubic_side: f64,
    pub middle: f64,
    pub gamma_side: f64,
    pub sixteen_dc: f64,
    /// `|β(f)|` after relabeling; the chain only applies when it is `≥ c`.
    pub beta_min: f64,
}

impl Theorem2Chain {
    pub fn first_step_holds(&self, tol: f64) -> bool {
        self.cubic_side >= self.middle - tol
    }

    /// `cubic_side ≥ gamma_side`.
    pub fn cubic_dominates_gamma(&self, tol: f64) -> bool {
        self.cubic_side >= self.gamma_side - tol
    }
}

pub fn theorem2_chain(f: &Matrix2C, g: &Matrix2C) -> Result<Theorem2Chain> {
    let k = Constants::new();
    let geom = axis_geometry(f, g)?;
    let params = pair_parameters(f, g);
    let product = (params.beta_f * params.beta_g).norm();
    let beta_min = params.beta_f.norm().min(params.beta_g.norm());
    let s2 = geom.delta.sinh().powi(2);
    let u = product * s2.powf(2.0 / 3.0);
    let gamma = params.gamma.norm();
    Ok(Theorem2Chain {
        u,
        cubic_side: u.powi(3) / (k.c * k.c) + 4.0 * u.powf(1.5),
        middle: product * product * s2 * s2 + 4.0 * product * s2 * beta_min,
        gamma_side: 16.0 * gamma * gamma + 16.0 * gamma * beta_min,
        sixteen_dc: 16.0 * k.d * k.c,
        beta_min,
    })
}
