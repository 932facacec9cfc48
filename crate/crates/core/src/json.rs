//! JSON encodings shared by the CLI and tests.
//!
//! Complex numbers are `[re, im]`; a matrix is
//! `{"a":[re,im],"b":[re,im],"c":[re,im],"d":[re,im]}`. Emitted numbers are
//! rounded to 12 significant digits.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::algebra::Matrix2C;
use crate::extremal::{CounterexamplePoint, InequalityReport};
use crate::moebius::{TransformClass, TranslationData};
use crate::pair::{AxisGeometry, PairParameters};
use crate::{Error, Result};

pub const SIGNIFICANT_DIGITS: usize = 12;

/// Rounds to [`SIGNIFICANT_DIGITS`] significant digits; `-0.0` becomes `0.0`.
pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return if x == 0.0 { 0.0 } else { x };
    }
    let s = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x);
    let r: f64 = s.parse().expect("formatted float parses");
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

/// Rounded number, or `null` for NaN/infinity.
pub fn num(x: f64) -> Value {
    if x.is_finite() {
        json!(round_sig(x))
    } else {
        Value::Null
    }
}

pub fn complex(z: Complex64) -> Value {
    json!([num(z.re), num(z.im)])
}

/// Wire form of a matrix before normalization.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixJson {
    pub a: [f64; 2],
    pub b: [f64; 2],
    pub c: [f64; 2],
    pub d: [f64; 2],
}

impl MatrixJson {
    /// Normalizes to determinant one; rejects non-finite and singular input.
    pub fn to_matrix(&self) -> Result<Matrix2C> {
        let z = |p: [f64; 2]| Complex64::new(p[0], p[1]);
        Matrix2C::normalize(z(self.a), z(self.b), z(self.c), z(self.d))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairJson {
    pub f: MatrixJson,
    pub g: MatrixJson,
}

#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParamsJson {
    pub beta_f: [f64; 2],
    pub beta_g: [f64; 2],
    pub gamma: [f64; 2],
}

impl ParamsJson {
    pub fn to_params(&self) -> Result<PairParameters> {
        let z = |p: [f64; 2]| -> Result<Complex64> {
            if p.iter().all(|x| x.is_finite()) {
                Ok(Complex64::new(p[0], p[1]))
            } else {
                Err(Error::NonFinite)
            }
        };
        Ok(PairParameters::new(z(self.beta_f)?, z(self.beta_g)?, z(self.gamma)?))
    }
}

pub fn matrix(m: &Matrix2C) -> Value {
    json!({
        "a": complex(m.a()),
        "b": complex(m.b()),
        "c": complex(m.c()),
        "d": complex(m.d()),
    })
}

pub fn classification(class: &TransformClass, td: Option<&TranslationData>) -> Value {
    json!({
        "kind": class.kind.as_str(),
        "multiplier": class.multiplier.map(complex).unwrap_or(Value::Null),
        "beta": complex(class.beta),
        "t": td.map(|t| num(t.t)).unwrap_or(Value::Null),
        "theta": td.map(|t| num(t.theta)).unwrap_or(Value::Null),
    })
}

pub fn params(p: &PairParameters) -> Value {
    json!({
        "beta_f": complex(p.beta_f),
        "beta_g": complex(p.beta_g),
        "gamma": complex(p.gamma),
    })
}

pub fn pair_geometry(p: &PairParameters, geom: &AxisGeometry) -> Value {
    json!({
        "beta_f": complex(p.beta_f),
        "beta_g": complex(p.beta_g),
        "gamma": complex(p.gamma),
        "delta": num(geom.delta),
        "phi": num(geom.phi),
        "coplanar": geom.coplanar,
    })
}

pub fn report(r: &InequalityReport) -> Value {
    json!({
        "theorem_id": r.id.as_str(),
        "lhs": num(r.lhs),
        "rhs": num(r.rhs),
        "satisfied": r.satisfied,
        "margin": num(r.margin),
        "applicable": r.applicable,
        "reason": r.reason,
        "alt_rhs": r.alt_rhs.map(num).unwrap_or(Value::Null),
    })
}

pub fn counterexample(p: &CounterexamplePoint) -> Value {
    json!({
        "lambda": num(p.lambda),
        "mu": num(p.mu),
        "delta": num(p.delta),
        "sinh_delta": num(p.sinh_delta),
        "trace_fg_inv_re": num(p.trace_fg_inv.re),
        "trace_fg_inv_im": num(p.trace_fg_inv.im),
        "u": num(p.u),
    })
}
