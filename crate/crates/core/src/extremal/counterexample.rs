use num_complex::Complex64;

use crate::algebra::Matrix2C;
use crate::moebius::beta;
use crate::{Error, Result};

/// One member of the two-parameter family with axes `{±e^δ}` and `{±1}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CounterexamplePoint {
    pub lambda: f64,
    pub mu: f64,
    pub delta: f64,
    pub sinh_delta: f64,
    /// `tr(f g⁻¹)` of the matrices as built.
    pub trace_fg_inv: Complex64,
    /// `|β(f)β(g)| sinh^{4/3}(δ)`.
    pub u: f64,
}

impl CounterexamplePoint {
    /// `2^{16/3} sinh^{2/3}(λ) sinh^{2/3}(μ)`, the closed form for `u` once
    /// `sinh δ = 2/(sinh λ sinh μ)`.
    pub fn u_closed_form(&self) -> f64 {
        2f64.powf(16.0 / 3.0) * (self.lambda.sinh() * self.mu.sinh()).powf(2.0 / 3.0)
    }
}

/// `f = [[cosh λ, e^δ sinh λ], [e^{−δ} sinh λ, cosh λ]]`,
/// `g = [[cosh μ, sinh μ], [sinh μ, cosh μ]]`.
pub fn counterexample_matrices(lambda: f64, mu: f64, delta: f64) -> Result<(Matrix2C, Matrix2C)> {
    let (ch, sh) = (lambda.cosh(), lambda.sinh());
    let e = delta.exp();
    let f = Matrix2C::new(ch.into(), (e * sh).into(), (sh / e).into(), ch.into())?;
    let (cm, sm) = (mu.cosh(), mu.sinh());
    let g = Matrix2C::new(cm.into(), sm.into(), sm.into(), cm.into())?;
    Ok((f, g))
}

/// Builds the family member with `sinh δ = 2/(sinh λ sinh μ)` and measures it.
///
/// `trace_fg_inv` and `u` are computed from the matrices, not from the
/// closed forms, so the stated relations can be checked against them.
pub fn counterexample_point(lambda: f64, mu: f64) -> Result<CounterexamplePoint> {
    if !(lambda > 0.0 && mu > 0.0 && lambda.is_finite() && mu.is_finite()) {
        return Err(Error::NotApplicable("lambda and mu must be finite and positive"));
    }
    let sinh_delta = 2.0 / (lambda.sinh() * mu.sinh());
    let delta = sinh_delta.asinh();
    let (f, g) = counterexample_matrices(lambda, mu, delta)?;
    let trace_fg_inv = f.compose(&g.inverse()).trace();
    let u = (beta(&f) * beta(&g)).norm() * sinh_delta.powf(4.0 / 3.0);
    Ok(CounterexamplePoint {
        lambda,
        mu,
        delta,
        sinh_delta,
        trace_fg_inv,
        u,
    })
}

/// Fixed `μ`, one point per `λ`, in input order.
pub fn counterexample_sweep(mu: f64, lambdas: &[f64]) -> Result<Vec<CounterexamplePoint>> {
    lambdas.iter().map(|&l| counterexample_point(l, mu)).collect()
}
