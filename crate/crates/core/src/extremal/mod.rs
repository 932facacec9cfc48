//! Extremal constants, the lemma bounds on `|γ|`, the translation-length
//! inequalities, and the free-group family showing that `sinh δ ≤ 1` cannot
//! be dropped from the disjoint-axes bound.
//!
//! None of the evaluators decide discreteness. Every report records that
//! hypothesis as asserted by the caller.

mod constants;
mod counterexample;
mod lemmas;
mod theorems;

use std::fmt;
use std::str::FromStr;

pub use constants::{theorem2_proof_constants, Constants, B_HIGH, B_LOW, LAMBDA_A};
pub use counterexample::{counterexample_matrices, counterexample_point, counterexample_sweep, CounterexamplePoint};
pub use lemmas::{a_of_n, elliptic_order, lemma3_bound, lemma3_find_m, lemma_bound_check, DEFAULT_LEMMA3_CAP};
pub use theorems::{evaluate_theorem, theorem1_chain, theorem2_chain, Theorem1Chain, Theorem2Chain, TheoremOptions};

use crate::tol::EPS_MARGIN;

/// Which inequality a report is about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Bound {
    T1,
    T2,
    T3,
    T4,
    T5,
    A,
    B,
    L1,
    L2,
    L4,
}

impl Bound {
    pub const THEOREMS: [Bound; 7] = [
        Bound::T1,
        Bound::T2,
        Bound::T3,
        Bound::T4,
        Bound::T5,
        Bound::A,
        Bound::B,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Bound::T1 => "T1",
            Bound::T2 => "T2",
            Bound::T3 => "T3",
            Bound::T4 => "T4",
            Bound::T5 => "T5",
            Bound::A => "A",
            Bound::B => "B",
            Bound::L1 => "L1",
            Bound::L2 => "L2",
            Bound::L4 => "L4",
        }
    }

    pub fn is_lemma(&self) -> bool {
        matches!(self, Bound::L1 | Bound::L2 | Bound::L4)
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Bound {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "T1" => Bound::T1,
            "T2" => Bound::T2,
            "T3" => Bound::T3,
            "T4" => Bound::T4,
            "T5" => Bound::T5,
            "A" => Bound::A,
            "B" => Bound::B,
            "L1" => Bound::L1,
            "L2" => Bound::L2,
            "L4" => Bound::L4,
            other => return Err(format!("unknown bound '{other}'")),
        })
    }
}

/// Outcome of evaluating one inequality `lhs ≥ rhs` on a generator pair.
///
/// `lhs` is NaN when the hypotheses fail before it can be formed; `rhs` is
/// NaN only when it depends on data that is unavailable (e.g. the elliptic
/// order for T5).
#[derive(Debug, Clone, PartialEq)]
pub struct InequalityReport {
    pub id: Bound,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
    pub satisfied: bool,
    pub applicable: bool,
    pub reason: String,
    /// Second right-hand side, reported by T5 for `n ≥ 5`.
    pub alt_rhs: Option<f64>,
}

impl InequalityReport {
    pub(crate) fn evaluated(id: Bound, lhs: f64, rhs: f64, reason: String) -> Self {
        let margin = lhs - rhs;
        Self {
            id,
            lhs,
            rhs,
            margin,
            satisfied: margin >= -EPS_MARGIN,
            applicable: true,
            reason,
            alt_rhs: None,
        }
    }

    pub(crate) fn inapplicable(id: Bound, rhs: f64, reason: impl Into<String>) -> Self {
        Self {
            id,
            lhs: f64::NAN,
            rhs,
            margin: f64::NAN,
            satisfied: false,
            applicable: false,
            reason: reason.into(),
            alt_rhs: None,
        }
    }
}
