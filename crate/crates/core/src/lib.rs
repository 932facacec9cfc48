//! Numerics for two-generator Möbius groups.
//!
//! A Möbius transformation is represented by a matrix in `SL(2, C)`. From a
//! pair of generators `f`, `g` the crate computes the trace parameters
//! `β(f) = tr²(f) − 4`, `β(g)` and `γ(f, g) = tr([f, g]) − 2`, classifies each
//! generator, recovers translation lengths and rotation angles, and extracts
//! the hyperbolic distance `δ` and dihedral angle `φ` between the two axes
//! from the identity `4γ / (β(f)β(g)) = sinh²(δ + iφ)`.
//!
//! On top of that, [`extremal`] evaluates the known lower bounds for
//! translation lengths of generators with disjoint (or intersecting) axes,
//! the lemma bounds on `|γ|`, and a one-parameter family of free groups that
//! shows the `sinh(δ) ≤ 1` hypothesis cannot be dropped.
//!
//! Modules:
//! - [`algebra`]: complex 2×2 matrices of determinant one.
//! - [`moebius`]: single-transformation analysis.
//! - [`pair`]: pair parameters, axis geometry and a geometric distance oracle.
//! - [`extremal`]: constants, bound checkers and the counterexample family.
//! - [`cli`]: the command-line front end.

pub mod algebra;
pub mod cli;
mod error;
pub mod extremal;
pub mod json;
pub mod moebius;
pub mod pair;
pub mod tol;

pub use algebra::{commutator, ComplexScalar, Matrix2C};
pub use error::{Error, Result};
pub use moebius::{ExtPoint, FixedPoints, TransformClass, TransformKind, TranslationData};
pub use pair::{AxisGeometry, GeodesicH3, PairParameters};
