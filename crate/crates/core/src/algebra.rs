//! Complex 2×2 matrices of determinant one.
//!
//! [`Matrix2C`] is the concrete representative of a Möbius transformation
//! `z ↦ (az + b)/(cz + d)`. Values are immutable; every operation returns a
//! new matrix.

use std::fmt;
use std::ops::Mul;

use num_complex::Complex64;

use crate::tol::{EPS_DET, EPS_SING};
use crate::{Error, Result};

/// Ground field scalar.
pub type ComplexScalar = Complex64;

pub(crate) const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub(crate) const ONE: Complex64 = Complex64::new(1.0, 0.0);

pub(crate) fn is_finite(z: Complex64) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

/// A matrix `[[a, b], [c, d]]` with `ad − bc = 1` up to [`EPS_DET`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Matrix2C {
    a: Complex64,
    b: Complex64,
    c: Complex64,
    d: Complex64,
}

impl Matrix2C {
    /// Accepts entries that already have determinant one.
    pub fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Result<Self> {
        if ![a, b, c, d].into_iter().all(is_finite) {
            return Err(Error::NonFinite);
        }
        let det = a * d - b * c;
        if (det - ONE).norm() > EPS_DET {
            return Err(Error::NotUnimodular {
                det_re: det.re,
                det_im: det.im,
            });
        }
        Ok(Self { a, b, c, d })
    }

    /// Scales a raw matrix into `SL(2, C)` by dividing by the principal
    /// square root of its determinant.
    ///
    /// `m` and `−m` induce the same Möbius map, so the sign fixed here by the
    /// principal branch has no effect on β or γ.
    pub fn normalize(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Result<Self> {
        if ![a, b, c, d].into_iter().all(is_finite) {
            return Err(Error::NonFinite);
        }
        let det = a * d - b * c;
        if det.norm() <= EPS_SING {
            return Err(Error::SingularMatrix { det_abs: det.norm() });
        }
        let k = det.sqrt().inv();
        let m = Self::from_parts(a * k, b * k, c * k, d * k);
        if ![m.a, m.b, m.c, m.d].into_iter().all(is_finite) {
            return Err(Error::NonFinite);
        }
        Ok(m)
    }

    /// Real-entry convenience for [`Matrix2C::normalize`].
    pub fn normalize_real(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        Self::normalize(a.into(), b.into(), c.into(), d.into())
    }

    pub(crate) const fn from_parts(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Self {
        Self { a, b, c, d }
    }

    pub const fn identity() -> Self {
        Self::from_parts(ONE, ZERO, ZERO, ONE)
    }

    /// `diag(u, 1/u)`; `u` must be nonzero.
    pub fn diag(u: Complex64) -> Result<Self> {
        if !is_finite(u) {
            return Err(Error::NonFinite);
        }
        if u.norm() <= EPS_SING {
            return Err(Error::SingularMatrix { det_abs: 0.0 });
        }
        Ok(Self::from_parts(u, ZERO, ZERO, u.inv()))
    }

    pub fn a(&self) -> Complex64 {
        self.a
    }
    pub fn b(&self) -> Complex64 {
        self.b
    }
    pub fn c(&self) -> Complex64 {
        self.c
    }
    pub fn d(&self) -> Complex64 {
        self.d
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> [Complex64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn det(&self) -> Complex64 {
        self.a * self.d - self.b * self.c
    }

    pub fn trace(&self) -> Complex64 {
        self.a + self.d
    }

    pub fn compose(&self, rhs: &Self) -> Self {
        Self::from_parts(
            self.a * rhs.a + self.b * rhs.c,
            self.a * rhs.b + self.b * rhs.d,
            self.c * rhs.a + self.d * rhs.c,
            self.c * rhs.b + self.d * rhs.d,
        )
    }

    /// `[[d, −b], [−c, a]]`, exact for determinant one.
    pub fn inverse(&self) -> Self {
        Self::from_parts(self.d, -self.b, -self.c, self.a)
    }

    /// `self^n` by repeated squaring; `self^0 = I`.
    pub fn power(&self, n: u64) -> Self {
        let mut result = Self::identity();
        let mut base = *self;
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = result.compose(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.compose(&base);
            }
        }
        result
    }

    /// `h · self · h⁻¹`.
    pub fn conjugate_by(&self, h: &Self) -> Self {
        h.compose(self).compose(&h.inverse())
    }

    pub fn neg(&self) -> Self {
        Self::from_parts(-self.a, -self.b, -self.c, -self.d)
    }

    /// Max absolute entry difference (∞-norm of `self − other`).
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.entries()
            .iter()
            .zip(other.entries().iter())
            .map(|(x, y)| (x - y).norm())
            .fold(0.0, f64::max)
    }

    /// Max absolute entry.
    pub fn max_abs_entry(&self) -> f64 {
        self.entries().iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

impl Mul for Matrix2C {
    type Output = Matrix2C;

    fn mul(self, rhs: Matrix2C) -> Matrix2C {
        Matrix2C::compose(&self, &rhs)
    }
}

impl Mul<&Matrix2C> for &Matrix2C {
    type Output = Matrix2C;

    fn mul(self, rhs: &Matrix2C) -> Matrix2C {
        Matrix2C::compose(self, rhs)
    }
}

impl Default for Matrix2C {
    fn default() -> Self {
        Self::identity()
    }
}

impl fmt::Display for Matrix2C {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

/// `[f, g] = f g f⁻¹ g⁻¹`.
pub fn commutator(f: &Matrix2C, g: &Matrix2C) -> Matrix2C {
    f.compose(g).compose(&f.inverse()).compose(&g.inverse())
}
