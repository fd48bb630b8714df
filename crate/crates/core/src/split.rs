//! Split-complex numbers `a + τb` with `τ² = 1`.
//!
//! Every element decomposes as `p·e⁺ + q·e⁻` over the idempotents
//! `e± = (1 ± τ)/2`, where `(p, q) = (a + b, a − b)`. Multiplication is
//! componentwise in `(p, q)`, and all transcendental functions below are
//! defined through that splitting.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Relative scale of the light-like test: `|z|² ≤ LIGHTLIKE_TOL·(1 + re² + im²)`.
pub const LIGHTLIKE_TOL: f64 = 1e-10;

/// An element `re + τ·im` of the split-complex algebra.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct SplitComplex {
    pub re: f64,
    pub im: f64,
}

/// Position of an element relative to the positive space-like cone
/// `C⁺ = { z : Re z > 0, |z|² > 0 }`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ConeClass {
    InteriorCPlus,
    BoundaryCPlus,
    Outside,
}

impl SplitComplex {
    pub const ZERO: SplitComplex = SplitComplex { re: 0.0, im: 0.0 };
    pub const ONE: SplitComplex = SplitComplex { re: 1.0, im: 0.0 };
    pub const TAU: SplitComplex = SplitComplex { re: 0.0, im: 1.0 };
    /// `e⁺ = (1 + τ)/2`
    pub const E_PLUS: SplitComplex = SplitComplex { re: 0.5, im: 0.5 };
    /// `e⁻ = (1 − τ)/2`
    pub const E_MINUS: SplitComplex = SplitComplex { re: 0.5, im: -0.5 };

    pub const fn new(re: f64, im: f64) -> Self {
        Self { re, im }
    }

    pub const fn real(re: f64) -> Self {
        Self { re, im: 0.0 }
    }

    pub fn conj(self) -> Self {
        Self::new(self.re, -self.im)
    }

    /// `re² − im²`, which may be negative.
    pub fn square_norm(self) -> f64 {
        self.re * self.re - self.im * self.im
    }

    /// `sqrt(max(|z|², 0))`.
    pub fn modulus(self) -> f64 {
        self.square_norm().max(0.0).sqrt()
    }

    pub fn is_lightlike(self) -> bool {
        self.square_norm().abs() <= LIGHTLIKE_TOL * (1.0 + self.re * self.re + self.im * self.im)
    }

    pub fn invert(self) -> Result<Self> {
        if self.is_lightlike() {
            return Err(Error::LightLikeElement { re: self.re, im: self.im });
        }
        let (p, q) = self.split();
        Ok(Self::join(1.0 / p, 1.0 / q))
    }

    /// Idempotent coordinates `(p, q)` with `z = p·e⁺ + q·e⁻`.
    pub fn split(self) -> (f64, f64) {
        (self.re + self.im, self.re - self.im)
    }

    /// Inverse of [`SplitComplex::split`].
    pub fn join(p: f64, q: f64) -> Self {
        Self::new(0.5 * (p + q), 0.5 * (p - q))
    }

    /// Applies `f` in each idempotent coordinate.
    pub fn map_split(self, f: impl Fn(f64) -> f64) -> Self {
        let (p, q) = self.split();
        Self::join(f(p), f(q))
    }

    /// Applies a partial function in each idempotent coordinate, failing when
    /// either coordinate is outside its domain.
    pub fn try_map_split(
        self,
        name: &'static str,
        in_domain: impl Fn(f64) -> bool,
        f: impl Fn(f64) -> f64,
    ) -> Result<Self> {
        let (p, q) = self.split();
        for v in [p, q] {
            if !in_domain(v) {
                return Err(Error::DomainError { function: name, value: v });
            }
        }
        Ok(Self::join(f(p), f(q)))
    }

    pub fn exp(self) -> Self {
        self.map_split(f64::exp)
    }

    pub fn ln(self) -> Result<Self> {
        self.try_map_split("log", |v| v > 0.0, f64::ln)
    }

    pub fn cosh(self) -> Self {
        self.map_split(f64::cosh)
    }

    /// Nonnegative branch of arccosh in each factor.
    pub fn acosh(self) -> Result<Self> {
        self.try_map_split("arccosh", |v| v >= 1.0, f64::acosh)
    }

    pub fn sqrt(self) -> Result<Self> {
        self.try_map_split("sqrt", |v| v >= 0.0, f64::sqrt)
    }

    pub fn cone_class(self) -> ConeClass {
        if self.re == 0.0 && self.im == 0.0 {
            return ConeClass::BoundaryCPlus;
        }
        if self.is_lightlike() {
            if self.re >= 0.0 {
                ConeClass::BoundaryCPlus
            } else {
                ConeClass::Outside
            }
        } else if self.re > 0.0 && self.square_norm() > 0.0 {
            ConeClass::InteriorCPlus
        } else {
            ConeClass::Outside
        }
    }

    /// Largest absolute coordinate, used for tolerance scaling.
    pub fn abs_max(self) -> f64 {
        self.re.abs().max(self.im.abs())
    }

    pub fn dist(self, other: Self) -> f64 {
        (self - other).abs_max()
    }

    pub fn is_finite(self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }
}

impl fmt::Display for SplitComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im < 0.0 {
            write!(f, "{} - {}τ", self.re, -self.im)
        } else {
            write!(f, "{} + {}τ", self.re, self.im)
        }
    }
}

impl From<f64> for SplitComplex {
    fn from(re: f64) -> Self {
        Self::real(re)
    }
}

impl Add for SplitComplex {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl AddAssign for SplitComplex {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl Sub for SplitComplex {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl SubAssign for SplitComplex {
    fn sub_assign(&mut self, rhs: Self) {
        *self = *self - rhs;
    }
}

impl Neg for SplitComplex {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.re, -self.im)
    }
}

impl Mul for SplitComplex {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::new(
            self.re * rhs.re + self.im * rhs.im,
            self.re * rhs.im + self.im * rhs.re,
        )
    }
}

impl MulAssign for SplitComplex {
    fn mul_assign(&mut self, rhs: Self) {
        *self = *self * rhs;
    }
}

impl Mul<f64> for SplitComplex {
    type Output = Self;
    fn mul(self, rhs: f64) -> Self {
        Self::new(self.re * rhs, self.im * rhs)
    }
}

impl Mul<SplitComplex> for f64 {
    type Output = SplitComplex;
    fn mul(self, rhs: SplitComplex) -> SplitComplex {
        rhs * self
    }
}

impl Div<f64> for SplitComplex {
    type Output = Self;
    fn div(self, rhs: f64) -> Self {
        Self::new(self.re / rhs, self.im / rhs)
    }
}
