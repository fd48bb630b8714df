//! The upper half-space model of anti-de Sitter space.
//!
//! Points live in `V = span{1, τ, j}` inside the four dimensional algebra
//! [`AlgebraA`] with basis `{1, τ, j, τj}`, modulo the involution `j ↦ −j`.
//! We keep the representative with `x3 > 0`. The metric is
//! `(dx1² − dx2² + dx3²) / x3²` and isometries act by
//! `x ↦ (ax + b)(cx + d)⁻¹`.

use std::f64::consts::PI;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::isometry::Isometry;
use crate::split::SplitComplex;

/// Default number of samples along a geodesic.
pub const DEFAULT_SAMPLES: usize = 256;

/// Parameter range used for each hyperbola branch.
const HYPERBOLA_SPAN: f64 = 4.0;

/// Element `x1 + x2 τ + x3 j + x4 τj`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct AlgebraA {
    pub x1: f64,
    pub x2: f64,
    pub x3: f64,
    pub x4: f64,
}

impl AlgebraA {
    pub const ONE: AlgebraA = AlgebraA { x1: 1.0, x2: 0.0, x3: 0.0, x4: 0.0 };
    pub const TAU: AlgebraA = AlgebraA { x1: 0.0, x2: 1.0, x3: 0.0, x4: 0.0 };
    pub const J: AlgebraA = AlgebraA { x1: 0.0, x2: 0.0, x3: 1.0, x4: 0.0 };
    pub const TAU_J: AlgebraA = AlgebraA { x1: 0.0, x2: 0.0, x3: 0.0, x4: 1.0 };

    pub const fn new(x1: f64, x2: f64, x3: f64, x4: f64) -> Self {
        Self { x1, x2, x3, x4 }
    }

    pub fn from_b(z: SplitComplex) -> Self {
        Self::new(z.re, z.im, 0.0, 0.0)
    }

    /// Conjugation: fixes `1` and negates `τ`, `j` and `τj`. It reverses the
    /// order of products, and `z · conj(z)` is the real number [`AlgebraA::norm`].
    pub fn conj(self) -> Self {
        Self::new(self.x1, -self.x2, -self.x3, -self.x4)
    }

    /// `x1² − x2² + x3² − x4²`
    pub fn norm(self) -> f64 {
        self.x1 * self.x1 - self.x2 * self.x2 + self.x3 * self.x3 - self.x4 * self.x4
    }

    pub fn scale(self, k: f64) -> Self {
        Self::new(self.x1 * k, self.x2 * k, self.x3 * k, self.x4 * k)
    }

    pub fn euclidean_sq(self) -> f64 {
        self.x1 * self.x1 + self.x2 * self.x2 + self.x3 * self.x3 + self.x4 * self.x4
    }

    pub fn invert(self) -> Result<Self> {
        let n = self.norm();
        if n.abs() <= 1e-14 * (1.0 + self.euclidean_sq()) {
            return Err(Error::BoundaryHit);
        }
        Ok(self.conj().scale(1.0 / n))
    }

    pub fn dist(self, other: Self) -> f64 {
        let d = self - other;
        d.x1.abs().max(d.x2.abs()).max(d.x3.abs()).max(d.x4.abs())
    }
}

impl Add for AlgebraA {
    type Output = Self;
    fn add(self, r: Self) -> Self {
        Self::new(self.x1 + r.x1, self.x2 + r.x2, self.x3 + r.x3, self.x4 + r.x4)
    }
}

impl Sub for AlgebraA {
    type Output = Self;
    fn sub(self, r: Self) -> Self {
        Self::new(self.x1 - r.x1, self.x2 - r.x2, self.x3 - r.x3, self.x4 - r.x4)
    }
}

impl Neg for AlgebraA {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(-1.0)
    }
}

impl Mul for AlgebraA {
    type Output = Self;
    fn mul(self, r: Self) -> Self {
        let (a1, b1, c1, d1) = (self.x1, self.x2, self.x3, self.x4);
        let (a2, b2, c2, d2) = (r.x1, r.x2, r.x3, r.x4);
        Self::new(
            a1 * a2 + b1 * b2 - c1 * c2 + d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 + c1 * a2 + b1 * d2 - d1 * b2,
            a1 * d2 + d1 * a2 + b1 * c2 - c1 * b2,
        )
    }
}

/// A point `x1 + x2 τ + x3 j` of the model, with `x3 > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModelPoint {
    pub x1: f64,
    pub x2: f64,
    pub x3: f64,
}

impl ModelPoint {
    pub fn new(x1: f64, x2: f64, x3: f64) -> Result<Self> {
        if !(x3 > 0.0) || !x1.is_finite() || !x2.is_finite() || !x3.is_finite() {
            return Err(Error::InvalidGeodesic("model points need finite coordinates with x3 > 0"));
        }
        Ok(Self { x1, x2, x3 })
    }

    /// `z + h j` for `z ∈ B`.
    pub fn above(z: SplitComplex, h: f64) -> Result<Self> {
        Self::new(z.re, z.im, h)
    }

    pub fn as_algebra(self) -> AlgebraA {
        AlgebraA::new(self.x1, self.x2, self.x3, 0.0)
    }

    /// The `B` part `x1 + x2 τ`.
    pub fn base(self) -> SplitComplex {
        SplitComplex::new(self.x1, self.x2)
    }

    pub fn coords(self) -> [f64; 3] {
        [self.x1, self.x2, self.x3]
    }

    pub fn dist(self, other: Self) -> f64 {
        (self.x1 - other.x1).abs().max((self.x2 - other.x2).abs()).max((self.x3 - other.x3).abs())
    }
}

/// `ds²(u, u)` at `x`.
pub fn metric(x: &ModelPoint, u: [f64; 3]) -> f64 {
    (u[0] * u[0] - u[1] * u[1] + u[2] * u[2]) / (x.x3 * x.x3)
}

fn denominator(a: &Isometry, x: AlgebraA) -> Result<(AlgebraA, AlgebraA)> {
    let [ea, eb, ec, ed] = a.b_entries();
    let num = AlgebraA::from_b(ea) * x + AlgebraA::from_b(eb);
    let den = AlgebraA::from_b(ec) * x + AlgebraA::from_b(ed);
    Ok((num, den.invert()?))
}

fn left_denominator(a: &Isometry, x: AlgebraA) -> Result<AlgebraA> {
    let [_, _, ec, ed] = a.b_entries();
    (x * AlgebraA::from_b(ec) + AlgebraA::from_b(ed)).invert()
}

/// Applies an isometry to a model point.
pub fn mobius_act(a: &Isometry, x: &ModelPoint) -> Result<ModelPoint> {
    let (num, den_inv) = denominator(a, x.as_algebra())?;
    let f = num * den_inv;
    ModelPoint::new(f.x1, f.x2, f.x3.abs()).map_err(|_| Error::BoundaryHit)
}

/// Differential `(xc + d)⁻¹ u (cx + d)⁻¹` of the Möbius map at `x`.
///
/// The left factor has `x` and `c` swapped; the two agree whenever `c`
/// commutes with `x`, for instance when `c = 0` or `x ∈ B`.
pub fn differential(a: &Isometry, x: &ModelPoint, u: [f64; 3]) -> Result<[f64; 3]> {
    let (num, den_inv) = denominator(a, x.as_algebra())?;
    let left = left_denominator(a, x.as_algebra())?;
    let flip = (num * den_inv).x3 < 0.0;
    let v = left * AlgebraA::new(u[0], u[1], u[2], 0.0) * den_inv;
    Ok([v.x1, v.x2, if flip { -v.x3 } else { v.x3 }])
}

/// A geodesic of the model in closed form.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Geodesic {
    /// The conic `|γ − p|² = |Δ|²` in `p + span{Δ, j}`. Its endpoints on the
    /// boundary are `p ± Δ`.
    SpaceLike { p: SplitComplex, delta: SplitComplex },
    /// The closed curve `|γ − p|² = −|Δ|²` in `p + span{Δ, j}`.
    TimeLike { p: SplitComplex, delta: SplitComplex },
    /// `γ(t) = p + v/t` with `v` light-like.
    LightLike { p: SplitComplex, v: [f64; 3] },
}

/// The space-like geodesic with endpoints `p1` and `p2`.
pub fn geodesic_between(p1: SplitComplex, p2: SplitComplex) -> Result<Geodesic> {
    let delta = (p1 - p2) * 0.5;
    if delta.is_lightlike() {
        return Err(Error::LightLikeDisplacement);
    }
    Ok(Geodesic::SpaceLike { p: (p1 + p2) * 0.5, delta })
}

pub fn geodesic_timelike(p: SplitComplex, delta: SplitComplex) -> Result<Geodesic> {
    if delta.is_lightlike() || delta.square_norm() >= 0.0 {
        return Err(Error::InvalidGeodesic("time-like geodesics need |Δ|² < 0"));
    }
    Ok(Geodesic::TimeLike { p, delta })
}

pub fn geodesic_lightlike(p: SplitComplex, v: [f64; 3]) -> Result<Geodesic> {
    let n = v[0] * v[0] - v[1] * v[1] + v[2] * v[2];
    let scale = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
    if scale == 0.0 || n.abs() > 1e-12 * scale {
        return Err(Error::InvalidGeodesic("light-like geodesics need a nonzero null vector"));
    }
    if v[2] <= 0.0 {
        return Err(Error::InvalidGeodesic("light-like direction must point into x3 > 0"));
    }
    Ok(Geodesic::LightLike { p, v })
}

impl Geodesic {
    /// Parameter interval of [`Geodesic::point_at`].
    pub fn parameter_range(&self) -> (f64, f64) {
        match self {
            Geodesic::SpaceLike { delta, .. } if delta.square_norm() > 0.0 => (0.0, PI),
            Geodesic::SpaceLike { .. } => (0.0, 2.0 * HYPERBOLA_SPAN),
            Geodesic::TimeLike { .. } => (0.0, PI),
            Geodesic::LightLike { .. } => (1.0, f64::INFINITY),
        }
    }

    /// Evaluates the curve as a point of `V` (the `x3` coordinate may vanish
    /// at the ends of space-like geodesics).
    pub fn point_at(&self, t: f64) -> [f64; 3] {
        match *self {
            Geodesic::SpaceLike { p, delta } => {
                let n = delta.square_norm();
                if n > 0.0 {
                    let q = p + delta * t.cos();
                    [q.re, q.im, n.sqrt() * t.sin()]
                } else {
                    let (sign, s) = if t <= HYPERBOLA_SPAN { (1.0, t) } else { (-1.0, 2.0 * HYPERBOLA_SPAN - t) };
                    let q = p + delta * (sign * s.cosh());
                    [q.re, q.im, (-n).sqrt() * s.sinh()]
                }
            }
            Geodesic::TimeLike { p, delta } => {
                let n = -delta.square_norm();
                let q = p + delta * t.tan();
                [q.re, q.im, n.sqrt() * (1.0 / t.cos()).abs()]
            }
            Geodesic::LightLike { p, v } => [p.re + v[0] / t, p.im + v[1] / t, v[2] / t],
        }
    }

    /// The value of `|γ − p|²` every point must satisfy.
    pub fn conic_value(&self) -> f64 {
        match self {
            Geodesic::SpaceLike { delta, .. } => delta.square_norm(),
            Geodesic::TimeLike { delta, .. } => -delta.square_norm(),
            Geodesic::LightLike { .. } => 0.0,
        }
    }

    /// `|γ(t) − p|²` minus [`Geodesic::conic_value`].
    pub fn conic_residual(&self, x: [f64; 3]) -> f64 {
        let p = match self {
            Geodesic::SpaceLike { p, .. } | Geodesic::TimeLike { p, .. } | Geodesic::LightLike { p, .. } => *p,
        };
        let d = [x[0] - p.re, x[1] - p.im, x[2]];
        d[0] * d[0] - d[1] * d[1] + d[2] * d[2] - self.conic_value()
    }

    /// Boundary endpoint, where the curve has one.
    pub fn endpoints(&self) -> Vec<SplitComplex> {
        match *self {
            Geodesic::SpaceLike { p, delta } => vec![p + delta, p - delta],
            Geodesic::TimeLike { .. } => Vec::new(),
            Geodesic::LightLike { p, .. } => vec![p],
        }
    }

    /// `n` samples `(t, γ(t))` over the parameter range. Light-like geodesics
    /// are sampled for `t ∈ [1, n]`.
    pub fn sample(&self, n: usize) -> Vec<(f64, [f64; 3])> {
        let (a, b) = self.parameter_range();
        let b = if b.is_finite() { b } else { n.max(2) as f64 };
        self.sample_between(a, b, n)
    }

    pub fn sample_between(&self, a: f64, b: f64, n: usize) -> Vec<(f64, [f64; 3])> {
        match n {
            0 => Vec::new(),
            1 => vec![(a, self.point_at(a))],
            _ => (0..n)
                .map(|i| {
                    let t = a + (b - a) * i as f64 / (n - 1) as f64;
                    (t, self.point_at(t))
                })
                .collect(),
        }
    }

    /// Parameter of a point lying on a space-like geodesic.
    pub fn parameter_of(&self, x: &ModelPoint) -> Result<f64> {
        let Geodesic::SpaceLike { p, delta } = *self else {
            return Err(Error::InvalidGeodesic("parameter_of needs a space-like geodesic"));
        };
        let off = x.base() - p;
        let alpha = (off * delta.conj()).re / delta.square_norm();
        let n = delta.square_norm();
        if n > 0.0 {
            Ok((x.x3 / n.sqrt()).atan2(alpha).rem_euclid(2.0 * PI).min(PI))
        } else {
            let s = (x.x3 / (-n).sqrt()).asinh();
            Ok(if alpha > 0.0 { s } else { 2.0 * HYPERBOLA_SPAN - s })
        }
    }
}

/// Length of a sampled curve by midpoint quadrature.
pub fn curve_length(samples: &[ModelPoint]) -> Result<f64> {
    let mut total = 0.0;
    for (i, w) in samples.windows(2).enumerate() {
        let du = [w[1].x1 - w[0].x1, w[1].x2 - w[0].x2, w[1].x3 - w[0].x3];
        let mid = ModelPoint { x1: 0.0, x2: 0.0, x3: 0.5 * (w[0].x3 + w[1].x3) };
        let ds2 = metric(&mid, du);
        if !(ds2 > 0.0) {
            return Err(Error::NonSpacelikeSegment { index: i });
        }
        total += ds2.sqrt();
    }
    Ok(total)
}
