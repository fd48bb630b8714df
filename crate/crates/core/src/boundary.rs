//! The boundary at infinity `PB¹ ≅ RP¹ × RP¹`.
//!
//! Points are stored in factor coordinates: one real projective point for
//! each idempotent factor. Equality, the isometry action, and the cross ratio
//! are all computed factor by factor.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::split::SplitComplex;

/// Angular tolerance on `R/πZ` for projective equality.
pub const PROJ_TOL: f64 = 1e-9;

/// A point `[x : y]` of the real projective line. The stored pair is
/// rescaled by a power of two, which keeps it near unit size without
/// rounding the ratio.
#[derive(Debug, Clone, Copy)]
pub struct ProjPoint {
    x: f64,
    y: f64,
}

impl ProjPoint {
    pub const INFINITY: ProjPoint = ProjPoint { x: 1.0, y: 0.0 };
    pub const ZERO: ProjPoint = ProjPoint { x: 0.0, y: 1.0 };

    /// Builds `[x : y]`; `None` when both coordinates vanish or are not finite.
    pub fn new(x: f64, y: f64) -> Option<Self> {
        let m = x.abs().max(y.abs());
        if !(m > 0.0) || !m.is_finite() {
            return None;
        }
        let e = -(m.log2().floor() as i32);
        let (a, b) = (2f64.powi(e / 2), 2f64.powi(e - e / 2));
        Some(Self { x: x * a * b, y: y * a * b })
    }

    /// The affine point `[t : 1]`.
    pub fn affine(t: f64) -> Self {
        Self::new(t, 1.0).expect("finite affine coordinate")
    }

    pub fn coords(self) -> (f64, f64) {
        (self.x, self.y)
    }

    /// Representative with `y > 0`, or `y = 0` and `x > 0`.
    pub fn canonical(self) -> (f64, f64) {
        if self.y < 0.0 || (self.y == 0.0 && self.x < 0.0) {
            (-self.x, -self.y)
        } else {
            (self.x, self.y)
        }
    }

    /// Angle in `[0, π)`.
    pub fn angle(self) -> f64 {
        let (x, y) = self.canonical();
        let a = y.atan2(x);
        if a >= std::f64::consts::PI {
            0.0
        } else {
            a
        }
    }

    /// Affine coordinate `x / y`, infinite at `[1 : 0]`.
    pub fn affine_coord(self) -> f64 {
        if self.y == 0.0 {
            f64::INFINITY
        } else {
            self.x / self.y
        }
    }

    /// `|sin|` of the angle between the two lines, a metric on `R/πZ`
    /// comparable to the angular distance for nearby points.
    pub fn distance(self, other: Self) -> f64 {
        (self.x * other.y - self.y * other.x).abs() / (self.x.hypot(self.y) * other.x.hypot(other.y))
    }

    pub fn approx_eq(self, other: Self) -> bool {
        self.distance(other) <= PROJ_TOL
    }

    /// Applies a real 2×2 matrix `[[a, b], [c, d]]`.
    pub fn transform(self, m: &[[f64; 2]; 2]) -> Self {
        let x = m[0][0] * self.x + m[0][1] * self.y;
        let y = m[1][0] * self.x + m[1][1] * self.y;
        Self::new(x, y).expect("invertible matrix")
    }

    /// Determinant of the 2×2 matrix with columns `self`, `other`.
    pub fn det(self, other: Self) -> f64 {
        self.x * other.y - other.x * self.y
    }
}

/// Classical real cross ratio with the normalization
/// `cr(∞, −1, 0, z) = z`.
pub fn real_cross_ratio(p1: ProjPoint, p2: ProjPoint, p3: ProjPoint, p4: ProjPoint) -> Result<f64> {
    let (x1, y1) = p1.coords();
    let (x2, y2) = p2.coords();
    let (x3, y3) = p3.coords();
    let (x4, y4) = p4.coords();
    let num = (x2 * y1 - x1 * y2) * (x4 * y3 - x3 * y4);
    let den = (x1 * y4 - x4 * y1) * (x2 * y3 - x3 * y2);
    if den.abs() <= f64::MIN_POSITIVE || !(num / den).is_finite() {
        return Err(Error::InfiniteCrossRatio);
    }
    Ok(num / den)
}

/// A point of `PB¹`: one projective point per idempotent factor.
#[derive(Debug, Clone, Copy)]
pub struct BoundaryPoint {
    pub plus: ProjPoint,
    pub minus: ProjPoint,
}

impl BoundaryPoint {
    pub fn new(plus: ProjPoint, minus: ProjPoint) -> Self {
        Self { plus, minus }
    }

    /// `[z, 1]` for `z ∈ B`.
    pub fn from_b(z: SplitComplex) -> Self {
        let (p, q) = z.split();
        Self::new(ProjPoint::affine(p), ProjPoint::affine(q))
    }

    /// `[1, 0]`
    pub fn infinity() -> Self {
        Self::new(ProjPoint::INFINITY, ProjPoint::INFINITY)
    }

    /// The class of a homogeneous pair `[x, y]` with `x, y ∈ B`.
    pub fn from_homogeneous(x: SplitComplex, y: SplitComplex) -> Result<Self> {
        let (xp, xq) = x.split();
        let (yp, yq) = y.split();
        let plus = ProjPoint::new(xp, yp).ok_or(Error::NotSpacelike)?;
        let minus = ProjPoint::new(xq, yq).ok_or(Error::NotSpacelike)?;
        Ok(Self::new(plus, minus))
    }

    /// Back to `B` when both factors are finite.
    pub fn to_b(self) -> Option<SplitComplex> {
        let p = self.plus.affine_coord();
        let q = self.minus.affine_coord();
        (p.is_finite() && q.is_finite()).then(|| SplitComplex::join(p, q))
    }

    pub fn approx_eq(&self, other: &Self) -> bool {
        self.plus.approx_eq(other.plus) && self.minus.approx_eq(other.minus)
    }

    /// Largest factorwise projective distance.
    pub fn distance(&self, other: &Self) -> f64 {
        self.plus.distance(other.plus).max(self.minus.distance(other.minus))
    }
}

impl PartialEq for BoundaryPoint {
    fn eq(&self, other: &Self) -> bool {
        self.approx_eq(other)
    }
}

impl fmt::Display for BoundaryPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.plus.canonical();
        let (c, d) = self.minus.canonical();
        write!(f, "([{a}:{b}], [{c}:{d}])")
    }
}

#[derive(Serialize, Deserialize)]
struct BoundaryPointRepr {
    plus: [f64; 2],
    minus: [f64; 2],
}

impl Serialize for BoundaryPoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let (a, b) = self.plus.canonical();
        let (c, d) = self.minus.canonical();
        BoundaryPointRepr { plus: [a, b], minus: [c, d] }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for BoundaryPoint {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = BoundaryPointRepr::deserialize(d)?;
        let plus = ProjPoint::new(r.plus[0], r.plus[1])
            .ok_or_else(|| serde::de::Error::custom("plus factor is [0:0]"))?;
        let minus = ProjPoint::new(r.minus[0], r.minus[1])
            .ok_or_else(|| serde::de::Error::custom("minus factor is [0:0]"))?;
        Ok(Self::new(plus, minus))
    }
}

/// Two points are in space-like position when they differ in both factors.
pub fn spacelike_position(p: &BoundaryPoint, q: &BoundaryPoint) -> bool {
    !p.plus.approx_eq(q.plus) && !p.minus.approx_eq(q.minus)
}

/// Cross ratio in `PB¹`, computed factorwise and joined through the
/// idempotent splitting.
pub fn cross_ratio(
    p1: &BoundaryPoint,
    p2: &BoundaryPoint,
    p3: &BoundaryPoint,
    p4: &BoundaryPoint,
) -> Result<SplitComplex> {
    let pts = [p1, p2, p3, p4];
    for i in 0..4 {
        for j in i + 1..4 {
            if !spacelike_position(pts[i], pts[j]) {
                return Err(Error::NotSpacelike);
            }
        }
    }
    let plus = real_cross_ratio(p1.plus, p2.plus, p3.plus, p4.plus)?;
    let minus = real_cross_ratio(p1.minus, p2.minus, p3.minus, p4.minus)?;
    Ok(SplitComplex::join(plus, minus))
}

/// Time orientation of a sawtooth.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Orientation {
    FutureDirected,
    PastDirected,
}

impl Orientation {
    pub fn sign(self) -> i8 {
        match self {
            Orientation::FutureDirected => 1,
            Orientation::PastDirected => -1,
        }
    }

    pub fn from_sign(s: i8) -> Option<Self> {
        match s.signum() {
            1 => Some(Orientation::FutureDirected),
            -1 => Some(Orientation::PastDirected),
            _ => None,
        }
    }
}

/// Two consecutive light-like segments `left → vertex → right`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Sawtooth {
    pub left: BoundaryPoint,
    pub vertex: BoundaryPoint,
    pub right: BoundaryPoint,
    pub orientation: Orientation,
}

impl Sawtooth {
    /// The sawtooth joining two points in space-like position.
    ///
    /// The two candidate vertices mix the factor coordinates of the
    /// endpoints. The time coordinate `Im = (p − q)/2` is read in the
    /// affine chart of each factor, with `[1 : 0]` placed above every finite
    /// value; the future vertex is the one with larger `p` and smaller `q`.
    pub fn between(left: BoundaryPoint, right: BoundaryPoint, orientation: Orientation) -> Result<Self> {
        if !spacelike_position(&left, &right) {
            return Err(Error::NotSpacelike);
        }
        let key = |p: ProjPoint| p.affine_coord();
        let left_plus_higher = key(left.plus) > key(right.plus);
        let left_minus_higher = key(left.minus) > key(right.minus);
        let (hi_p, lo_p) = if left_plus_higher {
            (left.plus, right.plus)
        } else {
            (right.plus, left.plus)
        };
        let (hi_q, lo_q) = if left_minus_higher {
            (left.minus, right.minus)
        } else {
            (right.minus, left.minus)
        };
        let vertex = match orientation {
            Orientation::FutureDirected => BoundaryPoint::new(hi_p, lo_q),
            Orientation::PastDirected => BoundaryPoint::new(lo_p, hi_q),
        };
        Ok(Self { left, vertex, right, orientation })
    }

    pub fn is_well_formed(&self) -> bool {
        !spacelike_position(&self.left, &self.vertex)
            && !spacelike_position(&self.vertex, &self.right)
            && spacelike_position(&self.left, &self.right)
    }
}
