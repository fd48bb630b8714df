//! `PSL(2, B) ≅ PSL(2, R) × PSL(2, R)`.
//!
//! An [`Isometry`] is a pair of real unimodular matrices, one per idempotent
//! factor, each defined up to sign.

use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::boundary::{BoundaryPoint, ProjPoint};
use crate::error::{Error, Result};
use crate::split::SplitComplex;

/// Real 2×2 matrix `[[a, b], [c, d]]`.
pub type Mat2 = [[f64; 2]; 2];

/// A factor is parabolic when `||tr| − 2|` is at most this.
pub const TRACE_TOL: f64 = 1e-8;

pub const IDENTITY2: Mat2 = [[1.0, 0.0], [0.0, 1.0]];

pub fn mat_mul(x: &Mat2, y: &Mat2) -> Mat2 {
    [
        [
            x[0][0] * y[0][0] + x[0][1] * y[1][0],
            x[0][0] * y[0][1] + x[0][1] * y[1][1],
        ],
        [
            x[1][0] * y[0][0] + x[1][1] * y[1][0],
            x[1][0] * y[0][1] + x[1][1] * y[1][1],
        ],
    ]
}

pub fn det(m: &Mat2) -> f64 {
    m[0][0] * m[1][1] - m[0][1] * m[1][0]
}

pub fn trace(m: &Mat2) -> f64 {
    m[0][0] + m[1][1]
}

/// Adjugate, which is the inverse for unimodular matrices.
pub fn adjugate(m: &Mat2) -> Mat2 {
    [[m[1][1], -m[0][1]], [-m[1][0], m[0][0]]]
}

pub fn scale(m: &Mat2, k: f64) -> Mat2 {
    [[m[0][0] * k, m[0][1] * k], [m[1][0] * k, m[1][1] * k]]
}

/// Rescales to determinant one.
pub fn unimodular(m: &Mat2) -> Result<Mat2> {
    let d = det(m);
    if !(d > 0.0) || !d.is_finite() {
        return Err(Error::NonPositiveDeterminant { det: d });
    }
    Ok(scale(m, 1.0 / d.sqrt()))
}

/// Largest entrywise distance between `x` and `±y`.
pub fn projective_distance(x: &Mat2, y: &Mat2) -> f64 {
    let mut plus = 0.0f64;
    let mut minus = 0.0f64;
    for i in 0..2 {
        for j in 0..2 {
            plus = plus.max((x[i][j] - y[i][j]).abs());
            minus = minus.max((x[i][j] + y[i][j]).abs());
        }
    }
    plus.min(minus)
}

/// Type of a single `PSL(2, R)` factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FactorKind {
    Hyperbolic,
    Parabolic,
    Elliptic,
    Identity,
}

pub fn factor_kind(m: &Mat2) -> FactorKind {
    let t = trace(m).abs();
    if (t - 2.0).abs() <= TRACE_TOL {
        let off = m[0][1].abs().max(m[1][0].abs()).max((m[0][0] - m[1][1]).abs());
        if off <= 1e-12 * (1.0 + m[0][0].abs()) {
            FactorKind::Identity
        } else {
            FactorKind::Parabolic
        }
    } else if t > 2.0 {
        FactorKind::Hyperbolic
    } else {
        FactorKind::Elliptic
    }
}

/// Translation length `2 arccosh(|tr|/2)` of a factor; parabolic factors give 0.
pub fn factor_length(m: &Mat2) -> Result<f64> {
    match factor_kind(m) {
        FactorKind::Hyperbolic => Ok(2.0 * (trace(m).abs() / 2.0).acosh()),
        FactorKind::Parabolic => Ok(0.0),
        _ => Err(Error::NotAdmissible),
    }
}

fn positive_lift(m: &Mat2) -> Mat2 {
    if trace(m) < 0.0 {
        scale(m, -1.0)
    } else {
        *m
    }
}

fn eigenvector(m: &Mat2, lambda: f64) -> ProjPoint {
    let u = (m[0][1], lambda - m[0][0]);
    let v = (lambda - m[1][1], m[1][0]);
    let (x, y) = if u.0.hypot(u.1) >= v.0.hypot(v.1) { u } else { v };
    ProjPoint::new(x, y).unwrap_or(ProjPoint::INFINITY)
}

/// Attracting and repelling fixed points of a hyperbolic factor.
pub fn factor_axis(m: &Mat2) -> Result<(ProjPoint, ProjPoint)> {
    if factor_kind(m) != FactorKind::Hyperbolic {
        return Err(Error::NotLoxodromic);
    }
    let m = positive_lift(m);
    let t = trace(&m);
    let big = 0.5 * (t + (t * t - 4.0).sqrt());
    Ok((eigenvector(&m, big), eigenvector(&m, 1.0 / big)))
}

fn parabolic_fixed(m: &Mat2) -> ProjPoint {
    eigenvector(&positive_lift(m), 1.0)
}

/// `(attracting, repelling)` of a hyperbolic or parabolic factor; a
/// parabolic factor returns its fixed point twice.
pub fn factor_fixed_pair(m: &Mat2) -> Result<(ProjPoint, ProjPoint)> {
    match factor_kind(m) {
        FactorKind::Hyperbolic => factor_axis(m),
        FactorKind::Parabolic => {
            let f = parabolic_fixed(m);
            Ok((f, f))
        }
        _ => Err(Error::NotAdmissible),
    }
}

/// The real matrix (not normalized) sending `p0 ↦ 0`, `pinf ↦ ∞` and
/// `p1 ↦ 1`, or `None` when two of the points coincide.
pub fn three_point_map(p0: ProjPoint, pinf: ProjPoint, p1: ProjPoint) -> Option<Mat2> {
    let (a1, a2) = p0.coords();
    let (b1, b2) = pinf.coords();
    let (c1, c2) = p1.coords();
    let l0 = a2 * c1 - a1 * c2;
    let linf = b2 * c1 - b1 * c2;
    if l0.abs() <= 1e-14 || linf.abs() <= 1e-14 || p0.distance(pinf) <= 1e-14 {
        return None;
    }
    let k = linf / l0;
    Some([[k * a2, -k * a1], [b2, -b1]])
}

/// Orientation-preserving version of [`three_point_map`], normalized to
/// determinant one. Fails when the three points are in the wrong cyclic order.
pub fn oriented_three_point_map(p0: ProjPoint, pinf: ProjPoint, p1: ProjPoint) -> Result<Mat2> {
    let m = three_point_map(p0, pinf, p1).ok_or(Error::NotSpacelike)?;
    if det(&m) <= 0.0 {
        return Err(Error::OrientationReversed);
    }
    unimodular(&m)
}

/// The diagonal matrix `diag(e^{x/2}, e^{−x/2})`.
pub fn diag_exp(x: f64) -> Mat2 {
    [[(x / 2.0).exp(), 0.0], [0.0, (-x / 2.0).exp()]]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum IsometryClass {
    Loxodromic,
    SemiLoxodromicPlus,
    SemiLoxodromicMinus,
    Parabolic,
    Other,
}

impl IsometryClass {
    pub fn is_admissible(self) -> bool {
        self != IsometryClass::Other
    }
}

impl fmt::Display for IsometryClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            IsometryClass::Loxodromic => "Loxodromic",
            IsometryClass::SemiLoxodromicPlus => "SemiLoxodromicPlus",
            IsometryClass::SemiLoxodromicMinus => "SemiLoxodromicMinus",
            IsometryClass::Parabolic => "Parabolic",
            IsometryClass::Other => "Other",
        };
        f.write_str(s)
    }
}

/// Fixed points on `PB¹`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FixedPoints {
    pub attracting: BoundaryPoint,
    pub repelling: BoundaryPoint,
    pub auxiliary: Vec<BoundaryPoint>,
}

/// An element of `PSL(2, B)` in factor form.
#[derive(Debug, Clone, Copy)]
pub struct Isometry {
    plus: Mat2,
    minus: Mat2,
}

impl Isometry {
    /// Normalizes both factors to determinant one.
    pub fn new(plus: Mat2, minus: Mat2) -> Result<Self> {
        Ok(Self { plus: unimodular(&plus)?, minus: unimodular(&minus)? })
    }

    /// The same matrix in both factors, i.e. an element of `PSL(2, R)`.
    pub fn real(m: Mat2) -> Result<Self> {
        Self::new(m, m)
    }

    /// Builds from a matrix with entries in `B`.
    pub fn from_b_entries(a: SplitComplex, b: SplitComplex, c: SplitComplex, d: SplitComplex) -> Result<Self> {
        let (ap, aq) = a.split();
        let (bp, bq) = b.split();
        let (cp, cq) = c.split();
        let (dp, dq) = d.split();
        Self::new([[ap, bp], [cp, dp]], [[aq, bq], [cq, dq]])
    }

    pub fn identity() -> Self {
        Self { plus: IDENTITY2, minus: IDENTITY2 }
    }

    pub fn plus(&self) -> &Mat2 {
        &self.plus
    }

    pub fn minus(&self) -> &Mat2 {
        &self.minus
    }

    /// Matrix entries lifted to `B`, in the order `a, b, c, d`.
    pub fn b_entries(&self) -> [SplitComplex; 4] {
        let p = &self.plus;
        let q = &self.minus;
        [
            SplitComplex::join(p[0][0], q[0][0]),
            SplitComplex::join(p[0][1], q[0][1]),
            SplitComplex::join(p[1][0], q[1][0]),
            SplitComplex::join(p[1][1], q[1][1]),
        ]
    }

    pub fn inverse(&self) -> Self {
        Self { plus: adjugate(&self.plus), minus: adjugate(&self.minus) }
    }

    /// `c · self · c⁻¹`
    pub fn conjugate_by(&self, c: &Isometry) -> Self {
        *c * *self * c.inverse()
    }

    /// Trace lifted so that both factor traces are nonnegative.
    pub fn trace(&self) -> SplitComplex {
        SplitComplex::join(trace(&self.plus).abs(), trace(&self.minus).abs())
    }

    pub fn classify(&self) -> IsometryClass {
        use FactorKind::*;
        match (factor_kind(&self.plus), factor_kind(&self.minus)) {
            (Hyperbolic, Hyperbolic) => IsometryClass::Loxodromic,
            (Hyperbolic, Parabolic) => IsometryClass::SemiLoxodromicPlus,
            (Parabolic, Hyperbolic) => IsometryClass::SemiLoxodromicMinus,
            (Parabolic, Parabolic) => IsometryClass::Parabolic,
            _ => IsometryClass::Other,
        }
    }

    /// The `B`-length `2 arccosh(tr/2)`, computed factorwise.
    pub fn b_length(&self) -> Result<SplitComplex> {
        if !self.classify().is_admissible() {
            return Err(Error::NotAdmissible);
        }
        Ok(SplitComplex::join(factor_length(&self.plus)?, factor_length(&self.minus)?))
    }

    /// Translation distance along the axis and rotation angle around it.
    pub fn translation_rotation(&self) -> Result<(f64, f64)> {
        if self.classify() != IsometryClass::Loxodromic {
            return Err(Error::NotLoxodromic);
        }
        let l = self.b_length()?;
        Ok((l.re, l.im))
    }

    pub fn fixed_points(&self) -> Result<FixedPoints> {
        let class = self.classify();
        let (att, rep, aux) = match class {
            IsometryClass::Loxodromic => {
                let (ap, rp) = factor_axis(&self.plus)?;
                let (aq, rq) = factor_axis(&self.minus)?;
                (
                    BoundaryPoint::new(ap, aq),
                    BoundaryPoint::new(rp, rq),
                    vec![BoundaryPoint::new(ap, rq), BoundaryPoint::new(rp, aq)],
                )
            }
            IsometryClass::SemiLoxodromicPlus => {
                let (ap, rp) = factor_axis(&self.plus)?;
                let f = parabolic_fixed(&self.minus);
                (BoundaryPoint::new(ap, f), BoundaryPoint::new(rp, f), Vec::new())
            }
            IsometryClass::SemiLoxodromicMinus => {
                let f = parabolic_fixed(&self.plus);
                let (aq, rq) = factor_axis(&self.minus)?;
                (BoundaryPoint::new(f, aq), BoundaryPoint::new(f, rq), Vec::new())
            }
            IsometryClass::Parabolic => {
                let p = BoundaryPoint::new(parabolic_fixed(&self.plus), parabolic_fixed(&self.minus));
                (p, p, Vec::new())
            }
            IsometryClass::Other => return Err(Error::NotAdmissible),
        };
        Ok(FixedPoints { attracting: att, repelling: rep, auxiliary: aux })
    }

    pub fn act(&self, p: &BoundaryPoint) -> BoundaryPoint {
        BoundaryPoint::new(p.plus.transform(&self.plus), p.minus.transform(&self.minus))
    }

    /// Largest factorwise entry distance, up to sign in each factor.
    pub fn distance(&self, other: &Isometry) -> f64 {
        projective_distance(&self.plus, &other.plus).max(projective_distance(&self.minus, &other.minus))
    }

    pub fn distance_to_identity(&self) -> f64 {
        self.distance(&Isometry::identity())
    }

    pub fn approx_eq(&self, other: &Isometry, tol: f64) -> bool {
        self.distance(other) <= tol
    }

    /// Largest absolute entry.
    pub fn norm(&self) -> f64 {
        self.plus
            .iter()
            .chain(self.minus.iter())
            .flat_map(|r| r.iter())
            .fold(0.0f64, |m, v| m.max(v.abs()))
    }
}

/// The twist element `Z(tw)`, which commutes with every diagonal isometry and
/// sends `[1, 1]` to `[e^λ e⁺ + e^μ e⁻, 1]` where `tw = λ e⁺ + μ e⁻`.
pub fn centralizer_element(tw: SplitComplex) -> Isometry {
    let (lambda, mu) = tw.split();
    Isometry { plus: diag_exp(lambda), minus: diag_exp(mu) }
}

impl Mul for Isometry {
    type Output = Isometry;
    fn mul(self, rhs: Isometry) -> Isometry {
        Isometry { plus: mat_mul(&self.plus, &rhs.plus), minus: mat_mul(&self.minus, &rhs.minus) }
    }
}

impl PartialEq for Isometry {
    fn eq(&self, other: &Self) -> bool {
        self.approx_eq(other, 1e-12)
    }
}

impl fmt::Display for Isometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?})", self.plus, self.minus)
    }
}

#[derive(Serialize, Deserialize)]
struct IsometryRepr {
    plus: Mat2,
    minus: Mat2,
}

impl Serialize for Isometry {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        IsometryRepr { plus: self.plus, minus: self.minus }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Isometry {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = IsometryRepr::deserialize(d)?;
        Isometry::new(r.plus, r.minus).map_err(serde::de::Error::custom)
    }
}
