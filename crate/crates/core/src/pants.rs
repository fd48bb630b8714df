//! Admissible representations of the pants group `⟨r, s, t | t s r = e⟩`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::isometry::{adjugate, det, factor_axis, factor_fixed_pair, mat_mul, three_point_map, unimodular, Isometry, IsometryClass, Mat2};
use crate::split::{ConeClass, SplitComplex};

/// Tolerance on the relation `t s r = e`.
pub const RELATION_TOL: f64 = 1e-9;

/// One of the three boundary generators of a pair of pants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Gen {
    R,
    S,
    T,
}

impl Gen {
    pub const ALL: [Gen; 3] = [Gen::R, Gen::S, Gen::T];

    /// Boundary slot `0, 1, 2`.
    pub fn slot(self) -> usize {
        match self {
            Gen::R => 0,
            Gen::S => 1,
            Gen::T => 2,
        }
    }

    pub fn from_slot(slot: usize) -> Option<Gen> {
        Gen::ALL.get(slot).copied()
    }

    /// Cyclic successor `r → s → t → r`.
    pub fn next(self) -> Gen {
        Gen::ALL[(self.slot() + 1) % 3]
    }

    pub fn prev(self) -> Gen {
        Gen::ALL[(self.slot() + 2) % 3]
    }

    pub fn name(self) -> &'static str {
        match self {
            Gen::R => "r",
            Gen::S => "s",
            Gen::T => "t",
        }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Gen {
    type Err = Error;
    fn from_str(s: &str) -> Result<Gen> {
        match s {
            "r" => Ok(Gen::R),
            "s" => Ok(Gen::S),
            "t" => Ok(Gen::T),
            other => Err(Error::UnknownGenerator(other.to_string())),
        }
    }
}

/// Images of `r`, `s`, `t`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PantsRep {
    pub r: Isometry,
    pub s: Isometry,
    pub t: Isometry,
}

impl PantsRep {
    pub fn get(&self, g: Gen) -> &Isometry {
        match g {
            Gen::R => &self.r,
            Gen::S => &self.s,
            Gen::T => &self.t,
        }
    }

    pub fn conjugate_by(&self, c: &Isometry) -> PantsRep {
        PantsRep { r: self.r.conjugate_by(c), s: self.s.conjugate_by(c), t: self.t.conjugate_by(c) }
    }

    /// Distance of `t s r` from the identity.
    pub fn relation_residual(&self) -> f64 {
        (self.t * self.s * self.r).distance_to_identity()
    }

    pub fn is_admissible(&self) -> bool {
        Gen::ALL.iter().all(|g| self.get(*g).classify().is_admissible())
    }

    pub fn b_lengths(&self) -> Result<(SplitComplex, SplitComplex, SplitComplex)> {
        Ok((self.r.b_length()?, self.s.b_length()?, self.t.b_length()?))
    }
}

/// Projects a `B`-length onto the closed positive cone, snapping a light-like
/// value onto the boundary. Fails outside the cone.
pub fn cone_length(l: SplitComplex) -> Result<(f64, f64)> {
    if !l.is_finite() || l.cone_class() == ConeClass::Outside {
        return Err(Error::ConeViolation(l.re, l.im));
    }
    let (p, q) = l.split();
    if l.is_lightlike() {
        return Ok(if p >= q { (p.max(0.0), 0.0) } else { (0.0, q.max(0.0)) });
    }
    Ok((p, q))
}

/// The three matrices `(R, S, T)` of a hyperbolic pair of pants in one
/// factor, with boundary lengths `l1, l2, l3 ≥ 0` (zero means a cusp).
///
/// When `l1 > 0`, `R = −diag(e^{l1/2}, e^{−l1/2})` so its repelling and
/// attracting fixed points are `0` and `∞`. The repelling fixed point of `S`
/// is `−1`, and `T = (S R)⁻¹`. All traces are negative.
pub fn factor_pants(l1: f64, l2: f64, l3: f64) -> (Mat2, Mat2, Mat2) {
    let t2 = -2.0 * (l2 / 2.0).cosh();
    let t3 = -2.0 * (l3 / 2.0).cosh();
    let kappa = 0.5 * (t2 + (t2 * t2 - 4.0).max(0.0).sqrt());
    let (r, a, d) = if l1 > 0.0 {
        let rho = -(l1 / 2.0).exp();
        let a = (t3 - t2 / rho) / (rho - 1.0 / rho);
        ([[rho, 0.0], [0.0, 1.0 / rho]], a, t2 - a)
    } else {
        let u = -1.0;
        let c = -(t2 + t3) / u;
        let d = c + kappa;
        ([[-1.0, -u], [0.0, -1.0]], t2 - d, d)
    };
    let s = [[a, a - kappa], [d - kappa, d]];
    let t = adjugate(&mat_mul(&s, &r));
    (r, s, t)
}

/// The admissible pants representation with `B`-lengths `l1, l2, l3` for
/// `r, s, t`, built factor by factor.
pub fn realize_pants(l1: SplitComplex, l2: SplitComplex, l3: SplitComplex) -> Result<PantsRep> {
    let (p1, q1) = cone_length(l1)?;
    let (p2, q2) = cone_length(l2)?;
    let (p3, q3) = cone_length(l3)?;
    let (rp, sp, tp) = factor_pants(p1, p2, p3);
    let (rq, sq, tq) = factor_pants(q1, q2, q3);
    Ok(PantsRep { r: Isometry::new(rp, rq)?, s: Isometry::new(sp, sq)?, t: Isometry::new(tp, tq)? })
}

/// `b_length` of each generator.
pub fn b_lengths(rep: &PantsRep) -> Result<(SplitComplex, SplitComplex, SplitComplex)> {
    rep.b_lengths()
}

/// Per factor: the map sending the attracting and repelling fixed points of
/// `g` to `∞` and `0`, and the repelling fixed point of `n` to `−1`.
pub fn factor_normalizer(g: &Mat2, n: &Mat2) -> Result<Mat2> {
    let (att, rep) = factor_axis(g)?;
    let (_, rep_n) = factor_fixed_pair(n)?;
    let m = three_point_map(rep, att, rep_n).ok_or(Error::NotSpacelike)?;
    let flipped = [[-m[0][0], -m[0][1]], [m[1][0], m[1][1]]];
    if det(&flipped) <= 0.0 {
        return Err(Error::OrientationReversed);
    }
    unimodular(&flipped)
}

/// The conjugator putting the axis of `gen` at `(0, ∞)` and the repelling
/// fixed point of the next generator at `−1`. A parabolic factor of the next
/// generator uses its unique fixed point.
pub fn normalizer(rep: &PantsRep, gen: Gen) -> Result<Isometry> {
    let g = rep.get(gen);
    let n = rep.get(gen.next());
    if g.classify() != IsometryClass::Loxodromic {
        return Err(Error::NotLoxodromic);
    }
    Isometry::new(factor_normalizer(g.plus(), n.plus())?, factor_normalizer(g.minus(), n.minus())?)
}

/// Conjugates `rep` into normal position with respect to `gen` and returns
/// the normalized representation with the conjugator used.
pub fn normalize_rep(rep: &PantsRep, gen: Gen) -> Result<(PantsRep, Isometry)> {
    let c = normalizer(rep, gen)?;
    Ok((rep.conjugate_by(&c), c))
}
