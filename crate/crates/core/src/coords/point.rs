use serde::{Deserialize, Serialize};

use crate::coords::decomposition::PantsDecomposition;
use crate::error::{Error, Result};
use crate::split::{ConeClass, SplitComplex};

/// Numerical tolerances used when validating coordinates and structures.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    /// Relative tolerance for `δ² = |ℓ|²` on peripheral data.
    pub e_constraint: f64,
    /// Largest allowed relation residual of a built representation.
    pub relation: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self { e_constraint: 1e-10, relation: 1e-8 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CurveCoords {
    pub length: SplitComplex,
    pub twist: SplitComplex,
}

/// Length of a peripheral curve with its signed parameter `δ`, where
/// `δ² = |ℓ|²` and the sign picks the orientation of the boundary sawtooth.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PeripheralCoords {
    pub length: SplitComplex,
    pub delta: f64,
}

impl PeripheralCoords {
    /// `ε ∈ {−1, 0, 1}`; zero exactly when the length is light-like.
    pub fn tag(&self) -> i8 {
        if self.length.cone_class() != ConeClass::InteriorCPlus || self.delta == 0.0 {
            0
        } else if self.delta > 0.0 {
            1
        } else {
            -1
        }
    }

    pub fn from_tag(length: SplitComplex, tag: i8) -> Self {
        Self { length, delta: f64::from(tag) * length.square_norm().max(0.0).sqrt() }
    }
}

/// A point of the Fenchel–Nielsen coordinate space: one `(ℓ, tw)` pair per
/// interior curve and one `(ℓ, δ)` pair per peripheral curve, both in the
/// order of the decomposition.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FNPoint {
    pub curves: Vec<CurveCoords>,
    #[serde(default)]
    pub peripherals: Vec<PeripheralCoords>,
}

impl FNPoint {
    pub fn validate(&self, d: &PantsDecomposition, tol: &Tolerances) -> Result<()> {
        if self.curves.len() != d.curves().len() || self.peripherals.len() != d.peripherals().len() {
            return Err(Error::ShapeMismatch(format!(
                "expected {} curves and {} peripherals, got {} and {}",
                d.curves().len(),
                d.peripherals().len(),
                self.curves.len(),
                self.peripherals.len()
            )));
        }
        for c in &self.curves {
            if !c.twist.is_finite() {
                return Err(Error::ShapeMismatch("twist is not finite".into()));
            }
            if c.length.cone_class() != ConeClass::InteriorCPlus || !c.length.is_finite() {
                return Err(Error::ConeViolation(c.length.re, c.length.im));
            }
        }
        for (index, p) in self.peripherals.iter().enumerate() {
            if p.length.cone_class() == ConeClass::Outside || !p.length.is_finite() {
                return Err(Error::ConeViolation(p.length.re, p.length.im));
            }
            let norm = p.length.square_norm().max(0.0);
            let delta_sq = p.delta * p.delta;
            if !((delta_sq - norm).abs() <= tol.e_constraint * norm.max(1.0)) {
                return Err(Error::EConstraint { index, delta_sq, norm });
            }
        }
        Ok(())
    }

    pub fn peripheral_tags(&self) -> Vec<i8> {
        self.peripherals.iter().map(PeripheralCoords::tag).collect()
    }
}
