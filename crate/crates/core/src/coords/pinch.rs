use serde::{Deserialize, Serialize};

use crate::boundary::BoundaryPoint;
use crate::coords::augmented::{stratum_coords, theta_renorm, twist_from_theta, StratumPoint};
use crate::coords::decomposition::PantsDecomposition;
use crate::coords::point::{FNPoint, Tolerances};
use crate::coords::structure::coords_to_structure_with;
use crate::error::{Error, Result};
use crate::split::{ConeClass, SplitComplex};

/// Parameters for pinching one curve: its length converges geometrically to
/// `target` while `Im θ` moves linearly at `rate` in `direction`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PinchCurve {
    pub curve: usize,
    pub target: SplitComplex,
    pub direction: i8,
    pub rate: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PinchSchedule {
    pub steps: usize,
    pub curves: Vec<PinchCurve>,
}

/// Explicit data of one step: the length and `Im θ` of every pinched curve,
/// in multicurve order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScheduleStep {
    pub lengths: Vec<SplitComplex>,
    pub theta_im: Vec<f64>,
}

/// One point of a pinching path.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PinchStep {
    pub step: usize,
    pub point: FNPoint,
    pub stratum: StratumPoint,
    /// Attracting fixed point of the neighbouring boundary generator across
    /// each pinched curve, in normalized position.
    pub neighbors: Vec<BoundaryPoint>,
}

impl PinchSchedule {
    pub fn multicurve(&self) -> Vec<usize> {
        self.curves.iter().map(|c| c.curve).collect()
    }

    /// Steps `0..=steps` with `ℓₙ = ℓ∞ + (ℓ₀ − ℓ∞)2⁻ⁿ` and
    /// `Im θₙ = Im θ₀ + n·direction·rate`.
    pub fn expand(&self, x0: &FNPoint) -> Result<Vec<ScheduleStep>> {
        let mut start = Vec::new();
        for c in &self.curves {
            let cc = x0
                .curves
                .get(c.curve)
                .ok_or_else(|| Error::NotContained(format!("curve {} is not in the decomposition", c.curve)))?;
            if !(-1..=1).contains(&c.direction) || !(c.rate >= 0.0) || !c.rate.is_finite() {
                return Err(Error::ScheduleInvalid(format!("bad direction or rate for curve {}", c.curve)));
            }
            if c.target.cone_class() != ConeClass::InteriorCPlus {
                return Err(Error::ConeViolation(c.target.re, c.target.im));
            }
            start.push((cc.length, theta_renorm(cc.length, cc.twist)?.im));
        }
        Ok((0..=self.steps)
            .map(|n| {
                let f = 0.5f64.powi(n as i32);
                let lengths = self.curves.iter().zip(&start).map(|(c, (l0, _))| c.target + (*l0 - c.target) * f).collect();
                let theta_im = self
                    .curves
                    .iter()
                    .zip(&start)
                    .map(|(c, (_, t0))| t0 + n as f64 * f64::from(c.direction) * c.rate)
                    .collect();
                ScheduleStep { lengths, theta_im }
            })
            .collect())
    }
}

fn check_monotone(steps: &[ScheduleStep], k: usize) -> Result<()> {
    let values: Vec<f64> = steps.iter().map(|s| s.theta_im[k]).collect();
    if values.iter().any(|v| !v.is_finite()) {
        return Err(Error::ScheduleInvalid("Im θ is not finite".into()));
    }
    let up = values.windows(2).all(|w| w[1] >= w[0]);
    let down = values.windows(2).all(|w| w[1] <= w[0]);
    if !(up || down) {
        return Err(Error::ScheduleInvalid(format!("Im θ of entry {k} is not monotone")));
    }
    Ok(())
}

/// Follows a pinching path from `x0`. At each step the angle `Re θ` of each
/// curve in `multicurve` is kept, while its length and `Im θ` follow the
/// schedule. Returns the FN point, the stratum coordinates relative to
/// `multicurve` and the neighbour points.
pub fn pinch_path(
    d: &PantsDecomposition,
    multicurve: &[usize],
    x0: &FNPoint,
    steps: &[ScheduleStep],
) -> Result<Vec<PinchStep>> {
    pinch_path_with(d, multicurve, x0, steps, &Tolerances::default())
}

pub fn pinch_path_with(
    d: &PantsDecomposition,
    multicurve: &[usize],
    x0: &FNPoint,
    steps: &[ScheduleStep],
    tol: &Tolerances,
) -> Result<Vec<PinchStep>> {
    d.check_multicurve(multicurve)?;
    x0.validate(d, tol)?;
    if steps.is_empty() {
        return Err(Error::ScheduleInvalid("schedule has no steps".into()));
    }
    if steps.iter().any(|s| s.lengths.len() != multicurve.len() || s.theta_im.len() != multicurve.len()) {
        return Err(Error::ScheduleInvalid("every step needs one entry per pinched curve".into()));
    }
    for k in 0..multicurve.len() {
        check_monotone(steps, k)?;
    }
    let angles: Vec<f64> = multicurve
        .iter()
        .map(|c| Ok(theta_renorm(x0.curves[*c].length, x0.curves[*c].twist)?.re))
        .collect::<Result<_>>()?;
    steps
        .iter()
        .enumerate()
        .map(|(n, st)| {
            let mut x = x0.clone();
            for (k, c) in multicurve.iter().enumerate() {
                let l = st.lengths[k];
                if l.cone_class() != ConeClass::InteriorCPlus || !l.is_finite() {
                    return Err(Error::ConeViolation(l.re, l.im));
                }
                x.curves[*c].length = l;
                x.curves[*c].twist = twist_from_theta(l, SplitComplex::new(angles[k], st.theta_im[k]));
            }
            let s = coords_to_structure_with(d, &x, tol)?;
            let stratum = stratum_coords(d, multicurve, &s)?;
            let neighbors = multicurve
                .iter()
                .map(|c| s.component_of(*c)?.neighbor_point(*c))
                .collect::<Result<_>>()?;
            Ok(PinchStep { step: n, point: x, stratum, neighbors })
        })
        .collect()
}
