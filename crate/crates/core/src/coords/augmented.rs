use std::collections::{BTreeMap, BTreeSet};
use std::f64::consts::TAU as TWO_PI;

use serde::{Deserialize, Serialize};

use crate::coords::decomposition::PantsDecomposition;
use crate::coords::point::PeripheralCoords;
use crate::coords::structure::{Assembly, SurfaceStructure};
use crate::error::{Error, Result};
use crate::split::{ConeClass, SplitComplex};

/// `θ = 2π·tw·ℓ⁻¹`.
pub fn theta_renorm(length: SplitComplex, twist: SplitComplex) -> Result<SplitComplex> {
    Ok(twist * length.invert()? * TWO_PI)
}

/// Inverse of [`theta_renorm`].
pub fn twist_from_theta(length: SplitComplex, theta: SplitComplex) -> SplitComplex {
    theta * length * (1.0 / TWO_PI)
}

/// `H(ℓ, θ, c) = (Im ℓ, |ℓ| sech c cos θ, |ℓ| sech c sin θ, |ℓ| tanh c)`.
pub fn h_map(length: SplitComplex, angle: f64, c: f64) -> [f64; 4] {
    let m = length.square_norm().max(0.0).sqrt();
    let sech = 1.0 / c.cosh();
    [length.im, m * sech * angle.cos(), m * sech * angle.sin(), m * c.tanh()]
}

/// Inverse of [`h_map`] away from the axis `y = z = 0`: returns `ℓ`, the
/// angle in `[0, 2π)` and `c`.
pub fn h_inverse(p: [f64; 4]) -> Result<(SplitComplex, f64, f64)> {
    let [x, y, z, w] = p;
    let rho = y.hypot(z);
    let ratio = w / rho;
    if rho == 0.0 || !ratio.is_finite() {
        return Err(Error::AxisDegenerate);
    }
    let re = (x * x + y * y + z * z + w * w).sqrt();
    Ok((SplitComplex::new(re, x), z.atan2(y).rem_euclid(TWO_PI), ratio.asinh()))
}

/// Shifts `tw` by a multiple `k` of `ℓ` so that `Re tw ∈ [0, Re ℓ)`.
pub fn reduce_twist(length: SplitComplex, twist: SplitComplex) -> (SplitComplex, i64) {
    let k = (twist.re / length.re).floor();
    let mut out = twist - length * k;
    let mut k = k as i64;
    if out.re >= length.re {
        out -= length;
        k += 1;
    }
    (out, k)
}

/// Length of a pinched curve from its stratum coordinates `(a, 0, 0, d)`.
pub fn degenerate_length(a: f64, d: f64) -> SplitComplex {
    SplitComplex::new(d.hypot(a), a)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct UndegenerateEntry {
    pub curve: usize,
    pub length: SplitComplex,
    pub twist: SplitComplex,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DegenerateEntry {
    pub curve: usize,
    pub coords: [f64; 4],
}

/// Coordinates on the augmented space relative to a multicurve `D`: FN
/// pairs off `D`, four real numbers on each curve of `D`, and the
/// peripheral data. Entries are sorted by curve index.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StratumPoint {
    pub undegenerate: Vec<UndegenerateEntry>,
    pub degenerate: Vec<DegenerateEntry>,
    #[serde(default)]
    pub peripherals: Vec<PeripheralCoords>,
}

impl StratumPoint {
    pub fn entry(&self, curve: usize) -> Option<&DegenerateEntry> {
        self.degenerate.iter().find(|e| e.curve == curve)
    }

    pub fn max_distance(&self, other: &StratumPoint) -> f64 {
        let mut m = 0.0f64;
        for (a, b) in self.undegenerate.iter().zip(&other.undegenerate) {
            m = m.max(a.length.dist(b.length)).max(a.twist.dist(b.twist));
        }
        for (a, b) in self.degenerate.iter().zip(&other.degenerate) {
            for i in 0..4 {
                m = m.max((a.coords[i] - b.coords[i]).abs());
            }
        }
        for (a, b) in self.peripherals.iter().zip(&other.peripherals) {
            m = m.max(a.length.dist(b.length)).max((a.delta - b.delta).abs());
        }
        m
    }
}

/// Stratum coordinates of `s` relative to the multicurve `multicurve`,
/// which must contain every pinched curve of `s`.
pub fn stratum_coords(d: &PantsDecomposition, multicurve: &[usize], s: &SurfaceStructure) -> Result<StratumPoint> {
    let dset = d.check_multicurve(multicurve)?;
    if s.decomposition() != d {
        return Err(Error::ShapeMismatch("structure was built on a different decomposition".into()));
    }
    if let Some(c) = s.degenerate().iter().find(|c| !dset.contains(c)) {
        return Err(Error::NotContained(format!("pinched curve {c} is missing from the multicurve")));
    }
    let mut undegenerate = Vec::new();
    let mut degenerate = Vec::new();
    for curve in 0..d.curves().len() {
        let length = s.curve_length(curve)?;
        if !dset.contains(&curve) {
            undegenerate.push(UndegenerateEntry { curve, length, twist: s.twist(curve)? });
        } else if s.is_degenerate(curve) {
            let tag = s.degenerate_tags().get(&curve).copied().unwrap_or(0);
            let delta = f64::from(tag) * length.square_norm().max(0.0).sqrt();
            degenerate.push(DegenerateEntry { curve, coords: [length.im, 0.0, 0.0, delta] });
        } else {
            let theta = theta_renorm(length, s.twist(curve)?)?;
            let coords = h_map(length, theta.re.rem_euclid(TWO_PI), theta.im);
            degenerate.push(DegenerateEntry { curve, coords });
        }
    }
    Ok(StratumPoint { undegenerate, degenerate, peripherals: s.peripheral_coords()? })
}

/// Rebuilds the structure with stratum coordinates `p`. Curves of the
/// multicurve with `b = c = 0` are pinched; the others are glued.
pub fn stratum_coords_inverse(
    d: &PantsDecomposition,
    multicurve: &[usize],
    p: &StratumPoint,
) -> Result<SurfaceStructure> {
    let dset = d.check_multicurve(multicurve)?;
    let bad = |m: String| Error::InvalidStratumPoint(m);
    let und: BTreeSet<usize> = p.undegenerate.iter().map(|e| e.curve).collect();
    let deg: BTreeSet<usize> = p.degenerate.iter().map(|e| e.curve).collect();
    if deg != dset || und.len() != p.undegenerate.len() || deg.len() != p.degenerate.len() {
        return Err(bad("degenerate entries must list the multicurve exactly once".into()));
    }
    let all: BTreeSet<usize> = (0..d.curves().len()).collect();
    if und.union(&deg).copied().collect::<BTreeSet<_>>() != all || !und.is_disjoint(&deg) {
        return Err(bad("entries must cover every curve exactly once".into()));
    }
    if p.peripherals.len() != d.peripherals().len() {
        return Err(Error::ShapeMismatch("wrong number of peripheral entries".into()));
    }
    let n = d.curves().len();
    let mut lengths = vec![SplitComplex::ZERO; n];
    let mut twists = vec![SplitComplex::ZERO; n];
    let mut pinched = BTreeSet::new();
    let mut tags = BTreeMap::new();
    for e in &p.undegenerate {
        if e.length.cone_class() != ConeClass::InteriorCPlus {
            return Err(Error::ConeViolation(e.length.re, e.length.im));
        }
        if !e.twist.is_finite() {
            return Err(bad(format!("twist of curve {} is not finite", e.curve)));
        }
        lengths[e.curve] = e.length;
        twists[e.curve] = e.twist;
    }
    for e in &p.degenerate {
        let [a, b, c, dd] = e.coords;
        if e.coords.iter().any(|v| !v.is_finite()) {
            return Err(bad(format!("coordinates of curve {} are not finite", e.curve)));
        }
        if b == 0.0 && c == 0.0 {
            lengths[e.curve] = degenerate_length(a, dd);
            pinched.insert(e.curve);
            tags.insert(e.curve, if dd > 0.0 { 1 } else if dd < 0.0 { -1 } else { 0 });
        } else {
            let (length, angle, cc) = h_inverse(e.coords)?;
            lengths[e.curve] = length;
            twists[e.curve] = twist_from_theta(length, SplitComplex::new(angle, cc));
        }
    }
    Assembly {
        decomposition: d,
        degenerate: pinched,
        lengths,
        twists,
        peripherals: p.peripherals.clone(),
        degenerate_tags: tags,
    }
    .build()
}
