//! Helpers shared by the integration tests: seeded random inputs and an
//! independent per-factor Fenchel–Nielsen computation.

#![allow(dead_code)]

pub mod golden;

use adscoords::coords::{CurveCoords, FNPoint, PantsDecomposition, PeripheralCoords, SurfaceStructure};
use adscoords::gluing::{generator_name, letter_name, GluingKind};
use adscoords::{Isometry, SplitComplex};
use rand::Rng;

pub type M = [[f64; 2]; 2];

pub fn all_fixtures() -> Vec<(&'static str, PantsDecomposition)> {
    vec![
        ("genus2-theta", PantsDecomposition::genus2_theta()),
        ("genus2-dumbbell", PantsDecomposition::genus2_dumbbell()),
        ("genus3-k4", PantsDecomposition::genus3_k4()),
        ("genus3-chain", PantsDecomposition::genus3_chain()),
        ("one-holed-torus", PantsDecomposition::one_holed_torus()),
        ("four-holed-sphere", PantsDecomposition::four_holed_sphere()),
    ]
}

/// A length whose two idempotent coordinates are drawn from `[0.6, 4]`.
pub fn random_length<R: Rng>(rng: &mut R) -> SplitComplex {
    SplitComplex::join(rng.gen_range(0.6..4.0), rng.gen_range(0.6..4.0))
}

pub fn random_point<R: Rng>(d: &PantsDecomposition, rng: &mut R) -> FNPoint {
    let curves = (0..d.curves().len())
        .map(|_| CurveCoords {
            length: random_length(rng),
            twist: SplitComplex::join(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)),
        })
        .collect();
    let peripherals = (0..d.peripherals().len())
        .map(|_| PeripheralCoords::from_tag(random_length(rng), if rng.gen_bool(0.5) { 1 } else { -1 }))
        .collect();
    FNPoint { curves, peripherals }
}

pub fn random_sl2<R: Rng>(rng: &mut R) -> M {
    loop {
        let a: f64 = rng.gen_range(-2.0..2.0);
        let b: f64 = rng.gen_range(-2.0..2.0);
        let c: f64 = rng.gen_range(-2.0..2.0);
        let d: f64 = rng.gen_range(-2.0..2.0);
        let det = a * d - b * c;
        if det > 0.2 {
            let s = det.sqrt();
            return [[a / s, b / s], [c / s, d / s]];
        }
    }
}

pub fn random_isometry<R: Rng>(rng: &mut R) -> Isometry {
    Isometry::new(random_sl2(rng), random_sl2(rng)).unwrap()
}

pub fn mul(x: &M, y: &M) -> M {
    [
        [x[0][0] * y[0][0] + x[0][1] * y[1][0], x[0][0] * y[0][1] + x[0][1] * y[1][1]],
        [x[1][0] * y[0][0] + x[1][1] * y[1][0], x[1][0] * y[0][1] + x[1][1] * y[1][1]],
    ]
}

pub fn inv(m: &M) -> M {
    [[m[1][1], -m[0][1]], [-m[1][0], m[0][0]]]
}

/// Classical translation length of a hyperbolic element of `SL(2, R)`.
pub fn translation_length(m: &M) -> f64 {
    let t = (m[0][0] + m[1][1]).abs();
    2.0 * ((t / 2.0) + ((t / 2.0).powi(2) - 1.0).max(0.0).sqrt()).ln()
}

/// Homogeneous fixed points `(attracting, repelling)` of a hyperbolic
/// Möbius map, from the fixed-point quadratic `c z² + (d − a) z − b = 0`.
pub fn mobius_fixed_points(m: &M) -> ([f64; 2], [f64; 2]) {
    let [[a, b], [c, d]] = *m;
    let disc = ((a - d).powi(2) + 4.0 * b * c).max(0.0).sqrt();
    // stable roots of c x² + (d − a) x y − b y² = 0, kept homogeneous
    let q = -0.5 * ((d - a) + (d - a).signum_or_one() * disc);
    let roots = [[q, c], [-b, q]];
    let multiplier = |v: [f64; 2]| {
        if v[1].abs() >= v[0].abs() {
            ((c * v[0] + d * v[1]) / v[1]).abs()
        } else {
            ((a * v[0] + b * v[1]) / v[0]).abs()
        }
    };
    if multiplier(roots[0]) >= multiplier(roots[1]) {
        (roots[0], roots[1])
    } else {
        (roots[1], roots[0])
    }
}

trait SignumOrOne {
    fn signum_or_one(self) -> f64;
}

impl SignumOrOne for f64 {
    fn signum_or_one(self) -> f64 {
        if self < 0.0 {
            -1.0
        } else {
            1.0
        }
    }
}

pub fn apply(m: &M, v: [f64; 2]) -> [f64; 2] {
    [m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]]
}

/// Classical cross ratio of four homogeneous points, normalized so that
/// `cr(∞, −1, 0, z) = z`.
pub fn classical_cross_ratio(p: [[f64; 2]; 4]) -> f64 {
    let br = |u: [f64; 2], v: [f64; 2]| u[0] * v[1] - u[1] * v[0];
    (br(p[1], p[0]) * br(p[3], p[2])) / (br(p[0], p[3]) * br(p[1], p[2]))
}

/// Per factor, classical `(length, twist)` of every glued curve computed from
/// the global generator matrices `mats`.
pub fn classical_coords(
    s: &SurfaceStructure,
    mats: &std::collections::BTreeMap<String, (M, M)>,
) -> Vec<(usize, [f64; 2], [f64; 2])> {
    let mut out = Vec::new();
    for comp in s.components() {
        for rec in comp.records() {
            let name = |side: (usize, adscoords::pants::Gen)| generator_name(comp.labels()[side.0], side.1);
            let g1 = name(rec.first);
            let mut lengths = [0.0; 2];
            let mut twists = [0.0; 2];
            for f in 0..2 {
                let pick = |n: &str| if f == 0 { mats[n].0 } else { mats[n].1 };
                let m1 = pick(&g1);
                lengths[f] = translation_length(&m1);
                let (att, rep) = mobius_fixed_points(&m1);
                let pts = match rec.kind {
                    GluingKind::Amalgamated => {
                        let next = name((rec.first.0, rec.first.1.next()));
                        let prev2 = name((rec.second.0, rec.second.1.prev()));
                        let (_, rep_next) = mobius_fixed_points(&pick(&next));
                        let (att_prev, _) = mobius_fixed_points(&pick(&prev2));
                        [att, rep_next, rep, att_prev]
                    }
                    GluingKind::Hnn => {
                        let l = pick(&letter_name(rec.curve));
                        [att, apply(&inv(&l), att), rep, apply(&l, rep)]
                    }
                };
                twists[f] = classical_cross_ratio(pts).ln();
            }
            out.push((rec.curve, lengths, twists));
        }
    }
    out.sort_by_key(|e| e.0);
    out
}

/// Global generators as plain matrix pairs, optionally conjugated.
pub fn generator_matrices(s: &SurfaceStructure, conj: Option<&Isometry>) -> std::collections::BTreeMap<String, (M, M)> {
    s.generators()
        .into_iter()
        .map(|(k, g)| {
            let g = match conj {
                Some(c) => g.conjugate_by(c),
                None => g,
            };
            (k, (*g.plus(), *g.minus()))
        })
        .collect()
}

/// Points with idempotent lengths in `[1, 3]` and twists in `[−1, 1]`,
/// where every fixture keeps its global generators well conditioned.
pub fn moderate_point<R: Rng>(d: &PantsDecomposition, rng: &mut R) -> FNPoint {
    let length = |rng: &mut R| SplitComplex::join(rng.gen_range(1.0..3.0), rng.gen_range(1.0..3.0));
    let curves = (0..d.curves().len())
        .map(|_| CurveCoords {
            length: length(rng),
            twist: SplitComplex::join(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
        })
        .collect();
    let peripherals = (0..d.peripherals().len())
        .map(|_| PeripheralCoords::from_tag(length(rng), if rng.gen_bool(0.5) { 1 } else { -1 }))
        .collect();
    FNPoint { curves, peripherals }
}
