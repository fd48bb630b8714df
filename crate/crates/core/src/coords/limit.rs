use std::f64::consts::PI;

use crate::boundary::BoundaryPoint;
use crate::coords::structure::SurfaceStructure;
use crate::error::{Error, Result};
use crate::isometry::{Isometry, IsometryClass};

const ANGLE_TOL: f64 = 1e-9;

/// Attracting fixed points of all loxodromic reduced words of length at
/// most `max_len` in the generators of an undegenerate structure, in
/// breadth-first order.
pub fn limit_set_sample(s: &SurfaceStructure, max_len: usize) -> Result<Vec<BoundaryPoint>> {
    if let Some(c) = s.degenerate().first() {
        return Err(Error::DegenerateCurve(*c));
    }
    let gens: Vec<Isometry> = s.generators().into_values().collect();
    let letters: Vec<Isometry> = gens.iter().flat_map(|g| [*g, g.inverse()]).collect();
    let mut out = Vec::new();
    let mut level: Vec<(usize, Isometry)> = vec![];
    for len in 1..=max_len {
        let next: Vec<(usize, Isometry)> = if len == 1 {
            letters.iter().copied().enumerate().collect()
        } else {
            level
                .iter()
                .flat_map(|(last, w)| {
                    letters
                        .iter()
                        .enumerate()
                        .filter(move |(i, _)| *i != (*last ^ 1))
                        .map(move |(i, l)| (i, *w * *l))
                })
                .collect()
        };
        for (_, w) in &next {
            if w.classify() == IsometryClass::Loxodromic {
                out.push(w.fixed_points()?.attracting);
            }
        }
        level = next;
    }
    Ok(out)
}

fn wrap(a: f64) -> f64 {
    if PI - a <= ANGLE_TOL {
        0.0
    } else {
        a
    }
}

fn circle_distance(a: f64, b: f64) -> f64 {
    let d = (a - b).abs();
    d.min(PI - d)
}

/// Whether `{(p⁺, p⁻)}` is the graph of an orientation-preserving
/// injective map between subsets of the two boundary circles. Angles are
/// compared on `R/πZ` up to a small tolerance.
pub fn preserves_cyclic_order(points: &[BoundaryPoint]) -> bool {
    let mut v: Vec<(f64, f64)> = points.iter().map(|p| (wrap(p.plus.angle()), wrap(p.minus.angle()))).collect();
    v.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)));
    let mut dedup: Vec<(f64, f64)> = Vec::new();
    for p in v {
        let same = dedup.last().filter(|q| circle_distance(p.0, q.0) <= ANGLE_TOL).copied();
        match same {
            Some(q) if circle_distance(p.1, q.1) > ANGLE_TOL => return false,
            Some(_) => {}
            None => dedup.push(p),
        }
    }
    if dedup.len() > 1 {
        let (first, last) = (dedup[0], dedup[dedup.len() - 1]);
        if circle_distance(first.0, last.0) <= ANGLE_TOL {
            if circle_distance(first.1, last.1) > ANGLE_TOL {
                return false;
            }
            dedup.pop();
        }
    }
    let n = dedup.len();
    if n < 3 {
        return true;
    }
    let mut minus: Vec<f64> = dedup.iter().map(|p| p.1).collect();
    let descents = (0..n).filter(|i| minus[(i + 1) % n] < minus[*i]).count();
    minus.sort_by(f64::total_cmp);
    if minus.windows(2).any(|w| w[1] - w[0] <= ANGLE_TOL) || minus[0] + PI - minus[n - 1] <= ANGLE_TOL {
        return false;
    }
    descents <= 1
}
