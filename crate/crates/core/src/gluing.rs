//! Gluing pairs of pants along boundary curves with a `B`-valued twist-bend.
//!
//! Two constructions are supported. An amalgamated gluing identifies a
//! boundary generator of one pants with the inverse of a boundary generator
//! of another, unplaced, pants. An HNN gluing adds a stable letter conjugating
//! one boundary generator to the inverse of another one; the two boundary
//! curves may lie on the same pants or on pants that are already connected.
//!
//! Each pants keeps its raw representation from
//! [`realize_pants`](crate::pants::realize_pants) together with a frame: the
//! list of elementary isometries carrying its raw frame into the frame of the
//! root pants. Points are pushed through frames one factor at a time, which
//! keeps cross ratios accurate when twists are large.

use std::collections::BTreeMap;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::boundary::{real_cross_ratio, BoundaryPoint, ProjPoint};
use crate::error::{Error, Result};
use crate::isometry::{
    centralizer_element, det, diag_exp, factor_fixed_pair, mat_mul, oriented_three_point_map, three_point_map,
    unimodular, Isometry, IsometryClass, Mat2,
};
use crate::pants::{normalizer, Gen, PantsRep};
use crate::split::SplitComplex;

/// Tolerance for equality of the two `B`-lengths of a glued curve.
pub const LENGTH_TOL: f64 = 1e-8;

/// Residual allowed in relation words.
pub const RELATION_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GluingKind {
    Amalgamated,
    Hnn,
}

/// A boundary generator of one of the pants: `(piece index, generator)`.
pub type Side = (usize, Gen);

/// Input data of one gluing.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GluingSpec {
    pub curve: usize,
    pub kind: GluingKind,
    pub first: Side,
    pub second: Side,
    pub twist: SplitComplex,
}

/// The normalization data computed for one gluing.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GluingRecord {
    pub curve: usize,
    pub kind: GluingKind,
    pub first: Side,
    pub second: Side,
    /// Normalizer of the first side.
    pub normalizer: Isometry,
    /// The matrix `A` (amalgamated) or `B₀` (HNN), in the normalized frame of
    /// the first side.
    pub canonical: Isometry,
    /// The centralizer element `Z(tw)`.
    pub twist_element: Isometry,
    pub twist: SplitComplex,
    pub length: SplitComplex,
}

/// A letter of a relation word: generator name and exponent `±1`.
pub type Letter = (String, i8);

/// A representation of the fundamental group of a surface obtained by gluing
/// pairs of pants.
#[derive(Debug, Clone)]
pub struct GluedRep {
    labels: Vec<usize>,
    pieces: Vec<PantsRep>,
    frames: Vec<Vec<Isometry>>,
    specs: Vec<GluingSpec>,
    records: Vec<GluingRecord>,
    generators: BTreeMap<String, Isometry>,
    relations: Vec<Vec<Letter>>,
}

/// Name of a pants generator.
pub fn generator_name(label: usize, g: Gen) -> String {
    format!("P{label}.{g}")
}

/// Name of the stable letter of an HNN gluing.
pub fn letter_name(curve: usize) -> String {
    format!("L{curve}")
}

fn push_forward(frame: &[Isometry], p: BoundaryPoint) -> BoundaryPoint {
    frame.iter().rev().fold(p, |q, m| m.act(&q))
}

fn pull_back(frame: &[Isometry], p: BoundaryPoint) -> BoundaryPoint {
    frame.iter().fold(p, |q, m| m.inverse().act(&q))
}

fn product(frame: &[Isometry]) -> Isometry {
    frame.iter().fold(Isometry::identity(), |acc, m| acc * *m)
}

fn factor_points(g: &Isometry) -> Result<(BoundaryPoint, BoundaryPoint)> {
    let (ap, rp) = factor_fixed_pair(g.plus())?;
    let (aq, rq) = factor_fixed_pair(g.minus())?;
    Ok((BoundaryPoint::new(ap, aq), BoundaryPoint::new(rp, rq)))
}

fn log_cross_ratio(p: [BoundaryPoint; 4]) -> Result<SplitComplex> {
    let plus = real_cross_ratio(p[0].plus, p[1].plus, p[2].plus, p[3].plus)?;
    let minus = real_cross_ratio(p[0].minus, p[1].minus, p[2].minus, p[3].minus)?;
    if !(plus > 0.0 && minus > 0.0) {
        return Err(Error::NotSpacelike);
    }
    Ok(SplitComplex::join(plus.ln(), minus.ln()))
}

fn check_lengths(a: SplitComplex, b: SplitComplex) -> Result<()> {
    let tol = LENGTH_TOL * (1.0 + a.abs_max().max(b.abs_max()));
    if a.dist(b) > tol {
        return Err(Error::LengthMismatch((a.re, a.im), (b.re, b.im)));
    }
    Ok(())
}

/// Per factor: orientation-preserving map sending `att ↦ 0` and `rep ↦ ∞`.
fn factor_swap_axis(att: ProjPoint, rep: ProjPoint) -> Result<Mat2> {
    let probe = [ProjPoint::INFINITY, ProjPoint::ZERO, ProjPoint::affine(1.0), ProjPoint::affine(-1.0)]
        .into_iter()
        .max_by(|a, b| {
            let da = a.distance(att).min(a.distance(rep));
            let db = b.distance(att).min(b.distance(rep));
            da.total_cmp(&db)
        })
        .expect("nonempty");
    let m = three_point_map(att, rep, probe).ok_or(Error::NotSpacelike)?;
    let m = if det(&m) < 0.0 { [[-m[0][0], -m[0][1]], m[1]] } else { m };
    unimodular(&m)
}

/// Per factor: the diagonal correction making `cr(∞, B⁻¹∞, 0, B0) = 1`.
fn factor_hnn_canonical(b: &Mat2) -> Result<Mat2> {
    let inv = crate::isometry::adjugate(b);
    let u = ProjPoint::INFINITY.transform(&inv);
    let z = ProjPoint::ZERO.transform(b);
    let c = real_cross_ratio(ProjPoint::INFINITY, u, ProjPoint::ZERO, z)?;
    if !(c > 0.0) {
        return Err(Error::OrientationReversed);
    }
    Ok(mat_mul(&diag_exp(-c.ln()), b))
}

impl GluedRep {
    /// Glues `pieces` according to `specs`. Amalgamated gluings must form a
    /// spanning tree rooted at piece 0, listed so that each one attaches a
    /// new piece to an already placed one. HNN gluings may appear anywhere.
    pub fn build(labels: Vec<usize>, pieces: Vec<PantsRep>, specs: Vec<GluingSpec>) -> Result<Self> {
        if labels.len() != pieces.len() || pieces.is_empty() {
            return Err(Error::InvalidDecomposition("labels and pieces must be nonempty and aligned".into()));
        }
        let n = pieces.len();
        let mut frames: Vec<Option<Vec<Isometry>>> = vec![None; n];
        frames[0] = Some(Vec::new());
        let mut records: Vec<Option<GluingRecord>> = vec![None; specs.len()];

        for (i, spec) in specs.iter().enumerate() {
            if spec.first.0 >= n || spec.second.0 >= n {
                return Err(Error::InvalidDecomposition(format!("gluing of curve {} names a missing piece", spec.curve)));
            }
            if spec.kind != GluingKind::Amalgamated {
                continue;
            }
            let (p1, p2) = (spec.first.0, spec.second.0);
            let record = amalgamated_record(&pieces, spec)?;
            let forward = vec![record.normalizer.inverse(), record.twist_element, record.canonical];
            match (frames[p1].is_some(), frames[p2].is_some()) {
                (true, false) => {
                    let mut f = frames[p1].clone().unwrap();
                    f.extend(forward);
                    frames[p2] = Some(f);
                }
                (false, true) => {
                    let mut f = frames[p2].clone().unwrap();
                    f.extend(forward.iter().rev().map(|m| m.inverse()));
                    frames[p1] = Some(f);
                }
                _ => {
                    return Err(Error::InvalidDecomposition(format!(
                        "amalgamated gluing of curve {} does not extend the placed tree",
                        spec.curve
                    )))
                }
            }
            records[i] = Some(record);
        }
        let frames: Vec<Vec<Isometry>> = frames
            .into_iter()
            .map(|f| f.ok_or_else(|| Error::InvalidDecomposition("pieces are not connected by the gluing tree".into())))
            .collect::<Result<_>>()?;
        for (i, spec) in specs.iter().enumerate() {
            if spec.kind == GluingKind::Hnn {
                records[i] = Some(hnn_record(&pieces, &frames, spec)?);
            }
        }
        let records: Vec<GluingRecord> = records.into_iter().map(|r| r.expect("every spec recorded")).collect();

        let conj: Vec<Isometry> = frames.iter().map(|f| product(f)).collect();
        let mut generators = BTreeMap::new();
        let mut relations = Vec::new();
        for (i, rep) in pieces.iter().enumerate() {
            for g in Gen::ALL {
                generators.insert(generator_name(labels[i], g), rep.get(g).conjugate_by(&conj[i]));
            }
            relations.push(
                [Gen::T, Gen::S, Gen::R].iter().map(|g| (generator_name(labels[i], *g), 1)).collect(),
            );
        }
        for rec in &records {
            let a = generator_name(labels[rec.first.0], rec.first.1);
            let b = generator_name(labels[rec.second.0], rec.second.1);
            match rec.kind {
                GluingKind::Amalgamated => relations.push(vec![(a, 1), (b, 1)]),
                GluingKind::Hnn => {
                    let l = letter_name(rec.curve);
                    let c = conj[rec.first.0] * rec.normalizer.inverse();
                    let letter = (rec.twist_element * rec.canonical).conjugate_by(&c);
                    generators.insert(l.clone(), letter);
                    relations.push(vec![(l.clone(), 1), (b, 1), (l, -1), (a, 1)]);
                }
            }
        }
        Ok(Self { labels, pieces, frames, specs, records, generators, relations })
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn pieces(&self) -> &[PantsRep] {
        &self.pieces
    }

    pub fn specs(&self) -> &[GluingSpec] {
        &self.specs
    }

    pub fn records(&self) -> &[GluingRecord] {
        &self.records
    }

    pub fn generators(&self) -> &BTreeMap<String, Isometry> {
        &self.generators
    }

    pub fn relations(&self) -> &[Vec<Letter>] {
        &self.relations
    }

    /// The conjugator carrying piece `i` from its raw frame to the root frame.
    pub fn conjugator(&self, i: usize) -> Isometry {
        product(&self.frames[i])
    }

    /// Maps a point from the raw frame of piece `i` into the root frame.
    pub fn to_root(&self, i: usize, p: BoundaryPoint) -> BoundaryPoint {
        push_forward(&self.frames[i], p)
    }

    pub fn generator(&self, name: &str) -> Result<&Isometry> {
        self.generators.get(name).ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    pub fn evaluate(&self, word: &[Letter]) -> Result<Isometry> {
        let mut acc = Isometry::identity();
        for (name, e) in word {
            let g = self.generator(name)?;
            acc = acc * if *e < 0 { g.inverse() } else { *g };
        }
        Ok(acc)
    }

    /// Largest distance from the identity over all relation words, relative
    /// to the product of the norms of the letters.
    pub fn relation_residual(&self) -> Result<f64> {
        let mut worst = 0.0f64;
        for w in &self.relations {
            let mut scale = 1.0;
            for (name, _) in w {
                scale *= self.generator(name)?.norm().max(1.0);
            }
            worst = worst.max(self.evaluate(w)?.distance_to_identity() / scale);
        }
        Ok(worst)
    }

    pub fn record(&self, curve: usize) -> Result<&GluingRecord> {
        self.records.iter().find(|r| r.curve == curve).ok_or(Error::MissingRecord(curve))
    }

    /// Piece and generator of the first side of a glued curve.
    pub fn curve_generator(&self, curve: usize) -> Result<&Isometry> {
        let rec = self.record(curve)?;
        Ok(self.pieces[rec.first.0].get(rec.first.1))
    }

    /// The four points whose cross ratio is the twist, in the normalized
    /// frame of the first side.
    pub fn twist_configuration(&self, curve: usize) -> Result<[BoundaryPoint; 4]> {
        let rec = self.record(curve)?;
        let (p1, g1) = rec.first;
        let n = &rec.normalizer;
        let rep1 = &self.pieces[p1];
        let (att, rep) = factor_points(rep1.get(g1))?;
        let att = n.act(&att);
        let rep = n.act(&rep);
        match rec.kind {
            GluingKind::Amalgamated => {
                let (p2, g2) = rec.second;
                let (_, rep_next) = factor_points(rep1.get(g1.next()))?;
                let (att_prev, _) = factor_points(self.pieces[p2].get(g2.prev()))?;
                let moved = rec.twist_element.act(&rec.canonical.act(&att_prev));
                Ok([att, n.act(&rep_next), rep, moved])
            }
            GluingKind::Hnn => {
                let back = rec.canonical.inverse().act(&rec.twist_element.inverse().act(&att));
                let forward = rec.twist_element.act(&rec.canonical.act(&rep));
                Ok([att, back, rep, forward])
            }
        }
    }

    /// Reads the twist-bend parameter of a glued curve back from the
    /// geometry as the logarithm of a cross ratio.
    pub fn extract_twist(&self, curve: usize) -> Result<SplitComplex> {
        log_cross_ratio(self.twist_configuration(curve)?)
    }

    /// The attracting fixed point of the neighbouring boundary generator
    /// across `curve`, in the normalized frame of the first side. It equals
    /// `[e^λ e⁺ + e^μ e⁻, 1]` up to the canonical position.
    pub fn neighbor_point(&self, curve: usize) -> Result<BoundaryPoint> {
        Ok(self.twist_configuration(curve)?[3])
    }

    pub fn with_twist(&self, curve: usize, twist: SplitComplex) -> Result<GluedRep> {
        let mut specs = self.specs.clone();
        let spec = specs.iter_mut().find(|s| s.curve == curve).ok_or(Error::MissingRecord(curve))?;
        spec.twist = twist;
        GluedRep::build(self.labels.clone(), self.pieces.clone(), specs)
    }

    /// Re-glues `curve` with its twist shifted by `k` times its `B`-length.
    pub fn dehn_twist(&self, curve: usize, k: i64) -> Result<GluedRep> {
        let rec = self.record(curve)?;
        if k == 0 {
            return Ok(self.clone());
        }
        self.with_twist(curve, rec.twist + rec.length * k as f64)
    }
}

fn amalgamated_record(pieces: &[PantsRep], spec: &GluingSpec) -> Result<GluingRecord> {
    let (p1, g1) = spec.first;
    let (p2, g2) = spec.second;
    let a1 = pieces[p1].get(g1);
    let a2 = pieces[p2].get(g2);
    if a1.classify() != IsometryClass::Loxodromic || a2.classify() != IsometryClass::Loxodromic {
        return Err(Error::NotLoxodromic);
    }
    let length = a1.b_length()?;
    check_lengths(length, a2.b_length()?)?;
    let n = normalizer(&pieces[p1], g1)?;
    let (att2, rep2) = factor_points(a2)?;
    let (att_prev, _) = factor_points(pieces[p2].get(g2.prev()))?;
    let canonical = Isometry::new(
        oriented_three_point_map(att2.plus, rep2.plus, att_prev.plus)?,
        oriented_three_point_map(att2.minus, rep2.minus, att_prev.minus)?,
    )?;
    Ok(GluingRecord {
        curve: spec.curve,
        kind: GluingKind::Amalgamated,
        first: spec.first,
        second: spec.second,
        normalizer: n,
        canonical,
        twist_element: centralizer_element(spec.twist),
        twist: spec.twist,
        length,
    })
}

fn hnn_record(pieces: &[PantsRep], frames: &[Vec<Isometry>], spec: &GluingSpec) -> Result<GluingRecord> {
    let (pa, ga) = spec.first;
    let (pb, gb) = spec.second;
    if spec.first == spec.second {
        return Err(Error::InvalidDecomposition(format!("curve {} glues a slot to itself", spec.curve)));
    }
    let a = pieces[pa].get(ga);
    let b = pieces[pb].get(gb);
    if a.classify() != IsometryClass::Loxodromic || b.classify() != IsometryClass::Loxodromic {
        return Err(Error::NotLoxodromic);
    }
    let length = a.b_length()?;
    check_lengths(length, b.b_length()?)?;
    let n = normalizer(&pieces[pa], ga)?;
    let (att_b, rep_b) = factor_points(b)?;
    let carry = |p: BoundaryPoint| n.act(&pull_back(&frames[pa], push_forward(&frames[pb], p)));
    let (att_b, rep_b) = (carry(att_b), carry(rep_b));
    let swap = Isometry::new(
        factor_swap_axis(att_b.plus, rep_b.plus)?,
        factor_swap_axis(att_b.minus, rep_b.minus)?,
    )?;
    let canonical = Isometry::new(factor_hnn_canonical(swap.plus())?, factor_hnn_canonical(swap.minus())?)?;
    Ok(GluingRecord {
        curve: spec.curve,
        kind: GluingKind::Hnn,
        first: spec.first,
        second: spec.second,
        normalizer: n,
        canonical,
        twist_element: centralizer_element(spec.twist),
        twist: spec.twist,
        length,
    })
}

/// Glues two pants along `gen1` of `rep1` and `gen2` of `rep2`.
pub fn glue_distinct(rep1: &PantsRep, gen1: Gen, rep2: &PantsRep, gen2: Gen, tw: SplitComplex) -> Result<GluedRep> {
    GluedRep::build(
        vec![0, 1],
        vec![*rep1, *rep2],
        vec![GluingSpec { curve: 0, kind: GluingKind::Amalgamated, first: (0, gen1), second: (1, gen2), twist: tw }],
    )
}

/// Glues two boundary curves of a single pants, giving a one-holed torus.
pub fn glue_self(rep: &PantsRep, gen_a: Gen, gen_b: Gen, tw: SplitComplex) -> Result<GluedRep> {
    GluedRep::build(
        vec![0],
        vec![*rep],
        vec![GluingSpec { curve: 0, kind: GluingKind::Hnn, first: (0, gen_a), second: (0, gen_b), twist: tw }],
    )
}

pub fn extract_twist(glued: &GluedRep, curve: usize) -> Result<SplitComplex> {
    glued.extract_twist(curve)
}

pub fn dehn_twist_rep(glued: &GluedRep, curve: usize, k: i64) -> Result<GluedRep> {
    glued.dehn_twist(curve, k)
}

#[derive(Serialize, Deserialize)]
struct GluedRepRepr {
    labels: Vec<usize>,
    pieces: Vec<PantsRep>,
    gluings: Vec<GluingSpec>,
    #[serde(default, skip_deserializing)]
    generators: BTreeMap<String, Isometry>,
}

impl Serialize for GluedRep {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GluedRepRepr {
            labels: self.labels.clone(),
            pieces: self.pieces.clone(),
            gluings: self.specs.clone(),
            generators: self.generators.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GluedRep {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = GluedRepRepr::deserialize(d)?;
        GluedRep::build(r.labels, r.pieces, r.gluings).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pants::realize_pants;

    fn pants(a: SplitComplex, b: SplitComplex, c: SplitComplex) -> PantsRep {
        realize_pants(a, b, c).unwrap()
    }

    #[test]
    fn canonical_gluing_has_zero_twist() {
        let l = SplitComplex::new(1.1, 0.3);
        let p1 = pants(l, SplitComplex::new(0.9, 0.2), SplitComplex::new(1.4, -0.1));
        let p2 = pants(l, SplitComplex::new(0.7, 0.1), SplitComplex::new(1.0, 0.5));
        let g = glue_distinct(&p1, Gen::R, &p2, Gen::R, SplitComplex::ZERO).unwrap();
        let pts = g.twist_configuration(0).unwrap();
        let one = BoundaryPoint::from_b(SplitComplex::ONE);
        assert!(pts[3].distance(&one) < 1e-12);
        assert!(g.extract_twist(0).unwrap().abs_max() < 1e-12);
        assert!(g.relation_residual().unwrap() < 1e-10);
    }

    #[test]
    fn twist_moves_neighbor_point() {
        let l = SplitComplex::new(1.1, 0.3);
        let p1 = pants(l, SplitComplex::new(0.9, 0.2), SplitComplex::new(1.4, -0.1));
        let p2 = pants(SplitComplex::new(0.7, 0.1), l, SplitComplex::new(1.0, 0.5));
        let tw = SplitComplex::new(0.8, -0.35);
        let g = glue_distinct(&p1, Gen::R, &p2, Gen::S, tw).unwrap();
        let (lambda, mu) = tw.split();
        let expected = BoundaryPoint::from_b(SplitComplex::join(lambda.exp(), mu.exp()));
        assert!(g.neighbor_point(0).unwrap().distance(&expected) < 1e-12);
        assert!(g.extract_twist(0).unwrap().dist(tw) < 1e-10);
        assert!(g.relation_residual().unwrap() < 1e-9);
    }

    #[test]
    fn canonical_matrix_inverts_glued_generator() {
        let l = SplitComplex::new(1.3, -0.4);
        let p1 = pants(SplitComplex::new(0.9, 0.2), l, SplitComplex::new(1.4, -0.1));
        let p2 = pants(SplitComplex::new(0.7, 0.1), SplitComplex::new(1.0, 0.5), l);
        let g = glue_distinct(&p1, Gen::S, &p2, Gen::T, SplitComplex::ZERO).unwrap();
        let rec = g.record(0).unwrap();
        let g1n = p1.s.conjugate_by(&rec.normalizer);
        let g2a = p2.t.conjugate_by(&rec.canonical);
        assert!((g1n * g2a).distance_to_identity() < 1e-10);
        // any nontrivial centralizer element breaks the [1, 1] pinning
        let z = centralizer_element(SplitComplex::new(0.01, 0.0));
        let (att_prev, _) = factor_points(&p2.s).unwrap();
        let moved = (z * rec.canonical).act(&att_prev);
        assert!(moved.distance(&BoundaryPoint::from_b(SplitComplex::ONE)) > 1e-4);
    }

    #[test]
    fn self_gluing_round_trip() {
        let l = SplitComplex::new(1.2, 0.25);
        let rep = pants(l, l, SplitComplex::new(0.9, 0.1));
        let g0 = glue_self(&rep, Gen::R, Gen::S, SplitComplex::ZERO).unwrap();
        let pts = g0.twist_configuration(0).unwrap();
        let cr = crate::boundary::cross_ratio(&pts[0], &pts[1], &pts[2], &pts[3]).unwrap();
        assert!(cr.dist(SplitComplex::ONE) < 1e-10);
        for tw in [SplitComplex::new(0.5, 0.2), SplitComplex::new(-1.3, 0.9), SplitComplex::new(2.0, -1.5)] {
            let g = glue_self(&rep, Gen::R, Gen::S, tw).unwrap();
            assert!(g.extract_twist(0).unwrap().dist(tw) < 1e-10);
            assert!(g.relation_residual().unwrap() < 1e-9);
        }
    }

    #[test]
    fn dehn_twist_shifts_by_length() {
        let l = SplitComplex::new(1.2, 0.25);
        let rep = pants(l, l, SplitComplex::new(0.9, 0.1));
        let tw = SplitComplex::new(0.3, 0.1);
        let g = glue_self(&rep, Gen::R, Gen::S, tw).unwrap();
        let g1 = g.dehn_twist(0, 1).unwrap();
        assert!(g1.extract_twist(0).unwrap().dist(tw + l) < 1e-9);
        let back = g1.dehn_twist(0, -1).unwrap();
        assert!(back.extract_twist(0).unwrap().dist(tw) < 1e-10);
        let same = g.dehn_twist(0, 0).unwrap();
        assert_eq!(same.generators(), g.generators());
        // the stable letter changes by the glued generator
        let letter0 = g.generator("L0").unwrap();
        let letter1 = g1.generator("L0").unwrap();
        let a = g.generator("P0.r").unwrap();
        let d = (*letter1).distance(&(*a * *letter0)).min((*letter1).distance(&(a.inverse() * *letter0)));
        assert!(d < 1e-8, "{d}");
    }

    #[test]
    fn length_mismatch_is_rejected() {
        let p1 = pants(SplitComplex::real(1.0), SplitComplex::real(1.0), SplitComplex::real(1.0));
        let p2 = pants(SplitComplex::real(1.5), SplitComplex::real(1.0), SplitComplex::real(1.0));
        assert!(matches!(
            glue_distinct(&p1, Gen::R, &p2, Gen::R, SplitComplex::ZERO),
            Err(Error::LengthMismatch(..))
        ));
        let cusp = pants(SplitComplex::ZERO, SplitComplex::real(1.0), SplitComplex::real(1.0));
        assert_eq!(
            glue_distinct(&cusp, Gen::R, &p1, Gen::R, SplitComplex::ZERO).unwrap_err(),
            Error::NotLoxodromic
        );
    }

    #[test]
    fn missing_record() {
        let p = pants(SplitComplex::real(1.0), SplitComplex::real(1.0), SplitComplex::real(1.0));
        let g = glue_self(&p, Gen::R, Gen::S, SplitComplex::ZERO).unwrap();
        assert_eq!(g.extract_twist(7), Err(Error::MissingRecord(7)));
    }

    #[test]
    fn json_round_trip() {
        let l = SplitComplex::new(1.2, 0.25);
        let rep = pants(l, l, SplitComplex::new(0.9, 0.1));
        let g = glue_self(&rep, Gen::R, Gen::S, SplitComplex::new(0.4, -0.2)).unwrap();
        let s = serde_json::to_string(&g).unwrap();
        let back: GluedRep = serde_json::from_str(&s).unwrap();
        assert!(back.extract_twist(0).unwrap().dist(SplitComplex::new(0.4, -0.2)) < 1e-10);
    }
}
