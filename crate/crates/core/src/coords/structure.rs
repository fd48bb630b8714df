use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::coords::decomposition::{PantsDecomposition, SlotUse};
use crate::coords::point::{CurveCoords, FNPoint, PeripheralCoords, Tolerances};
use crate::error::{Error, Result};
use crate::gluing::{GluedRep, GluingSpec};
use crate::isometry::Isometry;
use crate::pants::{realize_pants, PantsRep};
use crate::split::SplitComplex;

/// A GHMC AdS structure, possibly with some curves pinched, described by
/// one glued representation per component of the cut surface and the
/// orientation tags of its sawtooth boundaries.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SurfaceStructure {
    decomposition: PantsDecomposition,
    degenerate: Vec<usize>,
    components: Vec<GluedRep>,
    peripheral_tags: Vec<i8>,
    degenerate_tags: BTreeMap<usize, i8>,
}

/// Everything needed to assemble a structure.
pub(crate) struct Assembly<'a> {
    pub decomposition: &'a PantsDecomposition,
    pub degenerate: BTreeSet<usize>,
    pub lengths: Vec<SplitComplex>,
    pub twists: Vec<SplitComplex>,
    pub peripherals: Vec<PeripheralCoords>,
    pub degenerate_tags: BTreeMap<usize, i8>,
}

impl Assembly<'_> {
    pub fn build(self) -> Result<SurfaceStructure> {
        let d = self.decomposition;
        let slot_length = |p: usize, k: usize| match d.slot_use([p, k]) {
            SlotUse::Curve(c, _) => self.lengths[c],
            SlotUse::Peripheral(j) => self.peripherals[j].length,
        };
        let raw: Vec<PantsRep> = (0..d.pants())
            .map(|p| realize_pants(slot_length(p, 0), slot_length(p, 1), slot_length(p, 2)))
            .collect::<Result<_>>()?;
        let mut components = Vec::new();
        for comp in d.components(&self.degenerate) {
            let local: BTreeMap<usize, usize> = comp.iter().enumerate().map(|(i, p)| (*p, i)).collect();
            let specs = d
                .plan(&comp, &self.degenerate)
                .into_iter()
                .map(|step| {
                    let [a, b] = d.curves()[step.curve].ends;
                    GluingSpec {
                        curve: step.curve,
                        kind: step.kind,
                        first: (local[&a[0]], PantsDecomposition::gen_of(a)),
                        second: (local[&b[0]], PantsDecomposition::gen_of(b)),
                        twist: self.twists[step.curve],
                    }
                })
                .collect();
            let pieces = comp.iter().map(|p| raw[*p]).collect();
            components.push(GluedRep::build(comp, pieces, specs)?);
        }
        Ok(SurfaceStructure {
            decomposition: d.clone(),
            degenerate: self.degenerate.into_iter().collect(),
            components,
            peripheral_tags: self.peripherals.iter().map(PeripheralCoords::tag).collect(),
            degenerate_tags: self.degenerate_tags,
        })
    }
}

/// Builds the structure with Fenchel–Nielsen coordinates `x`.
pub fn coords_to_structure(d: &PantsDecomposition, x: &FNPoint) -> Result<SurfaceStructure> {
    coords_to_structure_with(d, x, &Tolerances::default())
}

pub fn coords_to_structure_with(d: &PantsDecomposition, x: &FNPoint, tol: &Tolerances) -> Result<SurfaceStructure> {
    x.validate(d, tol)?;
    Assembly {
        decomposition: d,
        degenerate: BTreeSet::new(),
        lengths: x.curves.iter().map(|c| c.length).collect(),
        twists: x.curves.iter().map(|c| c.twist).collect(),
        peripherals: x.peripherals.clone(),
        degenerate_tags: BTreeMap::new(),
    }
    .build()
}

/// Reads Fenchel–Nielsen coordinates back from an undegenerate structure.
pub fn structure_to_coords(d: &PantsDecomposition, s: &SurfaceStructure) -> Result<FNPoint> {
    if s.decomposition != *d {
        return Err(Error::ShapeMismatch("structure was built on a different decomposition".into()));
    }
    if let Some(c) = s.degenerate.first() {
        return Err(Error::DegenerateCurve(*c));
    }
    let curves = (0..d.curves().len())
        .map(|c| Ok(CurveCoords { length: s.curve_length(c)?, twist: s.twist(c)? }))
        .collect::<Result<_>>()?;
    Ok(FNPoint { curves, peripherals: s.peripheral_coords()? })
}

impl SurfaceStructure {
    pub fn decomposition(&self) -> &PantsDecomposition {
        &self.decomposition
    }

    /// The pinched curves, sorted.
    pub fn degenerate(&self) -> &[usize] {
        &self.degenerate
    }

    pub fn components(&self) -> &[GluedRep] {
        &self.components
    }

    pub fn peripheral_tags(&self) -> &[i8] {
        &self.peripheral_tags
    }

    pub fn degenerate_tags(&self) -> &BTreeMap<usize, i8> {
        &self.degenerate_tags
    }

    pub fn is_degenerate(&self, curve: usize) -> bool {
        self.degenerate.binary_search(&curve).is_ok()
    }

    /// Component index and position within it of a pants.
    pub fn locate(&self, pants: usize) -> (usize, usize) {
        self.components
            .iter()
            .enumerate()
            .find_map(|(ci, g)| g.labels().iter().position(|l| *l == pants).map(|li| (ci, li)))
            .expect("every pants lies in a component")
    }

    fn slot_generator(&self, slot: [usize; 2]) -> &Isometry {
        let (ci, li) = self.locate(slot[0]);
        self.components[ci].pieces()[li].get(PantsDecomposition::gen_of(slot))
    }

    /// The component containing a glued curve.
    pub fn component_of(&self, curve: usize) -> Result<&GluedRep> {
        if curve >= self.decomposition.curves().len() {
            return Err(Error::NotContained(format!("curve {curve} is not in the decomposition")));
        }
        if self.is_degenerate(curve) {
            return Err(Error::DegenerateCurve(curve));
        }
        let (ci, _) = self.locate(self.decomposition.curves()[curve].ends[0][0]);
        Ok(&self.components[ci])
    }

    /// `B`-length of a curve, glued or pinched.
    pub fn curve_length(&self, curve: usize) -> Result<SplitComplex> {
        if curve >= self.decomposition.curves().len() {
            return Err(Error::NotContained(format!("curve {curve} is not in the decomposition")));
        }
        self.slot_generator(self.decomposition.curves()[curve].ends[0]).b_length()
    }

    pub fn twist(&self, curve: usize) -> Result<SplitComplex> {
        self.component_of(curve)?.extract_twist(curve)
    }

    pub fn peripheral_coords(&self) -> Result<Vec<PeripheralCoords>> {
        self.decomposition
            .peripherals()
            .iter()
            .zip(&self.peripheral_tags)
            .map(|(slot, tag)| Ok(PeripheralCoords::from_tag(self.slot_generator(*slot).b_length()?, *tag)))
            .collect()
    }

    /// Largest relation residual over all components.
    pub fn relation_residual(&self) -> Result<f64> {
        self.components.iter().try_fold(0.0f64, |m, g| Ok(m.max(g.relation_residual()?)))
    }

    pub fn verify(&self, tol: &Tolerances) -> Result<()> {
        let r = self.relation_residual()?;
        if !(r <= tol.relation) {
            return Err(Error::RelationResidual(r));
        }
        Ok(())
    }

    /// The structure obtained by a `k`-fold Dehn twist along a glued curve.
    pub fn dehn_twist(&self, curve: usize, k: i64) -> Result<SurfaceStructure> {
        self.component_of(curve)?;
        let (ci, _) = self.locate(self.decomposition.curves()[curve].ends[0][0]);
        let mut out = self.clone();
        out.components[ci] = self.components[ci].dehn_twist(curve, k)?;
        Ok(out)
    }

    /// Global generators of all components, keyed by name.
    pub fn generators(&self) -> BTreeMap<String, Isometry> {
        self.components.iter().flat_map(|g| g.generators().clone()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample(d: &PantsDecomposition) -> FNPoint {
        let curves = (0..d.curves().len())
            .map(|i| {
                let f = i as f64;
                CurveCoords {
                    length: SplitComplex::new(1.5 + 0.4 * f, 0.3 - 0.2 * f),
                    twist: SplitComplex::new(0.2 * f - 0.3, 0.5 - 0.1 * f),
                }
            })
            .collect();
        let peripherals = (0..d.peripherals().len())
            .map(|j| PeripheralCoords::from_tag(SplitComplex::new(2.0 + j as f64, 0.5), if j % 2 == 0 { 1 } else { -1 }))
            .collect();
        FNPoint { curves, peripherals }
    }

    #[test]
    fn round_trip_on_all_fixtures() {
        for d in [
            PantsDecomposition::genus2_theta(),
            PantsDecomposition::genus2_dumbbell(),
            PantsDecomposition::genus3_k4(),
            PantsDecomposition::genus3_chain(),
            PantsDecomposition::one_holed_torus(),
            PantsDecomposition::four_holed_sphere(),
        ] {
            let x = sample(&d);
            let s = coords_to_structure(&d, &x).unwrap();
            s.verify(&Tolerances::default()).unwrap();
            let y = structure_to_coords(&d, &s).unwrap();
            for (a, b) in x.curves.iter().zip(&y.curves) {
                assert!(a.length.dist(b.length) < 1e-9, "{a:?} {b:?}");
                assert!(a.twist.dist(b.twist) < 1e-9, "{a:?} {b:?}");
            }
            for (a, b) in x.peripherals.iter().zip(&y.peripherals) {
                assert!(a.length.dist(b.length) < 1e-9);
                assert!((a.delta - b.delta).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn dehn_twist_shifts_twist() {
        let d = PantsDecomposition::genus2_theta();
        let x = sample(&d);
        let s = coords_to_structure(&d, &x).unwrap();
        let t = s.dehn_twist(1, 1).unwrap();
        let y = structure_to_coords(&d, &t).unwrap();
        let expected = x.curves[1].twist + x.curves[1].length;
        assert!(y.curves[1].twist.dist(expected) < 1e-9);
        assert!(y.curves[0].twist.dist(x.curves[0].twist) < 1e-9);
    }

    #[test]
    fn rejects_mismatched_decomposition() {
        let d = PantsDecomposition::genus2_theta();
        let s = coords_to_structure(&d, &sample(&d)).unwrap();
        assert!(structure_to_coords(&PantsDecomposition::genus2_dumbbell(), &s).is_err());
    }
}
