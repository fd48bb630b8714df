use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gluing::GluingKind;
use crate::pants::Gen;

/// A boundary slot `[pants, slot]` with `slot ∈ {0, 1, 2}` standing for the
/// generators `r, s, t`.
pub type Slot = [usize; 2];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Curve {
    pub ends: [Slot; 2],
}

/// What occupies a boundary slot.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SlotUse {
    /// End `0` or `1` of a curve.
    Curve(usize, usize),
    Peripheral(usize),
}

/// A pants decomposition, recorded as a gluing graph: pants are vertices
/// with three boundary slots, curves join two slots, and unpaired slots are
/// peripheral.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "DecompositionRepr", into = "DecompositionRepr")]
pub struct PantsDecomposition {
    pants: usize,
    curves: Vec<Curve>,
    peripherals: Vec<Slot>,
    slots: Vec<[SlotUseRepr; 3]>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct SlotUseRepr(u8, usize, usize);

#[derive(Serialize, Deserialize)]
struct DecompositionRepr {
    pants: usize,
    curves: Vec<Curve>,
    #[serde(default)]
    peripherals: Vec<Slot>,
}

impl TryFrom<DecompositionRepr> for PantsDecomposition {
    type Error = Error;
    fn try_from(r: DecompositionRepr) -> Result<Self> {
        PantsDecomposition::new(r.pants, r.curves, r.peripherals)
    }
}

impl From<PantsDecomposition> for DecompositionRepr {
    fn from(d: PantsDecomposition) -> Self {
        DecompositionRepr { pants: d.pants, curves: d.curves, peripherals: d.peripherals }
    }
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidDecomposition(msg.into())
}

/// One step of a gluing plan over a connected set of pants.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PlanStep {
    pub curve: usize,
    pub kind: GluingKind,
}

impl PantsDecomposition {
    /// Validates the slot bookkeeping, the Euler characteristic count and
    /// connectivity.
    pub fn new(pants: usize, curves: Vec<Curve>, peripherals: Vec<Slot>) -> Result<Self> {
        if pants == 0 {
            return Err(invalid("a decomposition needs at least one pair of pants"));
        }
        let mut slots: Vec<[Option<SlotUseRepr>; 3]> = vec![[None; 3]; pants];
        let mut claim = |s: Slot, u: SlotUseRepr| -> Result<()> {
            let [p, k] = s;
            if p >= pants || k >= 3 {
                return Err(invalid(format!("slot [{p}, {k}] does not exist")));
            }
            if slots[p][k].is_some() {
                return Err(invalid(format!("slot [{p}, {k}] is used twice")));
            }
            slots[p][k] = Some(u);
            Ok(())
        };
        for (i, c) in curves.iter().enumerate() {
            claim(c.ends[0], SlotUseRepr(0, i, 0))?;
            claim(c.ends[1], SlotUseRepr(0, i, 1))?;
        }
        for (j, s) in peripherals.iter().enumerate() {
            claim(*s, SlotUseRepr(1, j, 0))?;
        }
        let slots: Vec<[SlotUseRepr; 3]> = slots
            .into_iter()
            .enumerate()
            .map(|(p, row)| {
                let mut out = [SlotUseRepr(0, 0, 0); 3];
                for k in 0..3 {
                    out[k] = row[k].ok_or_else(|| invalid(format!("slot [{p}, {k}] is unused")))?;
                }
                Ok(out)
            })
            .collect::<Result<_>>()?;
        if 3 * pants != 2 * curves.len() + peripherals.len() {
            return Err(invalid("3·pants must equal 2·curves + peripherals"));
        }
        if pants + 2 < peripherals.len() || !(pants + 2 - peripherals.len()).is_multiple_of(2) {
            return Err(invalid("pants and peripheral counts do not give an integral genus"));
        }
        let d = Self { pants, curves, peripherals, slots };
        if d.components(&BTreeSet::new()).len() != 1 {
            return Err(invalid("the gluing graph is not connected"));
        }
        Ok(d)
    }

    pub fn pants(&self) -> usize {
        self.pants
    }

    pub fn curves(&self) -> &[Curve] {
        &self.curves
    }

    pub fn peripherals(&self) -> &[Slot] {
        &self.peripherals
    }

    pub fn genus(&self) -> usize {
        (self.pants + 2 - self.peripherals.len()) / 2
    }

    pub fn punctures(&self) -> usize {
        self.peripherals.len()
    }

    pub fn slot_use(&self, s: Slot) -> SlotUse {
        let SlotUseRepr(kind, i, e) = self.slots[s[0]][s[1]];
        if kind == 0 {
            SlotUse::Curve(i, e)
        } else {
            SlotUse::Peripheral(i)
        }
    }

    fn bfs(&self, start: usize, cut: &BTreeSet<usize>) -> Vec<(usize, usize)> {
        let mut dist = vec![usize::MAX; self.pants];
        dist[start] = 0;
        let mut order = Vec::new();
        let mut queue = VecDeque::from([start]);
        while let Some(p) = queue.pop_front() {
            order.push((p, dist[p]));
            for k in 0..3 {
                if let SlotUse::Curve(c, e) = self.slot_use([p, k]) {
                    let q = self.curves[c].ends[1 - e][0];
                    if !cut.contains(&c) && dist[q] == usize::MAX {
                        dist[q] = dist[p] + 1;
                        queue.push_back(q);
                    }
                }
            }
        }
        order
    }

    /// Connected components of the graph with the curves in `cut` removed.
    /// Each is listed in breadth-first order from its center: the pants of
    /// least eccentricity, smallest index first.
    pub fn components(&self, cut: &BTreeSet<usize>) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.pants];
        let mut out = Vec::new();
        for start in 0..self.pants {
            if seen[start] {
                continue;
            }
            let mut members: Vec<usize> = self.bfs(start, cut).into_iter().map(|(p, _)| p).collect();
            members.sort_unstable();
            let center = members
                .iter()
                .copied()
                .min_by_key(|p| (self.bfs(*p, cut).last().map_or(0, |x| x.1), *p))
                .expect("nonempty component");
            let comp: Vec<usize> = self.bfs(center, cut).into_iter().map(|(p, _)| p).collect();
            for p in &comp {
                seen[*p] = true;
            }
            out.push(comp);
        }
        out
    }

    /// Gluing order for a component as returned by [`Self::components`]: a
    /// breadth-first spanning tree of amalgamated gluings rooted at its first
    /// pants, followed by HNN gluings for the remaining curves.
    pub fn plan(&self, component: &[usize], cut: &BTreeSet<usize>) -> Vec<PlanStep> {
        let inside: BTreeSet<usize> = component.iter().copied().collect();
        let mut placed = BTreeSet::from([component[0]]);
        let mut tree = Vec::new();
        let mut tree_curves = BTreeSet::new();
        let mut queue = VecDeque::from([component[0]]);
        while let Some(p) = queue.pop_front() {
            for k in 0..3 {
                if let SlotUse::Curve(c, e) = self.slot_use([p, k]) {
                    let q = self.curves[c].ends[1 - e][0];
                    if cut.contains(&c) || !inside.contains(&q) || placed.contains(&q) {
                        continue;
                    }
                    placed.insert(q);
                    tree_curves.insert(c);
                    tree.push(PlanStep { curve: c, kind: GluingKind::Amalgamated });
                    queue.push_back(q);
                }
            }
        }
        let mut hnn: Vec<usize> = (0..self.curves.len())
            .filter(|c| !cut.contains(c) && !tree_curves.contains(c) && inside.contains(&self.curves[*c].ends[0][0]))
            .collect();
        hnn.sort_unstable();
        tree.extend(hnn.into_iter().map(|curve| PlanStep { curve, kind: GluingKind::Hnn }));
        tree
    }

    /// Validates a multicurve given as curve indices.
    pub fn check_multicurve(&self, d: &[usize]) -> Result<BTreeSet<usize>> {
        let mut set = BTreeSet::new();
        for &c in d {
            if c >= self.curves.len() {
                return Err(Error::NotContained(format!("curve {c} is not in the decomposition")));
            }
            if !set.insert(c) {
                return Err(Error::NotContained(format!("curve {c} is listed twice")));
            }
        }
        Ok(set)
    }

    pub fn gen_of(slot: Slot) -> Gen {
        Gen::from_slot(slot[1]).expect("validated slot")
    }

    /// Genus two: two pants glued along all three boundary curves.
    pub fn genus2_theta() -> Self {
        Self::new(
            2,
            vec![
                Curve { ends: [[0, 0], [1, 0]] },
                Curve { ends: [[0, 1], [1, 2]] },
                Curve { ends: [[0, 2], [1, 1]] },
            ],
            vec![],
        )
        .expect("valid fixture")
    }

    /// Genus two: two one-holed tori joined along a separating curve.
    pub fn genus2_dumbbell() -> Self {
        Self::new(
            2,
            vec![
                Curve { ends: [[0, 0], [0, 1]] },
                Curve { ends: [[1, 0], [1, 1]] },
                Curve { ends: [[0, 2], [1, 2]] },
            ],
            vec![],
        )
        .expect("valid fixture")
    }

    /// Genus three: four pants on the complete graph `K4`.
    pub fn genus3_k4() -> Self {
        Self::new(
            4,
            vec![
                Curve { ends: [[0, 0], [1, 0]] },
                Curve { ends: [[0, 1], [2, 0]] },
                Curve { ends: [[0, 2], [3, 0]] },
                Curve { ends: [[1, 1], [2, 2]] },
                Curve { ends: [[1, 2], [3, 1]] },
                Curve { ends: [[2, 1], [3, 2]] },
            ],
            vec![],
        )
        .expect("valid fixture")
    }

    /// Genus three: a chain of four pants with a self-gluing at each end.
    pub fn genus3_chain() -> Self {
        Self::new(
            4,
            vec![
                Curve { ends: [[0, 0], [0, 1]] },
                Curve { ends: [[0, 2], [1, 0]] },
                Curve { ends: [[1, 1], [2, 1]] },
                Curve { ends: [[1, 2], [2, 2]] },
                Curve { ends: [[2, 0], [3, 0]] },
                Curve { ends: [[3, 1], [3, 2]] },
            ],
            vec![],
        )
        .expect("valid fixture")
    }

    /// One-holed torus: a single pants glued to itself.
    pub fn one_holed_torus() -> Self {
        Self::new(1, vec![Curve { ends: [[0, 0], [0, 1]] }], vec![[0, 2]]).expect("valid fixture")
    }

    /// Four-holed sphere: two pants glued along one curve.
    pub fn four_holed_sphere() -> Self {
        Self::new(2, vec![Curve { ends: [[0, 0], [1, 0]] }], vec![[0, 1], [0, 2], [1, 1], [1, 2]])
            .expect("valid fixture")
    }

    /// Named fixtures, as used by the command line.
    pub fn fixture(name: &str) -> Option<Self> {
        Some(match name {
            "genus2-theta" => Self::genus2_theta(),
            "genus2-dumbbell" => Self::genus2_dumbbell(),
            "genus3-k4" => Self::genus3_k4(),
            "genus3-chain" => Self::genus3_chain(),
            "one-holed-torus" => Self::one_holed_torus(),
            "four-holed-sphere" => Self::four_holed_sphere(),
            _ => return None,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_have_expected_topology() {
        for (d, g, n) in [
            (PantsDecomposition::genus2_theta(), 2, 0),
            (PantsDecomposition::genus2_dumbbell(), 2, 0),
            (PantsDecomposition::genus3_k4(), 3, 0),
            (PantsDecomposition::genus3_chain(), 3, 0),
            (PantsDecomposition::one_holed_torus(), 1, 1),
            (PantsDecomposition::four_holed_sphere(), 0, 4),
        ] {
            assert_eq!((d.genus(), d.punctures()), (g, n));
            if n == 0 {
                assert_eq!(d.curves().len(), 3 * g - 3);
                assert_eq!(d.pants(), 2 * g - 2);
            }
        }
    }

    #[test]
    fn rejects_bad_graphs() {
        assert!(PantsDecomposition::new(1, vec![Curve { ends: [[0, 0], [0, 0]] }], vec![[0, 2]]).is_err());
        assert!(PantsDecomposition::new(1, vec![], vec![[0, 0], [0, 1]]).is_err());
        let disconnected = PantsDecomposition::new(
            2,
            vec![Curve { ends: [[0, 0], [0, 1]] }, Curve { ends: [[1, 0], [1, 1]] }],
            vec![[0, 2], [1, 2]],
        );
        assert!(disconnected.is_err());
    }

    #[test]
    fn plan_is_tree_then_hnn() {
        let d = PantsDecomposition::genus2_theta();
        let plan = d.plan(&[0, 1], &BTreeSet::new());
        assert_eq!(plan.iter().filter(|s| s.kind == GluingKind::Amalgamated).count(), 1);
        assert_eq!(plan.iter().filter(|s| s.kind == GluingKind::Hnn).count(), 2);
        let chain = PantsDecomposition::genus3_chain();
        let plan = chain.plan(&chain.components(&BTreeSet::new())[0], &BTreeSet::new());
        assert_eq!(plan.iter().filter(|s| s.kind == GluingKind::Amalgamated).count(), 3);
    }

    #[test]
    fn cutting_splits_components() {
        let d = PantsDecomposition::genus2_dumbbell();
        assert_eq!(d.components(&BTreeSet::from([2])), vec![vec![0], vec![1]]);
        assert_eq!(d.components(&BTreeSet::from([0])).len(), 1);
    }

    #[test]
    fn json_schema() {
        let d = PantsDecomposition::one_holed_torus();
        let s = serde_json::to_string(&d).unwrap();
        assert_eq!(s, r#"{"pants":1,"curves":[{"ends":[[0,0],[0,1]]}],"peripherals":[[0,2]]}"#);
        let back: PantsDecomposition = serde_json::from_str(&s).unwrap();
        assert_eq!(back, d);
        assert!(serde_json::from_str::<PantsDecomposition>(r#"{"pants":1,"curves":[]}"#).is_err());
    }
}
