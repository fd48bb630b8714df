//! Sampling the limit curve of a surface group and checking it is the graph
//! of an orientation-preserving circle map.

use adscoords::coords::{coords_to_structure, limit_set_sample, preserves_cyclic_order, CurveCoords, FNPoint, PantsDecomposition};
use adscoords::SplitComplex;

fn main() -> adscoords::Result<()> {
    let d = PantsDecomposition::genus2_theta();
    for bend in [0.0, 0.6] {
        let x = FNPoint {
            curves: (0..3)
                .map(|i| CurveCoords {
                    length: SplitComplex::new(1.5 + 0.5 * i as f64, bend),
                    twist: SplitComplex::new(0.2 * i as f64, bend / 2.0),
                })
                .collect(),
            peripherals: vec![],
        };
        let s = coords_to_structure(&d, &x)?;
        let pts = limit_set_sample(&s, 3)?;
        let off = pts.iter().map(|p| p.plus.distance(p.minus)).fold(0.0, f64::max);
        println!(
            "bend {bend}: {} points, max |plus − minus| = {off:.3e}, cyclic order preserved: {}",
            pts.len(),
            preserves_cyclic_order(&pts)
        );
    }
    Ok(())
}
