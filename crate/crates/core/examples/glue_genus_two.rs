//! Gluing two pants into a closed genus-two surface and reading the
//! Fenchel–Nielsen coordinates back.

use adscoords::coords::{coords_to_structure, structure_to_coords, CurveCoords, FNPoint, PantsDecomposition};
use adscoords::SplitComplex;

fn main() -> adscoords::Result<()> {
    let d = PantsDecomposition::genus2_theta();
    println!("genus {} with {} curves", d.genus(), d.curves().len());
    let x = FNPoint {
        curves: vec![
            CurveCoords { length: SplitComplex::new(2.0, 0.3), twist: SplitComplex::new(0.5, -0.2) },
            CurveCoords { length: SplitComplex::new(1.4, -0.6), twist: SplitComplex::new(-0.3, 0.1) },
            CurveCoords { length: SplitComplex::new(2.6, 0.9), twist: SplitComplex::new(1.1, 0.4) },
        ],
        peripherals: vec![],
    };
    let s = coords_to_structure(&d, &x)?;
    println!("generators: {:?}", s.generators().keys().collect::<Vec<_>>());
    println!("relation residual {:.1e}", s.relation_residual()?);
    let y = structure_to_coords(&d, &s)?;
    for (i, (a, b)) in x.curves.iter().zip(&y.curves).enumerate() {
        println!("curve {i}: twist in {:?}, out {:?}", a.twist, b.twist);
    }
    let t = s.dehn_twist(0, 1)?;
    println!("after a Dehn twist on curve 0: {:?}", structure_to_coords(&d, &t)?.curves[0].twist);
    Ok(())
}
