//! Stratum coordinates relative to a multicurve, including a pinched curve.

use adscoords::coords::{
    h_inverse, h_map, stratum_coords, stratum_coords_inverse, DegenerateEntry, PantsDecomposition, StratumPoint,
    UndegenerateEntry,
};
use adscoords::SplitComplex;

fn main() -> adscoords::Result<()> {
    let l = SplitComplex::new(3.0, 1.0);
    let p = h_map(l, 1.0, 0.5);
    println!("H(ℓ, 1, 0.5) = {p:?}, back: {:?}", h_inverse(p)?);
    for c in [5.0, 20.0, -20.0] {
        println!("c = {c}: {:?}", h_map(l, 1.0, c));
    }

    let d = PantsDecomposition::genus2_dumbbell();
    let point = StratumPoint {
        undegenerate: vec![
            UndegenerateEntry { curve: 0, length: SplitComplex::new(2.0, 0.4), twist: SplitComplex::new(0.1, 0.2) },
            UndegenerateEntry { curve: 1, length: SplitComplex::new(1.5, -0.3), twist: SplitComplex::new(-0.4, 0.0) },
        ],
        degenerate: vec![DegenerateEntry { curve: 2, coords: [0.5, 0.0, 0.0, 2.0] }],
        peripherals: vec![],
    };
    let s = stratum_coords_inverse(&d, &[2], &point)?;
    println!("pinched curves {:?}, {} components", s.degenerate(), s.components().len());
    println!("length of curve 2: {:?}", s.curve_length(2)?);
    println!("read back: {:?}", stratum_coords(&d, &[2], &s)?.degenerate);
    Ok(())
}
