//! Pinching a curve: the stratum coordinates converge to a sawtooth limit.

use adscoords::coords::{pinch_path, CurveCoords, FNPoint, PantsDecomposition, PinchCurve, PinchSchedule};
use adscoords::SplitComplex;

fn main() -> adscoords::Result<()> {
    let d = PantsDecomposition::genus2_theta();
    let x0 = FNPoint {
        curves: vec![
            CurveCoords { length: SplitComplex::new(2.0, 0.3), twist: SplitComplex::new(0.4, 0.0) },
            CurveCoords { length: SplitComplex::new(3.0, -0.5), twist: SplitComplex::new(-1.0, 0.6) },
            CurveCoords { length: SplitComplex::new(1.5, 0.1), twist: SplitComplex::new(0.2, 0.2) },
        ],
        peripherals: vec![],
    };
    let target = SplitComplex::new(5.0, 0.5);
    for direction in [1, -1] {
        let schedule = PinchSchedule { steps: 30, curves: vec![PinchCurve { curve: 0, target, direction, rate: 1.0 }] };
        let path = pinch_path(&d, &[0], &x0, &schedule.expand(&x0)?)?;
        for st in path.iter().step_by(10) {
            println!("direction {direction:+} step {:2}: {:?}", st.step, st.stratum.degenerate[0].coords);
        }
        let last = path.last().expect("nonempty path");
        println!("neighbor point at the end: {:?}", last.neighbors[0]);
    }
    println!("expected limit (Im ℓ, 0, 0, ±|ℓ|) = (0.5, 0, 0, ±{})", target.square_norm().sqrt());
    Ok(())
}
