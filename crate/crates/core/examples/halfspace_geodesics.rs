//! Geodesics of the half-space model and lengths along a loxodromic axis.

use adscoords::halfspace::{curve_length, geodesic_between, geodesic_timelike, mobius_act, ModelPoint};
use adscoords::{Isometry, SplitComplex};

fn main() -> adscoords::Result<()> {
    let g = geodesic_between(SplitComplex::real(1.0), SplitComplex::real(-1.0))?;
    for (t, x) in g.sample(5) {
        println!("space-like t = {t:.3}: {x:?} (residual {:.1e})", g.conic_residual(x));
    }

    let s = geodesic_timelike(SplitComplex::ZERO, SplitComplex::TAU)?;
    let (a, b) = s.parameter_range();
    println!("time-like start {:?} end {:?}", s.point_at(a), s.point_at(b));

    let (lambda, mu): (f64, f64) = (1.2, 0.4);
    let h = Isometry::new(
        [[(lambda / 2.0).exp(), 0.0], [0.0, (-lambda / 2.0).exp()]],
        [[(mu / 2.0).exp(), 0.0], [0.0, (-mu / 2.0).exp()]],
    )?;
    let x = ModelPoint::new(0.0, 0.0, 1.0)?;
    let y = mobius_act(&h, &x)?;
    let n = 2000;
    let samples: Vec<ModelPoint> = (0..=n)
        .map(|i| {
            let s = i as f64 / n as f64;
            ModelPoint::new(0.0, 0.0, ((lambda + mu) * s / 2.0).exp()).expect("above the boundary")
        })
        .collect();
    println!("x = {:?}, A·x = {:?}", x.coords(), y.coords());
    println!("length along the axis = {}, Re b_length = {}", curve_length(&samples)?, h.b_length()?.re);
    Ok(())
}
