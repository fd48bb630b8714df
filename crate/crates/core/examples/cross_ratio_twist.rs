//! The B-valued cross ratio and reading a twist back from it.

use adscoords::{centralizer_element, cross_ratio, BoundaryPoint, SplitComplex};

fn main() -> adscoords::Result<()> {
    let inf = BoundaryPoint::infinity();
    let m1 = BoundaryPoint::from_b(SplitComplex::real(-1.0));
    let zero = BoundaryPoint::from_b(SplitComplex::ZERO);
    let z = BoundaryPoint::from_b(SplitComplex::new(2.0, 0.5));
    println!("cr(∞, −1, 0, z) = {:?}", cross_ratio(&inf, &m1, &zero, &z)?);

    let tw = SplitComplex::new(0.8, -0.3);
    let zt = centralizer_element(tw);
    let one = BoundaryPoint::from_b(SplitComplex::ONE);
    let moved = zt.act(&one);
    let cr = cross_ratio(&inf, &m1, &zero, &moved)?;
    println!("twist {:?} read back as {:?}", tw, cr.ln()?);
    Ok(())
}
