//! Arithmetic in the split-complex numbers and the idempotent splitting.

use adscoords::{ConeClass, SplitComplex};

fn main() -> adscoords::Result<()> {
    let z = SplitComplex::new(3.0, 1.0);
    let w = SplitComplex::new(0.5, -2.0);
    println!("z = {z:?}, w = {w:?}");
    println!("z·w = {:?}", z * w);
    println!("|z|² = {}, |w|² = {}", z.square_norm(), w.square_norm());
    println!("|zw|² = {} (multiplicative)", (z * w).square_norm());
    let (p, q) = z.split();
    println!("z = {p}·e⁺ + {q}·e⁻");
    println!("exp(ln z) = {:?}", z.ln()?.exp());
    println!("z⁻¹ = {:?}", z.invert()?);
    for v in [z, w, SplitComplex::new(1.0, 1.0)] {
        let class = v.cone_class();
        println!("{v:?}: {class:?}{}", if class == ConeClass::InteriorCPlus { " (valid length)" } else { "" });
    }
    match SplitComplex::new(2.0, 2.0).invert() {
        Ok(_) => unreachable!(),
        Err(e) => println!("inverting a light-like element: {e}"),
    }
    Ok(())
}
