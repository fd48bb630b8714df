//! Classification, B-lengths and fixed points of isometries.

use adscoords::Isometry;

fn main() -> adscoords::Result<()> {
    let samples = [
        ("diagonal", Isometry::new([[2.0, 0.0], [0.0, 0.5]], [[3.0, 0.0], [0.0, 1.0 / 3.0]])?),
        ("semi-loxodromic", Isometry::new([[2.0, 0.0], [0.0, 0.5]], [[1.0, 1.0], [0.0, 1.0]])?),
        ("parabolic", Isometry::new([[1.0, 1.0], [0.0, 1.0]], [[1.0, -2.0], [0.0, 1.0]])?),
        ("elliptic factor", Isometry::new([[0.0, 1.0], [-1.0, 0.0]], [[2.0, 0.0], [0.0, 0.5]])?),
    ];
    for (name, g) in samples {
        print!("{name}: {}", g.classify());
        match g.b_length() {
            Ok(l) => println!(", length = {} + {}τ", l.re, l.im),
            Err(e) => println!(", {e}"),
        }
        if let Ok(fp) = g.fixed_points() {
            println!("  attracting {:?}", fp.attracting);
            println!("  repelling  {:?}", fp.repelling);
        }
    }
    let a = Isometry::new([[2.0, 1.0], [1.0, 1.0]], [[3.0, 2.0], [1.0, 1.0]])?;
    let c = Isometry::new([[1.0, 0.5], [0.0, 1.0]], [[0.7, 0.0], [0.3, 1.0 / 0.7]])?;
    let l1 = a.b_length()?;
    let l2 = a.conjugate_by(&c).b_length()?;
    println!("conjugation invariance: {:?} vs {:?}", l1, l2);
    Ok(())
}
