//! Realizing a pair of pants from three B-lengths and reading them back.

use adscoords::pants::{normalize_rep, realize_pants, Gen};
use adscoords::SplitComplex;

fn main() -> adscoords::Result<()> {
    let lengths = [SplitComplex::new(2.0, 0.5), SplitComplex::new(1.5, -0.4), SplitComplex::new(3.0, 1.0)];
    let rep = realize_pants(lengths[0], lengths[1], lengths[2])?;
    println!("r = {:?}", rep.r);
    println!("relation residual of t·s·r: {:.1e}", rep.relation_residual());
    let (l1, l2, l3) = rep.b_lengths()?;
    println!("lengths back: {l1:?} {l2:?} {l3:?}");

    let (normal, _) = normalize_rep(&rep, Gen::S)?;
    let fp = normal.s.fixed_points()?;
    println!("after normalizing s: attracting {:?}, repelling {:?}", fp.attracting, fp.repelling);

    let cusp = realize_pants(SplitComplex::new(1.0, 1.0), lengths[1], lengths[2])?;
    println!("one light-like boundary: r is {}", cusp.r.classify());
    Ok(())
}
