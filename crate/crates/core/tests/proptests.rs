//! Invariants of every layer, as property tests.

mod common;

use adscoords::boundary::{real_cross_ratio, ProjPoint};
use adscoords::coords::{
    coords_to_structure, h_inverse, h_map, reduce_twist, stratum_coords, structure_to_coords, theta_renorm, FNPoint,
    PantsDecomposition, Tolerances,
};
use adscoords::halfspace::{curve_length, geodesic_between, mobius_act, AlgebraA, ModelPoint};
use adscoords::pants::realize_pants;
use adscoords::{cross_ratio, spacelike_position, BoundaryPoint, Isometry, IsometryClass, SplitComplex};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn b() -> impl Strategy<Value = SplitComplex> {
    (-5.0..5.0f64, -5.0..5.0f64).prop_map(|(r, i)| SplitComplex::new(r, i))
}

fn length() -> impl Strategy<Value = SplitComplex> {
    (0.3..5.0f64, 0.3..5.0f64).prop_map(|(p, q)| SplitComplex::join(p, q))
}

fn sl2() -> impl Strategy<Value = [[f64; 2]; 2]> {
    (-2.0..2.0f64, -2.0..2.0f64, -2.0..2.0f64, -2.0..2.0f64)
        .prop_filter("det bounded below", |(a, b, c, d)| a * d - b * c > 0.2)
        .prop_map(|(a, b, c, d)| {
            let s = (a * d - b * c).sqrt();
            [[a / s, b / s], [c / s, d / s]]
        })
}

fn isometry() -> impl Strategy<Value = Isometry> {
    (sl2(), sl2()).prop_map(|(p, m)| Isometry::new(p, m).unwrap())
}

fn loxodromic() -> impl Strategy<Value = Isometry> {
    isometry().prop_filter("loxodromic", |g| {
        g.classify() == IsometryClass::Loxodromic && g.b_length().is_ok_and(|l| l.split().0 > 0.2 && l.split().1 > 0.2)
    })
}

fn algebra() -> impl Strategy<Value = AlgebraA> {
    (-3.0..3.0f64, -3.0..3.0f64, -3.0..3.0f64, -3.0..3.0f64).prop_map(|(a, b, c, d)| AlgebraA::new(a, b, c, d))
}

fn boundary_point() -> impl Strategy<Value = BoundaryPoint> {
    (-10.0..10.0f64, -10.0..10.0f64).prop_map(|(p, q)| BoundaryPoint::from_b(SplitComplex::join(p, q)))
}

fn close(a: SplitComplex, b: SplitComplex, tol: f64) -> bool {
    a.dist(b) <= tol * (1.0 + a.abs_max().max(b.abs_max()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn b_is_a_commutative_ring(x in b(), y in b(), z in b()) {
        prop_assert!(close(x * y, y * x, 1e-15));
        prop_assert!(close((x * y) * z, x * (y * z), 1e-13));
        prop_assert!(close(x * (y + z), x * y + x * z, 1e-13));
    }

    #[test]
    fn splitting_is_an_algebra_isomorphism(x in b(), y in b()) {
        let (xp, xq) = x.split();
        let (yp, yq) = y.split();
        let (pp, pq) = (x * y).split();
        prop_assert!((pp - xp * yp).abs() <= 1e-12 * (1.0 + (xp * yp).abs()));
        prop_assert!((pq - xq * yq).abs() <= 1e-12 * (1.0 + (xq * yq).abs()));
        prop_assert!(close(SplitComplex::join(xp, xq), x, 1e-15));
    }

    #[test]
    fn square_norm_is_multiplicative(x in b(), y in b()) {
        let lhs = (x * y).square_norm();
        let rhs = x.square_norm() * y.square_norm();
        prop_assert!((lhs - rhs).abs() <= 1e-12 * (1.0 + lhs.abs().max(rhs.abs())));
        prop_assert!(close((x * y).conj(), x.conj() * y.conj(), 1e-15));
        prop_assert_eq!((x * x.conj()).re, x.square_norm());
    }

    #[test]
    fn exp_inverts_log(p in 0.01..50.0f64, q in 0.01..50.0f64) {
        let z = SplitComplex::join(p, q);
        prop_assert!(close(z.ln().unwrap().exp(), z, 1e-12));
    }

    #[test]
    fn algebra_a_conjugation(u in algebra(), v in algebra()) {
        let lhs = (u * v).conj();
        let rhs = v.conj() * u.conj();
        prop_assert!(lhs.dist(rhs) <= 1e-12 * (1.0 + u.euclidean_sq() * v.euclidean_sq()));
        let n = u * u.conj();
        prop_assert!(n.x2.abs() + n.x3.abs() + n.x4.abs() <= 1e-12 * (1.0 + u.euclidean_sq()));
    }

    #[test]
    fn cross_ratio_is_invariant(g in isometry(), p in prop::array::uniform4(boundary_point())) {
        if let Ok(c0) = cross_ratio(&p[0], &p[1], &p[2], &p[3]) {
            let q: Vec<BoundaryPoint> = p.iter().map(|x| g.act(x)).collect();
            if c0.abs_max() < 1e6 {
                if let Ok(c1) = cross_ratio(&q[0], &q[1], &q[2], &q[3]) {
                    prop_assert!(close(c0, c1, 1e-9), "{c0:?} {c1:?}");
                }
            }
        }
    }

    #[test]
    fn cross_ratio_factors_classically(p in prop::array::uniform4(-10.0..10.0f64), q in prop::array::uniform4(-10.0..10.0f64)) {
        let pts: Vec<BoundaryPoint> = (0..4).map(|i| BoundaryPoint::from_b(SplitComplex::join(p[i], q[i]))).collect();
        if let Ok(c) = cross_ratio(&pts[0], &pts[1], &pts[2], &pts[3]) {
            let classical = |x: [f64; 4]| (x[1] - x[0]) * (x[3] - x[2]) / ((x[0] - x[3]) * (x[1] - x[2]));
            let (cp, cq) = c.split();
            let (ep, eq) = (classical(p), classical(q));
            prop_assert!((cp - ep).abs() <= 1e-12 * (1.0 + ep.abs()) * 1e3);
            prop_assert!((cq - eq).abs() <= 1e-12 * (1.0 + eq.abs()) * 1e3);
            let f = |x: [f64; 4]| {
                let q: Vec<ProjPoint> = x.iter().map(|&t| ProjPoint::affine(t)).collect();
                real_cross_ratio(q[0], q[1], q[2], q[3])
            };
            if let (Ok(rp), Ok(rq)) = (f(p), f(q)) {
                prop_assert!((rp - cp).abs() <= 1e-9 * (1.0 + cp.abs()));
                prop_assert!((rq - cq).abs() <= 1e-9 * (1.0 + cq.abs()));
            }
        }
    }

    #[test]
    fn spacelike_position_is_symmetric_and_invariant(g in isometry(), p in boundary_point(), q in boundary_point()) {
        prop_assert_eq!(spacelike_position(&p, &q), spacelike_position(&q, &p));
        if p.distance(&q) > 1e-6 || !spacelike_position(&p, &q) {
            let moved = spacelike_position(&g.act(&p), &g.act(&q));
            let a = (p.plus.distance(q.plus)).min(p.minus.distance(q.minus));
            if a > 1e-6 {
                prop_assert_eq!(moved, spacelike_position(&p, &q));
            }
        }
    }

    #[test]
    fn b_length_is_a_class_function(a in loxodromic(), c in isometry()) {
        let l = a.b_length().unwrap();
        prop_assert!(close(a.conjugate_by(&c).b_length().unwrap(), l, 1e-9));
        let t = a.trace();
        let (tp, tq) = t.split();
        let direct = SplitComplex::join(2.0 * (tp.abs() / 2.0).acosh(), 2.0 * (tq.abs() / 2.0).acosh());
        prop_assert!(close(direct, l, 1e-12));
    }

    #[test]
    fn fixed_points_are_fixed(a in loxodromic()) {
        let fp = a.fixed_points().unwrap();
        prop_assert!(a.act(&fp.attracting).distance(&fp.attracting) <= 1e-9);
        prop_assert!(a.act(&fp.repelling).distance(&fp.repelling) <= 1e-9);
    }

    #[test]
    fn action_is_a_group_action(a in isometry(), c in isometry(), p in boundary_point()) {
        let lhs = (a * c).act(&p);
        let rhs = a.act(&c.act(&p));
        prop_assert!(lhs.distance(&rhs) <= 1e-10);
    }

    #[test]
    fn geodesic_length_is_invariant(g in isometry(), p in -2.0..2.0f64, q in -2.0..2.0f64, r in 0.5..3.0f64, s in 0.5..3.0f64) {
        let geo = geodesic_between(SplitComplex::join(p - r, q - s), SplitComplex::join(p + r, q + s)).unwrap();
        let samples: Vec<ModelPoint> = geo
            .sample_between(0.8, 2.2, 1500)
            .into_iter()
            .map(|(_, x)| ModelPoint::new(x[0], x[1], x[2]).unwrap())
            .collect();
        let moved: Result<Vec<ModelPoint>, _> = samples.iter().map(|x| mobius_act(&g, x)).collect();
        if let Ok(moved) = moved {
            let l0 = curve_length(&samples).unwrap();
            if let Ok(l1) = curve_length(&moved) {
                prop_assert!((l0 - l1).abs() <= 1e-4 * (1.0 + l0), "{l0} {l1}");
            }
        }
    }

    #[test]
    fn spacelike_samples_lie_on_the_conic(p1 in b(), p2 in b()) {
        prop_assume!(!(p1 - p2).is_lightlike() && (p1 - p2).square_norm().abs() > 1e-2);
        let g = geodesic_between(p1, p2).unwrap();
        let pts = g.sample(64);
        for (_, x) in &pts {
            let scale = 1.0 + x.iter().map(|v| v * v).sum::<f64>();
            prop_assert!(g.conic_residual(*x) <= 1e-10 * scale);
        }
        let first = pts.first().unwrap().1;
        let last = pts.last().unwrap().1;
        prop_assert!(first[2].abs() <= 1e-6 * (1.0 + first[0].abs() + first[1].abs()));
        prop_assert!(last[2].abs() <= 1e-6 * (1.0 + last[0].abs() + last[1].abs()));
    }

    #[test]
    fn pants_round_trip(l in prop::array::uniform3(length())) {
        let rep = realize_pants(l[0], l[1], l[2]).unwrap();
        prop_assert!(rep.relation_residual() <= 1e-9);
        let (a, b2, c) = rep.b_lengths().unwrap();
        for (x, y) in [(a, l[0]), (b2, l[1]), (c, l[2])] {
            prop_assert!(close(x, y, 1e-9));
        }
        for (g, lx) in [(&rep.r, l[0]), (&rep.s, l[1]), (&rep.t, l[2])] {
            let (tp, tq) = g.trace().split();
            let (lp, lq) = lx.split();
            prop_assert!((tp.abs() - 2.0 * (lp / 2.0).cosh()).abs() <= 1e-10 * tp.abs());
            prop_assert!((tq.abs() - 2.0 * (lq / 2.0).cosh()).abs() <= 1e-10 * tq.abs());
        }
    }

    #[test]
    fn h_map_round_trip(l in length(), angle in 0.0..std::f64::consts::TAU, c in -8.0..8.0f64) {
        let (l2, a2, c2) = h_inverse(h_map(l, angle, c)).unwrap();
        prop_assert!(close(l2, l, 1e-12));
        prop_assert!((a2 - angle).abs() <= 1e-12);
        prop_assert!((c2 - c).abs() <= 1e-12 * (1.0 + c.abs()) * 10.0);
    }

    #[test]
    fn theta_is_dehn_equivariant(l in length(), tw in b(), k in -5i64..5) {
        let t0 = theta_renorm(l, tw).unwrap();
        let t1 = theta_renorm(l, tw + l * k as f64).unwrap();
        let shift = SplitComplex::real(2.0 * std::f64::consts::PI * k as f64);
        prop_assert!(close(t1, t0 + shift, 1e-12));
        let (r, j) = reduce_twist(l, tw + l * k as f64);
        prop_assert!(r.re >= 0.0 && r.re < l.re);
        prop_assert!(close(r + l * j as f64, tw + l * k as f64, 1e-12));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn surface_round_trip(seed in any::<u64>(), which in 0usize..6) {
        let (_, d) = common::all_fixtures().swap_remove(which);
        let x = common::random_point(&d, &mut ChaCha8Rng::seed_from_u64(seed));
        let s = coords_to_structure(&d, &x).unwrap();
        s.verify(&Tolerances::default()).unwrap();
        let y = structure_to_coords(&d, &s).unwrap();
        for (a, b) in x.curves.iter().zip(&y.curves) {
            prop_assert!(close(a.length, b.length, 1e-8) && close(a.twist, b.twist, 1e-8), "{a:?} {b:?}");
        }
        emitted_points_satisfy_e(&y, &d)?;
    }

    #[test]
    fn stratum_coords_ignore_dehn_twists(seed in any::<u64>(), k in -3i64..3) {
        let d = PantsDecomposition::genus2_theta();
        let x = common::moderate_point(&d, &mut ChaCha8Rng::seed_from_u64(seed));
        let s = coords_to_structure(&d, &x).unwrap();
        let p = stratum_coords(&d, &[0, 2], &s).unwrap();
        let q = stratum_coords(&d, &[0, 2], &s.dehn_twist(0, k).unwrap().dehn_twist(2, -k).unwrap()).unwrap();
        prop_assert!(p.max_distance(&q) <= 1e-9, "{p:?} {q:?}");
    }

    #[test]
    fn gluing_relations_hold_after_twisting(seed in any::<u64>()) {
        let d = PantsDecomposition::genus2_dumbbell();
        let x = common::random_point(&d, &mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert!(coords_to_structure(&d, &x).unwrap().relation_residual().unwrap() <= 1e-8);
    }
}

fn emitted_points_satisfy_e(y: &FNPoint, d: &PantsDecomposition) -> Result<(), TestCaseError> {
    prop_assert!(y.validate(d, &Tolerances::default()).is_ok());
    for p in &y.peripherals {
        let n = p.length.square_norm();
        prop_assert!((p.delta * p.delta - n).abs() <= 1e-10 * n.max(1.0));
    }
    Ok(())
}
