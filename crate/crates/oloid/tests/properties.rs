//! Randomized invariants of the surface parametrization, the touching
//! curves, and the development's period reduction.

use oloid::development::h_step;
use oloid::pencil::f_lambda;
use oloid::surface::{circle_point_a, circle_point_b, generating_line, ruling_point, T_MAX};
use oloid::touching::{curve_param, gamma, psi, CurveBranch, CURVE_PERIOD};
use oloid::{Angle, ExtendedParam, Point3, ZBranch};
use proptest::prelude::*;

use std::f64::consts::{PI, TAU};

proptest! {
    #[test]
    fn ruling_points_stay_on_their_generating_line(
        m in -3.0..3.0f64,
        t in -2.0..2.0f64,
        neg in proptest::bool::ANY,
    ) {
        let zb = if neg { ZBranch::Neg } else { ZBranch::Pos };
        let p = ruling_point(m, Angle::new(t), zb).unwrap();
        let line = generating_line(Angle::new(t), zb).unwrap();
        prop_assert!(line.distance_to(p) < 1e-12);
        // m is the affine coordinate from circle a (m = 0) to circle b
        // (m = 1) along that line.
        let a = circle_point_a(Angle::new(t));
        let b = circle_point_b(Angle::new(t), zb).unwrap();
        prop_assert!((a + (b - a) * m - p).norm() < 1e-12);
    }

    #[test]
    fn rulings_mirror_exactly_in_z(m in -3.0..3.0f64, t in -2.0..2.0f64) {
        let pos = ruling_point(m, Angle::new(t), ZBranch::Pos).unwrap();
        let neg = ruling_point(m, Angle::new(t), ZBranch::Neg).unwrap();
        prop_assert_eq!(pos.mirror_z(), neg);
    }

    #[test]
    fn gamma_points_sit_on_the_ruling_at_psi(
        lambda in -5.0..5.0f64,
        u in -2.0..8.0f64,
    ) {
        let cp = match gamma(ExtendedParam::Finite(lambda), Angle::new(u)) {
            Ok(cp) => cp,
            // Near a curve pole or the window boundary; nothing to check.
            Err(_) => return Ok(()),
        };
        let pull = match cp.branch {
            CurveBranch::Gamma1 => cp.t,
            CurveBranch::Gamma2 => 4.0 * PI / 3.0 - cp.t,
        };
        prop_assume!((1.0 + lambda * pull.cos()).abs() > 1e-3);
        prop_assume!(pull.abs() < T_MAX - 1e-6);
        let on = ruling_point(psi(lambda, Angle::new(pull)).unwrap(), Angle::new(pull), ZBranch::Pos)
            .unwrap();
        let expected = match cp.branch {
            CurveBranch::Gamma1 => on,
            CurveBranch::Gamma2 => on.mirror_z(),
        };
        prop_assert!((cp.point - expected).norm() < 1e-9, "got {:?}, expected {expected:?}", cp.point);
    }

    #[test]
    fn h_step_reconstructs_its_input(t in -50.0..50.0f64) {
        let (h, k) = h_step(t);
        prop_assert!(h.abs() <= T_MAX + 1e-12);
        let back = h + k as f64 * 4.0 * PI / 3.0;
        prop_assert!((back - t).abs() < 1e-12 * t.abs().max(1.0));
    }

    #[test]
    fn curve_param_is_periodic_and_windowed(t in -50.0..50.0f64) {
        let u = curve_param(t);
        prop_assert!(u > -T_MAX - 1e-9 && u <= TAU + 1e-9);
        let shifted = curve_param(t + CURVE_PERIOD);
        prop_assert!((shifted - u).abs() < 1e-9);
    }

    #[test]
    fn members_are_invariant_under_both_mirrors(
        lambda in -4.0..4.0f64,
        x in -2.0..2.0f64,
        y in -2.0..2.0f64,
        z in -2.0..2.0f64,
    ) {
        prop_assume!(lambda.abs() > 1e-6 && (1.0 - lambda).abs() > 1e-6);
        let p = Point3::new(x, y, z);
        let lam = ExtendedParam::Finite(lambda);
        let v = f_lambda(lam, p).unwrap();
        // x and z enter only through their squares, so the reflections are
        // exact in floats.
        prop_assert_eq!(v, f_lambda(lam, p.mirror_x()).unwrap());
        prop_assert_eq!(v, f_lambda(lam, p.mirror_z()).unwrap());
    }
}
