use std::f64::consts::PI;

use casimir_core::exec::{Strategy, Unmonitored};
use casimir_core::modesum::{
    continuation_at_zero, continuation_richardson, mode_sum_bruteforce, mode_sum_bruteforce_with,
    radial_integral_oracle, regularized_vev, EvalPoint, PlateConfig, RegulatorU,
};
use casimir_core::Complex64;
use proptest::prelude::*;

fn between(a: f64, xi: f64, x3: f64) -> (PlateConfig, EvalPoint) {
    let cfg = PlateConfig::between(a, xi).unwrap();
    let p = EvalPoint::new(&cfg, x3).unwrap();
    (cfg, p)
}

#[test]
fn oracle_chain_over_the_regulator_grid() {
    let (cfg, p) = between(1.0, 0.0, 0.3);
    for re in [4.5, 5.0, 6.0] {
        for im in [0.0, 1.0] {
            let u = RegulatorU::new(Complex64::new(re, im));
            let closed = regularized_vev(u, &cfg, &p).unwrap();
            let brute = mode_sum_bruteforce(u, &cfg, &p, 20_000).unwrap();
            for k in 0..4 {
                let d = (brute.tensor.as_array()[k] - closed.as_array()[k]).norm();
                // the closed form carries its own ~1e-10 relative error
                let slack = 1e-9 * closed.as_array()[k].norm();
                assert!(d <= brute.tail_bound[k] + slack, "u={} k={k}: {d:e} > {:e}", u.value(), brute.tail_bound[k]);
            }
            let short = mode_sum_bruteforce(u, &cfg, &p, 40).unwrap().tensor.t00;
            let radial = radial_integral_oracle(u, &cfg, &p, 40).unwrap();
            assert!((radial - short).norm() <= 1e-8 * short.norm(), "u={}: {radial} vs {short}", u.value());
        }
    }
}

#[test]
fn midpoint_bruteforce_matches_closed_form_at_u5() {
    let (cfg, p) = between(1.0, 0.0, 0.5);
    let u = RegulatorU::real(5.0);
    let closed = regularized_vev(u, &cfg, &p).unwrap();
    let brute = mode_sum_bruteforce(u, &cfg, &p, 100_000).unwrap();
    for k in 0..4 {
        let d = (brute.tensor.as_array()[k] - closed.as_array()[k]).norm();
        assert!(d <= brute.tail_bound[k] + 1e-12, "k={k}");
    }
}

#[test]
fn strategies_agree_bit_for_bit() {
    let (cfg, p) = between(1.3, 0.2, 0.4);
    let u = RegulatorU::new(Complex64::new(5.5, 0.7));
    let seq = mode_sum_bruteforce_with(u, &cfg, &p, 50_000, Strategy::Sequential, &Unmonitored).unwrap();
    let par = mode_sum_bruteforce_with(u, &cfg, &p, 50_000, Strategy::Parallel, &Unmonitored).unwrap();
    assert_eq!(seq, par);
}

#[test]
fn continuation_richardson_matches_u0() {
    for (xi, x3) in [(0.0, 0.5), (0.0, 0.2), (1.0 / 6.0, 0.3), (1.0, 0.7), (-0.5, 0.1)] {
        let (cfg, p) = between(1.0, xi, x3);
        let r = continuation_richardson(&cfg, &p).unwrap();
        let z = continuation_at_zero(&cfg, &p).unwrap();
        let scale = z.max_abs();
        for k in 0..4 {
            let d = (r.as_array()[k] - z.as_array()[k]).norm();
            assert!(d <= 1e-6 * scale, "xi={xi} x3={x3} k={k}: {d:e}");
        }
    }
}

#[test]
fn t33_independent_of_position_at_u0() {
    for xi in [0.0, 0.4] {
        let (cfg, mid) = between(2.0, xi, 1.0);
        let reference = continuation_at_zero(&cfg, &mid).unwrap().t33;
        for j in 1..40 {
            let p = EvalPoint::new(&cfg, j as f64 * 0.05).unwrap();
            let t33 = continuation_at_zero(&cfg, &p).unwrap().t33;
            assert!((t33 - reference).norm() <= 1e-12 * reference.norm(), "x3={}", p.x3);
        }
    }
}

#[test]
fn conformal_u0_is_flat_and_traceless() {
    let (cfg, mid) = between(1.0, 1.0 / 6.0, 0.5);
    let reference = continuation_at_zero(&cfg, &mid).unwrap();
    for j in 1..20 {
        let p = EvalPoint::new(&cfg, j as f64 / 20.0).unwrap();
        let t = continuation_at_zero(&cfg, &p).unwrap();
        assert!((t.t00 - reference.t00).norm() <= 1e-12 * reference.t00.norm());
        assert!((t.t11 - reference.t11).norm() <= 1e-12 * reference.t00.norm());
        assert!(t.trace().norm() <= 1e-12 * t.t00.norm());
    }
}

#[test]
fn approach_to_plate_is_quartic() {
    let (cfg, p) = between(1.0, 0.0, 0.01);
    let t00 = continuation_at_zero(&cfg, &p).unwrap().t00.re;
    let leading = -1.0 / (16.0 * PI * PI * 0.01f64.powi(4));
    assert!((t00 / leading - 1.0).abs() < 1e-3);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn planar_isotropy(re in -3.0f64..8.0, im in -2.0f64..2.0, xi in -2.0f64..2.0, q in 0.01f64..0.99) {
        let u = RegulatorU::new(Complex64::new(re, im));
        prop_assume!((u.value() - 1.0).norm() > 1e-3 && (u.value() - 3.0).norm() > 1e-3 && (u.value() - 4.0).norm() > 1e-3);
        let (cfg, p) = between(1.0, xi, q);
        let t = regularized_vev(u, &cfg, &p).unwrap();
        prop_assert_eq!(t.t11, t.t22);
        prop_assert_eq!(t.component(0, 1), Complex64::new(0.0, 0.0));
    }

    #[test]
    fn real_regulator_gives_real_tensor(u in -3.0f64..8.0, xi in -1.0f64..1.0, q in 0.01f64..0.99) {
        prop_assume!((u - 1.0).abs() > 1e-3 && (u - 3.0).abs() > 1e-3 && (u - 4.0).abs() > 1e-3);
        let (cfg, p) = between(1.0, xi, q);
        let c = casimir_core::modesum::regularized_coefficients(RegulatorU::real(u), &cfg, &p).unwrap();
        prop_assert_eq!(c.b_u.im, 0.0);
    }
}
