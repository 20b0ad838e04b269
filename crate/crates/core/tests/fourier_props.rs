mod common;

use common::{c, random_tau, random_z, rng};
use proptest::prelude::*;
use wzeta::fourier::{
    g2_fourier, t_by_counting, t_closed_form, wp_deriv_fourier, wp_fourier, zeta_fourier,
};
use wzeta::{ComplexValue, SeriesControl, Tau};

fn ctrl() -> SeriesControl {
    SeriesControl::with_tol(1e-14).unwrap()
}

fn cases(seed: u64, n: usize) -> Vec<(Tau, ComplexValue)> {
    let mut rng = rng(seed);
    (0..n)
        .map(|_| {
            let tau = random_tau(&mut rng, 0.8, 1.5);
            (tau, random_z(&mut rng, tau, 0.05))
        })
        .collect()
}

#[test]
fn derivative_series_are_doubly_periodic() {
    for (tau, z) in cases(43, 20) {
        for k in [3, 4] {
            let f0 = wp_deriv_fourier(z, tau, k, &ctrl()).unwrap().value;
            for lambda in [c(1.0, 0.0), tau.get()] {
                let f1 = wp_deriv_fourier(z + lambda, tau, k, &ctrl()).unwrap().value;
                assert!(
                    (f1 - f0).norm() < 1e-9 * f0.norm().max(1.0),
                    "k={k} z={z} {f0} {f1}"
                );
            }
        }
    }
}

#[test]
fn wp_is_elliptic() {
    for (tau, z) in cases(47, 20) {
        let f0 = wp_fourier(z, tau, &ctrl()).unwrap().value;
        let t = tau.get();
        for lambda in [c(1.0, 0.0), t, t + 1.0, t * 2.0 - 3.0] {
            let f1 = wp_fourier(z + lambda, tau, &ctrl()).unwrap().value;
            assert!(
                (f1 - f0).norm() < 1e-9 * f0.norm().max(1.0),
                "z={z} λ={lambda}"
            );
        }
    }
}

#[test]
fn zeta_is_quasi_periodic() {
    let mut rng = rng(53);
    for _ in 0..5 {
        let tau = random_tau(&mut rng, 0.8, 1.5);
        let g2 = g2_fourier(tau, &ctrl()).unwrap().value;
        for (cc, dd) in [(0i64, 1i64), (1, 0), (2, -3)] {
            let lambda = tau.get() * cc as f64 + dd as f64;
            let expected = lambda * g2 - c(0.0, 2.0 * std::f64::consts::PI * cc as f64);
            for _ in 0..10 {
                let z = random_z(&mut rng, tau, 0.05);
                let diff = zeta_fourier(z + lambda, tau, &ctrl()).unwrap().value
                    - zeta_fourier(z, tau, &ctrl()).unwrap().value;
                assert!(
                    (diff - expected).norm() < 1e-9,
                    "({cc},{dd}) z={z} {diff} vs {expected}"
                );
            }
        }
    }
}

#[test]
fn derivative_ladder() {
    let h = 1e-5;
    for (tau, z) in cases(59, 10) {
        let zeta_fd = (zeta_fourier(z + h, tau, &ctrl()).unwrap().value
            - zeta_fourier(z - h, tau, &ctrl()).unwrap().value)
            / (2.0 * h);
        let wp = wp_fourier(z, tau, &ctrl()).unwrap().value;
        assert!((zeta_fd + wp).norm() < 1e-5, "z={z}");
        let wp_fd = (wp_fourier(z + h, tau, &ctrl()).unwrap().value
            - wp_fourier(z - h, tau, &ctrl()).unwrap().value)
            / (2.0 * h);
        let wp3 = wp_deriv_fourier(z, tau, 3, &ctrl()).unwrap().value;
        assert!((wp_fd - wp3).norm() < 1e-5 * wp3.norm().max(1.0), "z={z}");
    }
}

// Z(x + iε) ≈ Z(x) − iε℘(x); the first-order correction removes the O(ε) slope
// so the branch constants are compared at 1e-6.
#[test]
fn zeta_is_continuous_across_the_real_row() {
    let tau = Tau::i();
    let eps = 1e-4;
    for x in [0.25, 0.6, -0.3] {
        let on = zeta_fourier(c(x, 0.0), tau, &ctrl()).unwrap().value;
        let wp = wp_fourier(c(x, 0.0), tau, &ctrl()).unwrap().value;
        for side in [1.0, -1.0] {
            let off = zeta_fourier(c(x, side * eps), tau, &ctrl()).unwrap().value;
            let corrected = off + c(0.0, side * eps) * wp;
            assert!(
                (corrected - on).norm() < 1e-6,
                "x={x} side={side} {corrected} vs {on}"
            );
        }
    }
}

#[test]
fn zeta_is_continuous_across_a_shifted_row() {
    let tau = Tau::new(c(0.2, 1.1)).unwrap();
    let eps = 1e-4;
    let z = tau.get() * 2.0 + 0.35;
    let on = zeta_fourier(z, tau, &ctrl()).unwrap().value;
    let wp = wp_fourier(z, tau, &ctrl()).unwrap().value;
    for side in [1.0, -1.0] {
        let dz = c(0.0, side * eps);
        let off = zeta_fourier(z + dz, tau, &ctrl()).unwrap().value;
        assert!((off + dz * wp - on).norm() < 1e-6, "{off} {on}");
    }
}

#[test]
fn t_formula_on_the_decimal_grid() {
    for i in -50..=50 {
        let x = f64::from(i) / 10.0;
        assert_eq!(t_closed_form(x), t_by_counting(x), "x={x}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn t_formula_agrees_everywhere(x in -20.0f64..20.0) {
        prop_assert_eq!(t_closed_form(x), t_by_counting(x));
    }

    #[test]
    fn g2_is_invariant_under_dyadic_translation(re in -64i32..64, im in 0.5f64..3.0) {
        let tau = Tau::new(c(f64::from(re) / 64.0, im)).unwrap();
        let shifted = Tau::new(tau.get() + 1.0).unwrap();
        prop_assert_eq!(g2_fourier(tau, &ctrl()).unwrap().value, g2_fourier(shifted, &ctrl()).unwrap().value);
    }
}
