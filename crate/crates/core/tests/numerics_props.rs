mod common;

use std::f64::consts::PI;

use common::c;
use proptest::prelude::*;
use wzeta::numerics::{floor_ceil_frac, inverse_power_sum, pi_cot_pi, CompensatedSum};
use wzeta::{ComplexValue, SeriesControl};

fn ctrl() -> SeriesControl {
    SeriesControl::with_tol(1e-15).unwrap()
}

/// Off-axis points with `Re w` bounded away from the integers.
fn off_axis(max_im: f64) -> impl Strategy<Value = ComplexValue> {
    (-3i32..3, 0.1f64..0.9, 0.05f64..max_im, any::<bool>())
        .prop_map(|(n, frac, im, up)| c(f64::from(n) + frac, if up { im } else { -im }))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn cotangent_branches_are_conjugate_symmetric(w in off_axis(0.5)) {
        let up = pi_cot_pi(w, &ctrl()).unwrap().value;
        let down = pi_cot_pi(w.conj(), &ctrl()).unwrap().value;
        prop_assert!((up - down.conj()).norm() < 1e-10);
    }

    #[test]
    fn second_power_sum_matches_closed_form(w in off_axis(1.0)) {
        let s = inverse_power_sum(w, 2, &ctrl()).unwrap().value;
        let exact = (PI / (w * PI).sin()).powi(2);
        prop_assert!((s - exact).norm() < 1e-9, "w={} {} vs {}", w, s, exact);
    }

    #[test]
    fn cotangent_derivative_is_minus_second_power_sum(
        re in 0.1f64..0.9, im in 0.2f64..1.5,
    ) {
        let w = c(re, im);
        let h = 1e-5;
        let fd = (pi_cot_pi(w + h, &ctrl()).unwrap().value - pi_cot_pi(w - h, &ctrl()).unwrap().value) / (2.0 * h);
        let s = inverse_power_sum(w, 2, &ctrl()).unwrap().value;
        prop_assert!((fd + s).norm() < 1e-5);
    }

    #[test]
    fn cotangent_is_one_periodic(w in off_axis(1.0), real in any::<bool>()) {
        let w = if real { c(w.re, 0.0) } else { w };
        let a = pi_cot_pi(w, &ctrl()).unwrap().value;
        let b = pi_cot_pi(w + 1.0, &ctrl()).unwrap().value;
        prop_assert!((a - b).norm() < 1e-12);
    }

    #[test]
    fn floor_of_negation(num in -100_000i64..100_000, den in 1i64..50) {
        let x = num as f64 / den as f64;
        prop_assert_eq!(floor_ceil_frac(-x).lower, -floor_ceil_frac(x).upper);
        let f = floor_ceil_frac(x);
        prop_assert!((0.0..1.0).contains(&f.frac));
    }
}

#[test]
fn real_axis_power_sums_match_two_sided_brute_force() {
    let mut rng = common::rng(11);
    use rand::Rng;
    for i in 0..20 {
        let x: f64 = rng.gen_range(-3.0..3.0);
        if (x - x.round()).abs() < 0.05 {
            continue;
        }
        let k = 2 + (i % 3) as u32;
        let fast = inverse_power_sum(c(x, 0.0), k, &ctrl()).unwrap().value;
        let mut brute = CompensatedSum::new();
        for d in (1..=1_000_000i64).rev() {
            let d = d as f64;
            brute += c((x + d).powi(-(k as i32)) + (x - d).powi(-(k as i32)), 0.0);
        }
        brute += c(x.powi(-(k as i32)), 0.0);
        assert!((fast - brute.value()).norm() < 1e-5, "x={x} k={k}");
        assert_eq!(fast.im, 0.0);
    }
}
