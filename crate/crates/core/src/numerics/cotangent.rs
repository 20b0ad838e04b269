//! The cotangent family `π cot πw` and `Σ_d (w + d)^{−k}`.
//!
//! Each function picks its representation from the sign of `Im w`: the
//! q-expansion in `e(w)` above the real axis, the one in `e(−w)` below it,
//! and a real-variable formula on the axis itself.

use std::f64::consts::PI;

use super::{
    floor_ceil_frac, hurwitz_zeta, power_q_series, reject_integer, unit_exponential, ComplexValue,
    SeriesControl, SeriesResult,
};
use crate::{Error, Result};

const I: ComplexValue = ComplexValue::new(0.0, 1.0);

/// `π cot(πw)` for `w ∉ ℤ`.
///
/// * `Im w > 0`: `−πi − 2πi Σ_{m≥1} e(mw)`
/// * `Im w < 0`: `+πi + 2πi Σ_{m≥1} e(−mw)`
/// * `Im w = 0`: `π cot(πa)` with `a = {w}`
pub fn pi_cot_pi(w: ComplexValue, ctrl: &SeriesControl) -> Result<SeriesResult> {
    reject_integer(w)?;
    if w.im > 0.0 {
        let s = power_q_series(unit_exponential(w)?, 0, ctrl)?;
        Ok(s.affine(-2.0 * PI * I, -PI * I))
    } else if w.im < 0.0 {
        let s = power_q_series(unit_exponential(-w)?, 0, ctrl)?;
        Ok(s.affine(2.0 * PI * I, PI * I))
    } else {
        let a = floor_ceil_frac(w.re).frac;
        Ok(SeriesResult::exact(ComplexValue::new(
            PI / (PI * a).tan(),
            0.0,
        )))
    }
}

/// `Σ_{d∈ℤ} (w + d)^{−k}` for `k ≥ 2`, `w ∉ ℤ`.
///
/// * `Im w > 0`: `(−2πi)^k/(k−1)! Σ_{m≥1} m^{k−1} e(mw)`
/// * `Im w < 0`: `(+2πi)^k/(k−1)! Σ_{m≥1} m^{k−1} e(−mw)`
/// * `Im w = 0`: `ζ(k, a) + (−1)^k ζ(k, 1 − a)` with `a = {w}`
pub fn inverse_power_sum(w: ComplexValue, k: u32, ctrl: &SeriesControl) -> Result<SeriesResult> {
    if k < 2 {
        return Err(Error::Domain(format!(
            "inverse_power_sum needs k ≥ 2, got {k}"
        )));
    }
    reject_integer(w)?;
    if w.im == 0.0 {
        let a = floor_ceil_frac(w.re).frac;
        let sign = if k.is_multiple_of(2) { 1.0 } else { -1.0 };
        let v = hurwitz_zeta(k, a)? + sign * hurwitz_zeta(k, 1.0 - a)?;
        return Ok(SeriesResult::exact(ComplexValue::new(v, 0.0)));
    }
    let (r, base) = if w.im > 0.0 {
        (unit_exponential(w)?, -2.0 * PI * I)
    } else {
        (unit_exponential(-w)?, 2.0 * PI * I)
    };
    let prefactor = base.powu(k) / factorial(k - 1);
    let s = power_q_series(r, k - 1, ctrl)?;
    Ok(s.affine(prefactor, ComplexValue::new(0.0, 0.0)))
}

pub(crate) fn factorial(n: u32) -> f64 {
    (1..=n).map(f64::from).product()
}
