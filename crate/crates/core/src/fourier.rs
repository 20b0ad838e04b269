//! Closed q-expansions of ℘, its derivatives, Z and G₂ on `L_τ`.
//!
//! Summing the lattice series first over `d` turns each row `c` into a
//! one-sided geometric-type series in `e(±(z − cτ))`. With
//! `x = Im z / Im τ`, rows below `x` expand in `e(z − cτ)` and rows above
//! in `e(cτ − z)`. When `x` is an integer `c₀` the row `c₀` lies on the
//! real axis and is evaluated by real-variable formulas in
//! `a = {z − c₀τ}` instead.

use std::cmp::Ordering;
use std::f64::consts::PI;

use crate::lattice::Tau;
use crate::numerics::{
    divisor_sum, factorial, floor_ceil_frac, hurwitz_zeta, power_q_series, unit_exponential,
    CompensatedSum, ComplexValue, SeriesControl, SeriesResult, POLE_THRESHOLD,
};
use crate::{Error, Result};

/// `|x − round(x)|` below this puts `z` on a critical row.
pub const INTEGER_TOLERANCE: f64 = 1e-9;

/// Number of consecutive negligible rows that ends a scan.
const QUIET_ROWS: usize = 3;

const I: ComplexValue = ComplexValue::new(0.0, 1.0);

/// The row `c₀ = Im z / Im τ` on which `z − c₀τ` is real.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CriticalRow {
    pub c0: i64,
    /// `{z − c₀τ}`, in `(0, 1)`.
    pub a: f64,
}

/// Per-`(z, τ)` bookkeeping for the expansions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BranchContext {
    /// `Im z / Im τ`.
    pub x: f64,
    /// `Some` exactly when `δ = 1`.
    pub critical: Option<CriticalRow>,
    pub q_tau: ComplexValue,
    pub q_z: ComplexValue,
}

impl BranchContext {
    pub fn delta(&self) -> u8 {
        u8::from(self.critical.is_some())
    }

    /// First rows strictly below and strictly above `x`.
    fn first_rows(&self) -> (i64, i64) {
        match self.critical {
            Some(row) => (row.c0 - 1, row.c0 + 1),
            None => {
                let below = self.x.floor() as i64;
                (below, below + 1)
            }
        }
    }
}

pub fn branch_context(z: ComplexValue, tau: Tau, int_tol: f64) -> Result<BranchContext> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::Domain(format!("z must be finite, got {z}")));
    }
    let x = z.im / tau.im();
    let nearest = x.round();
    let critical = if (x - nearest).abs() < int_tol {
        let c0 = nearest as i64;
        let w = z - tau.get() * nearest;
        let a = floor_ceil_frac(w.re).frac;
        if a < POLE_THRESHOLD || 1.0 - a < POLE_THRESHOLD {
            return Err(Error::Pole {
                re: z.re,
                im: z.im,
                threshold: POLE_THRESHOLD,
            });
        }
        Some(CriticalRow { c0, a })
    } else {
        None
    };
    Ok(BranchContext {
        x,
        critical,
        q_tau: unit_exponential(tau.get())?,
        q_z: unit_exponential(z)?,
    })
}

/// Which side of `x` a row lies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Side {
    /// `c < x`: the expansion runs over `m ≥ 1` in `e(z − cτ)`.
    Below,
    /// `c > x`: the expansion runs over `m ≤ −1`, i.e. in `e(cτ − z)`.
    Above,
}

/// Scans one side outward until `QUIET_ROWS` consecutive rows are negligible.
fn scan_side(
    start: i64,
    side: Side,
    ctrl: &SeriesControl,
    row: &mut impl FnMut(i64, Side) -> Result<SeriesResult>,
) -> Result<Vec<(i64, SeriesResult)>> {
    let step = match side {
        Side::Below => -1,
        Side::Above => 1,
    };
    let mut rows = Vec::new();
    let mut partial = CompensatedSum::new();
    let mut quiet = 0;
    let mut c = start;
    while quiet < QUIET_ROWS {
        if rows.len() >= ctrl.max_terms() {
            return Err(Error::NonConvergence {
                max_terms: ctrl.max_terms(),
                est_error: rows
                    .last()
                    .map_or(f64::INFINITY, |(_, r): &(i64, SeriesResult)| r.value.norm()),
            });
        }
        let r = row(c, side)?;
        partial += r.value;
        if r.value.norm() + r.est_error < ctrl.tol() * partial.value().norm().max(1.0) {
            quiet += 1;
        } else {
            quiet = 0;
        }
        rows.push((c, r));
        c += step;
    }
    Ok(rows)
}

/// Sums `row(c)` over every `c` off the critical row, combined in order of
/// ascending `|c − x|` with rows below `x` first on ties.
fn sum_rows(
    ctx: &BranchContext,
    ctrl: &SeriesControl,
    mut row: impl FnMut(i64, Side) -> Result<SeriesResult>,
) -> Result<SeriesResult> {
    let (below_start, above_start) = ctx.first_rows();
    let below = scan_side(below_start, Side::Below, ctrl, &mut row)?;
    let above = scan_side(above_start, Side::Above, ctrl, &mut row)?;

    let dist = |c: i64| (c as f64 - ctx.x).abs();
    let mut acc = CompensatedSum::new();
    let mut est_error = 0.0;
    let mut terms_used = 0;
    let (mut i, mut j) = (0, 0);
    while i < below.len() || j < above.len() {
        let take_below = match (below.get(i), above.get(j)) {
            (Some(b), Some(a)) => dist(b.0).partial_cmp(&dist(a.0)) != Some(Ordering::Greater),
            (Some(_), None) => true,
            _ => false,
        };
        let r = if take_below {
            i += 1;
            below[i - 1].1
        } else {
            j += 1;
            above[j - 1].1
        };
        acc += r.value;
        est_error += r.est_error;
        terms_used += r.terms_used;
    }
    Ok(SeriesResult {
        value: acc.value(),
        est_error,
        terms_used,
    })
}

/// The row series `Σ_{mρ>0} sgn(m) m^{k−1} q_z^m q_τ^{−cm}`, with `ρ = Im(z − cτ)`.
fn signed_row(
    z: ComplexValue,
    tau: Tau,
    c: i64,
    side: Side,
    power: u32,
    ctrl: &SeriesControl,
) -> Result<SeriesResult> {
    let w = z - tau.get() * c as f64;
    match side {
        Side::Below => power_q_series(unit_exponential(w)?, power, ctrl),
        Side::Above => {
            // m = −n: sgn(m) m^{k−1} = (−1)^k n^{k−1}, with k − 1 = power
            let sign = if power % 2 == 1 { 1.0 } else { -1.0 };
            let s = power_q_series(unit_exponential(-w)?, power, ctrl)?;
            Ok(s.affine(ComplexValue::new(sign, 0.0), ComplexValue::new(0.0, 0.0)))
        }
    }
}

/// `δ·(ζ(k,a) + (−1)^k ζ(k,1−a)) + (−2πi)^k/(k−1)! Σ_{c≠x} Σ_{mρ>0} sgn(m) m^{k−1} q_z^m q_τ^{−cm}`,
/// which equals `Σ_λ (z − λ)^{−k}`.
fn inverse_power_lattice_sum(
    z: ComplexValue,
    tau: Tau,
    k: u32,
    ctrl: &SeriesControl,
) -> Result<(BranchContext, SeriesResult)> {
    let ctx = branch_context(z, tau, INTEGER_TOLERANCE)?;
    let prefactor = (-2.0 * PI * I).powu(k) / factorial(k - 1);
    let rows = sum_rows(&ctx, ctrl, |c, side| {
        signed_row(z, tau, c, side, k - 1, ctrl)
    })?;
    let mut total = rows.affine(prefactor, ComplexValue::new(0.0, 0.0));
    if let Some(row) = ctx.critical {
        let sign = if k.is_multiple_of(2) { 1.0 } else { -1.0 };
        total.value += hurwitz_zeta(k, row.a)? + sign * hurwitz_zeta(k, 1.0 - row.a)?;
    }
    Ok((ctx, total))
}

/// `℘_τ^{(k−2)}(z)` for `k ≥ 3` from its q-expansion.
pub fn wp_deriv_fourier(
    z: ComplexValue,
    tau: Tau,
    k: u32,
    ctrl: &SeriesControl,
) -> Result<SeriesResult> {
    if k < 3 {
        return Err(Error::Domain(format!(
            "derivative order needs k ≥ 3, got {k}"
        )));
    }
    let (_, s) = inverse_power_lattice_sum(z, tau, k, ctrl)?;
    let sign = if k.is_multiple_of(2) { 1.0 } else { -1.0 };
    Ok(s.affine(
        ComplexValue::new(sign * factorial(k - 1), 0.0),
        ComplexValue::new(0.0, 0.0),
    ))
}

/// `℘_τ(z)` from its q-expansion, with `G₂(τ)` from [`g2_fourier`].
pub fn wp_fourier(z: ComplexValue, tau: Tau, ctrl: &SeriesControl) -> Result<SeriesResult> {
    let (_, s) = inverse_power_lattice_sum(z, tau, 2, ctrl)?;
    let g2 = g2_fourier(tau, ctrl)?;
    Ok(SeriesResult {
        value: s.value - g2.value,
        est_error: s.est_error + g2.est_error,
        terms_used: s.terms_used + g2.terms_used,
    })
}

/// `Z_τ(z) = −tπi + δ·π cot(πa) − 2πi Σ_{c≠x} Σ_{mρ>0} sgn(m) q_z^m q_τ^{−cm} + z·G₂(τ)`.
pub fn zeta_fourier(z: ComplexValue, tau: Tau, ctrl: &SeriesControl) -> Result<SeriesResult> {
    let ctx = branch_context(z, tau, INTEGER_TOLERANCE)?;
    let rows = sum_rows(&ctx, ctrl, |c, side| signed_row(z, tau, c, side, 0, ctrl))?;
    let g2 = g2_fourier(tau, ctrl)?;
    let t = branch_t(&ctx) as f64;
    let mut value = -2.0 * PI * I * rows.value - t * PI * I + z * g2.value;
    if let Some(row) = ctx.critical {
        value += PI / (PI * row.a).tan();
    }
    Ok(SeriesResult {
        value,
        est_error: 2.0 * PI * rows.est_error + z.norm() * g2.est_error,
        terms_used: rows.terms_used + g2.terms_used,
    })
}

/// The `t` used by [`zeta_fourier`]: near-integral `x` taking the `δ = 1`
/// branch counts as exactly `c₀`.
pub fn branch_t(ctx: &BranchContext) -> i64 {
    match ctx.critical {
        Some(row) => 2 * row.c0,
        None => t_closed_form(ctx.x),
    }
}

/// `t = ⌊x⌋ + ⌈x⌉`.
pub fn t_closed_form(x: f64) -> i64 {
    let f = floor_ceil_frac(x);
    f.lower + f.upper
}

/// `t` tallied row by row: the row `e = 0` contributes `sgn x` unless `z`
/// is real, each `1 ≤ e < |x|` contributes `2 sgn x` (both `z ± eτ` lie on
/// the side of `z`), and for integral `|x|` the row `e = |x|` contributes
/// `sgn x` once (its partner is real).
pub fn t_by_counting(x: f64) -> i64 {
    if x == 0.0 {
        return 0;
    }
    let sign = if x > 0.0 { 1 } else { -1 };
    let size = x.abs();
    let mut t = sign;
    let mut e = 1i64;
    while (e as f64) < size {
        t += 2 * sign;
        e += 1;
    }
    if size.fract() == 0.0 {
        t += sign;
    }
    t
}

/// `G₂(τ) = π²/3 − 8π² Σ_{n≥1} σ₁(n) q_τ^n`.
///
/// Terms are bounded by `n²|q|^n`; the series stops after three consecutive
/// bounds below `tol · max(1, |value|)` past the peak of that bound.
pub fn g2_fourier(tau: Tau, ctrl: &SeriesControl) -> Result<SeriesResult> {
    let q = unit_exponential(tau.get())?;
    let ratio = q.norm();
    let scale = 8.0 * PI * PI;
    let constant = ComplexValue::new(PI * PI / 3.0, 0.0);
    let peak = if ratio > 0.0 { 2.0 / -ratio.ln() } else { 0.0 };
    let tail_ratio = |n: usize| {
        let n = n as f64;
        (((n + 1.0) / n).powi(2) * ratio).min(1.0 - f64::EPSILON)
    };

    let mut acc = CompensatedSum::new();
    let mut q_pow = ComplexValue::new(1.0, 0.0);
    let mut quiet = 0;
    let mut bound = 0.0;
    for n in 1..=ctrl.max_terms() {
        q_pow *= q;
        acc += q_pow * divisor_sum(n as u64)? as f64;
        bound = scale * (n as f64).powi(2) * q_pow.norm();
        let value = constant - scale * acc.value();
        if (n as f64) > peak && bound < ctrl.tol() * value.norm().max(1.0) {
            quiet += 1;
            if quiet == QUIET_ROWS {
                return Ok(SeriesResult {
                    value,
                    est_error: bound / (1.0 - tail_ratio(n)),
                    terms_used: n,
                });
            }
        } else {
            quiet = 0;
        }
    }
    Err(Error::NonConvergence {
        max_terms: ctrl.max_terms(),
        est_error: bound / (1.0 - tail_ratio(ctrl.max_terms())),
    })
}
