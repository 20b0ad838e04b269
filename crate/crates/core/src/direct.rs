//! Ordered, truncated summation of the defining lattice series.
//!
//! Every series is summed first over `d` (the `ω₂ = 1` direction) and then
//! over `c`. Inside a row the index `0` comes first, then the pairs
//! `(d, −d)`; rows are added as `c = 0`, then `(c, −c)`. This is the order
//! under which the conditionally convergent sums (G₂ and the Zeta series)
//! have their stated values.
//!
//! The inner sum over `d` is the one that must be complete before the
//! outer sum moves on, so each row `|d| ≤ d_max` is closed with the
//! integral of its summand beyond `d_max + ½` plus the first
//! Euler–Maclaurin (midpoint) correction. Rows themselves decay
//! exponentially in `|c|`, so the outer truncation at `c_max` is plain.
//! Without the closure a square box sums G₂ at `τ = i` to 0 instead of π.

use crate::lattice::{Lattice, Tau};
use crate::numerics::factorial;
use crate::numerics::{CompensatedSum, ComplexValue};
use crate::{Error, Result};

/// Points closer than this to a lattice point are rejected.
pub const DIRECT_POLE_THRESHOLD: f64 = 1e-6;

const ONE: ComplexValue = ComplexValue::new(1.0, 0.0);

/// Explicit cutoffs for the double sums: `|c| ≤ c_max`, `|d| ≤ d_max`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TruncationBox {
    c_max: u32,
    d_max: u32,
}

impl TruncationBox {
    pub fn new(c_max: u32, d_max: u32) -> Result<Self> {
        if c_max == 0 || d_max == 0 {
            return Err(Error::Domain(
                "truncation box needs c_max, d_max ≥ 1".into(),
            ));
        }
        Ok(Self { c_max, d_max })
    }

    pub fn square(n: u32) -> Result<Self> {
        Self::new(n, n)
    }

    pub fn c_max(&self) -> u32 {
        self.c_max
    }

    pub fn d_max(&self) -> u32 {
        self.d_max
    }
}

impl Default for TruncationBox {
    fn default() -> Self {
        Self {
            c_max: 500,
            d_max: 500,
        }
    }
}

/// `Σ_{|d|≤D} (u + dω)^{−k}` closed with the tail beyond `D + ½`.
fn power_row(
    u: ComplexValue,
    step: ComplexValue,
    k: u32,
    d_max: u32,
    skip_origin: bool,
) -> ComplexValue {
    debug_assert!(k >= 2);
    let k = k as i32;
    let mut acc = CompensatedSum::new();
    if !skip_origin {
        acc += u.powi(-k);
    }
    for d in 1..=d_max {
        let offset = step * f64::from(d);
        acc += (u + offset).powi(-k) + (u - offset).powi(-k);
    }
    let edge = step * (f64::from(d_max) + 0.5);
    let (hi, lo) = (u + edge, u - edge);
    let integral = (hi.powi(1 - k) - lo.powi(1 - k)) / (step * f64::from(k - 1));
    let midpoint = step * f64::from(k) * (lo.powi(-k - 1) - hi.powi(-k - 1)) / 24.0;
    acc += integral + midpoint;
    acc.value()
}

/// `1/u + Σ_{d=1}^{D} (1/(u + dω) + 1/(u − dω))` closed with its tail.
fn reciprocal_row(u: ComplexValue, step: ComplexValue, d_max: u32) -> ComplexValue {
    let mut acc = CompensatedSum::new();
    acc += u.inv();
    for d in 1..=d_max {
        let offset = step * f64::from(d);
        acc += (u + offset).inv() + (u - offset).inv();
    }
    let x = f64::from(d_max) + 0.5;
    let v = u / step;
    let integral = ((x - v).ln() - (x + v).ln()) / step;
    let edge = step * x;
    let midpoint = step * ((u - edge).powi(-2) - (u + edge).powi(-2)) / 24.0;
    acc += integral + midpoint;
    acc.value()
}

/// Adds `row(0)`, then `row(c) + row(−c)` for `c = 1..=c_max`.
fn sum_rows(c_max: u32, mut row: impl FnMut(i64) -> ComplexValue) -> ComplexValue {
    let mut acc = CompensatedSum::new();
    acc += row(0);
    for c in 1..=i64::from(c_max) {
        acc += row(c) + row(-c);
    }
    acc.value()
}

/// Distance from `z` to the nearest point of `L_τ`.
fn distance_to_lattice(z: ComplexValue, tau: ComplexValue) -> f64 {
    let x = z.im / tau.im;
    [x.floor(), x.ceil()]
        .into_iter()
        .map(|c| {
            let w = z - tau * c;
            (w - w.re.round()).norm()
        })
        .fold(f64::INFINITY, f64::min)
}

fn reject_near_lattice(z: ComplexValue, basis: &crate::NormalizedBasis) -> Result<()> {
    let dist = basis.omega2.norm() * distance_to_lattice(z / basis.omega2, basis.tau.get());
    #[allow(clippy::neg_cmp_op_on_partial_ord)] // NaN must fail
    if !(dist >= DIRECT_POLE_THRESHOLD) {
        return Err(Error::Pole {
            re: z.re,
            im: z.im,
            threshold: DIRECT_POLE_THRESHOLD,
        });
    }
    Ok(())
}

fn tau_basis(tau: Tau) -> crate::NormalizedBasis {
    crate::NormalizedBasis {
        omega1: tau.get(),
        omega2: ONE,
        tau,
        swapped: false,
    }
}

fn wp_rows(
    z: ComplexValue,
    omega1: ComplexValue,
    omega2: ComplexValue,
    bx: TruncationBox,
) -> ComplexValue {
    sum_rows(bx.c_max, |c| {
        let shift = omega1 * c as f64;
        power_row(z - shift, omega2, 2, bx.d_max, false)
            - power_row(shift, omega2, 2, bx.d_max, c == 0)
    })
}

/// `℘_τ(z) = 1/z² + Σ_{λ≠0} (1/(z − λ)² − 1/λ²)` by ordered summation.
pub fn wp_direct(z: ComplexValue, tau: Tau, bx: TruncationBox) -> Result<ComplexValue> {
    reject_near_lattice(z, &tau_basis(tau))?;
    Ok(wp_rows(z, tau.get(), ONE, bx))
}

/// `℘_L(z)` for an arbitrary lattice, summed over `cω₁ + dω₂` with the
/// inner sum along `ω₂` of the given basis.
pub fn wp_direct_lattice(
    z: ComplexValue,
    lattice: &Lattice,
    bx: TruncationBox,
) -> Result<ComplexValue> {
    reject_near_lattice(z, &lattice.normalize()?)?;
    Ok(wp_rows(z, lattice.omega1, lattice.omega2, bx))
}

/// `℘_τ^{(k−2)}(z) = (−1)^k (k−1)! Σ_λ (z − λ)^{−k}` for `k ≥ 3`.
pub fn wp_deriv_direct(
    z: ComplexValue,
    tau: Tau,
    k: u32,
    bx: TruncationBox,
) -> Result<ComplexValue> {
    if k < 3 {
        return Err(Error::Domain(format!(
            "derivative order needs k ≥ 3, got {k}"
        )));
    }
    reject_near_lattice(z, &tau_basis(tau))?;
    let t = tau.get();
    let s = sum_rows(bx.c_max, |c| {
        power_row(z - t * c as f64, ONE, k, bx.d_max, false)
    });
    let sign = if k.is_multiple_of(2) { 1.0 } else { -1.0 };
    Ok(s * (sign * factorial(k - 1)))
}

/// `Z_τ(z)` in the paired row order.
///
/// Of the three series making up `Z_τ`, the one in `Σ 1/λ` cancels term by
/// term under the pairing and is not summed; the one in `z/λ²` is
/// `z·G₂(τ)`, taken from [`g2_direct`] with the same box.
pub fn zeta_direct(z: ComplexValue, tau: Tau, bx: TruncationBox) -> Result<ComplexValue> {
    reject_near_lattice(z, &tau_basis(tau))?;
    let t = tau.get();
    let first = sum_rows(bx.c_max, |e| {
        reciprocal_row(z - t * e as f64, ONE, bx.d_max)
    });
    Ok(first + z * g2_direct(tau, bx))
}

/// `G₂(τ) = Σ_c Σ_{d, (c,d)≠(0,0)} (cτ + d)^{−2}`, inner sum over `d`.
pub fn g2_direct(tau: Tau, bx: TruncationBox) -> ComplexValue {
    let t = tau.get();
    sum_rows(bx.c_max, |c| {
        power_row(t * c as f64, ONE, 2, bx.d_max, c == 0)
    })
}

/// The same double series with the order exchanged: inner sum over `c`
/// (up to `c_max`), outer over `d` (up to `d_max`).
///
/// The two orders have different limits; this one tends to
/// `G₂(τ) − 2πi/τ`.
pub fn g2_direct_exchanged(tau: Tau, bx: TruncationBox) -> ComplexValue {
    let t = tau.get();
    sum_rows(bx.d_max, |d| {
        power_row(ComplexValue::new(d as f64, 0.0), t, 2, bx.c_max, d == 0)
    })
}
