//! Scalar building blocks: `e(σ)`, integer parts, the cotangent family,
//! the Hurwitz zeta function, divisor sums and a tail-bounded q-series
//! accumulator.

mod cotangent;
mod hurwitz;
mod summation;

pub(crate) use cotangent::factorial;
pub use cotangent::{inverse_power_sum, pi_cot_pi};
pub use hurwitz::{hurwitz_zeta, HURWITZ_TERMS};
pub use summation::{CompensatedSum, NeumaierSum};

use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::{Error, Result};

/// The scalar type used throughout the crate.
pub type ComplexValue = Complex64;

/// Arguments closer than this to an integer are treated as poles of the
/// cotangent family.
pub const POLE_THRESHOLD: f64 = 1e-8;

/// Truncation policy for infinite series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesControl {
    tol: f64,
    max_terms: usize,
}

impl SeriesControl {
    pub const DEFAULT_TOL: f64 = 1e-12;
    pub const DEFAULT_MAX_TERMS: usize = 1_000_000;

    pub fn new(tol: f64, max_terms: usize) -> Result<Self> {
        if !(tol > 0.0 && tol.is_finite()) {
            return Err(Error::Domain(format!(
                "tolerance must be positive, got {tol}"
            )));
        }
        if max_terms == 0 {
            return Err(Error::Domain("max_terms must be at least 1".into()));
        }
        Ok(Self { tol, max_terms })
    }

    /// Default term budget with the given tolerance.
    pub fn with_tol(tol: f64) -> Result<Self> {
        Self::new(tol, Self::DEFAULT_MAX_TERMS)
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn max_terms(&self) -> usize {
        self.max_terms
    }
}

impl Default for SeriesControl {
    fn default() -> Self {
        Self {
            tol: Self::DEFAULT_TOL,
            max_terms: Self::DEFAULT_MAX_TERMS,
        }
    }
}

/// A truncated series value with its tail estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesResult {
    pub value: ComplexValue,
    /// Bound on the neglected tail under a geometric model.
    pub est_error: f64,
    pub terms_used: usize,
}

impl SeriesResult {
    pub fn exact(value: ComplexValue) -> Self {
        Self {
            value,
            est_error: 0.0,
            terms_used: 0,
        }
    }

    /// Applies an affine map `scale * value + shift`, scaling the error too.
    pub fn affine(self, scale: ComplexValue, shift: ComplexValue) -> Self {
        Self {
            value: scale * self.value + shift,
            est_error: scale.norm() * self.est_error,
            terms_used: self.terms_used,
        }
    }
}

/// `e(σ) = exp(2πiσ)`.
///
/// The real part of `σ` is reduced modulo 1 before exponentiation, so
/// `e(σ + n)` and `e(σ)` agree bit for bit whenever `σ + n` is exact.
pub fn unit_exponential(sigma: ComplexValue) -> Result<ComplexValue> {
    if !(sigma.re.is_finite() && sigma.im.is_finite()) {
        return Err(Error::Domain(format!("e(σ) needs finite σ, got {sigma}")));
    }
    let log_modulus = -TAU * sigma.im;
    if log_modulus > f64::MAX.ln() {
        return Err(Error::Overflow { im: sigma.im });
    }
    let phase = TAU * sigma.re.rem_euclid(1.0);
    Ok(ComplexValue::from_polar(log_modulus.exp(), phase))
}

/// Lower and upper integral values and fractional part of a real number.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FloorCeilFrac {
    pub lower: i64,
    pub upper: i64,
    /// `x − ⌊x⌋`, in `[0, 1)`.
    pub frac: f64,
}

pub fn floor_ceil_frac(x: f64) -> FloorCeilFrac {
    debug_assert!(x.is_finite());
    let lower = x.floor();
    FloorCeilFrac {
        lower: lower as i64,
        upper: x.ceil() as i64,
        frac: x - lower,
    }
}

/// Fails with [`Error::Pole`] when `w` is within [`POLE_THRESHOLD`] of an integer.
pub(crate) fn reject_integer(w: ComplexValue) -> Result<()> {
    let nearest = ComplexValue::new(w.re.round(), 0.0);
    if (w - nearest).norm() < POLE_THRESHOLD {
        return Err(Error::Pole {
            re: w.re,
            im: w.im,
            threshold: POLE_THRESHOLD,
        });
    }
    Ok(())
}

/// Sums `Σ_{m≥1} m^power · r^m` for `|r| < 1`.
///
/// Stops once three consecutive terms fall below `tol · max(1, |partial|)`
/// past the peak of `m^power |r|^m`. The error estimate is the last term
/// divided by `1 − ρ`, where `ρ` bounds the ratio of consecutive terms.
pub fn power_q_series(r: ComplexValue, power: u32, ctrl: &SeriesControl) -> Result<SeriesResult> {
    let ratio = r.norm();
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    if !(ratio < 1.0) {
        return Err(Error::Domain(format!(
            "q-series ratio must be below 1, got {ratio}"
        )));
    }
    if ratio == 0.0 {
        return Ok(SeriesResult::exact(ComplexValue::new(0.0, 0.0)));
    }
    let peak = f64::from(power) / -ratio.ln();
    let tail_ratio = |m: usize| {
        let m = m as f64;
        (((m + 1.0) / m).powi(power as i32) * ratio).min(1.0 - f64::EPSILON)
    };

    let mut acc = CompensatedSum::new();
    let mut r_pow = ComplexValue::new(1.0, 0.0);
    let mut small_run = 0;
    let mut last = 0.0;
    for m in 1..=ctrl.max_terms {
        r_pow *= r;
        let term = r_pow * (m as f64).powi(power as i32);
        acc += term;
        last = term.norm();
        let partial = acc.value();
        if (m as f64) > peak && last < ctrl.tol * partial.norm().max(1.0) {
            small_run += 1;
            if small_run == 3 {
                return Ok(SeriesResult {
                    value: partial,
                    est_error: last / (1.0 - tail_ratio(m)),
                    terms_used: m,
                });
            }
        } else {
            small_run = 0;
        }
    }
    Err(Error::NonConvergence {
        max_terms: ctrl.max_terms,
        est_error: last / (1.0 - tail_ratio(ctrl.max_terms)),
    })
}

/// Sum of the positive divisors of `n`.
pub fn divisor_sum(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::Domain("divisor_sum needs n ≥ 1".into()));
    }
    let mut total = 0;
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            total += d;
            let other = n / d;
            if other != d {
                total += other;
            }
        }
        d += 1;
    }
    Ok(total)
}
