//! The quasi-period map `η(λ) = Z(z + λ) − Z(z)`, the Legendre relation and
//! the quasi-modular transformation of G₂.
//!
//! On `L_τ` the map is `η_τ(cτ + d) = (cτ + d)G₂(τ) − 2πic`. A general
//! lattice is reduced to `L_τ` through a normalized basis, `L = ω₂ L_τ`,
//! and `η_{αL}(αλ) = α^{−1} η_L(λ)`.

use std::f64::consts::PI;

use crate::fourier::{g2_fourier, zeta_fourier};
use crate::lattice::{Lattice, Tau, UnimodularMatrix};
use crate::numerics::{ComplexValue, SeriesControl};
use crate::Result;

const TWO_PI_I: ComplexValue = ComplexValue::new(0.0, 2.0 * PI);

/// Tolerance used for the cached G₂ value.
pub const CACHE_TOL: f64 = 1e-13;

/// `η_τ` with `G₂(τ)` evaluated once.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuasiPeriodMap {
    tau: Tau,
    g2: ComplexValue,
}

impl QuasiPeriodMap {
    pub fn new(tau: Tau) -> Result<Self> {
        let g2 = g2_fourier(tau, &SeriesControl::with_tol(CACHE_TOL)?)?.value;
        Ok(Self { tau, g2 })
    }

    pub fn tau(&self) -> Tau {
        self.tau
    }

    pub fn g2(&self) -> ComplexValue {
        self.g2
    }

    /// `η_τ(cτ + d) = (cτ + d)G₂(τ) − 2πic`.
    pub fn eta(&self, c: i64, d: i64) -> ComplexValue {
        let lambda = self.tau.get() * c as f64 + d as f64;
        lambda * self.g2 - TWO_PI_I * c as f64
    }
}

/// `η_L(m1·ω₁ + m2·ω₂)` for the generators of `lattice` as given.
///
/// The coordinates are carried over to the normalized basis (exchanged if
/// normalization swapped the generators), then
/// `η_L(n1·ω₁' + n2·ω₂') = η_τ(n1τ + n2)/ω₂'`.
pub fn eta_general(lattice: &Lattice, m1: i64, m2: i64) -> Result<ComplexValue> {
    let basis = lattice.normalize()?;
    let (n1, n2) = basis.coordinates_from_source(m1, m2);
    let map = QuasiPeriodMap::new(basis.tau)?;
    Ok(map.eta(n1, n2) / basis.omega2)
}

/// `Z_τ(z + cτ + d) − Z_τ(z)` from the Fourier expansion.
pub fn eta_empirical(
    z: ComplexValue,
    tau: Tau,
    c: i64,
    d: i64,
    ctrl: &SeriesControl,
) -> Result<ComplexValue> {
    let shifted = z + tau.get() * c as f64 + d as f64;
    Ok(zeta_fourier(shifted, tau, ctrl)?.value - zeta_fourier(z, tau, ctrl)?.value)
}

/// `ω₁η_L(ω₂) − ω₂η_L(ω₁) − 2πi` on the normalized basis of `lattice`.
pub fn legendre_residual(lattice: &Lattice) -> Result<ComplexValue> {
    let basis = lattice.normalize()?;
    let map = QuasiPeriodMap::new(basis.tau)?;
    let eta1 = map.eta(1, 0) / basis.omega2;
    let eta2 = map.eta(0, 1) / basis.omega2;
    Ok(basis.omega1 * eta2 - basis.omega2 * eta1 - TWO_PI_I)
}

/// Predicted `G₂(Mτ) = (cτ + d)²G₂(τ) − 2πic(cτ + d)`.
pub fn g2_transform(m: UnimodularMatrix, tau: Tau, g2_at_tau: ComplexValue) -> ComplexValue {
    let [_, _, c, _] = m.entries();
    let factor = m.automorphy_factor(tau);
    factor * factor * g2_at_tau - TWO_PI_I * c as f64 * factor
}
