//! Weierstrass elliptic functions on period lattices.
//!
//! Two independent engines evaluate ℘, its higher derivatives, the
//! Weierstrass Zeta function and the weight-two Eisenstein series G₂:
//!
//! * [`direct`] sums the defining lattice series in a fixed order
//!   (inner sum over `d`, outer sum over `c`, symmetric pairing);
//! * [`fourier`] evaluates the closed q-expansions in `q_z = e(z)` and
//!   `q_τ = e(τ)`, including the integer `t` that carries the constant
//!   `−πi` contributions of the Zeta expansion.
//!
//! [`periods`] builds the quasi-period map η, the Legendre relation and the
//! quasi-modular transformation of G₂ on top of the Fourier engine.

pub mod direct;
mod error;
pub mod fourier;
pub mod lattice;
pub mod numerics;
pub mod periods;

pub use error::{Error, Result};
pub use lattice::{Lattice, LatticePoint, NormalizedBasis, Tau, UnimodularMatrix};
pub use numerics::{ComplexValue, SeriesControl, SeriesResult};
