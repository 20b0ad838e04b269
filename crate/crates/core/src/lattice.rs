//! Period lattices, normalized bases and the SL₂(ℤ) action on the upper
//! half-plane.

use std::ops::Mul;

use rand::Rng;

use crate::numerics::ComplexValue;
use crate::{Error, Result};

/// Relative size of `Im(ω₁/ω₂)` below which generators count as dependent.
pub const DEGENERACY_TOLERANCE: f64 = 1e-12;

/// A point of the upper half-plane ℋ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tau(ComplexValue);

impl Tau {
    pub fn new(value: ComplexValue) -> Result<Self> {
        if !(value.re.is_finite() && value.im.is_finite()) || value.im <= 0.0 {
            return Err(Error::Domain(format!(
                "τ must lie in the upper half-plane, got {value}"
            )));
        }
        Ok(Self(value))
    }

    /// The square-lattice point `τ = i`.
    pub fn i() -> Self {
        Self(ComplexValue::new(0.0, 1.0))
    }

    pub fn get(self) -> ComplexValue {
        self.0
    }

    pub fn re(self) -> f64 {
        self.0.re
    }

    pub fn im(self) -> f64 {
        self.0.im
    }
}

impl From<Tau> for ComplexValue {
    fn from(t: Tau) -> Self {
        t.0
    }
}

/// A rank-two lattice `ℤω₁ ⊕ ℤω₂`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Lattice {
    pub omega1: ComplexValue,
    pub omega2: ComplexValue,
}

impl Lattice {
    pub fn new(omega1: ComplexValue, omega2: ComplexValue) -> Self {
        Self { omega1, omega2 }
    }

    /// `L_τ = ℤτ ⊕ ℤ`.
    pub fn from_tau(tau: Tau) -> Self {
        Self::new(tau.get(), ComplexValue::new(1.0, 0.0))
    }

    pub fn point(&self, m1: i64, m2: i64) -> ComplexValue {
        self.omega1 * m1 as f64 + self.omega2 * m2 as f64
    }

    /// Orders the generators so that `ω₁/ω₂` lies in ℋ, swapping them if needed.
    pub fn normalize(&self) -> Result<NormalizedBasis> {
        if self.omega2.norm() == 0.0 || self.omega1.norm() == 0.0 {
            return Err(Error::DegenerateLattice);
        }
        let ratio = self.omega1 / self.omega2;
        if !(ratio.re.is_finite() && ratio.im.is_finite())
            || ratio.im.abs() <= DEGENERACY_TOLERANCE * ratio.norm()
        {
            return Err(Error::DegenerateLattice);
        }
        let (omega1, omega2, swapped) = if ratio.im > 0.0 {
            (self.omega1, self.omega2, false)
        } else {
            (self.omega2, self.omega1, true)
        };
        let tau = Tau::new(omega1 / omega2)?;
        Ok(NormalizedBasis {
            omega1,
            omega2,
            tau,
            swapped,
        })
    }

    /// The lattice `αL`.
    pub fn scale(&self, alpha: ComplexValue) -> Result<Lattice> {
        if alpha.norm() == 0.0 {
            return Err(Error::ZeroScale);
        }
        Ok(Self::new(alpha * self.omega1, alpha * self.omega2))
    }
}

/// Generators `(ω₁, ω₂)` with `τ = ω₁/ω₂ ∈ ℋ`, so that `L = ω₂ L_τ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormalizedBasis {
    pub omega1: ComplexValue,
    pub omega2: ComplexValue,
    pub tau: Tau,
    /// Whether the generators were exchanged relative to the source lattice.
    pub swapped: bool,
}

impl NormalizedBasis {
    /// Rewrites coordinates relative to the source lattice's generators as
    /// coordinates relative to this basis.
    pub fn coordinates_from_source(&self, m1: i64, m2: i64) -> (i64, i64) {
        if self.swapped {
            (m2, m1)
        } else {
            (m1, m2)
        }
    }

    pub fn lattice(&self) -> Lattice {
        Lattice::new(self.omega1, self.omega2)
    }
}

/// The lattice point `λ = cτ + d` of `L_τ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LatticePoint {
    pub c: i64,
    pub d: i64,
}

impl LatticePoint {
    pub fn new(c: i64, d: i64) -> Self {
        Self { c, d }
    }

    pub fn value(&self, tau: Tau) -> ComplexValue {
        tau.get() * self.c as f64 + self.d as f64
    }
}

/// An integer matrix `[[a, b], [c, d]]` with `ad − bc = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct UnimodularMatrix {
    a: i64,
    b: i64,
    c: i64,
    d: i64,
}

impl UnimodularMatrix {
    pub const IDENTITY: Self = Self {
        a: 1,
        b: 0,
        c: 0,
        d: 1,
    };
    /// `τ ↦ τ + 1`.
    pub const T: Self = Self {
        a: 1,
        b: 1,
        c: 0,
        d: 1,
    };
    /// `τ ↦ −1/τ`.
    pub const S: Self = Self {
        a: 0,
        b: -1,
        c: 1,
        d: 0,
    };

    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        let det = a * d - b * c;
        if det != 1 {
            return Err(Error::NotUnimodular { det });
        }
        Ok(Self { a, b, c, d })
    }

    pub fn entries(&self) -> [i64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn max_abs_entry(&self) -> i64 {
        self.entries().iter().map(|e| e.abs()).max().unwrap_or(0)
    }

    /// The automorphy factor `cτ + d`.
    pub fn automorphy_factor(&self, tau: Tau) -> ComplexValue {
        tau.get() * self.c as f64 + self.d as f64
    }

    /// `Mτ = (aτ + b)/(cτ + d)`.
    pub fn mobius(&self, tau: Tau) -> Tau {
        let t = tau.get();
        let value = (t * self.a as f64 + self.b as f64) / self.automorphy_factor(tau);
        // Im(Mτ) = Im τ / |cτ + d|² is positive for unimodular M.
        Tau(value)
    }

    /// Returns `(cτ + d, Mτ)` with `L_τ = (cτ + d)·L_{Mτ}` as point sets.
    pub fn lattice_relation(&self, tau: Tau) -> (ComplexValue, Tau) {
        (self.automorphy_factor(tau), self.mobius(tau))
    }

    /// A random word in `T` and `S` of length at most `max_len` whose
    /// product has all entries bounded by `max_entry` in absolute value.
    ///
    /// Words whose product exceeds the bound are resampled.
    pub fn random_word<R: Rng + ?Sized>(rng: &mut R, max_len: usize, max_entry: i64) -> Self {
        loop {
            let len = rng.gen_range(1..=max_len.max(1));
            let m = (0..len).fold(Self::IDENTITY, |acc, _| {
                if rng.gen_bool(0.5) {
                    acc * Self::T
                } else {
                    acc * Self::S
                }
            });
            if m.max_abs_entry() <= max_entry {
                return m;
            }
        }
    }
}

impl Mul for UnimodularMatrix {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        Self {
            a: self.a * rhs.a + self.b * rhs.c,
            b: self.a * rhs.b + self.b * rhs.d,
            c: self.c * rhs.a + self.d * rhs.c,
            d: self.c * rhs.b + self.d * rhs.d,
        }
    }
}
