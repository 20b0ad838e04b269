use thiserror::Error;

/// Failures reported by the evaluation routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The argument lies within the pole threshold of a singular point.
    #[error("argument {re}{im:+}i is within {threshold:e} of a pole")]
    Pole { re: f64, im: f64, threshold: f64 },

    /// A series reached `max_terms` before meeting its tolerance.
    #[error(
        "series did not reach tolerance within {max_terms} terms (last estimate {est_error:e})"
    )]
    NonConvergence { max_terms: usize, est_error: f64 },

    /// `e(σ)` is not representable in double precision.
    #[error("e(σ) overflows for Im σ = {im}")]
    Overflow { im: f64 },

    #[error("lattice generators are linearly dependent over the reals")]
    DegenerateLattice,

    #[error("scale factor must be non-zero")]
    ZeroScale,

    #[error("matrix has determinant {det}, expected 1")]
    NotUnimodular { det: i64 },

    /// An argument is outside the documented domain.
    #[error("{0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;
