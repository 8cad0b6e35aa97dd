use thiserror::Error;

/// Errors raised by the phase-space toolkit.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid photon-number distribution: {0}")]
    InvalidMixture(String),

    #[error("state is not passive: p[{index}] = {lower} < p[{next}] = {upper}", next = index + 1)]
    NotPassive { index: usize, lower: f64, upper: f64 },

    #[error("state is not Wigner positive: min W = {min_value:.9e} at r = {argmin_r:.6}")]
    NotWignerPositive { min_value: f64, argmin_r: f64 },

    #[error("grid has negative values below tolerance: min = {0:.3e}")]
    NegativeGrid(f64),

    #[error("quadrature failed to converge: estimate {estimate:.12e}, error {error:.3e} after {subdivisions} subdivisions")]
    QuadratureNonconvergence {
        estimate: f64,
        error: f64,
        subdivisions: usize,
    },

    #[error("invalid Gaussian state: {0}")]
    InvalidGaussian(String),

    #[error("map is not symplectic: |S Omega S^T - Omega| = {0:.3e}")]
    NonSymplectic(f64),

    #[error("photon number {requested} exceeds the supported range (max {limit})")]
    Overflow { requested: usize, limit: usize },

    #[error("two-mode Fock space truncated: {requested} photons exceed cutoff {cutoff}")]
    Truncation { requested: usize, cutoff: usize },

    #[error("beam-splitter transmittance {0} outside (0, 1)")]
    EtaOutOfRange(f64),

    #[error("grid mismatch: {0}")]
    GridMismatch(String),

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("Renyi entropy of order {0} diverges for Wigner functions")]
    RenyiDivergent(f64),
}

pub type Result<T> = std::result::Result<T, Error>;
