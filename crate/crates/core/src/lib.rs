//! Wigner, Wigner-Renyi and Wehrl entropies of single-mode bosonic states.
//!
//! Phase-invariant states are described by their photon-number distribution
//! ([`PhotonMixture`]); Gaussian states by mean and covariance
//! ([`GaussianState`]). Quadratures are normalized so that the vacuum Wigner
//! function is `exp(-x^2 - p^2) / pi` and its entropy `ln pi + 1`.

#![allow(clippy::excessive_precision, clippy::neg_cmp_op_on_partial_ord)]

pub mod beamsplit;
pub mod cli;
pub mod entropy;
mod error;
pub mod fock;
pub mod gaussian;
pub mod photonmix;
pub mod polycore;
pub mod positivity;
pub mod quadrature;
pub mod sampling;

pub use error::{Error, Result};
pub use gaussian::GaussianState;
pub use photonmix::PhotonMixture;
pub use quadrature::QuadratureSpec;
