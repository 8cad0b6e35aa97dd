//! Single-mode Gaussian states and symplectic maps.
//!
//! Covariance convention: the vacuum has `cov = I/2`, matching
//! `W_0(x, p) = exp(-x^2 - p^2) / pi`.

use std::f64::consts::PI;

use nalgebra::{Matrix2, Vector2};
use rand::Rng;

use crate::error::{Error, Result};

const SYMMETRY_TOL: f64 = 1e-12;
const HEISENBERG_TOL: f64 = 1e-12;
const SYMPLECTIC_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GaussianState {
    mean: Vector2<f64>,
    cov: Matrix2<f64>,
}

impl GaussianState {
    /// Validates symmetry, positive definiteness and `det cov >= 1/4`.
    pub fn new(mean: Vector2<f64>, cov: Matrix2<f64>) -> Result<Self> {
        if mean.iter().chain(cov.iter()).any(|v| !v.is_finite()) {
            return Err(Error::InvalidGaussian("non-finite entries".into()));
        }
        let scale = cov.abs().max().max(1.0);
        if (cov[(0, 1)] - cov[(1, 0)]).abs() > SYMMETRY_TOL * scale {
            return Err(Error::InvalidGaussian(format!(
                "covariance not symmetric: {} vs {}",
                cov[(0, 1)],
                cov[(1, 0)]
            )));
        }
        let det = cov.determinant();
        if cov[(0, 0)] <= 0.0 || det <= 0.0 {
            return Err(Error::InvalidGaussian("covariance not positive definite".into()));
        }
        if det < 0.25 - HEISENBERG_TOL {
            return Err(Error::InvalidGaussian(format!(
                "det cov = {det} violates the uncertainty bound 1/4"
            )));
        }
        Ok(Self { mean, cov })
    }

    pub fn vacuum() -> Self {
        Self {
            mean: Vector2::zeros(),
            cov: Matrix2::identity() * 0.5,
        }
    }

    /// Thermal state with mean photon number `n_bar`.
    pub fn thermal(n_bar: f64) -> Result<Self> {
        if !(n_bar >= 0.0) {
            return Err(Error::InvalidGaussian(format!("mean photon number {n_bar}")));
        }
        Self::new(Vector2::zeros(), Matrix2::identity() * (n_bar + 0.5))
    }

    pub fn mean(&self) -> &Vector2<f64> {
        &self.mean
    }

    pub fn cov(&self) -> &Matrix2<f64> {
        &self.cov
    }

    pub fn det_cov(&self) -> f64 {
        self.cov.determinant()
    }

    /// `mu = 1 / (2 sqrt(det cov))`.
    pub fn purity(&self) -> f64 {
        0.5 / self.det_cov().sqrt()
    }
}

/// Affine phase-space map `(x, p) -> S (x, p) + d` with `det S = 1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SymplecticMap {
    matrix: Matrix2<f64>,
    displacement: Vector2<f64>,
}

fn omega() -> Matrix2<f64> {
    Matrix2::new(0.0, 1.0, -1.0, 0.0)
}

impl SymplecticMap {
    pub fn new(matrix: Matrix2<f64>, displacement: Vector2<f64>) -> Result<Self> {
        let defect = (matrix * omega() * matrix.transpose() - omega()).abs().max();
        if !(defect <= SYMPLECTIC_TOL) {
            return Err(Error::NonSymplectic(defect));
        }
        Ok(Self {
            matrix,
            displacement,
        })
    }

    pub fn identity() -> Self {
        Self {
            matrix: Matrix2::identity(),
            displacement: Vector2::zeros(),
        }
    }

    pub fn rotation(theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        Self {
            matrix: Matrix2::new(c, -s, s, c),
            displacement: Vector2::zeros(),
        }
    }

    /// `diag(e^s, e^{-s})`.
    pub fn squeeze(s: f64) -> Self {
        Self {
            matrix: Matrix2::new(s.exp(), 0.0, 0.0, (-s).exp()),
            displacement: Vector2::zeros(),
        }
    }

    pub fn displacement(d: Vector2<f64>) -> Self {
        Self {
            matrix: Matrix2::identity(),
            displacement: d,
        }
    }

    /// `self` applied after `inner`.
    pub fn compose(&self, inner: &SymplecticMap) -> SymplecticMap {
        SymplecticMap {
            matrix: self.matrix * inner.matrix,
            displacement: self.matrix * inner.displacement + self.displacement,
        }
    }

    /// Euler decomposition `R(phi) Z(s) R(theta)` plus a displacement, with
    /// `|s| <= max_squeeze`.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, max_squeeze: f64) -> Self {
        let theta = rng.random_range(0.0..2.0 * PI);
        let phi = rng.random_range(0.0..2.0 * PI);
        let s = rng.random_range(-max_squeeze..=max_squeeze);
        let d = Vector2::new(rng.random_range(-2.0..2.0), rng.random_range(-2.0..2.0));
        SymplecticMap::displacement(d)
            .compose(&SymplecticMap::rotation(phi))
            .compose(&SymplecticMap::squeeze(s))
            .compose(&SymplecticMap::rotation(theta))
    }

    pub fn matrix(&self) -> &Matrix2<f64> {
        &self.matrix
    }

    pub fn displacement_vector(&self) -> &Vector2<f64> {
        &self.displacement
    }
}

/// `c -> S c + d`, `cov -> S cov S^T`.
pub fn apply_symplectic(g: &GaussianState, m: &SymplecticMap) -> GaussianState {
    let cov = m.matrix * g.cov * m.matrix.transpose();
    GaussianState {
        mean: m.matrix * g.mean + m.displacement,
        // re-symmetrize rounding noise
        cov: (cov + cov.transpose()) * 0.5,
    }
}

/// `h(W) = ln(2 pi sqrt(det cov)) + 1 = ln(pi / mu) + 1`.
pub fn gaussian_wigner_entropy(g: &GaussianState) -> f64 {
    (2.0 * PI * g.det_cov().sqrt()).ln() + 1.0
}

/// Wigner-Renyi entropy of order `alpha` (`alpha = 1` gives the Wigner
/// entropy, `alpha = inf` gives `-ln max W`).
pub fn gaussian_renyi(g: &GaussianState, alpha: f64) -> Result<f64> {
    let base = (2.0 * PI * g.det_cov().sqrt()).ln();
    if !(alpha > 0.0) {
        return Err(Error::RenyiDivergent(alpha));
    }
    Ok(if alpha.is_infinite() {
        base
    } else if alpha == 1.0 {
        base + 1.0
    } else {
        base + alpha.ln() / (alpha - 1.0)
    })
}

/// Wehrl entropy: the Husimi function is the Wigner function smoothed by the
/// vacuum, i.e. a Gaussian with covariance `cov + I/2`.
pub fn gaussian_wehrl(g: &GaussianState) -> f64 {
    let smoothed = g.cov + Matrix2::identity() * 0.5;
    (2.0 * PI * smoothed.determinant().sqrt()).ln() + 1.0
}

/// Bivariate normal density with mean `c` and covariance `cov`.
pub fn gaussian_wigner(g: &GaussianState, x: f64, p: f64) -> f64 {
    let d = Vector2::new(x, p) - g.mean;
    let det = g.det_cov();
    let inv = Matrix2::new(g.cov[(1, 1)], -g.cov[(0, 1)], -g.cov[(1, 0)], g.cov[(0, 0)]) / det;
    let q = d.dot(&(inv * d));
    (-0.5 * q).exp() / (2.0 * PI * det.sqrt())
}

/// Output of a beam splitter of transmittance `eta` fed with two Gaussian
/// states (the second mode is traced out).
pub fn gaussian_beam_splitter(a: &GaussianState, b: &GaussianState, eta: f64) -> Result<GaussianState> {
    if !(eta > 0.0 && eta < 1.0) {
        return Err(Error::EtaOutOfRange(eta));
    }
    Ok(GaussianState {
        mean: a.mean * eta.sqrt() + b.mean * (1.0 - eta).sqrt(),
        cov: a.cov * eta + b.cov * (1.0 - eta),
    })
}
