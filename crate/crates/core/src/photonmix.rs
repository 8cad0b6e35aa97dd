//! Phase-invariant states as photon-number distributions.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fock::MAX_FOCK;
use crate::polycore::{binomial_exact, log_factorial, MAX_EXACT_BINOMIAL};

/// Tolerance on `sum p_k = 1`.
pub const NORMALIZATION_TOL: f64 = 1e-12;

/// Tolerance on passivity violations `p_{k+1} - p_k`.
pub const PASSIVITY_TOL: f64 = 1e-14;

/// Largest total photon number accepted by [`sigma_coefficients`].
pub const MAX_SIGMA_PHOTONS: usize = MAX_EXACT_BINOMIAL;

/// Photon-number distribution `(p_0, ..., p_N)` of a Fock-diagonal state.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct PhotonMixture {
    probs: Vec<f64>,
}

impl PhotonMixture {
    /// Rejects negative or non-finite entries and sums off by more than
    /// [`NORMALIZATION_TOL`]; nothing is renormalized.
    pub fn new(probs: Vec<f64>) -> Result<Self> {
        if probs.is_empty() {
            return Err(Error::InvalidMixture("empty probability vector".into()));
        }
        if probs.len() > MAX_FOCK + 1 {
            return Err(Error::Overflow {
                requested: probs.len() - 1,
                limit: MAX_FOCK,
            });
        }
        if let Some((k, v)) = probs.iter().enumerate().find(|(_, v)| !v.is_finite() || **v < 0.0) {
            return Err(Error::InvalidMixture(format!("p[{k}] = {v}")));
        }
        let total: f64 = probs.iter().sum();
        if (total - 1.0).abs() > NORMALIZATION_TOL {
            return Err(Error::InvalidMixture(format!("probabilities sum to {total}")));
        }
        Ok(Self { probs })
    }

    /// Divides non-negative weights by their sum.
    pub fn normalized(weights: Vec<f64>) -> Result<Self> {
        let total: f64 = weights.iter().sum();
        if !(total > 0.0 && total.is_finite()) {
            return Err(Error::InvalidMixture(format!("weights sum to {total}")));
        }
        Self::new(weights.into_iter().map(|w| w / total).collect())
    }

    pub fn vacuum() -> Self {
        Self { probs: vec![1.0] }
    }

    pub fn fock(n: usize) -> Result<Self> {
        let mut probs = vec![0.0; n + 1];
        probs[n] = 1.0;
        Self::new(probs)
    }

    /// Geometric distribution with mean `n_bar`, truncated after
    /// `max_photon` and renormalized.
    pub fn thermal(n_bar: f64, max_photon: usize) -> Result<Self> {
        if !(n_bar >= 0.0) {
            return Err(Error::InvalidMixture(format!("mean photon number {n_bar}")));
        }
        let q = n_bar / (n_bar + 1.0);
        Self::normalized((0..=max_photon).map(|k| q.powi(k as i32)).collect())
    }

    /// Two-photon mixture `(1 - p1 - p2, p1, p2)`.
    pub fn two_photon(p1: f64, p2: f64) -> Result<Self> {
        let p0 = 1.0 - p1 - p2;
        // clamp rounding noise at the triangle edge
        let p0 = if p0 < 0.0 && p0 > -NORMALIZATION_TOL { 0.0 } else { p0 };
        Self::new(vec![p0, p1, p2])
    }

    /// Convex combination `sum_i w_i q_i`. Weights must be a probability
    /// vector.
    pub fn mix(components: &[(f64, &PhotonMixture)]) -> Result<Self> {
        let len = components.iter().map(|(_, q)| q.len()).max().unwrap_or(0);
        let mut probs = vec![0.0; len];
        for (w, q) in components {
            if !(*w >= 0.0) {
                return Err(Error::InvalidMixture(format!("mixing weight {w}")));
            }
            for (acc, p) in probs.iter_mut().zip(q.probs()) {
                *acc += w * p;
            }
        }
        Self::new(probs)
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }

    /// Highest photon number with a stored (possibly zero) entry.
    pub fn max_photon(&self) -> usize {
        self.probs.len() - 1
    }

    /// Highest photon number with non-zero probability.
    pub fn support_max(&self) -> usize {
        self.probs.iter().rposition(|p| *p > 0.0).unwrap_or(0)
    }

    pub fn mean_photon_number(&self) -> f64 {
        self.probs.iter().enumerate().map(|(k, p)| k as f64 * p).sum()
    }

    /// `Tr rho^2 = sum p_k^2`.
    pub fn purity(&self) -> f64 {
        self.probs.iter().map(|p| p * p).sum()
    }
}

impl TryFrom<Vec<f64>> for PhotonMixture {
    type Error = Error;

    fn try_from(probs: Vec<f64>) -> Result<Self> {
        Self::new(probs)
    }
}

impl From<PhotonMixture> for Vec<f64> {
    fn from(p: PhotonMixture) -> Self {
        p.probs
    }
}

/// `p_k >= p_{k+1}` for all `k`, up to [`PASSIVITY_TOL`].
pub fn is_passive(p: &PhotonMixture) -> bool {
    first_passivity_violation(p.probs()).is_none()
}

fn first_passivity_violation(probs: &[f64]) -> Option<usize> {
    probs.windows(2).position(|w| w[1] - w[0] > PASSIVITY_TOL)
}

/// Equiprobable mixture of `|0>, ..., |n>`.
pub fn extremal_passive(n: usize) -> PhotonMixture {
    PhotonMixture {
        probs: vec![1.0 / (n + 1) as f64; n + 1],
    }
}

/// Weights `e_k` of a passive state over the extremal passive states.
#[derive(Clone, Debug, PartialEq)]
pub struct PassiveDecomposition {
    weights: Vec<f64>,
}

impl PassiveDecomposition {
    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// `sum_k e_k eps_k` as a probability vector.
    pub fn recompose(&self) -> Vec<f64> {
        let n = self.weights.len();
        let mut probs = vec![0.0; n];
        // eps_k contributes e_k / (k+1) to every j <= k: accumulate from the top.
        let mut tail = 0.0;
        for k in (0..n).rev() {
            tail += self.weights[k] / (k + 1) as f64;
            probs[k] = tail;
        }
        probs
    }
}

/// `e_k = (k + 1)(p_k - p_{k+1})` with `p_{N+1} = 0`.
pub fn passive_decompose(p: &PhotonMixture) -> Result<PassiveDecomposition> {
    let probs = p.probs();
    if let Some(k) = first_passivity_violation(probs) {
        return Err(Error::NotPassive {
            index: k,
            lower: probs[k],
            upper: probs[k + 1],
        });
    }
    let weights = (0..probs.len())
        .map(|k| {
            let next = probs.get(k + 1).copied().unwrap_or(0.0);
            ((k + 1) as f64 * (probs[k] - next)).max(0.0)
        })
        .collect();
    Ok(PassiveDecomposition { weights })
}

/// Reduced output of a balanced beam splitter fed with `|m> (x) |n>`.
#[derive(Clone, Debug, PartialEq)]
pub struct SigmaState {
    pub m: usize,
    pub n: usize,
    pub coeffs: PhotonMixture,
}

/// Fock-diagonal coefficients of `sigma(m, n)`.
///
/// The closed-form triple sum factorizes: the `i` and `j` sums are the same
/// signed sum `K_z = sum_i (-1)^i C(m,i) C(n,z-i)`, so
/// `c_z = z! (m+n-z)! K_z^2 / (m! n! 2^{m+n})`. `K_z` is accumulated exactly
/// in 128-bit integers (every partial sum is bounded by `C(m+n, z)`), which
/// removes the cancellation of the signed sum entirely; the prefactor is
/// applied in log space.
pub fn sigma_coefficients(m: usize, n: usize) -> Result<SigmaState> {
    let total = m + n;
    if total > MAX_SIGMA_PHOTONS {
        return Err(Error::Overflow {
            requested: total,
            limit: MAX_SIGMA_PHOTONS,
        });
    }
    let log_norm = -log_factorial(m) - log_factorial(n) - total as f64 * std::f64::consts::LN_2;
    let probs = (0..=total)
        .map(|z| {
            let lo = z.saturating_sub(n);
            let hi = z.min(m);
            let k: i128 = (lo..=hi)
                .map(|i| {
                    let term = binomial_exact(m, i) * binomial_exact(n, z - i);
                    if i % 2 == 0 {
                        term
                    } else {
                        -term
                    }
                })
                .sum();
            if k == 0 {
                return 0.0;
            }
            let ln_k = (k.unsigned_abs() as f64).ln();
            (log_factorial(z) + log_factorial(total - z) + log_norm + 2.0 * ln_k).exp()
        })
        .collect();
    Ok(SigmaState {
        m,
        n,
        coeffs: PhotonMixture::new(probs)?,
    })
}

/// `eps_n = (1/(n+1)) sum_k sigma(k, n-k)`.
pub fn extremal_passive_from_sigmas(n: usize) -> Result<PhotonMixture> {
    let mut probs = vec![0.0; n + 1];
    for k in 0..=n {
        let s = sigma_coefficients(k, n - k)?;
        for (acc, c) in probs.iter_mut().zip(s.coeffs.probs()) {
            *acc += c;
        }
    }
    let scale = 1.0 / (n + 1) as f64;
    PhotonMixture::new(probs.into_iter().map(|p| p * scale).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_probs(p: &PhotonMixture, expected: &[f64], tol: f64) {
        assert_eq!(p.len(), expected.len(), "{:?}", p.probs());
        for (a, b) in p.probs().iter().zip(expected) {
            assert!((a - b).abs() <= tol, "{:?} vs {:?}", p.probs(), expected);
        }
    }

    /// Literal triple sum in floating point, as an independent route.
    fn sigma_triple_sum(m: usize, n: usize) -> Vec<f64> {
        let total = m + n;
        let c = |a: usize, b: usize| binomial_exact(a, b) as f64;
        let fact = |k: usize| log_factorial(k).exp();
        let pref = 1.0 / (fact(m) * fact(n) * 2f64.powi(total as i32));
        (0..=total)
            .map(|z| {
                let lo = z.saturating_sub(n);
                let hi = z.min(m);
                let mut s = 0.0;
                for i in lo..=hi {
                    for j in lo..=hi {
                        let sign = if (i + j) % 2 == 0 { 1.0 } else { -1.0 };
                        s += sign * c(m, i) * c(n, z - i) * c(m, j) * c(n, z - j);
                    }
                }
                pref * s * fact(z) * fact(total - z)
            })
            .collect()
    }

    #[test]
    fn construction_rejects_bad_vectors() {
        assert!(PhotonMixture::new(vec![]).is_err());
        assert!(PhotonMixture::new(vec![0.5, 0.6]).is_err());
        assert!(PhotonMixture::new(vec![1.1, -0.1]).is_err());
        assert!(PhotonMixture::new(vec![f64::NAN, 1.0]).is_err());
        assert!(PhotonMixture::new(vec![0.5, 0.5 + 1e-13]).is_ok());
        assert!(PhotonMixture::new(vec![0.5, 0.5 + 1e-11]).is_err());
        let json: std::result::Result<PhotonMixture, _> = serde_json::from_str("[0.7, 0.7]");
        assert!(json.is_err());
    }

    #[test]
    fn constructors() {
        assert_probs(&PhotonMixture::fock(2).unwrap(), &[0.0, 0.0, 1.0], 0.0);
        let th = PhotonMixture::thermal(1.0, 60).unwrap();
        assert!((th.mean_photon_number() - 1.0).abs() < 1e-15);
        assert!((PhotonMixture::two_photon(0.25, 0.5).unwrap().probs()[0] - 0.25).abs() < 1e-15);
        let mix = PhotonMixture::mix(&[
            (0.5, &PhotonMixture::vacuum()),
            (0.5, &PhotonMixture::fock(2).unwrap()),
        ])
        .unwrap();
        assert_probs(&mix, &[0.5, 0.0, 0.5], 0.0);
        assert_eq!(mix.support_max(), 2);
        assert!((mix.purity() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn passivity_examples() {
        assert!(is_passive(&PhotonMixture::new(vec![0.5, 0.5, 0.0]).unwrap()));
        assert!(!is_passive(&PhotonMixture::new(vec![0.5, 0.0, 0.5]).unwrap()));
        assert!(is_passive(&PhotonMixture::new(vec![1.0, 0.0, 0.0, 0.0]).unwrap()));
    }

    #[test]
    fn extremal_passive_examples() {
        assert_probs(&extremal_passive(0), &[1.0], 0.0);
        assert_probs(&extremal_passive(1), &[0.5, 0.5], 0.0);
        assert_probs(&extremal_passive(2), &[1.0 / 3.0; 3], 0.0);
    }

    #[test]
    fn passive_decompose_examples() {
        let d = passive_decompose(&PhotonMixture::new(vec![0.5, 0.5]).unwrap()).unwrap();
        assert_eq!(d.weights(), &[0.0, 1.0]);
        let d = passive_decompose(&PhotonMixture::new(vec![0.6, 0.3, 0.1]).unwrap()).unwrap();
        for (a, b) in d.weights().iter().zip([0.3, 0.4, 0.3]) {
            assert!((a - b).abs() < 1e-15);
        }
        for (a, b) in d.recompose().iter().zip([0.6, 0.3, 0.1]) {
            assert!((a - b).abs() < 1e-15);
        }
        let d = passive_decompose(&PhotonMixture::vacuum()).unwrap();
        assert_eq!(d.weights(), &[1.0]);
        let err = passive_decompose(&PhotonMixture::new(vec![0.5, 0.0, 0.5]).unwrap()).unwrap_err();
        assert!(matches!(err, Error::NotPassive { index: 1, .. }));
    }

    #[test]
    fn sigma_examples_are_exact_fractions() {
        assert_probs(&sigma_coefficients(1, 0).unwrap().coeffs, &[0.5, 0.5], 1e-15);
        assert_probs(&sigma_coefficients(1, 1).unwrap().coeffs, &[0.5, 0.0, 0.5], 1e-15);
        assert_probs(&sigma_coefficients(2, 0).unwrap().coeffs, &[0.25, 0.5, 0.25], 1e-15);
        assert_probs(&sigma_coefficients(0, 0).unwrap().coeffs, &[1.0], 0.0);
        // sigma(1,1) has an exact zero
        assert_eq!(sigma_coefficients(1, 1).unwrap().coeffs.probs()[1], 0.0);
    }

    #[test]
    fn sigma_matches_literal_triple_sum() {
        for m in 0..=10 {
            for n in 0..=10 {
                let fast = sigma_coefficients(m, n).unwrap();
                for (a, b) in fast.coeffs.probs().iter().zip(sigma_triple_sum(m, n)) {
                    assert!((a - b).abs() < 1e-12, "({m},{n}): {a} vs {b}");
                }
            }
        }
    }

    #[test]
    fn sigma_symmetric_and_normalized() {
        for m in 0..=30 {
            for n in 0..=(60 - m).min(30) {
                let a = sigma_coefficients(m, n).unwrap();
                let b = sigma_coefficients(n, m).unwrap();
                assert_eq!(a.coeffs, b.coeffs);
                let total: f64 = a.coeffs.probs().iter().sum();
                assert!((total - 1.0).abs() < 1e-12);
                assert_eq!(a.coeffs.len(), m + n + 1);
            }
        }
    }

    #[test]
    fn sigma_range_guard() {
        assert!(sigma_coefficients(64, 64).is_ok());
        let err = sigma_coefficients(65, 64).unwrap_err();
        assert!(matches!(err, Error::Overflow { requested: 129, .. }));
    }

    #[test]
    fn extremal_from_sigmas_examples() {
        assert_probs(&extremal_passive_from_sigmas(0).unwrap(), &[1.0], 0.0);
        assert_probs(&extremal_passive_from_sigmas(1).unwrap(), &[0.5, 0.5], 1e-15);
        assert_probs(&extremal_passive_from_sigmas(2).unwrap(), &[1.0 / 3.0; 3], 1e-15);
        for n in 0..=20 {
            let a = extremal_passive_from_sigmas(n).unwrap();
            assert_probs(&a, extremal_passive(n).probs(), 1e-12);
        }
    }
}
