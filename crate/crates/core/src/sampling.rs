//! Seeded generators of random phase-invariant states.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::photonmix::{sigma_coefficients, PhotonMixture};
use crate::positivity::positivity_report;

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn exponential<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    -(1.0 - rng.random::<f64>()).ln()
}

/// Random decreasing distribution with between 1 and `max_len` entries.
pub fn random_passive<R: Rng + ?Sized>(rng: &mut R, max_len: usize) -> PhotonMixture {
    let len = rng.random_range(1..=max_len.max(1));
    let mut w: Vec<f64> = (0..len).map(|_| exponential(rng)).collect();
    w.sort_by(|a, b| b.total_cmp(a));
    PhotonMixture::normalized(w).expect("positive weights")
}

/// Random convex combination of `components` beam-splitter states with
/// `m + n <= max_total`.
pub fn random_sigma_mixture<R: Rng + ?Sized>(rng: &mut R, max_total: usize, components: usize) -> PhotonMixture {
    let mut parts = Vec::with_capacity(components);
    let mut weights = Vec::with_capacity(components);
    for _ in 0..components.max(1) {
        let total = rng.random_range(0..=max_total);
        let m = rng.random_range(0..=total);
        parts.push(sigma_coefficients(m, total - m).expect("small photon numbers").coeffs);
        weights.push(exponential(rng));
    }
    let sum: f64 = weights.iter().sum();
    let pairs: Vec<(f64, &PhotonMixture)> = weights.iter().map(|w| w / sum).zip(parts.iter()).collect();
    PhotonMixture::mix(&pairs).expect("convex combination")
}

/// Random distribution with at most `max_len` entries and geometrically
/// damped weights. Not necessarily Wigner positive.
pub fn random_mixture<R: Rng + ?Sized>(rng: &mut R, max_len: usize) -> PhotonMixture {
    let len = rng.random_range(1..=max_len.max(1));
    let w: Vec<f64> = (0..len)
        .map(|k| exponential(rng) * 0.6f64.powi(k as i32))
        .collect();
    PhotonMixture::normalized(w).expect("positive weights")
}

/// Rejection sampling of a Wigner-positive [`random_mixture`].
pub fn random_positive_mixture<R: Rng + ?Sized>(rng: &mut R, max_len: usize, attempts: usize) -> Option<PhotonMixture> {
    (0..attempts)
        .map(|_| random_mixture(rng, max_len))
        .find(|p| positivity_report(p).is_positive)
}

/// Uniform point `(p1, p2)` of the triangle `p1, p2 >= 0`, `p1 + p2 <= 1`.
pub fn two_photon_sample<R: Rng + ?Sized>(rng: &mut R) -> (f64, f64) {
    let (a, b): (f64, f64) = (rng.random(), rng.random());
    if a + b > 1.0 {
        (1.0 - a, 1.0 - b)
    } else {
        (a, b)
    }
}
