//! Entropy functionals of phase-space distributions.
//!
//! Radial integrals are taken in `u = r^2`, where the area element is
//! `pi du`. With `w(u) = pi W`, normalization reads `int w du = 1` and
//! `h(W) = ln pi - int w ln w du`.

use std::f64::consts::{E, PI};

use crate::beamsplit::{beam_splitter_output, husimi_scaled_at_u, WignerGrid, DEFAULT_FOCK_CUTOFF};
use crate::error::{Error, Result};
use crate::fock::{even_density_entropy, marginal_density, marginal_entropy, marginal_half_width, wavefunctions, wigner_fock_all};
use crate::gaussian::{gaussian_beam_splitter, gaussian_wigner_entropy, GaussianState};
use crate::photonmix::{is_passive, PhotonMixture};
use crate::positivity::{positivity_report, RadialWigner};
use crate::quadrature::{decay_cutoff, integrate, uniform_breakpoints};

pub use crate::quadrature::QuadratureSpec;

/// Grid values in `[-GRID_CLIP, 0)` are treated as rounding noise.
pub const GRID_CLIP: f64 = 1e-9;

/// Largest `n` accepted by [`phase_space_sum_residual`].
pub const MAX_SUM_IDENTITY: usize = 30;

/// Order of a Wigner-Renyi entropy, `alpha > 0` (possibly infinite).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RenyiOrder(f64);

impl RenyiOrder {
    pub fn new(alpha: f64) -> Result<Self> {
        if alpha == 0.0 {
            return Err(Error::RenyiDivergent(alpha));
        }
        if !(alpha > 0.0) {
            return Err(Error::OutOfRange(format!("Renyi order {alpha}")));
        }
        Ok(Self(alpha))
    }

    pub fn infinity() -> Self {
        Self(f64::INFINITY)
    }

    pub fn alpha(&self) -> f64 {
        self.0
    }

    pub fn is_shannon(&self) -> bool {
        self.0 == 1.0
    }
}

impl std::str::FromStr for RenyiOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase();
        if t == "inf" || t == "infinity" {
            return Ok(Self::infinity());
        }
        let alpha: f64 = t
            .parse()
            .map_err(|_| Error::OutOfRange(format!("Renyi order '{s}'")))?;
        Self::new(alpha)
    }
}

/// Upper end of a radial integral in `u`. `g` bounds the integrand tail.
fn radial_extent<G: Fn(f64) -> f64>(g: G, n: usize, quad: &QuadratureSpec) -> f64 {
    if let Some(r) = quad.radial_cutoff {
        return r * r;
    }
    let fallback = 12.0 + (2.0 * n as f64).sqrt();
    let start = 2.0 * n as f64 + 1.0;
    decay_cutoff(g, start, 1.0, 0.01 * quad.abs_tol, 4.0 * fallback * fallback)
        .unwrap_or(fallback * fallback)
}

/// `int_0^U f(u) du` over unit-width starting cells.
fn radial_integral<F: Fn(f64) -> f64>(f: F, upper: f64, quad: &QuadratureSpec) -> Result<f64> {
    let breaks = uniform_breakpoints(0.0, upper, 1.0);
    let spec = QuadratureSpec {
        max_subdivisions: quad.max_subdivisions + breaks.len(),
        ..*quad
    };
    Ok(integrate(f, &breaks, &spec)?.value)
}

fn neg_w_ln_w(w: f64) -> f64 {
    if w > 0.0 {
        -w * w.ln()
    } else {
        0.0
    }
}

/// Wigner entropy of a Wigner-positive phase-invariant state.
pub fn wigner_entropy_radial(p: &PhotonMixture, quad: &QuadratureSpec) -> Result<f64> {
    quad.validate()?;
    positivity_report(p).into_result()?;
    let w = RadialWigner::new(p);
    let upper = radial_extent(|u| w.scaled_at_u(u).abs() * (u + 1.0), p.max_photon(), quad);
    let integral = radial_integral(|u| neg_w_ln_w(w.scaled_at_u(u)), upper, quad)?;
    Ok(PI.ln() + integral)
}

/// Wigner entropy of a sampled distribution by a Riemann sum.
pub fn wigner_entropy_grid(w: &WignerGrid) -> Result<f64> {
    let min = w.min_value();
    if min < -GRID_CLIP {
        return Err(Error::NegativeGrid(min));
    }
    let sum: f64 = w.values().iter().map(|v| neg_w_ln_w(*v)).sum();
    Ok(sum * w.cell_area())
}

/// Wigner-Renyi entropy `(1/(1-alpha)) ln int W^alpha`.
pub fn wigner_renyi(p: &PhotonMixture, order: RenyiOrder, quad: &QuadratureSpec) -> Result<f64> {
    let alpha = order.alpha();
    if order.is_shannon() {
        return wigner_entropy_radial(p, quad);
    }
    quad.validate()?;
    let report = positivity_report(p).into_result()?;
    if alpha.is_infinite() {
        return Ok(-report.max_value.ln());
    }
    let w = RadialWigner::new(p);
    let power = |u: f64| {
        let v = w.scaled_at_u(u);
        if v > 0.0 {
            v.powf(alpha)
        } else {
            0.0
        }
    };
    let upper = radial_extent(|u| power(u) * (u + 1.0), p.max_photon(), quad);
    let integral = radial_integral(power, upper, quad)?;
    Ok(((1.0 - alpha) * PI.ln() + integral.ln()) / (1.0 - alpha))
}

/// Wehrl entropy, the Shannon entropy of the Husimi function.
pub fn wehrl_entropy(p: &PhotonMixture, quad: &QuadratureSpec) -> Result<f64> {
    quad.validate()?;
    let q = |u: f64| husimi_scaled_at_u(p, u);
    let upper = radial_extent(|u| q(u) * (u + 1.0), p.max_photon(), quad);
    let integral = radial_integral(|u| neg_w_ln_w(q(u)), upper, quad)?;
    Ok(PI.ln() + integral)
}

/// `e^h / (2 pi e)`.
pub fn entropy_power(h: f64) -> f64 {
    h.exp() / (2.0 * PI * E)
}

/// Both sides of the Wigner entropy-power inequality
/// `N_out >= eta N_A + (1 - eta) N_B`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EpiReport {
    pub eta: f64,
    pub h_a: f64,
    pub h_b: f64,
    pub h_out: f64,
    pub n_out: f64,
    pub bound: f64,
}

impl EpiReport {
    fn from_entropies(eta: f64, h_a: f64, h_b: f64, h_out: f64) -> Self {
        Self {
            eta,
            h_a,
            h_b,
            h_out,
            n_out: entropy_power(h_out),
            bound: eta * entropy_power(h_a) + (1.0 - eta) * entropy_power(h_b),
        }
    }

    pub fn margin(&self) -> f64 {
        self.n_out - self.bound
    }

    pub fn holds(&self, slack: f64) -> bool {
        self.margin() >= -slack
    }
}

fn check_eta(eta: f64) -> Result<()> {
    if !(eta > 0.0 && eta < 1.0) {
        return Err(Error::EtaOutOfRange(eta));
    }
    Ok(())
}

/// EPI for Fock-diagonal inputs. The output stays Fock-diagonal, so its
/// entropy is computed radially; at `eta != 1/2` the total photon number is
/// limited by the two-mode cutoff.
pub fn check_epi(pa: &PhotonMixture, pb: &PhotonMixture, eta: f64, quad: &QuadratureSpec) -> Result<EpiReport> {
    check_eta(eta)?;
    let h_a = wigner_entropy_radial(pa, quad)?;
    let h_b = wigner_entropy_radial(pb, quad)?;
    let out = beam_splitter_output(pa, pb, eta, DEFAULT_FOCK_CUTOFF)?;
    let h_out = wigner_entropy_radial(&out, quad)?;
    Ok(EpiReport::from_entropies(eta, h_a, h_b, h_out))
}

/// EPI for sampled inputs, with the output obtained by phase-space
/// convolution.
pub fn check_epi_grid(wa: &WignerGrid, wb: &WignerGrid, eta: f64) -> Result<EpiReport> {
    let out = crate::beamsplit::convolve_beamsplitter(wa, wb, eta)?;
    Ok(EpiReport::from_entropies(
        eta,
        wigner_entropy_grid(wa)?,
        wigner_entropy_grid(wb)?,
        wigner_entropy_grid(&out)?,
    ))
}

/// EPI for Gaussian inputs in closed form.
pub fn check_epi_gaussian(a: &GaussianState, b: &GaussianState, eta: f64) -> Result<EpiReport> {
    check_eta(eta)?;
    let out = gaussian_beam_splitter(a, b, eta)?;
    Ok(EpiReport::from_entropies(
        eta,
        gaussian_wigner_entropy(a),
        gaussian_wigner_entropy(b),
        gaussian_wigner_entropy(&out),
    ))
}

/// `(h(W), 2 sum_k p_k h(rho_k))` for a passive state; the first is never
/// below the second.
pub fn passive_bound_check(p: &PhotonMixture, quad: &QuadratureSpec) -> Result<(f64, f64)> {
    if !is_passive(p) {
        let probs = p.probs();
        let index = probs.windows(2).position(|w| w[1] > w[0]).unwrap_or(0);
        return Err(Error::NotPassive {
            index,
            lower: probs[index],
            upper: probs[index + 1],
        });
    }
    let lhs = wigner_entropy_radial(p, quad)?;
    let mut rhs = 0.0;
    for (k, pk) in p.probs().iter().enumerate() {
        if *pk > 0.0 {
            rhs += 2.0 * pk * marginal_entropy(k, quad)?;
        }
    }
    Ok((lhs, rhs))
}

/// Shannon entropy of the `x` marginal `sum_k p_k rho_k(x)`.
pub fn mixture_marginal_entropy(p: &PhotonMixture, quad: &QuadratureSpec) -> Result<f64> {
    quad.validate()?;
    let n = p.max_photon();
    crate::fock::check_fock_index(n)?;
    let density = |x: f64| {
        wavefunctions(n, x)
            .iter()
            .zip(p.probs())
            .map(|(psi, pk)| pk * psi * psi)
            .sum::<f64>()
    };
    even_density_entropy(density, marginal_half_width(n), quad)
}

/// Largest `|sum_k W_k(x,p) - sum_k psi_k(x)^2 psi_{n-k}(p)^2|` over the
/// sample points, sums running over `k = 0..=n`.
pub fn phase_space_sum_residual(n: usize, samples: &[(f64, f64)]) -> Result<f64> {
    if n > MAX_SUM_IDENTITY {
        return Err(Error::OutOfRange(format!("n = {n} exceeds {MAX_SUM_IDENTITY}")));
    }
    let residual = samples
        .iter()
        .map(|&(x, q)| {
            let lhs: f64 = wigner_fock_all(n, x, q).iter().sum();
            let px = wavefunctions(n, x);
            let pq = wavefunctions(n, q);
            let rhs: f64 = (0..=n).map(|k| px[k].powi(2) * pq[n - k].powi(2)).sum();
            (lhs - rhs).abs()
        })
        .fold(0.0, f64::max);
    Ok(residual)
}

/// `points x points` lattice on `[-half_width, half_width]^2`.
pub fn square_samples(points: usize, half_width: f64) -> Vec<(f64, f64)> {
    let step = if points > 1 {
        2.0 * half_width / (points - 1) as f64
    } else {
        0.0
    };
    let axis: Vec<f64> = (0..points).map(|i| -half_width + i as f64 * step).collect();
    axis.iter()
        .flat_map(|x| axis.iter().map(move |q| (*x, *q)))
        .collect()
}

/// `ln pi + 1`, the entropy of every pure Gaussian state.
pub fn vacuum_entropy() -> f64 {
    PI.ln() + 1.0
}

/// `rho_n(x)` summed with weights, exposed for marginal checks.
pub fn mixture_marginal_density(p: &PhotonMixture, x: f64) -> f64 {
    p.probs()
        .iter()
        .enumerate()
        .map(|(k, pk)| pk * marginal_density(k, x))
        .sum()
}
