//! Beam splitters in phase space and in the two-mode Fock basis.
//!
//! Mode convention: `a^dagger -> sqrt(eta) a^dagger - sqrt(1-eta) b^dagger`,
//! `b^dagger -> sqrt(1-eta) a^dagger + sqrt(eta) b^dagger`, output taken on
//! mode `a`. At `eta = 1` the beam splitter is transparent for mode `a`.
//! In phase space the reduced output is the convolution of the two input
//! Wigner functions rescaled by `sqrt(eta)` and `sqrt(1-eta)`.

use std::f64::consts::PI;
use std::fmt::Write as _;
use std::sync::Arc;

use rayon::prelude::*;
use rustfft::num_complex::Complex64;
use rustfft::{Fft, FftPlanner};

use crate::entropy::{wehrl_entropy, wigner_entropy_radial};
use crate::error::{Error, Result};
use crate::gaussian::{gaussian_wigner, GaussianState};
use crate::photonmix::{sigma_coefficients, PhotonMixture};
use crate::polycore::log_factorial;
use crate::positivity::radial_wigner;
use crate::quadrature::QuadratureSpec;

/// Default half-width of phase-space grids.
pub const DEFAULT_EXTENT: f64 = 8.0;

/// Default points per axis of phase-space grids.
pub const DEFAULT_RESOLUTION: usize = 512;

/// Default two-mode Fock cutoff of the brute-force oracle.
pub const DEFAULT_FOCK_CUTOFF: usize = 24;

/// Tolerance on `|eta - 1/2|` below which the closed-form beam-splitter
/// coefficients are used.
const BALANCED_TOL: f64 = 1e-15;

/// Wigner function sampled on the square `[-extent, extent]^2`, row-major
/// with rows indexed by `x` and columns by `p`.
#[derive(Clone, Debug, PartialEq)]
pub struct WignerGrid {
    extent: f64,
    resolution: usize,
    values: Vec<f64>,
}

impl WignerGrid {
    pub fn new(extent: f64, resolution: usize, values: Vec<f64>) -> Result<Self> {
        if !(extent > 0.0 && extent.is_finite()) {
            return Err(Error::GridMismatch(format!("extent {extent}")));
        }
        if resolution < 2 {
            return Err(Error::GridMismatch(format!("resolution {resolution}")));
        }
        if values.len() != resolution * resolution {
            return Err(Error::GridMismatch(format!(
                "{} values for a {resolution}x{resolution} grid",
                values.len()
            )));
        }
        Ok(Self {
            extent,
            resolution,
            values,
        })
    }

    pub fn from_fn<F>(extent: f64, resolution: usize, f: F) -> Result<Self>
    where
        F: Fn(f64, f64) -> f64 + Sync,
    {
        let h = 2.0 * extent / (resolution - 1) as f64;
        let values = (0..resolution * resolution)
            .into_par_iter()
            .map(|idx| {
                let (i, j) = (idx / resolution, idx % resolution);
                f(-extent + i as f64 * h, -extent + j as f64 * h)
            })
            .collect();
        Self::new(extent, resolution, values)
    }

    pub fn from_mixture(p: &PhotonMixture, extent: f64, resolution: usize) -> Result<Self> {
        Self::from_fn(extent, resolution, |x, q| radial_wigner(p, (x * x + q * q).sqrt()))
    }

    pub fn from_gaussian(g: &GaussianState, extent: f64, resolution: usize) -> Result<Self> {
        Self::from_fn(extent, resolution, |x, p| gaussian_wigner(g, x, p))
    }

    pub fn extent(&self) -> f64 {
        self.extent
    }

    pub fn resolution(&self) -> usize {
        self.resolution
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn spacing(&self) -> f64 {
        2.0 * self.extent / (self.resolution - 1) as f64
    }

    pub fn cell_area(&self) -> f64 {
        self.spacing().powi(2)
    }

    pub fn coordinate(&self, i: usize) -> f64 {
        -self.extent + i as f64 * self.spacing()
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.resolution + j]
    }

    /// Riemann sum of the values times the cell area.
    pub fn normalization(&self) -> f64 {
        self.values.iter().sum::<f64>() * self.cell_area()
    }

    pub fn min_value(&self) -> f64 {
        self.values.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn max_value(&self) -> f64 {
        self.values.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }

    /// Six-point Lagrange interpolation per axis; the function is taken as
    /// zero outside the grid.
    pub fn interpolate(&self, x: f64, p: f64) -> f64 {
        let (ix, wx) = lagrange_stencil(x, self.extent, self.spacing());
        let (ip, wp) = lagrange_stencil(p, self.extent, self.spacing());
        let n = self.resolution as isize;
        let mut acc = 0.0;
        for (a, wa) in wx.iter().enumerate() {
            let i = ix + a as isize;
            if i < 0 || i >= n || *wa == 0.0 {
                continue;
            }
            let row = &self.values[(i as usize) * self.resolution..];
            for (b, wb) in wp.iter().enumerate() {
                let j = ip + b as isize;
                if j < 0 || j >= n {
                    continue;
                }
                acc += wa * wb * row[j as usize];
            }
        }
        acc
    }

    /// CSV: a header line `extent,resolution`, their values, then one line
    /// per `x` row.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str("extent,resolution\n");
        let _ = writeln!(out, "{},{}", crate::cli::format_number(self.extent), self.resolution);
        for row in self.values.chunks(self.resolution) {
            let line: Vec<String> = row.iter().map(|v| crate::cli::format_number(*v)).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        let bad = |msg: &str| Error::GridMismatch(format!("grid CSV: {msg}"));
        let mut lines = text.lines().filter(|l| !l.trim().is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or_else(|| bad("missing header"))?;
        if header.trim() != "extent,resolution" {
            return Err(bad("header must be 'extent,resolution'"));
        }
        let dims = lines.next().ok_or_else(|| bad("missing dimensions"))?;
        let mut parts = dims.split(',');
        let extent: f64 = parts
            .next()
            .and_then(|s| s.trim().parse().ok())
            .ok_or_else(|| bad("extent"))?;
        let resolution: usize = parts
            .next()
            .and_then(|s| s.trim().parse().ok())
            .ok_or_else(|| bad("resolution"))?;
        let mut values = Vec::with_capacity(resolution * resolution);
        for line in lines {
            for field in line.split(',') {
                values.push(field.trim().parse::<f64>().map_err(|_| bad("value"))?);
            }
        }
        Self::new(extent, resolution, values)
    }

    fn check_compatible(&self, other: &WignerGrid) -> Result<()> {
        if self.resolution != other.resolution || (self.extent - other.extent).abs() > 1e-12 * self.extent {
            return Err(Error::GridMismatch(format!(
                "({}, {}) vs ({}, {})",
                self.extent, self.resolution, other.extent, other.resolution
            )));
        }
        Ok(())
    }
}

/// First stencil index and six Lagrange weights around coordinate `u`.
fn lagrange_stencil(u: f64, extent: f64, h: f64) -> (isize, [f64; 6]) {
    let s = (u + extent) / h;
    let base = s.floor();
    let f = s - base;
    let mut w = [0.0; 6];
    for (a, wa) in w.iter_mut().enumerate() {
        let xa = a as f64 - 2.0;
        let mut prod = 1.0;
        for b in 0..6 {
            if b != a {
                let xb = b as f64 - 2.0;
                prod *= (f - xb) / (xa - xb);
            }
        }
        *wa = prod;
    }
    (base as isize - 2, w)
}

fn check_eta_open(eta: f64) -> Result<()> {
    if !(eta > 0.0 && eta < 1.0) {
        return Err(Error::EtaOutOfRange(eta));
    }
    Ok(())
}

/// Rescaled inputs of the phase-space convolution: `A'(y) = W_A(y/sqrt(eta))/eta`
/// on the output lattice and `B'(z) = W_B(z/sqrt(1-eta))/(1-eta)` on the
/// `2n - 1` lattice offsets `z = k h`.
fn rescaled_inputs(wa: &WignerGrid, wb: &WignerGrid, eta: f64) -> (Vec<f64>, Vec<f64>) {
    let n = wa.resolution;
    let h = wa.spacing();
    let (sa, sb) = (eta.sqrt(), (1.0 - eta).sqrt());
    let a: Vec<f64> = (0..n * n)
        .into_par_iter()
        .map(|idx| {
            let (i, j) = (idx / n, idx % n);
            wa.interpolate(wa.coordinate(i) / sa, wa.coordinate(j) / sa) / eta
        })
        .collect();
    let m = 2 * n - 1;
    let b: Vec<f64> = (0..m * m)
        .into_par_iter()
        .map(|idx| {
            let (i, j) = (idx / m, idx % m);
            let zx = (i as f64 - (n - 1) as f64) * h;
            let zp = (j as f64 - (n - 1) as f64) * h;
            wb.interpolate(zx / sb, zp / sb) / (1.0 - eta)
        })
        .collect();
    (a, b)
}

/// Reduced output Wigner function of a beam splitter fed with the product of
/// the two inputs, on the same grid. Uses a zero-padded 2D FFT.
pub fn convolve_beamsplitter(wa: &WignerGrid, wb: &WignerGrid, eta: f64) -> Result<WignerGrid> {
    check_eta_open(eta)?;
    wa.check_compatible(wb)?;
    let n = wa.resolution;
    let m = 2 * n - 1;
    let (a, b) = rescaled_inputs(wa, wb, eta);
    let size = 3 * n;
    let mut fa = vec![Complex64::new(0.0, 0.0); size * size];
    let mut fb = vec![Complex64::new(0.0, 0.0); size * size];
    for i in 0..n {
        for j in 0..n {
            fa[i * size + j].re = a[i * n + j];
        }
    }
    for i in 0..m {
        for j in 0..m {
            fb[i * size + j].re = b[i * m + j];
        }
    }
    let mut planner = FftPlanner::new();
    let forward = planner.plan_fft_forward(size);
    let inverse = planner.plan_fft_inverse(size);
    fft2d(&mut fa, size, &forward);
    fft2d(&mut fb, size, &forward);
    fa.par_iter_mut().zip(fb.par_iter()).for_each(|(x, y)| *x *= y);
    fft2d(&mut fa, size, &inverse);
    let scale = wa.cell_area() / (size * size) as f64;
    let mut values = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..n {
            values[i * n + j] = fa[(i + n - 1) * size + (j + n - 1)].re * scale;
        }
    }
    WignerGrid::new(wa.extent, n, values)
}

/// Same as [`convolve_beamsplitter`] by direct `O(n^4)` summation; a
/// reference for small grids.
pub fn convolve_beamsplitter_direct(wa: &WignerGrid, wb: &WignerGrid, eta: f64) -> Result<WignerGrid> {
    check_eta_open(eta)?;
    wa.check_compatible(wb)?;
    let n = wa.resolution;
    let m = 2 * n - 1;
    let (a, b) = rescaled_inputs(wa, wb, eta);
    let area = wa.cell_area();
    let values = (0..n * n)
        .into_par_iter()
        .map(|idx| {
            let (i, j) = (idx / n, idx % n);
            let mut acc = 0.0;
            for k in 0..n {
                let bi = i + n - 1 - k;
                for l in 0..n {
                    acc += a[k * n + l] * b[bi * m + (j + n - 1 - l)];
                }
            }
            acc * area
        })
        .collect();
    WignerGrid::new(wa.extent, n, values)
}

fn fft2d(data: &mut [Complex64], size: usize, fft: &Arc<dyn Fft<f64>>) {
    data.par_chunks_mut(size).for_each(|row| fft.process(row));
    let mut transposed = vec![Complex64::new(0.0, 0.0); size * size];
    transpose(data, &mut transposed, size);
    transposed.par_chunks_mut(size).for_each(|col| fft.process(col));
    transpose(&transposed, data, size);
}

fn transpose(src: &[Complex64], dst: &mut [Complex64], size: usize) {
    dst.par_chunks_mut(size).enumerate().for_each(|(j, row)| {
        for (i, v) in row.iter_mut().enumerate() {
            *v = src[i * size + j];
        }
    });
}

/// Husimi function of a Fock-diagonal state:
/// `Q(r) = (1/pi) e^{-r^2} sum_k p_k r^{2k} / k!`.
pub fn husimi_phase_invariant(p: &PhotonMixture, r: f64) -> f64 {
    husimi_scaled_at_u(p, r * r) / PI
}

/// `pi Q` as a function of `u = r^2`.
pub(crate) fn husimi_scaled_at_u(p: &PhotonMixture, u: f64) -> f64 {
    if u == 0.0 {
        return p.probs()[0];
    }
    let ln_u = u.ln();
    p.probs()
        .iter()
        .enumerate()
        .filter(|(_, pk)| **pk > 0.0)
        .map(|(k, pk)| pk * (k as f64 * ln_u - u - log_factorial(k)).exp())
        .sum()
}

/// Pure two-mode state in the Fock basis, amplitudes indexed by `(n_a, n_b)`
/// with `n_a, n_b <= cutoff`. Beam splitters are real, so real amplitudes
/// suffice for Fock inputs.
#[derive(Clone, Debug, PartialEq)]
pub struct TwoModeFockState {
    cutoff: usize,
    amplitudes: Vec<f64>,
}

impl TwoModeFockState {
    pub fn product_fock(m: usize, n: usize, cutoff: usize) -> Result<Self> {
        if m > cutoff || n > cutoff {
            return Err(Error::Truncation {
                requested: m.max(n),
                cutoff,
            });
        }
        let dim = cutoff + 1;
        let mut amplitudes = vec![0.0; dim * dim];
        amplitudes[m * dim + n] = 1.0;
        Ok(Self { cutoff, amplitudes })
    }

    pub fn amplitude(&self, na: usize, nb: usize) -> f64 {
        self.amplitudes[na * (self.cutoff + 1) + nb]
    }

    pub fn norm_squared(&self) -> f64 {
        self.amplitudes.iter().map(|a| a * a).sum()
    }

    /// Applies the beam splitter by expanding every populated `|i, j>` as
    /// `(a^dagger)^i (b^dagger)^j / sqrt(i! j!)` with transformed creation
    /// operators. Fails if the output needs more than `cutoff` photons.
    pub fn apply_beam_splitter(&self, eta: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&eta) {
            return Err(Error::EtaOutOfRange(eta));
        }
        let dim = self.cutoff + 1;
        let (t, r) = (eta.sqrt(), (1.0 - eta).sqrt());
        let mut out = vec![0.0; dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                let amp = self.amplitude(i, j);
                if amp == 0.0 {
                    continue;
                }
                if i + j > self.cutoff {
                    return Err(Error::Truncation {
                        requested: i + j,
                        cutoff: self.cutoff,
                    });
                }
                // polynomial coefficients over monomials (a^dagger)^x (b^dagger)^y
                let mut poly = vec![0.0; dim * dim];
                poly[0] = amp * (-0.5 * (log_factorial(i) + log_factorial(j))).exp();
                let mut degree = 0;
                for _ in 0..i {
                    multiply_linear(&mut poly, dim, degree, t, -r);
                    degree += 1;
                }
                for _ in 0..j {
                    multiply_linear(&mut poly, dim, degree, r, t);
                    degree += 1;
                }
                for x in 0..=degree {
                    let y = degree - x;
                    let c = poly[x * dim + y];
                    if c != 0.0 {
                        out[x * dim + y] += c * (0.5 * (log_factorial(x) + log_factorial(y))).exp();
                    }
                }
            }
        }
        Ok(Self {
            cutoff: self.cutoff,
            amplitudes: out,
        })
    }

    /// Photon-number distribution of mode `a` after tracing out mode `b`.
    pub fn reduced_distribution_a(&self) -> Vec<f64> {
        let dim = self.cutoff + 1;
        (0..dim)
            .map(|i| (0..dim).map(|j| self.amplitude(i, j).powi(2)).sum())
            .collect()
    }
}

/// Multiply a homogeneous polynomial of the given degree by
/// `ca a^dagger + cb b^dagger`.
fn multiply_linear(poly: &mut [f64], dim: usize, degree: usize, ca: f64, cb: f64) {
    let mut next = vec![0.0; poly.len()];
    for x in 0..=degree {
        let y = degree - x;
        let c = poly[x * dim + y];
        if c == 0.0 {
            continue;
        }
        next[(x + 1) * dim + y] += ca * c;
        next[x * dim + y + 1] += cb * c;
    }
    poly.copy_from_slice(&next);
}

/// Brute-force reduced output distribution of a beam splitter fed with
/// `|m> (x) |n>`, with the default cutoff.
pub fn fock_oracle_sigma(m: usize, n: usize, eta: f64) -> Result<PhotonMixture> {
    fock_oracle_sigma_with_cutoff(m, n, eta, DEFAULT_FOCK_CUTOFF)
}

pub fn fock_oracle_sigma_with_cutoff(m: usize, n: usize, eta: f64, cutoff: usize) -> Result<PhotonMixture> {
    if m + n > cutoff {
        return Err(Error::Truncation {
            requested: m + n,
            cutoff,
        });
    }
    let state = TwoModeFockState::product_fock(m, n, cutoff)?.apply_beam_splitter(eta)?;
    let mut dist = state.reduced_distribution_a();
    dist.truncate(m + n + 1);
    PhotonMixture::new(dist)
}

/// Reduced output distribution for Fock-diagonal inputs, by linearity over
/// pairs of Fock inputs. Uses the closed form at `eta = 1/2` and the
/// brute-force expansion (bounded by `cutoff` total photons) otherwise.
pub fn beam_splitter_output(
    pa: &PhotonMixture,
    pb: &PhotonMixture,
    eta: f64,
    cutoff: usize,
) -> Result<PhotonMixture> {
    if !(0.0..=1.0).contains(&eta) {
        return Err(Error::EtaOutOfRange(eta));
    }
    let (na, nb) = (pa.support_max(), pb.support_max());
    let balanced = (eta - 0.5).abs() <= BALANCED_TOL;
    if !balanced && na + nb > cutoff {
        return Err(Error::Truncation {
            requested: na + nb,
            cutoff,
        });
    }
    let mut probs = vec![0.0; na + nb + 1];
    for (i, wi) in pa.probs().iter().enumerate().take(na + 1) {
        for (j, wj) in pb.probs().iter().enumerate().take(nb + 1) {
            let w = wi * wj;
            if w == 0.0 {
                continue;
            }
            let out = if balanced {
                sigma_coefficients(i, j)?.coeffs
            } else {
                fock_oracle_sigma_with_cutoff(i, j, eta, cutoff)?
            };
            for (acc, c) in probs.iter_mut().zip(out.probs()) {
                *acc += w * c;
            }
        }
    }
    PhotonMixture::new(probs)
}

/// `(h(W_sigma), S_Wehrl(rho))` where `sigma` is the output of a balanced
/// beam splitter fed with `rho` and the vacuum. The two agree because the
/// Wigner function of `sigma` is the Husimi function of `rho`.
pub fn wehrl_bridge_check(p: &PhotonMixture, quad: &QuadratureSpec) -> Result<(f64, f64)> {
    let sigma = beam_splitter_output(p, &PhotonMixture::vacuum(), 0.5, DEFAULT_FOCK_CUTOFF)?;
    Ok((wigner_entropy_radial(&sigma, quad)?, wehrl_entropy(p, quad)?))
}
