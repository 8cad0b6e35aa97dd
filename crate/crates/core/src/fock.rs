//! Fock-state wave functions, Wigner functions and quadrature marginals.
//!
//! Quadratures use `x = (a + a^dagger)/sqrt(2)`, so the vacuum has variance
//! one half and `W_0(x, p) = exp(-x^2 - p^2) / pi`.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::polycore::laguerre_scaled_all;
use crate::quadrature::{integrate, uniform_breakpoints, QuadratureSpec};

/// Default maximum photon number accepted by the Fock-space routines.
pub const MAX_FOCK: usize = 256;

pub(crate) fn check_fock_index(n: usize) -> Result<()> {
    if n > MAX_FOCK {
        return Err(Error::Overflow {
            requested: n,
            limit: MAX_FOCK,
        });
    }
    Ok(())
}

/// Harmonic-oscillator eigenfunctions `[psi_0(x), ..., psi_n(x)]`.
///
/// Uses the normalized recurrence
/// `psi_{k+1} = sqrt(2/(k+1)) x psi_k - sqrt(k/(k+1)) psi_{k-1}`, which
/// equals `pi^{-1/4} 2^{-k/2} (k!)^{-1/2} H_k(x) e^{-x^2/2}` without forming
/// `H_k` or `k!`.
pub fn wavefunctions(n: usize, x: f64) -> Vec<f64> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(PI.powf(-0.25) * (-0.5 * x * x).exp());
    if n == 0 {
        return out;
    }
    out.push(std::f64::consts::SQRT_2 * x * out[0]);
    for k in 1..n {
        let kf = k as f64;
        let next = (2.0 / (kf + 1.0)).sqrt() * x * out[k] - (kf / (kf + 1.0)).sqrt() * out[k - 1];
        out.push(next);
    }
    out
}

/// `psi_n(x)`.
pub fn wavefunction(n: usize, x: f64) -> f64 {
    wavefunctions(n, x)[n]
}

/// `W_n(x, p) = (1/pi) (-1)^n L_n(2x^2 + 2p^2) exp(-x^2 - p^2)`.
pub fn wigner_fock(n: usize, x: f64, p: f64) -> f64 {
    wigner_fock_radial(n, (x * x + p * p).sqrt())
}

/// Radial profile of [`wigner_fock`].
pub fn wigner_fock_radial(n: usize, r: f64) -> f64 {
    let scaled = laguerre_scaled_all(n, 2.0 * r * r)[n];
    let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
    sign * scaled / PI
}

/// `[W_0(x,p), ..., W_n(x,p)]`.
pub fn wigner_fock_all(n: usize, x: f64, p: f64) -> Vec<f64> {
    laguerre_scaled_all(n, 2.0 * (x * x + p * p))
        .into_iter()
        .enumerate()
        .map(|(k, v)| if k % 2 == 0 { v / PI } else { -v / PI })
        .collect()
}

/// `rho_n(x) = psi_n(x)^2`.
pub fn marginal_density(n: usize, x: f64) -> f64 {
    wavefunction(n, x).powi(2)
}

/// Integration half-width for densities built from Fock states up to `n`.
pub(crate) fn marginal_half_width(n: usize) -> f64 {
    (2.0 * n as f64 + 1.0).sqrt() + 12.0
}

/// Shannon differential entropy of an even density on `[-half_width, half_width]`.
/// `rho ln rho` is taken as zero wherever `rho <= 0`.
pub(crate) fn even_density_entropy<F>(density: F, half_width: f64, quad: &QuadratureSpec) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    let integrand = |x: f64| {
        let rho = density(x);
        if rho > 0.0 {
            -rho * rho.ln()
        } else {
            0.0
        }
    };
    let half_quad = QuadratureSpec {
        abs_tol: 0.5 * quad.abs_tol,
        ..*quad
    };
    let integral = integrate(integrand, &uniform_breakpoints(0.0, half_width, 0.5), &half_quad)?;
    Ok(2.0 * integral.value)
}

/// `h(rho_n) = -int rho_n ln rho_n dx`.
pub fn marginal_entropy(n: usize, quad: &QuadratureSpec) -> Result<f64> {
    check_fock_index(n)?;
    even_density_entropy(|x| marginal_density(n, x), marginal_half_width(n), quad)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::{hermite, laguerre, log_factorial};

    fn closed_form_wavefunction(n: usize, x: f64) -> f64 {
        let norm = (-0.25 * PI.ln() - 0.5 * n as f64 * 2f64.ln() - 0.5 * log_factorial(n)).exp();
        norm * hermite(n, x) * (-0.5 * x * x).exp()
    }

    fn simpson<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, n: usize) -> f64 {
        let h = (b - a) / n as f64;
        let mut s = f(a) + f(b);
        for i in 1..n {
            let w = if i % 2 == 1 { 4.0 } else { 2.0 };
            s += w * f(a + i as f64 * h);
        }
        s * h / 3.0
    }

    #[test]
    fn wavefunction_examples() {
        assert!((wavefunction(0, 0.0) - 0.751_125_544_5).abs() < 1e-10);
        assert_eq!(wavefunction(1, 0.0), 0.0);
        // pi^{-1/4} 2^{-1} 2^{-1/2} H_2(1) e^{-1/2} with H_2(1) = 2
        let expected = PI.powf(-0.25) * 0.5 * 0.5f64.sqrt() * 2.0 * (-0.5f64).exp();
        assert!((wavefunction(2, 1.0) - expected).abs() < 1e-15);
        assert!((expected - 0.322_144_182_556_738).abs() < 1e-12);
    }

    #[test]
    fn recurrence_matches_hermite_form() {
        for n in 0..=30 {
            for i in 0..=16 {
                let x = -4.0 + 0.5 * i as f64;
                let a = wavefunction(n, x);
                let b = closed_form_wavefunction(n, x);
                assert!((a - b).abs() < 1e-12, "n={n} x={x}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn wigner_examples() {
        assert!((wigner_fock(0, 0.0, 0.0) - 1.0 / PI).abs() < 1e-15);
        assert!((wigner_fock(1, 0.0, 0.0) + 1.0 / PI).abs() < 1e-15);
        // L_2(2) = -1
        let expected = -(-1f64).exp() / PI;
        assert!((wigner_fock(2, 1.0, 0.0) - expected).abs() < 1e-15);
        assert!((expected + 0.117_099).abs() < 1e-6);
    }

    #[test]
    fn wigner_is_rotation_invariant_and_matches_laguerre() {
        for n in 0..8 {
            let a = wigner_fock(n, 0.6, 0.8);
            let b = wigner_fock(n, 1.0, 0.0);
            assert!((a - b).abs() < 1e-15);
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            let direct = sign * laguerre(n, 2.0) * (-1f64).exp() / PI;
            assert!((a - direct).abs() < 1e-14);
        }
        let all = wigner_fock_all(6, 0.3, -0.4);
        for (n, v) in all.iter().enumerate() {
            assert!((v - wigner_fock(n, 0.3, -0.4)).abs() < 1e-15);
        }
    }

    #[test]
    fn marginal_density_examples() {
        assert!((marginal_density(0, 0.0) - 1.0 / PI.sqrt()).abs() < 1e-15);
        assert_eq!(marginal_density(1, 0.0), 0.0);
        let expected = 2.0 * (-1f64).exp() / PI.sqrt();
        assert!((marginal_density(1, 1.0) - expected).abs() < 1e-15);
        assert!((expected - 0.415_107_5).abs() < 1e-7);
    }

    #[test]
    fn wigner_bounded_by_inverse_pi() {
        for n in 0..40 {
            for i in 0..200 {
                let r = 0.05 * i as f64;
                assert!(wigner_fock_radial(n, r).abs() <= 1.0 / PI + 1e-14);
            }
        }
    }

    #[test]
    fn wigner_marginals_and_normalization() {
        let spec = QuadratureSpec::default().with_abs_tol(1e-12);
        for n in 0..=10 {
            let cut = marginal_half_width(n);
            for &x in &[0.0, 0.5, 1.0, 2.0] {
                let m = integrate(
                    |p| wigner_fock(n, x, p),
                    &uniform_breakpoints(-cut, cut, 0.5),
                    &spec,
                )
                .unwrap();
                assert!((m.value - marginal_density(n, x)).abs() < 1e-8, "n={n}, x={x}");
            }
            // radial normalization: 2 pi int r W dr
            let norm = integrate(
                |r| 2.0 * PI * r * wigner_fock_radial(n, r),
                &uniform_breakpoints(0.0, cut, 0.25),
                &spec,
            )
            .unwrap();
            assert!((norm.value - 1.0).abs() < 1e-8, "n={n}");
        }
    }

    #[test]
    fn overlap_formula_gives_orthonormality() {
        let spec = QuadratureSpec::default().with_abs_tol(1e-12);
        for m in 0..=6 {
            for n in 0..=6 {
                let cut = marginal_half_width(m.max(n));
                let overlap = integrate(
                    |r| 2.0 * PI * 2.0 * PI * r * wigner_fock_radial(m, r) * wigner_fock_radial(n, r),
                    &uniform_breakpoints(0.0, cut, 0.25),
                    &spec,
                )
                .unwrap()
                .value;
                let expected = if m == n { 1.0 } else { 0.0 };
                assert!((overlap - expected).abs() < 1e-7, "m={m} n={n}: {overlap}");
            }
        }
    }

    #[test]
    fn marginal_entropy_values() {
        let spec = QuadratureSpec::default();
        let h0 = marginal_entropy(0, &spec).unwrap();
        assert!((h0 - 0.5 * (PI * std::f64::consts::E).ln()).abs() < 1e-10);
        // high-precision reference (independent mpmath quadrature)
        let h1 = marginal_entropy(1, &spec).unwrap();
        assert!((h1 - 1.342_727_788_386_178).abs() < 1e-9, "{h1}");
        let h2 = marginal_entropy(2, &spec).unwrap();
        assert!((h2 - 1.498_609_233_251_728).abs() < 1e-9, "{h2}");
    }

    #[test]
    fn marginal_entropy_against_simpson_oracle() {
        let spec = QuadratureSpec::default();
        for n in [3usize, 5] {
            let cut = marginal_half_width(n);
            let oracle = simpson(
                |x| {
                    let rho = closed_form_wavefunction(n, x).powi(2);
                    if rho > 0.0 {
                        -rho * rho.ln()
                    } else {
                        0.0
                    }
                },
                -cut,
                cut,
                200_000,
            );
            let h = marginal_entropy(n, &spec).unwrap();
            assert!((h - oracle).abs() < 1e-8, "n={n}: {h} vs {oracle}");
        }
    }

    #[test]
    fn marginal_entropies_satisfy_uncertainty_relation() {
        let spec = QuadratureSpec::default();
        let bound = 0.5 * (PI.ln() + 1.0);
        for n in 0..=20 {
            let h = marginal_entropy(n, &spec).unwrap();
            assert!(h >= bound - 1e-10, "n={n}: {h}");
        }
    }

    #[test]
    fn marginal_entropy_rejects_huge_index() {
        let err = marginal_entropy(MAX_FOCK + 1, &QuadratureSpec::default()).unwrap_err();
        assert!(matches!(err, Error::Overflow { .. }));
    }
}
