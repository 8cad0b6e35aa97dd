//! Wigner positivity of phase-invariant states.
//!
//! A Fock-diagonal state has the radial Wigner function
//! `W(r) = (1/pi) e^{-r^2} sum_k p_k (-1)^k L_k(2 r^2)`, i.e. a Gaussian
//! envelope times a polynomial of degree `N` in `r^2`. Positivity is decided
//! by a dense radial scan followed by golden-section refinement of every
//! bracketed extremum.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::photonmix::PhotonMixture;
use crate::polycore::{laguerre_all, laguerre_derivative_all, laguerre_scaled_all};

/// Absolute tolerance on `W` values when deciding positivity.
pub const POSITIVITY_TOL: f64 = 1e-12;

/// Number of radial samples in the positivity scan.
pub const SCAN_SAMPLES: usize = 4096;

/// Radial Wigner function of a Fock-diagonal state.
#[derive(Clone, Debug)]
pub struct RadialWigner<'a> {
    source: &'a PhotonMixture,
    signed: Vec<f64>,
}

impl<'a> RadialWigner<'a> {
    pub fn new(source: &'a PhotonMixture) -> Self {
        let signed = source
            .probs()
            .iter()
            .enumerate()
            .map(|(k, p)| if k % 2 == 0 { *p } else { -p })
            .collect();
        Self { source, signed }
    }

    pub fn source(&self) -> &PhotonMixture {
        self.source
    }

    /// `pi W` as a function of `u = r^2`.
    pub(crate) fn scaled_at_u(&self, u: f64) -> f64 {
        let n = self.signed.len() - 1;
        laguerre_scaled_all(n, 2.0 * u)
            .iter()
            .zip(&self.signed)
            .map(|(l, s)| l * s)
            .sum()
    }

    pub fn eval(&self, r: f64) -> f64 {
        self.scaled_at_u(r * r) / PI
    }
}

/// `W(r)` of the state `p`.
pub fn radial_wigner(p: &PhotonMixture, r: f64) -> f64 {
    RadialWigner::new(p).eval(r)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PositivityOptions {
    pub tolerance: f64,
    pub samples: usize,
}

impl Default for PositivityOptions {
    fn default() -> Self {
        Self {
            tolerance: POSITIVITY_TOL,
            samples: SCAN_SAMPLES,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PositivityReport {
    pub is_positive: bool,
    pub min_value: f64,
    pub argmin_r: f64,
    /// The minimum is an attained zero at finite `r`; the vanishing tail of
    /// every Wigner function does not count.
    pub touches_zero: bool,
    pub max_value: f64,
    pub argmax_r: f64,
}

impl PositivityReport {
    pub fn into_result(self) -> Result<Self> {
        if self.is_positive {
            Ok(self)
        } else {
            Err(Error::NotWignerPositive {
                min_value: self.min_value,
                argmin_r: self.argmin_r,
            })
        }
    }
}

/// Scan radius for a mixture with `len` components: beyond the largest
/// Laguerre zero (`r^2 < 2N + 1`) every `(-1)^k L_k(2 r^2)` is positive, so
/// no sign change can occur further out.
pub fn scan_radius(len: usize) -> f64 {
    let n = len as f64;
    (2.0 * n + 6.0 * n.sqrt() + 20.0).sqrt()
}

const GOLDEN: f64 = 0.618_033_988_749_894_8;

fn golden_section<F: Fn(f64) -> f64>(f: &F, mut a: f64, mut b: f64) -> (f64, f64) {
    let mut c = b - GOLDEN * (b - a);
    let mut d = a + GOLDEN * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    for _ in 0..200 {
        if (b - a).abs() <= 1e-13 * (1.0 + a.abs()) {
            break;
        }
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - GOLDEN * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + GOLDEN * (b - a);
            fd = f(d);
        }
    }
    let x = 0.5 * (a + b);
    (x, f(x))
}

/// Refined global minimum of `f` from its samples on `grid`.
fn refine_min<F: Fn(f64) -> f64>(f: &F, grid: &[f64], values: &[f64]) -> (f64, f64) {
    let n = grid.len();
    let mut best = (grid[0], values[0]);
    for i in 0..n {
        let left = if i > 0 { values[i - 1] } else { f64::INFINITY };
        let right = if i + 1 < n { values[i + 1] } else { f64::INFINITY };
        if values[i] <= left && values[i] <= right {
            let a = grid[i.saturating_sub(1)];
            let b = grid[(i + 1).min(n - 1)];
            let (x, v) = golden_section(f, a, b);
            let cand = if v < values[i] { (x, v) } else { (grid[i], values[i]) };
            if cand.1 < best.1 {
                best = cand;
            }
        }
    }
    best
}

pub fn positivity_report(p: &PhotonMixture) -> PositivityReport {
    positivity_report_with(p, &PositivityOptions::default())
}

pub fn positivity_report_with(p: &PhotonMixture, opts: &PositivityOptions) -> PositivityReport {
    let w = RadialWigner::new(p);
    let r_max = scan_radius(p.len());
    let samples = opts.samples.max(16);
    let grid: Vec<f64> = (0..samples)
        .map(|i| r_max * i as f64 / (samples - 1) as f64)
        .collect();
    let values: Vec<f64> = grid.iter().map(|r| w.eval(*r)).collect();

    let (argmin_r, min_value) = refine_min(&|r| w.eval(r), &grid, &values);
    let negated: Vec<f64> = values.iter().map(|v| -v).collect();
    let (argmax_r, neg_max) = refine_min(&|r| -w.eval(r), &grid, &negated);

    let is_positive = min_value >= -opts.tolerance;
    let interior = argmin_r < grid[samples - 2];
    PositivityReport {
        is_positive,
        min_value,
        argmin_r,
        touches_zero: is_positive && min_value.abs() <= opts.tolerance && interior,
        max_value: -neg_max,
        argmax_r,
    }
}

/// `(sum p_k (-1)^k L_k(t), sum p_k (-1)^k L_k'(t))`; both vanish at a
/// tangency point of the curved boundary.
pub fn curved_boundary_residual(p: &PhotonMixture, t: f64) -> (f64, f64) {
    let n = p.max_photon();
    let values = laguerre_all(n, t);
    let derivs = laguerre_derivative_all(n, t);
    let mut value = 0.0;
    let mut slope = 0.0;
    for (k, pk) in p.probs().iter().enumerate() {
        let s = if k % 2 == 0 { *pk } else { -pk };
        value += s * values[k];
        slope += s * derivs[k];
    }
    (value, slope)
}

/// Membership in the Wigner-positive region of mixtures of `|0>, |1>, |2>`:
/// `p1 <= 1/2` and `p2 <= 1/4 + sqrt(1 - 4 p1^2)/4`. Points outside the
/// physical triangle (`p1, p2 >= 0`, `p1 + p2 <= 1`) are not states and
/// return `false`.
pub fn two_photon_region_contains(p1: f64, p2: f64) -> bool {
    if !(p1 >= 0.0 && p2 >= 0.0 && p1 + p2 <= 1.0) {
        return false;
    }
    p1 <= 0.5 && p2 <= 0.25 + 0.25 * (1.0 - 4.0 * p1 * p1).max(0.0).sqrt()
}

/// `(p1 / (1/2))^2 + ((p2 - 1/4) / (1/4))^2 - 1`; zero on the ellipse
/// bounding the curved part of the two-photon region.
pub fn ellipse_residual(p1: f64, p2: f64) -> f64 {
    (2.0 * p1).powi(2) + (4.0 * p2 - 1.0).powi(2) - 1.0
}

/// Point `(p1, p2) = (sqrt(1 - a^2)/2, (a + 1)/4)` on the extremal arc.
pub fn extremal_arc_point(a: f64) -> Result<(f64, f64)> {
    if !(0.0..=1.0).contains(&a) {
        return Err(Error::OutOfRange(format!("arc parameter a = {a} not in [0, 1]")));
    }
    Ok((0.5 * (1.0 - a * a).sqrt(), 0.25 * (a + 1.0)))
}

/// Value `t = 2 r^2` at which the arc state's Wigner function vanishes.
pub fn arc_tangency_t(a: f64) -> Result<f64> {
    let (p1, p2) = extremal_arc_point(a)?;
    Ok(2.0 - p1 / p2)
}

/// `W_a(r) = (1/pi) e^{-r^2} (a+1)/2 (r^2 - 1 + sqrt((1-a)/(1+a)))^2`.
pub fn extremal_arc_wigner(a: f64, r: f64) -> f64 {
    let shift = ((1.0 - a) / (1.0 + a)).sqrt();
    (-r * r).exp() * 0.5 * (a + 1.0) * (r * r - 1.0 + shift).powi(2) / PI
}

/// Line `c_p1 p1 + c_p2 p2 + c_1 = 0` on which `W(r) = 0` for two-photon
/// mixtures: `W(r) pi e^{r^2} = (2r^2 - 2) p1 + (2r^4 - 4r^2) p2 + 1`.
pub fn tangent_line(r: f64) -> (f64, f64, f64) {
    let r2 = r * r;
    (2.0 * r2 - 2.0, 2.0 * r2 * r2 - 4.0 * r2, 1.0)
}
