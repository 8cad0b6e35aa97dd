//! Verification suites run by `wigner verify`.

use rayon::prelude::*;

use super::format_number as num;
use crate::beamsplit::{fock_oracle_sigma, wehrl_bridge_check, WignerGrid, DEFAULT_EXTENT, DEFAULT_RESOLUTION};
use crate::entropy::{
    check_epi, check_epi_gaussian, check_epi_grid, passive_bound_check, phase_space_sum_residual, square_samples,
    vacuum_entropy, wigner_entropy_radial, QuadratureSpec,
};
use crate::error::Result;
use crate::gaussian::GaussianState;
use crate::photonmix::{extremal_passive, extremal_passive_from_sigmas, sigma_coefficients, PhotonMixture};
use crate::positivity::{ellipse_residual, extremal_arc_point, positivity_report, two_photon_region_contains};
use crate::sampling::{
    random_passive, random_positive_mixture, random_sigma_mixture, seeded_rng, two_photon_sample,
};

/// Suite names accepted by `verify`, in the order `all` runs them.
pub const SUITES: [&str; 8] = [
    "identity38",
    "eq44",
    "sigma-oracle",
    "wehrl-bridge",
    "passive-bound",
    "epi",
    "region2",
    "conjecture-scan",
];

/// Slack below `ln pi + 1` tolerated by the entropy scans.
pub const CONJECTURE_SLACK: f64 = 1e-7;

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteReport {
    pub name: String,
    pub passed: bool,
    pub lines: Vec<String>,
}

impl SuiteReport {
    fn new(name: &str) -> Self {
        Self {
            name: name.to_string(),
            passed: true,
            lines: Vec::new(),
        }
    }

    fn check(&mut self, label: &str, value: f64, threshold: f64, ok: bool) {
        self.passed &= ok;
        self.lines.push(format!(
            "  [{}] {label}: {} (threshold {})",
            if ok { "ok" } else { "FAIL" },
            num(value),
            num(threshold)
        ));
    }

    fn note(&mut self, line: String) {
        self.lines.push(format!("  {line}"));
    }

    fn fail(&mut self, line: String) {
        self.passed = false;
        self.lines.push(format!("  [FAIL] {line}"));
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SuiteContext {
    pub quad: QuadratureSpec,
    pub seed: u64,
}

/// Runs one named suite; `None` for an unknown name.
pub fn run_suite(name: &str, ctx: &SuiteContext) -> Option<SuiteReport> {
    let mut report = SuiteReport::new(name);
    let outcome = match name {
        "identity38" => sum_identity(&mut report),
        "eq44" => extremal_decomposition(&mut report),
        "sigma-oracle" => sigma_oracle(&mut report),
        "wehrl-bridge" => wehrl_bridge(&mut report, ctx),
        "passive-bound" => passive_bound(&mut report, ctx),
        "epi" => epi(&mut report, ctx),
        "region2" => region2(&mut report, ctx),
        "conjecture-scan" => conjecture_scan(&mut report, ctx),
        _ => return None,
    };
    if let Err(e) = outcome {
        report.fail(format!("error: {e}"));
    }
    Some(report)
}

fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| (a.get(i).copied().unwrap_or(0.0) - b.get(i).copied().unwrap_or(0.0)).abs())
        .fold(0.0, f64::max)
}

fn sum_identity(r: &mut SuiteReport) -> Result<()> {
    let samples = square_samples(41, 5.0);
    let mut worst: f64 = 0.0;
    for n in 0..=12 {
        worst = worst.max(phase_space_sum_residual(n, &samples)?);
    }
    r.check("max residual, n <= 12, 41x41 on [-5,5]^2", worst, 1e-10, worst <= 1e-10);
    Ok(())
}

fn extremal_decomposition(r: &mut SuiteReport) -> Result<()> {
    let mut worst: f64 = 0.0;
    for n in 0..=20 {
        let lhs = extremal_passive_from_sigmas(n)?;
        worst = worst.max(max_abs_diff(lhs.probs(), extremal_passive(n).probs()));
    }
    r.check("max component error, n <= 20", worst, 1e-12, worst <= 1e-12);
    Ok(())
}

fn sigma_oracle(r: &mut SuiteReport) -> Result<()> {
    let mut worst: f64 = 0.0;
    for total in 0..=8 {
        for m in 0..=total {
            let closed = sigma_coefficients(m, total - m)?;
            let brute = fock_oracle_sigma(m, total - m, 0.5)?;
            worst = worst.max(max_abs_diff(closed.coeffs.probs(), brute.probs()));
        }
    }
    r.check("closed form vs two-mode expansion, m + n <= 8", worst, 1e-12, worst <= 1e-12);
    let exact: [(usize, usize, &[f64]); 3] = [(1, 0, &[0.5, 0.5]), (1, 1, &[0.5, 0.0, 0.5]), (2, 0, &[0.25, 0.5, 0.25])];
    for (m, n, expected) in exact {
        let d = max_abs_diff(sigma_coefficients(m, n)?.coeffs.probs(), expected);
        r.check(&format!("sigma({m},{n}) exact fractions"), d, 1e-15, d <= 1e-15);
    }
    Ok(())
}

/// Frozen high-precision Wehrl entropy of `|1>`.
pub const WEHRL_FOCK_ONE: f64 = 2.721_945_550_750_933;

fn wehrl_bridge(r: &mut SuiteReport, ctx: &SuiteContext) -> Result<()> {
    let bound = vacuum_entropy();
    let results: Vec<Result<(f64, f64)>> = (0..=6usize)
        .into_par_iter()
        .map(|n| wehrl_bridge_check(&PhotonMixture::fock(n)?, &ctx.quad))
        .collect();
    let mut worst: f64 = 0.0;
    let mut lowest = f64::INFINITY;
    for (n, res) in results.into_iter().enumerate() {
        let (w, q) = res?;
        r.note(format!("n={n}: h(W_out) = {}, S_Wehrl = {}", num(w), num(q)));
        worst = worst.max((w - q).abs());
        lowest = lowest.min(w.min(q) - bound);
        if n == 1 {
            let d = (q - WEHRL_FOCK_ONE).abs();
            r.check("n=1 against frozen reference", d, 1e-6, d <= 1e-6);
        }
    }
    r.check("max |h(W_out) - S_Wehrl|, n <= 6", worst, 1e-8, worst <= 1e-8);
    r.check("min margin above ln pi + 1", lowest, 0.0, lowest >= -1e-10);
    Ok(())
}

fn passive_bound(r: &mut SuiteReport, ctx: &SuiteContext) -> Result<()> {
    let mut states: Vec<PhotonMixture> = (0..=10).map(extremal_passive).collect();
    let mut rng = seeded_rng(ctx.seed);
    states.extend((0..100).map(|_| random_passive(&mut rng, 20)));
    let results: Vec<Result<(f64, f64)>> = states.par_iter().map(|p| passive_bound_check(p, &ctx.quad)).collect();
    let mut worst = f64::INFINITY;
    for res in results {
        let (lhs, rhs) = res?;
        worst = worst.min(lhs - rhs);
    }
    r.check("min LHS - RHS over eps_0..eps_10 and 100 random passive states", worst, 0.0, worst >= -1e-9);
    let (lhs, rhs) = passive_bound_check(&PhotonMixture::vacuum(), &ctx.quad)?;
    r.check("vacuum saturation |LHS - RHS|", (lhs - rhs).abs(), 1e-8, (lhs - rhs).abs() <= 1e-8);
    Ok(())
}

fn epi(r: &mut SuiteReport, ctx: &SuiteContext) -> Result<()> {
    let mut rng = seeded_rng(ctx.seed);
    let mut pairs = Vec::new();
    while pairs.len() < 20 {
        let a = random_positive_mixture(&mut rng, 6, 10_000);
        let b = random_positive_mixture(&mut rng, 6, 10_000);
        // vacuum inputs saturate the inequality trivially
        if let (Some(a), Some(b)) = (a, b) {
            if a.support_max() > 0 && b.support_max() > 0 {
                pairs.push((a, b));
            }
        }
    }
    let jobs: Vec<(usize, f64)> = (0..pairs.len())
        .flat_map(|i| [0.25, 0.5, 0.75].map(|eta| (i, eta)))
        .collect();
    let results: Vec<Result<f64>> = jobs
        .par_iter()
        .map(|&(i, eta)| Ok(check_epi(&pairs[i].0, &pairs[i].1, eta, &ctx.quad)?.margin()))
        .collect();
    let mut worst = f64::INFINITY;
    for res in results {
        worst = worst.min(res?);
    }
    r.check("min N_out - bound, 20 random positive pairs x 3 eta", worst, -1e-6, worst >= -1e-6);

    let ga = GaussianState::thermal(0.5)?;
    let gb = GaussianState::thermal(1.5)?;
    let wa = WignerGrid::from_gaussian(&ga, DEFAULT_EXTENT, DEFAULT_RESOLUTION)?;
    let wb = WignerGrid::from_gaussian(&gb, DEFAULT_EXTENT, DEFAULT_RESOLUTION)?;
    let ta = PhotonMixture::thermal(0.5, 60)?;
    let tb = PhotonMixture::thermal(1.5, 60)?;
    let mut closed: f64 = 0.0;
    let mut grid: f64 = 0.0;
    for eta in [0.25, 0.5, 0.75] {
        closed = closed.max(check_epi_gaussian(&ga, &gb, eta)?.margin().abs());
        grid = grid.max(check_epi_grid(&wa, &wb, eta)?.margin().abs());
    }
    let fock = check_epi(&ta, &tb, 0.5, &ctx.quad)?.margin().abs();
    r.check("Gaussian saturation, closed form", closed, 1e-4, closed <= 1e-4);
    r.check("Gaussian saturation, grid convolution", grid, 1e-4, grid <= 1e-4);
    r.check("Gaussian saturation, thermal Fock mixtures at eta = 1/2", fock, 1e-4, fock <= 1e-4);
    Ok(())
}

/// Samples of the two-photon triangle used by the region check.
pub const REGION_SAMPLES: usize = 10_000;

/// Distance from the boundary of the closed-form region below which a
/// point is not compared.
pub const REGION_BAND: f64 = 1e-9;

fn near_region_boundary(p1: f64, p2: f64) -> bool {
    let curve = 0.25 + 0.25 * (1.0 - 4.0 * p1 * p1).max(0.0).sqrt();
    (p1 - 0.5).abs() <= REGION_BAND || (p2 - curve).abs() <= REGION_BAND
}

fn region2(r: &mut SuiteReport, ctx: &SuiteContext) -> Result<()> {
    let mut rng = seeded_rng(ctx.seed);
    let points: Vec<(f64, f64)> = (0..REGION_SAMPLES).map(|_| two_photon_sample(&mut rng)).collect();
    let outcomes: Vec<Result<Option<bool>>> = points
        .par_iter()
        .map(|&(p1, p2)| {
            if near_region_boundary(p1, p2) {
                return Ok(None);
            }
            let numeric = positivity_report(&PhotonMixture::two_photon(p1, p2)?).is_positive;
            Ok(Some(numeric == two_photon_region_contains(p1, p2)))
        })
        .collect();
    let mut disagreements = 0usize;
    let mut skipped = 0usize;
    for o in outcomes {
        match o? {
            Some(true) => {}
            Some(false) => disagreements += 1,
            None => skipped += 1,
        }
    }
    r.note(format!("{REGION_SAMPLES} samples, {skipped} inside the boundary band"));
    r.check("membership disagreements", disagreements as f64, 0.0, disagreements == 0);

    let mut touch: f64 = 0.0;
    let mut ellipse: f64 = 0.0;
    let mut all_touch = true;
    for i in 0..=10 {
        let a = i as f64 / 10.0;
        let (p1, p2) = extremal_arc_point(a)?;
        let rep = positivity_report(&PhotonMixture::two_photon(p1, p2)?);
        touch = touch.max(rep.min_value.abs());
        all_touch &= rep.is_positive;
        ellipse = ellipse.max(ellipse_residual(p1, p2).abs());
    }
    r.check("arc states: max |min W|", touch, 1e-9, all_touch && touch <= 1e-9);
    r.check("arc states: max ellipse residual", ellipse, 1e-12, ellipse <= 1e-12);
    Ok(())
}

/// Every family of Wigner-positive states the toolkit builds.
pub fn conjecture_families(seed: u64) -> Result<Vec<(String, PhotonMixture)>> {
    let mut out = Vec::new();
    for m in 0..=10 {
        for n in 0..=10 {
            out.push((format!("sigma({m},{n})"), sigma_coefficients(m, n)?.coeffs));
        }
    }
    for n in 0..=20 {
        out.push((format!("eps_{n}"), extremal_passive(n)));
    }
    for i in 0..=10 {
        let a = i as f64 / 10.0;
        let (p1, p2) = extremal_arc_point(a)?;
        out.push((format!("arc(a={a})"), PhotonMixture::two_photon(p1, p2)?));
        let p2 = 0.025 * i as f64;
        out.push((format!("facet(p2={p2})"), PhotonMixture::two_photon(0.5, p2)?));
    }
    let mut rng = seeded_rng(seed);
    let mut region = 0;
    while region < 200 {
        let (p1, p2) = two_photon_sample(&mut rng);
        if two_photon_region_contains(p1, p2) {
            out.push((format!("region({p1:.6},{p2:.6})"), PhotonMixture::two_photon(p1, p2)?));
            region += 1;
        }
    }
    for i in 0..100 {
        out.push((format!("passive#{i}"), random_passive(&mut rng, 20)));
    }
    for i in 0..100 {
        out.push((format!("sigma-mix#{i}"), random_sigma_mixture(&mut rng, 12, 4)));
    }
    let mut found = 0;
    while found < 100 {
        if let Some(p) = random_positive_mixture(&mut rng, 8, 10_000) {
            out.push((format!("rejection#{found}"), p));
            found += 1;
        }
    }
    Ok(out)
}

fn conjecture_scan(r: &mut SuiteReport, ctx: &SuiteContext) -> Result<()> {
    let bound = vacuum_entropy();
    let states = conjecture_families(ctx.seed)?;
    let results: Vec<Result<f64>> = states.par_iter().map(|(_, p)| wigner_entropy_radial(p, &ctx.quad)).collect();
    let mut violations = 0usize;
    let mut lowest = (f64::INFINITY, String::new());
    for ((label, p), res) in states.iter().zip(results) {
        let h = res?;
        if h - bound < lowest.0 {
            lowest = (h - bound, label.clone());
        }
        if h < bound - CONJECTURE_SLACK {
            violations += 1;
            r.fail(format!(
                "COUNTEREXAMPLE: {label} p = {:?} has h(W) = {} < ln pi + 1",
                p.probs(),
                num(h)
            ));
        }
    }
    r.note(format!("{} states scanned, smallest margin {} ({})", states.len(), num(lowest.0), lowest.1));
    r.check("violations of h(W) >= ln pi + 1", violations as f64, 0.0, violations == 0);
    Ok(())
}
