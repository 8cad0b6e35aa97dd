//! Photon statistics and Wigner entropies of the states produced by a
//! balanced beam splitter fed with two Fock states.

use wigner_entropy::entropy::{vacuum_entropy, wigner_entropy_radial};
use wigner_entropy::photonmix::sigma_coefficients;
use wigner_entropy::positivity::positivity_report;
use wigner_entropy::QuadratureSpec;

fn main() -> wigner_entropy::Result<()> {
    let quad = QuadratureSpec::default();
    for (m, n) in [(1, 0), (1, 1), (2, 0), (2, 1), (3, 3)] {
        let s = sigma_coefficients(m, n)?;
        let report = positivity_report(&s.coeffs);
        let h = wigner_entropy_radial(&s.coeffs, &quad)?;
        println!("sigma({m},{n}) = {:?}", s.coeffs.probs());
        println!(
            "    h = {h:.10}, h - (ln pi + 1) = {:.6}, min W = {:.2e} at r = {:.4}, touches zero: {}",
            h - vacuum_entropy(),
            report.min_value,
            report.argmin_r,
            report.touches_zero
        );
    }
    Ok(())
}
