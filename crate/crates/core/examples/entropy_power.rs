//! Entropy-power inequality for a beam splitter, in the Fock basis, on a
//! phase-space grid, and for Gaussian inputs.

use wigner_entropy::beamsplit::{WignerGrid, DEFAULT_EXTENT};
use wigner_entropy::entropy::{check_epi, check_epi_gaussian, check_epi_grid};
use wigner_entropy::photonmix::sigma_coefficients;
use wigner_entropy::{GaussianState, PhotonMixture, QuadratureSpec};

fn main() -> wigner_entropy::Result<()> {
    let quad = QuadratureSpec::default();
    let a = sigma_coefficients(1, 0)?.coeffs;
    let b = PhotonMixture::new(vec![0.6, 0.3, 0.1])?;
    for eta in [0.25, 0.5, 0.75] {
        let r = check_epi(&a, &b, eta, &quad)?;
        println!("Fock  eta = {eta}: N_out = {:.8} >= {:.8}", r.n_out, r.bound);
    }
    let ga = GaussianState::thermal(0.5)?;
    let gb = GaussianState::thermal(2.0)?;
    let r = check_epi_gaussian(&ga, &gb, 0.3)?;
    println!("Gaussian closed form: N_out - bound = {:.2e}", r.margin());
    let wa = WignerGrid::from_gaussian(&ga, DEFAULT_EXTENT, 256)?;
    let wb = WignerGrid::from_gaussian(&gb, DEFAULT_EXTENT, 256)?;
    let r = check_epi_grid(&wa, &wb, 0.3)?;
    println!("Gaussian on a 256^2 grid: N_out - bound = {:.2e}", r.margin());
    Ok(())
}
