//! Phase-space convolution against the two-mode Fock expansion.

use wigner_entropy::beamsplit::{convolve_beamsplitter, fock_oracle_sigma, WignerGrid};
use wigner_entropy::PhotonMixture;

fn main() -> wigner_entropy::Result<()> {
    let eta = 0.3;
    let one = WignerGrid::from_mixture(&PhotonMixture::fock(1)?, 8.0, 256)?;
    let two = WignerGrid::from_mixture(&PhotonMixture::fock(2)?, 8.0, 256)?;
    let out = convolve_beamsplitter(&one, &two, eta)?;
    let fock = fock_oracle_sigma(1, 2, eta)?;
    let expected = WignerGrid::from_mixture(&fock, 8.0, 256)?;
    let err = out
        .values()
        .iter()
        .zip(expected.values())
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    println!("output photon statistics: {:?}", fock.probs());
    println!("grid normalization {:.10}, max deviation from Fock route {err:.2e}", out.normalization());
    Ok(())
}
