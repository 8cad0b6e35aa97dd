//! Wave functions, Wigner functions and marginal entropies of Fock states.

use wigner_entropy::fock::{marginal_entropy, wavefunction, wigner_fock_radial};
use wigner_entropy::positivity::positivity_report;
use wigner_entropy::{PhotonMixture, QuadratureSpec};

fn main() -> wigner_entropy::Result<()> {
    let quad = QuadratureSpec::default();
    println!("{:>3} {:>12} {:>12} {:>12} {:>14}", "n", "psi_n(1)", "W_n(0)", "min W_n", "h(rho_n)");
    for n in 0..=8 {
        let report = positivity_report(&PhotonMixture::fock(n)?);
        println!(
            "{n:>3} {:>12.8} {:>12.8} {:>12.8} {:>14.10}",
            wavefunction(n, 1.0),
            wigner_fock_radial(n, 0.0),
            report.min_value,
            marginal_entropy(n, &quad)?
        );
    }
    Ok(())
}
