//! Wigner-Renyi entropies; order 2 is fixed by the purity.

use std::f64::consts::PI;

use wigner_entropy::entropy::{wigner_renyi, RenyiOrder};
use wigner_entropy::photonmix::sigma_coefficients;
use wigner_entropy::{PhotonMixture, QuadratureSpec};

fn main() -> wigner_entropy::Result<()> {
    let quad = QuadratureSpec::default();
    let states = [("vacuum", PhotonMixture::vacuum()), ("sigma(1,1)", sigma_coefficients(1, 1)?.coeffs)];
    for (name, p) in &states {
        for alpha in ["0.5", "1", "2", "5", "inf"] {
            let order: RenyiOrder = alpha.parse()?;
            println!("{name:>10} alpha = {alpha:>3}: h = {:.10}", wigner_renyi(p, order, &quad)?);
        }
        println!("{name:>10} ln(2 pi / purity) = {:.10}", (2.0 * PI / p.purity()).ln());
    }
    Ok(())
}
