//! The vacuum attains the smallest known Wigner entropy, `ln pi + 1`.

use wigner_entropy::entropy::{vacuum_entropy, wigner_entropy_radial};
use wigner_entropy::{PhotonMixture, QuadratureSpec};

fn main() -> wigner_entropy::Result<()> {
    let h = wigner_entropy_radial(&PhotonMixture::vacuum(), &QuadratureSpec::default())?;
    println!("h(W_0)      = {h:.15}");
    println!("ln(pi) + 1  = {:.15}", vacuum_entropy());
    println!("difference  = {:.3e}", h - vacuum_entropy());
    Ok(())
}
