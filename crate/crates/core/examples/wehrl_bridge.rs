//! Mixing a state with the vacuum on a balanced beam splitter turns its
//! Husimi function into a Wigner function, so Wehrl entropies reappear as
//! Wigner entropies.

use wigner_entropy::beamsplit::wehrl_bridge_check;
use wigner_entropy::{PhotonMixture, QuadratureSpec};

fn main() -> wigner_entropy::Result<()> {
    let quad = QuadratureSpec::default();
    for n in 0..=6 {
        let (w, q) = wehrl_bridge_check(&PhotonMixture::fock(n)?, &quad)?;
        println!("|{n}>: h(W_out) = {w:.12}, S_Wehrl = {q:.12}, diff = {:.1e}", w - q);
    }
    Ok(())
}
