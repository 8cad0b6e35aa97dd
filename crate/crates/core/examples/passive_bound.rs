//! Passive states: decreasing photon statistics, their extremal
//! decomposition, and the marginal lower bound on their Wigner entropy.

use wigner_entropy::entropy::passive_bound_check;
use wigner_entropy::photonmix::{extremal_passive, extremal_passive_from_sigmas, passive_decompose};
use wigner_entropy::{PhotonMixture, QuadratureSpec};

fn main() -> wigner_entropy::Result<()> {
    let quad = QuadratureSpec::default();
    for n in [0, 1, 2, 5, 10] {
        let (lhs, rhs) = passive_bound_check(&extremal_passive(n), &quad)?;
        println!("eps_{n:<2}: h(W) = {lhs:.8} >= {rhs:.8}");
    }
    let p = PhotonMixture::new(vec![0.5, 0.3, 0.15, 0.05])?;
    println!("weights of {:?} over eps_k: {:?}", p.probs(), passive_decompose(&p)?.weights());
    let from_sigmas = extremal_passive_from_sigmas(4)?;
    println!("eps_4 rebuilt from sigma(k, 4 - k): {:?}", from_sigmas.probs());
    Ok(())
}
