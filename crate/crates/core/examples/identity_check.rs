//! Summing the first n+1 Fock Wigner functions gives a sum of products of
//! position and momentum densities.

use wigner_entropy::entropy::{phase_space_sum_residual, square_samples};

fn main() -> wigner_entropy::Result<()> {
    let samples = square_samples(41, 5.0);
    for n in [0, 1, 4, 8, 12, 20, 30] {
        println!("n = {n:>2}: max residual {:.2e}", phase_space_sum_residual(n, &samples)?);
    }
    Ok(())
}
