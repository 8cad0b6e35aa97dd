//! Symplectic maps leave Gaussian Wigner entropies unchanged.

use wigner_entropy::beamsplit::{WignerGrid, DEFAULT_EXTENT, DEFAULT_RESOLUTION};
use wigner_entropy::entropy::wigner_entropy_grid;
use wigner_entropy::gaussian::{apply_symplectic, gaussian_wehrl, gaussian_wigner_entropy, SymplecticMap};
use wigner_entropy::sampling::seeded_rng;
use wigner_entropy::GaussianState;

fn main() -> wigner_entropy::Result<()> {
    let thermal = GaussianState::thermal(1.0)?;
    let mut rng = seeded_rng(3);
    for _ in 0..5 {
        let map = SymplecticMap::random(&mut rng, 2.0);
        let g = apply_symplectic(&thermal, &map);
        println!(
            "det = {:.12}, h(W) = {:.12}, S_Wehrl = {:.6}",
            g.det_cov(),
            gaussian_wigner_entropy(&g),
            gaussian_wehrl(&g)
        );
    }
    let squeezed = apply_symplectic(&GaussianState::vacuum(), &SymplecticMap::squeeze(0.5));
    let grid = WignerGrid::from_gaussian(&squeezed, DEFAULT_EXTENT, DEFAULT_RESOLUTION)?;
    println!("squeezed vacuum on a grid: h = {:.10}", wigner_entropy_grid(&grid)?);
    Ok(())
}
