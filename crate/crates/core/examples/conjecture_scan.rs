//! Scan every constructible family of Wigner-positive states for entropies
//! below `ln pi + 1`.

use rayon::prelude::*;

use wigner_entropy::cli::suites::conjecture_families;
use wigner_entropy::entropy::{vacuum_entropy, wigner_entropy_radial};
use wigner_entropy::QuadratureSpec;

fn main() -> wigner_entropy::Result<()> {
    let quad = QuadratureSpec::default();
    let states = conjecture_families(42)?;
    let entropies: Vec<f64> = states
        .par_iter()
        .map(|(_, p)| wigner_entropy_radial(p, &quad))
        .collect::<wigner_entropy::Result<_>>()?;
    let mut ranked: Vec<(f64, &str)> = entropies
        .iter()
        .zip(&states)
        .map(|(h, (name, _))| (h - vacuum_entropy(), name.as_str()))
        .collect();
    ranked.sort_by(|a, b| a.0.total_cmp(&b.0));
    println!("{} states; smallest margins above ln pi + 1:", ranked.len());
    for (margin, name) in ranked.iter().take(8) {
        println!("  {margin:>12.3e}  {name}");
    }
    Ok(())
}
