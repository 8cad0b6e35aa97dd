//! Which mixtures of |0>, |1>, |2> are Wigner positive.

use wigner_entropy::positivity::{
    arc_tangency_t, ellipse_residual, extremal_arc_point, positivity_report, tangent_line, two_photon_region_contains,
};
use wigner_entropy::sampling::{seeded_rng, two_photon_sample};
use wigner_entropy::PhotonMixture;

fn main() -> wigner_entropy::Result<()> {
    println!("extremal arc:");
    for i in 0..=4 {
        let a = i as f64 / 4.0;
        let (p1, p2) = extremal_arc_point(a)?;
        let report = positivity_report(&PhotonMixture::two_photon(p1, p2)?);
        println!(
            "  a = {a:.2}: (p1, p2) = ({p1:.6}, {p2:.6}), t = {:.4}, min W = {:.1e}, ellipse residual = {:.1e}",
            arc_tangency_t(a)?,
            report.min_value,
            ellipse_residual(p1, p2)
        );
    }
    for r in [0.0, 1.0] {
        let (c1, c2, c0) = tangent_line(r);
        println!("W({r}) = 0 on the line {c1} p1 + {c2} p2 + {c0} = 0");
    }
    let mut rng = seeded_rng(1);
    let inside = (0..10_000)
        .filter(|_| {
            let (p1, p2) = two_photon_sample(&mut rng);
            two_photon_region_contains(p1, p2)
        })
        .count();
    println!("fraction of the triangle that is Wigner positive: {:.4}", inside as f64 / 10_000.0);
    Ok(())
}
