//! Affine planes, F_q^3 line families and the incidence estimate.
//!
//! cargo run --example finite_geometry -- [q]

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use ramsey_sat::geometry::{build_affine_plane, fq3_line_family, incidence_sum, parallel_classes, smallest_prime_in};
use ramsey_sat::VertexSet;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let q: u64 = std::env::args().nth(1).map_or(Ok(5), |s| s.parse())?;

    let plane = build_affine_plane(q)?;
    plane.validate()?;
    let classes = parallel_classes(&plane)?;
    println!("AG(2,{q}): {} points, {} lines, {} parallel classes", plane.point_count(), plane.lines().len(), classes.len());
    println!("  lines through the origin: {:?}", plane.lines_through(0));

    for lambda in 0..q.min(3) {
        let fam = fq3_line_family(q, lambda)?;
        fam.validate()?;
        println!("F_{q}^3 family lambda={lambda}: {} lines, {} through each point", fam.lines().len(), fam.lines_through(0).len());
    }

    // incidences of a random half of the points with two parallel classes
    let family: Vec<usize> = classes[..2].concat();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let pts = plane.point_count();
    let u = VertexSet::new(rand::seq::index::sample(&mut rng, pts, pts / 2).into_vec());
    let s = incidence_sum(&plane, &family, &u)?;
    println!("incidences {} >= estimate {:.2}: {}", s.sum, s.bound, s.holds());

    println!("smallest prime in [6, 12]: {}", smallest_prime_in(6, 12)?);
    Ok(())
}
