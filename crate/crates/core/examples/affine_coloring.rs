//! Colours K_{q^2} by the lines of AG(2,q) and checks the subset condition
//! that makes it (r, K_k)-semisaturated.
//!
//! cargo run --release --example affine_coloring -- [q] [r] [k]

use ramsey_sat::constructions::{affine_coloring, AffineStrategy};
use ramsey_sat::saturation::{check_observation, CheckOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let q: u64 = args.first().map_or(Ok(5), |s| s.parse())?;
    let r: usize = args.get(1).map_or(Ok(2), |s| s.parse())?;
    let k: usize = args.get(2).map_or(Ok(4), |s| s.parse())?;

    let c = affine_coloring(q, r, AffineStrategy::ParallelBalanced, 0)?;
    println!("{} vertices, class sizes {:?}", c.n(), c.class_sizes());

    let t = std::time::Instant::now();
    let v = check_observation(&c, k, r, &CheckOptions::subsets())?;
    println!(
        "every {}-set has a K_{} in each class: {:?} ({} subsets, {:.2?})",
        c.n().div_ceil(r),
        k - 1,
        v.outcome,
        v.checked,
        t.elapsed()
    );
    if let Some(w) = v.witness {
        println!("  witness {w:?}");
    }
    Ok(())
}
