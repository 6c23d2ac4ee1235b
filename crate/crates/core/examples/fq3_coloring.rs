//! The F_q^3 slope-family colouring and its round-robin completion.
//!
//! cargo run --example fq3_coloring -- [q] [r]

use ramsey_sat::constructions::fq3_coloring;
use ramsey_sat::saturation::monochromatic_clique;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let q: u64 = args.first().map_or(Ok(3), |s| s.parse())?;
    let r: usize = args.get(1).map_or(Ok(2), |s| s.parse())?;

    let col = fq3_coloring(q, r)?;
    let n = col.completed.n();
    println!("{n} vertices, {} pairs", n * (n - 1) / 2);
    println!("family classes {:?}, leftover {}", col.pre_completion.class_sizes(), col.leftover.len());
    println!("completed classes {:?}", col.completed.class_sizes());
    if let Some((colour, vs)) = monochromatic_clique(&col.completed, q as usize) {
        println!("completed colour {colour} has K_{q} on {vs}");
    }
    Ok(())
}
