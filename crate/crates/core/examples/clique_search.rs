//! Clique and independent-set search, Turán extraction and homogeneous sets.
//!
//! cargo run --example clique_search -- [n] [p] [seed]

use ramsey_sat::constructions::{sample_gnp, GnpParams};
use ramsey_sat::search::{
    erdos_szekeres_extract, extract_homogeneous_cover, find_clique, find_independent_set, turan_bound,
    turan_independent_set,
};
use ramsey_sat::SimpleGraph;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let n: usize = args.first().map_or(Ok(30), |s| s.parse())?;
    let p: f64 = args.get(1).map_or(Ok(0.5), |s| s.parse())?;
    let seed: u64 = args.get(2).map_or(Ok(1), |s| s.parse())?;

    let petersen = SimpleGraph::petersen();
    println!("Petersen: triangle {:?}, independent 4-set {:?}", find_clique(&petersen, 3)?, find_independent_set(&petersen, 4)?.map(|s| s.to_string()));

    let g = sample_gnp(GnpParams { n, p, seed })?;
    let omega = (1..=n).rev().find(|&m| matches!(find_clique(&g, m), Ok(Some(_)))).unwrap_or(0);
    println!("G({n}, {p}) seed {seed}: {} edges, clique number {omega}", g.edge_count());
    if let Some(c) = find_clique(&g, omega)? {
        println!("  first maximum clique {c}");
    }

    let is = turan_independent_set(&g);
    println!("  greedy independent set {is} (size {}, guaranteed {})", is.len(), turan_bound(n, g.edge_count()));

    if let Some(h) = erdos_szekeres_extract(&g, 4, 4) {
        println!("  neighbourhood walk: {h:?}");
    }
    let cover = extract_homogeneous_cover(&g, 3, 3, n)?;
    println!(
        "  cover by triangles / independent triples: {} + {} sets in {} rounds",
        cover.cliques.len(),
        cover.independent_sets.len(),
        cover.rounds_completed
    );
    Ok(())
}
