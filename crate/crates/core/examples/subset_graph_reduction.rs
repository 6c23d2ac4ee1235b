//! Moving between colourings of (s+t-2)-subsets and graphs.

use ramsey_sat::reduction::{
    coloring_to_graph, forced_pairs, good_set_witness, graph_to_coloring, has_unbalanced_set, Colour,
    RamseyParams, TieBreak,
};
use ramsey_sat::SimpleGraph;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (s, t) = (2, 3);

    let g = SimpleGraph::petersen();
    let chi = graph_to_coloring(&g, s, t, Colour::Red)?;
    println!("Petersen -> {} triples, {} blue", chi.len(), chi.blue_count());
    print!("{}", chi.to_ksc());

    // a uniform random colouring forces almost every pair apart, so start from C7 and flip one triple
    let mut chi = graph_to_coloring(&SimpleGraph::cycle(7), s, t, Colour::Red)?;
    chi.set(0, Colour::Red);
    let forced = forced_pairs(&chi, s, t)?;
    println!("colouring of [7]: {} forced edges, {} forced non-edges", forced.edges.len(), forced.non_edges.len());
    let h = coloring_to_graph(&chi, s, t, TieBreak::NonEdge)?;
    println!("G_chi has {} edges", h.edge_count());
    for n in 3..=5 {
        let p = RamseyParams::reduction(n, s, t)?;
        println!(
            "  n={n}: unbalanced set in G_chi {:?}, good set for chi {:?}",
            has_unbalanced_set(&h, n, s, t)?.map(|v| v.to_string()),
            good_set_witness(&chi, &p)?.map(|v| v.to_string())
        );
    }
    Ok(())
}
