//! Exhaustive values of g(n,s,t) and f_k(n,s,t).

use ramsey_sat::reduction::{f_oracle, g_oracle, RamseyParams};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (n, s, t) in [(2, 2, 2), (3, 2, 2), (3, 2, 3), (4, 2, 3)] {
        let g = g_oracle(n, s, t, 7)?;
        let f = f_oracle(&RamseyParams::reduction(n, s, t)?, 6)?;
        println!("g({n},{s},{t}) = {:?}   f_{}({n},{s},{t}) = {:?}   ({} graphs, {} colourings)", g.value, s + t - 2, f.value, g.checked, f.checked);
        if let Some((big, cx)) = g.counterexample {
            println!("  every {n}-set balanced on N={big}: {:?}", cx.edges().collect::<Vec<_>>());
        }
    }
    for n in 3..=4 {
        let f = f_oracle(&RamseyParams::general(n, 2, 2, 3)?, 6)?;
        println!("f_3({n},2,2) = {:?}, 2n-s-t+1 = {}", f.value, 2 * n - 3);
    }
    Ok(())
}
