//! Smallest semisaturated patterns by exhaustive search.
//!
//! cargo run --release --example ssat_search -- [r] [k] [n_max]

use ramsey_sat::saturation::{ssat_lower_bound_formula, ssat_search, SearchOutcome};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let r: usize = args.first().map_or(Ok(2), |s| s.parse())?;
    let k: usize = args.get(1).map_or(Ok(3), |s| s.parse())?;
    let n_max: usize = args.get(2).map_or(Ok(6), |s| s.parse())?;

    println!("lower bound {}", ssat_lower_bound_formula(r as i64, k as i64)?);
    for n in 1..=n_max {
        let t = std::time::Instant::now();
        let res = ssat_search(r, k, n, 1 << 34)?;
        match res.outcome {
            SearchOutcome::Found(p) => {
                println!("n={n}: found ({} nodes, {:.2?})", res.nodes, t.elapsed());
                print!("{}", p.to_cg());
                return Ok(());
            }
            SearchOutcome::Exhausted => println!("n={n}: none ({} nodes, {:.2?})", res.nodes, t.elapsed()),
            SearchOutcome::BudgetHit => {
                println!("n={n}: budget exhausted");
                return Ok(());
            }
        }
    }
    Ok(())
}
