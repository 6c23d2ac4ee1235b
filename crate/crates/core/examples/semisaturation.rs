//! Semisaturation and saturation checks on small patterns.
//!
//! cargo run --example semisaturation -- [pattern.cg] [k]

use ramsey_sat::pattern::c4_diagonals;
use ramsey_sat::saturation::{
    check_observation, is_saturated, is_semisaturated, is_semisaturated_direct, ssat_lower_bound_formula,
    ssat_recursion_floor, CheckOptions,
};
use ramsey_sat::ColoredCompleteGraph;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let c = match args.first() {
        Some(path) => ColoredCompleteGraph::parse_cg(&std::fs::read_to_string(path)?)?,
        None => c4_diagonals(),
    };
    let k: usize = args.get(1).map_or(Ok(3), |s| s.parse())?;
    let opts = CheckOptions::colorings();

    print!("{}", c.to_cg());
    println!("semisaturated:          {:?}", is_semisaturated(&c, k, &opts)?.outcome);
    println!("semisaturated (direct): {:?}", is_semisaturated_direct(&c, k, &opts)?.outcome);
    println!("observation:            {:?}", check_observation(&c, k, c.r(), &CheckOptions::subsets())?.outcome);
    println!("saturated:              {:?}", is_saturated(&c, k, &opts)?.outcome);

    for r in 2..=4 {
        println!("r={r}: ssat_r(K_{k}) >= {}, recursion floor {}", ssat_lower_bound_formula(r, k as i64)?, ssat_recursion_floor(r as u64)?);
    }
    Ok(())
}
