//! Counts n-sets of G(N,p) that lack a K_s or an independent t-set, at the
//! edge probability from the lower-bound argument.
//!
//! cargo run --release --example bad_sets -- [N] [n] [s] [t]

use ramsey_sat::constructions::{count_bad_sets, lower_bound_p, sample_gnp, BadSetMode, GnpParams};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let big: usize = args.first().map_or(Ok(14), |s| s.parse())?;
    let n: usize = args.get(1).map_or(Ok(6), |s| s.parse())?;
    let s: usize = args.get(2).map_or(Ok(3), |s| s.parse())?;
    let t: usize = args.get(3).map_or(Ok(3), |s| s.parse())?;

    let p = lower_bound_p(s as u32, t as u32)?;
    println!("p = {p:.6}");
    for seed in 0..5 {
        let g = sample_gnp(GnpParams { n: big, p, seed })?;
        let exact = count_bad_sets(&g, n, s, t, BadSetMode::Exact)?;
        let est = count_bad_sets(&g, n, s, t, BadSetMode::Sampled { trials: 2000, seed: seed + 100 })?;
        println!(
            "seed {seed}: {} edges, bad sets {} of {}, sampled {:.1} +- {:.1}",
            g.edge_count(),
            exact.estimate,
            exact.total_sets,
            est.estimate,
            est.std_error
        );
    }
    Ok(())
}
