//! Explicit edge-colourings built from finite geometries, and the random
//! graph experiment for unbalanced vertex sets.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{binomial, mask_of, par_count_subsets};
use crate::error::{out_of_range, Error, Result};
use crate::geometry::{build_affine_plane, fq3_line_family, parallel_classes, IncidenceStructure};
use crate::graph::{SimpleGraph, VertexSet, MAX_VERTICES};
use crate::pattern::ColoredCompleteGraph;
use crate::search::{find_clique_within, has_clique_in_mask};

/// Name recorded in certificates for every seeded computation.
pub const GENERATOR_NAME: &str = "ChaCha8 (rand_chacha 0.3, seed_from_u64)";

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// How lines of the affine plane are split into colour families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AffineStrategy {
    /// Parallel class `j` goes to colour `j mod r + 1`.
    ParallelBalanced,
    /// Lines are shuffled with the seed, then line `i` goes to colour `i mod r + 1`.
    RoundRobin,
}

impl std::str::FromStr for AffineStrategy {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "parallel-balanced" => Ok(AffineStrategy::ParallelBalanced),
            "round-robin" => Ok(AffineStrategy::RoundRobin),
            _ => Err(out_of_range(format!("unknown strategy `{s}`"))),
        }
    }
}

fn colour_lines(n: usize, r: usize, lines: &[Vec<usize>], colour_of_line: impl Fn(usize) -> usize) -> Result<ColoredCompleteGraph> {
    let mut c = ColoredCompleteGraph::uncoloured(n, r)?;
    for (i, line) in lines.iter().enumerate() {
        let col = colour_of_line(i);
        for (a, &u) in line.iter().enumerate() {
            for &v in &line[a + 1..] {
                if c.colour_of(u, v).is_some() {
                    return Err(Error::Invariant(format!("pair ({u}, {v}) lies on two lines")));
                }
                c.set_colour(u, v, col);
            }
        }
    }
    Ok(c)
}

/// Colours `K_{q^2}` by giving each line of AG(2, q) one of `r` colours; a
/// pair takes the colour of the unique line through it.
pub fn affine_coloring(q: u64, r: usize, strategy: AffineStrategy, seed: u64) -> Result<ColoredCompleteGraph> {
    let plane = build_affine_plane(q)?;
    let qu = q as usize;
    let max_r = match strategy {
        AffineStrategy::ParallelBalanced => qu + 1,
        AffineStrategy::RoundRobin => qu * qu + qu,
    };
    if r == 0 || r > max_r {
        return Err(out_of_range(format!("r = {r} outside [1, {max_r}] for this strategy")));
    }
    let line_colour: Vec<usize> = match strategy {
        AffineStrategy::ParallelBalanced => {
            let mut col = vec![0; plane.lines().len()];
            for (j, class) in parallel_classes(&plane)?.iter().enumerate() {
                for &l in class {
                    col[l] = j % r + 1;
                }
            }
            col
        }
        AffineStrategy::RoundRobin => {
            let mut order: Vec<usize> = (0..plane.lines().len()).collect();
            order.shuffle(&mut rng_from_seed(seed));
            let mut col = vec![0; order.len()];
            for (i, &l) in order.iter().enumerate() {
                col[l] = i % r + 1;
            }
            col
        }
    };
    let c = colour_lines(qu * qu, r, plane.lines(), |i| line_colour[i])?;
    debug_assert!(c.is_complete());
    Ok(c)
}

/// Output of [`fq3_coloring`].
#[derive(Clone, Debug)]
pub struct Fq3Coloring {
    /// Colour `i + 1` is exactly the pairs on lines of the family with
    /// `lambda = i`; every other pair is uncoloured.
    pub pre_completion: ColoredCompleteGraph,
    /// Pairs outside the first `r` families, in lexicographic order.
    pub leftover: Vec<(usize, usize)>,
    /// `pre_completion` with the leftover pairs coloured round-robin.
    pub completed: ColoredCompleteGraph,
}

/// Colours pairs of F_q^3 by the slope family (`lambda = 0..r`) of the line
/// through them, then completes the remaining pairs round-robin.
pub fn fq3_coloring(q: u64, r: usize) -> Result<Fq3Coloring> {
    if r == 0 || r as u64 > q {
        return Err(out_of_range(format!("r = {r} outside [1, {q}]")));
    }
    let n = (q * q * q) as usize;
    if n > MAX_VERTICES {
        return Err(out_of_range(format!("q^3 = {n} exceeds {MAX_VERTICES} vertices")));
    }
    let families: Vec<IncidenceStructure> = (0..r as u64).map(|l| fq3_line_family(q, l)).collect::<Result<_>>()?;
    let mut pre = ColoredCompleteGraph::uncoloured(n, r)?;
    for (i, fam) in families.iter().enumerate() {
        for line in fam.lines() {
            for (a, &u) in line.iter().enumerate() {
                for &v in &line[a + 1..] {
                    if let Some(other) = pre.colour_of(u, v) {
                        return Err(Error::Invariant(format!(
                            "pair ({u}, {v}) lies on lines of families {} and {i}",
                            other - 1
                        )));
                    }
                    pre.set_colour(u, v, i + 1);
                }
            }
        }
    }
    let leftover = pre.uncoloured_pairs();
    let mut completed = pre.clone();
    for (i, &(u, v)) in leftover.iter().enumerate() {
        completed.set_colour(u, v, i % r + 1);
    }
    Ok(Fq3Coloring { pre_completion: pre, leftover, completed })
}

/// `(s / 2et) * log2(2et / s)` clamped to `[0, 1]`.
pub fn lower_bound_p(s: u32, t: u32) -> Result<f64> {
    if s < 2 || t < s {
        return Err(out_of_range(format!("need 2 <= s <= t, got s = {s}, t = {t}")));
    }
    let x = 2.0 * std::f64::consts::E * t as f64 / s as f64;
    Ok((x.log2() / x).clamp(0.0, 1.0))
}

/// Parameters of `G(N, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GnpParams {
    pub n: usize,
    pub p: f64,
    pub seed: u64,
}

/// Samples `G(N, p)`: pairs `(u, v)`, `u < v`, are visited in lexicographic
/// order and each becomes an edge when the next uniform `f64` draw is
/// below `p`.
pub fn sample_gnp(params: GnpParams) -> Result<SimpleGraph> {
    if params.n > MAX_VERTICES {
        return Err(out_of_range(format!("N = {} exceeds {MAX_VERTICES}", params.n)));
    }
    if !(0.0..=1.0).contains(&params.p) {
        return Err(out_of_range(format!("p = {} not in [0, 1]", params.p)));
    }
    let mut rng = rng_from_seed(params.seed);
    let mut g = SimpleGraph::empty(params.n);
    for u in 0..params.n {
        for v in u + 1..params.n {
            if rng.gen::<f64>() < params.p {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// Largest `C(N, n)` enumerated by [`BadSetMode::Exact`].
pub const EXACT_BAD_SET_BUDGET: u128 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "kebab-case")]
pub enum BadSetMode {
    Exact,
    Sampled { trials: u64, seed: u64 },
}

/// Result of [`count_bad_sets`].
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BadSetCount {
    /// `C(N, n)`.
    pub total_sets: f64,
    /// Exact count (exact mode) or `total_sets * bad_fraction` (sampled).
    pub estimate: f64,
    /// Standard error of `estimate`; zero in exact mode.
    pub std_error: f64,
    /// Subsets examined.
    pub trials: u64,
    pub exact: bool,
}

/// Counts `n`-subsets `U` for which `G[U]` has no `K_s` or no independent
/// `t`-set.
pub fn count_bad_sets(g: &SimpleGraph, n: usize, s: usize, t: usize, mode: BadSetMode) -> Result<BadSetCount> {
    let big_n = g.n();
    if n > big_n || s == 0 || t == 0 {
        return Err(out_of_range(format!("need 1 <= s, t and n <= N, got n = {n}, N = {big_n}")));
    }
    let total = binomial(big_n as u64, n as u64);
    match mode {
        BadSetMode::Exact => {
            if total > EXACT_BAD_SET_BUDGET {
                return Err(Error::BudgetExceeded { what: "exact bad-set count", needed: total, cap: EXACT_BAD_SET_BUDGET });
            }
            crate::graph::check_oracle_size(big_n)?;
            let rows = g.rows64();
            let co = g.complement().rows64();
            let count = par_count_subsets(big_n, n, |u, _| !has_clique_in_mask(&rows, u, s) || !has_clique_in_mask(&co, u, t));
            Ok(BadSetCount { total_sets: total as f64, estimate: count as f64, std_error: 0.0, trials: total as u64, exact: true })
        }
        BadSetMode::Sampled { trials, seed } => {
            if trials == 0 {
                return Err(out_of_range("sampled mode needs at least one trial"));
            }
            let mut rng = rng_from_seed(seed);
            let co = g.complement();
            let small = big_n <= 64;
            let (rows, corows) = if small { (g.rows64(), co.rows64()) } else { (Vec::new(), Vec::new()) };
            let mut bad = 0u64;
            for _ in 0..trials {
                let pick = rand::seq::index::sample(&mut rng, big_n, n).into_vec();
                let is_bad = if small {
                    let u = mask_of(&pick);
                    !has_clique_in_mask(&rows, u, s) || !has_clique_in_mask(&corows, u, t)
                } else {
                    let u = VertexSet::new(pick);
                    find_clique_within(g, &u, s).is_none() || find_clique_within(&co, &u, t).is_none()
                };
                bad += is_bad as u64;
            }
            let frac = bad as f64 / trials as f64;
            let total = total as f64;
            Ok(BadSetCount {
                total_sets: total,
                estimate: total * frac,
                std_error: total * (frac * (1.0 - frac) / trials as f64).sqrt(),
                trials,
                exact: false,
            })
        }
    }
}
