//! Semisaturated and saturated colour patterns.
//!
//! A complete `r`-colouring of `K_n` is `(r, K_k)`-semisaturated when every
//! way of adding a vertex (and then possibly more) with coloured edges
//! creates a new monochromatic `K_k`.
//!
//! It suffices to look at one added vertex `w`. Any larger extension starts
//! by adding a single vertex, and a monochromatic `K_k` through that vertex
//! stays in the final graph. Conversely, an extension by one vertex is
//! itself an extension. A one-vertex extension is the same thing as a
//! vertex colouring `chi: V -> [r]` (edge `wu` gets colour `chi(u)`), and
//! every new monochromatic `K_k` passes through `w`. It has colour `i`
//! exactly when `G_i` has a `K_{k-1}` inside `chi^{-1}(i)`.
//!
//! [`is_semisaturated`] checks that reformulation with bit masks.
//! [`is_semisaturated_direct`] builds each extension and looks for a
//! monochromatic `K_k` through the new vertex by plain enumeration; it is
//! kept as an independent oracle.

use std::ops::ControlFlow;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{binomial, for_each_subset, par_find_first_subset};
use crate::constructions::rng_from_seed;
use crate::error::{out_of_range, Error, Result};
use crate::graph::{check_oracle_size, VertexSet};
use crate::pattern::ColoredCompleteGraph;
use crate::search::{find_clique, has_clique_in_mask};

/// Default cap on `r^n` vertex colourings checked exhaustively.
pub const DEFAULT_MAX_COLORINGS: u128 = 1_000_000_000;
/// Default cap on `C(n, ceil(n/r))` subsets checked exhaustively.
pub const DEFAULT_MAX_SUBSETS: u128 = 100_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Holds,
    Fails,
    /// Not decided: a budget was hit or only sampled evidence exists.
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    /// `colours[v]` in `1..=r`; also the edge colours of a one-vertex
    /// extension with no new monochromatic `K_k`.
    VertexColouring { colours: Vec<usize> },
    /// A colour class and a vertex set in which it has no `K_{k-1}`.
    ClassSubset { colour: usize, set: VertexSet },
    /// A monochromatic `K_k` already present.
    MonochromaticClique { colour: usize, vertices: VertexSet },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub outcome: Outcome,
    pub witness: Option<Witness>,
    /// Objects (colourings or subsets) examined.
    pub checked: u64,
    /// False when the verdict rests on random sampling.
    pub exhaustive: bool,
}

impl Verdict {
    pub fn holds(&self) -> bool {
        self.outcome == Outcome::Holds
    }

    fn fails(witness: Witness, checked: u64, exhaustive: bool) -> Self {
        Verdict { outcome: Outcome::Fails, witness: Some(witness), checked, exhaustive }
    }
}

/// Random sampling used when exhaustive enumeration is over budget.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sampling {
    pub trials: u64,
    pub seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOptions {
    /// Exhaustive cap (`r^n` colourings or `C(n, m)` subsets).
    pub max_exhaustive: u128,
    /// Fallback when over the cap; without it, over-budget checks error.
    pub sampling: Option<Sampling>,
}

impl CheckOptions {
    pub fn colorings() -> Self {
        CheckOptions { max_exhaustive: DEFAULT_MAX_COLORINGS, sampling: None }
    }

    pub fn subsets() -> Self {
        CheckOptions { max_exhaustive: DEFAULT_MAX_SUBSETS, sampling: None }
    }

    pub fn with_sampling(mut self, trials: u64, seed: u64) -> Self {
        self.sampling = Some(Sampling { trials, seed });
        self
    }
}

/// Mask adjacency for each colour class.
fn class_rows(c: &ColoredCompleteGraph) -> Vec<Vec<u64>> {
    c.classes().iter().map(|g| g.rows64()).collect()
}

fn check_pattern(c: &ColoredCompleteGraph, k: usize) -> Result<()> {
    if c.r() < 2 {
        return Err(out_of_range("need r >= 2"));
    }
    if k < 2 {
        return Err(out_of_range("need k >= 2"));
    }
    if !c.is_complete() {
        return Err(out_of_range("pattern must colour every pair"));
    }
    check_oracle_size(c.n())
}

/// `r^n`, saturating.
fn power(r: usize, n: usize) -> u128 {
    (0..n).try_fold(1u128, |acc, _| acc.checked_mul(r as u128)).unwrap_or(u128::MAX)
}

/// Decodes colouring index `idx` (vertex 0 is the most significant base-`r`
/// digit, so index order is lexicographic order) into digits `0..r`.
fn decode(mut idx: u64, n: usize, r: usize, digits: &mut [usize]) {
    for v in (0..n).rev() {
        digits[v] = (idx % r as u64) as usize;
        idx /= r as u64;
    }
}

fn masks_of(digits: &[usize], r: usize, masks: &mut [u64]) {
    masks[..r].fill(0);
    for (v, &d) in digits.iter().enumerate() {
        masks[d] |= 1 << v;
    }
}

/// Increments the digit vector; returns false on wrap-around.
fn increment(digits: &mut [usize], r: usize) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < r {
            return true;
        }
        *d = 0;
    }
    false
}

/// Finds the first vertex colouring (in lexicographic order) for which
/// `satisfied` is false, sharding the index range over rayon.
fn first_unsatisfied(
    n: usize,
    r: usize,
    total: u64,
    satisfied: impl Fn(&[u64]) -> bool + Sync,
) -> Option<Vec<usize>> {
    const CHUNK: u64 = 1 << 14;
    let chunks = total.div_ceil(CHUNK);
    (0..chunks).into_par_iter().find_map_first(|ch| {
        let (start, end) = (ch * CHUNK, ((ch + 1) * CHUNK).min(total));
        let mut digits = vec![0usize; n];
        let mut masks = vec![0u64; r];
        decode(start, n, r, &mut digits);
        for _ in start..end {
            masks_of(&digits, r, &mut masks);
            if !satisfied(&masks) {
                return Some(digits.clone());
            }
            increment(&mut digits, r);
        }
        None
    })
}

fn sampled_unsatisfied(
    n: usize,
    r: usize,
    s: Sampling,
    satisfied: impl Fn(&[u64]) -> bool,
) -> Option<Vec<usize>> {
    let mut rng = rng_from_seed(s.seed);
    let mut digits = vec![0usize; n];
    let mut masks = vec![0u64; r];
    for _ in 0..s.trials {
        for d in digits.iter_mut() {
            *d = rng.gen_range(0..r);
        }
        masks_of(&digits, r, &mut masks);
        if !satisfied(&masks) {
            return Some(digits);
        }
    }
    None
}

/// Shared driver for the two semisaturation checks.
fn vertex_colouring_check(
    c: &ColoredCompleteGraph,
    k: usize,
    opts: &CheckOptions,
    satisfied: impl Fn(&[u64]) -> bool + Sync,
) -> Result<Verdict> {
    check_pattern(c, k)?;
    let (n, r) = (c.n(), c.r());
    let total = power(r, n);
    let to_witness = |d: Vec<usize>| Witness::VertexColouring { colours: d.into_iter().map(|x| x + 1).collect() };
    if total <= opts.max_exhaustive {
        let total = total as u64;
        return Ok(match first_unsatisfied(n, r, total, &satisfied) {
            Some(d) => {
                let checked = d.iter().fold(0u64, |acc, &x| acc * r as u64 + x as u64) + 1;
                Verdict::fails(to_witness(d), checked, true)
            }
            None => Verdict { outcome: Outcome::Holds, witness: None, checked: total, exhaustive: true },
        });
    }
    let Some(s) = opts.sampling else {
        return Err(Error::BudgetExceeded { what: "vertex colourings", needed: total, cap: opts.max_exhaustive });
    };
    Ok(match sampled_unsatisfied(n, r, s, &satisfied) {
        Some(d) => Verdict::fails(to_witness(d), s.trials, false),
        None => Verdict { outcome: Outcome::Unknown, witness: None, checked: s.trials, exhaustive: false },
    })
}

/// Decides `(r, K_k)`-semisaturation via vertex colourings: holds iff for
/// every `chi: V -> [r]` some class `G_i` has a `K_{k-1}` inside
/// `chi^{-1}(i)`. A failing verdict carries the lexicographically smallest
/// bad colouring.
pub fn is_semisaturated(c: &ColoredCompleteGraph, k: usize, opts: &CheckOptions) -> Result<Verdict> {
    check_oracle_size(c.n())?;
    let rows = class_rows(c);
    vertex_colouring_check(c, k, opts, |masks| {
        rows.iter().zip(masks).any(|(cls, &m)| has_clique_in_mask(cls, m, k - 1))
    })
}

/// Literal one-vertex extension check: for each assignment of colours to
/// the edges from a new vertex `w`, enumerate `(k-1)`-subsets `T` and test
/// whether `T + w` is a monochromatic `K_k`.
pub fn is_semisaturated_direct(c: &ColoredCompleteGraph, k: usize, opts: &CheckOptions) -> Result<Verdict> {
    check_oracle_size(c.n())?;
    let n = c.n();
    let colour: Vec<Vec<usize>> = (0..n).map(|u| (0..n).map(|v| if u == v { 0 } else { c.colour_of(u, v).unwrap_or(0) }).collect()).collect();
    vertex_colouring_check(c, k, opts, |masks| {
        // masks[i] = vertices whose edge to w has colour i + 1
        let edge_to_w = |u: usize| masks.iter().position(|&m| m >> u & 1 == 1).expect("every vertex coloured") + 1;
        for_each_subset(n, k - 1, |_, t| {
            let col = match t.first() {
                Some(&a) => edge_to_w(a),
                None => return ControlFlow::Break(()),
            };
            let mono = t.iter().all(|&a| edge_to_w(a) == col)
                && t.iter().enumerate().all(|(i, &a)| t[i + 1..].iter().all(|&b| colour[a][b] == col));
            if mono {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        })
        .is_break()
    })
}

/// Sufficient condition for semisaturation: for each of the first `r`
/// classes `G_i` and every vertex set `U` of size `ceil(n / r)`, `G_i[U]`
/// contains a `K_{k-1}`. A new vertex has at least `ceil(n / r)` edges of
/// some colour, so this implies semisaturation with `r` colours.
pub fn check_observation(c: &ColoredCompleteGraph, k: usize, r: usize, opts: &CheckOptions) -> Result<Verdict> {
    if r < 2 {
        return Err(out_of_range("need r >= 2"));
    }
    if c.r() < r {
        return Err(out_of_range(format!("pattern has {} classes, need at least {r}", c.r())));
    }
    if k < 2 {
        return Err(out_of_range("need k >= 2"));
    }
    check_oracle_size(c.n())?;
    let n = c.n();
    let m = n.div_ceil(r);
    let rows = class_rows(c);
    let total = binomial(n as u64, m as u64);
    let mut checked = 0u64;
    if total <= opts.max_exhaustive {
        for (i, cls) in rows.iter().enumerate().take(r) {
            let (hit, seen) = par_find_first_subset(n, m, |u, _| !has_clique_in_mask(cls, u, k - 1));
            checked += seen;
            if let Some(u) = hit {
                return Ok(Verdict::fails(Witness::ClassSubset { colour: i + 1, set: VertexSet::new(u) }, checked, true));
            }
        }
        return Ok(Verdict { outcome: Outcome::Holds, witness: None, checked, exhaustive: true });
    }
    let Some(s) = opts.sampling else {
        return Err(Error::BudgetExceeded { what: "observation subsets", needed: total, cap: opts.max_exhaustive });
    };
    let mut rng = rng_from_seed(s.seed);
    for _ in 0..s.trials {
        let pick = rand::seq::index::sample(&mut rng, n, m).into_vec();
        let u = crate::combinatorics::mask_of(&pick);
        checked += 1;
        for (i, cls) in rows.iter().enumerate().take(r) {
            if !has_clique_in_mask(cls, u, k - 1) {
                return Ok(Verdict::fails(Witness::ClassSubset { colour: i + 1, set: VertexSet::new(pick) }, checked, false));
            }
        }
    }
    Ok(Verdict { outcome: Outcome::Unknown, witness: None, checked, exhaustive: false })
}

/// First colour class (with its lexicographically smallest clique) that
/// contains a `K_k`.
pub fn monochromatic_clique(c: &ColoredCompleteGraph, k: usize) -> Option<(usize, VertexSet)> {
    if k == 0 || k > c.n() {
        return None;
    }
    c.classes()
        .iter()
        .enumerate()
        .find_map(|(i, g)| find_clique(g, k).ok().flatten().map(|s| (i + 1, s)))
}

/// True iff no colour class contains `K_k`.
pub fn is_kkfree_pattern(c: &ColoredCompleteGraph, k: usize) -> bool {
    monochromatic_clique(c, k).is_none()
}

/// Saturated = every class `K_k`-free and the pattern semisaturated.
pub fn is_saturated(c: &ColoredCompleteGraph, k: usize, opts: &CheckOptions) -> Result<Verdict> {
    check_pattern(c, k)?;
    if let Some((colour, vertices)) = monochromatic_clique(c, k) {
        return Ok(Verdict::fails(Witness::MonochromaticClique { colour, vertices }, 1, true));
    }
    is_semisaturated(c, k, opts)
}

/// `(r-1)k^2 - (3r-4)k + (2r-3)`, a lower bound on `ssat_r(K_k)` that is
/// exact for `r = 2`.
pub fn ssat_lower_bound_formula(r: i64, k: i64) -> Result<i64> {
    if r < 2 || k < 2 {
        return Err(out_of_range("need r, k >= 2"));
    }
    Ok((r - 1) * k * k - (3 * r - 4) * k + (2 * r - 3))
}

/// `max(ceil(sum_{i=2}^r i / 2), ceil(r^2 / 4))`: the floor obtained by
/// unrolling `ssat_r >= ssat_{r-1} + r/2`.
pub fn ssat_recursion_floor(r: u64) -> Result<u64> {
    if r < 2 {
        return Err(out_of_range("need r >= 2"));
    }
    let sum = r * (r + 1) / 2 - 1;
    Ok(sum.div_ceil(2).max((r * r).div_ceil(4)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    /// A semisaturated pattern.
    Found(ColoredCompleteGraph),
    /// The whole (symmetry-reduced) space was searched: none exists.
    Exhausted,
    /// The node budget ran out first.
    BudgetHit,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    pub outcome: SearchOutcome,
    pub nodes: u64,
}

/// Largest `r^n` for which [`ssat_search`] tabulates vertex colourings.
pub const SEARCH_MAX_COLORINGS: u128 = 1 << 22;

struct SearchCtx {
    n: usize,
    r: usize,
    k: usize,
    edges: Vec<(usize, usize)>,
    /// Class masks of every vertex colouring, `r` words per colouring.
    chi: Vec<u64>,
    budget: u64,
    nodes: AtomicU64,
    out_of_budget: AtomicBool,
}

#[derive(Clone)]
struct Node {
    depth: usize,
    colours: Vec<u8>,
    used: usize,
    class: Vec<Vec<u64>>,
    open: Vec<u64>,
    live: Vec<u32>,
}

enum Step {
    Found(Vec<u8>),
    Exhausted,
    Budget,
}

impl SearchCtx {
    fn chi_masks(&self, idx: u32) -> &[u64] {
        let i = idx as usize * self.r;
        &self.chi[i..i + self.r]
    }

    /// Drops colourings already satisfied by committed edges. Returns false
    /// if some colouring cannot be satisfied by any completion.
    fn refresh(&self, node: &mut Node) -> bool {
        let km = self.k - 1;
        let merged: Vec<Vec<u64>> = node
            .class
            .iter()
            .map(|cls| cls.iter().zip(&node.open).map(|(a, b)| a | b).collect())
            .collect();
        let mut ok = true;
        node.live.retain(|&idx| {
            if !ok {
                return true;
            }
            let masks = self.chi_masks(idx);
            if node.class.iter().zip(masks).any(|(cls, &m)| has_clique_in_mask(cls, m, km)) {
                return false;
            }
            // inside chi^{-1}(i) an open pair is only useful as colour i
            let reachable = merged.iter().zip(masks).any(|(cls, &m)| has_clique_in_mask(cls, m, km));
            if !reachable {
                ok = false;
            }
            true
        });
        ok
    }

    fn child(&self, node: &Node, col: usize) -> Node {
        let (u, v) = self.edges[node.depth];
        let mut c = node.clone();
        c.depth += 1;
        c.colours.push(col as u8);
        c.used = c.used.max(col);
        c.class[col - 1][u] |= 1 << v;
        c.class[col - 1][v] |= 1 << u;
        c.open[u] &= !(1 << v);
        c.open[v] &= !(1 << u);
        c
    }

    /// Colours allowed for the next edge: colours appear in first-use order.
    fn choices(&self, node: &Node) -> std::ops::RangeInclusive<usize> {
        1..=(node.used + 1).min(self.r)
    }

    fn tick(&self, local: &mut u64) -> bool {
        *local += 1;
        if self.nodes.fetch_add(1, Ordering::Relaxed) >= self.budget {
            self.out_of_budget.store(true, Ordering::Relaxed);
            return false;
        }
        true
    }

    fn dfs(&self, mut node: Node, local: &mut u64) -> Step {
        if !self.tick(local) {
            return Step::Budget;
        }
        if !self.refresh(&mut node) {
            return Step::Exhausted;
        }
        if node.depth == self.edges.len() {
            return if node.live.is_empty() { Step::Found(node.colours) } else { Step::Exhausted };
        }
        let mut budget_hit = false;
        for col in self.choices(&node) {
            match self.dfs(self.child(&node, col), local) {
                Step::Found(c) => return Step::Found(c),
                Step::Budget => budget_hit = true,
                Step::Exhausted => {}
            }
            if self.out_of_budget.load(Ordering::Relaxed) {
                return Step::Budget;
            }
        }
        if budget_hit {
            Step::Budget
        } else {
            Step::Exhausted
        }
    }
}

/// Searches for an `(r, K_k)`-semisaturated complete pattern on `n`
/// vertices.
///
/// Edges are coloured in lexicographic order; colours must first appear in
/// increasing order, which removes colour-permutation symmetry (and fixes
/// the first edge to colour 1). A partial pattern is abandoned as soon as
/// some vertex colouring `chi` has no `K_{k-1}` in any class even after
/// adding every still-uncoloured pair inside `chi^{-1}(i)` to class `i`.
/// Subtrees below a fixed depth run in parallel and share the node budget.
pub fn ssat_search(r: usize, k: usize, n: usize, budget: u64) -> Result<SearchResult> {
    if r < 2 || k < 2 || n == 0 {
        return Err(out_of_range("need r, k >= 2 and n >= 1"));
    }
    check_oracle_size(n)?;
    let total = power(r, n);
    if total > SEARCH_MAX_COLORINGS {
        return Err(Error::BudgetExceeded { what: "search colouring table", needed: total, cap: SEARCH_MAX_COLORINGS });
    }
    let mut chi = Vec::with_capacity(total as usize * r);
    let mut digits = vec![0usize; n];
    let mut masks = vec![0u64; r];
    for _ in 0..total {
        masks_of(&digits, r, &mut masks);
        chi.extend_from_slice(&masks);
        increment(&mut digits, r);
    }
    let edges: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let ctx = SearchCtx {
        n,
        r,
        k,
        edges,
        chi,
        budget,
        nodes: AtomicU64::new(0),
        out_of_budget: AtomicBool::new(false),
    };
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let root = Node {
        depth: 0,
        colours: Vec::new(),
        used: 0,
        class: vec![vec![0; n]; r],
        open: (0..n).map(|v| full & !(1 << v)).collect(),
        live: (0..total as u32).collect(),
    };

    // expand breadth-first to get independent subtrees, keeping DFS order
    let mut frontier = vec![root];
    let mut frontier_nodes = 0u64;
    while frontier.len() < 64 && frontier.iter().all(|nd| nd.depth < ctx.edges.len()) {
        let mut next = Vec::new();
        for mut nd in frontier {
            if !ctx.tick(&mut frontier_nodes) {
                return Ok(SearchResult { outcome: SearchOutcome::BudgetHit, nodes: frontier_nodes });
            }
            if !ctx.refresh(&mut nd) {
                continue;
            }
            for col in ctx.choices(&nd) {
                next.push(ctx.child(&nd, col));
            }
        }
        if next.is_empty() {
            return Ok(SearchResult { outcome: SearchOutcome::Exhausted, nodes: frontier_nodes });
        }
        frontier = next;
    }

    // per-subtree counts keep `nodes` independent of scheduling: every
    // subtree before the first hit has been explored completely
    let counts: Vec<AtomicU64> = frontier.iter().map(|_| AtomicU64::new(0)).collect();
    let found = frontier.into_par_iter().enumerate().find_map_first(|(i, nd)| {
        let mut local = 0;
        let step = ctx.dfs(nd, &mut local);
        counts[i].store(local, Ordering::Relaxed);
        match step {
            Step::Found(c) => Some((i, c)),
            _ => None,
        }
    });
    let upto = found.as_ref().map_or(counts.len(), |(i, _)| i + 1);
    let nodes = frontier_nodes + counts[..upto].iter().map(|c| c.load(Ordering::Relaxed)).sum::<u64>();
    let found = found.map(|(_, c)| c);
    let outcome = match found {
        Some(colours) => {
            let mut c = ColoredCompleteGraph::uncoloured(ctx.n, ctx.r)?;
            for (&(u, v), &col) in ctx.edges.iter().zip(&colours) {
                c.set_colour(u, v, col as usize);
            }
            SearchOutcome::Found(c)
        }
        None if ctx.out_of_budget.load(Ordering::Relaxed) => SearchOutcome::BudgetHit,
        None => SearchOutcome::Exhausted,
    };
    Ok(SearchResult { outcome, nodes })
}
