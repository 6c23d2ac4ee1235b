//! Red/blue colourings of k-subsets, the two transformations between such
//! colourings and graphs, and brute-force oracles for `f_k(n, s, t)` and
//! `g(n, s, t)`.
//!
//! With `k = s + t - 2`:
//!
//! * [`coloring_to_graph`] turns a colouring `chi` into a graph in which
//!   every `s`-set whose `k`-supersets are all blue is a clique and every
//!   `t`-set whose `k`-supersets are all red is independent. A pair cannot be
//!   forced both ways: the `s`-set and the `t`-set would share it, so their
//!   union has at most `k` elements and any `k`-set containing the union
//!   would need both colours.
//! * [`graph_to_coloring`] colours a `k`-set blue if it spans a `K_s` and red
//!   if it spans an independent `t`-set. Both cannot happen since the two
//!   sets would share at least two vertices.
//!
//! Both assertions are checked at runtime and surface as
//! [`Error::Invariant`].
//!
//! `ksc` text format: header `ksc <N> <k>`, then one line holding the
//! `C(N, k)` colour bits (blue = 1) in colex order as hex, most significant
//! bit of each digit first, zero-padded to a whole digit.

use std::ops::ControlFlow;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{binomial, binomial_u64, colex_rank_mask, for_each_subset, members_of};
use crate::error::{out_of_range, parse_err, Error, Result};
use crate::graph::{check_oracle_size, SimpleGraph, VertexSet};
use crate::search::has_clique_in_mask;

/// Hard cap on `C(N, k)` for a stored colouring.
pub const MAX_KSUBSETS: u64 = 1 << 24;
/// Largest `N` enumerated by [`g_oracle`].
pub const G_ORACLE_MAX_N: usize = 7;
/// Largest `C(n_max, k)` enumerated by [`f_oracle`].
pub const F_ORACLE_MAX_KSUBSETS: u64 = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Colour {
    Red,
    Blue,
}

impl std::str::FromStr for Colour {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "red" => Ok(Colour::Red),
            "blue" => Ok(Colour::Blue),
            _ => Err(out_of_range(format!("unknown colour `{s}`"))),
        }
    }
}

/// Default for pairs that neither condition of [`coloring_to_graph`] forces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TieBreak {
    #[default]
    NonEdge,
    Edge,
}

impl std::str::FromStr for TieBreak {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "nonedge" | "non-edge" => Ok(TieBreak::NonEdge),
            "edge" => Ok(TieBreak::Edge),
            _ => Err(out_of_range(format!("unknown tie-break `{s}`"))),
        }
    }
}

/// Parameters `n, s, t` and the subset size `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RamseyParams {
    pub n: usize,
    pub s: usize,
    pub t: usize,
    pub k: usize,
}

impl RamseyParams {
    /// `k = s + t - 2`, the case where `f` and `g` coincide.
    pub fn reduction(n: usize, s: usize, t: usize) -> Result<Self> {
        if s < 2 || t < 2 {
            return Err(out_of_range("need s, t >= 2"));
        }
        let p = RamseyParams { n, s, t, k: s + t - 2 };
        if n < p.k {
            return Err(out_of_range(format!("need n >= s + t - 2 = {}", p.k)));
        }
        Ok(p)
    }

    /// Arbitrary `k` with `n >= k >= max(s, t)` and `s, t >= 2`.
    pub fn general(n: usize, s: usize, t: usize, k: usize) -> Result<Self> {
        if s < 2 || t < 2 || k < s.max(t) || n < k {
            return Err(out_of_range(format!("need n >= k >= s, t >= 2, got n={n} k={k} s={s} t={t}")));
        }
        Ok(RamseyParams { n, s, t, k })
    }
}

/// A red/blue colouring of the `k`-subsets of `[0, N)`, indexed by colex rank.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct KSubsetColoring {
    ground: usize,
    k: usize,
    len: u64,
    bits: Vec<u64>,
}

impl KSubsetColoring {
    fn with_fill(ground: usize, k: usize, fill: u64) -> Result<Self> {
        let len = binomial(ground as u64, k as u64);
        if len > MAX_KSUBSETS as u128 {
            return Err(Error::BudgetExceeded { what: "k-subset colouring", needed: len, cap: MAX_KSUBSETS as u128 });
        }
        let len = len as u64;
        let mut c = KSubsetColoring { ground, k, len, bits: vec![fill; len.div_ceil(64) as usize] };
        c.trim();
        Ok(c)
    }

    fn trim(&mut self) {
        let extra = (self.bits.len() as u64 * 64) - self.len;
        if extra > 0 {
            if let Some(last) = self.bits.last_mut() {
                *last &= u64::MAX >> extra;
            }
        }
    }

    pub fn all_red(ground: usize, k: usize) -> Result<Self> {
        Self::with_fill(ground, k, 0)
    }

    pub fn all_blue(ground: usize, k: usize) -> Result<Self> {
        Self::with_fill(ground, k, u64::MAX)
    }

    /// Colouring whose bit `i` (blue = 1) is bit `i` of `mask`.
    pub fn from_mask(ground: usize, k: usize, mask: u64) -> Result<Self> {
        let mut c = Self::all_red(ground, k)?;
        if c.len > 64 {
            return Err(out_of_range("mask colourings need C(N, k) <= 64"));
        }
        if let Some(w) = c.bits.first_mut() {
            *w = mask;
        }
        c.trim();
        Ok(c)
    }

    /// Uniformly random colouring from a seeded generator.
    pub fn random(ground: usize, k: usize, seed: u64) -> Result<Self> {
        use rand::Rng;
        let mut c = Self::all_red(ground, k)?;
        let mut rng = crate::constructions::rng_from_seed(seed);
        for w in c.bits.iter_mut() {
            *w = rng.gen();
        }
        c.trim();
        Ok(c)
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// `C(N, k)`.
    pub fn len(&self) -> u64 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn colour(&self, rank: u64) -> Colour {
        if self.bits[(rank / 64) as usize] >> (rank % 64) & 1 == 1 {
            Colour::Blue
        } else {
            Colour::Red
        }
    }

    pub fn set(&mut self, rank: u64, colour: Colour) {
        let (w, b) = ((rank / 64) as usize, rank % 64);
        match colour {
            Colour::Blue => self.bits[w] |= 1 << b,
            Colour::Red => self.bits[w] &= !(1 << b),
        }
    }

    /// Colour of a `k`-subset given as a mask.
    pub fn colour_of_mask(&self, mask: u64) -> Colour {
        self.colour(colex_rank_mask(mask))
    }

    pub fn blue_count(&self) -> u64 {
        self.bits.iter().map(|w| w.count_ones() as u64).sum()
    }

    pub fn to_ksc(&self) -> String {
        let digits = self.len.div_ceil(4);
        let mut hex = String::with_capacity(digits as usize);
        for d in 0..digits {
            let mut v = 0u32;
            for j in 0..4 {
                let rank = d * 4 + j;
                let bit = rank < self.len && self.colour(rank) == Colour::Blue;
                v |= (bit as u32) << (3 - j);
            }
            hex.push(char::from_digit(v, 16).expect("nibble"));
        }
        format!("ksc {} {}\n{}\n", self.ground, self.k, hex)
    }

    pub fn parse_ksc(text: &str) -> Result<Self> {
        let mut rows = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty());
        let (hl, header) = rows.next().ok_or_else(|| parse_err(1, "missing `ksc <N> <k>` header"))?;
        let toks: Vec<&str> = header.split_whitespace().collect();
        let ["ksc", n, k] = toks[..] else {
            return Err(parse_err(hl, "expected header `ksc <N> <k>`"));
        };
        let n: usize = n.parse().map_err(|_| parse_err(hl, "bad ground-set size"))?;
        let k: usize = k.parse().map_err(|_| parse_err(hl, "bad subset size"))?;
        let mut c = Self::all_red(n, k).map_err(|e| parse_err(hl, e.to_string()))?;
        let (ln, hex) = rows.next().unwrap_or((hl + 1, ""));
        if let Some((extra, _)) = rows.next() {
            return Err(parse_err(extra, "unexpected content after the bitstring"));
        }
        let want = c.len.div_ceil(4) as usize;
        if hex.len() != want {
            return Err(parse_err(ln, format!("expected {want} hex digits, found {}", hex.len())));
        }
        for (d, ch) in hex.chars().enumerate() {
            let v = ch.to_digit(16).ok_or_else(|| parse_err(ln, format!("bad hex digit `{ch}`")))?;
            for j in 0..4u64 {
                if v >> (3 - j) & 1 == 1 {
                    let rank = d as u64 * 4 + j;
                    if rank >= c.len {
                        return Err(parse_err(ln, "non-zero padding bits"));
                    }
                    c.set(rank, Colour::Blue);
                }
            }
        }
        Ok(c)
    }
}

impl std::fmt::Debug for KSubsetColoring {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "KSubsetColoring({})", self.to_ksc().replace('\n', " ").trim_end())
    }
}

/// All `m`-subsets of `[0, n)` as masks, in colex order (= increasing mask).
fn subsets_colex(n: usize, m: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(binomial_u64(n, m) as usize);
    let _ = for_each_subset::<()>(n, m, |mask, _| {
        out.push(mask);
        ControlFlow::Continue(())
    });
    out.sort_unstable();
    out
}

/// Per-`m`-subset flag: does some `k`-superset have colour `colour`?
fn covered(chi: &KSubsetColoring, m: usize, colour: Colour) -> Vec<bool> {
    let n = chi.ground;
    let mut cov = vec![false; binomial_u64(n, m) as usize];
    let ks = subsets_colex(n, chi.k);
    for (rank, &kmask) in ks.iter().enumerate() {
        if chi.colour(rank as u64) != colour {
            continue;
        }
        let members = members_of(kmask);
        let _ = for_each_subset::<()>(members.len(), m, |_, idx| {
            let sub = idx.iter().fold(0u64, |acc, &i| acc | 1 << members[i]);
            cov[colex_rank_mask(sub) as usize] = true;
            ControlFlow::Continue(())
        });
    }
    cov
}

fn all_subsets_covered(u: &[usize], m: usize, cov: &[bool]) -> bool {
    for_each_subset::<()>(u.len(), m, |_, idx| {
        let sub = idx.iter().fold(0u64, |acc, &i| acc | 1 << u[i]);
        if cov[colex_rank_mask(sub) as usize] {
            ControlFlow::Continue(())
        } else {
            ControlFlow::Break(())
        }
    })
    .is_continue()
}

/// An `n`-set whose `s`-subsets all lie in red `k`-sets, or whose
/// `t`-subsets all lie in blue `k`-sets. The lexicographically first such
/// set is returned.
pub fn good_set_witness(chi: &KSubsetColoring, params: &RamseyParams) -> Result<Option<VertexSet>> {
    let RamseyParams { n, s, t, k } = *params;
    if chi.k != k || k > n || n > chi.ground {
        return Err(out_of_range(format!("need k <= n <= N with k = {}, got n = {n}, N = {}", chi.k, chi.ground)));
    }
    check_oracle_size(chi.ground)?;
    let red = covered(chi, s, Colour::Red);
    let blue = covered(chi, t, Colour::Blue);
    let mut found = None;
    let _ = for_each_subset(chi.ground, n, |_, u| {
        if all_subsets_covered(u, s, &red) || all_subsets_covered(u, t, &blue) {
            found = Some(VertexSet::new(u.to_vec()));
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    Ok(found)
}

/// An `n`-set `U` such that `G[U]` has no `K_s` or no independent `t`-set,
/// lexicographically first.
pub fn has_unbalanced_set(g: &SimpleGraph, n: usize, s: usize, t: usize) -> Result<Option<VertexSet>> {
    if n > g.n() || s == 0 || t == 0 {
        return Err(out_of_range(format!("need n <= {} and s, t >= 1", g.n())));
    }
    check_oracle_size(g.n())?;
    let rows = g.rows64();
    let co = g.complement().rows64();
    let (hit, _) = crate::combinatorics::par_find_first_subset(g.n(), n, |u, _| {
        !has_clique_in_mask(&rows, u, s) || !has_clique_in_mask(&co, u, t)
    });
    Ok(hit.map(VertexSet::new))
}

/// Pairs decided by the two conditions of [`coloring_to_graph`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForcedPairs {
    pub edges: Vec<(usize, usize)>,
    pub non_edges: Vec<(usize, usize)>,
}

fn check_reduction_k(chi: &KSubsetColoring, s: usize, t: usize) -> Result<()> {
    if s < 2 || t < 2 || chi.k != s + t - 2 {
        return Err(out_of_range(format!("need s, t >= 2 and k = s + t - 2, got k = {}", chi.k)));
    }
    if chi.ground < chi.k {
        return Err(out_of_range("need N >= k"));
    }
    check_oracle_size(chi.ground)
}

/// Pairs inside an `s`-set with only blue `k`-supersets, and pairs inside a
/// `t`-set with only red `k`-supersets. Errors if some pair is in both.
pub fn forced_pairs(chi: &KSubsetColoring, s: usize, t: usize) -> Result<ForcedPairs> {
    check_reduction_k(chi, s, t)?;
    let n = chi.ground;
    let red_cov = covered(chi, s, Colour::Red);
    let blue_cov = covered(chi, t, Colour::Blue);
    let mut edge = vec![false; n * n];
    let mut non = vec![false; n * n];
    let mark = |sets: Vec<u64>, cov: &[bool], out: &mut Vec<bool>| {
        for (rank, &m) in sets.iter().enumerate() {
            if cov[rank] {
                continue;
            }
            let vs = members_of(m);
            for (i, &a) in vs.iter().enumerate() {
                for &b in &vs[i + 1..] {
                    out[a * n + b] = true;
                }
            }
        }
    };
    mark(subsets_colex(n, s), &red_cov, &mut edge);
    mark(subsets_colex(n, t), &blue_cov, &mut non);
    let mut forced = ForcedPairs { edges: Vec::new(), non_edges: Vec::new() };
    for a in 0..n {
        for b in a + 1..n {
            match (edge[a * n + b], non[a * n + b]) {
                (true, true) => {
                    return Err(Error::Invariant(format!("pair ({a}, {b}) forced to be both an edge and a non-edge")))
                }
                (true, false) => forced.edges.push((a, b)),
                (false, true) => forced.non_edges.push((a, b)),
                (false, false) => {}
            }
        }
    }
    Ok(forced)
}

/// The graph `G_chi` on `[0, N)` for a colouring of `(s+t-2)`-subsets.
pub fn coloring_to_graph(chi: &KSubsetColoring, s: usize, t: usize, tie_break: TieBreak) -> Result<SimpleGraph> {
    let forced = forced_pairs(chi, s, t)?;
    let n = chi.ground;
    let mut g = SimpleGraph::empty(n);
    match tie_break {
        TieBreak::NonEdge => {
            for &(a, b) in &forced.edges {
                g.add_edge(a, b);
            }
        }
        TieBreak::Edge => {
            g = SimpleGraph::complete(n);
            for &(a, b) in &forced.non_edges {
                g.remove_edge(a, b);
            }
        }
    }
    Ok(g)
}

/// Colours each `(s+t-2)`-subset blue if it spans a `K_s`, red if it spans
/// an independent `t`-set, and `default` otherwise.
pub fn graph_to_coloring(g: &SimpleGraph, s: usize, t: usize, default: Colour) -> Result<KSubsetColoring> {
    if s < 2 || t < 2 {
        return Err(out_of_range("need s, t >= 2"));
    }
    let k = s + t - 2;
    if k > g.n() {
        return Err(out_of_range(format!("need k = {k} <= n = {}", g.n())));
    }
    check_oracle_size(g.n())?;
    let rows = g.rows64();
    let co = g.complement().rows64();
    let mut chi = KSubsetColoring::all_red(g.n(), k)?;
    for (rank, m) in subsets_colex(g.n(), k).into_iter().enumerate() {
        let blue = has_clique_in_mask(&rows, m, s);
        let red = has_clique_in_mask(&co, m, t);
        let colour = match (blue, red) {
            (true, true) => {
                return Err(Error::Invariant(format!(
                    "k-set {} spans both a K_{s} and an independent {t}-set",
                    VertexSet::from_mask(m)
                )))
            }
            (true, false) => Colour::Blue,
            (false, true) => Colour::Red,
            (false, false) => default,
        };
        chi.set(rank as u64, colour);
    }
    Ok(chi)
}

/// Answer of an exhaustive oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult<W> {
    /// Smallest `N <= n_max` with the property, if any.
    pub value: Option<usize>,
    /// The largest enumerated `N` without the property, with the first
    /// object (in enumeration order) witnessing that.
    pub counterexample: Option<(usize, W)>,
    /// Objects examined over all candidate `N`.
    pub checked: u64,
}

fn pairs_of(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// `g(n, s, t)` by enumerating every graph on `N = n, n+1, ..., n_max`
/// vertices in increasing edge-mask order. When `s == t` only one graph of
/// each complementary pair is visited.
pub fn g_oracle(n: usize, s: usize, t: usize, n_max: usize) -> Result<OracleResult<SimpleGraph>> {
    if n == 0 || s == 0 || t == 0 {
        return Err(out_of_range("need n, s, t >= 1"));
    }
    if n_max > G_ORACLE_MAX_N {
        return Err(Error::BudgetExceeded { what: "g oracle vertex count", needed: n_max as u128, cap: G_ORACLE_MAX_N as u128 });
    }
    let mut result = OracleResult { value: None, counterexample: None, checked: 0 };
    for big_n in n..=n_max {
        let e = pairs_of(big_n);
        // with s == t the top pair bit can be fixed to 0 (complement symmetry)
        let limit: u64 = if s == t && e > 0 { 1 << (e - 1) } else { 1 << e };
        let subsets: Vec<u64> = subsets_colex(big_n, n);
        let balanced = (0..limit).into_par_iter().find_first(|&mask| {
            let g = SimpleGraph::from_pair_mask(big_n, mask as u128);
            let rows = g.rows64();
            let co = g.complement().rows64();
            subsets
                .iter()
                .all(|&u| has_clique_in_mask(&rows, u, s) && has_clique_in_mask(&co, u, t))
        });
        result.checked += balanced.map_or(limit, |m| m + 1);
        match balanced {
            Some(mask) => result.counterexample = Some((big_n, SimpleGraph::from_pair_mask(big_n, mask as u128))),
            None => {
                result.value = Some(big_n);
                break;
            }
        }
    }
    Ok(result)
}

/// Precomputed subset structure for [`f_oracle`] on one ground-set size.
struct FTables {
    /// Per `s`-subset: mask over `k`-subset ranks containing it.
    s_sup: Vec<u64>,
    t_sup: Vec<u64>,
    /// Per `n`-subset: ranks of its `s`-subsets and `t`-subsets.
    n_s: Vec<Vec<u32>>,
    n_t: Vec<Vec<u32>>,
}

impl FTables {
    fn new(ground: usize, p: &RamseyParams) -> Self {
        let ks = subsets_colex(ground, p.k);
        let sup = |m: usize| -> Vec<u64> {
            subsets_colex(ground, m)
                .iter()
                .map(|&sub| ks.iter().enumerate().filter(|(_, &km)| km & sub == sub).fold(0u64, |acc, (i, _)| acc | 1 << i))
                .collect()
        };
        let inner = |m: usize| -> Vec<Vec<u32>> {
            subsets_colex(ground, p.n)
                .iter()
                .map(|&u| subsets_colex(ground, m).iter().enumerate().filter(|(_, &sm)| sm & u == sm).map(|(i, _)| i as u32).collect())
                .collect()
        };
        FTables { s_sup: sup(p.s), t_sup: sup(p.t), n_s: inner(p.s), n_t: inner(p.t) }
    }

    /// True iff colouring `blue` (bit per k-rank) has a good `n`-set.
    fn has_good(&self, blue: u64, full: u64, red_cov: &mut Vec<bool>, blue_cov: &mut Vec<bool>) -> bool {
        let red = !blue & full;
        red_cov.clear();
        red_cov.extend(self.s_sup.iter().map(|&m| m & red != 0));
        blue_cov.clear();
        blue_cov.extend(self.t_sup.iter().map(|&m| m & blue != 0));
        self.n_s
            .iter()
            .zip(&self.n_t)
            .any(|(ss, ts)| ss.iter().all(|&i| red_cov[i as usize]) || ts.iter().all(|&i| blue_cov[i as usize]))
    }
}

/// `f_k(n, s, t)` by enumerating every red/blue colouring of the `k`-subsets
/// of `[0, N)` for `N = n, ..., n_max`, in increasing bit-mask order.
pub fn f_oracle(params: &RamseyParams, n_max: usize) -> Result<OracleResult<KSubsetColoring>> {
    let p = RamseyParams::general(params.n, params.s, params.t, params.k)?;
    let top = binomial(n_max as u64, p.k as u64);
    if top > F_ORACLE_MAX_KSUBSETS as u128 {
        return Err(Error::BudgetExceeded { what: "f oracle k-subset count", needed: top, cap: F_ORACLE_MAX_KSUBSETS as u128 });
    }
    let mut result = OracleResult { value: None, counterexample: None, checked: 0 };
    const CHUNK: u64 = 1 << 12;
    for ground in p.n..=n_max {
        let len = binomial_u64(ground, p.k);
        let total: u64 = 1 << len;
        let full = total - 1;
        let tables = FTables::new(ground, &p);
        let chunks = total.div_ceil(CHUNK);
        let bad = (0..chunks).into_par_iter().find_map_first(|c| {
            let (mut rc, mut bc) = (Vec::new(), Vec::new());
            (c * CHUNK..((c + 1) * CHUNK).min(total)).find(|&blue| !tables.has_good(blue, full, &mut rc, &mut bc))
        });
        result.checked += bad.map_or(total, |m| m + 1);
        match bad {
            Some(mask) => result.counterexample = Some((ground, KSubsetColoring::from_mask(ground, p.k, mask)?)),
            None => {
                result.value = Some(ground);
                break;
            }
        }
    }
    Ok(result)
}
