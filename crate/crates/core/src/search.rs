//! Clique and independent-set search over bit rows.
//!
//! All searches pick vertices in increasing order and only extend with
//! higher-indexed candidates, so the first witness found is the
//! lexicographically smallest one. Branches are cut with a greedy colouring
//! bound on the candidate set.

use serde::{Deserialize, Serialize};

use crate::combinatorics::binomial;
use crate::error::{out_of_range, Result};
use crate::graph::{SimpleGraph, VertexSet};

/// Minimal bit-row interface shared by the single-word and wide searches.
trait Row: Clone {
    fn and(&self, other: &Self) -> Self;
    fn count(&self) -> u32;
    fn first(&self) -> Option<usize>;
    fn clear(&mut self, v: usize);
    fn and_not_assign(&mut self, other: &Self);
    fn is_zero(&self) -> bool;
}

impl Row for u64 {
    #[inline]
    fn and(&self, o: &Self) -> Self {
        self & o
    }
    #[inline]
    fn count(&self) -> u32 {
        self.count_ones()
    }
    #[inline]
    fn first(&self) -> Option<usize> {
        (*self != 0).then(|| self.trailing_zeros() as usize)
    }
    #[inline]
    fn clear(&mut self, v: usize) {
        *self &= !(1u64 << v);
    }
    #[inline]
    fn and_not_assign(&mut self, o: &Self) {
        *self &= !o;
    }
    #[inline]
    fn is_zero(&self) -> bool {
        *self == 0
    }
}

#[derive(Clone)]
struct Wide(Vec<u64>);

impl Row for Wide {
    fn and(&self, o: &Self) -> Self {
        Wide(self.0.iter().zip(&o.0).map(|(a, b)| a & b).collect())
    }
    fn count(&self) -> u32 {
        self.0.iter().map(|w| w.count_ones()).sum()
    }
    fn first(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }
    fn clear(&mut self, v: usize) {
        self.0[v / 64] &= !(1u64 << (v % 64));
    }
    fn and_not_assign(&mut self, o: &Self) {
        for (a, b) in self.0.iter_mut().zip(&o.0) {
            *a &= !b;
        }
    }
    fn is_zero(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }
}

/// Upper bound on the clique number of `cand` from a greedy colouring.
fn colour_bound<R: Row>(rows: &[R], cand: &R, limit: u32) -> u32 {
    let mut uncoloured = cand.clone();
    let mut colours = 0;
    while !uncoloured.is_zero() {
        colours += 1;
        if colours >= limit {
            return colours;
        }
        let mut q = uncoloured.clone();
        while let Some(v) = q.first() {
            q.clear(v);
            uncoloured.clear(v);
            q.and_not_assign(&rows[v]);
        }
    }
    colours
}

fn dfs<R: Row>(rows: &[R], cand: R, need: usize, cur: &mut Vec<usize>) -> bool {
    if need == 0 {
        return true;
    }
    if (cand.count() as usize) < need {
        return false;
    }
    if need >= 3 && (colour_bound(rows, &cand, need as u32) as usize) < need {
        return false;
    }
    let mut rest = cand;
    while let Some(v) = rest.first() {
        if (rest.count() as usize) < need {
            return false;
        }
        rest.clear(v);
        let next = rest.and(&rows[v]);
        cur.push(v);
        if dfs(rows, next, need - 1, cur) {
            return true;
        }
        cur.pop();
    }
    false
}

/// Lexicographically smallest `m`-clique inside `allowed`, for adjacency
/// given as one mask per vertex (`n <= 64`).
pub fn clique_in_mask(rows: &[u64], allowed: u64, m: usize) -> Option<u64> {
    let mut cur = Vec::with_capacity(m);
    if dfs(rows, allowed, m, &mut cur) {
        Some(crate::combinatorics::mask_of(&cur))
    } else {
        None
    }
}

/// True iff `allowed` contains an `m`-clique. Cheaper special cases for
/// `m <= 3`, which dominate the saturation checks.
#[inline]
pub fn has_clique_in_mask(rows: &[u64], allowed: u64, m: usize) -> bool {
    match m {
        0 => true,
        1 => allowed != 0,
        2 => {
            let mut a = allowed;
            while a != 0 {
                let v = a.trailing_zeros() as usize;
                a &= a - 1;
                if rows[v] & a != 0 {
                    return true;
                }
            }
            false
        }
        3 => {
            let mut a = allowed;
            while a != 0 {
                let v = a.trailing_zeros() as usize;
                a &= a - 1;
                let mut nb = rows[v] & a;
                while nb != 0 {
                    let u = nb.trailing_zeros() as usize;
                    nb &= nb - 1;
                    if rows[u] & nb != 0 {
                        return true;
                    }
                }
            }
            false
        }
        _ => clique_in_mask(rows, allowed, m).is_some(),
    }
}

fn wide_rows(g: &SimpleGraph) -> Vec<Wide> {
    (0..g.n()).map(|v| Wide(g.row(v).to_vec())).collect()
}

/// Lexicographically smallest `m`-clique among the vertices of `allowed`.
pub fn find_clique_within(g: &SimpleGraph, allowed: &VertexSet, m: usize) -> Option<VertexSet> {
    if m > allowed.len() {
        return None;
    }
    let mut cur = Vec::with_capacity(m);
    let found = if g.n() <= 64 {
        dfs(&g.rows64(), allowed.mask(), m, &mut cur)
    } else {
        let mut a = Wide(vec![0; g.words()]);
        for v in allowed.iter() {
            a.0[v / 64] |= 1 << (v % 64);
        }
        dfs(&wide_rows(g), a, m, &mut cur)
    };
    found.then(|| VertexSet::new(cur))
}

fn all_vertices(g: &SimpleGraph) -> VertexSet {
    VertexSet::new((0..g.n()).collect())
}

/// Lexicographically smallest clique of size `m`, if any. Requires `1 <= m <= n`.
pub fn find_clique(g: &SimpleGraph, m: usize) -> Result<Option<VertexSet>> {
    if m == 0 || m > g.n() {
        return Err(out_of_range(format!("clique size {m} outside [1, {}]", g.n())));
    }
    Ok(find_clique_within(g, &all_vertices(g), m))
}

/// Lexicographically smallest independent set of size `m`, if any.
pub fn find_independent_set(g: &SimpleGraph, m: usize) -> Result<Option<VertexSet>> {
    find_clique(&g.complement(), m)
}

/// Independent set of size at least `ceil(n^2 / (n + 2e))`, built by
/// repeatedly taking a vertex of minimum remaining degree (smallest index on
/// ties) and deleting its closed neighbourhood.
pub fn turan_independent_set(g: &SimpleGraph) -> VertexSet {
    let n = g.n();
    let mut alive = vec![true; n];
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut out = Vec::new();
    let remove = |x: usize, alive: &mut Vec<bool>, degree: &mut Vec<usize>| {
        alive[x] = false;
        for y in 0..n {
            if alive[y] && g.has_edge(x, y) {
                degree[y] -= 1;
            }
        }
    };
    while let Some(v) = (0..n).filter(|&v| alive[v]).min_by_key(|&v| (degree[v], v)) {
        out.push(v);
        let nbrs: Vec<usize> = (0..n).filter(|&u| alive[u] && g.has_edge(v, u)).collect();
        remove(v, &mut alive, &mut degree);
        for u in nbrs {
            remove(u, &mut alive, &mut degree);
        }
    }
    VertexSet::new(out)
}

/// `ceil(n^2 / (n + 2e))`, the size guaranteed by [`turan_independent_set`].
pub fn turan_bound(n: usize, edges: usize) -> usize {
    if n == 0 {
        return 0;
    }
    let (num, den) = ((n * n) as u128, (n + 2 * edges) as u128);
    num.div_ceil(den) as usize
}

/// A homogeneous set: a clique or an independent set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "vertices", rename_all = "kebab-case")]
pub enum Homogeneous {
    Clique(VertexSet),
    Independent(VertexSet),
}

impl Homogeneous {
    pub fn vertices(&self) -> &VertexSet {
        match self {
            Homogeneous::Clique(v) | Homogeneous::Independent(v) => v,
        }
    }
}

fn ramsey_extract_within(g: &SimpleGraph, co: &SimpleGraph, allowed: &VertexSet, a: usize, b: usize) -> Option<Homogeneous> {
    if let Some(c) = find_clique_within(g, allowed, a) {
        return Some(Homogeneous::Clique(c));
    }
    find_clique_within(co, allowed, b).map(Homogeneous::Independent)
}

/// A clique of size `a` or an independent set of size `b` (clique preferred),
/// or `None` when neither exists. Always succeeds when `n >= C(a+b, a)`.
pub fn ramsey_extract(g: &SimpleGraph, a: usize, b: usize) -> Result<Option<Homogeneous>> {
    if g.n() == 0 || a == 0 || b == 0 {
        return Err(out_of_range("ramsey_extract needs n, a, b >= 1"));
    }
    Ok(ramsey_extract_within(g, &g.complement(), &all_vertices(g), a, b))
}

/// `C(a+b, a)`: vertex count at which [`ramsey_extract`] cannot fail.
pub fn erdos_szekeres_threshold(a: usize, b: usize) -> u128 {
    binomial((a + b) as u64, a as u64)
}

/// Erdős–Szekeres neighbourhood walk: finds a clique of size `a` or an
/// independent set of size `b` in polynomial time whenever the vertex count
/// is at least `C(a+b-2, a-1)`. May also succeed below that threshold.
pub fn erdos_szekeres_extract(g: &SimpleGraph, a: usize, b: usize) -> Option<Homogeneous> {
    fn walk(g: &SimpleGraph, cand: &[usize], a: usize, b: usize) -> Option<Homogeneous> {
        let &v = cand.first()?;
        if a == 1 {
            return Some(Homogeneous::Clique(VertexSet::new(vec![v])));
        }
        if b == 1 {
            return Some(Homogeneous::Independent(VertexSet::new(vec![v])));
        }
        let (nbrs, non): (Vec<usize>, Vec<usize>) = cand[1..].iter().partition(|&&u| g.has_edge(v, u));
        let push_v = |s: VertexSet| {
            let mut s = s.into_vec();
            s.push(v);
            VertexSet::new(s)
        };
        let clique_side = || {
            walk(g, &nbrs, a - 1, b).map(|h| match h {
                Homogeneous::Clique(c) => Homogeneous::Clique(push_v(c)),
                other => other,
            })
        };
        let indep_side = || {
            walk(g, &non, a, b - 1).map(|h| match h {
                Homogeneous::Independent(s) => Homogeneous::Independent(push_v(s)),
                other => other,
            })
        };
        let threshold = binomial((a + b - 3) as u64, (a - 2) as u64);
        if nbrs.len() as u128 >= threshold {
            clique_side().or_else(indep_side)
        } else {
            indep_side().or_else(clique_side)
        }
    }
    if a == 0 || b == 0 {
        return None;
    }
    let cand: Vec<usize> = (0..g.n()).collect();
    walk(g, &cand, a, b)
}

/// Result of [`extract_homogeneous_cover`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomogeneousCover {
    pub cliques: Vec<VertexSet>,
    pub independent_sets: Vec<VertexSet>,
    /// Rounds that produced a set.
    pub rounds_completed: usize,
    /// True when extraction failed before `rounds` rounds were done.
    pub stopped_early: bool,
}

/// Repeatedly extracts a clique of size `a` or an independent set of size `b`
/// from the vertices not yet removed, at most `rounds` times.
pub fn extract_homogeneous_cover(g: &SimpleGraph, a: usize, b: usize, rounds: usize) -> Result<HomogeneousCover> {
    if rounds == 0 || a == 0 || b == 0 {
        return Err(out_of_range("extract_homogeneous_cover needs rounds, a, b >= 1"));
    }
    let co = g.complement();
    let mut remaining: Vec<usize> = (0..g.n()).collect();
    let mut cover = HomogeneousCover {
        cliques: Vec::new(),
        independent_sets: Vec::new(),
        rounds_completed: 0,
        stopped_early: false,
    };
    for _ in 0..rounds {
        let allowed = VertexSet::new(remaining.clone());
        let Some(h) = ramsey_extract_within(g, &co, &allowed, a, b) else {
            cover.stopped_early = true;
            break;
        };
        remaining.retain(|v| !h.vertices().contains(*v));
        match h {
            Homogeneous::Clique(c) => cover.cliques.push(c),
            Homogeneous::Independent(s) => cover.independent_sets.push(s),
        }
        cover.rounds_completed += 1;
    }
    Ok(cover)
}
