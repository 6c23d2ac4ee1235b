//! Definition-level reference implementations. Deliberately naive: plain
//! adjacency matrices, recursive subset lists, no bit tricks.
#![allow(dead_code)]

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use ramsey_sat::{ColoredCompleteGraph, SimpleGraph};

pub type Adj = Vec<Vec<bool>>;

pub fn subsets(n: usize, m: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, m: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            go(v + 1, n, m, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, m, &mut Vec::new(), &mut out);
    out
}

pub fn sub_of(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.contains(x))
}

pub fn adj_of(g: &SimpleGraph) -> Adj {
    (0..g.n()).map(|u| (0..g.n()).map(|v| u != v && g.has_edge(u, v)).collect()).collect()
}

/// Graph number `mask` on `n` vertices: bit `i` is the `i`-th pair in
/// lexicographic order.
pub fn adj_from_mask(n: usize, mask: u64) -> Adj {
    let mut a = vec![vec![false; n]; n];
    for (i, (u, v)) in (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).enumerate() {
        if mask >> i & 1 == 1 {
            a[u][v] = true;
            a[v][u] = true;
        }
    }
    a
}

/// Does `within` contain `m` vertices pairwise adjacent (`want = true`) or
/// pairwise non-adjacent (`want = false`)?
pub fn has_homogeneous(a: &Adj, within: &[usize], m: usize, want: bool) -> bool {
    subsets(within.len(), m).iter().any(|idx| {
        idx.iter().enumerate().all(|(i, &x)| idx[i + 1..].iter().all(|&y| a[within[x]][within[y]] == want))
    })
}

pub fn clique_number(a: &Adj) -> usize {
    let all: Vec<usize> = (0..a.len()).collect();
    (1..=a.len()).rev().find(|&m| has_homogeneous(a, &all, m, true)).unwrap_or(0)
}

/// `g(n, s, t)` straight from the definition.
pub fn naive_g(n: usize, s: usize, t: usize, n_max: usize) -> Option<usize> {
    (n..=n_max).find(|&big| {
        let pairs = big * (big - 1) / 2;
        (0u64..1 << pairs).all(|mask| {
            let a = adj_from_mask(big, mask);
            subsets(big, n).iter().any(|u| !has_homogeneous(&a, u, s, true) || !has_homogeneous(&a, u, t, false))
        })
    })
}

/// Is there an `n`-set all of whose `s`-subsets lie in a red `k`-set, or all
/// of whose `t`-subsets lie in a blue `k`-set? `blue[i]` refers to
/// `ksets[i]`.
pub fn naive_good_set(big: usize, n: usize, s: usize, t: usize, ksets: &[Vec<usize>], blue: &[bool]) -> Option<Vec<usize>> {
    let in_some = |sub: &Vec<usize>, want_blue: bool| ksets.iter().zip(blue).any(|(k, &b)| b == want_blue && sub_of(sub, k));
    subsets(big, n).into_iter().find(|u| {
        let red_ok = subsets(n, s).iter().all(|idx| in_some(&idx.iter().map(|&i| u[i]).collect(), false));
        let blue_ok = subsets(n, t).iter().all(|idx| in_some(&idx.iter().map(|&i| u[i]).collect(), true));
        red_ok || blue_ok
    })
}

/// `k`-subsets of `[0, big)` in colex order (the library's rank order).
pub fn ksets_colex(big: usize, k: usize) -> Vec<Vec<usize>> {
    let mut v = subsets(big, k);
    v.sort_by(|a, b| a.iter().rev().cmp(b.iter().rev()));
    v
}

/// `f_k(n, s, t)` straight from the definition.
pub fn naive_f(n: usize, s: usize, t: usize, k: usize, n_max: usize) -> Option<usize> {
    (n..=n_max).find(|&big| {
        let ksets = ksets_colex(big, k);
        (0u64..1 << ksets.len()).all(|mask| {
            let blue: Vec<bool> = (0..ksets.len()).map(|i| mask >> i & 1 == 1).collect();
            naive_good_set(big, n, s, t, &ksets, &blue).is_some()
        })
    })
}

pub fn random_pattern(rng: &mut ChaCha8Rng, n: usize, r: usize) -> ColoredCompleteGraph {
    ColoredCompleteGraph::from_fn(n, r, |_, _| rng.gen_range(1..=r)).unwrap()
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> SimpleGraph {
    let mut g = SimpleGraph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Semisaturation from the definition: every way of joining one new vertex
/// creates a monochromatic `K_k` through it.
pub fn naive_semisaturated(c: &ColoredCompleteGraph, k: usize) -> bool {
    let (n, r) = (c.n(), c.r());
    let mut cols = vec![1usize; n];
    loop {
        let hit = subsets(n, k - 1).iter().any(|t| {
            let col = cols[t[0]];
            t.iter().all(|&a| cols[a] == col)
                && t.iter().enumerate().all(|(i, &a)| t[i + 1..].iter().all(|&b| c.colour_of(a, b) == Some(col)))
        });
        if !hit {
            return false;
        }
        let mut i = n;
        loop {
            if i == 0 {
                return true;
            }
            i -= 1;
            cols[i] += 1;
            if cols[i] <= r {
                break;
            }
            cols[i] = 1;
        }
    }
}
