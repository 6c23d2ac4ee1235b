//! Binomial coefficients, colex ranking of k-subsets, and lexicographic
//! subset enumeration (sequential and sharded over rayon).
//!
//! Subsets of a ground set of at most 64 elements are passed around as `u64`
//! masks alongside the sorted member list.

use std::ops::ControlFlow;

use rayon::prelude::*;

/// `C(n, k)`, saturating at `u128::MAX`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // C(n, i + 1) = C(n, i) * (n - i) / (i + 1), exact at every step
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// `C(n, k)` as `u64` for table-sized arguments. Panics on overflow.
pub fn binomial_u64(n: usize, k: usize) -> u64 {
    u64::try_from(binomial(n as u64, k as u64)).expect("binomial overflows u64")
}

/// Colex rank of a strictly increasing subset: `sum_i C(c_i, i + 1)`.
pub fn colex_rank(subset: &[usize]) -> u64 {
    subset
        .iter()
        .enumerate()
        .map(|(i, &c)| binomial_u64(c, i + 1))
        .sum()
}

/// Inverse of [`colex_rank`] for subsets of size `k`.
pub fn colex_unrank(mut rank: u64, k: usize) -> Vec<usize> {
    let mut out = vec![0usize; k];
    for i in (1..=k).rev() {
        // largest c with C(c, i) <= rank
        let mut c = i - 1;
        while binomial_u64(c + 1, i) <= rank {
            c += 1;
        }
        rank -= binomial_u64(c, i);
        out[i - 1] = c;
    }
    out
}

/// Colex rank of a subset given as a bit mask.
pub fn colex_rank_mask(mask: u64) -> u64 {
    let mut rank = 0;
    let mut i = 0;
    let mut m = mask;
    while m != 0 {
        let c = m.trailing_zeros() as usize;
        i += 1;
        rank += binomial_u64(c, i);
        m &= m - 1;
    }
    rank
}

pub fn mask_of(members: &[usize]) -> u64 {
    members.iter().fold(0u64, |m, &v| m | (1u64 << v))
}

pub fn members_of(mut mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        out.push(mask.trailing_zeros() as usize);
        mask &= mask - 1;
    }
    out
}

/// Advances `c` (a strictly increasing `m`-subset of `[0, n)`) to its
/// lexicographic successor. Returns `false` after the last subset.
pub fn next_combination(c: &mut [usize], n: usize) -> bool {
    let m = c.len();
    let mut i = m;
    while i > 0 {
        i -= 1;
        if c[i] < n - m + i {
            c[i] += 1;
            for j in i + 1..m {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Visits all `m`-subsets of `[0, n)` extending `prefix` (whose elements
/// are increasing) with elements larger than the prefix's last element,
/// in lexicographic order.
fn walk_completions<B>(
    n: usize,
    m: usize,
    prefix: &[usize],
    f: &mut impl FnMut(u64, &[usize]) -> ControlFlow<B>,
) -> ControlFlow<B> {
    let p = prefix.len();
    let mut cur: Vec<usize> = prefix.to_vec();
    let start = prefix.last().map_or(0, |&l| l + 1);
    let rest = m - p;
    if rest == 0 {
        return f(mask_of(&cur), &cur);
    }
    if start + rest > n {
        return ControlFlow::Continue(());
    }
    cur.extend(start..start + rest);
    let base = mask_of(prefix);
    loop {
        let mask = base | mask_of(&cur[p..]);
        f(mask, &cur)?;
        // advance the tail only
        let tail = &mut cur[p..];
        let mut i = rest;
        let mut moved = false;
        while i > 0 {
            i -= 1;
            if tail[i] < n - rest + i {
                tail[i] += 1;
                for j in i + 1..rest {
                    tail[j] = tail[j - 1] + 1;
                }
                moved = true;
                break;
            }
        }
        if !moved {
            return ControlFlow::Continue(());
        }
    }
}

/// Sequential lexicographic walk over all `m`-subsets of `[0, n)`, `n <= 64`.
pub fn for_each_subset<B>(
    n: usize,
    m: usize,
    mut f: impl FnMut(u64, &[usize]) -> ControlFlow<B>,
) -> ControlFlow<B> {
    assert!(n <= 64, "subset enumeration is capped at 64 elements");
    if m > n {
        return ControlFlow::Continue(());
    }
    walk_completions(n, m, &[], &mut f)
}

/// Position of a strictly increasing `m`-subset of `[0, n)` in
/// lexicographic order.
pub fn lex_rank(subset: &[usize], n: usize) -> u64 {
    let m = subset.len();
    let mut rank = 0u64;
    let mut prev = 0usize;
    for (i, &c) in subset.iter().enumerate() {
        for skipped in prev..c {
            rank += binomial_u64(n - skipped - 1, m - i - 1);
        }
        prev = c + 1;
    }
    rank
}

/// Lexicographically ordered shard prefixes of length `min(2, m)`.
fn shard_prefixes(n: usize, m: usize) -> Vec<Vec<usize>> {
    let p = m.min(2);
    let mut out = Vec::new();
    if p == 0 {
        out.push(Vec::new());
        return out;
    }
    // prefixes must leave room for the remaining m - p elements
    let _ = for_each_subset::<()>(n - (m - p), p, |_, c| {
        out.push(c.to_vec());
        ControlFlow::Continue(())
    });
    out
}

/// Returns the lexicographically first `m`-subset satisfying `pred`,
/// searching shards in parallel, together with the number of subsets up to
/// and including it in lexicographic order (all of them when none matches).
pub fn par_find_first_subset<F>(n: usize, m: usize, pred: F) -> (Option<Vec<usize>>, u64)
where
    F: Fn(u64, &[usize]) -> bool + Sync,
{
    assert!(n <= 64, "subset enumeration is capped at 64 elements");
    if m > n {
        return (None, 0);
    }
    let found = shard_prefixes(n, m).par_iter().find_map_first(|prefix| {
        let r = walk_completions(n, m, prefix, &mut |mask, c| {
            if pred(mask, c) {
                ControlFlow::Break(c.to_vec())
            } else {
                ControlFlow::Continue(())
            }
        });
        match r {
            ControlFlow::Break(c) => Some(c),
            ControlFlow::Continue(()) => None,
        }
    });
    let checked = match &found {
        Some(c) => lex_rank(c, n) + 1,
        None => binomial_u64(n, m),
    };
    (found, checked)
}

/// Counts `m`-subsets of `[0, n)` satisfying `pred`, in parallel.
pub fn par_count_subsets<F>(n: usize, m: usize, pred: F) -> u64
where
    F: Fn(u64, &[usize]) -> bool + Sync,
{
    assert!(n <= 64, "subset enumeration is capped at 64 elements");
    if m > n {
        return 0;
    }
    shard_prefixes(n, m)
        .par_iter()
        .map(|prefix| {
            let mut count = 0u64;
            let _ = walk_completions::<()>(n, m, prefix, &mut |mask, c| {
                if pred(mask, c) {
                    count += 1;
                }
                ControlFlow::Continue(())
            });
            count
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(25, 13), 5_200_300);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(200, 100), u128::MAX);
    }

    #[test]
    fn colex_order_of_pairs() {
        // colex: {0,1} {0,2} {1,2} {0,3} ...
        assert_eq!(colex_rank(&[0, 1]), 0);
        assert_eq!(colex_rank(&[0, 2]), 1);
        assert_eq!(colex_rank(&[1, 2]), 2);
        assert_eq!(colex_rank(&[0, 3]), 3);
        assert_eq!(colex_unrank(2, 2), vec![1, 2]);
    }

    #[test]
    fn colex_is_a_bijection() {
        for k in 1..=4 {
            let total = binomial_u64(8, k);
            for r in 0..total {
                let s = colex_unrank(r, k);
                assert!(s.windows(2).all(|w| w[0] < w[1]));
                assert!(*s.last().unwrap() < 8);
                assert_eq!(colex_rank(&s), r);
                assert_eq!(colex_rank_mask(mask_of(&s)), r);
            }
        }
    }

    #[test]
    fn lex_walk_matches_next_combination() {
        let mut seen = Vec::new();
        let _ = for_each_subset::<()>(6, 3, |_, c| {
            seen.push(c.to_vec());
            ControlFlow::Continue(())
        });
        let mut c = vec![0, 1, 2];
        let mut expected = vec![c.clone()];
        while next_combination(&mut c, 6) {
            expected.push(c.clone());
        }
        assert_eq!(seen, expected);
        assert_eq!(seen.len(), 20);
    }

    #[test]
    fn parallel_first_is_lexicographic() {
        // first 3-subset of [0,10) whose sum is 15
        let (hit, _) = par_find_first_subset(10, 3, |_, c| c.iter().sum::<usize>() == 15);
        let mut c = vec![0, 1, 2];
        let expected = loop {
            if c.iter().sum::<usize>() == 15 {
                break c;
            }
            assert!(next_combination(&mut c, 10));
        };
        assert_eq!(hit, Some(expected));
        assert_eq!(par_count_subsets(10, 3, |_, _| true), 120);
        assert_eq!(par_count_subsets(4, 0, |_, _| true), 1);
        assert_eq!(par_count_subsets(4, 1, |_, _| true), 4);
    }

    #[test]
    fn lex_rank_counts_predecessors() {
        let mut c = vec![0, 1, 2];
        let mut r = 0;
        loop {
            assert_eq!(lex_rank(&c, 7), r);
            r += 1;
            if !next_combination(&mut c, 7) {
                break;
            }
        }
        assert_eq!(r, 35);
    }
}
