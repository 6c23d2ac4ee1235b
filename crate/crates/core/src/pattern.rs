//! Edge-coloured complete graphs ("colour patterns").
//!
//! Colours are `1..=r`. A pattern may be partial: pairs without a colour
//! belong to no class.
//!
//! `.cg` text format:
//!
//! ```text
//! cg <n> <r>
//! u v c      # 0-indexed, u < v, 1 <= c <= r; omitted pairs are uncoloured
//! ```

use serde::{Deserialize, Serialize};

use crate::error::{out_of_range, parse_err, Result};
use crate::graph::{SimpleGraph, MAX_VERTICES};

pub const MAX_COLOURS: usize = 64;

/// `r` pairwise edge-disjoint colour classes on a common vertex set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredCompleteGraph {
    n: usize,
    r: usize,
    /// `colour[u * n + v]`, 0 when uncoloured.
    colour: Vec<u8>,
    classes: Vec<SimpleGraph>,
}

impl ColoredCompleteGraph {
    /// All pairs uncoloured.
    pub fn uncoloured(n: usize, r: usize) -> Result<Self> {
        if r == 0 || r > MAX_COLOURS {
            return Err(out_of_range(format!("colour count {r} outside [1, {MAX_COLOURS}]")));
        }
        if n > MAX_VERTICES {
            return Err(out_of_range(format!("vertex count {n} exceeds {MAX_VERTICES}")));
        }
        Ok(ColoredCompleteGraph {
            n,
            r,
            colour: vec![0; n * n],
            classes: (0..r).map(|_| SimpleGraph::empty(n)).collect(),
        })
    }

    /// Builds a pattern from class edge lists (class `i` gets colour `i + 1`).
    pub fn from_classes(n: usize, classes: &[Vec<(usize, usize)>]) -> Result<Self> {
        let mut c = Self::uncoloured(n, classes.len())?;
        for (i, edges) in classes.iter().enumerate() {
            for &(u, v) in edges {
                if u >= n || v >= n || u == v {
                    return Err(out_of_range(format!("bad pair ({u}, {v})")));
                }
                if c.colour_of(u, v).is_some() {
                    return Err(out_of_range(format!("pair ({u}, {v}) coloured twice")));
                }
                c.set_colour(u, v, i + 1);
            }
        }
        Ok(c)
    }

    /// Builds a complete pattern from a per-pair colour function.
    pub fn from_fn(n: usize, r: usize, mut colour: impl FnMut(usize, usize) -> usize) -> Result<Self> {
        let mut c = Self::uncoloured(n, r)?;
        for u in 0..n {
            for v in u + 1..n {
                let col = colour(u, v);
                if col == 0 || col > r {
                    return Err(out_of_range(format!("colour {col} outside [1, {r}]")));
                }
                c.set_colour(u, v, col);
            }
        }
        Ok(c)
    }

    /// Colours (or recolours) a pair.
    pub fn set_colour(&mut self, u: usize, v: usize, c: usize) {
        assert!(u != v && u < self.n && v < self.n && (1..=self.r).contains(&c));
        if let Some(old) = self.colour_of(u, v) {
            self.classes[old - 1].remove_edge(u, v);
        }
        self.colour[u * self.n + v] = c as u8;
        self.colour[v * self.n + u] = c as u8;
        self.classes[c - 1].add_edge(u, v);
    }

    pub fn clear_colour(&mut self, u: usize, v: usize) {
        if let Some(old) = self.colour_of(u, v) {
            self.classes[old - 1].remove_edge(u, v);
            self.colour[u * self.n + v] = 0;
            self.colour[v * self.n + u] = 0;
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn colour_of(&self, u: usize, v: usize) -> Option<usize> {
        match self.colour[u * self.n + v] {
            0 => None,
            c => Some(c as usize),
        }
    }

    /// Class of colour `c` (1-based).
    pub fn class(&self, c: usize) -> &SimpleGraph {
        &self.classes[c - 1]
    }

    pub fn classes(&self) -> &[SimpleGraph] {
        &self.classes
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(|g| g.edge_count()).collect()
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|u| (u + 1..self.n).all(|v| self.colour_of(u, v).is_some()))
    }

    pub fn uncoloured_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| (u + 1..self.n).map(move |v| (u, v)))
            .filter(|&(u, v)| self.colour_of(u, v).is_none())
            .collect()
    }

    /// Relabels vertex `v` to `vertex_perm[v]` and colour `c` to
    /// `colour_perm[c - 1]`.
    pub fn relabelled(&self, vertex_perm: &[usize], colour_perm: &[usize]) -> Self {
        let mut out = Self::uncoloured(self.n, self.r).expect("same shape");
        for u in 0..self.n {
            for v in u + 1..self.n {
                if let Some(c) = self.colour_of(u, v) {
                    out.set_colour(vertex_perm[u], vertex_perm[v], colour_perm[c - 1]);
                }
            }
        }
        out
    }

    pub fn to_cg(&self) -> String {
        let mut s = format!("cg {} {}\n", self.n, self.r);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if let Some(c) = self.colour_of(u, v) {
                    s.push_str(&format!("{u} {v} {c}\n"));
                }
            }
        }
        s
    }

    /// Parses `.cg` text. Rejects duplicate pairs, `u >= v`, out-of-range
    /// vertices and colours, reporting the offending line.
    pub fn parse_cg(text: &str) -> Result<Self> {
        let mut rows = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty());
        let (hl, header) = rows.next().ok_or_else(|| parse_err(1, "missing `cg <n> <r>` header"))?;
        let toks: Vec<&str> = header.split_whitespace().collect();
        let ["cg", n, r] = toks[..] else {
            return Err(parse_err(hl, "expected header `cg <n> <r>`"));
        };
        let n: usize = n.parse().map_err(|_| parse_err(hl, "bad vertex count"))?;
        let r: usize = r.parse().map_err(|_| parse_err(hl, "bad colour count"))?;
        let mut c = Self::uncoloured(n, r).map_err(|e| parse_err(hl, e.to_string()))?;
        for (ln, row) in rows {
            let nums: Vec<usize> = row
                .split_whitespace()
                .map(|t| t.parse::<usize>().map_err(|_| parse_err(ln, format!("bad integer `{t}`"))))
                .collect::<Result<_>>()?;
            let [u, v, col] = nums[..] else {
                return Err(parse_err(ln, "expected `u v c`"));
            };
            if u >= v {
                return Err(parse_err(ln, format!("pair ({u}, {v}) must have u < v")));
            }
            if v >= n {
                return Err(parse_err(ln, format!("vertex {v} out of range for n = {n}")));
            }
            if col == 0 || col > r {
                return Err(parse_err(ln, format!("colour {col} outside [1, {r}]")));
            }
            if c.colour_of(u, v).is_some() {
                return Err(parse_err(ln, format!("duplicate pair ({u}, {v})")));
            }
            c.set_colour(u, v, col);
        }
        Ok(c)
    }
}

/// Serialisable summary used inside certificates.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PatternSummary {
    pub n: usize,
    pub r: usize,
    pub complete: bool,
    pub class_sizes: Vec<usize>,
}

impl From<&ColoredCompleteGraph> for PatternSummary {
    fn from(c: &ColoredCompleteGraph) -> Self {
        PatternSummary { n: c.n, r: c.r, complete: c.is_complete(), class_sizes: c.class_sizes() }
    }
}

/// The 4-vertex pattern with colour 1 the cycle 0-1-2-3-0 and colour 2 the
/// two diagonals.
pub fn c4_diagonals() -> ColoredCompleteGraph {
    ColoredCompleteGraph::from_classes(4, &[vec![(0, 1), (1, 2), (2, 3), (0, 3)], vec![(0, 2), (1, 3)]])
        .expect("valid pattern")
}
