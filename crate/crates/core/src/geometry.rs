//! Prime fields, the affine plane AG(2, q), and the slope families of lines
//! in F_q^3.
//!
//! Points are indexed by their coordinates read as base-`q` digits:
//! `(x, y) -> x*q + y` in the plane and `(x, y, z) -> x*q^2 + y*q + z` in
//! space. Every line is stored as its sorted point list, which is also its
//! canonical key.
//!
//! Text format:
//!
//! ```text
//! inc <affine|fq3> <q> [<lambda>]
//! p0 p1 ... p(q-1)     # one geometric line per row
//! ```

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{out_of_range, parse_err, Error, Result};
use crate::graph::VertexSet;

pub const MAX_FIELD_ORDER: u64 = 1 << 20;

/// The field of integers modulo a prime `q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrimeField {
    q: u64,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    pub fn new(q: u64) -> Result<Self> {
        if q > MAX_FIELD_ORDER {
            return Err(out_of_range(format!("field order {q} exceeds 2^20")));
        }
        if !is_prime(q) {
            return Err(Error::NotPrime(q));
        }
        Ok(PrimeField { q })
    }

    pub fn order(&self) -> u64 {
        self.q
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.q
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        (a * b) % self.q
    }

    pub fn neg(&self, a: u64) -> u64 {
        (self.q - a % self.q) % self.q
    }

    /// Multiplicative inverse via Fermat; `a` must be non-zero.
    pub fn inv(&self, a: u64) -> u64 {
        assert!(!a.is_multiple_of(self.q), "zero has no inverse");
        let (mut base, mut exp, mut acc) = (a % self.q, self.q - 2, 1);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.q;
            }
            base = base * base % self.q;
            exp >>= 1;
        }
        acc
    }
}

/// Smallest prime in `[lo, hi]`.
pub fn smallest_prime_in(lo: u64, hi: u64) -> Result<u64> {
    if lo > hi || hi > MAX_FIELD_ORDER {
        return Err(out_of_range(format!("bad interval [{lo}, {hi}]")));
    }
    (lo..=hi).find(|&p| is_prime(p)).ok_or(Error::NoPrime { lo, hi })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum StructureKind {
    AffinePlane,
    Fq3Family { lambda: u64 },
}

/// Points and lines over `F_q`, with the inverse point-to-lines index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceStructure {
    q: u64,
    kind: StructureKind,
    point_count: usize,
    lines: Vec<Vec<usize>>,
    point_to_lines: Vec<Vec<usize>>,
}

impl IncidenceStructure {
    fn from_lines(q: u64, kind: StructureKind, point_count: usize, lines: Vec<Vec<usize>>) -> Self {
        let mut point_to_lines = vec![Vec::new(); point_count];
        for (i, line) in lines.iter().enumerate() {
            for &p in line {
                point_to_lines[p].push(i);
            }
        }
        IncidenceStructure { q, kind, point_count, lines, point_to_lines }
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn kind(&self) -> StructureKind {
        self.kind
    }

    pub fn point_count(&self) -> usize {
        self.point_count
    }

    pub fn lines(&self) -> &[Vec<usize>] {
        &self.lines
    }

    pub fn line(&self, i: usize) -> &[usize] {
        &self.lines[i]
    }

    pub fn lines_through(&self, p: usize) -> &[usize] {
        &self.point_to_lines[p]
    }

    /// Number of lines containing both points.
    pub fn common_lines(&self, a: usize, b: usize) -> usize {
        let (la, lb) = (&self.point_to_lines[a], &self.point_to_lines[b]);
        la.iter().filter(|l| lb.contains(l)).count()
    }

    /// Checks the invariants for this structure's kind by exhaustive pair
    /// counting. Returns a description of the first violation.
    pub fn validate(&self) -> std::result::Result<(), String> {
        let q = self.q as usize;
        if let Some((i, _)) = self.lines.iter().enumerate().find(|(_, l)| l.len() != q) {
            return Err(format!("line {i} does not have {q} points"));
        }
        let (points, lines, per_point, exact_pair) = match self.kind {
            StructureKind::AffinePlane => (q * q, q * q + q, q + 1, true),
            StructureKind::Fq3Family { .. } => (q * q * q, q * q * q, q, false),
        };
        if self.point_count != points {
            return Err(format!("expected {points} points, found {}", self.point_count));
        }
        if self.lines.len() != lines {
            return Err(format!("expected {lines} lines, found {}", self.lines.len()));
        }
        if let Some(p) = (0..points).find(|&p| self.point_to_lines[p].len() != per_point) {
            return Err(format!("point {p} lies on {} lines, expected {per_point}", self.point_to_lines[p].len()));
        }
        // pair multiplicities via line membership
        let mut pair_hits = vec![0u32; points * points];
        for line in &self.lines {
            for (i, &a) in line.iter().enumerate() {
                for &b in &line[i + 1..] {
                    pair_hits[a * points + b] += 1;
                }
            }
        }
        for a in 0..points {
            for b in a + 1..points {
                let h = pair_hits[a * points + b];
                if h > 1 || (exact_pair && h != 1) {
                    return Err(format!("points {a},{b} share {h} lines"));
                }
            }
        }
        Ok(())
    }

    pub fn to_text(&self) -> String {
        let mut s = match self.kind {
            StructureKind::AffinePlane => format!("inc affine {}\n", self.q),
            StructureKind::Fq3Family { lambda } => format!("inc fq3 {} {lambda}\n", self.q),
        };
        for line in &self.lines {
            let row: Vec<String> = line.iter().map(|p| p.to_string()).collect();
            s.push_str(&row.join(" "));
            s.push('\n');
        }
        s
    }

    /// Parses the `inc` text format. Lines are taken as given; call
    /// [`IncidenceStructure::validate`] to check the geometric invariants.
    pub fn parse(text: &str) -> Result<Self> {
        let mut rows = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty());
        let (hl, header) = rows.next().ok_or_else(|| parse_err(1, "missing `inc` header"))?;
        let toks: Vec<&str> = header.split_whitespace().collect();
        let num = |t: &str| t.parse::<u64>().map_err(|_| parse_err(hl, format!("bad integer `{t}`")));
        let (kind, q) = match toks[..] {
            ["inc", "affine", q] => (StructureKind::AffinePlane, num(q)?),
            ["inc", "fq3", q, l] => {
                let lambda = num(l)?;
                (StructureKind::Fq3Family { lambda }, num(q)?)
            }
            _ => return Err(parse_err(hl, "expected `inc affine <q>` or `inc fq3 <q> <lambda>`")),
        };
        if !is_prime(q) || q > MAX_FIELD_ORDER {
            return Err(parse_err(hl, format!("q = {q} is not a supported prime")));
        }
        if let StructureKind::Fq3Family { lambda } = kind {
            if lambda >= q {
                return Err(parse_err(hl, format!("lambda {lambda} not in [0, {q})")));
            }
        }
        let point_count = match kind {
            StructureKind::AffinePlane => (q * q) as usize,
            StructureKind::Fq3Family { .. } => (q * q * q) as usize,
        };
        let mut lines = Vec::new();
        for (ln, row) in rows {
            let mut pts: Vec<usize> = row
                .split_whitespace()
                .map(|t| t.parse::<usize>().map_err(|_| parse_err(ln, format!("bad integer `{t}`"))))
                .collect::<Result<_>>()?;
            if let Some(&p) = pts.iter().find(|&&p| p >= point_count) {
                return Err(parse_err(ln, format!("point {p} out of range")));
            }
            let before = pts.len();
            pts.sort_unstable();
            pts.dedup();
            if pts.len() != before {
                return Err(parse_err(ln, "repeated point in line"));
            }
            lines.push(pts);
        }
        Ok(Self::from_lines(q, kind, point_count, lines))
    }
}

impl fmt::Display for StructureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StructureKind::AffinePlane => write!(f, "affine"),
            StructureKind::Fq3Family { lambda } => write!(f, "fq3(lambda={lambda})"),
        }
    }
}

/// AG(2, q). Lines come in parallel classes: class `m < q` holds the lines
/// `y = m*x + c` for `c = 0..q`, class `q` holds the verticals `x = c`.
/// Lines are listed class by class, then by intercept `c`.
pub fn build_affine_plane(q: u64) -> Result<IncidenceStructure> {
    let f = PrimeField::new(q)?;
    let qu = q as usize;
    let mut lines = Vec::with_capacity(qu * qu + qu);
    for m in 0..q {
        for c in 0..q {
            let mut line: Vec<usize> = (0..q).map(|x| (x * q + f.add(f.mul(m, x), c)) as usize).collect();
            line.sort_unstable();
            lines.push(line);
        }
    }
    for c in 0..q {
        lines.push((0..q).map(|y| (c * q + y) as usize).collect());
    }
    Ok(IncidenceStructure::from_lines(q, StructureKind::AffinePlane, qu * qu, lines))
}

/// The `q + 1` parallel classes of an affine plane as line-index lists.
pub fn parallel_classes(plane: &IncidenceStructure) -> Result<Vec<Vec<usize>>> {
    if plane.kind != StructureKind::AffinePlane {
        return Err(Error::WrongKind { expected: "affine plane" });
    }
    let q = plane.q as usize;
    Ok((0..=q).map(|m| (m * q..(m + 1) * q).collect()).collect())
}

/// The lines of F_q^3 whose direction is `(1, lambda, mu)` for some `mu`.
///
/// Every `(direction, base point)` pair is generated in lexicographic order
/// and duplicates (the same point set from another base point) are dropped,
/// keeping first occurrences.
pub fn fq3_line_family(q: u64, lambda: u64) -> Result<IncidenceStructure> {
    let f = PrimeField::new(q)?;
    if lambda >= q {
        return Err(out_of_range(format!("lambda {lambda} not in [0, {q})")));
    }
    let qu = q as usize;
    let index = |x: u64, y: u64, z: u64| (x * q * q + y * q + z) as usize;
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut lines = Vec::with_capacity(qu * qu * qu);
    for mu in 0..q {
        for vx in 0..q {
            for vy in 0..q {
                for vz in 0..q {
                    let mut line: Vec<usize> = (0..q)
                        .map(|beta| {
                            index(
                                f.add(beta, vx),
                                f.add(f.mul(beta, lambda), vy),
                                f.add(f.mul(beta, mu), vz),
                            )
                        })
                        .collect();
                    line.sort_unstable();
                    if seen.insert(line.clone()) {
                        lines.push(line);
                    }
                }
            }
        }
    }
    Ok(IncidenceStructure::from_lines(q, StructureKind::Fq3Family { lambda }, qu * qu * qu, lines))
}

/// Incidence count of a point set against a family of lines, together with
/// the lower estimate `|U||F|/q - 2 sqrt(q) sqrt(|U||F|)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct IncidenceSum {
    pub sum: u64,
    pub bound: f64,
}

impl IncidenceSum {
    pub fn holds(&self) -> bool {
        self.sum as f64 >= self.bound
    }
}

pub fn incidence_sum(structure: &IncidenceStructure, family: &[usize], u: &VertexSet) -> Result<IncidenceSum> {
    if let Some(&l) = family.iter().find(|&&l| l >= structure.lines.len()) {
        return Err(out_of_range(format!("line index {l} out of range")));
    }
    if let Some(p) = u.iter().find(|&p| p >= structure.point_count) {
        return Err(out_of_range(format!("point {p} out of range")));
    }
    let mut in_u = vec![false; structure.point_count];
    for p in u.iter() {
        in_u[p] = true;
    }
    let sum = family
        .iter()
        .map(|&l| structure.lines[l].iter().filter(|&&p| in_u[p]).count() as u64)
        .sum();
    let (nu, nf, q) = (u.len() as f64, family.len() as f64, structure.q as f64);
    let bound = nu * nf / q - 2.0 * q.sqrt() * (nu * nf).sqrt();
    Ok(IncidenceSum { sum, bound })
}
