//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits non-zero if any failed.

mod common;

use std::collections::HashSet;
use std::ops::ControlFlow;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ramsey_sat::certificate::Certificate;
use ramsey_sat::cli;
use ramsey_sat::combinatorics::{for_each_subset, mask_of};
use ramsey_sat::constructions::{affine_coloring, count_bad_sets, fq3_coloring, lower_bound_p, sample_gnp, AffineStrategy, BadSetMode, GnpParams};
use ramsey_sat::geometry::{build_affine_plane, fq3_line_family, incidence_sum, parallel_classes};
use ramsey_sat::pattern::c4_diagonals;
use ramsey_sat::reduction::{f_oracle, g_oracle, has_unbalanced_set, RamseyParams};
use ramsey_sat::saturation::{
    check_observation, is_kkfree_pattern, is_saturated, is_semisaturated, is_semisaturated_direct, ssat_search,
    CheckOptions, SearchOutcome,
};
use ramsey_sat::search::{turan_bound, turan_independent_set};
use ramsey_sat::{ColoredCompleteGraph, SimpleGraph, VertexSet};

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn ok<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn c1_ssat_2_3() -> Check {
    let out = cli::run(["ramsey-sat", "search", "ssat", "--r", "2", "--k", "3", "--n-min", "3", "--n-max", "4"]);
    ensure(out.code == 0, format!("exit code {}", out.code))?;
    let cert = ok(Certificate::parse(&out.stdout))?;
    let value = cert.value.as_ref().ok_or("no value")?;
    let per_n: Vec<(u64, String)> = value["per_n"]
        .as_array()
        .ok_or("no per_n")?
        .iter()
        .map(|e| (e["n"].as_u64().unwrap_or(0), e["result"].as_str().unwrap_or("").to_string()))
        .collect();
    ensure(per_n == [(3, "none".to_string()), (4, "found".to_string())], format!("per-n results {per_n:?}"))?;
    let cg = cert.witness.as_ref().and_then(|w| w["cg"].as_str()).ok_or("no witness")?;
    let pattern = ok(ColoredCompleteGraph::parse_cg(cg))?;
    ensure(pattern.n() == 4, "witness is not on 4 vertices")?;
    ensure(ok(is_semisaturated_direct(&pattern, 3, &CheckOptions::colorings()))?.holds(), "witness fails the direct check")?;
    ensure(common::naive_semisaturated(&pattern, 3), "witness fails the definition-level check")?;
    // library path agrees
    ensure(ok(ssat_search(2, 3, 3, u64::MAX))?.outcome == SearchOutcome::Exhausted, "library finds a 3-vertex pattern")?;
    Ok("n=3 none, n=4 witness verified".into())
}

fn c2_fq3_properties() -> Check {
    for q in [2u64, 3, 5] {
        let mut seen_lines: HashSet<Vec<usize>> = HashSet::new();
        let mut seen_pairs: HashSet<(usize, usize)> = HashSet::new();
        let n = (q * q * q) as usize;
        for lambda in 0..q {
            let fam = ok(fq3_line_family(q, lambda))?;
            ensure(fam.lines().len() == n, format!("q={q} lambda={lambda}: {} lines", fam.lines().len()))?;
            let mut on = vec![0usize; n];
            let mut pairs = HashSet::new();
            for line in fam.lines() {
                ensure(line.len() == q as usize, "line of wrong size")?;
                for &p in line {
                    on[p] += 1;
                }
                for (i, &a) in line.iter().enumerate() {
                    for &b in &line[i + 1..] {
                        let key = (a.min(b), a.max(b));
                        ensure(pairs.insert(key), format!("q={q} lambda={lambda}: pair {key:?} on two lines"))?;
                    }
                }
                let mut sorted = line.clone();
                sorted.sort_unstable();
                ensure(seen_lines.insert(sorted), format!("q={q}: line shared between families"))?;
            }
            ensure(on.iter().all(|&c| c == q as usize), format!("q={q} lambda={lambda}: point not on q lines"))?;
            for p in &pairs {
                ensure(seen_pairs.insert(*p), format!("q={q}: pair {p:?} covered by two families"))?;
            }
        }
    }
    Ok("q in {2,3,5}: q^3 lines, q per point, <=1 common line, disjoint families".into())
}

fn c3_affine_instance() -> Check {
    let pattern = ok(affine_coloring(5, 2, AffineStrategy::ParallelBalanced, 0))?;
    let plane = ok(build_affine_plane(5))?;
    let classes = ok(parallel_classes(&plane))?;
    // independent route: three points of a colour-c line span a triangle of colour c
    let line_masks: Vec<Vec<u64>> = (1..=2)
        .map(|c| {
            classes
                .iter()
                .enumerate()
                .filter(|(j, _)| j % 2 + 1 == c)
                .flat_map(|(_, ls)| ls.iter().map(|&l| mask_of(plane.line(l))))
                .collect()
        })
        .collect();
    let mut subsets = 0u64;
    let mut bad = None;
    let _ = for_each_subset(25, 13, |u, members| {
        subsets += 1;
        for (c, masks) in line_masks.iter().enumerate() {
            if !masks.iter().any(|&m| (m & u).count_ones() >= 3) {
                bad = Some((c + 1, members.to_vec()));
                return ControlFlow::Break(());
            }
        }
        ControlFlow::Continue(())
    });
    ensure(bad.is_none(), format!("13-set without a 3-point line: {bad:?}"))?;
    ensure(subsets == 5_200_300, format!("visited {subsets} subsets"))?;
    let v = ok(check_observation(&pattern, 4, 2, &CheckOptions::subsets()))?;
    ensure(v.holds() && v.exhaustive, format!("observation verdict {:?}", v.outcome))?;
    ensure(v.checked == 2 * 5_200_300, format!("observation checked {}", v.checked))?;
    Ok(format!("{subsets} subsets, both classes, observation holds"))
}

fn c4_g_oracle_values() -> Check {
    let g322 = ok(g_oracle(3, 2, 2, 6))?;
    ensure(g322.value == Some(6), format!("g(3,2,2) = {:?}", g322.value))?;
    let (big, cx) = g322.counterexample.ok_or("no N=5 counterexample")?;
    let degrees: Vec<usize> = (0..cx.n()).map(|v| cx.degree(v)).collect();
    ensure(big == 5 && cx.edge_count() == 5 && degrees.iter().all(|&d| d == 2), "N=5 witness is not a 5-cycle")?;
    ensure(common::clique_number(&common::adj_of(&cx)) == 2, "witness has a triangle")?;
    ensure(ok(has_unbalanced_set(&SimpleGraph::cycle(5), 3, 2, 2))?.is_none(), "C5 has an unbalanced 3-set")?;
    let g222 = ok(g_oracle(2, 2, 2, 6))?;
    ensure(g222.value == Some(2), format!("g(2,2,2) = {:?}", g222.value))?;
    let g323 = ok(g_oracle(3, 2, 3, 6))?;
    ensure(g323.value == Some(3), format!("g(3,2,3) = {:?}", g323.value))?;
    ensure(common::naive_g(3, 2, 2, 6) == Some(6), "definition-level g(3,2,2) differs")?;
    Ok("g(3,2,2)=6 (C5 at N=5), g(2,2,2)=2, g(3,2,3)=3".into())
}

fn c5_f_equals_g() -> Check {
    let mut parts = Vec::new();
    for (n, s, t) in [(3, 2, 3), (4, 2, 3)] {
        let f = ok(f_oracle(&ok(RamseyParams::reduction(n, s, t))?, 6))?.value;
        let g = ok(g_oracle(n, s, t, 7))?.value;
        let nf = common::naive_f(n, s, t, s + t - 2, 6);
        let ng = common::naive_g(n, s, t, 6);
        ensure(f.is_some() && f == g, format!("({n},{s},{t}): f = {f:?}, g = {g:?}"))?;
        ensure(nf == f && ng == g, format!("({n},{s},{t}): definition-level f = {nf:?}, g = {ng:?}"))?;
        parts.push(format!("f=g={} at ({n},{s},{t})", f.unwrap()));
    }
    Ok(parts.join(", "))
}

fn c6_exact_formula() -> Check {
    for (n, expect) in [(3, 3), (4, 5)] {
        let f = ok(f_oracle(&ok(RamseyParams::general(n, 2, 2, 3))?, 6))?.value;
        ensure(f == Some(expect) && expect == 2 * n - 2 - 2 + 1, format!("f_3({n},2,2) = {f:?}"))?;
        ensure(common::naive_f(n, 2, 2, 3, 6) == Some(expect), "definition-level value differs")?;
    }
    Ok("f_3(3,2,2)=3, f_3(4,2,2)=5".into())
}

fn c7_dual_oracle() -> Check {
    let opts = CheckOptions::colorings();
    let mut holds = 0;
    for seed in 0..500u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(1..=6);
        let r = rng.gen_range(2..=3);
        let c = common::random_pattern(&mut rng, n, r);
        let a = ok(is_semisaturated(&c, 3, &opts))?;
        let b = ok(is_semisaturated_direct(&c, 3, &opts))?;
        ensure(a.outcome == b.outcome && a.witness == b.witness, format!("seed {seed}: {:?} vs {:?}", a.outcome, b.outcome))?;
        holds += a.holds() as usize;
    }
    Ok(format!("500 patterns, 0 disagreements ({holds} semisaturated)"))
}

fn c8_observation_sufficient() -> Check {
    let mut cases: Vec<(ColoredCompleteGraph, usize)> = vec![
        (ok(affine_coloring(5, 2, AffineStrategy::ParallelBalanced, 0))?, 4),
        (ok(affine_coloring(3, 2, AffineStrategy::ParallelBalanced, 0))?, 3),
        (ok(affine_coloring(3, 2, AffineStrategy::RoundRobin, 9))?, 3),
        (ok(fq3_coloring(2, 2))?.completed, 3),
    ];
    for seed in 0..300u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(1000 + seed);
        let n = rng.gen_range(2..=8);
        let r = rng.gen_range(2..=3);
        let k = rng.gen_range(2..=3);
        cases.push((common::random_pattern(&mut rng, n, r), k));
    }
    let (mut applicable, mut violations) = (0, 0);
    for (c, k) in &cases {
        if ok(check_observation(c, *k, c.r(), &CheckOptions::subsets()))?.holds() {
            applicable += 1;
            if !ok(is_semisaturated(c, *k, &CheckOptions::colorings()))?.holds() {
                violations += 1;
            }
        }
    }
    ensure(applicable >= 4, format!("observation held on only {applicable} patterns"))?;
    ensure(violations == 0, format!("{violations} violations"))?;
    Ok(format!("{applicable} patterns satisfy the observation, 0 violations"))
}

fn c9_turan() -> Check {
    for seed in 0..1000u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(1..=40);
        let p = rng.gen::<f64>();
        let g = common::random_graph(&mut rng, n, p);
        let is = turan_independent_set(&g);
        let bound = turan_bound(n, g.edge_count());
        // independent ceiling: smallest m with m * (n + 2e) >= n^2
        let e = g.edge_count();
        let direct = (n * n).div_ceil(n + 2 * e);
        ensure(bound == direct, format!("seed {seed}: bound {bound} vs {direct}"))?;
        ensure(g.is_independent(is.as_slice()), format!("seed {seed}: not independent"))?;
        ensure(is.len() >= bound, format!("seed {seed}: |I| = {} < {bound}", is.len()))?;
    }
    Ok("1000 graphs, 0 violations".into())
}

fn c10_incidence() -> Check {
    for q in [5u64, 7, 11] {
        let plane = ok(build_affine_plane(q))?;
        let classes = ok(parallel_classes(&plane))?;
        let points = (q * q) as usize;
        for seed in 0..1000u64 {
            let mut rng = ChaCha8Rng::seed_from_u64(q * 1_000_000 + seed);
            let mut family: Vec<usize> = Vec::new();
            for cls in &classes {
                if rng.gen_bool(0.5) {
                    family.extend_from_slice(cls);
                }
            }
            if family.is_empty() {
                family.extend_from_slice(&classes[rng.gen_range(0..classes.len())]);
            }
            let size = rng.gen_range(1..=points);
            let u = VertexSet::new(rand::seq::index::sample(&mut rng, points, size).into_vec());
            let res = ok(incidence_sum(&plane, &family, &u))?;
            // every class meets each point once: sum = |U| * (#classes)
            let direct = family.iter().map(|&l| plane.line(l).iter().filter(|&&p| u.contains(p)).count() as u64).sum::<u64>();
            ensure(res.sum == direct, format!("q={q} seed {seed}: sum mismatch"))?;
            ensure(res.holds(), format!("q={q} seed {seed}: {} < {}", res.sum, res.bound))?;
        }
    }
    Ok("3000 pairs, 0 violations".into())
}

fn c11_lower_bound_and_bad_sets() -> Check {
    let reference = [((2, 2), 0.449_308_643_297_242_7), ((2, 3), 0.371_270_988_155_344_54), ((3, 4), 0.394_237_893_710_392_25)];
    for ((s, t), want) in reference {
        let got = ok(lower_bound_p(s, t))?;
        let e = std::f64::consts::E;
        let closed = (s as f64 / (2.0 * e * t as f64)) * (2.0 * e * t as f64 / s as f64).log2();
        ensure((got - want).abs() < 1e-12 && (got - closed).abs() < 1e-12, format!("p({s},{t}) = {got}"))?;
    }
    let p = ok(lower_bound_p(3, 3))?;
    let mut worst: f64 = 0.0;
    for seed in 0..20u64 {
        let g = ok(sample_gnp(GnpParams { n: 12, p, seed }))?;
        let exact = ok(count_bad_sets(&g, 5, 3, 3, BadSetMode::Exact))?;
        let est = ok(count_bad_sets(&g, 5, 3, 3, BadSetMode::Sampled { trials: 2000, seed: seed + 1 }))?;
        let diff = (est.estimate - exact.estimate).abs();
        if est.std_error == 0.0 {
            ensure(diff == 0.0, format!("seed {seed}: zero standard error but estimate {} vs {}", est.estimate, exact.estimate))?;
        } else {
            worst = worst.max(diff / est.std_error);
        }
    }
    ensure(worst <= 5.0, format!("worst deviation {worst:.2} standard errors"))?;
    Ok(format!("closed form to 1e-12, worst sampled deviation {worst:.2} SE"))
}

fn c12_saturated() -> Check {
    let c = c4_diagonals();
    ensure(is_kkfree_pattern(&c, 3), "a class contains a triangle")?;
    let v = ok(is_saturated(&c, 3, &CheckOptions::colorings()))?;
    ensure(v.holds() && v.exhaustive, format!("verdict {:?}", v.outcome))?;
    ensure(common::naive_semisaturated(&c, 3), "definition-level check fails")?;
    Ok("C4/diagonals is (2,K3)-saturated on 4 vertices".into())
}

type Criterion = (&'static str, Duration, fn() -> Check);

fn main() {
    let criteria: [Criterion; 12] = [
        ("ssat_2(K3) = 4 by search", Duration::from_secs(1), c1_ssat_2_3),
        ("F_q^3 family properties", Duration::from_secs(5), c2_fq3_properties),
        ("affine q=5 r=2 desk instance", Duration::from_secs(120), c3_affine_instance),
        ("g oracle values", Duration::from_secs(60), c4_g_oracle_values),
        ("f = g for k = s+t-2", Duration::from_secs(600), c5_f_equals_g),
        ("f for k = s+t-1", Duration::from_secs(60), c6_exact_formula),
        ("semisaturation dual oracles", Duration::MAX, c7_dual_oracle),
        ("observation implies semisaturation", Duration::MAX, c8_observation_sufficient),
        ("Turan independent set bound", Duration::MAX, c9_turan),
        ("incidence inequality", Duration::MAX, c10_incidence),
        ("edge probability and bad-set sampling", Duration::MAX, c11_lower_bound_and_bad_sets),
        ("C4/diagonals saturated", Duration::from_secs(1), c12_saturated),
    ];
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let took = start.elapsed();
        let result = match result {
            Ok(msg) if took > *limit => Err(format!("{msg}; took {took:.2?}, limit {limit:.0?}")),
            other => other,
        };
        match result {
            Ok(msg) => println!("PASS {:>2} {name}: {msg} ({took:.2?})", i + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {msg} ({took:.2?})", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
