mod common;

use std::fs;
use std::path::Path;

use serde_json::Value;
use tempfile::TempDir;

use ramsey_sat::certificate::Certificate;
use ramsey_sat::cli::{run, RunOutput, EXIT_IO, EXIT_USAGE};
use ramsey_sat::graph::VertexSet;
use ramsey_sat::pattern::c4_diagonals;
use ramsey_sat::reduction::KSubsetColoring;
use ramsey_sat::saturation::Outcome;
use ramsey_sat::search::find_clique_within;
use ramsey_sat::{ColoredCompleteGraph, SimpleGraph};

fn ramsey(args: &[&str]) -> RunOutput {
    run(std::iter::once("ramsey-sat").chain(args.iter().copied()))
}

fn cert(out: &RunOutput) -> Certificate {
    assert!(out.stderr.is_empty(), "stderr: {}", out.stderr);
    Certificate::parse(&out.stdout).expect("valid certificate")
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn path(dir: &TempDir, name: &str) -> String {
    dir.path().join(name).to_str().unwrap().to_string()
}

#[test]
fn spec_examples() {
    let dir = TempDir::new().unwrap();
    let c4 = write(&dir, "c4diag.cg", &c4_diagonals().to_cg());
    let out = ramsey(&["verify", "ssat", "--in", &c4, "--k", "3"]);
    assert_eq!(out.code, 0);
    assert_eq!(cert(&out).verdict, Outcome::Holds);

    let out = ramsey(&["oracle", "g", "--n", "3", "--s", "2", "--t", "2", "--n-max", "6"]);
    assert_eq!(out.code, 0);
    assert_eq!(cert(&out).value, Some(Value::from(6)));

    let a = path(&dir, "a.cg");
    let out = ramsey(&["construct", "affine", "--q", "5", "--r", "2", "--strategy", "parallel-balanced", "--out", &a]);
    assert_eq!(out.code, 0);
    let first = fs::read_to_string(&a).unwrap();
    let pattern = ColoredCompleteGraph::parse_cg(&first).unwrap();
    assert_eq!((pattern.n(), pattern.r()), (25, 2));
    let again = ramsey(&["construct", "affine", "--q", "5", "--r", "2", "--strategy", "parallel-balanced", "--out", &a]);
    assert_eq!(fs::read_to_string(&a).unwrap(), first);
    assert_eq!(cert(&again).body(), cert(&out).body());
}

#[test]
fn seeded_commands_reproduce() {
    let dir = TempDir::new().unwrap();
    let g = path(&dir, "g.txt");
    let commands: Vec<Vec<&str>> = vec![
        vec!["construct", "gnp", "--N", "30", "--p", "0.4", "--seed", "5", "--out", &g],
        vec!["construct", "affine", "--q", "3", "--r", "3", "--strategy", "round-robin", "--seed", "2"],
        vec!["experiment", "bad-sets", "--N", "12", "--n", "5", "--s", "3", "--t", "3", "--seed", "4", "--samples", "500"],
        vec!["experiment", "bad-sets", "--N", "10", "--n", "4", "--s", "2", "--t", "2", "--seed", "4"],
        vec!["geom", "incidence", "--q", "7", "--classes", "0,3,5", "--random-points", "20", "--seed", "9"],
        vec!["search", "ssat", "--r", "2", "--k", "3", "--threads", "2"],
    ];
    for args in commands {
        let a = ramsey(&args);
        let b = ramsey(&args);
        assert!(a.code <= 2, "{args:?}: {}", a.stderr);
        let (ca, cb) = (cert(&a), cert(&b));
        assert_eq!(ca.body(), cb.body(), "{args:?}");
        if args.contains(&"--seed") {
            assert!(ca.seed.is_some() && ca.generator.is_some(), "{args:?}");
        }
    }
}

#[test]
fn randomized_commands_require_seed() {
    for args in [
        vec!["construct", "gnp", "--N", "10", "--p", "0.5"],
        vec!["experiment", "bad-sets", "--N", "10", "--n", "4", "--s", "2", "--t", "2"],
        vec!["construct", "affine", "--q", "3", "--r", "2", "--strategy", "round-robin"],
        vec!["geom", "incidence", "--q", "5", "--classes", "0", "--random-points", "3"],
    ] {
        let out = ramsey(&args);
        assert_eq!(out.code, EXIT_USAGE, "{args:?}");
        assert!(out.stdout.is_empty());
    }
}

#[test]
fn usage_and_input_errors() {
    let dir = TempDir::new().unwrap();
    let out = ramsey(&["verify", "ssat", "--k", "3"]);
    assert_eq!(out.code, EXIT_USAGE);
    assert!(out.stdout.is_empty());
    let out = ramsey(&["frobnicate"]);
    assert_eq!(out.code, EXIT_USAGE);

    let bad = write(&dir, "bad.cg", "cg 3 2\n0 1 3\n");
    let out = ramsey(&["verify", "ssat", "--in", &bad, "--k", "3"]);
    assert_eq!(out.code, EXIT_IO);
    assert!(out.stderr.contains("line 2"), "{}", out.stderr);
    assert!(out.stdout.is_empty());

    let dup = write(&dir, "dup.cg", "cg 3 2\n0 1 1\n0 1 2\n");
    let out = ramsey(&["verify", "ssat", "--in", &dup, "--k", "3"]);
    assert_eq!(out.code, EXIT_IO);
    assert!(out.stderr.contains("line 3") && out.stderr.contains("duplicate"));

    let out = ramsey(&["verify", "ssat", "--in", &path(&dir, "missing.cg"), "--k", "3"]);
    assert_eq!(out.code, EXIT_IO);

    let out = ramsey(&["geom", "plane", "--q", "6"]);
    assert_eq!(out.code, EXIT_USAGE);

    let out = ramsey(&["--help"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("construct"));
}

/// Does joining a new vertex to `c` with edge colours `colours` avoid every
/// monochromatic `K_k` through the new vertex?
fn extension_avoids(c: &ColoredCompleteGraph, k: usize, colours: &[usize]) -> bool {
    !common::subsets(c.n(), k - 1).iter().any(|t| {
        let col = colours[t[0]];
        t.iter().all(|&a| colours[a] == col)
            && t.iter().enumerate().all(|(i, &a)| t[i + 1..].iter().all(|&b| c.colour_of(a, b) == Some(col)))
    })
}

#[test]
fn witnesses_reproduce_failures() {
    let dir = TempDir::new().unwrap();
    // one colour on a triangle: a new vertex joined in colour 2 creates nothing
    let tri = ColoredCompleteGraph::from_fn(3, 2, |_, _| 1).unwrap();
    let file = write(&dir, "tri.cg", &tri.to_cg());

    for sub in ["ssat", "ssat-direct"] {
        let out = ramsey(&["verify", sub, "--in", &file, "--k", "3"]);
        assert_eq!(out.code, 1, "{sub}");
        let w = cert(&out).witness.unwrap();
        assert_eq!(w["kind"], "vertex-colouring");
        let colours: Vec<usize> = serde_json::from_value(w["colours"].clone()).unwrap();
        assert!(extension_avoids(&tri, 3, &colours), "{sub}: witness does not reproduce");
    }

    let out = ramsey(&["verify", "observation", "--in", &file, "--k", "3"]);
    assert_eq!(out.code, 1);
    let w = cert(&out).witness.unwrap();
    assert_eq!(w["kind"], "class-subset");
    let colour = w["colour"].as_u64().unwrap() as usize;
    let set: VertexSet = serde_json::from_value(w["set"].clone()).unwrap();
    assert_eq!(set.len(), 2);
    assert!(find_clique_within(tri.class(colour), &set, 2).is_none());

    let k4 = ColoredCompleteGraph::from_fn(4, 2, |u, v| if (u, v) == (2, 3) { 2 } else { 1 }).unwrap();
    let file = write(&dir, "k4.cg", &k4.to_cg());
    for sub in ["kkfree", "saturated"] {
        let out = ramsey(&["verify", sub, "--in", &file, "--k", "3"]);
        assert_eq!(out.code, 1, "{sub}");
        let w = cert(&out).witness.unwrap();
        assert_eq!(w["kind"], "monochromatic-clique");
        let colour = w["colour"].as_u64().unwrap() as usize;
        let vs: VertexSet = serde_json::from_value(w["vertices"].clone()).unwrap();
        assert!(vs.len() == 3 && k4.class(colour).is_clique(vs.as_slice()));
    }
    let out = ramsey(&["verify", "kkfree", "--in", &file, "--k", "4"]);
    assert_eq!(out.code, 0);
}

#[test]
fn budgets_give_unknown() {
    let dir = TempDir::new().unwrap();
    let file = write(&dir, "c4.cg", &c4_diagonals().to_cg());
    let out = ramsey(&["verify", "ssat", "--in", &file, "--k", "3", "--max-exhaustive", "10"]);
    assert_eq!(out.code, 2);
    let c = cert(&out);
    assert!(c.budget.is_some() && !c.exhaustive);

    let out = ramsey(&["verify", "ssat", "--in", &file, "--k", "3", "--max-exhaustive", "10", "--samples", "100", "--seed", "1"]);
    assert_eq!(out.code, 2);
    let c = cert(&out);
    assert_eq!((c.checked, c.exhaustive, c.seed), (100, false, Some(1)));

    let out = ramsey(&["search", "ssat", "--r", "2", "--k", "3", "--n", "4", "--budget", "3"]);
    assert_eq!(out.code, 2);
    assert!(cert(&out).budget.is_some());

    let out = ramsey(&["oracle", "g", "--n", "3", "--s", "2", "--t", "2", "--n-max", "9"]);
    assert_eq!(out.code, 2);
    // g(3,2,2) = 6, so a cap of 5 leaves the value open; C5 is the evidence
    let out = ramsey(&["oracle", "g", "--n", "3", "--s", "2", "--t", "2", "--n-max", "5"]);
    assert_eq!(out.code, 2);
    let c = cert(&out);
    assert_eq!(c.budget, Some(Value::from(5)));
    assert_eq!(c.witness.unwrap()["N"], 5);
}

#[test]
fn search_and_oracle_certificates() {
    let out = ramsey(&["search", "ssat", "--r", "2", "--k", "3", "--n", "3"]);
    assert_eq!(out.code, 1);
    assert_eq!(cert(&out).witness.unwrap()["exhausted"], serde_json::json!([3]));

    let out = ramsey(&["oracle", "f", "--n", "4", "--s", "2", "--t", "2", "--k", "3", "--n-max", "6"]);
    assert_eq!(out.code, 0);
    let c = cert(&out);
    assert_eq!(c.value, Some(Value::from(5)));
    let ksc = c.witness.unwrap()["ksc"].as_str().unwrap().to_string();
    assert_eq!(KSubsetColoring::parse_ksc(&ksc).unwrap().ground(), 4);
}

#[test]
fn reduce_round_trip_files() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "c5.g", &SimpleGraph::cycle(5).to_text());
    let chi = path(&dir, "c5.ksc");
    let out = ramsey(&["reduce", "graph-to-chi", "--in", &g, "--s", "2", "--t", "3", "--out", &chi]);
    assert_eq!(out.code, 0);
    assert_eq!(cert(&out).value.unwrap()["blue"], 10);
    let back = path(&dir, "back.g");
    let out = ramsey(&["reduce", "chi-to-graph", "--in", &chi, "--s", "2", "--t", "3", "--out", &back]);
    assert_eq!(out.code, 0);
    let h = SimpleGraph::parse(&fs::read_to_string(&back).unwrap()).unwrap();
    assert_eq!(h.n(), 5);

    let bad = write(&dir, "bad.ksc", "ksc 5 3\nzz\n");
    let out = ramsey(&["reduce", "chi-to-graph", "--in", &bad, "--s", "2", "--t", "3"]);
    assert_eq!(out.code, EXIT_IO);
}

#[test]
fn geometry_and_construction_files() {
    let dir = TempDir::new().unwrap();
    let plane = path(&dir, "plane.inc");
    let out = ramsey(&["geom", "plane", "--q", "5", "--out", &plane]);
    assert_eq!(out.code, 0);
    let st = ramsey_sat::geometry::IncidenceStructure::parse(&fs::read_to_string(&plane).unwrap()).unwrap();
    assert_eq!(st.lines().len(), 30);

    let out = ramsey(&["geom", "fq3-family", "--q", "3", "--lambda", "2"]);
    assert_eq!(cert(&out).value.unwrap()["lines"], 27);

    let out = ramsey(&["geom", "incidence", "--q", "5", "--classes", "0,1", "--points", "0,1,2,7"]);
    assert_eq!(out.code, 0);
    assert_eq!(cert(&out).value.unwrap()["sum"], 8);

    let (full, pre) = (path(&dir, "f.cg"), path(&dir, "p.cg"));
    let out = ramsey(&["construct", "fq3", "--q", "2", "--r", "2", "--out", &full, "--pre-out", &pre]);
    assert_eq!(out.code, 0);
    assert_eq!(cert(&out).value.unwrap()["leftover_pairs"], 12);
    assert!(ColoredCompleteGraph::parse_cg(&fs::read_to_string(&full).unwrap()).unwrap().is_complete());
    assert!(!ColoredCompleteGraph::parse_cg(&fs::read_to_string(&pre).unwrap()).unwrap().is_complete());
}

#[test]
fn cert_flag_writes_the_same_certificate() {
    let dir = TempDir::new().unwrap();
    let file = path(&dir, "cert.json");
    let out = ramsey(&["--cert", &file, "oracle", "g", "--n", "2", "--s", "2", "--t", "2", "--n-max", "4"]);
    assert_eq!(out.code, 0);
    assert!(Path::new(&file).exists());
    assert_eq!(fs::read_to_string(&file).unwrap(), out.stdout);
}
