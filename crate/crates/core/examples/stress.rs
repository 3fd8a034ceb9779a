//! Randomized robustness harness, heavier than the test suite.
//!
//! Phase 1 drives the mixed-thin pipeline over seeded non-crossing
//! representations for a spread of base shapes (loops, parallels, cycles,
//! trees) and re-checks every certificate. Phase 2 pushes arbitrary --
//! mostly crossing -- families through properization and the reduction.
//! Run with `cargo run --release -p hgraph-core --example stress`.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use hgraph_core::builder::build_proper_mixed_thin_with_report;
use hgraph_core::framework::{random_noncrossing_rep, HRepresentation, SubdivisionFramework};
use hgraph_core::graph::Multigraph;
use hgraph_core::properize::{
    greedy_disjoint_intervals, properize, reduce_is_instance, ReduceOutcome,
};
use hgraph_core::width::check_mixed_thin;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn base_shapes() -> Vec<Multigraph> {
    vec![
        Multigraph::new(vec!["x"], vec![("x", "x")]).unwrap(),
        Multigraph::new(vec!["x"], vec![("x", "x"), ("x", "x")]).unwrap(),
        Multigraph::new(vec!["x", "y"], vec![("x", "y")]).unwrap(),
        Multigraph::new(vec!["x", "y"], vec![("x", "y"), ("x", "y")]).unwrap(),
        Multigraph::new(vec!["x", "y"], vec![("x", "y"), ("x", "y"), ("x", "y")]).unwrap(),
        Multigraph::new(vec!["x", "y"], vec![("x", "y"), ("x", "x")]).unwrap(),
        Multigraph::new(vec!["x", "y"], vec![("x", "y"), ("x", "x"), ("y", "y")]).unwrap(),
        Multigraph::new(
            vec!["x", "y", "z"],
            vec![("x", "y"), ("y", "z"), ("z", "x")],
        )
        .unwrap(),
        Multigraph::new(
            vec!["x", "y", "z"],
            vec![("x", "y"), ("x", "y"), ("y", "z")],
        )
        .unwrap(),
        Multigraph::new(
            vec!["c", "l1", "l2", "l3"],
            vec![("c", "l1"), ("c", "l2"), ("c", "l3")],
        )
        .unwrap(),
        Multigraph::new(
            vec!["a", "b", "c", "d"],
            vec![("a", "b"), ("b", "c"), ("c", "d")],
        )
        .unwrap(),
        Multigraph::new(
            vec!["a", "b", "c", "d"],
            vec![("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")],
        )
        .unwrap(),
        Multigraph::new(
            vec!["a", "b", "c", "d", "e", "f"],
            vec![
                ("a", "b"),
                ("b", "c"),
                ("c", "d"),
                ("d", "e"),
                ("e", "f"),
                ("f", "a"),
                ("c", "f"),
            ],
        )
        .unwrap(),
    ]
}

/// Arbitrary connected sets, crossing allowed.
fn random_rep(base: &Multigraph, n: usize, seed: u64) -> HRepresentation {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut counts = BTreeMap::new();
    for e in base.edges() {
        counts.insert(e.id.clone(), rng.random_range(0..=6u32));
    }
    let fw = SubdivisionFramework::new(base.clone(), counts).unwrap();
    let fw_n = fw.vertex_count();
    let verts = fw.vertices().to_vec();
    let sets = (0..n)
        .map(|i| {
            let target = rng.random_range(1..=fw_n);
            let start = rng.random_range(0..fw_n);
            let mut set = BTreeSet::from([start]);
            let mut frontier: Vec<usize> = fw.neighbors_idx(start).iter().copied().collect();
            while set.len() < target && !frontier.is_empty() {
                let pick = rng.random_range(0..frontier.len());
                let v = frontier.swap_remove(pick);
                if set.insert(v) {
                    frontier.extend(
                        fw.neighbors_idx(v)
                            .iter()
                            .copied()
                            .filter(|w| !set.contains(w)),
                    );
                }
            }
            (
                format!("v{i}"),
                set.into_iter().map(|j| verts[j].clone()).collect(),
            )
        })
        .collect();
    HRepresentation::new(fw, sets).unwrap()
}

fn main() {
    let t0 = Instant::now();
    let bases = base_shapes();

    let mut runs = 0u64;
    let mut fallbacks = 0u64;
    let mut max_classes = 0usize;
    for (bi, base) in bases.iter().enumerate() {
        for seed in 0..500u64 {
            let n = 1 + (seed as usize * 11) % 30;
            let rep = random_noncrossing_rep(base, n, seed * 101 + bi as u64).unwrap();
            let (cert, report) = build_proper_mixed_thin_with_report(&rep)
                .unwrap_or_else(|e| panic!("base {bi} seed {seed}: builder failed: {e}"));
            if let Some(v) = check_mixed_thin(rep.intersection_graph(), &cert, true, false).unwrap()
            {
                panic!("base {bi} seed {seed}: checker failed: {v:?}");
            }
            assert!(
                report.class_count <= report.class_bound,
                "base {bi} seed {seed}"
            );
            fallbacks += report.fallback_pairs.len() as u64;
            max_classes = max_classes.max(report.class_count);
            runs += 1;
        }
    }
    println!(
        "mixed-thin pipeline: {runs} runs ok; max classes {max_classes}; fallback activations {fallbacks}"
    );

    let mut prop_runs = 0u64;
    let mut crossing_seen = 0u64;
    for (bi, base) in bases.iter().enumerate() {
        for seed in 0..200u64 {
            let n = 1 + (seed as usize * 7) % 25;
            let rep = random_rep(base, n, seed * 31 + bi as u64);
            if !rep.is_non_crossing() {
                crossing_seen += 1;
            }
            let (k1, out) = properize(&rep)
                .unwrap_or_else(|e| panic!("base {bi} seed {seed}: properize failed: {e}"));
            assert!(out.is_proper(), "base {bi} seed {seed}");
            assert_eq!(out.intersection_graph(), rep.intersection_graph());
            assert_eq!(
                out.framework().base().vertices().len(),
                2 * base.vertices().len() + 4 * k1
            );
            let (k1b, witness) = greedy_disjoint_intervals(&rep);
            assert_eq!(k1, k1b);
            let g = rep.intersection_graph();
            for u in &witness {
                for v in &witness {
                    assert!(u == v || !g.has_edge(u, v));
                }
            }
            match reduce_is_instance(&rep, k1 + 1).unwrap() {
                ReduceOutcome::Reduced { k1: kr, rep: rep2 } => {
                    let h2 = rep2.framework().base();
                    assert!(
                        h2.size() + kr < base.size() + 2 * base.vertices().len() + 5 * (k1 + 1)
                    );
                }
                ReduceOutcome::Yes { .. } => panic!("k1+1 cannot be a yes-instance"),
            }
            prop_runs += 1;
        }
    }
    println!("properization: {prop_runs} runs ok ({crossing_seen} inputs were crossing)");
    println!("total {:?}", t0.elapsed());
}
