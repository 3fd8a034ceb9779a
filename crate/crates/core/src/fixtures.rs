//! Named example representations used by tests, the CLI catalog and the docs.
//!
//! The four claw representations (`fig1a`..`fig1d`) cover every combination
//! of proper / non-crossing. `fig3_fan4` is a proper claw representation of
//! the 4-fan (which admits no non-crossing representation over any tree);
//! `fig3_claw_c2` is a non-crossing, non-proper circular representation of
//! the claw. `fig5` exercises the profile computation on a hexagon with a
//! chord, and `fig6` the framework/vertex orders on a subdivided tree.

use std::collections::{BTreeMap, BTreeSet};

use crate::framework::{FwVertex, HRepresentation, SubdivisionFramework};
use crate::graph::{Multigraph, SimpleGraph, VertexId};
use crate::order::EdgeOrderedForest;

fn claw_framework() -> SubdivisionFramework {
    // center c with three arms: left (el), right (er), down (ed)
    let base = Multigraph::with_edge_ids(
        vec!["c", "l", "r", "d"],
        vec![
            crate::graph::MultiEdge {
                id: "el".into(),
                u: "c".into(),
                v: "l".into(),
            },
            crate::graph::MultiEdge {
                id: "er".into(),
                u: "c".into(),
                v: "r".into(),
            },
            crate::graph::MultiEdge {
                id: "ed".into(),
                u: "c".into(),
                v: "d".into(),
            },
        ],
    )
    .unwrap();
    let counts = BTreeMap::from([
        ("el".to_string(), 6u32),
        ("er".to_string(), 5u32),
        ("ed".to_string(), 4u32),
    ]);
    SubdivisionFramework::new(base, counts).unwrap()
}

fn iv(edge: &str, k: u32) -> FwVertex {
    FwVertex::Internal(edge.to_string(), k)
}

fn bv(v: &str) -> FwVertex {
    FwVertex::Branch(v.to_string())
}

fn arm(edge: &str, from: u32, to: u32) -> impl Iterator<Item = FwVertex> + '_ {
    (from..=to).map(move |k| iv(edge, k))
}

fn rep(fw: SubdivisionFramework, sets: Vec<(&str, BTreeSet<FwVertex>)>) -> HRepresentation {
    HRepresentation::new(
        fw,
        sets.into_iter().map(|(v, s)| (v.to_string(), s)).collect(),
    )
    .expect("fixture must be a valid representation")
}

/// Claw representation that is proper and non-crossing.
pub fn fig1a() -> HRepresentation {
    let fw = claw_framework();
    let center: BTreeSet<FwVertex> = arm("el", 1, 3)
        .chain([bv("c")])
        .chain(arm("er", 1, 2))
        .chain(arm("ed", 1, 2))
        .collect();
    rep(
        fw,
        vec![
            ("v1", center),
            ("v2", arm("el", 2, 4).collect()),
            ("v3", arm("er", 1, 3).collect()),
            ("v4", arm("ed", 1, 3).collect()),
        ],
    )
}

/// Claw representation that is non-crossing but not proper: the center set
/// swallows the right-arm set.
pub fn fig1b() -> HRepresentation {
    let fw = claw_framework();
    let center: BTreeSet<FwVertex> = arm("el", 1, 3)
        .chain([bv("c")])
        .chain(arm("er", 1, 3))
        .chain(arm("ed", 1, 2))
        .collect();
    rep(
        fw,
        vec![
            ("v1", center),
            ("v2", arm("el", 2, 4).collect()),
            ("v3", arm("er", 1, 3).collect()),
            ("v4", arm("ed", 1, 3).collect()),
        ],
    )
}

/// Claw representation that is proper but not non-crossing: the long
/// horizontal set minus the short central one falls apart.
pub fn fig1c() -> HRepresentation {
    let fw = claw_framework();
    let long: BTreeSet<FwVertex> = arm("el", 1, 3)
        .chain([bv("c")])
        .chain(arm("er", 1, 2))
        .collect();
    let short: BTreeSet<FwVertex> = arm("el", 1, 1)
        .chain([bv("c")])
        .chain(arm("er", 1, 1))
        .chain(arm("ed", 1, 2))
        .collect();
    rep(
        fw,
        vec![
            ("v1", long),
            ("v2", arm("el", 2, 4).collect()),
            ("v3", arm("er", 2, 4).collect()),
            ("v4", short),
        ],
    )
}

/// Claw representation that is neither proper nor non-crossing.
pub fn fig1d() -> HRepresentation {
    let fw = claw_framework();
    let long: BTreeSet<FwVertex> = arm("el", 1, 3)
        .chain([bv("c")])
        .chain(arm("er", 1, 2))
        .collect();
    let short: BTreeSet<FwVertex> = arm("el", 1, 1)
        .chain([bv("c")])
        .chain(arm("er", 1, 1))
        .collect();
    rep(
        fw,
        vec![
            ("v1", long),
            ("v2", arm("el", 2, 4).collect()),
            ("v3", arm("er", 2, 4).collect()),
            ("v4", short),
        ],
    )
}

/// The 4-fan: P5 (v1..v5) plus a universal vertex z.
pub fn fan4_graph() -> SimpleGraph {
    SimpleGraph::from_edges(
        vec!["z", "v1", "v2", "v3", "v4", "v5"],
        &[
            ("v1", "v2"),
            ("v2", "v3"),
            ("v3", "v4"),
            ("v4", "v5"),
            ("z", "v1"),
            ("z", "v2"),
            ("z", "v3"),
            ("z", "v4"),
            ("z", "v5"),
        ],
    )
    .unwrap()
}

/// A proper claw-representation of the 4-fan (not non-crossing: the 4-fan has
/// no non-crossing representation over any tree).
pub fn fig3_fan4() -> HRepresentation {
    let fw = claw_framework();
    // left arm positions grow away from the center, likewise right and down
    let z: BTreeSet<FwVertex> = arm("el", 1, 4)
        .chain([bv("c")])
        .chain(arm("er", 1, 3))
        .collect();
    let v1: BTreeSet<FwVertex> = arm("el", 3, 6).collect();
    let v2: BTreeSet<FwVertex> = arm("el", 1, 5).collect();
    let v3: BTreeSet<FwVertex> = arm("el", 1, 2)
        .chain([bv("c")])
        .chain(arm("er", 1, 1))
        .chain(arm("ed", 1, 2))
        .collect();
    let v4: BTreeSet<FwVertex> = [bv("c")].into_iter().chain(arm("er", 1, 4)).collect();
    let v5: BTreeSet<FwVertex> = arm("er", 2, 5).collect();
    rep(
        fw,
        vec![
            ("z", z),
            ("v1", v1),
            ("v2", v2),
            ("v3", v3),
            ("v4", v4),
            ("v5", v5),
        ],
    )
}

/// A non-crossing (but not proper) C2-representation of the claw: one arc is
/// the whole cycle, the three others are short disjoint arcs inside the two
/// subdivided parallel edges.
pub fn fig3_claw_c2() -> HRepresentation {
    let base = Multigraph::new(vec!["x", "y"], vec![("x", "y"), ("x", "y")]).unwrap();
    let counts = BTreeMap::from([("e0".to_string(), 4u32), ("e1".to_string(), 2u32)]);
    let fw = SubdivisionFramework::new(base, counts).unwrap();
    let full: BTreeSet<FwVertex> = fw.vertices().iter().cloned().collect();
    rep(
        fw,
        vec![
            ("z", full),
            ("a", [iv("e0", 1), iv("e0", 2)].into_iter().collect()),
            ("b", [iv("e0", 4)].into_iter().collect()),
            ("c", [iv("e1", 1), iv("e1", 2)].into_iter().collect()),
        ],
    )
}

/// Hexagon a-b-c-d-e-f with chord cf, carrying one set per profile shape of
/// interest: `v` touches five edges four different ways, `w` sits strictly
/// inside the subdivision of de.
pub fn fig5() -> HRepresentation {
    let e = |id: &str, u: &str, v: &str| crate::graph::MultiEdge {
        id: id.into(),
        u: u.into(),
        v: v.into(),
    };
    let base = Multigraph::with_edge_ids(
        vec!["a", "b", "c", "d", "e", "f"],
        vec![
            e("ab", "a", "b"),
            e("bc", "b", "c"),
            e("cd", "c", "d"),
            e("de", "d", "e"),
            e("ef", "e", "f"),
            e("af", "a", "f"),
            e("cf", "c", "f"),
        ],
    )
    .unwrap();
    let counts = BTreeMap::from([
        ("ab".to_string(), 1u32),
        ("bc".to_string(), 2),
        ("cd".to_string(), 2),
        ("de".to_string(), 3),
        ("ef".to_string(), 3),
        ("af".to_string(), 2),
        ("cf".to_string(), 2),
    ]);
    let fw = SubdivisionFramework::new(base, counts).unwrap();
    let v: BTreeSet<FwVertex> = [bv("a"), bv("b"), bv("c"), bv("f")]
        .into_iter()
        .chain([iv("ab", 1)])
        .chain(arm("bc", 1, 2))
        .chain(arm("af", 1, 2))
        .chain([iv("cf", 1)]) // both cf endpoints but not all its internals
        .chain([iv("cd", 1)]) // one endpoint of cd, from the c side
        .chain([iv("ef", 3)]) // one endpoint of ef, from the f side
        .collect();
    let w: BTreeSet<FwVertex> = arm("de", 1, 2).collect();
    rep(fw, vec![("v", v), ("w", w)])
}

/// The subdivided tree of the ordering example: root a, explicit edge order
/// e1..e6, and two sets u, v with u preceding v in the derived vertex order.
pub fn fig6() -> (HRepresentation, EdgeOrderedForest) {
    let e = |id: &str, u: &str, v: &str| crate::graph::MultiEdge {
        id: id.into(),
        u: u.into(),
        v: v.into(),
    };
    let base = Multigraph::with_edge_ids(
        vec!["a", "b", "c", "d", "e", "f", "g"],
        vec![
            e("e1", "a", "b"),
            e("e2", "a", "c"),
            e("e3", "b", "d"),
            e("e4", "b", "e"),
            e("e5", "e", "f"),
            e("e6", "e", "g"),
        ],
    )
    .unwrap();
    let counts = BTreeMap::from([
        ("e1".to_string(), 1u32),
        ("e2".to_string(), 2),
        ("e3".to_string(), 3),
        ("e4".to_string(), 1),
        ("e5".to_string(), 1),
        ("e6".to_string(), 1),
    ]);
    let fw = SubdivisionFramework::new(base.clone(), counts).unwrap();
    let u: BTreeSet<FwVertex> = [iv("e1", 1), bv("b")]
        .into_iter()
        .chain(arm("e3", 1, 3))
        .chain([iv("e4", 1), bv("e"), iv("e6", 1)])
        .collect();
    let v: BTreeSet<FwVertex> = [iv("e1", 1), bv("b"), iv("e3", 1)]
        .into_iter()
        .chain([iv("e4", 1), bv("e"), iv("e5", 1), bv("f"), iv("e6", 1)])
        .collect();
    let rep = rep(fw, vec![("u", u), ("v", v)]);
    let eof = EdgeOrderedForest::with_explicit(
        base,
        vec![(
            "a".to_string(),
            ["e1", "e2", "e3", "e4", "e5", "e6"]
                .iter()
                .map(|s| s.to_string())
                .collect(),
        )],
    )
    .unwrap();
    (rep, eof)
}

/// Names understood by the fixture catalog.
pub const FIXTURE_NAMES: &[&str] = &[
    "fig1a",
    "fig1b",
    "fig1c",
    "fig1d",
    "fig3-fan",
    "fig3-claw",
    "fig5",
    "fig6",
];

/// Looks a representation up by catalog name.
pub fn by_name(name: &str) -> Option<HRepresentation> {
    match name {
        "fig1a" => Some(fig1a()),
        "fig1b" => Some(fig1b()),
        "fig1c" => Some(fig1c()),
        "fig1d" => Some(fig1d()),
        "fig3-fan" => Some(fig3_fan4()),
        "fig3-claw" => Some(fig3_claw_c2()),
        "fig5" => Some(fig5()),
        "fig6" => Some(fig6().0),
        _ => None,
    }
}

/// Ids a fixture graph vertex may use, for tests that need stable names.
pub type FixtureVertex = VertexId;
