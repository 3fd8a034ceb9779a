//! Conversion of an arbitrary representation into a proper one over an
//! enlarged pattern, and the parameterized independent-set reduction built
//! on it.
//!
//! The pattern gains the 2*k1 endpoints of a maximum greedy family of
//! pairwise disjoint edge-interior intervals as new branch vertices, plus
//! one pendant leaf per branch vertex; sets containing a branch vertex are
//! extended onto the pendant edge to depths that reverse the inclusion
//! order, which kills every proper containment.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::framework::{FwVertex, HRepresentation, SubdivisionFramework};
use crate::graph::{EdgeId, MultiEdge, Multigraph, VertexId};

/// An edge-interior interval: a representative that touches no branch
/// vertex, hence lives inside a single edge's internal path.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Interior {
    vertex: VertexId,
    edge: EdgeId,
    start: u32,
    end: u32,
}

fn interior_intervals(rep: &HRepresentation) -> Vec<Interior> {
    let mut out = Vec::new();
    for (v, s) in rep.sets() {
        let mut edge: Option<EdgeId> = None;
        let mut positions: Vec<u32> = Vec::new();
        let mut interior = true;
        for x in s {
            match x {
                FwVertex::Branch(_) => {
                    interior = false;
                    break;
                }
                FwVertex::Internal(e, k) => {
                    if edge.get_or_insert_with(|| e.clone()) != e {
                        interior = false;
                        break;
                    }
                    positions.push(*k);
                }
            }
        }
        if !interior {
            continue;
        }
        let edge = edge.expect("sets are nonempty");
        let (start, end) = (
            *positions.iter().min().unwrap(),
            *positions.iter().max().unwrap(),
        );
        out.push(Interior {
            vertex: v.clone(),
            edge,
            start,
            end,
        });
    }
    out
}

/// Per edge, a maximum family of pairwise disjoint interior intervals by the
/// earliest-end greedy rule, ties broken towards the latest start. Returns
/// the family size and the picked vertices, which form an independent set.
pub fn greedy_disjoint_intervals(rep: &HRepresentation) -> (usize, BTreeSet<VertexId>) {
    let picked = greedy_picks(rep);
    let ids = picked
        .iter()
        .map(|i| i.vertex.clone())
        .collect::<BTreeSet<_>>();
    (picked.len(), ids)
}

fn greedy_picks(rep: &HRepresentation) -> Vec<Interior> {
    let mut intervals = interior_intervals(rep);
    intervals.sort_by(|a, b| {
        (&a.edge, a.end, std::cmp::Reverse(a.start), &a.vertex).cmp(&(
            &b.edge,
            b.end,
            std::cmp::Reverse(b.start),
            &b.vertex,
        ))
    });
    let mut picked: Vec<Interior> = Vec::new();
    let mut last_end: BTreeMap<EdgeId, u32> = BTreeMap::new();
    for iv in intervals {
        let free = last_end.get(&iv.edge).is_none_or(|&e| iv.start > e);
        if free {
            last_end.insert(iv.edge.clone(), iv.end);
            picked.push(iv);
        }
    }
    picked
}

/// Doubles every internal vertex of the framework, mapping each set
/// accordingly. The intersection graph is untouched; afterwards every
/// interior interval spans at least two framework vertices, so interval
/// endpoints are pairwise distinct.
fn double_internals(rep: &HRepresentation) -> HRepresentation {
    let fw = rep.framework();
    let counts: BTreeMap<EdgeId, u32> = fw
        .base()
        .edges()
        .iter()
        .map(|e| (e.id.clone(), 2 * fw.internal_count(&e.id)))
        .collect();
    let fw2 = SubdivisionFramework::new(fw.base().clone(), counts).expect("same base");
    let sets = rep
        .sets()
        .map(|(v, s)| {
            let mapped: BTreeSet<FwVertex> = s
                .iter()
                .flat_map(|x| match x {
                    FwVertex::Branch(b) => vec![FwVertex::Branch(b.clone())],
                    FwVertex::Internal(e, k) => vec![
                        FwVertex::Internal(e.clone(), 2 * k - 1),
                        FwVertex::Internal(e.clone(), 2 * k),
                    ],
                })
                .collect();
            (v.clone(), mapped)
        })
        .collect();
    HRepresentation::new(fw2, sets).expect("doubling preserves validity")
}

/// The properized representation: same vertex ids and intersection graph,
/// proper family, pattern of exactly 2|V(H)| + 4*k1 vertices.
pub fn properize(rep: &HRepresentation) -> Result<(usize, HRepresentation)> {
    let doubled = double_internals(rep);

    // collapse duplicate representatives, remembering who to restore
    let mut rep_of_set: BTreeMap<&BTreeSet<FwVertex>, VertexId> = BTreeMap::new();
    let mut twins: BTreeMap<VertexId, VertexId> = BTreeMap::new(); // dup -> representative
    let mut kept: Vec<(VertexId, BTreeSet<FwVertex>)> = Vec::new();
    for (v, s) in doubled.sets() {
        match rep_of_set.get(s) {
            Some(r) => {
                twins.insert(v.clone(), r.clone());
            }
            None => {
                rep_of_set.insert(s, v.clone());
                kept.push((v.clone(), s.clone()));
            }
        }
    }
    let collapsed = HRepresentation::new(doubled.framework().clone(), kept)?;

    let picked = greedy_picks(&collapsed);
    let k1 = picked.len();

    let old_base = collapsed.framework().base();
    let mut used: BTreeSet<VertexId> = old_base.vertices().iter().cloned().collect();
    let mut fresh_counter = 0usize;
    let mut fresh = |used: &mut BTreeSet<VertexId>, tag: &str| -> VertexId {
        loop {
            let cand = format!("{tag}{fresh_counter}");
            fresh_counter += 1;
            if used.insert(cand.clone()) {
                return cand;
            }
        }
    };

    // promoted internal positions per edge: endpoints of picked intervals
    let mut promoted: BTreeMap<EdgeId, Vec<u32>> = BTreeMap::new();
    for p in &picked {
        promoted
            .entry(p.edge.clone())
            .or_default()
            .extend([p.start, p.end]);
    }
    for ps in promoted.values_mut() {
        ps.sort_unstable();
    }

    // new pattern: old branch vertices, promoted subdivision points, leaves
    let mut new_vertices: Vec<VertexId> = old_base.vertices().to_vec();
    let mut promoted_name: BTreeMap<(EdgeId, u32), VertexId> = BTreeMap::new();
    for (e, ps) in &promoted {
        for &p in ps {
            let name = fresh(&mut used, "s");
            promoted_name.insert((e.clone(), p), name.clone());
            new_vertices.push(name);
        }
    }

    // split every old edge at its promoted positions
    let mut new_edges: Vec<MultiEdge> = Vec::new();
    let mut new_counts: BTreeMap<EdgeId, u32> = BTreeMap::new();
    // old internal position -> new location
    let mut relocate: BTreeMap<(EdgeId, u32), FwVertex> = BTreeMap::new();
    let mut edge_counter = 0usize;
    for e in old_base.edges() {
        let r = collapsed.framework().internal_count(&e.id);
        let cuts = promoted.get(&e.id).cloned().unwrap_or_default();
        let mut segment_start = 0u32; // position of the previous cut (0 = endpoint u)
        let mut from: VertexId = e.u.clone();
        for (ci, &cut) in cuts.iter().chain(std::iter::once(&(r + 1))).enumerate() {
            let is_last = ci == cuts.len();
            let to: VertexId = if is_last {
                e.v.clone()
            } else {
                promoted_name[&(e.id.clone(), cut)].clone()
            };
            let id = format!("f{edge_counter}");
            edge_counter += 1;
            let inner = cut - segment_start - 1;
            for off in 1..=inner {
                relocate.insert(
                    (e.id.clone(), segment_start + off),
                    FwVertex::Internal(id.clone(), off),
                );
            }
            if !is_last {
                relocate.insert((e.id.clone(), cut), FwVertex::Branch(to.clone()));
            }
            new_counts.insert(id.clone(), inner);
            new_edges.push(MultiEdge {
                id,
                u: from.clone(),
                v: to.clone(),
            });
            from = to;
            segment_start = cut;
        }
    }

    // a pendant leaf per new branch vertex, subdivided once per set through
    // that vertex so extension depths can all differ
    let branch_pool: Vec<VertexId> = new_vertices.clone();
    let mut leaf_edge: BTreeMap<VertexId, EdgeId> = BTreeMap::new();
    for w in &branch_pool {
        let leaf = fresh(&mut used, "t");
        new_vertices.push(leaf.clone());
        let id = format!("f{edge_counter}");
        edge_counter += 1;
        leaf_edge.insert(w.clone(), id.clone());
        new_edges.push(MultiEdge {
            id,
            u: w.clone(),
            v: leaf,
        });
    }

    // map the collapsed sets onto the split framework
    let mapped: Vec<(VertexId, BTreeSet<FwVertex>)> = collapsed
        .sets()
        .map(|(v, s)| {
            let t: BTreeSet<FwVertex> = s
                .iter()
                .map(|x| match x {
                    FwVertex::Branch(b) => FwVertex::Branch(b.clone()),
                    FwVertex::Internal(e, k) => relocate[&(e.clone(), *k)].clone(),
                })
                .collect();
            (v.clone(), t)
        })
        .collect();

    // per branch vertex: sets through it, largest first; depth = rank
    let mut through: BTreeMap<VertexId, Vec<(usize, VertexId)>> = BTreeMap::new();
    for (v, s) in &mapped {
        for x in s {
            if let FwVertex::Branch(b) = x {
                through
                    .entry(b.clone())
                    .or_default()
                    .push((s.len(), v.clone()));
            }
        }
    }
    let mut depth: BTreeMap<(VertexId, VertexId), u32> = BTreeMap::new(); // (w, v) -> depth
    for (w, mut list) in through {
        list.sort_by(|a, b| (std::cmp::Reverse(a.0), &a.1).cmp(&(std::cmp::Reverse(b.0), &b.1)));
        let eid = &leaf_edge[&w];
        new_counts.insert(eid.clone(), list.len() as u32);
        for (rank, (_, v)) in list.into_iter().enumerate() {
            depth.insert((w.clone(), v), rank as u32 + 1);
        }
    }
    for eid in leaf_edge.values() {
        new_counts.entry(eid.clone()).or_insert(0);
    }

    let new_base = Multigraph::with_edge_ids(new_vertices, new_edges)?;
    let new_fw = SubdivisionFramework::new(new_base, new_counts)?;

    let mut final_sets: BTreeMap<VertexId, BTreeSet<FwVertex>> = BTreeMap::new();
    for (v, s) in mapped {
        let mut t = s.clone();
        for x in &s {
            if let FwVertex::Branch(b) = x {
                let d = depth[&(b.clone(), v.clone())];
                let eid = &leaf_edge[b];
                for k in 1..=d {
                    t.insert(FwVertex::Internal(eid.clone(), k));
                }
            }
        }
        final_sets.insert(v, t);
    }

    // restore collapsed twins on the final representative sets
    let ordered: Vec<(VertexId, BTreeSet<FwVertex>)> = rep
        .vertex_order()
        .iter()
        .map(|v| {
            let source = twins.get(v).unwrap_or(v);
            (v.clone(), final_sets[source].clone())
        })
        .collect();
    let out = HRepresentation::new(new_fw, ordered)?;

    let expect_pattern = 2 * old_base.vertices().len() + 4 * k1;
    if out.framework().base().vertices().len() != expect_pattern {
        return Err(Error::Internal(format!(
            "pattern has {} vertices, expected {expect_pattern}",
            out.framework().base().vertices().len()
        )));
    }
    if out.intersection_graph() != rep.intersection_graph() {
        return Err(Error::Internal(
            "properization changed the intersection graph".into(),
        ));
    }
    if let Some((a, b)) = out.proper_violation() {
        return Err(Error::Internal(format!(
            "properization left a containment: {a:?} contains {b:?}"
        )));
    }
    Ok((k1, out))
}

/// Outcome of the parameterized reduction.
#[derive(Debug, Clone)]
pub enum ReduceOutcome {
    /// The greedy family alone certifies an independent set of size >= k.
    Yes { witness: BTreeSet<VertexId> },
    /// A properized equivalent instance with the same parameter.
    Reduced { k1: usize, rep: HRepresentation },
}

/// Decides the instance outright when the greedy family is large enough;
/// otherwise returns the proper instance whose pattern stays below the
/// additive bound in k.
pub fn reduce_is_instance(rep: &HRepresentation, k: usize) -> Result<ReduceOutcome> {
    if k == 0 {
        return Ok(ReduceOutcome::Yes {
            witness: BTreeSet::new(),
        });
    }
    let (k1, witness) = greedy_disjoint_intervals(rep);
    if k1 >= k {
        return Ok(ReduceOutcome::Yes { witness });
    }
    let (k1, rep2) = properize(rep)?;
    Ok(ReduceOutcome::Reduced { k1, rep: rep2 })
}
