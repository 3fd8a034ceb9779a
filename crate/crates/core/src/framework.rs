//! Subdivision frameworks and families of connected vertex subsets on them.
//!
//! A framework is a subdivision of a pattern multigraph H: every edge of H is
//! replaced by a path through zero or more internal vertices. Framework
//! vertices carry structured ids (branch vertices keep the H-vertex id,
//! internal vertices are addressed by edge id and position) because the
//! ordering machinery downstream does positional arithmetic per edge.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Multigraph, SimpleGraph, VertexId};

/// A vertex of a framework.
///
/// `Internal(e, k)` is the k-th internal vertex (1-based) of the subdivision
/// path of edge `e`, counted from the edge's designated first endpoint.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FwVertex {
    Branch(VertexId),
    Internal(EdgeId, u32),
}

impl fmt::Display for FwVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FwVertex::Branch(v) => write!(f, "{v}"),
            FwVertex::Internal(e, k) => write!(f, "{e}[{k}]"),
        }
    }
}

/// A subdivision H' of a base multigraph H, with a fixed number of internal
/// vertices per edge.
#[derive(Debug, Clone)]
pub struct SubdivisionFramework {
    base: Multigraph,
    counts: BTreeMap<EdgeId, u32>,
    verts: Vec<FwVertex>,
    index: BTreeMap<FwVertex, usize>,
    adj: Vec<BTreeSet<usize>>,
}

impl PartialEq for SubdivisionFramework {
    fn eq(&self, other: &Self) -> bool {
        self.base == other.base && self.counts == other.counts
    }
}
impl Eq for SubdivisionFramework {}

impl SubdivisionFramework {
    /// Builds the framework; `counts` gives internal-vertex counts per edge
    /// (edges missing from the map get zero).
    pub fn new(base: Multigraph, counts: BTreeMap<EdgeId, u32>) -> Result<Self> {
        for id in counts.keys() {
            base.edge(id)?;
        }
        let mut verts: Vec<FwVertex> = base
            .vertices()
            .iter()
            .map(|v| FwVertex::Branch(v.clone()))
            .collect();
        for e in base.edges() {
            let r = counts.get(&e.id).copied().unwrap_or(0);
            for k in 1..=r {
                verts.push(FwVertex::Internal(e.id.clone(), k));
            }
        }
        let index: BTreeMap<FwVertex, usize> = verts
            .iter()
            .enumerate()
            .map(|(i, v)| (v.clone(), i))
            .collect();
        let mut adj = vec![BTreeSet::new(); verts.len()];
        let mut fw = SubdivisionFramework {
            base,
            counts,
            verts,
            index,
            adj: vec![],
        };
        for e in fw.base.edges().to_vec() {
            let path = fw.path(&e.id)?;
            for w in path.windows(2) {
                let (a, b) = (fw.index[&w[0]], fw.index[&w[1]]);
                if a != b {
                    adj[a].insert(b);
                    adj[b].insert(a);
                }
            }
        }
        fw.adj = adj;
        Ok(fw)
    }

    pub fn base(&self) -> &Multigraph {
        &self.base
    }

    pub fn internal_count(&self, edge: &str) -> u32 {
        self.counts.get(edge).copied().unwrap_or(0)
    }

    pub fn counts(&self) -> &BTreeMap<EdgeId, u32> {
        &self.counts
    }

    pub fn vertices(&self) -> &[FwVertex] {
        &self.verts
    }

    pub fn vertex_count(&self) -> usize {
        self.verts.len()
    }

    pub fn contains(&self, v: &FwVertex) -> bool {
        self.index.contains_key(v)
    }

    pub fn index_of(&self, v: &FwVertex) -> Result<usize> {
        self.index
            .get(v)
            .copied()
            .ok_or_else(|| Error::InvalidInput(format!("vertex {v} not in framework")))
    }

    /// The ordered subdivision path S(uv) of an edge, from its designated
    /// first endpoint to the second, endpoints included. For a loop both
    /// endpoints are the same branch vertex.
    pub fn path(&self, edge: &str) -> Result<Vec<FwVertex>> {
        let e = self.base.edge(edge)?;
        let r = self.internal_count(edge);
        let mut p = Vec::with_capacity(r as usize + 2);
        p.push(FwVertex::Branch(e.u.clone()));
        for k in 1..=r {
            p.push(FwVertex::Internal(edge.to_string(), k));
        }
        p.push(FwVertex::Branch(e.v.clone()));
        Ok(p)
    }

    pub fn internals(&self, edge: &str) -> Vec<FwVertex> {
        (1..=self.internal_count(edge))
            .map(|k| FwVertex::Internal(edge.to_string(), k))
            .collect()
    }

    pub fn neighbors_idx(&self, i: usize) -> &BTreeSet<usize> {
        &self.adj[i]
    }

    pub fn is_connected_subset(&self, s: &BTreeSet<FwVertex>) -> Result<bool> {
        let idx: BTreeSet<usize> = s.iter().map(|v| self.index_of(v)).collect::<Result<_>>()?;
        Ok(self.is_connected_subset_idx(&idx))
    }

    pub fn is_connected_subset_idx(&self, s: &BTreeSet<usize>) -> bool {
        let Some(&start) = s.iter().next() else {
            return true;
        };
        let mut seen = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &w in &self.adj[u] {
                if s.contains(&w) && seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen.len() == s.len()
    }

    /// The framework vertices of a C2 base (two vertices joined by two
    /// parallel edges) or a single-loop base, in cyclic order starting at the
    /// distinguished vertex `x1` (the first base vertex). Fails on any other
    /// base shape.
    pub fn cycle_order(&self) -> Result<Vec<FwVertex>> {
        let vs = self.base.vertices();
        let es = self.base.edges();
        if vs.len() == 1 && es.len() == 1 && es[0].u == es[0].v {
            let mut cyc = vec![FwVertex::Branch(vs[0].clone())];
            cyc.extend(self.internals(&es[0].id));
            return Ok(cyc);
        }
        if vs.len() == 2 && es.len() == 2 && es.iter().all(|e| e.u != e.v) {
            let (x, y) = (&vs[0], &vs[1]);
            let (e1, e2) = (&es[0], &es[1]);
            let mut cyc = vec![FwVertex::Branch(x.clone())];
            let forward =
                |e: &crate::graph::MultiEdge, from: &VertexId, out: &mut Vec<FwVertex>| {
                    let ints = self.internals(&e.id);
                    if e.u == *from {
                        out.extend(ints);
                    } else {
                        out.extend(ints.into_iter().rev());
                    }
                };
            forward(e1, x, &mut cyc);
            cyc.push(FwVertex::Branch(y.clone()));
            forward(e2, y, &mut cyc);
            return Ok(cyc);
        }
        Err(Error::InvalidInput(
            "framework base is not a 2-vertex cycle or a single loop".into(),
        ))
    }

    /// All nonempty connected vertex subsets, as index sets. Intended for
    /// desk-scale exhaustive searches only.
    pub fn connected_subsets(&self, limit: usize) -> Result<Vec<BTreeSet<usize>>> {
        let n = self.verts.len();
        if n > limit {
            return Err(Error::ResourceLimit(format!(
                "connected-subset enumeration capped at {limit} vertices, got {n}"
            )));
        }
        let mut out = Vec::new();
        for mask in 1u64..(1 << n) {
            let s: BTreeSet<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            if self.is_connected_subset_idx(&s) {
                out.push(s);
            }
        }
        Ok(out)
    }
}

/// Where a vertex set meets the subdivision path of one edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeFootprint {
    /// Designated first endpoint of the edge is in the set.
    pub has_first: bool,
    /// Second endpoint is in the set (same as `has_first` for loops).
    pub has_second: bool,
    /// Internal positions (1-based, ascending) contained in the set.
    pub internals: Vec<u32>,
    /// Total internal count of the edge.
    pub len: u32,
}

impl EdgeFootprint {
    pub fn all_internals(&self) -> bool {
        self.internals.len() as u32 == self.len
    }
    pub fn no_internals(&self) -> bool {
        self.internals.is_empty()
    }
}

/// A family of connected vertex subsets of a framework: one representative
/// set per graph vertex, intersection giving the represented graph.
#[derive(Debug, Clone)]
pub struct HRepresentation {
    framework: SubdivisionFramework,
    order: Vec<VertexId>,
    sets: BTreeMap<VertexId, BTreeSet<FwVertex>>,
    graph_cache: OnceLock<SimpleGraph>,
}

impl PartialEq for HRepresentation {
    fn eq(&self, other: &Self) -> bool {
        self.framework == other.framework && self.order == other.order && self.sets == other.sets
    }
}
impl Eq for HRepresentation {}

/// Witness that a family is not non-crossing: `a_minus_b` is the
/// disconnected difference Sa \ Sb.
#[derive(Debug, Clone)]
pub struct CrossingWitness {
    pub a: VertexId,
    pub b: VertexId,
    pub a_minus_b: BTreeSet<FwVertex>,
}

impl HRepresentation {
    pub fn new(
        framework: SubdivisionFramework,
        sets: Vec<(VertexId, BTreeSet<FwVertex>)>,
    ) -> Result<Self> {
        let mut order = Vec::with_capacity(sets.len());
        let mut map = BTreeMap::new();
        for (v, s) in sets {
            if s.is_empty() {
                return Err(Error::InvalidRepresentation(format!(
                    "set of {v:?} is empty"
                )));
            }
            if !framework.is_connected_subset(&s)? {
                return Err(Error::InvalidRepresentation(format!(
                    "set of {v:?} is not connected in the framework"
                )));
            }
            if map.insert(v.clone(), s).is_some() {
                return Err(Error::InvalidInput(format!("duplicate graph vertex {v:?}")));
            }
            order.push(v);
        }
        Ok(HRepresentation {
            framework,
            order,
            sets: map,
            graph_cache: OnceLock::new(),
        })
    }

    pub fn framework(&self) -> &SubdivisionFramework {
        &self.framework
    }

    /// Graph vertices in their declared order.
    pub fn vertex_order(&self) -> &[VertexId] {
        &self.order
    }

    pub fn set(&self, v: &str) -> Result<&BTreeSet<FwVertex>> {
        self.sets
            .get(v)
            .ok_or_else(|| Error::InvalidInput(format!("unknown graph vertex {v:?}")))
    }

    pub fn sets(&self) -> impl Iterator<Item = (&VertexId, &BTreeSet<FwVertex>)> {
        self.order.iter().map(move |v| (v, &self.sets[v]))
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// The intersection graph: an edge between two distinct vertices exactly
    /// when their representatives share a framework vertex.
    pub fn intersection_graph(&self) -> &SimpleGraph {
        self.graph_cache.get_or_init(|| {
            let mut g = SimpleGraph::new(self.order.clone()).expect("ids unique");
            for (i, u) in self.order.iter().enumerate() {
                for v in &self.order[i + 1..] {
                    if !self.sets[u].is_disjoint(&self.sets[v]) {
                        g.add_edge(u, v).expect("vertices present");
                    }
                }
            }
            g
        })
    }

    /// None when no representative properly contains another, otherwise the
    /// offending (container, contained) pair, first in vertex order.
    pub fn proper_violation(&self) -> Option<(VertexId, VertexId)> {
        for u in &self.order {
            for v in &self.order {
                if u == v {
                    continue;
                }
                let (su, sv) = (&self.sets[u], &self.sets[v]);
                if sv.is_subset(su) && sv.len() < su.len() {
                    return Some((u.clone(), v.clone()));
                }
            }
        }
        None
    }

    pub fn is_proper(&self) -> bool {
        self.proper_violation().is_none()
    }

    /// None when every pairwise difference is connected, otherwise the first
    /// witness in vertex order.
    pub fn noncrossing_violation(&self) -> Option<CrossingWitness> {
        for (i, a) in self.order.iter().enumerate() {
            for b in &self.order[i + 1..] {
                for (x, y) in [(a, b), (b, a)] {
                    let diff: BTreeSet<FwVertex> =
                        self.sets[x].difference(&self.sets[y]).cloned().collect();
                    if !self
                        .framework
                        .is_connected_subset(&diff)
                        .expect("subset of framework")
                    {
                        return Some(CrossingWitness {
                            a: x.clone(),
                            b: y.clone(),
                            a_minus_b: diff,
                        });
                    }
                }
            }
        }
        None
    }

    pub fn is_non_crossing(&self) -> bool {
        self.noncrossing_violation().is_none()
    }

    pub fn footprint(&self, v: &str, edge: &str) -> Result<EdgeFootprint> {
        let s = self.set(v)?;
        let e = self.framework.base().edge(edge)?;
        let len = self.framework.internal_count(edge);
        let internals = (1..=len)
            .filter(|&k| s.contains(&FwVertex::Internal(edge.to_string(), k)))
            .collect();
        Ok(EdgeFootprint {
            has_first: s.contains(&FwVertex::Branch(e.u.clone())),
            has_second: s.contains(&FwVertex::Branch(e.v.clone())),
            internals,
            len,
        })
    }

    /// Greedy single-vertex removal to a local fixpoint: no framework vertex
    /// can be dropped from any set without changing the intersection graph or
    /// breaking connectivity. Scans vertices and set elements in a fixed
    /// order, so the result is deterministic.
    pub fn normalize_minimal(&self) -> HRepresentation {
        let mut sets = self.sets.clone();
        loop {
            let mut changed = false;
            for v in &self.order {
                let candidates: Vec<FwVertex> = sets[v].iter().cloned().collect();
                for z in candidates {
                    if sets[v].len() == 1 {
                        break;
                    }
                    let mut shrunk = sets[v].clone();
                    shrunk.remove(&z);
                    if !self
                        .framework
                        .is_connected_subset(&shrunk)
                        .expect("subset of framework")
                    {
                        continue;
                    }
                    // removal may only break adjacencies through z
                    let ok = self.order.iter().all(|u| {
                        u == v
                            || !sets[u].contains(&z)
                            || sets[u].is_disjoint(&sets[v])
                            || !sets[u].is_disjoint(&shrunk)
                    });
                    if ok {
                        sets.insert(v.clone(), shrunk);
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        HRepresentation {
            framework: self.framework.clone(),
            order: self.order.clone(),
            sets,
            graph_cache: OnceLock::new(),
        }
    }

    pub fn total_size(&self) -> usize {
        self.sets.values().map(|s| s.len()).sum()
    }
}

/// Builds the intersection representation of all paths on k' consecutive
/// vertices of a cycle C_{2k'}, presented as a subdivision of C_k with
/// k' = max(t, k). The intersection graph is the complement of an induced
/// matching on k' edges; the family is proper and non-crossing.
pub fn generate_co_matching_rep(t: usize, k: usize) -> Result<HRepresentation> {
    if t < 1 || k < 2 {
        return Err(Error::InvalidInput(
            "need t >= 1 and cycle length k >= 2".into(),
        ));
    }
    let kp = t.max(k);
    let total = 2 * kp; // cycle length of the framework
    let ids: Vec<VertexId> = (0..k).map(|i| format!("c{i}")).collect();
    let edges: Vec<(String, String)> = (0..k)
        .map(|i| (ids[i].clone(), ids[(i + 1) % k].clone()))
        .collect();
    let base = Multigraph::new(ids, edges)?;
    // distribute the 2k' - k internal vertices as evenly as possible
    let extra = total - k;
    let mut counts = BTreeMap::new();
    for (i, e) in base.edges().iter().enumerate() {
        let c = extra / k + usize::from(i < extra % k);
        counts.insert(e.id.clone(), c as u32);
    }
    let fw = SubdivisionFramework::new(base, counts)?;

    // framework vertices in cyclic order: branch i, internals of edge i, ...
    let mut cyc: Vec<FwVertex> = Vec::with_capacity(total);
    for (i, e) in fw.base().edges().to_vec().iter().enumerate() {
        cyc.push(FwVertex::Branch(format!("c{i}")));
        let ints = fw.internals(&e.id);
        if e.u == format!("c{i}") {
            cyc.extend(ints);
        } else {
            cyc.extend(ints.into_iter().rev());
        }
    }
    debug_assert_eq!(cyc.len(), total);

    let sets = (0..total)
        .map(|s| {
            let set: BTreeSet<FwVertex> = (0..kp).map(|d| cyc[(s + d) % total].clone()).collect();
            (format!("p{s}"), set)
        })
        .collect();
    HRepresentation::new(fw, sets)
}

/// Seeded generator of valid non-crossing representations over an arbitrary
/// base multigraph. Deterministic per seed.
pub fn random_noncrossing_rep(h: &Multigraph, n: usize, seed: u64) -> Result<HRepresentation> {
    if n < 1 {
        return Err(Error::InvalidInput("need at least one set".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut counts = BTreeMap::new();
    for e in h.edges() {
        let lo = if e.u == e.v { 1 } else { 0 };
        counts.insert(e.id.clone(), rng.random_range(lo..=5u32));
    }
    let fw = SubdivisionFramework::new(h.clone(), counts)?;
    let fw_n = fw.vertex_count();

    let mut accepted: Vec<BTreeSet<usize>> = Vec::new();
    for _ in 0..n {
        let mut placed = false;
        for _attempt in 0..300 {
            let target = rng.random_range(1..=fw_n.max(2) / 2 + 1);
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
            let ok = accepted.iter().all(|other| {
                let d1: BTreeSet<usize> = set.difference(other).copied().collect();
                let d2: BTreeSet<usize> = other.difference(&set).copied().collect();
                fw.is_connected_subset_idx(&d1) && fw.is_connected_subset_idx(&d2)
            });
            if ok {
                accepted.push(set);
                placed = true;
                break;
            }
        }
        if !placed {
            // duplicating an existing set never introduces a crossing
            match accepted.first() {
                Some(first) => accepted.push(first.clone()),
                None => return Err(Error::Generation("could not place the first set".into())),
            }
        }
    }
    let verts = fw.vertices().to_vec();
    let sets = accepted
        .into_iter()
        .enumerate()
        .map(|(i, s)| {
            (
                format!("v{i}"),
                s.into_iter().map(|j| verts[j].clone()).collect(),
            )
        })
        .collect();
    HRepresentation::new(fw, sets)
}

/// Seeded generator of proper circular-arc representations on a C2
/// subdivision: all arcs of equal length (hence proper), with at least one
/// arc through the distinguished cycle vertex and one avoiding it.
pub fn random_proper_arc_rep(n: usize, seed: u64) -> Result<HRepresentation> {
    if n < 2 {
        return Err(Error::InvalidInput("need at least two arcs".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = rng.random_range(8..=16usize); // cycle length
    let len = rng.random_range(2..=p - 3); // arc length, strictly partial
    let base = Multigraph::new(vec!["x", "y"], vec![("x", "y"), ("x", "y")])?;
    let half = (p - 2) / 2;
    let counts = BTreeMap::from([
        ("e0".to_string(), half as u32),
        ("e1".to_string(), (p - 2 - half) as u32),
    ]);
    let fw = SubdivisionFramework::new(base, counts)?;
    let cyc = fw.cycle_order()?;
    debug_assert_eq!(cyc.len(), p);

    let mut starts: Vec<usize> = vec![
        p - 1, // wraps through position 0 (the distinguished vertex)
        1,     // 1..=len stays clear of position 0 since len <= p - 3
    ];
    for _ in 2..n {
        starts.push(rng.random_range(0..p));
    }
    let sets = starts
        .into_iter()
        .enumerate()
        .map(|(i, s)| {
            let set: BTreeSet<FwVertex> = (0..len).map(|d| cyc[(s + d) % p].clone()).collect();
            (format!("a{i}"), set)
        })
        .collect();
    HRepresentation::new(fw, sets)
}

/// Exhaustively searches for a non-crossing representation of `target` over
/// all subdivisions of `base` with at most `max_internal` internal vertices
/// per edge. Returns the first representation found, or None.
pub fn search_noncrossing_rep(
    target: &SimpleGraph,
    base: &Multigraph,
    max_internal: u32,
) -> Result<Option<HRepresentation>> {
    let m = base.size();
    let n = target.vertex_count();
    // order target vertices by descending degree: constrained vertices first
    let mut vorder: Vec<usize> = (0..n).collect();
    vorder.sort_by_key(|&i| std::cmp::Reverse(target.degree_idx(i)));

    let mut counts = vec![0u32; m];
    loop {
        let count_map: BTreeMap<EdgeId, u32> = base
            .edges()
            .iter()
            .zip(&counts)
            .map(|(e, &c)| (e.id.clone(), c))
            .collect();
        let fw = SubdivisionFramework::new(base.clone(), count_map)?;
        if fw.vertex_count() <= 22 {
            let subsets = fw.connected_subsets(22)?;
            // precompute pairwise compatibility between candidate subsets
            let ns = subsets.len();
            let mut intersects = vec![false; ns * ns];
            let mut noncrossing = vec![false; ns * ns];
            for a in 0..ns {
                for b in 0..ns {
                    intersects[a * ns + b] = !subsets[a].is_disjoint(&subsets[b]);
                    let d: BTreeSet<usize> = subsets[a].difference(&subsets[b]).copied().collect();
                    noncrossing[a * ns + b] = fw.is_connected_subset_idx(&d);
                }
            }
            let mut assignment = vec![usize::MAX; n];
            if assign(
                target,
                &vorder,
                0,
                &mut assignment,
                ns,
                &intersects,
                &noncrossing,
            ) {
                let verts = fw.vertices().to_vec();
                let sets = (0..n)
                    .map(|i| {
                        let s: BTreeSet<FwVertex> = subsets[assignment[i]]
                            .iter()
                            .map(|&j| verts[j].clone())
                            .collect();
                        (target.vertex(i).clone(), s)
                    })
                    .collect();
                return Ok(Some(HRepresentation::new(fw, sets)?));
            }
        }
        // next subdivision profile
        let mut i = 0;
        loop {
            if i == m {
                return Ok(None);
            }
            counts[i] += 1;
            if counts[i] <= max_internal {
                break;
            }
            counts[i] = 0;
            i += 1;
        }
    }

    fn assign(
        target: &SimpleGraph,
        vorder: &[usize],
        pos: usize,
        assignment: &mut [usize],
        ns: usize,
        intersects: &[bool],
        noncrossing: &[bool],
    ) -> bool {
        if pos == vorder.len() {
            return true;
        }
        let v = vorder[pos];
        'cand: for c in 0..ns {
            for &u in &vorder[..pos] {
                let cu = assignment[u];
                if intersects[c * ns + cu] != target.has_edge_idx(v, u) {
                    continue 'cand;
                }
                if !noncrossing[c * ns + cu] || !noncrossing[cu * ns + c] {
                    continue 'cand;
                }
            }
            assignment[v] = c;
            if assign(
                target,
                vorder,
                pos + 1,
                assignment,
                ns,
                intersects,
                noncrossing,
            ) {
                return true;
            }
            assignment[v] = usize::MAX;
        }
        false
    }
}
