//! Vertex orders derived from representations over forests, start-edge
//! bookkeeping, ordered adjacency matrices and a grid-rank oracle.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::framework::{FwVertex, HRepresentation};
use crate::graph::{EdgeId, Multigraph, SimpleGraph, VertexId};

/// A simple forest with, per connected component, a chosen root and an edge
/// order compatible with root-to-leaf traversal: an edge closer to the root
/// precedes every edge below it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeOrderedForest {
    base: Multigraph,
    components: Vec<ComponentOrder>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentOrder {
    pub root: VertexId,
    /// Edges of this component, smallest first.
    pub edges: Vec<EdgeId>,
}

impl EdgeOrderedForest {
    /// Default construction: components in order of first-seen vertex, root
    /// per component is its smallest-id vertex, edges in DFS discovery order
    /// from the root (neighbours explored by vertex id, then edge id).
    pub fn from_forest(base: Multigraph) -> Result<Self> {
        if !base.is_simple_forest() {
            return Err(Error::InvalidInput(
                "base multigraph is not a simple forest".into(),
            ));
        }
        let comps = component_split(&base);
        let mut components = Vec::new();
        for comp in comps {
            let root = comp.iter().min().expect("component nonempty").clone();
            let mut edges = Vec::new();
            let mut seen = BTreeSet::from([root.clone()]);
            dfs_edges(&base, &root, &mut seen, &mut edges);
            components.push(ComponentOrder { root, edges });
        }
        Ok(EdgeOrderedForest { base, components })
    }

    /// Explicit roots and edge orders, validated against the root-to-leaf
    /// constraint.
    pub fn with_explicit(base: Multigraph, spec: Vec<(VertexId, Vec<EdgeId>)>) -> Result<Self> {
        if !base.is_simple_forest() {
            return Err(Error::InvalidInput(
                "base multigraph is not a simple forest".into(),
            ));
        }
        let comps = component_split(&base);
        if comps.len() != spec.len() {
            return Err(Error::InvalidInput(format!(
                "expected {} component entries, got {}",
                comps.len(),
                spec.len()
            )));
        }
        let mut components = Vec::new();
        for ((root, edges), comp) in spec.into_iter().zip(&comps) {
            if !comp.contains(&root) {
                return Err(Error::InvalidInput(format!(
                    "root {root:?} is not in its component"
                )));
            }
            let comp_edges: BTreeSet<EdgeId> = base
                .edges()
                .iter()
                .filter(|e| comp.contains(&e.u))
                .map(|e| e.id.clone())
                .collect();
            let given: BTreeSet<EdgeId> = edges.iter().cloned().collect();
            if given.len() != edges.len() || given != comp_edges {
                return Err(Error::InvalidInput(
                    "edge order is not a permutation of the component's edges".into(),
                ));
            }
            // the parent edge of every vertex must precede its child edges
            let rank: BTreeMap<&EdgeId, usize> =
                edges.iter().enumerate().map(|(i, e)| (e, i)).collect();
            let parents = parent_edges(&base, &root);
            for e in base.edges() {
                if !given.contains(&e.id) {
                    continue;
                }
                for end in [&e.u, &e.v] {
                    match parents.get(end) {
                        Some(pe) if *pe != e.id && rank[pe] > rank[&e.id] => {
                            return Err(Error::InvalidInput(format!(
                                "edge order violates root-to-leaf traversal at edge {:?}",
                                e.id
                            )));
                        }
                        _ => {}
                    }
                }
            }
            components.push(ComponentOrder { root, edges });
        }
        Ok(EdgeOrderedForest { base, components })
    }

    pub fn base(&self) -> &Multigraph {
        &self.base
    }

    pub fn components(&self) -> &[ComponentOrder] {
        &self.components
    }

    /// All edges in global order: components concatenated.
    pub fn global_edge_order(&self) -> Vec<EdgeId> {
        self.components
            .iter()
            .flat_map(|c| c.edges.iter().cloned())
            .collect()
    }

    fn depths(&self) -> BTreeMap<VertexId, usize> {
        let mut out = BTreeMap::new();
        for comp in &self.components {
            let mut queue = std::collections::VecDeque::from([(comp.root.clone(), 0usize)]);
            out.insert(comp.root.clone(), 0);
            while let Some((v, d)) = queue.pop_front() {
                for e in self.base.edges() {
                    for (x, y) in [(&e.u, &e.v), (&e.v, &e.u)] {
                        if *x == v && !out.contains_key(y) {
                            out.insert(y.clone(), d + 1);
                            queue.push_back((y.clone(), d + 1));
                        }
                    }
                }
            }
        }
        out
    }
}

fn component_split(base: &Multigraph) -> Vec<BTreeSet<VertexId>> {
    let mut seen: BTreeSet<VertexId> = BTreeSet::new();
    let mut comps = Vec::new();
    for v in base.vertices() {
        if seen.contains(v) {
            continue;
        }
        let mut comp = BTreeSet::from([v.clone()]);
        let mut stack = vec![v.clone()];
        while let Some(u) = stack.pop() {
            for e in base.edges() {
                for (x, y) in [(&e.u, &e.v), (&e.v, &e.u)] {
                    if *x == u && comp.insert(y.clone()) {
                        stack.push(y.clone());
                    }
                }
            }
        }
        seen.extend(comp.iter().cloned());
        comps.push(comp);
    }
    comps
}

fn dfs_edges(
    base: &Multigraph,
    at: &VertexId,
    seen: &mut BTreeSet<VertexId>,
    out: &mut Vec<EdgeId>,
) {
    let mut nbrs: Vec<(VertexId, EdgeId)> = base
        .edges()
        .iter()
        .filter_map(|e| {
            if e.u == *at {
                Some((e.v.clone(), e.id.clone()))
            } else if e.v == *at {
                Some((e.u.clone(), e.id.clone()))
            } else {
                None
            }
        })
        .collect();
    nbrs.sort();
    for (next, eid) in nbrs {
        if seen.insert(next.clone()) {
            out.push(eid);
            dfs_edges(base, &next, seen, out);
        }
    }
}

/// Parent edge of each non-root vertex in the component of `root`.
fn parent_edges(base: &Multigraph, root: &VertexId) -> BTreeMap<VertexId, EdgeId> {
    let mut out = BTreeMap::new();
    let mut seen = BTreeSet::from([root.clone()]);
    let mut stack = vec![root.clone()];
    while let Some(u) = stack.pop() {
        for e in base.edges() {
            for (x, y) in [(&e.u, &e.v), (&e.v, &e.u)] {
                if *x == u && seen.insert(y.clone()) {
                    out.insert(y.clone(), e.id.clone());
                    stack.push(y.clone());
                }
            }
        }
    }
    out
}

/// The framework order: per component, per edge in order, the subdivision
/// path traversed root-side first, omitting the root-closest vertex for
/// every edge after the first so each framework vertex is labelled once.
#[derive(Debug, Clone)]
pub struct FrameworkOrder {
    pub order: Vec<FwVertex>,
    pub pos: BTreeMap<FwVertex, usize>,
    /// Per global edge (eof order), the label range it contributed.
    pub edge_groups: Vec<(EdgeId, std::ops::Range<usize>)>,
}

pub fn framework_order(rep: &HRepresentation, eof: &EdgeOrderedForest) -> Result<FrameworkOrder> {
    if rep.framework().base() != eof.base() {
        return Err(Error::InvalidInput(
            "edge-ordered forest does not match the representation's base".into(),
        ));
    }
    let depths = eof.depths();
    let mut order: Vec<FwVertex> = Vec::new();
    let mut edge_groups = Vec::new();
    for comp in eof.components() {
        if comp.edges.is_empty() {
            order.push(FwVertex::Branch(comp.root.clone()));
            continue;
        }
        for (i, eid) in comp.edges.iter().enumerate() {
            let e = rep.framework().base().edge(eid)?;
            let mut path = rep.framework().path(eid)?;
            // orient root-side first
            if depths[&e.v] < depths[&e.u] {
                path.reverse();
            }
            // every edge after the first omits its root-closest vertex,
            // which an earlier edge already labelled
            let skip = usize::from(i > 0);
            let start = order.len();
            order.extend(path.into_iter().skip(skip));
            edge_groups.push((eid.clone(), start..order.len()));
        }
    }
    let pos = order
        .iter()
        .enumerate()
        .map(|(i, v)| (v.clone(), i))
        .collect();
    Ok(FrameworkOrder {
        order,
        pos,
        edge_groups,
    })
}

/// The vertex order: u precedes v when the smallest framework-order vertex
/// of the symmetric difference of their sets belongs to u's set; equal sets
/// are ordered by vertex id.
pub fn vertex_order(rep: &HRepresentation, eof: &EdgeOrderedForest) -> Result<Vec<VertexId>> {
    let fo = framework_order(rep, eof)?;
    let mut keyed: Vec<(Vec<usize>, VertexId)> = rep
        .sets()
        .map(|(v, s)| {
            let mut positions: Vec<usize> = s.iter().map(|x| fo.pos[x]).collect();
            positions.sort_unstable();
            (positions, v.clone())
        })
        .collect();
    keyed.sort_by(|(pa, va), (pb, vb)| {
        let mut i = 0;
        let mut j = 0;
        loop {
            match (pa.get(i), pb.get(j)) {
                (Some(&x), Some(&y)) => {
                    if x == y {
                        i += 1;
                        j += 1;
                    } else if x < y {
                        // x is the minimum of the symmetric difference, in a
                        return std::cmp::Ordering::Less;
                    } else {
                        return std::cmp::Ordering::Greater;
                    }
                }
                // one list exhausted: the leftovers of the other are the
                // whole symmetric difference, so their owner comes first
                (Some(_), None) => return std::cmp::Ordering::Less,
                (None, Some(_)) => return std::cmp::Ordering::Greater,
                (None, None) => return va.cmp(vb),
            }
        }
    });
    Ok(keyed.into_iter().map(|(_, v)| v).collect())
}

/// The smallest edge (in the forest's order) whose subdivision contains the
/// smallest framework-order vertex of the set.
pub fn start_edge(rep: &HRepresentation, eof: &EdgeOrderedForest, u: &str) -> Result<EdgeId> {
    let fo = framework_order(rep, eof)?;
    let s = rep.set(u)?;
    let min = s
        .iter()
        .min_by_key(|x| fo.pos[x])
        .expect("sets are nonempty");
    match min {
        FwVertex::Internal(e, _) => Ok(e.clone()),
        FwVertex::Branch(b) => {
            for eid in eof.global_edge_order() {
                let e = rep.framework().base().edge(&eid)?;
                if e.u == *b || e.v == *b {
                    return Ok(eid);
                }
            }
            Err(Error::InvalidInput(format!(
                "vertex {u:?} is represented on an isolated branch vertex; no start edge"
            )))
        }
    }
}

/// Checks the per-edge min/max characterization of the vertex order: for
/// same-start-edge pairs with distinct sets, the stated conditions must
/// imply the order. Holds on normalized representations.
pub fn check_prop_order(rep: &HRepresentation, eof: &EdgeOrderedForest) -> Result<bool> {
    let fo = framework_order(rep, eof)?;
    let order = vertex_order(rep, eof)?;
    let pos_of: BTreeMap<&VertexId, usize> =
        order.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let edges = eof.global_edge_order();

    // min/max label position per vertex per edge group
    let group_of_edge: BTreeMap<&EdgeId, usize> =
        edges.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let mut minmax: BTreeMap<&VertexId, Vec<Option<(usize, usize)>>> = BTreeMap::new();
    for (v, s) in rep.sets() {
        let mut mm: Vec<Option<(usize, usize)>> = vec![None; edges.len()];
        for x in s {
            let p = fo.pos[x];
            for (eid, range) in &fo.edge_groups {
                if range.contains(&p) {
                    let gi = group_of_edge[eid];
                    mm[gi] = Some(match mm[gi] {
                        None => (p, p),
                        Some((lo, hi)) => (lo.min(p), hi.max(p)),
                    });
                }
            }
        }
        minmax.insert(v, mm);
    }

    let ids: Vec<&VertexId> = order.iter().collect();
    for a in 0..ids.len() {
        for b in 0..ids.len() {
            if a == b {
                continue;
            }
            let (u, v) = (ids[a], ids[b]);
            if rep.set(u)? == rep.set(v)? {
                continue; // twins: order is an arbitrary tie-break
            }
            let (eu, ev) = (start_edge(rep, eof, u)?, start_edge(rep, eof, v)?);
            if eu != ev {
                continue;
            }
            let gi = group_of_edge[&eu];
            let (mmu, mmv) = (&minmax[u], &minmax[v]);
            let (min_u, min_v) = (mmu[gi].map(|p| p.0), mmv[gi].map(|p| p.0));
            let mut implied = false;
            if min_u.is_some() && min_v.is_some() && min_u < min_v {
                implied = true;
            } else if min_u == min_v {
                // the first later edge where the maxima differ is the only
                // candidate j; the comparison needs both maxima defined
                for j in gi + 1..edges.len() {
                    let (xu, xv) = (mmu[j].map(|p| p.1), mmv[j].map(|p| p.1));
                    if xu == xv {
                        continue;
                    }
                    if let (Some(pu), Some(pv)) = (xu, xv) {
                        implied = pv < pu;
                    }
                    break;
                }
            }
            if implied && pos_of[u] > pos_of[v] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A 0/1 matrix with rows stored as bitmasks; at most 64 columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        assert!(cols <= 64);
        BitMatrix {
            rows,
            cols,
            data: vec![0; rows],
        }
    }

    pub fn from_rows(rows: Vec<Vec<bool>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = BitMatrix::new(r, c);
        for (i, row) in rows.iter().enumerate() {
            for (j, &b) in row.iter().enumerate() {
                if b {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    pub fn set(&mut self, r: usize, c: usize, v: bool) {
        if v {
            self.data[r] |= 1 << c;
        } else {
            self.data[r] &= !(1 << c);
        }
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.data[r] >> c & 1 == 1
    }

    /// Row r restricted to columns [c0, c1).
    fn row_slice(&self, r: usize, c0: usize, c1: usize) -> u64 {
        let width = c1 - c0;
        let mask = if width == 64 {
            u64::MAX
        } else {
            (1u64 << width) - 1
        };
        (self.data[r] >> c0) & mask
    }

    pub fn submatrix(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> BitMatrix {
        let mut m = BitMatrix::new(r1 - r0, c1 - c0);
        for r in r0..r1 {
            m.data[r - r0] = self.row_slice(r, c0, c1);
        }
        m
    }
}

/// Adjacency matrix of a graph with rows and columns in a given vertex
/// order.
#[derive(Debug, Clone)]
pub struct OrderedAdjacency {
    pub order: Vec<VertexId>,
    pub bits: BitMatrix,
}

impl OrderedAdjacency {
    pub fn from_graph(g: &SimpleGraph, order: &[VertexId]) -> Result<Self> {
        let n = order.len();
        if n != g.vertex_count() {
            return Err(Error::InvalidInput("order does not cover the graph".into()));
        }
        let mut bits = BitMatrix::new(n, n);
        for i in 0..n {
            for j in 0..n {
                if i != j && g.has_edge(&order[i], &order[j]) {
                    bits.set(i, j, true);
                }
            }
        }
        Ok(OrderedAdjacency {
            order: order.to_vec(),
            bits,
        })
    }
}

/// Maximum k such that the matrix admits a division into k consecutive row
/// parts and k consecutive column parts where every zone has at least k
/// distinct rows or at least k distinct columns.
///
/// Row cuts are enumerated exhaustively; column cuts per row partition go
/// through a feasibility DP, which decides the same predicate without
/// materializing every column division.
pub fn grid_rank(m: &BitMatrix, limit: usize) -> Result<usize> {
    if m.rows.max(m.cols) > limit {
        return Err(Error::ResourceLimit(format!(
            "grid rank capped at {limit}x{limit}, got {}x{}",
            m.rows, m.cols
        )));
    }
    if m.rows == 0 || m.cols == 0 {
        return Ok(0);
    }
    let mut best = 1; // the 1-division always works on a nonempty matrix
    for k in 2..=m.rows.min(m.cols) {
        if has_rank_k_division(m, k) {
            best = k;
        } else {
            break;
        }
    }
    Ok(best)
}

fn distinct_rows(m: &BitMatrix, r0: usize, r1: usize, c0: usize, c1: usize) -> usize {
    let mut vals: Vec<u64> = (r0..r1).map(|r| m.row_slice(r, c0, c1)).collect();
    vals.sort_unstable();
    vals.dedup();
    vals.len()
}

fn distinct_cols(m: &BitMatrix, r0: usize, r1: usize, c0: usize, c1: usize) -> usize {
    let mut vals: Vec<u64> = (c0..c1)
        .map(|c| (r0..r1).fold(0u64, |acc, r| acc << 1 | u64::from(m.get(r, c))))
        .collect();
    vals.sort_unstable();
    vals.dedup();
    vals.len()
}

fn has_rank_k_division(m: &BitMatrix, k: usize) -> bool {
    if k > m.rows || k > m.cols {
        return false;
    }
    // enumerate row partitions as k-1 cut points
    let mut cuts: Vec<usize> = (1..k).collect();
    loop {
        let mut bounds = vec![0usize];
        bounds.extend(&cuts);
        bounds.push(m.rows);
        // zone goodness for every row part x column interval
        let ok = {
            let parts: Vec<(usize, usize)> = bounds.windows(2).map(|w| (w[0], w[1])).collect();
            // good[i][c0][c1] computed lazily inside the DP
            let good = |i: usize, c0: usize, c1: usize| -> bool {
                let (r0, r1) = parts[i];
                distinct_rows(m, r0, r1, c0, c1) >= k || distinct_cols(m, r0, r1, c0, c1) >= k
            };
            // dp over column cuts: dp[j][c] = first j column parts end at c
            let mut dp = vec![vec![false; m.cols + 1]; k + 1];
            dp[0][0] = true;
            for j in 0..k {
                for c in 0..m.cols {
                    if !dp[j][c] {
                        continue;
                    }
                    'next_end: for c2 in c + 1..=m.cols {
                        // remaining parts need at least one column each
                        if m.cols - c2 < k - j - 1 {
                            break;
                        }
                        for i in 0..k {
                            if !good(i, c, c2) {
                                continue 'next_end;
                            }
                        }
                        dp[j + 1][c2] = true;
                    }
                }
            }
            dp[k][m.cols]
        };
        if ok {
            return true;
        }
        // next combination of row cuts
        let mut i = k - 1;
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            if cuts[i] < m.rows - (k - 1 - i) {
                cuts[i] += 1;
                for j in i + 1..k - 1 {
                    cuts[j] = cuts[j - 1] + 1;
                }
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    #[test]
    fn figure6_framework_labels() {
        let (rep, eof) = fixtures::fig6();
        let fo = framework_order(&rep, &eof).unwrap();
        let want: Vec<FwVertex> = vec![
            FwVertex::Branch("a".into()),
            FwVertex::Internal("e1".into(), 1),
            FwVertex::Branch("b".into()),
            FwVertex::Internal("e2".into(), 1),
            FwVertex::Internal("e2".into(), 2),
            FwVertex::Branch("c".into()),
            FwVertex::Internal("e3".into(), 1),
            FwVertex::Internal("e3".into(), 2),
            FwVertex::Internal("e3".into(), 3),
            FwVertex::Branch("d".into()),
            FwVertex::Internal("e4".into(), 1),
            FwVertex::Branch("e".into()),
            FwVertex::Internal("e5".into(), 1),
            FwVertex::Branch("f".into()),
            FwVertex::Internal("e6".into(), 1),
            FwVertex::Branch("g".into()),
        ];
        assert_eq!(fo.order, want);
    }

    #[test]
    fn figure6_vertex_order() {
        let (rep, eof) = fixtures::fig6();
        let order = vertex_order(&rep, &eof).unwrap();
        assert_eq!(order, vec!["u".to_string(), "v".to_string()]);
    }

    #[test]
    fn figure6_start_edges() {
        let (rep, eof) = fixtures::fig6();
        assert_eq!(start_edge(&rep, &eof, "u").unwrap(), "e1");
        assert_eq!(start_edge(&rep, &eof, "v").unwrap(), "e1");
    }

    #[test]
    fn single_edge_defaults() {
        let base = Multigraph::new(vec!["x", "y"], vec![("x", "y")]).unwrap();
        let eof = EdgeOrderedForest::from_forest(base.clone()).unwrap();
        assert_eq!(eof.components().len(), 1);
        assert_eq!(eof.components()[0].root, "x");
        assert_eq!(eof.global_edge_order(), vec!["e0".to_string()]);
    }

    #[test]
    fn two_components_concatenate() {
        let base = Multigraph::new(vec!["a", "b", "p", "q"], vec![("a", "b"), ("p", "q")]).unwrap();
        let eof = EdgeOrderedForest::from_forest(base.clone()).unwrap();
        let fw = crate::framework::SubdivisionFramework::new(
            base,
            BTreeMap::from([("e0".to_string(), 1), ("e1".to_string(), 1)]),
        )
        .unwrap();
        let rep = HRepresentation::new(
            fw,
            vec![
                ("s1".into(), BTreeSet::from([FwVertex::Branch("a".into())])),
                ("s2".into(), BTreeSet::from([FwVertex::Branch("p".into())])),
            ],
        )
        .unwrap();
        let fo = framework_order(&rep, &eof).unwrap();
        assert_eq!(fo.order.len(), 6);
        // first component's vertices come first
        assert_eq!(fo.order[0], FwVertex::Branch("a".into()));
        assert_eq!(fo.order[3], FwVertex::Branch("p".into()));
        let order = vertex_order(&rep, &eof).unwrap();
        assert_eq!(order, vec!["s1".to_string(), "s2".to_string()]);
    }

    #[test]
    fn equal_sets_tie_by_id() {
        let base = Multigraph::new(vec!["x", "y"], vec![("x", "y")]).unwrap();
        let eof = EdgeOrderedForest::from_forest(base.clone()).unwrap();
        let fw = crate::framework::SubdivisionFramework::new(
            base,
            BTreeMap::from([("e0".to_string(), 2)]),
        )
        .unwrap();
        let s = BTreeSet::from([FwVertex::Internal("e0".into(), 1)]);
        let rep = HRepresentation::new(fw, vec![("b".into(), s.clone()), ("a".into(), s)]).unwrap();
        let order = vertex_order(&rep, &eof).unwrap();
        assert_eq!(order, vec!["a".to_string(), "b".to_string()]);
    }

    #[test]
    fn prop_order_on_figure6() {
        let (rep, eof) = fixtures::fig6();
        assert!(check_prop_order(&rep, &eof).unwrap());
    }

    #[test]
    fn grid_rank_all_zero_and_identity() {
        for n in 1..=6usize {
            let zero = BitMatrix::new(n, n);
            assert_eq!(grid_rank(&zero, 20).unwrap(), 1, "zero {n}");
            let mut id = BitMatrix::new(n, n);
            for i in 0..n {
                id.set(i, i, true);
            }
            assert_eq!(grid_rank(&id, 20).unwrap(), 1, "identity {n}");
        }
    }

    #[test]
    fn grid_rank_monotone_under_submatrices() {
        let mut rng = StdRng::seed_from_u64(77);
        for _ in 0..30 {
            let mut m = BitMatrix::new(8, 8);
            for r in 0..8 {
                for c in 0..8 {
                    if rng.random_bool(0.5) {
                        m.set(r, c, true);
                    }
                }
            }
            let g = grid_rank(&m, 20).unwrap();
            let r0 = rng.random_range(0..4);
            let r1 = rng.random_range(r0 + 1..=8);
            let c0 = rng.random_range(0..4);
            let c1 = rng.random_range(c0 + 1..=8);
            let sub = m.submatrix(r0, r1, c0, c1);
            let gs = grid_rank(&sub, 20).unwrap();
            assert!(gs <= g, "submatrix rank {gs} > full rank {g}");
        }
    }

    #[test]
    fn explicit_edge_order_must_respect_root_to_leaf() {
        let claw = Multigraph::new(
            vec!["c", "l1", "l2", "l3"],
            vec![("c", "l1"), ("c", "l2"), ("c", "l3")],
        )
        .unwrap();
        // rooted at the leaf l1, e0 reaches the centre first and must come
        // before the other two edges
        let ok = EdgeOrderedForest::with_explicit(
            claw.clone(),
            vec![("l1".into(), vec!["e0".into(), "e1".into(), "e2".into()])],
        );
        assert!(ok.is_ok());
        let bad = EdgeOrderedForest::with_explicit(
            claw,
            vec![("l1".into(), vec!["e1".into(), "e0".into(), "e2".into()])],
        );
        assert!(bad.is_err());
    }

    #[test]
    fn grid_rank_on_rectangular_matrices() {
        let mut m = BitMatrix::new(3, 5);
        for c in 0..5 {
            m.set(1, c, true);
        }
        assert_eq!(grid_rank(&m, 20).unwrap(), 1);
        let empty = BitMatrix::new(0, 4);
        assert_eq!(grid_rank(&empty, 20).unwrap(), 0);
    }

    #[test]
    fn grid_rank_respects_limit() {
        let m = BitMatrix::new(25, 25);
        assert!(grid_rank(&m, 20).is_err());
    }
}
