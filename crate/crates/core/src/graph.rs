//! Simple graphs and multigraphs with opaque, order-preserving vertex ids.
//!
//! Vertex ids are plain strings carried through every transformation; vertex
//! *order* is always an explicit list, never the storage order of a map.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};

pub type VertexId = String;
pub type EdgeId = String;

/// An undirected simple graph: no loops, no parallel edges.
///
/// Equality is by vertex-id set and edge set, not isomorphism.
#[derive(Debug, Clone)]
pub struct SimpleGraph {
    vertices: Vec<VertexId>,
    index: BTreeMap<VertexId, usize>,
    adj: Vec<BTreeSet<usize>>,
}

impl PartialEq for SimpleGraph {
    fn eq(&self, other: &Self) -> bool {
        if self.index.len() != other.index.len() {
            return false;
        }
        if !self.index.keys().eq(other.index.keys()) {
            return false;
        }
        self.edge_set() == other.edge_set()
    }
}
impl Eq for SimpleGraph {}

impl SimpleGraph {
    pub fn new<I, S>(vertices: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<VertexId>,
    {
        let vertices: Vec<VertexId> = vertices.into_iter().map(Into::into).collect();
        let mut index = BTreeMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.clone(), i).is_some() {
                return Err(Error::InvalidInput(format!("duplicate vertex id {v:?}")));
            }
        }
        let adj = vec![BTreeSet::new(); vertices.len()];
        Ok(SimpleGraph {
            vertices,
            index,
            adj,
        })
    }

    pub fn from_edges<I, S>(vertices: I, edges: &[(S, S)]) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str> + Into<VertexId> + Clone,
    {
        let mut g = Self::new(vertices)?;
        for (u, v) in edges {
            g.add_edge(u.as_ref(), v.as_ref())?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: &str, v: &str) -> Result<()> {
        let iu = self.index_of(u)?;
        let iv = self.index_of(v)?;
        if iu == iv {
            return Err(Error::InvalidInput(format!(
                "loop {u:?} not allowed in a simple graph"
            )));
        }
        self.adj[iu].insert(iv);
        self.adj[iv].insert(iu);
        Ok(())
    }

    pub fn index_of(&self, v: &str) -> Result<usize> {
        self.index
            .get(v)
            .copied()
            .ok_or_else(|| Error::InvalidInput(format!("unknown vertex id {v:?}")))
    }

    pub fn contains_vertex(&self, v: &str) -> bool {
        self.index.contains_key(v)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Vertices in their declared order.
    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &VertexId {
        &self.vertices[i]
    }

    pub fn has_edge(&self, u: &str, v: &str) -> bool {
        match (self.index.get(u), self.index.get(v)) {
            (Some(&iu), Some(&iv)) => self.adj[iu].contains(&iv),
            _ => false,
        }
    }

    pub fn has_edge_idx(&self, iu: usize, iv: usize) -> bool {
        self.adj[iu].contains(&iv)
    }

    pub fn neighbors_idx(&self, i: usize) -> &BTreeSet<usize> {
        &self.adj[i]
    }

    pub fn degree_idx(&self, i: usize) -> usize {
        self.adj[i].len()
    }

    /// Edges as normalized id pairs (lexicographically smaller id first),
    /// sorted.
    pub fn edge_set(&self) -> BTreeSet<(VertexId, VertexId)> {
        let mut out = BTreeSet::new();
        for (iu, nbrs) in self.adj.iter().enumerate() {
            for &iv in nbrs {
                if iu < iv {
                    let (a, b) = (&self.vertices[iu], &self.vertices[iv]);
                    let pair = if a <= b {
                        (a.clone(), b.clone())
                    } else {
                        (b.clone(), a.clone())
                    };
                    out.insert(pair);
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|n| n.len()).sum::<usize>() / 2
    }

    /// Neighbourhood of vertex `i` as a bitmask; only valid for graphs with
    /// at most 64 vertices.
    pub fn adjacency_masks(&self) -> Vec<u64> {
        assert!(self.vertices.len() <= 64, "bitmask adjacency needs n <= 64");
        self.adj
            .iter()
            .map(|nbrs| nbrs.iter().fold(0u64, |m, &j| m | (1 << j)))
            .collect()
    }

    /// Complement on the same vertex list.
    pub fn complement(&self) -> SimpleGraph {
        let n = self.vertices.len();
        let adj = (0..n)
            .map(|i| {
                (0..n)
                    .filter(|&j| i != j && !self.adj[i].contains(&j))
                    .collect()
            })
            .collect();
        SimpleGraph {
            vertices: self.vertices.clone(),
            index: self.index.clone(),
            adj,
        }
    }

    /// Whether `s` induces a connected subgraph; the empty set counts as
    /// connected.
    pub fn is_connected_subset(&self, s: &BTreeSet<VertexId>) -> Result<bool> {
        let idxs: Vec<usize> = s.iter().map(|v| self.index_of(v)).collect::<Result<_>>()?;
        Ok(self.is_connected_subset_idx(&idxs.into_iter().collect()))
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

    pub fn is_connected(&self) -> bool {
        let all: BTreeSet<usize> = (0..self.vertices.len()).collect();
        self.is_connected_subset_idx(&all)
    }

    /// Maximum independent set by exhaustive search over subsets.
    pub fn max_independent_set_bruteforce(
        &self,
        limit: usize,
    ) -> Result<(usize, BTreeSet<VertexId>)> {
        let n = self.vertices.len();
        if n > limit {
            return Err(Error::ResourceLimit(format!(
                "independent-set brute force capped at {limit} vertices, got {n}"
            )));
        }
        let masks = self.adjacency_masks();
        let mut best: u64 = 0;
        for s in 0u64..(1u64 << n) {
            if s.count_ones() <= best.count_ones() {
                continue;
            }
            let mut ok = true;
            let mut rest = s;
            while rest != 0 {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if masks[i] & s != 0 {
                    ok = false;
                    break;
                }
            }
            if ok {
                best = s;
            }
        }
        let witness: BTreeSet<VertexId> = (0..n)
            .filter(|i| best >> i & 1 == 1)
            .map(|i| self.vertices[i].clone())
            .collect();
        Ok((best.count_ones() as usize, witness))
    }

    /// All pairs of adjacent vertices with identical neighbourhoods outside
    /// the pair.
    pub fn true_twins(&self) -> Vec<(VertexId, VertexId)> {
        let n = self.vertices.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if !self.adj[i].contains(&j) {
                    continue;
                }
                let ni: BTreeSet<usize> = self.adj[i].iter().copied().filter(|&x| x != j).collect();
                let nj: BTreeSet<usize> = self.adj[j].iter().copied().filter(|&x| x != i).collect();
                if ni == nj {
                    out.push((self.vertices[i].clone(), self.vertices[j].clone()));
                }
            }
        }
        out
    }

    /// Induced subgraph on `s`, vertices kept in this graph's order.
    pub fn induced(&self, s: &BTreeSet<VertexId>) -> Result<SimpleGraph> {
        for v in s {
            self.index_of(v)?;
        }
        let verts: Vec<VertexId> = self
            .vertices
            .iter()
            .filter(|v| s.contains(*v))
            .cloned()
            .collect();
        let mut g = SimpleGraph::new(verts)?;
        for u in s {
            for w in s {
                if u < w && self.has_edge(u, w) {
                    g.add_edge(u, w)?;
                }
            }
        }
        Ok(g)
    }
}

/// An edge of a multigraph, identified by `id`; `u == v` encodes a loop.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiEdge {
    pub id: EdgeId,
    pub u: VertexId,
    pub v: VertexId,
}

/// A multigraph: parallel edges and loops allowed, edges carry unique ids.
///
/// The first endpoint `u` of each edge is the designated traversal start, so
/// the ordered subdivision path of an edge is unambiguous.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    vertices: Vec<VertexId>,
    edges: Vec<MultiEdge>,
}

impl Multigraph {
    pub fn new<I, S>(vertices: I, edges: Vec<(S, S)>) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<VertexId>,
    {
        let edges = edges
            .into_iter()
            .enumerate()
            .map(|(i, (u, v))| MultiEdge {
                id: format!("e{i}"),
                u: u.into(),
                v: v.into(),
            })
            .collect();
        Self::with_edge_ids(vertices, edges)
    }

    pub fn with_edge_ids<I, S>(vertices: I, edges: Vec<MultiEdge>) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<VertexId>,
    {
        let vertices: Vec<VertexId> = vertices.into_iter().map(Into::into).collect();
        let vset: BTreeSet<&VertexId> = vertices.iter().collect();
        if vset.len() != vertices.len() {
            return Err(Error::InvalidInput(
                "duplicate vertex id in multigraph".into(),
            ));
        }
        let mut ids = BTreeSet::new();
        for e in &edges {
            if !vset.contains(&e.u) || !vset.contains(&e.v) {
                return Err(Error::InvalidInput(format!(
                    "edge {}: endpoint not among vertices",
                    e.id
                )));
            }
            if !ids.insert(&e.id) {
                return Err(Error::InvalidInput(format!("duplicate edge id {:?}", e.id)));
            }
        }
        Ok(Multigraph { vertices, edges })
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn edges(&self) -> &[MultiEdge] {
        &self.edges
    }

    pub fn edge(&self, id: &str) -> Result<&MultiEdge> {
        self.edges
            .iter()
            .find(|e| e.id == id)
            .ok_or_else(|| Error::InvalidInput(format!("unknown edge id {id:?}")))
    }

    /// Size counting multiplicity.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn is_loop(&self, id: &str) -> Result<bool> {
        let e = self.edge(id)?;
        Ok(e.u == e.v)
    }

    pub fn degree(&self, v: &str) -> usize {
        self.edges
            .iter()
            .map(|e| (e.u == v) as usize + (e.v == v) as usize)
            .sum()
    }

    /// True when the multigraph is a simple forest (no loops, no parallels,
    /// no cycles).
    pub fn is_simple_forest(&self) -> bool {
        let mut seen_pairs = BTreeSet::new();
        for e in &self.edges {
            if e.u == e.v {
                return false;
            }
            let pair = if e.u <= e.v {
                (e.u.clone(), e.v.clone())
            } else {
                (e.v.clone(), e.u.clone())
            };
            if !seen_pairs.insert(pair) {
                return false;
            }
        }
        // acyclic <=> every component has |E| = |V| - 1; check via union-find
        let idx: BTreeMap<&VertexId, usize> = self
            .vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v, i))
            .collect();
        let mut parent: Vec<usize> = (0..self.vertices.len()).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            if parent[x] != x {
                let r = find(parent, parent[x]);
                parent[x] = r;
            }
            parent[x]
        }
        for e in &self.edges {
            let (a, b) = (idx[&e.u], idx[&e.v]);
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra == rb {
                return false;
            }
            parent[ra] = rb;
        }
        true
    }

    pub fn is_tree(&self) -> bool {
        self.is_simple_forest() && self.edges.len() + 1 == self.vertices.len()
    }

    /// Leaves of a simple forest (degree-1 vertices); a single isolated
    /// vertex has no leaves.
    pub fn leaves(&self) -> Vec<VertexId> {
        self.vertices
            .iter()
            .filter(|v| self.degree(v) == 1)
            .cloned()
            .collect()
    }
}

/// Minimum vertex cover size by brute force; used as an independent oracle
/// against `max_independent_set_bruteforce` via Gallai's identity.
pub fn min_vertex_cover_bruteforce(g: &SimpleGraph, limit: usize) -> Result<usize> {
    let n = g.vertex_count();
    if n > limit {
        return Err(Error::ResourceLimit(format!(
            "vertex-cover brute force capped at {limit}"
        )));
    }
    let masks = g.adjacency_masks();
    let mut best = n;
    'outer: for s in 0u64..(1u64 << n) {
        if (s.count_ones() as usize) >= best {
            continue;
        }
        for i in 0..n {
            if s >> i & 1 == 0 && masks[i] & !s != 0 {
                continue 'outer;
            }
        }
        best = s.count_ones() as usize;
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn c4() -> SimpleGraph {
        SimpleGraph::from_edges(
            vec!["v1", "v2", "v3", "v4"],
            &[("v1", "v2"), ("v2", "v3"), ("v3", "v4"), ("v4", "v1")],
        )
        .unwrap()
    }

    fn p4() -> SimpleGraph {
        SimpleGraph::from_edges(
            vec!["a", "b", "c", "d"],
            &[("a", "b"), ("b", "c"), ("c", "d")],
        )
        .unwrap()
    }

    pub(crate) fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> SimpleGraph {
        let ids: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
        let mut g = SimpleGraph::new(ids.clone()).unwrap();
        for i in 0..n {
            for j in i + 1..n {
                if rng.random_bool(p) {
                    g.add_edge(&ids[i], &ids[j]).unwrap();
                }
            }
        }
        g
    }

    #[test]
    fn complement_of_c4_is_2k2() {
        let co = c4().complement();
        let expected =
            SimpleGraph::from_edges(vec!["v1", "v2", "v3", "v4"], &[("v1", "v3"), ("v2", "v4")])
                .unwrap();
        assert_eq!(co, expected);
    }

    #[test]
    fn complement_of_edgeless_is_complete() {
        let g = SimpleGraph::new(vec!["a", "b", "c"]).unwrap();
        let co = g.complement();
        assert_eq!(co.edge_count(), 3);
    }

    #[test]
    fn complement_is_involution() {
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..40 {
            let n = rng.random_range(0..=8);
            let g = random_graph(&mut rng, n, 0.4);
            assert_eq!(g.complement().complement(), g);
        }
    }

    #[test]
    fn connected_subset_basics() {
        let g = p4();
        let s = |ids: &[&str]| ids.iter().map(|s| s.to_string()).collect::<BTreeSet<_>>();
        assert!(g.is_connected_subset(&s(&["a", "b"])).unwrap());
        assert!(!g.is_connected_subset(&s(&["a", "c"])).unwrap());
        assert!(g.is_connected_subset(&s(&[])).unwrap());
        assert!(g.is_connected_subset(&s(&["x"])).is_err());
    }

    #[test]
    fn whole_graph_subset_agrees_with_connectivity() {
        let mut rng = StdRng::seed_from_u64(11);
        for _ in 0..60 {
            let n = rng.random_range(1..=10);
            let g = random_graph(&mut rng, n, 0.3);
            let all: BTreeSet<VertexId> = g.vertices().iter().cloned().collect();
            assert_eq!(g.is_connected_subset(&all).unwrap(), g.is_connected());
        }
    }

    #[test]
    fn mis_on_small_fixtures() {
        assert_eq!(c4().max_independent_set_bruteforce(20).unwrap().0, 2);
        let k5 = SimpleGraph::from_edges(
            vec!["1", "2", "3", "4", "5"],
            &[
                ("1", "2"),
                ("1", "3"),
                ("1", "4"),
                ("1", "5"),
                ("2", "3"),
                ("2", "4"),
                ("2", "5"),
                ("3", "4"),
                ("3", "5"),
                ("4", "5"),
            ],
        )
        .unwrap();
        assert_eq!(k5.max_independent_set_bruteforce(20).unwrap().0, 1);
        // complement of 3K2 on 6 vertices has independence number 2
        let m3 = SimpleGraph::from_edges(
            vec!["a", "a'", "b", "b'", "c", "c'"],
            &[("a", "a'"), ("b", "b'"), ("c", "c'")],
        )
        .unwrap();
        assert_eq!(
            m3.complement()
                .max_independent_set_bruteforce(20)
                .unwrap()
                .0,
            2
        );
    }

    #[test]
    fn mis_respects_limit() {
        let g = random_graph(&mut StdRng::seed_from_u64(1), 10, 0.5);
        assert!(matches!(
            g.max_independent_set_bruteforce(8),
            Err(Error::ResourceLimit(_))
        ));
    }

    #[test]
    fn gallai_identity_on_random_graphs() {
        let mut rng = StdRng::seed_from_u64(23);
        for _ in 0..40 {
            let n = rng.random_range(1..=10);
            let g = random_graph(&mut rng, n, 0.4);
            let (alpha, w) = g.max_independent_set_bruteforce(20).unwrap();
            // witness is pairwise non-adjacent
            for u in &w {
                for v in &w {
                    assert!(u == v || !g.has_edge(u, v));
                }
            }
            let tau = min_vertex_cover_bruteforce(&g, 20).unwrap();
            assert_eq!(alpha + tau, n);
        }
    }

    #[test]
    fn twins_fixtures() {
        let k3 =
            SimpleGraph::from_edges(vec!["a", "b", "c"], &[("a", "b"), ("b", "c"), ("a", "c")])
                .unwrap();
        assert_eq!(k3.true_twins().len(), 3);
        assert!(c4().true_twins().is_empty());
        // 4-fan: P5 plus a universal vertex
        let fan = SimpleGraph::from_edges(
            vec!["v1", "v2", "v3", "v4", "v5", "z"],
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
        .unwrap();
        assert!(fan.true_twins().is_empty());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_graph() -> impl Strategy<Value = SimpleGraph> {
            (0usize..=8, any::<u64>()).prop_map(|(n, mask)| {
                let ids: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
                let mut g = SimpleGraph::new(ids.clone()).unwrap();
                let mut bit = 0;
                for i in 0..n {
                    for j in i + 1..n {
                        if mask >> (bit % 64) & 1 == 1 {
                            g.add_edge(&ids[i], &ids[j]).unwrap();
                        }
                        bit += 1;
                    }
                }
                g
            })
        }

        proptest! {
            #[test]
            fn complement_involutes(g in arb_graph()) {
                prop_assert_eq!(g.complement().complement(), g);
            }

            #[test]
            fn complement_partitions_pairs(g in arb_graph()) {
                let co = g.complement();
                let n = g.vertex_count();
                prop_assert_eq!(
                    g.edge_count() + co.edge_count(),
                    n * n.saturating_sub(1) / 2
                );
            }
        }
    }

    #[test]
    fn multigraph_accepts_loops_and_parallels() {
        let h = Multigraph::new(vec!["x", "y"], vec![("x", "y"), ("x", "y"), ("x", "x")]).unwrap();
        assert_eq!(h.size(), 3);
        assert!(h.is_loop("e2").unwrap());
        assert!(!h.is_simple_forest());
        let t = Multigraph::new(
            vec!["c", "l1", "l2", "l3"],
            vec![("c", "l1"), ("c", "l2"), ("c", "l3")],
        )
        .unwrap();
        assert!(t.is_tree());
        assert_eq!(t.leaves().len(), 3);
    }
}
