//! Trigraphs, contraction sequences and an exact twin-width search for tiny
//! graphs.
//!
//! A trigraph reached from a graph by contractions is fully determined by
//! the partition of the original vertex set into merged groups: a pair of
//! groups is black when every cross pair is an edge, a non-edge when none
//! is, and red otherwise. The exact search therefore memoizes on partitions.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, VertexId};

/// A graph with disjoint black and red edge sets (no loops).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trigraph {
    vertices: Vec<VertexId>,
    black: BTreeSet<(VertexId, VertexId)>,
    red: BTreeSet<(VertexId, VertexId)>,
}

fn norm(u: &str, v: &str) -> (VertexId, VertexId) {
    if u <= v {
        (u.to_string(), v.to_string())
    } else {
        (v.to_string(), u.to_string())
    }
}

impl Trigraph {
    pub fn from_graph(g: &SimpleGraph) -> Self {
        Trigraph {
            vertices: g.vertices().to_vec(),
            black: g.edge_set(),
            red: BTreeSet::new(),
        }
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn has_black(&self, u: &str, v: &str) -> bool {
        self.black.contains(&norm(u, v))
    }

    pub fn has_red(&self, u: &str, v: &str) -> bool {
        self.red.contains(&norm(u, v))
    }

    pub fn red_degree(&self, v: &str) -> usize {
        self.red.iter().filter(|(a, b)| a == v || b == v).count()
    }

    pub fn max_red_degree(&self) -> usize {
        self.vertices
            .iter()
            .map(|v| self.red_degree(v))
            .max()
            .unwrap_or(0)
    }

    /// Merges u and v into new_id. The merged vertex keeps a black edge to w
    /// only when both u and v had one; it gets a red edge when either had a
    /// red edge to w or exactly one of the pairs was a black edge.
    pub fn contract(&self, u: &str, v: &str, new_id: &str) -> Result<Trigraph> {
        if u == v {
            return Err(Error::InvalidInput(
                "cannot contract a vertex with itself".into(),
            ));
        }
        for x in [u, v] {
            if !self.vertices.iter().any(|y| y == x) {
                return Err(Error::InvalidInput(format!("vertex {x:?} not present")));
            }
        }
        if self.vertices.iter().any(|y| y == new_id) {
            return Err(Error::InvalidInput(format!(
                "vertex id {new_id:?} already in use"
            )));
        }
        let mut vertices: Vec<VertexId> = self
            .vertices
            .iter()
            .filter(|x| *x != u && *x != v)
            .cloned()
            .collect();
        vertices.push(new_id.to_string());
        let mut black = BTreeSet::new();
        let mut red = BTreeSet::new();
        for (a, b) in self.black.iter().chain(self.red.iter()) {
            if [a.as_str(), b.as_str()].contains(&u) || [a.as_str(), b.as_str()].contains(&v) {
                continue;
            }
            if self.black.contains(&(a.clone(), b.clone())) {
                black.insert((a.clone(), b.clone()));
            } else {
                red.insert((a.clone(), b.clone()));
            }
        }
        for z in &vertices {
            if z == new_id {
                continue;
            }
            let ub = self.has_black(u, z);
            let vb = self.has_black(v, z);
            let ur = self.has_red(u, z);
            let vr = self.has_red(v, z);
            if ub && vb {
                black.insert(norm(new_id, z));
            } else if ur || vr || ub != vb {
                red.insert(norm(new_id, z));
            }
        }
        Ok(Trigraph {
            vertices,
            black,
            red,
        })
    }
}

/// An ordered list of merges ending at a single vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractionSequence {
    pub steps: Vec<(VertexId, VertexId, VertexId)>,
}

/// Simulates the sequence on g, checking every intermediate trigraph against
/// the red-degree bound d (a negative d never passes). Returns the overall
/// verdict and the maximum red degree seen.
pub fn validate_sequence(
    g: &SimpleGraph,
    seq: &ContractionSequence,
    d: i64,
) -> Result<(bool, usize)> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::InvalidInput(
            "empty graph has no contraction sequence".into(),
        ));
    }
    if seq.steps.len() != n - 1 {
        return Err(Error::InvalidInput(format!(
            "sequence has {} steps; an {n}-vertex graph needs {}",
            seq.steps.len(),
            n - 1
        )));
    }
    let mut t = Trigraph::from_graph(g);
    let mut max_red = t.max_red_degree();
    for (u, v, w) in &seq.steps {
        t = t.contract(u, v, w)?;
        max_red = max_red.max(t.max_red_degree());
    }
    Ok((max_red as i64 <= d, max_red))
}

/// Exact twin-width with a witness sequence, by memoized search over
/// partitions of the vertex set. Merges are explored smallest block pair
/// first, so the witness is deterministic.
pub fn bruteforce_twinwidth(g: &SimpleGraph, limit: usize) -> Result<(usize, ContractionSequence)> {
    let n = g.vertex_count();
    if n > limit {
        return Err(Error::ResourceLimit(format!(
            "twin-width brute force capped at {limit} vertices, got {n}"
        )));
    }
    if n == 0 {
        return Err(Error::InvalidInput("empty graph has no twin-width".into()));
    }
    if n == 1 {
        return Ok((0, ContractionSequence { steps: vec![] }));
    }
    let masks = g.adjacency_masks();

    // state: sorted list of blocks (bitmasks over original vertices)
    type State = Vec<u64>;

    fn red_degrees(state: &State, masks: &[u64]) -> usize {
        let k = state.len();
        let mut max = 0;
        for i in 0..k {
            let mut deg = 0;
            for j in 0..k {
                if i == j {
                    continue;
                }
                if pair_is_red(state[i], state[j], masks) {
                    deg += 1;
                }
            }
            max = max.max(deg);
        }
        max
    }

    fn pair_is_red(a: u64, b: u64, masks: &[u64]) -> bool {
        // red iff neither complete nor empty between the two groups
        let mut all = true;
        let mut none = true;
        let mut rest = a;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let hit = masks[i] & b;
            if hit != b {
                all = false;
            }
            if hit != 0 {
                none = false;
            }
            if !all && !none {
                return true;
            }
        }
        false
    }

    fn search(
        state: &State,
        masks: &[u64],
        memo: &mut HashMap<State, (usize, Option<(usize, usize)>)>,
    ) -> usize {
        if state.len() == 1 {
            return 0;
        }
        if let Some(&(v, _)) = memo.get(state) {
            return v;
        }
        let mut best = usize::MAX;
        let mut best_pair = None;
        for i in 0..state.len() {
            for j in i + 1..state.len() {
                let mut next: State = state
                    .iter()
                    .enumerate()
                    .filter(|&(t, _)| t != i && t != j)
                    .map(|(_, &b)| b)
                    .collect();
                next.push(state[i] | state[j]);
                next.sort_unstable();
                let here = red_degrees(&next, masks);
                if here >= best {
                    continue; // cannot improve on the current best
                }
                let below = search(&next, masks, memo);
                let cost = here.max(below);
                if cost < best {
                    best = cost;
                    best_pair = Some((i, j));
                }
            }
        }
        memo.insert(state.clone(), (best, best_pair));
        best
    }

    let initial: State = (0..n).map(|i| 1u64 << i).collect();
    let mut memo = HashMap::new();
    let d = search(&initial, &masks, &mut memo);

    // replay to extract the witness; block ids mirror the search order
    let mut steps = Vec::new();
    let mut state = initial;
    let mut names: BTreeMap<u64, VertexId> =
        (0..n).map(|i| (1u64 << i, g.vertex(i).clone())).collect();
    let mut fresh = 0usize;
    let existing: BTreeSet<VertexId> = g.vertices().iter().cloned().collect();
    while state.len() > 1 {
        let (_, pair) = memo[&state];
        let (i, j) = pair.expect("non-terminal memo entries record a merge");
        let (a, b) = (state[i], state[j]);
        let new_id = loop {
            let cand = format!("m{fresh}");
            fresh += 1;
            if !existing.contains(&cand) {
                break cand;
            }
        };
        steps.push((names[&a].clone(), names[&b].clone(), new_id.clone()));
        let mut next: State = state
            .iter()
            .filter(|&&x| x != a && x != b)
            .copied()
            .collect();
        next.push(a | b);
        next.sort_unstable();
        names.insert(a | b, new_id);
        state = next;
    }
    Ok((d, ContractionSequence { steps }))
}
