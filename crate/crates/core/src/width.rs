//! Thinness and mixed-thinness certificates and their bit-exact checkers,
//! plus a brute-force minimizer for tiny graphs.
//!
//! A k-thin certificate is a vertex order plus a partition into k classes
//! such that for positions r < s < t with v_r, v_s in the same class,
//! v_r v_t being an edge forces v_s v_t to be one. The proper variant
//! additionally requires the reversed order to be consistent. Mixed-thin
//! certificates relax this to per-pair orders and per-pair edge
//! complementation recorded in a sign matrix.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, VertexId};

/// Order plus partition; a claimed (proper) k-thin representation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThinRepresentation {
    pub order: Vec<VertexId>,
    pub classes: Vec<Vec<VertexId>>,
}

impl ThinRepresentation {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }
}

/// Partition, per-pair linear orders (diagonal included) and sign matrix;
/// a claimed (proper, possibly inversion-free) k-mixed-thin representation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedThinRepresentation {
    pub classes: Vec<Vec<VertexId>>,
    /// Orders on V^i ∪ V^j for every i <= j; the (i,i) entry is the class
    /// order itself.
    pub pair_orders: BTreeMap<(usize, usize), Vec<VertexId>>,
    /// Entries in {-1, +1}; only the upper triangle (including the diagonal)
    /// is meaningful.
    pub sign: Vec<Vec<i8>>,
}

impl MixedThinRepresentation {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Reverses every pair order (and thus every class order) in place.
    pub fn reversed(&self) -> Self {
        let mut out = self.clone();
        for v in out.pair_orders.values_mut() {
            v.reverse();
        }
        out
    }
}

/// First inconsistent triple of a thin check, in lexicographic position
/// order. `reversed` marks a failure of the reversed-order condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThinViolation {
    pub r: VertexId,
    pub s: VertexId,
    pub t: VertexId,
    pub reversed: bool,
}

/// First violated mixed-thinness condition, naming the condition, the class
/// pair and the participating vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedViolation {
    pub condition: &'static str,
    pub pair: (usize, usize),
    pub vertices: Vec<VertexId>,
}

fn check_shape(g: &SimpleGraph, order: &[VertexId], classes: &[Vec<VertexId>]) -> Result<()> {
    let vs: BTreeSet<&VertexId> = g.vertices().iter().collect();
    let os: BTreeSet<&VertexId> = order.iter().collect();
    if os.len() != order.len() || os != vs {
        return Err(Error::InvalidInput(
            "order is not a permutation of V(G)".into(),
        ));
    }
    let mut seen = BTreeSet::new();
    for c in classes {
        for v in c {
            if !vs.contains(v) {
                return Err(Error::InvalidInput(format!(
                    "class member {v:?} not in V(G)"
                )));
            }
            if !seen.insert(v) {
                return Err(Error::InvalidInput(format!("vertex {v:?} in two classes")));
            }
        }
    }
    if seen.len() != vs.len() {
        return Err(Error::InvalidInput("classes do not cover V(G)".into()));
    }
    Ok(())
}

/// Consistency of order and partition; `None` means the certificate passes.
pub fn check_thin(g: &SimpleGraph, rep: &ThinRepresentation) -> Result<Option<ThinViolation>> {
    check_thin_impl(g, rep, false)
}

/// Strong consistency: both the order and its reverse must be consistent.
pub fn check_proper_thin(
    g: &SimpleGraph,
    rep: &ThinRepresentation,
) -> Result<Option<ThinViolation>> {
    check_thin_impl(g, rep, true)
}

fn check_thin_impl(
    g: &SimpleGraph,
    rep: &ThinRepresentation,
    proper: bool,
) -> Result<Option<ThinViolation>> {
    check_shape(g, &rep.order, &rep.classes)?;
    let n = rep.order.len();
    let mut class_of = BTreeMap::new();
    for (ci, c) in rep.classes.iter().enumerate() {
        for v in c {
            class_of.insert(v.clone(), ci);
        }
    }
    let cls: Vec<usize> = rep.order.iter().map(|v| class_of[v]).collect();
    let idx: Vec<usize> = rep
        .order
        .iter()
        .map(|v| g.index_of(v))
        .collect::<Result<_>>()?;
    for r in 0..n {
        for s in r + 1..n {
            for t in s + 1..n {
                if cls[r] == cls[s]
                    && g.has_edge_idx(idx[r], idx[t])
                    && !g.has_edge_idx(idx[s], idx[t])
                {
                    return Ok(Some(ThinViolation {
                        r: rep.order[r].clone(),
                        s: rep.order[s].clone(),
                        t: rep.order[t].clone(),
                        reversed: false,
                    }));
                }
                if proper
                    && cls[s] == cls[t]
                    && g.has_edge_idx(idx[r], idx[t])
                    && !g.has_edge_idx(idx[r], idx[s])
                {
                    return Ok(Some(ThinViolation {
                        r: rep.order[r].clone(),
                        s: rep.order[s].clone(),
                        t: rep.order[t].clone(),
                        reversed: true,
                    }));
                }
            }
        }
    }
    Ok(None)
}

/// Checks a mixed-thin certificate.
///
/// Checks (AL) — or (IN) when `require_inversion_free` — and (CO) for every
/// pair of classes, plus (SC) when `require_proper`. The edge set of a pair
/// follows the sign matrix: -1 selects the bipartite complement between two
/// distinct classes and the within-class complement on the diagonal.
pub fn check_mixed_thin(
    g: &SimpleGraph,
    rep: &MixedThinRepresentation,
    require_proper: bool,
    require_inversion_free: bool,
) -> Result<Option<MixedViolation>> {
    let k = rep.classes.len();
    let flat_order: Vec<VertexId> = rep.classes.iter().flatten().cloned().collect();
    check_shape(g, &flat_order, &rep.classes)?;
    if rep.sign.len() != k || rep.sign.iter().any(|row| row.len() != k) {
        return Err(Error::InvalidInput("sign matrix has wrong shape".into()));
    }
    for i in 0..k {
        for j in i..k {
            match rep.sign[i][j] {
                1 | -1 => {}
                other => {
                    return Err(Error::InvalidInput(format!(
                        "sign matrix entry ({i},{j}) = {other} not in {{-1, 1}}"
                    )))
                }
            }
        }
    }
    let mut class_of = BTreeMap::new();
    for (ci, c) in rep.classes.iter().enumerate() {
        for v in c {
            class_of.insert(v.clone(), ci);
        }
    }
    for i in 0..k {
        for j in i..k {
            let order = rep
                .pair_orders
                .get(&(i, j))
                .ok_or_else(|| Error::InvalidInput(format!("missing pair order ({i},{j})")))?;
            let expected: BTreeSet<&VertexId> =
                rep.classes[i].iter().chain(rep.classes[j].iter()).collect();
            let got: BTreeSet<&VertexId> = order.iter().collect();
            if got.len() != order.len() || got != expected {
                return Err(Error::InvalidInput(format!(
                    "pair order ({i},{j}) is not a permutation of V^{i} ∪ V^{j}"
                )));
            }
            if i != j {
                // alignment of the restrictions with the diagonal orders
                for side in [i, j] {
                    let restricted: Vec<&VertexId> =
                        order.iter().filter(|v| class_of[*v] == side).collect();
                    let diag: Vec<&VertexId> = rep.pair_orders[&(side, side)].iter().collect();
                    let mut rev = diag.clone();
                    rev.reverse();
                    let ok = if require_inversion_free {
                        restricted == diag
                    } else {
                        restricted == diag || restricted == rev
                    };
                    if !ok {
                        return Ok(Some(MixedViolation {
                            condition: if require_inversion_free { "IN" } else { "AL" },
                            pair: (i, j),
                            vertices: restricted.into_iter().cloned().collect(),
                        }));
                    }
                }
            }
            // edge predicate for this pair, per the sign matrix
            let sign = rep.sign[i][j];
            let in_e = |u: &VertexId, w: &VertexId| -> bool {
                let edge = g.has_edge(u, w);
                if sign == 1 {
                    edge
                } else {
                    !edge
                }
            };
            let n = order.len();
            let cls: Vec<usize> = order.iter().map(|v| class_of[v]).collect();
            for a in 0..n {
                for b in a + 1..n {
                    for c in b + 1..n {
                        let (u, v, w) = (&order[a], &order[b], &order[c]);
                        // (CO): u, v same class, w in the other (or all three
                        // on the diagonal)
                        let co_applies = if i == j {
                            true
                        } else {
                            cls[a] == cls[b] && cls[c] != cls[a]
                        };
                        if co_applies && in_e(u, w) && !in_e(v, w) {
                            return Ok(Some(MixedViolation {
                                condition: "CO",
                                pair: (i, j),
                                vertices: vec![u.clone(), v.clone(), w.clone()],
                            }));
                        }
                        let sc_applies = if i == j {
                            require_proper
                        } else {
                            require_proper && cls[b] == cls[c] && cls[a] != cls[b]
                        };
                        if sc_applies && in_e(u, w) && !in_e(u, v) {
                            return Ok(Some(MixedViolation {
                                condition: "SC",
                                pair: (i, j),
                                vertices: vec![u.clone(), v.clone(), w.clone()],
                            }));
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Embeds a (proper) thin certificate as a mixed-thin one: restricted orders
/// per pair and the all-ones sign matrix.
pub fn embed_thin_as_mixed(rep: &ThinRepresentation) -> MixedThinRepresentation {
    let k = rep.classes.len();
    let mut class_of = BTreeMap::new();
    for (ci, c) in rep.classes.iter().enumerate() {
        for v in c {
            class_of.insert(v.clone(), ci);
        }
    }
    let mut pair_orders = BTreeMap::new();
    for i in 0..k {
        for j in i..k {
            let order: Vec<VertexId> = rep
                .order
                .iter()
                .filter(|v| class_of[*v] == i || class_of[*v] == j)
                .cloned()
                .collect();
            pair_orders.insert((i, j), order);
        }
    }
    MixedThinRepresentation {
        classes: rep.classes.clone(),
        pair_orders,
        sign: vec![vec![1; k]; k],
    }
}

/// Exact thinness (or proper thinness) with witness, by exhausting vertex
/// orders in permutation-rank order, smallest class count first.
///
/// For a fixed order the consistency condition couples only same-class pairs,
/// so the minimum class count for that order is the chromatic number of a
/// conflict graph on positions; the witness partition is the
/// lexicographically least restricted-growth coloring for the first order
/// attaining the overall minimum.
pub fn bruteforce_thinness(
    g: &SimpleGraph,
    proper: bool,
    limit: usize,
) -> Result<(usize, ThinRepresentation)> {
    let n = g.vertex_count();
    if n > limit {
        return Err(Error::ResourceLimit(format!(
            "thinness brute force capped at {limit} vertices, got {n}"
        )));
    }
    if n == 0 {
        return Ok((
            0,
            ThinRepresentation {
                order: vec![],
                classes: vec![],
            },
        ));
    }
    let masks = g.adjacency_masks();

    let mut best_k = usize::MAX;
    let mut best_order: Vec<usize> = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let conflicts = conflict_masks(&masks, &perm, proper);
        let mut k = 1;
        while k < best_k {
            if can_color(&conflicts, k) {
                best_k = k;
                best_order = perm.clone();
                break;
            }
            k += 1;
        }
        if best_k == 1 || !next_permutation(&mut perm) {
            break;
        }
    }

    let conflicts = conflict_masks(&masks, &best_order, proper);
    let coloring = lex_least_coloring(&conflicts, best_k).expect("feasibility established");
    let order: Vec<VertexId> = best_order.iter().map(|&i| g.vertex(i).clone()).collect();
    let used = coloring.iter().copied().max().unwrap_or(0) + 1;
    let mut classes = vec![Vec::new(); used];
    for (pos, &c) in coloring.iter().enumerate() {
        classes[c].push(order[pos].clone());
    }
    Ok((used, ThinRepresentation { order, classes }))
}

/// Positions a < b conflict when they cannot share a class under the given
/// order.
fn conflict_masks(adj: &[u64], perm: &[usize], proper: bool) -> Vec<u64> {
    let n = perm.len();
    let mut conflicts = vec![0u64; n];
    for a in 0..n {
        for b in a + 1..n {
            let mut clash = false;
            // forward: some t > b adjacent to a but not b
            let later: u64 = perm[b + 1..].iter().fold(0, |m, &v| m | 1 << v);
            if adj[perm[a]] & later & !adj[perm[b]] != 0 {
                clash = true;
            }
            if proper && !clash {
                // reversed: some r < a adjacent to b but not a
                let earlier: u64 = perm[..a].iter().fold(0, |m, &v| m | 1 << v);
                if adj[perm[b]] & earlier & !adj[perm[a]] != 0 {
                    clash = true;
                }
            }
            if clash {
                conflicts[a] |= 1 << b;
                conflicts[b] |= 1 << a;
            }
        }
    }
    conflicts
}

fn can_color(conflicts: &[u64], k: usize) -> bool {
    fn go(conflicts: &[u64], k: usize, pos: usize, colors: &mut Vec<usize>, used: usize) -> bool {
        if pos == conflicts.len() {
            return true;
        }
        let cap = (used + 1).min(k);
        for c in 0..cap {
            let ok = (0..pos).all(|p| colors[p] != c || conflicts[pos] >> p & 1 == 0);
            if ok {
                colors.push(c);
                if go(conflicts, k, pos + 1, colors, used.max(c + 1)) {
                    return true;
                }
                colors.pop();
            }
        }
        false
    }
    go(conflicts, k, 0, &mut Vec::new(), 0)
}

/// Lexicographically least restricted-growth coloring with at most k colors.
fn lex_least_coloring(conflicts: &[u64], k: usize) -> Option<Vec<usize>> {
    fn go(conflicts: &[u64], k: usize, pos: usize, colors: &mut Vec<usize>, used: usize) -> bool {
        if pos == conflicts.len() {
            return true;
        }
        let cap = (used + 1).min(k);
        for c in 0..cap {
            let ok = (0..pos).all(|p| colors[p] != c || conflicts[pos] >> p & 1 == 0);
            if ok {
                colors.push(c);
                if go(conflicts, k, pos + 1, colors, used.max(c + 1)) {
                    return true;
                }
                colors.pop();
            }
        }
        false
    }
    let mut colors = Vec::new();
    go(conflicts, k, 0, &mut colors, 0).then_some(colors)
}

fn next_permutation(perm: &mut [usize]) -> bool {
    let n = perm.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}
