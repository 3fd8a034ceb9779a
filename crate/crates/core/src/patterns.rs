//! Ordered bipartite patterns and the constructive merge of two class orders.
//!
//! Merging two linear orders into one satisfying the cross-pair (CO) and
//! (SC) conditions is possible exactly when the ordered bipartite graph
//! avoids four fixed patterns. The merge itself compiles every triple
//! condition into a pairwise precedence constraint between elements of
//! different sides and topologically sorts; a cycle means infeasible.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::VertexId;

/// A bipartite graph together with a linear order on each side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedBipartiteInstance {
    pub side_a: Vec<VertexId>,
    pub side_b: Vec<VertexId>,
    /// Cross edges as (a, b) pairs with a from side_a and b from side_b.
    pub cross_edges: BTreeSet<(VertexId, VertexId)>,
}

impl OrderedBipartiteInstance {
    pub fn new(
        side_a: Vec<VertexId>,
        side_b: Vec<VertexId>,
        cross_edges: BTreeSet<(VertexId, VertexId)>,
    ) -> Result<Self> {
        let sa: BTreeSet<&VertexId> = side_a.iter().collect();
        let sb: BTreeSet<&VertexId> = side_b.iter().collect();
        if sa.len() != side_a.len() || sb.len() != side_b.len() {
            return Err(Error::InvalidInput("duplicate vertex in a side".into()));
        }
        if !sa.is_disjoint(&sb) {
            return Err(Error::InvalidInput("sides are not disjoint".into()));
        }
        for (a, b) in &cross_edges {
            if !sa.contains(a) || !sb.contains(b) {
                return Err(Error::InvalidInput(format!(
                    "cross edge ({a:?},{b:?}) does not go from side A to side B"
                )));
            }
        }
        Ok(OrderedBipartiteInstance {
            side_a,
            side_b,
            cross_edges,
        })
    }

    pub fn has_edge(&self, a: &VertexId, b: &VertexId) -> bool {
        self.cross_edges.contains(&(a.clone(), b.clone()))
    }
}

/// A bipartite pattern: positions on each side (bottom to top), compulsory
/// edges and compulsory non-edges; remaining position pairs are undecided.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartitePattern {
    pub name: &'static str,
    pub a_size: usize,
    pub b_size: usize,
    pub edges: Vec<(usize, usize)>,
    pub nonedges: Vec<(usize, usize)>,
}

/// Positions are 0-based from the bottom of each side: a below b on the
/// left, c below d on the right, one compulsory edge ac, non-edges ad, bc.
pub fn pattern_r1() -> BipartitePattern {
    BipartitePattern {
        name: "R1",
        a_size: 2,
        b_size: 2,
        edges: vec![(0, 0)],
        nonedges: vec![(0, 1), (1, 0)],
    }
}

pub fn pattern_r2() -> BipartitePattern {
    BipartitePattern {
        name: "R2",
        a_size: 2,
        b_size: 2,
        edges: vec![(1, 1)],
        nonedges: vec![(0, 1), (1, 0)],
    }
}

pub fn pattern_r4() -> BipartitePattern {
    BipartitePattern {
        name: "R4",
        a_size: 3,
        b_size: 1,
        edges: vec![(1, 0)],
        nonedges: vec![(0, 0), (2, 0)],
    }
}

/// Left-right mirror of R4.
pub fn pattern_r4_mirror() -> BipartitePattern {
    BipartitePattern {
        name: "R4'",
        a_size: 1,
        b_size: 3,
        edges: vec![(0, 1)],
        nonedges: vec![(0, 0), (0, 2)],
    }
}

pub fn all_four_patterns() -> [BipartitePattern; 4] {
    [
        pattern_r1(),
        pattern_r2(),
        pattern_r4(),
        pattern_r4_mirror(),
    ]
}

fn for_each_combination(n: usize, k: usize, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
    fn go(
        n: usize,
        k: usize,
        start: usize,
        pick: &mut Vec<usize>,
        f: &mut impl FnMut(&[usize]) -> bool,
    ) -> bool {
        if pick.len() == k {
            return f(pick);
        }
        for c in start..n {
            pick.push(c);
            if go(n, k, c + 1, pick, f) {
                return true;
            }
            pick.pop();
        }
        false
    }
    go(n, k, 0, &mut Vec::new(), f)
}

/// Searches for an order-respecting realization of the pattern inside the
/// instance; returns the realizing vertices (side A picks, then side B
/// picks) or None when the instance avoids the pattern. The first witness in
/// combination order is returned, so the result is deterministic.
pub fn find_realization(
    inst: &OrderedBipartiteInstance,
    pat: &BipartitePattern,
) -> Option<(Vec<VertexId>, Vec<VertexId>)> {
    let na = inst.side_a.len();
    let nb = inst.side_b.len();
    if pat.a_size > na || pat.b_size > nb {
        return None;
    }
    let mut witness = None;
    for_each_combination(na, pat.a_size, &mut |pa| {
        let pa = pa.to_vec();
        for_each_combination(nb, pat.b_size, &mut |pb| {
            let ok = pat
                .edges
                .iter()
                .all(|&(i, j)| inst.has_edge(&inst.side_a[pa[i]], &inst.side_b[pb[j]]))
                && pat
                    .nonedges
                    .iter()
                    .all(|&(i, j)| !inst.has_edge(&inst.side_a[pa[i]], &inst.side_b[pb[j]]));
            if ok {
                witness = Some((
                    pa.iter().map(|&i| inst.side_a[i].clone()).collect(),
                    pb.iter().map(|&j| inst.side_b[j].clone()).collect(),
                ));
            }
            ok
        })
    });
    witness
}

pub fn avoids_pattern(inst: &OrderedBipartiteInstance, pat: &BipartitePattern) -> bool {
    find_realization(inst, pat).is_none()
}

pub fn avoids_all_four(inst: &OrderedBipartiteInstance) -> bool {
    all_four_patterns().iter().all(|p| avoids_pattern(inst, p))
}

/// Merges two linear orders into one order on the union such that the
/// two-class certificate with the given cross edge set satisfies the
/// cross-pair (CO) and (SC) conditions; None when infeasible.
///
/// `cross` is the already-selected E_{1,2}: callers working with a -1 sign
/// entry complement before calling. Every (CO)/(SC) triple condition with
/// fixed within-side orders reduces to a pairwise precedence between
/// elements of different sides: for u before v on one side and w on the
/// other, uw in E and vw not in E force w before v (else u < v < w violates
/// (CO)); for v before w on one side and u on the other, uw in E and uv not
/// in E force v before u (else u < v < w violates (SC)).
/// Any topological order of these precedences plus the two side chains is a
/// valid merge, so feasibility is exactly acyclicity. Ties prefer the first
/// side, then within-side order, making the output deterministic.
pub fn merge_orders(
    side_a: &[VertexId],
    side_b: &[VertexId],
    cross: &BTreeSet<(VertexId, VertexId)>,
) -> Option<Vec<VertexId>> {
    let na = side_a.len();
    let nb = side_b.len();
    let n = na + nb;
    // node ids: 0..na side A in order, na..n side B in order
    let has = |ai: usize, bi: usize| cross.contains(&(side_a[ai].clone(), side_b[bi].clone()));

    let mut succ: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for i in 1..na {
        succ[i - 1].insert(i);
    }
    for j in 1..nb {
        succ[na + j - 1].insert(na + j);
    }
    for p in 0..na {
        for q in p + 1..na {
            for w in 0..nb {
                if has(p, w) && !has(q, w) {
                    succ[na + w].insert(q); // (CO): w before q
                }
                if has(q, w) && !has(p, w) {
                    succ[p].insert(na + w); // (SC): p before w
                }
            }
        }
    }
    for p in 0..nb {
        for q in p + 1..nb {
            for w in 0..na {
                if has(w, p) && !has(w, q) {
                    succ[w].insert(na + q); // (CO): w before q
                }
                if has(w, q) && !has(w, p) {
                    succ[na + p].insert(w); // (SC): p before w
                }
            }
        }
    }

    // Kahn's algorithm; node-id scan realizes the side-A-first tie-break
    let mut indeg = vec![0usize; n];
    for outs in &succ {
        for &y in outs {
            indeg[y] += 1;
        }
    }
    let mut emitted = Vec::with_capacity(n);
    let mut done = vec![false; n];
    for _ in 0..n {
        let next = (0..n).find(|&x| !done[x] && indeg[x] == 0)?;
        done[next] = true;
        emitted.push(next);
        for &y in &succ[next] {
            indeg[y] -= 1;
        }
    }
    Some(
        emitted
            .into_iter()
            .map(|x| {
                if x < na {
                    side_a[x].clone()
                } else {
                    side_b[x - na].clone()
                }
            })
            .collect(),
    )
}

/// Exhaustive oracle: does any interleaving of the two orders satisfy the
/// cross (CO)/(SC) conditions? Independent of `merge_orders`; used to
/// cross-validate it.
pub fn merge_exists_by_interleaving(
    side_a: &[VertexId],
    side_b: &[VertexId],
    cross: &BTreeSet<(VertexId, VertexId)>,
) -> bool {
    let na = side_a.len();
    let nb = side_b.len();
    let n = na + nb;
    let all_a: u64 = (1u64 << na) - 1;
    let all_b: u64 = (1u64 << nb) - 1;
    let nbr_a: Vec<u64> = (0..na)
        .map(|i| {
            (0..nb)
                .filter(|&j| cross.contains(&(side_a[i].clone(), side_b[j].clone())))
                .fold(0u64, |m, j| m | 1 << j)
        })
        .collect();
    let nbr_b: Vec<u64> = (0..nb)
        .map(|j| {
            (0..na)
                .filter(|&i| cross.contains(&(side_a[i].clone(), side_b[j].clone())))
                .fold(0u64, |m, i| m | 1 << i)
        })
        .collect();

    'outer: for mask in 0u64..(1 << n) {
        if (mask.count_ones() as usize) != na {
            continue;
        }
        // slot s holds an A element iff bit s of mask is set; elements of a
        // side appear in their own order
        let mut seq: Vec<(bool, usize)> = Vec::with_capacity(n);
        let (mut ca, mut cb) = (0, 0);
        for s in 0..n {
            if mask >> s & 1 == 1 {
                seq.push((true, ca));
                ca += 1;
            } else {
                seq.push((false, cb));
                cb += 1;
            }
        }
        // later_a[s] / later_b[s]: side elements at slots >= s
        let mut later_a = vec![0u64; n + 1];
        let mut later_b = vec![0u64; n + 1];
        for s in (0..n).rev() {
            later_a[s] = later_a[s + 1];
            later_b[s] = later_b[s + 1];
            let (is_a, idx) = seq[s];
            if is_a {
                later_a[s] |= 1 << idx;
            } else {
                later_b[s] |= 1 << idx;
            }
        }
        for x in 0..n {
            for y in x + 1..n {
                let (xa, xi) = seq[x];
                let (ya, yi) = seq[y];
                if xa != ya {
                    continue;
                }
                let (nx, ny) = if xa {
                    (nbr_a[xi], nbr_a[yi])
                } else {
                    (nbr_b[xi], nbr_b[yi])
                };
                // (CO): neighbours of x on the other side, after y, must be
                // neighbours of y
                let later_other = if xa { later_b[y + 1] } else { later_a[y + 1] };
                if nx & later_other & !ny != 0 {
                    continue 'outer;
                }
                // (SC): neighbours of y on the other side, before x, must be
                // neighbours of x
                let earlier_other = if xa {
                    all_b & !later_b[x]
                } else {
                    all_a & !later_a[x]
                };
                if ny & earlier_other & !nx != 0 {
                    continue 'outer;
                }
            }
        }
        return true;
    }
    false
}
