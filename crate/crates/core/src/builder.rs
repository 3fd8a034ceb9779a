//! From a non-crossing representation to a proper mixed-thin certificate.
//!
//! The pipeline partitions graph vertices by how their representatives meet
//! each pattern edge (the profile), refines each class by the at-most-two
//! edges on which members may differ from a fixed ambassador, orders every
//! refined class by endpoint positions on its special edges, and finally
//! merges orders pairwise, complementing the cross edges for the circular
//! interaction shapes.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::framework::{FwVertex, HRepresentation, SubdivisionFramework};
use crate::graph::{EdgeId, MultiEdge, Multigraph, VertexId};
use crate::patterns::merge_orders;
use crate::width::{
    check_mixed_thin, check_proper_thin, MixedThinRepresentation, ThinRepresentation,
};

/// How one representative meets the edges of the pattern.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Profile {
    /// Edges with both endpoints and every internal vertex in the set.
    pub spanned: BTreeSet<EdgeId>,
    /// Edges with both endpoints in the set but a gap among the internals.
    pub gapped: BTreeSet<EdgeId>,
    /// Edges with exactly one endpoint in the set, keyed with that endpoint.
    pub anchored: BTreeSet<(EdgeId, VertexId)>,
    /// Edges met only through internal vertices; at most one, and then the
    /// rest of the profile is empty.
    pub inner: BTreeSet<EdgeId>,
    /// Isolated pattern vertices contained in the set. Empty whenever the
    /// pattern has no isolated vertices.
    pub isolated_hubs: BTreeSet<VertexId>,
}

impl Profile {
    pub fn anchored_endpoint(&self, edge: &str) -> Option<&VertexId> {
        self.anchored
            .iter()
            .find(|(e, _)| e == edge)
            .map(|(_, x)| x)
    }
}

/// Per-vertex profiles; requires a non-crossing representation.
pub fn compute_profiles(rep: &HRepresentation) -> Result<BTreeMap<VertexId, Profile>> {
    if let Some(w) = rep.noncrossing_violation() {
        return Err(Error::InvalidInput(format!(
            "representation is crossing: difference {:?} \\ {:?} is disconnected",
            w.a, w.b
        )));
    }
    let fw = rep.framework();
    let base = fw.base();
    let degree_zero: BTreeSet<VertexId> = base
        .vertices()
        .iter()
        .filter(|v| base.degree(v) == 0)
        .cloned()
        .collect();
    let mut out = BTreeMap::new();
    for (v, s) in rep.sets() {
        let mut p = Profile {
            spanned: BTreeSet::new(),
            gapped: BTreeSet::new(),
            anchored: BTreeSet::new(),
            inner: BTreeSet::new(),
            isolated_hubs: BTreeSet::new(),
        };
        for e in base.edges() {
            let fp = rep.footprint(v, &e.id)?;
            let loops = e.u == e.v;
            match (fp.has_first, fp.has_second) {
                (true, true) => {
                    if fp.all_internals() {
                        p.spanned.insert(e.id.clone());
                    } else {
                        p.gapped.insert(e.id.clone());
                    }
                }
                (true, false) => {
                    debug_assert!(!loops);
                    p.anchored.insert((e.id.clone(), e.u.clone()));
                }
                (false, true) => {
                    debug_assert!(!loops);
                    p.anchored.insert((e.id.clone(), e.v.clone()));
                }
                (false, false) => {
                    if !fp.no_internals() {
                        p.inner.insert(e.id.clone());
                    }
                }
            }
        }
        for x in &degree_zero {
            if s.contains(&FwVertex::Branch(x.clone())) {
                p.isolated_hubs.insert(x.clone());
            }
        }
        if !p.inner.is_empty()
            && !(p.inner.len() == 1
                && p.spanned.is_empty()
                && p.gapped.is_empty()
                && p.anchored.is_empty())
        {
            return Err(Error::Internal(format!(
                "profile of {v:?} mixes an inner edge with endpoint contacts"
            )));
        }
        out.insert(v.clone(), p);
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum ClassKind {
    /// A whole profile class whose sets live inside one edge's internals.
    Inner { edge: EdgeId },
    /// Members whose set equals the ambassador's.
    Core,
    /// Members differing from the ambassador inside one edge.
    OneSpecial { edge: EdgeId },
    /// Members missing part of the ambassador on one edge and exceeding it
    /// on another.
    TwoSpecial {
        removed_on: EdgeId,
        added_on: EdgeId,
    },
}

#[derive(Debug, Clone)]
pub struct RefinedClass {
    pub kind: ClassKind,
    pub members: Vec<VertexId>,
    pub ambassador: VertexId,
    pub profile: Profile,
}

impl RefinedClass {
    pub fn special_edges(&self) -> Vec<EdgeId> {
        match &self.kind {
            ClassKind::Inner { edge } => vec![edge.clone()],
            ClassKind::Core => vec![],
            ClassKind::OneSpecial { edge } => vec![edge.clone()],
            ClassKind::TwoSpecial {
                removed_on,
                added_on,
            } => {
                vec![removed_on.clone(), added_on.clone()]
            }
        }
    }
}

/// The difference of two sets, classified: empty, or a consecutive run of
/// internal vertices of a single edge.
fn classify_difference(
    fw: &SubdivisionFramework,
    diff: &BTreeSet<FwVertex>,
) -> Result<Option<EdgeId>> {
    if diff.is_empty() {
        return Ok(None);
    }
    let mut edge: Option<&EdgeId> = None;
    let mut positions: Vec<u32> = Vec::new();
    for x in diff {
        match x {
            FwVertex::Branch(b) => {
                return Err(Error::Internal(format!(
                    "same-profile difference contains branch vertex {b:?}"
                )))
            }
            FwVertex::Internal(e, k) => {
                match edge {
                    None => edge = Some(e),
                    Some(prev) if prev == e => {}
                    Some(prev) => {
                        return Err(Error::Internal(format!(
                            "same-profile difference spans edges {prev:?} and {e:?}"
                        )))
                    }
                }
                positions.push(*k);
            }
        }
    }
    positions.sort_unstable();
    let consecutive = positions.windows(2).all(|w| w[1] == w[0] + 1);
    if !consecutive {
        return Err(Error::Internal(
            "same-profile difference is not consecutive".into(),
        ));
    }
    let e = edge.expect("nonempty difference");
    if fw.internal_count(e) < *positions.last().unwrap() {
        return Err(Error::Internal("difference position out of range".into()));
    }
    Ok(Some(e.clone()))
}

/// Splits each profile class: the ambassador's equals, one class per edge of
/// single-edge disagreement, one per ordered pair of edges for two-edge
/// disagreements. Profile classes met through edge interiors stay whole.
pub fn refine_partition(
    rep: &HRepresentation,
    profiles: &BTreeMap<VertexId, Profile>,
) -> Result<Vec<RefinedClass>> {
    let fw = rep.framework();
    // group vertices by profile, preserving representation order
    let mut groups: BTreeMap<&Profile, Vec<&VertexId>> = BTreeMap::new();
    for v in rep.vertex_order() {
        groups.entry(&profiles[v]).or_default().push(v);
    }
    debug_assert!(
        groups.len() <= profile_bound(fw.base()),
        "{} profiles exceed the bound {}",
        groups.len(),
        profile_bound(fw.base())
    );
    let mut out = Vec::new();
    for (profile, members) in groups {
        if let Some(edge) = profile.inner.iter().next() {
            let ambassador = pick_ambassador(rep, &members);
            out.push(RefinedClass {
                kind: ClassKind::Inner { edge: edge.clone() },
                members: members.iter().map(|v| (*v).clone()).collect(),
                ambassador,
                profile: profile.clone(),
            });
            continue;
        }
        let ambassador = pick_ambassador(rep, &members);
        let amb_set = rep.set(&ambassador)?.clone();
        let mut core: Vec<VertexId> = Vec::new();
        let mut one: BTreeMap<EdgeId, Vec<VertexId>> = BTreeMap::new();
        let mut two: BTreeMap<(EdgeId, EdgeId), Vec<VertexId>> = BTreeMap::new();
        for v in &members {
            let s = rep.set(v)?;
            let removed: BTreeSet<FwVertex> = amb_set.difference(s).cloned().collect();
            let added: BTreeSet<FwVertex> = s.difference(&amb_set).cloned().collect();
            let removed_on = classify_difference(fw, &removed)?;
            let added_on = classify_difference(fw, &added)?;
            for e in [&removed_on, &added_on].into_iter().flatten() {
                if profile.spanned.contains(e) {
                    return Err(Error::Internal(
                        "same-profile difference touches a fully spanned edge".into(),
                    ));
                }
            }
            match (removed_on, added_on) {
                (None, None) => core.push((*v).clone()),
                (Some(e), None) | (None, Some(e)) => one.entry(e).or_default().push((*v).clone()),
                (Some(e1), Some(e2)) if e1 == e2 => one.entry(e1).or_default().push((*v).clone()),
                (Some(e1), Some(e2)) => two.entry((e1, e2)).or_default().push((*v).clone()),
            }
        }
        out.push(RefinedClass {
            kind: ClassKind::Core,
            members: core,
            ambassador: ambassador.clone(),
            profile: profile.clone(),
        });
        for (edge, ms) in one {
            out.push(RefinedClass {
                kind: ClassKind::OneSpecial { edge },
                members: ms,
                ambassador: ambassador.clone(),
                profile: profile.clone(),
            });
        }
        for ((removed_on, added_on), ms) in two {
            out.push(RefinedClass {
                kind: ClassKind::TwoSpecial {
                    removed_on,
                    added_on,
                },
                members: ms,
                ambassador: ambassador.clone(),
                profile: profile.clone(),
            });
        }
    }
    out.retain(|c| !c.members.is_empty());
    Ok(out)
}

/// The member with the lexicographically least representative (then least
/// id), fixed once per profile class.
fn pick_ambassador(rep: &HRepresentation, members: &[&VertexId]) -> VertexId {
    members
        .iter()
        .min_by(|a, b| {
            let (sa, sb) = (rep.set(a).expect("member"), rep.set(b).expect("member"));
            sa.cmp(sb).then_with(|| a.cmp(b))
        })
        .map(|v| (*v).clone())
        .expect("classes are nonempty")
}

/// Run lengths of a set along an edge: consecutive internals held from the
/// first endpoint and from the second.
fn runs(rep: &HRepresentation, v: &str, edge: &str) -> Result<(u32, u32)> {
    let fp = rep.footprint(v, edge)?;
    let r = fp.len;
    let held: BTreeSet<u32> = fp.internals.iter().copied().collect();
    let mut from_first = 0;
    while from_first < r && held.contains(&(from_first + 1)) {
        from_first += 1;
    }
    let mut from_second = 0;
    while from_second < r && held.contains(&(r - from_second)) {
        from_second += 1;
    }
    Ok((from_first, from_second))
}

/// Run of a set along an edge counted from a given endpoint vertex.
fn run_from(rep: &HRepresentation, v: &str, edge: &str, endpoint: &VertexId) -> Result<u32> {
    let e = rep.framework().base().edge(edge)?;
    let (a, b) = runs(rep, v, edge)?;
    if e.u == *endpoint {
        Ok(a)
    } else if e.v == *endpoint {
        Ok(b)
    } else {
        Err(Error::Internal(format!(
            "{endpoint:?} is not an endpoint of {edge:?}"
        )))
    }
}

/// Hole bounds of a set on a gapped edge, in first-endpoint coordinates:
/// internals 1..=lo are held, hi..=len are held, the in-between is the gap.
fn hole_bounds(rep: &HRepresentation, v: &str, edge: &str) -> Result<(u32, u32)> {
    let fp = rep.footprint(v, edge)?;
    let (a, b) = runs(rep, v, edge)?;
    debug_assert!(a + b <= fp.len || fp.all_internals());
    Ok((a, fp.len + 1 - b))
}

fn by_keys<K: Ord>(members: &[VertexId], key: impl Fn(&VertexId) -> K) -> Vec<VertexId> {
    let mut keyed: Vec<(K, VertexId)> = members.iter().map(|v| (key(v), v.clone())).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)));
    keyed.into_iter().map(|(_, v)| v).collect()
}

/// One strongly consistent order per refined class, by endpoint positions on
/// its special edges.
pub fn order_class(rep: &HRepresentation, cls: &RefinedClass) -> Result<Vec<VertexId>> {
    match &cls.kind {
        ClassKind::Inner { edge } => {
            // intervals inside one edge: left endpoints, ties by right
            let mut keyed = Vec::new();
            for v in &cls.members {
                let fp = rep.footprint(v, edge)?;
                let lo = *fp.internals.first().ok_or_else(|| {
                    Error::Internal(format!("{v:?} holds nothing on its inner edge"))
                })?;
                let hi = *fp.internals.last().expect("nonempty");
                keyed.push(((lo, hi), v.clone()));
            }
            keyed.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)));
            Ok(keyed.into_iter().map(|(_, v)| v).collect())
        }
        ClassKind::Core => Ok(cls.members.clone()), // all sets equal; keep input order
        ClassKind::OneSpecial { edge } => {
            if let Some(x) = cls.profile.anchored_endpoint(edge) {
                let x = x.clone();
                let mut keys = BTreeMap::new();
                for v in &cls.members {
                    keys.insert(v.clone(), run_from(rep, v, edge, &x)?);
                }
                Ok(by_keys(&cls.members, |v| keys[v]))
            } else if cls.profile.gapped.contains(edge) {
                let mut keys = BTreeMap::new();
                for v in &cls.members {
                    keys.insert(v.clone(), hole_bounds(rep, v, edge)?);
                }
                Ok(by_keys(&cls.members, |v| keys[v]))
            } else {
                Err(Error::Internal(
                    "special edge is neither anchored nor gapped".into(),
                ))
            }
        }
        ClassKind::TwoSpecial {
            removed_on,
            added_on,
        } => {
            let anchor1 = cls.profile.anchored_endpoint(removed_on).cloned();
            let anchor2 = cls.profile.anchored_endpoint(added_on).cloned();
            match (anchor1, anchor2) {
                (Some(x1), Some(x2)) => {
                    // both edges anchored: positions shrink on one edge as
                    // they grow on the other
                    let mut keys = BTreeMap::new();
                    for v in &cls.members {
                        let r1 = run_from(rep, v, removed_on, &x1)?;
                        let r2 = run_from(rep, v, added_on, &x2)?;
                        keys.insert(v.clone(), (r1, std::cmp::Reverse(r2)));
                    }
                    Ok(by_keys(&cls.members, |v| keys[v]))
                }
                (None, Some(x0)) => order_gap_vs_anchor(rep, cls, removed_on, added_on, &x0, true),
                (Some(x0), None) => order_gap_vs_anchor(rep, cls, added_on, removed_on, &x0, false),
                (None, None) => order_two_gaps(rep, cls, removed_on, added_on),
            }
        }
    }
}

/// Shared body of the gapped-versus-anchored cases. `gap_edge` carries the
/// hole, `anchor_edge` the single-endpoint run from x0; `gap_grows` tells
/// whether members lose ground on the gapped edge (and gain on the anchored
/// one) or the other way around.
fn order_gap_vs_anchor(
    rep: &HRepresentation,
    cls: &RefinedClass,
    gap_edge: &EdgeId,
    anchor_edge: &EdgeId,
    x0: &VertexId,
    gap_grows: bool,
) -> Result<Vec<VertexId>> {
    let (amb_lo, amb_hi) = hole_bounds(rep, &cls.ambassador, gap_edge)?;
    let mut j = BTreeMap::new(); // run on the anchored edge
    let mut lo = BTreeMap::new();
    let mut hi = BTreeMap::new();
    for v in &cls.members {
        j.insert(v.clone(), run_from(rep, v, anchor_edge, x0)?);
        let (l, h) = hole_bounds(rep, v, gap_edge)?;
        lo.insert(v.clone(), l);
        hi.insert(v.clone(), h);
    }
    let all_j_equal = cls.members.windows(2).all(|w| j[&w[0]] == j[&w[1]]);
    if all_j_equal {
        // order by the gapped edge alone: members that keep one side of the
        // ambassador's hole fixed, then the others
        let (mut first, mut second): (Vec<VertexId>, Vec<VertexId>) = (vec![], vec![]);
        for v in &cls.members {
            if gap_grows {
                // hole grows: either lo shrinks (hi fixed) or hi grows (lo fixed)
                if hi[v] == amb_hi {
                    first.push(v.clone());
                } else {
                    second.push(v.clone());
                }
            } else {
                // hole shrinks: either lo grows (hi fixed)... grouped by the
                // side that moved
                if lo[v] == amb_lo {
                    first.push(v.clone());
                } else {
                    second.push(v.clone());
                }
            }
        }
        let mut out = if gap_grows {
            by_keys(&first, |v| lo[v])
        } else {
            by_keys(&first, |v| hi[v])
        };
        out.extend(if gap_grows {
            by_keys(&second, |v| hi[v])
        } else {
            by_keys(&second, |v| lo[v])
        });
        return Ok(out);
    }
    let all_hi_amb = cls.members.iter().all(|v| hi[v] == amb_hi);
    if all_hi_amb {
        return Ok(by_keys(&cls.members, |v| (j[v], std::cmp::Reverse(lo[v]))));
    }
    let all_lo_amb = cls.members.iter().all(|v| lo[v] == amb_lo);
    if all_lo_amb {
        return Ok(by_keys(&cls.members, |v| (j[v], hi[v])));
    }
    Err(Error::Internal(
        "two-special class does not match any ordering case; input is likely crossing".into(),
    ))
}

/// Both special edges gapped: the ambassador has a hole on each; members
/// grow the first hole and shrink the second.
fn order_two_gaps(
    rep: &HRepresentation,
    cls: &RefinedClass,
    removed_on: &EdgeId,
    added_on: &EdgeId,
) -> Result<Vec<VertexId>> {
    let (a1, a2) = hole_bounds(rep, &cls.ambassador, removed_on)?;
    let (a3, a4) = hole_bounds(rep, &cls.ambassador, added_on)?;
    let mut j1 = BTreeMap::new();
    let mut j2 = BTreeMap::new();
    let mut j3 = BTreeMap::new();
    let mut j4 = BTreeMap::new();
    for v in &cls.members {
        let (l1, h1) = hole_bounds(rep, v, removed_on)?;
        let (l2, h2) = hole_bounds(rep, v, added_on)?;
        j1.insert(v.clone(), l1);
        j2.insert(v.clone(), h1);
        j3.insert(v.clone(), l2);
        j4.insert(v.clone(), h2);
    }
    let ms = &cls.members;
    let gain_groups = |out: &mut Vec<VertexId>| {
        // {j3 = a3} by j4, then {j4 = a4} by j3
        let (mut first, mut second): (Vec<VertexId>, Vec<VertexId>) = (vec![], vec![]);
        for v in ms {
            if j3[v] == a3 {
                first.push(v.clone());
            } else {
                second.push(v.clone());
            }
        }
        out.extend(by_keys(&first, |v| j4[v]));
        out.extend(by_keys(&second, |v| j3[v]));
    };
    let loss_groups = |out: &mut Vec<VertexId>| {
        // {j2 = a2} by j1, then {j1 = a1} by j2
        let (mut first, mut second): (Vec<VertexId>, Vec<VertexId>) = (vec![], vec![]);
        for v in ms {
            if j2[v] == a2 {
                first.push(v.clone());
            } else {
                second.push(v.clone());
            }
        }
        out.extend(by_keys(&first, |v| j1[v]));
        out.extend(by_keys(&second, |v| j2[v]));
    };

    let all_j1_equal = ms.windows(2).all(|w| j1[&w[0]] == j1[&w[1]]);
    if all_j1_equal {
        let common = ms.first().map(|v| j1[v]);
        if common != Some(a1) {
            // strictly smaller everywhere, so the other side of the loss hole
            // is pinned; order by the gain hole
            let mut out = Vec::new();
            gain_groups(&mut out);
            return Ok(out);
        }
        let all_j2_equal = ms.windows(2).all(|w| j2[&w[0]] == j2[&w[1]]);
        if all_j2_equal {
            let mut out = Vec::new();
            gain_groups(&mut out);
            return Ok(out);
        }
        // fall through to the pinned-gain cases below
    }
    let all_j3_amb = ms.iter().all(|v| j3[v] == a3);
    if all_j3_amb {
        let all_j4_equal = ms.windows(2).all(|w| j4[&w[0]] == j4[&w[1]]);
        if all_j4_equal {
            let mut out = Vec::new();
            loss_groups(&mut out);
            return Ok(out);
        }
        let all_j1_amb = ms.iter().all(|v| j1[v] == a1);
        if all_j1_amb {
            return Ok(by_keys(ms, |v| (j2[v], std::cmp::Reverse(j4[v]))));
        }
        let all_j2_amb = ms.iter().all(|v| j2[v] == a2);
        if all_j2_amb {
            return Ok(by_keys(ms, |v| (j1[v], j4[v])));
        }
        return Err(Error::Internal(
            "two-gap class outside the case analysis".into(),
        ));
    }
    let all_j4_amb = ms.iter().all(|v| j4[v] == a4);
    if all_j4_amb {
        let all_j3_equal = ms.windows(2).all(|w| j3[&w[0]] == j3[&w[1]]);
        if all_j3_equal {
            let mut out = Vec::new();
            loss_groups(&mut out);
            return Ok(out);
        }
        let all_j1_amb = ms.iter().all(|v| j1[v] == a1);
        if all_j1_amb {
            return Ok(by_keys(ms, |v| (j2[v], j3[v])));
        }
        let all_j2_amb = ms.iter().all(|v| j2[v] == a2);
        if all_j2_amb {
            return Ok(by_keys(ms, |v| (j1[v], std::cmp::Reverse(j3[v]))));
        }
        return Err(Error::Internal(
            "two-gap class outside the case analysis".into(),
        ));
    }
    Err(Error::Internal(
        "two-gap class outside the case analysis".into(),
    ))
}

/// The natural split of a circular representation: sets through the
/// distinguished cycle vertex, ordered by (wrap start, end), against the
/// rest, ordered by (start, end). Ties break by vertex id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NaturalBipartition {
    /// Sets containing the distinguished vertex, in order.
    pub through: Vec<VertexId>,
    /// Sets avoiding it, in order.
    pub avoiding: Vec<VertexId>,
}

pub fn natural_bipartition_ordering(rep: &HRepresentation) -> Result<NaturalBipartition> {
    let cyc = rep.framework().cycle_order()?;
    let p = cyc.len();
    let pos: BTreeMap<&FwVertex, usize> = cyc.iter().enumerate().map(|(i, v)| (v, i + 1)).collect();
    let mut through: Vec<((usize, usize), VertexId)> = Vec::new();
    let mut avoiding: Vec<((usize, usize), VertexId)> = Vec::new();
    for (v, s) in rep.sets() {
        let mut positions: Vec<usize> = s.iter().map(|x| pos[x]).collect();
        positions.sort_unstable();
        let held: BTreeSet<usize> = positions.iter().copied().collect();
        if held.len() == p {
            // the whole cycle counts as a starting-at-1 arc of full length
            through.push(((p + 1, p), v.clone()));
            continue;
        }
        // find the gap; the arc must be cyclically contiguous
        let start = (1..=p)
            .find(|&i| held.contains(&i) && !held.contains(&(if i == 1 { p } else { i - 1 })))
            .ok_or_else(|| Error::InvalidRepresentation(format!("set of {v:?} is not an arc")))?;
        let len = held.len();
        for d in 0..len {
            let q = (start - 1 + d) % p + 1;
            if !held.contains(&q) {
                return Err(Error::InvalidRepresentation(format!(
                    "set of {v:?} is not an arc"
                )));
            }
        }
        let end = (start - 1 + len - 1) % p + 1;
        if held.contains(&1) {
            let key = if start == 1 {
                (p + 1, end)
            } else {
                (start, end)
            };
            through.push((key, v.clone()));
        } else {
            avoiding.push(((start, end), v.clone()));
        }
    }
    through.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)));
    avoiding.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)));
    Ok(NaturalBipartition {
        through: through.into_iter().map(|(_, v)| v).collect(),
        avoiding: avoiding.into_iter().map(|(_, v)| v).collect(),
    })
}

/// Inversion-free proper 2-mixed-thin certificate for a circular
/// representation, via the natural bipartition and a merge over the
/// complemented cross edges.
pub fn circ_arc_to_if_proper_2mixed(rep: &HRepresentation) -> Result<MixedThinRepresentation> {
    let nb = natural_bipartition_ordering(rep)?;
    let g = rep.intersection_graph();
    let cert = if nb.through.is_empty() || nb.avoiding.is_empty() {
        let order = if nb.through.is_empty() {
            nb.avoiding
        } else {
            nb.through
        };
        MixedThinRepresentation {
            classes: vec![order.clone()],
            pair_orders: BTreeMap::from([((0, 0), order)]),
            sign: vec![vec![1]],
        }
    } else {
        let mut complement = BTreeSet::new();
        for a in &nb.through {
            for b in &nb.avoiding {
                if !g.has_edge(a, b) {
                    complement.insert((a.clone(), b.clone()));
                }
            }
        }
        let merged = merge_orders(&nb.through, &nb.avoiding, &complement).ok_or_else(|| {
            Error::InvalidInput(
                "natural bipartition orders do not merge; representation is not a proper/non-crossing circular family"
                    .into(),
            )
        })?;
        MixedThinRepresentation {
            classes: vec![nb.through.clone(), nb.avoiding.clone()],
            pair_orders: BTreeMap::from([
                ((0, 0), nb.through),
                ((1, 1), nb.avoiding),
                ((0, 1), merged),
            ]),
            sign: vec![vec![1, -1], vec![-1, 1]],
        }
    };
    match check_mixed_thin(g, &cert, true, true)? {
        None => Ok(cert),
        Some(v) => Err(Error::Internal(format!(
            "circular certificate failed its own check: {v:?}"
        ))),
    }
}

/// Diagnostics of a build.
#[derive(Debug, Clone, Default)]
pub struct BuilderReport {
    pub class_count: usize,
    pub class_bound: usize,
    /// Pairs resolved by the escape hatch (trying the other sign) rather
    /// than the prescribed case analysis.
    pub fallback_pairs: Vec<(usize, usize)>,
    /// Pairs routed through the auxiliary three-edge circular construction.
    pub three_edge_pairs: usize,
}

/// Distinct-profile bound: (4^m - 1) * 2^m + m, plus one per isolated
/// pattern vertex.
fn profile_bound(base: &Multigraph) -> usize {
    let m = base.size() as u32;
    let isolated = base
        .vertices()
        .iter()
        .filter(|v| base.degree(v) == 0)
        .count();
    let bound = 4u128
        .saturating_pow(m)
        .saturating_sub(1)
        .saturating_mul(2u128.saturating_pow(m))
        .saturating_add(m as u128)
        .saturating_add(isolated as u128);
    usize::try_from(bound).unwrap_or(usize::MAX)
}

/// Class count bound for a pattern of size m, plus one per isolated pattern
/// vertex.
pub fn class_bound(m: usize, isolated: usize) -> usize {
    let m = m as u128;
    let bound = 2u128
        .saturating_pow(m as u32)
        .saturating_mul(4u128.saturating_pow(m as u32).saturating_sub(1))
        .saturating_mul(m * m + 1)
        .saturating_add(m)
        .saturating_add(isolated as u128);
    usize::try_from(bound).unwrap_or(usize::MAX)
}

pub fn build_proper_mixed_thin(rep: &HRepresentation) -> Result<MixedThinRepresentation> {
    build_proper_mixed_thin_with_report(rep).map(|(cert, _)| cert)
}

pub fn build_proper_mixed_thin_with_report(
    rep: &HRepresentation,
) -> Result<(MixedThinRepresentation, BuilderReport)> {
    let profiles = compute_profiles(rep)?; // checks the non-crossing precondition
    let classes = refine_partition(rep, &profiles)?;
    let g = rep.intersection_graph();

    let mut orders: Vec<Vec<VertexId>> = Vec::with_capacity(classes.len());
    for cls in &classes {
        let order = order_class(rep, cls)?;
        let thin = ThinRepresentation {
            order: order.clone(),
            classes: vec![order.clone()],
        };
        let sub = g.induced(&order.iter().cloned().collect())?;
        if check_proper_thin(&sub, &thin)?.is_some() {
            return Err(Error::Internal(format!(
                "class order for {:?} is not strongly consistent",
                cls.kind
            )));
        }
        orders.push(order);
    }

    let k = classes.len();
    let mut report = BuilderReport {
        class_count: k,
        class_bound: class_bound(
            rep.framework().base().size(),
            rep.framework()
                .base()
                .vertices()
                .iter()
                .filter(|v| rep.framework().base().degree(v) == 0)
                .count(),
        ),
        ..Default::default()
    };
    if k > report.class_bound {
        return Err(Error::Internal(format!(
            "{k} classes exceed the bound {}",
            report.class_bound
        )));
    }

    let mut sign = vec![vec![1i8; k]; k];
    let mut pair_orders: BTreeMap<(usize, usize), Vec<VertexId>> = BTreeMap::new();
    for (i, order) in orders.iter().enumerate() {
        pair_orders.insert((i, i), order.clone());
    }
    for i in 0..k {
        for j in i + 1..k {
            let (s, merged, used_fallback, three_edge) =
                merge_pair(rep, g, &classes[i], &classes[j], &orders[i], &orders[j])?;
            sign[i][j] = s;
            sign[j][i] = s;
            pair_orders.insert((i, j), merged);
            if used_fallback {
                report.fallback_pairs.push((i, j));
            }
            if three_edge {
                report.three_edge_pairs += 1;
            }
        }
    }

    let cert = MixedThinRepresentation {
        classes: (0..k).map(|i| pair_orders[&(i, i)].clone()).collect(),
        pair_orders,
        sign,
    };
    match check_mixed_thin(g, &cert, true, false)? {
        None => Ok((cert, report)),
        Some(v) => Err(Error::Internal(format!(
            "built certificate failed its own check: {v:?}"
        ))),
    }
}

/// Signs and merges one pair of classes. Returns (sign, merged order,
/// fallback used, three-edge construction used).
fn merge_pair(
    rep: &HRepresentation,
    g: &crate::graph::SimpleGraph,
    ci: &RefinedClass,
    cj: &RefinedClass,
    oi: &[VertexId],
    oj: &[VertexId],
) -> Result<(i8, Vec<VertexId>, bool, bool)> {
    let mut cross = BTreeSet::new();
    for a in oi {
        for b in oj {
            if g.has_edge(a, b) {
                cross.insert((a.clone(), b.clone()));
            }
        }
    }
    let total = oi.len() * oj.len();
    if cross.len() == total || cross.is_empty() {
        // complete or anticomplete: concatenate under the positive sign
        let mut order = oi.to_vec();
        order.extend(oj.iter().cloned());
        return Ok((1, order, false, false));
    }

    let plan = prescribe_sign(rep, ci, cj, g)?;
    let complement: BTreeSet<(VertexId, VertexId)> = oi
        .iter()
        .flat_map(|a| oj.iter().map(move |b| (a.clone(), b.clone())))
        .filter(|p| !cross.contains(p))
        .collect();

    let try_sign = |s: i8, combos: &[(bool, bool)]| -> Option<Vec<VertexId>> {
        let edges = if s == 1 { &cross } else { &complement };
        for &(ri, rj) in combos {
            let a: Vec<VertexId> = if ri {
                oi.iter().rev().cloned().collect()
            } else {
                oi.to_vec()
            };
            let b: Vec<VertexId> = if rj {
                oj.iter().rev().cloned().collect()
            } else {
                oj.to_vec()
            };
            if let Some(m) = merge_orders(&a, &b, edges) {
                return Some(m);
            }
        }
        None
    };

    let default_combos = [(false, false), (false, true), (true, false), (true, true)];
    let combos: Vec<(bool, bool)> = match plan.preferred_orientation {
        Some(pref) => std::iter::once(pref)
            .chain(default_combos.iter().copied().filter(|c| *c != pref))
            .collect(),
        None => default_combos.to_vec(),
    };

    if let Some(m) = try_sign(plan.sign, &combos) {
        return Ok((plan.sign, m, false, plan.three_edge));
    }
    // escape hatch for degenerate interactions the case analysis misses
    let other = -plan.sign;
    if let Some(m) = try_sign(other, &default_combos) {
        return Ok((other, m, true, plan.three_edge));
    }
    Err(Error::Internal(format!(
        "no sign/orientation merges classes {:?} and {:?}",
        ci.kind, cj.kind
    )))
}

/// Sign and merge strategy for one pair of classes.
struct PairPlan {
    sign: i8,
    three_edge: bool,
    /// Orientation combo to try first, from the auxiliary construction.
    preferred_orientation: Option<(bool, bool)>,
}

/// The interaction-shape case analysis: +1 for the proper-interval shapes,
/// -1 for the circular ones.
fn prescribe_sign(
    rep: &HRepresentation,
    ci: &RefinedClass,
    cj: &RefinedClass,
    g: &crate::graph::SimpleGraph,
) -> Result<PairPlan> {
    // one side met only through edge interiors
    let plan = |sign: i8| PairPlan {
        sign,
        three_edge: false,
        preferred_orientation: None,
    };
    for (inner_side, other) in [(ci, cj), (cj, ci)] {
        if let ClassKind::Inner { edge } = &inner_side.kind {
            if other.profile.anchored.iter().any(|(e, _)| e == edge) {
                return Ok(plan(1));
            }
            if other.profile.gapped.contains(edge) {
                return Ok(plan(-1));
            }
            // spanned would be complete (caught earlier); disjoint edges
            // would be anticomplete
            return Ok(plan(1));
        }
    }

    // both endpoint-touching: count the edges on which the classes intersect
    let interaction = interaction_edges(rep, ci, cj)?;
    match interaction.len() {
        0 | 1 => Ok(plan(1)),
        2 => Ok(plan(-1)),
        3 => Ok(PairPlan {
            sign: -1,
            three_edge: true,
            // best effort: a degenerate auxiliary representation just means
            // no preferred orientation
            preferred_orientation: three_edge_orientation_hint(rep, ci, cj, g, &interaction)
                .unwrap_or(None),
        }),
        _ => Ok(plan(-1)),
    }
}

/// Edges of the pattern on which members of the two classes share framework
/// vertices.
fn interaction_edges(
    rep: &HRepresentation,
    ci: &RefinedClass,
    cj: &RefinedClass,
) -> Result<Vec<EdgeId>> {
    let mut out = Vec::new();
    for e in rep.framework().base().edges() {
        let path: BTreeSet<FwVertex> = rep.framework().path(&e.id)?.into_iter().collect();
        let mut hit = false;
        'outer: for a in &ci.members {
            let sa = rep.set(a)?;
            for b in &cj.members {
                let sb = rep.set(b)?;
                if sa.intersection(sb).any(|x| path.contains(x)) {
                    hit = true;
                    break 'outer;
                }
            }
        }
        if hit {
            out.push(e.id.clone());
        }
    }
    Ok(out)
}

/// Materializes the auxiliary circular representation of the three-edge
/// case: the shared edge's subdivision path is closed into a cycle through
/// two fresh vertices that stand in for the other two special edges, and the
/// natural bipartition of that representation suggests which orientation of
/// each class order to merge first.
fn three_edge_orientation_hint(
    rep: &HRepresentation,
    ci: &RefinedClass,
    cj: &RefinedClass,
    g: &crate::graph::SimpleGraph,
    interaction: &[EdgeId],
) -> Result<Option<(bool, bool)>> {
    // the shared edge is anchored by both classes from opposite ends
    let shared = interaction.iter().find(|e| {
        ci.profile.anchored_endpoint(e).is_some() && cj.profile.anchored_endpoint(e).is_some()
    });
    let Some(shared) = shared else {
        return Ok(None);
    };
    let xi = ci
        .profile
        .anchored_endpoint(shared)
        .expect("checked")
        .clone();
    let xj = cj
        .profile
        .anchored_endpoint(shared)
        .expect("checked")
        .clone();
    if xi == xj {
        return Ok(None);
    }
    let r = rep.framework().internal_count(shared);

    // aux cycle: shared path from ci's endpoint, then w' and w closing it
    let base = Multigraph::with_edge_ids(
        vec!["cycA".to_string(), "cycB".to_string()],
        vec![
            MultiEdge {
                id: "arc0".into(),
                u: "cycA".into(),
                v: "cycB".into(),
            },
            MultiEdge {
                id: "arc1".into(),
                u: "cycB".into(),
                v: "cycA".into(),
            },
        ],
    )?;
    let counts = BTreeMap::from([("arc0".to_string(), r + 1), ("arc1".to_string(), 1u32)]);
    let fw = SubdivisionFramework::new(base, counts)?;
    // positions along arc0: 1..=r the shared internals from xi, r+1 the far
    // endpoint xj; cycB plays w', arc1's internal plays w

    let mut sets: Vec<(VertexId, BTreeSet<FwVertex>)> = Vec::new();
    let wv = FwVertex::Internal("arc1".into(), 1);
    let wp = FwVertex::Branch("cycB".into());
    for v in &ci.members {
        let run = run_from(rep, v, shared, &xi)?;
        let mut s: BTreeSet<FwVertex> = BTreeSet::from([FwVertex::Branch("cycA".into())]);
        s.extend((1..=run).map(|k| FwVertex::Internal("arc0".into(), k)));
        s.insert(wv.clone());
        // reaches the far side exactly when adjacent to the other class off
        // the shared edge
        if cj
            .members
            .iter()
            .any(|b| g.has_edge(v, b) && !intersects_on(rep, v, b, shared).unwrap_or(false))
        {
            s.insert(wp.clone());
        }
        sets.push((v.clone(), s));
    }
    for v in &cj.members {
        let run = run_from(rep, v, shared, &xj)?;
        let mut s: BTreeSet<FwVertex> = BTreeSet::from([FwVertex::Internal("arc0".into(), r + 1)]);
        s.extend((r + 1 - run..=r).map(|k| FwVertex::Internal("arc0".into(), k)));
        s.insert(wp.clone());
        if ci
            .members
            .iter()
            .any(|a| g.has_edge(a, v) && !intersects_on(rep, a, v, shared).unwrap_or(false))
        {
            s.insert(wv.clone());
        }
        sets.push((v.clone(), s));
    }
    let aux = HRepresentation::new(fw, sets)?;
    let nb = natural_bipartition_ordering(&aux)?;

    let orient = |want: &[VertexId], class_order: &[VertexId]| -> Option<bool> {
        if want == class_order {
            Some(false)
        } else {
            let rev: Vec<VertexId> = class_order.iter().rev().cloned().collect();
            (want == rev.as_slice()).then_some(true)
        }
    };
    let oi = order_class(rep, ci)?;
    let oj = order_class(rep, cj)?;
    let wi: Vec<VertexId> = nb
        .through
        .iter()
        .filter(|v| oi.contains(v))
        .cloned()
        .collect();
    let wj: Vec<VertexId> = nb
        .through
        .iter()
        .chain(nb.avoiding.iter())
        .filter(|v| oj.contains(v))
        .cloned()
        .collect();
    match (orient(&wi, &oi), orient(&wj, &oj)) {
        (Some(a), Some(b)) => Ok(Some((a, b))),
        _ => Ok(None),
    }
}

fn intersects_on(rep: &HRepresentation, a: &str, b: &str, edge: &str) -> Result<bool> {
    let path: BTreeSet<FwVertex> = rep.framework().path(edge)?.into_iter().collect();
    let sa = rep.set(a)?;
    let sb = rep.set(b)?;
    Ok(sa.intersection(sb).any(|x| path.contains(x)))
}
