//! Thinness orderings for representations over trees and forests.
//!
//! The framework is rooted at a leaf and its vertices are ordered by a
//! postorder traversal and partitioned into chains: a first child continues
//! its parent's class, every further child starts a new one. Graph vertices
//! inherit order and class from the roots of their subtrees, giving a
//! consistent order with at most max(1, leaves - 1) classes.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::framework::{FwVertex, HRepresentation};
use crate::graph::VertexId;
use crate::width::ThinRepresentation;

/// Thinness certificate for a representation whose base is a tree.
pub fn tree_thin_order(rep: &HRepresentation) -> Result<ThinRepresentation> {
    let base = rep.framework().base();
    if !base.is_tree() {
        return Err(Error::InvalidInput("base multigraph is not a tree".into()));
    }
    let (order, classes) = component_order(rep, None, None)?;
    Ok(assemble(order, classes))
}

/// Same, rooted at a chosen framework leaf instead of the default one.
pub fn tree_thin_order_from_leaf(
    rep: &HRepresentation,
    leaf: &FwVertex,
) -> Result<ThinRepresentation> {
    let base = rep.framework().base();
    if !base.is_tree() {
        return Err(Error::InvalidInput("base multigraph is not a tree".into()));
    }
    let idx = rep.framework().index_of(leaf)?;
    if rep.framework().neighbors_idx(idx).len() > 1 {
        return Err(Error::InvalidInput(format!(
            "{leaf} is not a framework leaf"
        )));
    }
    let (order, classes) = component_order(rep, None, Some(idx))?;
    Ok(assemble(order, classes))
}

/// Forest extension: per-component certificates with class indices shared
/// across components, concatenated in component order.
pub fn forest_thin_order(rep: &HRepresentation) -> Result<ThinRepresentation> {
    let base = rep.framework().base();
    if !base.is_simple_forest() {
        return Err(Error::InvalidInput(
            "base multigraph is not a simple forest".into(),
        ));
    }
    let mut comp_of: BTreeMap<VertexId, usize> = BTreeMap::new();
    let mut count = 0usize;
    for v in base.vertices() {
        if comp_of.contains_key(v) {
            continue;
        }
        let id = count;
        count += 1;
        let mut stack = vec![v.clone()];
        comp_of.insert(v.clone(), id);
        while let Some(u) = stack.pop() {
            for e in base.edges() {
                for (x, y) in [(&e.u, &e.v), (&e.v, &e.u)] {
                    if *x == u && !comp_of.contains_key(y) {
                        comp_of.insert(y.clone(), id);
                        stack.push(y.clone());
                    }
                }
            }
        }
    }
    let mut order: Vec<VertexId> = Vec::new();
    let mut class_of: BTreeMap<VertexId, usize> = BTreeMap::new();
    for ci in 0..count {
        let (o, c) = component_order(rep, Some((&comp_of, ci)), None)?;
        order.extend(o);
        class_of.extend(c);
    }
    Ok(assemble(order, class_of))
}

/// Order and class index for the graph vertices whose sets live in one
/// component of the base (all of them when `only` is None).
fn component_order(
    rep: &HRepresentation,
    only: Option<(&BTreeMap<VertexId, usize>, usize)>,
    root_override: Option<usize>,
) -> Result<(Vec<VertexId>, BTreeMap<VertexId, usize>)> {
    let fw = rep.framework();
    let in_component = |v: &FwVertex| -> bool {
        let Some((comp_of, ci)) = only else {
            return true;
        };
        let base_vertex = match v {
            FwVertex::Branch(b) => b,
            FwVertex::Internal(e, _) => &fw.base().edge(e).expect("edge exists").u,
        };
        comp_of[base_vertex] == ci
    };
    let member: Vec<bool> = fw.vertices().iter().map(in_component).collect();
    let verts: Vec<usize> = (0..fw.vertex_count()).filter(|&i| member[i]).collect();
    if verts.is_empty() {
        return Ok((vec![], BTreeMap::new()));
    }

    // root at a leaf of the framework component; smallest-id leaf for
    // determinism unless a root was chosen explicitly
    let root = root_override.unwrap_or_else(|| {
        *verts
            .iter()
            .find(|&&i| fw.neighbors_idx(i).iter().filter(|&&j| member[j]).count() <= 1)
            .expect("a tree has a leaf")
    });

    // children by vertex id; the first child continues the parent's class
    let mut children: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    {
        let mut seen = BTreeSet::from([root]);
        let mut stack = vec![root];
        while let Some(u) = stack.pop() {
            let mut ch: Vec<usize> = fw
                .neighbors_idx(u)
                .iter()
                .copied()
                .filter(|&j| member[j] && !seen.contains(&j))
                .collect();
            ch.sort_by(|&a, &b| fw.vertices()[a].cmp(&fw.vertices()[b]));
            for &c in &ch {
                seen.insert(c);
                stack.push(c);
            }
            children.insert(u, ch);
        }
    }

    let mut post: Vec<usize> = Vec::with_capacity(verts.len());
    let mut cls: BTreeMap<usize, usize> = BTreeMap::new();
    let mut next_class = 1usize;
    fn visit(
        u: usize,
        class_here: usize,
        children: &BTreeMap<usize, Vec<usize>>,
        post: &mut Vec<usize>,
        cls: &mut BTreeMap<usize, usize>,
        next_class: &mut usize,
    ) {
        for (i, &c) in children[&u].iter().enumerate() {
            let c_class = if i == 0 {
                class_here
            } else {
                let fresh = *next_class;
                *next_class += 1;
                fresh
            };
            visit(c, c_class, children, post, cls, next_class);
        }
        post.push(u);
        cls.insert(u, class_here);
    }
    visit(root, 0, &children, &mut post, &mut cls, &mut next_class);
    let post_pos: BTreeMap<usize, usize> = post.iter().enumerate().map(|(i, &v)| (v, i)).collect();

    // depth from root, to find each set's subtree root (unique closest
    // vertex by connectivity)
    let mut depth: BTreeMap<usize, usize> = BTreeMap::from([(root, 0)]);
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        for &c in &children[&u] {
            depth.insert(c, depth[&u] + 1);
            queue.push_back(c);
        }
    }

    let mut keyed: Vec<(usize, VertexId, usize)> = Vec::new();
    for (v, s) in rep.sets() {
        let members: Vec<usize> = s
            .iter()
            .map(|x| fw.index_of(x).expect("validated"))
            .collect();
        if !members.iter().all(|&i| member[i]) {
            if only.is_none() {
                return Err(Error::Internal("set crosses framework components".into()));
            }
            continue; // handled with its own component
        }
        let subtree_root = members
            .iter()
            .copied()
            .min_by_key(|i| depth[i])
            .expect("nonempty");
        keyed.push((post_pos[&subtree_root], v.clone(), cls[&subtree_root]));
    }
    keyed.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    let order: Vec<VertexId> = keyed.iter().map(|(_, v, _)| v.clone()).collect();
    let class_of: BTreeMap<VertexId, usize> = keyed.into_iter().map(|(_, v, c)| (v, c)).collect();
    Ok((order, class_of))
}

fn assemble(order: Vec<VertexId>, class_of: BTreeMap<VertexId, usize>) -> ThinRepresentation {
    // compress class ids to consecutive indices by first appearance
    let mut remap: BTreeMap<usize, usize> = BTreeMap::new();
    for v in &order {
        let next = remap.len();
        remap.entry(class_of[v]).or_insert(next);
    }
    let mut classes = vec![Vec::new(); remap.len()];
    for v in &order {
        classes[remap[&class_of[v]]].push(v.clone());
    }
    ThinRepresentation { order, classes }
}
