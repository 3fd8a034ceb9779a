//! JSON interchange formats for graphs, representations, certificates and
//! contraction sequences.
//!
//! Graphs: `{"vertices": [...], "edges": [[u,v]] , "multigraph": bool}`;
//! multigraph edges may carry an explicit id as a third element. A
//! representation bundles a multigraph base, per-edge internal counts and
//! the sets, where a framework vertex is either a branch-vertex id string
//! or an `[edge_id, position]` pair (positions are 1-based).

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::framework::{FwVertex, HRepresentation, SubdivisionFramework};
use crate::graph::{EdgeId, MultiEdge, Multigraph, SimpleGraph, VertexId};
use crate::twinwidth::ContractionSequence;
use crate::width::{MixedThinRepresentation, ThinRepresentation};

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum EdgeDto {
    Pair(VertexId, VertexId),
    Triple(VertexId, VertexId, EdgeId),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphDto {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeDto>,
    #[serde(default)]
    pub multigraph: bool,
}

impl GraphDto {
    pub fn to_simple(&self) -> Result<SimpleGraph> {
        if self.multigraph {
            return Err(Error::InvalidInput(
                "expected a simple graph, got multigraph: true".into(),
            ));
        }
        let mut g = SimpleGraph::new(self.vertices.clone())?;
        for e in &self.edges {
            match e {
                EdgeDto::Pair(u, v) => g.add_edge(u, v)?,
                EdgeDto::Triple(..) => {
                    return Err(Error::InvalidInput(
                        "edge ids are only valid with multigraph: true".into(),
                    ))
                }
            }
        }
        Ok(g)
    }

    pub fn to_multigraph(&self) -> Result<Multigraph> {
        let edges = self
            .edges
            .iter()
            .enumerate()
            .map(|(i, e)| match e {
                EdgeDto::Pair(u, v) => MultiEdge {
                    id: format!("e{i}"),
                    u: u.clone(),
                    v: v.clone(),
                },
                EdgeDto::Triple(u, v, id) => MultiEdge {
                    id: id.clone(),
                    u: u.clone(),
                    v: v.clone(),
                },
            })
            .collect();
        Multigraph::with_edge_ids(self.vertices.clone(), edges)
    }

    pub fn from_simple(g: &SimpleGraph) -> Self {
        GraphDto {
            vertices: g.vertices().to_vec(),
            edges: g
                .edge_set()
                .into_iter()
                .map(|(u, v)| EdgeDto::Pair(u, v))
                .collect(),
            multigraph: false,
        }
    }

    pub fn from_multigraph(h: &Multigraph) -> Self {
        GraphDto {
            vertices: h.vertices().to_vec(),
            edges: h
                .edges()
                .iter()
                .map(|e| EdgeDto::Triple(e.u.clone(), e.v.clone(), e.id.clone()))
                .collect(),
            multigraph: true,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FwVertexDto {
    Branch(VertexId),
    Internal(EdgeId, u32),
}

impl From<&FwVertex> for FwVertexDto {
    fn from(v: &FwVertex) -> Self {
        match v {
            FwVertex::Branch(b) => FwVertexDto::Branch(b.clone()),
            FwVertex::Internal(e, k) => FwVertexDto::Internal(e.clone(), *k),
        }
    }
}

impl From<&FwVertexDto> for FwVertex {
    fn from(v: &FwVertexDto) -> Self {
        match v {
            FwVertexDto::Branch(b) => FwVertex::Branch(b.clone()),
            FwVertexDto::Internal(e, k) => FwVertex::Internal(e.clone(), *k),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RepresentationDto {
    pub base: GraphDto,
    #[serde(default)]
    pub subdivision: BTreeMap<EdgeId, u32>,
    pub sets: BTreeMap<VertexId, Vec<FwVertexDto>>,
}

impl RepresentationDto {
    pub fn to_representation(&self) -> Result<HRepresentation> {
        let base = self.base.to_multigraph()?;
        let fw = SubdivisionFramework::new(base, self.subdivision.clone())?;
        let sets = self
            .sets
            .iter()
            .map(|(v, s)| {
                let set: BTreeSet<FwVertex> = s.iter().map(FwVertex::from).collect();
                (v.clone(), set)
            })
            .collect();
        HRepresentation::new(fw, sets)
    }

    pub fn from_representation(rep: &HRepresentation) -> Self {
        RepresentationDto {
            base: GraphDto::from_multigraph(rep.framework().base()),
            subdivision: rep.framework().counts().clone(),
            sets: rep
                .sets()
                .map(|(v, s)| (v.clone(), s.iter().map(FwVertexDto::from).collect()))
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ThinCertDto {
    pub order: Vec<VertexId>,
    pub classes: Vec<Vec<VertexId>>,
}

impl ThinCertDto {
    pub fn to_certificate(&self) -> ThinRepresentation {
        ThinRepresentation {
            order: self.order.clone(),
            classes: self.classes.clone(),
        }
    }

    pub fn from_certificate(c: &ThinRepresentation) -> Self {
        ThinCertDto {
            order: c.order.clone(),
            classes: c.classes.clone(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MixedCertDto {
    pub classes: Vec<Vec<VertexId>>,
    /// Triples (i, j, order on class i union class j) for i <= j.
    pub pair_orders: Vec<(usize, usize, Vec<VertexId>)>,
    pub sign_matrix: Vec<Vec<i8>>,
}

impl MixedCertDto {
    pub fn to_certificate(&self) -> MixedThinRepresentation {
        MixedThinRepresentation {
            classes: self.classes.clone(),
            pair_orders: self
                .pair_orders
                .iter()
                .map(|(i, j, o)| ((*i, *j), o.clone()))
                .collect(),
            sign: self.sign_matrix.clone(),
        }
    }

    pub fn from_certificate(c: &MixedThinRepresentation) -> Self {
        MixedCertDto {
            classes: c.classes.clone(),
            pair_orders: c
                .pair_orders
                .iter()
                .map(|(&(i, j), o)| (i, j, o.clone()))
                .collect(),
            sign_matrix: c.sign.clone(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SequenceDto {
    pub steps: Vec<(VertexId, VertexId, VertexId)>,
}

impl SequenceDto {
    pub fn to_sequence(&self) -> ContractionSequence {
        ContractionSequence {
            steps: self.steps.clone(),
        }
    }

    pub fn from_sequence(s: &ContractionSequence) -> Self {
        SequenceDto {
            steps: s.steps.clone(),
        }
    }
}

pub fn parse_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("bad JSON: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn graph_roundtrip() {
        let text = r#"{"vertices":["a","b","c"],"edges":[["a","b"],["b","c"]]}"#;
        let dto: GraphDto = parse_json(text).unwrap();
        let g = dto.to_simple().unwrap();
        assert_eq!(g.edge_count(), 2);
        let back = GraphDto::from_simple(&g);
        let g2 = back.to_simple().unwrap();
        assert_eq!(g, g2);
    }

    #[test]
    fn multigraph_with_loops() {
        let text = r#"{"vertices":["x"],"edges":[["x","x","loop"]],"multigraph":true}"#;
        let dto: GraphDto = parse_json(text).unwrap();
        let h = dto.to_multigraph().unwrap();
        assert!(h.is_loop("loop").unwrap());
        // the simple parser refuses it
        assert!(dto.to_simple().is_err());
    }

    #[test]
    fn representation_roundtrip_on_fixtures() {
        for name in fixtures::FIXTURE_NAMES {
            let rep = fixtures::by_name(name).unwrap();
            let dto = RepresentationDto::from_representation(&rep);
            let text = serde_json::to_string(&dto).unwrap();
            let back: RepresentationDto = parse_json(&text).unwrap();
            let rep2 = back.to_representation().unwrap();
            assert_eq!(
                rep2.intersection_graph(),
                rep.intersection_graph(),
                "{name}"
            );
            assert_eq!(rep2.is_proper(), rep.is_proper(), "{name}");
            assert_eq!(rep2.is_non_crossing(), rep.is_non_crossing(), "{name}");
        }
    }

    #[test]
    fn bad_documents_are_rejected() {
        // unknown edge in the subdivision map
        let text = r#"{
            "base": {"vertices":["x","y"],"edges":[["x","y","e"]],"multigraph":true},
            "subdivision": {"nope": 2},
            "sets": {"a": ["x"]}
        }"#;
        let dto: RepresentationDto = parse_json(text).unwrap();
        assert!(dto.to_representation().is_err());
        // set element outside the framework
        let text = r#"{
            "base": {"vertices":["x","y"],"edges":[["x","y","e"]],"multigraph":true},
            "subdivision": {"e": 1},
            "sets": {"a": [["e", 5]]}
        }"#;
        let dto: RepresentationDto = parse_json(text).unwrap();
        assert!(dto.to_representation().is_err());
        // not JSON at all
        assert!(parse_json::<GraphDto>("{").is_err());
    }

    #[test]
    fn set_elements_mix_branch_and_internal() {
        let text = r#"{
            "base": {"vertices":["x","y"],"edges":[["x","y","e"]],"multigraph":true},
            "subdivision": {"e": 2},
            "sets": {"a": ["x", ["e", 1]], "b": [["e", 2], "y"]}
        }"#;
        let dto: RepresentationDto = parse_json(text).unwrap();
        let rep = dto.to_representation().unwrap();
        assert_eq!(rep.len(), 2);
        assert_eq!(rep.intersection_graph().edge_count(), 0);
    }
}
