use std::fmt;

use serde::{Deserialize, Serialize};

use super::monoid::{CurveClass, CurveClassMonoid};
use crate::error::{Error, Result};
use crate::graph::{
    canonical_form, contract_edges, Certificate, Contraction, Edge, GraphJson, HalfEdgeGraph,
    UnionFind, Vertex,
};

/// Genus and curve class carried by a vertex.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct VertexDecoration {
    pub genus: u32,
    pub class: CurveClass,
}

impl VertexDecoration {
    pub fn plain(rank: usize) -> Self {
        Self {
            genus: 0,
            class: CurveClass::zero(rank),
        }
    }

    pub fn is_plain(&self) -> bool {
        self.genus == 0 && self.class.is_zero()
    }

    pub fn is_undecorated(&self) -> bool {
        self.class.is_zero()
    }

    /// The valence conditions of a stable vertex.
    pub fn is_stable_with_valence(&self, valence: usize) -> bool {
        match (self.class.is_zero(), self.genus) {
            (true, 0) => valence >= 3,
            (true, 1) => valence >= 1,
            _ => true,
        }
    }
}

impl fmt::Display for VertexDecoration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "g{}a{}", self.genus, self.class)
    }
}

pub type DecoratedCertificate = Certificate<VertexDecoration>;

/// Lexicographically ordered invariant used to show the saturated poset
/// relation is antisymmetric: total vertex genus, minus the number of
/// non-plain vertices, and the total valence of non-plain vertices.
pub type InvariantI = (i64, i64, i64);

/// A graph with genus and curve-class labels on its vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DecoratedGraph {
    graph: HalfEdgeGraph,
    decorations: Vec<VertexDecoration>,
}

impl DecoratedGraph {
    pub fn new(graph: HalfEdgeGraph, decorations: Vec<VertexDecoration>) -> Result<Self> {
        if decorations.len() != graph.num_vertices() {
            return Err(Error::InvalidGraph(
                "one decoration per vertex required".into(),
            ));
        }
        if let Some(first) = decorations.first() {
            if decorations
                .iter()
                .any(|d| d.class.rank() != first.class.rank())
            {
                return Err(Error::InvalidGraph("curve classes of mixed rank".into()));
            }
        }
        Ok(Self { graph, decorations })
    }

    pub fn graph(&self) -> &HalfEdgeGraph {
        &self.graph
    }

    pub fn decorations(&self) -> &[VertexDecoration] {
        &self.decorations
    }

    pub fn decoration(&self, v: Vertex) -> &VertexDecoration {
        &self.decorations[v]
    }

    pub fn num_vertices(&self) -> usize {
        self.graph.num_vertices()
    }

    pub fn rank(&self) -> usize {
        self.decorations.first().map_or(0, |d| d.class.rank())
    }

    pub fn is_plain(&self, v: Vertex) -> bool {
        self.decorations[v].is_plain()
    }

    pub fn is_undecorated(&self, v: Vertex) -> bool {
        self.decorations[v].is_undecorated()
    }

    /// `h`: first Betti number plus the vertex genera.
    pub fn total_genus(&self) -> usize {
        self.graph.betti_1()
            + self
                .decorations
                .iter()
                .map(|d| d.genus as usize)
                .sum::<usize>()
    }

    /// `beta`: the sum of the vertex classes.
    pub fn total_class(&self) -> CurveClass {
        self.decorations
            .iter()
            .fold(CurveClass::zero(self.rank()), |acc, d| acc.add(&d.class))
    }

    /// `n(G)`: number of legs.
    pub fn num_legs(&self) -> usize {
        self.graph.num_legs()
    }

    pub fn plain_vertices(&self) -> Vec<Vertex> {
        (0..self.num_vertices())
            .filter(|&v| self.is_plain(v))
            .collect()
    }

    /// Connected, and every vertex meets the valence conditions. Classes
    /// are effective by construction.
    pub fn is_stable(&self) -> bool {
        let val = self.graph.valences();
        self.graph.is_connected()
            && self
                .decorations
                .iter()
                .zip(&val)
                .all(|(d, &n)| d.is_stable_with_valence(n))
    }

    pub fn certificate(&self) -> DecoratedCertificate {
        canonical_form(&self.graph, &self.decorations)
    }

    /// Contract the internal edges in `edges`. Target vertices receive the
    /// sum of the classes and genera of their preimage, plus the first Betti
    /// number of the contracted subgraph, so total genus is preserved.
    pub fn contract(&self, edges: &[Edge]) -> Result<(DecoratedGraph, Contraction)> {
        let (target, witness) = contract_edges(&self.graph, edges)?;
        let rank = self.rank();
        let mut decorations = vec![VertexDecoration::plain(rank); target.num_vertices()];
        let mut preimage = vec![0i64; target.num_vertices()];
        for (v, d) in self.decorations.iter().enumerate() {
            let t = witness.vertex_map[v];
            decorations[t].genus += d.genus;
            decorations[t].class = decorations[t].class.add(&d.class);
            preimage[t] += 1;
        }
        let mut contracted = vec![0i64; target.num_vertices()];
        for e in edges {
            contracted[witness.vertex_map[self.graph.vertex_of(e.0)]] += 1;
        }
        for t in 0..target.num_vertices() {
            decorations[t].genus += (contracted[t] - preimage[t] + 1) as u32;
        }
        Ok((
            DecoratedGraph {
                graph: target,
                decorations,
            },
            witness,
        ))
    }

    /// No edge joins two distinct plain vertices.
    pub fn is_saturated(&self) -> bool {
        self.plain_plain_edges().is_empty()
    }

    /// Non-loop edges between two plain vertices.
    pub fn plain_plain_edges(&self) -> Vec<Edge> {
        self.graph
            .internal_edges()
            .into_iter()
            .filter(|&e| {
                let (u, w) = self.graph.endpoints(e);
                u != w && self.is_plain(u) && self.is_plain(w)
            })
            .collect()
    }

    /// A spanning forest of the subgraph induced on plain vertices, chosen
    /// greedily in edge order.
    pub fn plain_spanning_forest(&self) -> Vec<Edge> {
        let mut uf = UnionFind::new(self.num_vertices());
        self.plain_plain_edges()
            .into_iter()
            .filter(|&e| {
                let (u, w) = self.graph.endpoints(e);
                uf.union(u, w)
            })
            .collect()
    }

    /// Every spanning forest of the subgraph induced on plain vertices.
    pub fn plain_spanning_forests(&self) -> Vec<Vec<Edge>> {
        let candidates = self.plain_plain_edges();
        let size = self.plain_spanning_forest().len();
        let mut out = Vec::new();
        let mut chosen = Vec::new();
        self.forests_from(&candidates, 0, size, &mut chosen, &mut out);
        out
    }

    fn forests_from(
        &self,
        cands: &[Edge],
        i: usize,
        size: usize,
        chosen: &mut Vec<Edge>,
        out: &mut Vec<Vec<Edge>>,
    ) {
        if chosen.len() == size {
            out.push(chosen.clone());
            return;
        }
        if cands.len() - i < size - chosen.len() {
            return;
        }
        let mut uf = UnionFind::new(self.num_vertices());
        let acyclic_with = |e: Edge, uf: &mut UnionFind| {
            for c in chosen.iter() {
                let (u, w) = self.graph.endpoints(*c);
                uf.union(u, w);
            }
            let (u, w) = self.graph.endpoints(e);
            uf.union(u, w)
        };
        if acyclic_with(cands[i], &mut uf) {
            chosen.push(cands[i]);
            self.forests_from(cands, i + 1, size, chosen, out);
            chosen.pop();
        }
        self.forests_from(cands, i + 1, size, chosen, out);
    }

    /// The saturation: contract a spanning forest of the plain subgraph.
    pub fn saturate(&self) -> DecoratedGraph {
        self.saturate_along(&self.plain_spanning_forest())
    }

    pub fn saturate_along(&self, forest: &[Edge]) -> DecoratedGraph {
        self.contract(forest).expect("forest edges are internal").0
    }

    pub fn invariant_i(&self) -> InvariantI {
        let val = self.graph.valences();
        let genus: i64 = self.decorations.iter().map(|d| d.genus as i64).sum();
        let non_plain: Vec<Vertex> = (0..self.num_vertices())
            .filter(|&v| !self.is_plain(v))
            .collect();
        let valence: i64 = non_plain.iter().map(|&v| val[v] as i64).sum();
        (genus, -(non_plain.len() as i64), valence)
    }

    pub fn to_json(&self) -> DecoratedJson {
        DecoratedJson {
            graph: self.graph.to_json(),
            genus: self.decorations.iter().map(|d| d.genus).collect(),
            class: self.decorations.iter().map(|d| d.class.0.clone()).collect(),
        }
    }

    pub fn from_json(json: &DecoratedJson, monoid: &CurveClassMonoid) -> Result<Self> {
        let graph = HalfEdgeGraph::from_json(&json.graph)?;
        if json.genus.len() != graph.num_vertices() || json.class.len() != graph.num_vertices() {
            return Err(Error::InvalidGraph(
                "decoration arrays must match the vertices".into(),
            ));
        }
        let decorations = json
            .genus
            .iter()
            .zip(&json.class)
            .map(|(&g, c)| {
                Ok(VertexDecoration {
                    genus: g,
                    class: monoid.class(c.clone())?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(graph, decorations)
    }

    pub fn to_dot(&self) -> String {
        let captions: Vec<String> = self.decorations.iter().map(|d| d.to_string()).collect();
        self.graph.to_dot(Some(&captions))
    }
}

/// JSON form of a decorated graph: the plain graph schema plus per-vertex
/// genus and class arrays.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecoratedJson {
    pub graph: GraphJson,
    pub genus: Vec<u32>,
    pub class: Vec<Vec<u32>>,
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::graph::GraphBuilder;

    pub(crate) fn dec(genus: u32, class: u32) -> VertexDecoration {
        VertexDecoration {
            genus,
            class: CurveClass(vec![class]),
        }
    }

    fn one_vertex(genus: u32, class: u32, legs: u32) -> DecoratedGraph {
        let mut b = GraphBuilder::with_vertices(1);
        for l in 1..=legs {
            b.add_leg(0, Some(l));
        }
        DecoratedGraph::new(b.build().unwrap(), vec![dec(genus, class)]).unwrap()
    }

    #[test]
    fn stability_examples() {
        assert!(one_vertex(0, 0, 3).is_stable());
        assert!(!one_vertex(0, 0, 2).is_stable());
        assert!(one_vertex(1, 0, 1).is_stable());
        assert!(!one_vertex(1, 0, 0).is_stable());
        assert!(one_vertex(0, 1, 0).is_stable());
    }

    #[test]
    fn saturating_two_plain_vertices() {
        let mut b = GraphBuilder::with_vertices(2);
        b.add_edge(0, 1);
        b.add_leg(0, Some(1));
        b.add_leg(0, Some(2));
        b.add_leg(1, Some(3));
        b.add_leg(1, Some(4));
        let d = DecoratedGraph::new(b.build().unwrap(), vec![dec(0, 0), dec(0, 0)]).unwrap();
        assert!(!d.is_saturated());
        let s = d.saturate();
        assert!(s.is_saturated());
        assert_eq!(s.certificate(), one_vertex(0, 0, 4).certificate());
        assert_eq!(s.saturate().certificate(), s.certificate());
    }

    #[test]
    fn loop_contraction_raises_genus_and_invariant() {
        let mut b = GraphBuilder::with_vertices(1);
        let (x, y) = b.add_edge(0, 0);
        b.add_leg(0, Some(1));
        let d = DecoratedGraph::new(b.build().unwrap(), vec![dec(0, 0)]).unwrap();
        let (c, _) = d.contract(&[Edge::new(x, y)]).unwrap();
        assert_eq!(c.decoration(0).genus, 1);
        assert_eq!(c.total_genus(), d.total_genus());
        assert!(d.invariant_i() < c.invariant_i());
    }

    #[test]
    fn plain_to_non_plain_contraction_moves_third_coordinate() {
        // Plain vertex of valence m = 4 (three legs and the edge) glued to a
        // decorated vertex.
        let mut b = GraphBuilder::with_vertices(2);
        let (x, y) = b.add_edge(0, 1);
        for l in 1..=3 {
            b.add_leg(0, Some(l));
        }
        b.add_leg(1, Some(4));
        let d = DecoratedGraph::new(b.build().unwrap(), vec![dec(0, 0), dec(0, 1)]).unwrap();
        let (c, _) = d.contract(&[Edge::new(x, y)]).unwrap();
        let (before, after) = (d.invariant_i(), c.invariant_i());
        assert_eq!((before.0, before.1), (after.0, after.1));
        assert_eq!(after.2, before.2 + 4 - 2);
    }

    #[test]
    fn single_plain_vertex_invariant() {
        assert_eq!(one_vertex(0, 0, 4).invariant_i(), (0, 0, 0));
    }

    #[test]
    fn json_round_trip() {
        let d = one_vertex(1, 2, 2);
        let m = CurveClassMonoid::default();
        let back = DecoratedGraph::from_json(&d.to_json(), &m).unwrap();
        assert_eq!(back, d);
    }
}
