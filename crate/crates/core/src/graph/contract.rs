use std::collections::BTreeSet;

use super::halfedge::{Edge, HalfEdge, HalfEdgeGraph, UnionFind, Vertex};
use crate::error::{Error, Result};

/// Witness of a contraction `source -> target`: the embedding of the
/// target's half-edges into the source's, and the induced vertex map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Contraction {
    pub source: HalfEdgeGraph,
    pub target: HalfEdgeGraph,
    /// `embedding[j]` is the source half-edge that target half-edge `j` came from.
    pub embedding: Vec<HalfEdge>,
    /// `vertex_map[v]` is the target vertex that source vertex `v` collapses into.
    pub vertex_map: Vec<Vertex>,
}

impl Contraction {
    /// Checks the defining conditions of a contraction of graphs.
    pub fn validate(&self) -> Result<()> {
        let (s, t, iota) = (&self.source, &self.target, &self.embedding);
        let bad = |m: &str| Err(Error::InvalidGraph(format!("contraction: {m}")));
        if iota.len() != t.num_half_edges() {
            return bad("embedding has wrong length");
        }
        let image: BTreeSet<HalfEdge> = iota.iter().copied().collect();
        if image.len() != iota.len() || image.iter().any(|&h| h >= s.num_half_edges()) {
            return bad("embedding is not injective");
        }
        for (j, &h) in iota.iter().enumerate() {
            if s.sigma(h) != iota[t.sigma(j)] {
                return bad("embedding does not commute with the involutions");
            }
            if t.label(j) != s.label(h) {
                return bad("embedding does not preserve labels");
            }
        }
        if s.num_legs() != t.num_legs() {
            return bad("embedding is not a bijection on legs");
        }
        if self.vertex_map.len() != s.num_vertices()
            || self.vertex_map.iter().any(|&v| v >= t.num_vertices())
        {
            return bad("vertex map out of range");
        }
        let hit: BTreeSet<Vertex> = self.vertex_map.iter().copied().collect();
        if hit.len() != t.num_vertices() {
            return bad("vertex map is not surjective");
        }
        for (j, &h) in iota.iter().enumerate() {
            if self.vertex_map[s.vertex_of(h)] != t.vertex_of(j) {
                return bad("vertex map disagrees with the embedding");
            }
        }
        // For each contracted edge {h1, h2}: target half-edges sitting with h1
        // and with h2 must land on a common vertex.
        for e in s.internal_edges() {
            if image.contains(&e.0) {
                continue;
            }
            let (u, w) = s.endpoints(e);
            let at = |v: Vertex| -> Vec<HalfEdge> {
                (0..iota.len())
                    .filter(|&j| s.vertex_of(iota[j]) == v)
                    .collect()
            };
            for j1 in at(u) {
                for j2 in at(w) {
                    if t.vertex_of(j1) != t.vertex_of(j2) {
                        return bad("contracted edge joins distinct target vertices");
                    }
                }
            }
        }
        Ok(())
    }
}

/// Contracts the internal edges `edges` of `g`: vertices are merged along
/// non-loop edges, and the half-edges of every contracted edge are removed.
/// Target vertices are numbered by their smallest source vertex.
pub fn contract_edges(g: &HalfEdgeGraph, edges: &[Edge]) -> Result<(HalfEdgeGraph, Contraction)> {
    let mut keep = vec![true; g.num_half_edges()];
    let mut uf = UnionFind::new(g.num_vertices());
    for &Edge(a, b) in edges {
        if a >= g.num_half_edges() || b >= g.num_half_edges() || a == b || g.sigma(a) != b {
            return Err(Error::NotInternalEdge(a, b));
        }
        keep[a] = false;
        keep[b] = false;
        uf.union(g.vertex_of(a), g.vertex_of(b));
    }
    let mut vertex_map = vec![usize::MAX; g.num_vertices()];
    let mut count = 0;
    for v in 0..g.num_vertices() {
        let r = uf.find(v);
        if vertex_map[r] == usize::MAX {
            vertex_map[r] = count;
            count += 1;
        }
        vertex_map[v] = vertex_map[r];
    }
    let (restricted, embedding) = g.restrict(&keep);
    let target = restricted.remap_vertices(&vertex_map, count);
    let witness = Contraction {
        source: g.clone(),
        target: target.clone(),
        embedding,
        vertex_map,
    };
    Ok((target, witness))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphBuilder;

    #[test]
    fn contract_single_edge_merges_vertices() {
        let mut b = GraphBuilder::with_vertices(2);
        let (a, c) = b.add_edge(0, 1);
        b.add_leg(0, Some(1));
        b.add_leg(1, Some(2));
        b.add_leg(1, Some(3));
        let g = b.build().unwrap();
        let (t, w) = contract_edges(&g, &[Edge::new(a, c)]).unwrap();
        w.validate().unwrap();
        assert_eq!(t.num_vertices(), 1);
        assert_eq!(t.valence(0), 3);
    }

    #[test]
    fn contract_nothing_is_identity() {
        let mut b = GraphBuilder::with_vertices(2);
        b.add_edge(0, 1);
        b.add_edge(0, 0);
        let g = b.build().unwrap();
        let (t, w) = contract_edges(&g, &[]).unwrap();
        w.validate().unwrap();
        assert_eq!(t, g);
        assert_eq!(w.embedding, (0..g.num_half_edges()).collect::<Vec<_>>());
    }

    #[test]
    fn triangle_two_edges_gives_loop() {
        let mut b = GraphBuilder::with_vertices(3);
        let e1 = b.add_edge(0, 1);
        let e2 = b.add_edge(1, 2);
        b.add_edge(2, 0);
        let g = b.build().unwrap();
        let (t, w) = contract_edges(&g, &[Edge::new(e1.0, e1.1), Edge::new(e2.0, e2.1)]).unwrap();
        w.validate().unwrap();
        assert_eq!(t.num_vertices(), 1);
        assert_eq!(t.num_internal_edges(), 1);
        assert!(t.is_loop(t.internal_edges()[0]));
        assert_eq!(t.betti_1(), 1);
    }

    #[test]
    fn loop_contraction_deletes_half_edges() {
        let mut b = GraphBuilder::with_vertices(1);
        let (a, c) = b.add_edge(0, 0);
        b.add_leg(0, Some(1));
        let g = b.build().unwrap();
        let (t, w) = contract_edges(&g, &[Edge::new(a, c)]).unwrap();
        w.validate().unwrap();
        assert_eq!(t.num_vertices(), 1);
        assert_eq!(t.num_half_edges(), 1);
        assert_eq!(t.betti_1(), 0);
    }

    #[test]
    fn rejects_legs() {
        let mut b = GraphBuilder::with_vertices(1);
        let l = b.add_leg(0, Some(1));
        let g = b.build().unwrap();
        assert!(matches!(
            contract_edges(&g, &[Edge(l, l)]),
            Err(Error::NotInternalEdge(..))
        ));
    }
}
