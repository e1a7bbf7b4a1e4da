//! Isomorphism-class generators for small unlabelled graphs.

use std::collections::BTreeMap;

use super::canon::{canonical_form, Certificate};
use super::halfedge::{Edge, GraphBuilder, HalfEdgeGraph};

fn rebuild(g: &HalfEdgeGraph, extra_vertices: usize, extra: &[(usize, usize)]) -> HalfEdgeGraph {
    let mut b = GraphBuilder::with_vertices(g.num_vertices() + extra_vertices);
    for e in g.internal_edges() {
        let (u, w) = g.endpoints(e);
        b.add_edge(u, w);
    }
    for &(u, w) in extra {
        b.add_edge(u, w);
    }
    b.build().expect("edges between existing vertices")
}

fn dedup(graphs: impl IntoIterator<Item = HalfEdgeGraph>) -> Vec<HalfEdgeGraph> {
    let mut seen: BTreeMap<Certificate<()>, HalfEdgeGraph> = BTreeMap::new();
    for g in graphs {
        let c = canonical_form(&g, &vec![(); g.num_vertices()]);
        seen.entry(c).or_insert(g);
    }
    seen.into_values().collect()
}

/// Connected multigraphs (loops allowed, no legs) up to isomorphism, grouped
/// by edge count `0..=max_edges`. Level 0 is the single vertex.
///
/// Every connected graph with at least one edge loses an edge and stays
/// connected either by deleting a non-bridge edge or a leaf with its edge,
/// so growing by "add an edge" and "attach a pendant vertex" is complete.
pub fn connected_multigraphs(max_edges: usize) -> Vec<Vec<HalfEdgeGraph>> {
    connected_multigraphs_within(max_edges, usize::MAX).expect("no ceiling")
}

/// As [`connected_multigraphs`], giving up with `None` once more than
/// `ceiling` candidate graphs have been generated.
pub fn connected_multigraphs_within(
    max_edges: usize,
    ceiling: usize,
) -> Option<Vec<Vec<HalfEdgeGraph>>> {
    let mut generated = 0usize;
    let mut levels = vec![vec![GraphBuilder::with_vertices(1).build().unwrap()]];
    for _ in 0..max_edges {
        let prev = levels.last().unwrap();
        let mut next = Vec::new();
        for g in prev {
            let n = g.num_vertices();
            for u in 0..n {
                for w in u..n {
                    next.push(rebuild(g, 0, &[(u, w)]));
                }
                next.push(rebuild(g, 1, &[(u, n)]));
            }
        }
        generated += next.len();
        if generated > ceiling {
            return None;
        }
        levels.push(dedup(next));
    }
    Some(levels)
}

/// Free (unlabelled) trees up to isomorphism, grouped by vertex count
/// `1..=max_vertices` (index 0 holds vertex count 1).
pub fn free_trees(max_vertices: usize) -> Vec<Vec<HalfEdgeGraph>> {
    if max_vertices == 0 {
        return Vec::new();
    }
    let mut levels = vec![vec![GraphBuilder::with_vertices(1).build().unwrap()]];
    for _ in 1..max_vertices {
        let prev = levels.last().unwrap();
        let mut next = Vec::new();
        for g in prev {
            let n = g.num_vertices();
            for u in 0..n {
                next.push(rebuild(g, 1, &[(u, n)]));
            }
        }
        levels.push(dedup(next));
    }
    levels
}

/// Internal degree of each vertex (loops count twice).
pub fn internal_degrees(g: &HalfEdgeGraph) -> Vec<usize> {
    let mut d = vec![0; g.num_vertices()];
    for Edge(a, b) in g.internal_edges() {
        d[g.vertex_of(a)] += 1;
        d[g.vertex_of(b)] += 1;
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_tree_counts() {
        // OEIS A000055.
        let counts: Vec<usize> = free_trees(10).iter().map(Vec::len).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47, 106]);
    }

    #[test]
    fn small_multigraph_counts() {
        let levels = connected_multigraphs(2);
        // 1 edge: a loop, or a single edge.
        assert_eq!(levels[1].len(), 2);
        // 2 edges: two loops; loop + pendant (loop at either end is the same
        // up to isomorphism); two parallel edges; path of length 2.
        assert_eq!(levels[2].len(), 4);
    }
}
