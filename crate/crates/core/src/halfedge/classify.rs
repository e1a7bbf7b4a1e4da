//! Free and bound half-edges and the `~` relation on bound half-edges.

use serde::{Deserialize, Serialize};

use crate::decorated::DecoratedGraph;
use crate::graph::{HalfEdge, UnionFind, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum HalfEdgeTag {
    Free,
    Bound,
    PlainAdjacent,
}

/// How a path leaving a decorated vertex `v` along a half-edge `f` is allowed
/// to touch `v` again.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PathSemantics {
    /// Only interior vertices of a path count as passed through. A path that
    /// ends back at `v`, including the partner of a self-edge, makes `f`
    /// bound.
    #[default]
    Interior,
    /// Any later visit to `v` counts as passing through it, so only other
    /// decorated vertices can make `f` bound.
    Revisit,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HalfEdgeClassification {
    pub tags: Vec<HalfEdgeTag>,
    /// Number of free half-edges at each vertex.
    pub free_per_vertex: Vec<usize>,
    /// Classes of `~`, each sorted, ordered by smallest member.
    pub classes: Vec<Vec<HalfEdge>>,
}

impl HalfEdgeClassification {
    pub fn count(&self, tag: HalfEdgeTag) -> usize {
        self.tags.iter().filter(|&&t| t == tag).count()
    }

    pub fn bound(&self) -> Vec<HalfEdge> {
        (0..self.tags.len())
            .filter(|&h| self.tags[h] == HalfEdgeTag::Bound)
            .collect()
    }

    /// Index into `classes` for every bound half-edge.
    pub fn class_of(&self) -> Vec<Option<usize>> {
        let mut out = vec![None; self.tags.len()];
        for (c, members) in self.classes.iter().enumerate() {
            for &h in members {
                out[h] = Some(c);
            }
        }
        out
    }
}

/// Whether some path starting with the edge of `f` reaches a half-edge at a
/// decorated vertex without passing through `v = vertex(f)`.
fn reaches_decoration(d: &DecoratedGraph, f: HalfEdge, semantics: PathSemantics) -> bool {
    let g = d.graph();
    let v = g.vertex_of(f);
    let first = g.sigma(f);
    let w = g.vertex_of(first);
    let blocked = |x: Vertex| x == v && semantics == PathSemantics::Revisit;
    if !d.is_undecorated(w) {
        return !blocked(w);
    }
    let mut seen = vec![false; g.num_vertices()];
    seen[w] = true;
    let mut stack = vec![w];
    while let Some(x) = stack.pop() {
        for h in g.half_edges_at(x) {
            if g.is_leg(h) || h == first {
                continue;
            }
            let y = g.vertex_of(g.sigma(h));
            if !d.is_undecorated(y) {
                if !blocked(y) {
                    return true;
                }
                continue;
            }
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    false
}

pub fn classify_half_edges(d: &DecoratedGraph) -> HalfEdgeClassification {
    classify_half_edges_with(d, PathSemantics::default())
}

pub fn classify_half_edges_with(
    d: &DecoratedGraph,
    semantics: PathSemantics,
) -> HalfEdgeClassification {
    let g = d.graph();
    let n = g.num_half_edges();
    let tags: Vec<HalfEdgeTag> = (0..n)
        .map(|f| {
            let v = g.vertex_of(f);
            if d.is_plain(v) {
                HalfEdgeTag::PlainAdjacent
            } else if d.is_undecorated(v) || g.is_leg(f) || !reaches_decoration(d, f, semantics) {
                HalfEdgeTag::Free
            } else {
                HalfEdgeTag::Bound
            }
        })
        .collect();
    let mut free_per_vertex = vec![0; g.num_vertices()];
    for f in 0..n {
        if tags[f] == HalfEdgeTag::Free {
            free_per_vertex[g.vertex_of(f)] += 1;
        }
    }

    // Half-edges are nodes 0..n; node n + x stands for the undecorated vertex x.
    let mut uf = UnionFind::new(n + g.num_vertices());
    for h in 0..n {
        if g.is_leg(h) {
            continue;
        }
        let a = g.vertex_of(h);
        let b = g.vertex_of(g.sigma(h));
        if d.is_undecorated(a) && d.is_undecorated(b) {
            uf.union(n + a, n + b);
        } else if d.is_undecorated(b) {
            uf.union(h, n + b);
        } else if !d.is_undecorated(a) {
            uf.union(h, g.sigma(h));
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<HalfEdge>> = Default::default();
    for (h, &tag) in tags.iter().enumerate() {
        if tag == HalfEdgeTag::Bound {
            groups.entry(uf.find(h)).or_default().push(h);
        }
    }
    let mut classes: Vec<Vec<HalfEdge>> = groups.into_values().collect();
    classes.sort();
    HalfEdgeClassification {
        tags,
        free_per_vertex,
        classes,
    }
}

pub fn count_free(d: &DecoratedGraph) -> usize {
    classify_half_edges(d).count(HalfEdgeTag::Free)
}

/// True when the graph has more than `i` free half-edges, in which case its
/// degree-`i` contribution vanishes.
pub fn vanishing_predicate(d: &DecoratedGraph, i: usize) -> bool {
    count_free(d) > i
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::decorated::tests::dec;
    use crate::graph::GraphBuilder;

    pub(crate) fn build(
        decs: Vec<VertexDecoration>,
        edges: &[(usize, usize)],
        legs: &[usize],
    ) -> DecoratedGraph {
        let mut b = GraphBuilder::with_vertices(decs.len());
        for &(u, w) in edges {
            b.add_edge(u, w);
        }
        for (i, &v) in legs.iter().enumerate() {
            b.add_leg(v, Some(i as u32 + 1));
        }
        DecoratedGraph::new(b.build().unwrap(), decs).unwrap()
    }

    use crate::decorated::VertexDecoration;

    #[test]
    fn undecorated_genus_one_vertex_is_all_free() {
        let d = build(vec![dec(1, 0), dec(0, 1)], &[(0, 1)], &[0, 1]);
        let c = classify_half_edges(&d);
        for h in d.graph().half_edges_at(0) {
            assert_eq!(c.tags[h], HalfEdgeTag::Free);
        }
    }

    #[test]
    fn edge_between_decorated_vertices_is_one_bound_class() {
        let d = build(vec![dec(0, 1), dec(0, 1)], &[(0, 1)], &[0]);
        let c = classify_half_edges(&d);
        assert_eq!(c.tags[0], HalfEdgeTag::Bound);
        assert_eq!(c.tags[1], HalfEdgeTag::Bound);
        assert_eq!(c.tags[2], HalfEdgeTag::Free);
        assert_eq!(c.classes, vec![vec![0, 1]]);
    }

    #[test]
    fn plain_vertices_carry_no_free_half_edges() {
        let d = build(vec![dec(0, 0), dec(0, 1)], &[(0, 1)], &[0, 0]);
        let c = classify_half_edges(&d);
        assert_eq!(c.free_per_vertex[0], 0);
        assert_eq!(c.count(HalfEdgeTag::PlainAdjacent), 3);
        // The decorated end only reaches a plain dead end.
        assert_eq!(c.tags[1], HalfEdgeTag::Free);
    }

    #[test]
    fn self_edge_depends_on_semantics() {
        let d = build(vec![dec(0, 1)], &[(0, 0)], &[0]);
        let interior = classify_half_edges_with(&d, PathSemantics::Interior);
        assert_eq!(interior.count(HalfEdgeTag::Bound), 2);
        assert_eq!(interior.classes, vec![vec![0, 1]]);
        let revisit = classify_half_edges_with(&d, PathSemantics::Revisit);
        assert_eq!(revisit.count(HalfEdgeTag::Free), 3);
        assert!(revisit.classes.is_empty());
    }

    #[test]
    fn undecorated_bridge_joins_a_class() {
        // Two decorated vertices hanging off an undecorated genus-1 vertex.
        let d = build(
            vec![dec(0, 1), dec(1, 0), dec(0, 1)],
            &[(0, 1), (1, 2)],
            &[],
        );
        let c = classify_half_edges(&d);
        assert_eq!(c.classes, vec![vec![0, 3]]);
        assert_eq!(count_free(&d), 2);
        assert!(vanishing_predicate(&d, 1));
        assert!(!vanishing_predicate(&d, 2));
    }
}
