//! Counting bounds on bound half-edges and plain vertices, via the bipartite
//! graph `G'` on decorated vertices and `~` classes.

use num_rational::Ratio;
use serde::Serialize;

use super::classify::{classify_half_edges, HalfEdgeClassification, HalfEdgeTag};
use crate::decorated::{CurveClassMonoid, DecoratedGraph};
use crate::error::{Error, Result};
use crate::graph::{GraphBuilder, HalfEdgeGraph};

/// `G'`: vertices `0..k` are the decorated vertices of `d` in increasing
/// order, followed by one vertex per `~` class; one edge per bound half-edge.
pub fn bipartite_contraction_graph(d: &DecoratedGraph) -> Result<HalfEdgeGraph> {
    let c = classify_half_edges(d);
    bipartite_from(d, &c)
}

fn bipartite_from(d: &DecoratedGraph, c: &HalfEdgeClassification) -> Result<HalfEdgeGraph> {
    if c.classes.is_empty() {
        return Err(Error::Precondition("graph has no bound half-edges".into()));
    }
    let decorated: Vec<usize> = (0..d.num_vertices())
        .filter(|&v| !d.is_undecorated(v))
        .collect();
    let mut index = vec![usize::MAX; d.num_vertices()];
    for (i, &v) in decorated.iter().enumerate() {
        index[v] = i;
    }
    let mut b = GraphBuilder::with_vertices(decorated.len() + c.classes.len());
    for (k, class) in c.classes.iter().enumerate() {
        for &h in class {
            b.add_edge(index[d.graph().vertex_of(h)], decorated.len() + k);
        }
    }
    b.build()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundHalfEdgeReport {
    pub bound: usize,
    pub decorated: usize,
    pub class_sizes: Vec<usize>,
    /// `V - E` of `G'`.
    pub euler_characteristic: i64,
    /// The same number from the class-size formula, kept as a fraction.
    pub euler_formula: (i64, i64),
    pub genus: usize,
    pub degree: u64,
    /// `2g - 2 + 2 L.alpha`.
    pub limit: i64,
    pub ok: bool,
}

/// Count bound half-edges and compare with `2g - 2 + 2 L.alpha`, together
/// with `chi(G') >= 1 - g`.
pub fn bound_halfedge_bound(
    d: &DecoratedGraph,
    monoid: &CurveClassMonoid,
) -> Result<BoundHalfEdgeReport> {
    let c = classify_half_edges(d);
    let gp = bipartite_from(d, &c)?;
    let bound = c.count(HalfEdgeTag::Bound);
    let decorated = gp.num_vertices() - c.classes.len();
    let euler = gp.num_vertices() as i64 - gp.num_internal_edges() as i64;
    let mut formula = Ratio::from_integer(decorated as i64);
    for class in &c.classes {
        for _ in class {
            formula += Ratio::new(1, class.len() as i64) - 1;
        }
    }
    let genus = d.total_genus();
    let degree = monoid.degree(&d.total_class());
    let limit = 2 * genus as i64 - 2 + 2 * degree as i64;
    let ok =
        bound as i64 <= limit && euler >= 1 - genus as i64 && formula == Ratio::from_integer(euler);
    Ok(BoundHalfEdgeReport {
        bound,
        decorated,
        class_sizes: c.classes.iter().map(Vec::len).collect(),
        euler_characteristic: euler,
        euler_formula: (*formula.numer(), *formula.denom()),
        genus,
        degree,
        limit,
        ok,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PlainBoundReport {
    pub plain: usize,
    pub free: usize,
    /// `max(i + 2g + 2 L.alpha, 1)`.
    pub limit: usize,
    pub ok: bool,
}

/// Compare the number of plain vertices of a saturated graph with at most
/// `i` free half-edges against `max(i + 2g + 2 L.alpha, 1)`.
pub fn check_plain_bound(
    d: &DecoratedGraph,
    i: usize,
    monoid: &CurveClassMonoid,
) -> Result<PlainBoundReport> {
    if !d.is_saturated() {
        return Err(Error::Precondition("graph is not saturated".into()));
    }
    let free = classify_half_edges(d).count(HalfEdgeTag::Free);
    if free > i {
        return Err(Error::Precondition(format!(
            "graph has {free} free half-edges, more than {i}"
        )));
    }
    let plain = d.plain_vertices().len();
    let degree = monoid.degree(&d.total_class()) as usize;
    let limit = (i + 2 * d.total_genus() + 2 * degree).max(1);
    Ok(PlainBoundReport {
        plain,
        free,
        limit,
        ok: plain <= limit,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decorated::tests::dec;
    use crate::halfedge::classify::tests::build;

    #[test]
    fn two_decorated_vertices_meet_the_bound_exactly() {
        let d = build(vec![dec(0, 1), dec(0, 1)], &[(0, 1)], &[0]);
        let r = bound_halfedge_bound(&d, &CurveClassMonoid::default()).unwrap();
        assert_eq!(r.bound, 2);
        assert_eq!(r.limit, 2);
        assert!(r.ok);
    }

    #[test]
    fn star_class_euler_characteristic() {
        // Undecorated genus-1 centre joined to three decorated vertices.
        let d = build(
            vec![dec(1, 0), dec(0, 1), dec(0, 1), dec(0, 1)],
            &[(0, 1), (0, 2), (0, 3)],
            &[],
        );
        let r = bound_halfedge_bound(&d, &CurveClassMonoid::default()).unwrap();
        assert_eq!(r.class_sizes, vec![3]);
        // 3 decorated + 3 * (1/3 - 1) = 1.
        assert_eq!(r.euler_formula, (1, 1));
        assert_eq!(r.euler_characteristic, 1);
        let gp = bipartite_contraction_graph(&d).unwrap();
        assert_eq!(gp.num_vertices(), 4);
        assert_eq!(gp.num_internal_edges(), 3);
    }

    #[test]
    fn rejects_graph_without_bound_half_edges() {
        let d = build(vec![dec(0, 1)], &[], &[0]);
        assert!(bipartite_contraction_graph(&d).is_err());
    }

    #[test]
    fn single_plain_vertex_uses_the_floor_of_one() {
        let d = build(vec![dec(0, 0)], &[(0, 0)], &[0]);
        let r = check_plain_bound(&d, 0, &CurveClassMonoid::default()).unwrap();
        assert_eq!(r.plain, 1);
        assert!(r.ok);
        let unsat = build(vec![dec(0, 0), dec(0, 0)], &[(0, 1)], &[0, 0, 1, 1]);
        assert!(check_plain_bound(&unsat, 5, &CurveClassMonoid::default()).is_err());
    }
}
