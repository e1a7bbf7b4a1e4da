//! The external-edge bound for genus-0 trees of excess `i`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{generate, HalfEdgeGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TreeCondition {
    NotATree,
    LowValence,
    WrongExcess,
    TrivalentWithTwoLegs,
    AdjacentTrivalentWithLegs,
}

/// First failed hypothesis, if any.
pub fn tree_condition_failure(t: &HalfEdgeGraph, i: usize) -> Option<TreeCondition> {
    if !t.is_connected() || t.betti_1() != 0 {
        return Some(TreeCondition::NotATree);
    }
    let val = t.valences();
    if val.iter().any(|&n| n < 3) {
        return Some(TreeCondition::LowValence);
    }
    if val.iter().map(|&n| n - 3).sum::<usize>() != i {
        return Some(TreeCondition::WrongExcess);
    }
    let legs: Vec<usize> = (0..t.num_vertices()).map(|v| t.legs_at(v)).collect();
    if (0..t.num_vertices()).any(|v| val[v] == 3 && legs[v] >= 2) {
        return Some(TreeCondition::TrivalentWithTwoLegs);
    }
    let trivalent_leg = |v: usize| val[v] == 3 && legs[v] >= 1;
    if t.internal_edges().into_iter().any(|e| {
        let (u, w) = t.endpoints(e);
        trivalent_leg(u) && trivalent_leg(w)
    }) {
        return Some(TreeCondition::AdjacentTrivalentWithLegs);
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TreeBoundReport {
    pub external_count: usize,
    /// Trivalent vertices without legs.
    pub m30: usize,
    /// Trivalent vertices with one leg.
    pub m31: usize,
    /// Vertices of valence above 3.
    pub s: usize,
    pub i: usize,
    /// `m30 <= s - 2`; only asserted for trees with more than one vertex.
    pub first_inequality: bool,
    /// `2 m31 <= 3 m30 + 3 s + i`.
    pub second_inequality: bool,
    /// `external_count <= 13 i / 2`.
    pub external_bound: bool,
    pub ok: bool,
}

pub fn check_tree_bound(t: &HalfEdgeGraph, i: usize) -> Result<TreeBoundReport> {
    if let Some(c) = tree_condition_failure(t, i) {
        return Err(Error::Precondition(format!(
            "tree hypothesis failed: {c:?}"
        )));
    }
    let val = t.valences();
    let mut m30 = 0;
    let mut m31 = 0;
    let mut s = 0;
    for (v, &valence) in val.iter().enumerate() {
        match (valence, t.legs_at(v)) {
            (3, 0) => m30 += 1,
            (3, _) => m31 += 1,
            _ => s += 1,
        }
    }
    let external_count = t.num_legs();
    let first_inequality = t.num_vertices() == 1 || m30 + 2 <= s;
    let second_inequality = 2 * m31 <= 3 * m30 + 3 * s + i;
    let external_bound = 2 * external_count <= 13 * i;
    Ok(TreeBoundReport {
        external_count,
        m30,
        m31,
        s,
        i,
        first_inequality,
        second_inequality,
        external_bound,
        ok: first_inequality && second_inequality && external_bound,
    })
}

/// Every leg-decorated tree with at most `max_vertices` vertices and excess
/// exactly `i` that satisfies the hypotheses, up to isomorphism, with
/// unlabelled legs.
pub fn qualifying_trees(i: usize, max_vertices: usize) -> Vec<HalfEdgeGraph> {
    tree_shapes(i, max_vertices)
        .into_iter()
        .filter(|t| tree_condition_failure(t, i).is_none())
        .collect()
}

/// Every tree with unlabelled legs, all valences at least 3, excess
/// exactly `i` and at most `max_vertices` vertices, up to isomorphism.
pub fn tree_shapes(i: usize, max_vertices: usize) -> Vec<HalfEdgeGraph> {
    let mut out = Vec::new();
    for level in generate::free_trees(max_vertices) {
        for tree in level {
            let deg = generate::internal_degrees(&tree);
            let mut extra = vec![0usize; tree.num_vertices()];
            distribute(&tree, &deg, i, 0, &mut extra, &mut out);
        }
    }
    let mut seen = std::collections::BTreeSet::new();
    out.retain(|t| seen.insert(crate::graph::canonical_form(t, &vec![(); t.num_vertices()])));
    out
}

fn distribute(
    tree: &HalfEdgeGraph,
    deg: &[usize],
    budget: usize,
    v: usize,
    extra: &mut Vec<usize>,
    out: &mut Vec<HalfEdgeGraph>,
) {
    if v == deg.len() {
        if budget != 0 {
            return;
        }
        let mut inv = tree.involution().to_vec();
        let mut vof = tree.vertex_map().to_vec();
        for (u, &d) in deg.iter().enumerate() {
            let valence = 3 + extra[u];
            for _ in d..valence {
                inv.push(inv.len());
                vof.push(u);
            }
        }
        let labels = vec![None; inv.len()];
        out.push(HalfEdgeGraph::new(inv, vof, deg.len(), labels).expect("legs added to a tree"));
        return;
    }
    let lo = deg[v].saturating_sub(3);
    for x in lo..=budget {
        extra[v] = x;
        distribute(tree, deg, budget - x, v + 1, extra, out);
    }
    extra[v] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphBuilder;

    #[test]
    fn excess_zero_has_no_qualifying_tree() {
        assert!(qualifying_trees(0, 8).is_empty());
    }

    #[test]
    fn excess_two_trees_obey_the_bound() {
        let trees = qualifying_trees(2, 10);
        assert!(!trees.is_empty());
        for t in &trees {
            let r = check_tree_bound(t, 2).unwrap();
            assert!(r.ok, "{r:?}");
            assert!(r.external_count <= 13);
        }
    }

    #[test]
    fn names_the_failed_hypothesis() {
        let mut b = GraphBuilder::with_vertices(1);
        for _ in 0..3 {
            b.add_leg(0, None);
        }
        let tripod = b.build().unwrap();
        assert_eq!(
            tree_condition_failure(&tripod, 0),
            Some(TreeCondition::TrivalentWithTwoLegs)
        );
        assert_eq!(
            tree_condition_failure(&tripod, 1),
            Some(TreeCondition::WrongExcess)
        );
        let mut b = GraphBuilder::with_vertices(2);
        b.add_edge(0, 1);
        for v in [0, 0, 1, 1, 1] {
            b.add_leg(v, None);
        }
        let t = b.build().unwrap();
        assert_eq!(
            tree_condition_failure(&t, 1),
            Some(TreeCondition::TrivalentWithTwoLegs)
        );
    }

    #[test]
    fn single_vertex_of_higher_valence_qualifies() {
        let mut b = GraphBuilder::with_vertices(1);
        for _ in 0..5 {
            b.add_leg(0, None);
        }
        let r = check_tree_bound(&b.build().unwrap(), 2).unwrap();
        assert_eq!(r.external_count, 5);
        assert!(r.ok);
    }
}
