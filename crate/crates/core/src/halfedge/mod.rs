//! Free and bound half-edges and the counting bounds built on them. Reduced
//! graphs label the orbits under surjections of leg sets.

mod bounds;
mod classify;
mod factor;
mod reduce;
mod tree;

pub use bounds::{
    bipartite_contraction_graph, bound_halfedge_bound, check_plain_bound, BoundHalfEdgeReport,
    PlainBoundReport,
};
pub use classify::{
    classify_half_edges, classify_half_edges_with, count_free, vanishing_predicate,
    HalfEdgeClassification, HalfEdgeTag, PathSemantics,
};
pub use factor::{
    height_constant, stratum_factorization, HeightVariant, NFactor, StratumFactorization, YFactor,
};
pub use reduce::{
    is_reduced, orbit_decompose, pullback, reduce_graph, surjections, Orbit, ReducedGraph,
};
pub use tree::{
    check_tree_bound, qualifying_trees, tree_condition_failure, tree_shapes, TreeBoundReport,
    TreeCondition,
};
