//! Half-edge graphs with contraction and canonical forms.

mod canon;
mod contract;
pub mod generate;
mod halfedge;

pub use canon::{
    automorphism_count, automorphisms, canonical_form, canonical_order, vertex_automorphisms,
    vertex_keys, Certificate, VertexKey,
};
pub use contract::{contract_edges, Contraction};
pub(crate) use halfedge::UnionFind;
pub use halfedge::{Edge, GraphBuilder, GraphJson, HalfEdge, HalfEdgeGraph, Vertex};
