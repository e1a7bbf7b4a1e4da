//! Stable decorated graphs over an abstract curve-class monoid, with the
//! enumeration of `Stab(h, n, beta)` and its contraction posets.

mod enumerate;
mod graph;
mod monoid;
mod poset;

pub use enumerate::{
    enumerate_stab, one_vertex_graph, stable_splits, vertex_bound, EnumerationConfig,
    StabEnumeration, DEFAULT_CEILING,
};
pub use graph::{
    DecoratedCertificate, DecoratedGraph, DecoratedJson, InvariantI, VertexDecoration,
};
pub use monoid::{CurveClass, CurveClassMonoid};
pub use poset::{
    build_q_poset, build_stab_poset, single_edge_contractions, stab_and_q, ContractionPoset,
    PosetJson, QPoset,
};

#[cfg(test)]
pub(crate) use graph::tests;
