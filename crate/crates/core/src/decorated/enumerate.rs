//! Enumeration of `Stab(h, n, beta)` by repeatedly splitting vertices.
//!
//! Contracting one edge of a stable graph gives a stable graph, so every
//! stable graph with `k + 1` edges is a one-edge split of one with `k`
//! edges, and the one-vertex graph is the unique graph with no edges. The
//! enumeration therefore grows level by level from the one-vertex graph and
//! deduplicates each level by canonical certificate.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use super::graph::{DecoratedCertificate, DecoratedGraph, VertexDecoration};
use super::monoid::{CurveClass, CurveClassMonoid};
use crate::error::{Error, Result};
use crate::graph::{GraphBuilder, HalfEdgeGraph};

pub const DEFAULT_CEILING: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationConfig {
    /// Maximum number of candidate graphs generated before aborting.
    pub ceiling: usize,
    /// Label legs `1..=n`. When false the legs are interchangeable, which
    /// enumerates leg shapes for label-invariant sweeps.
    pub labeled_legs: bool,
    /// Keep only saturated graphs. Contracting an edge of a saturated graph
    /// never creates adjacent plain vertices, so `Q(h, n, beta)` is closed
    /// under the same level-by-level growth.
    pub saturated_only: bool,
}

impl Default for EnumerationConfig {
    fn default() -> Self {
        Self {
            ceiling: DEFAULT_CEILING,
            labeled_legs: true,
            saturated_only: false,
        }
    }
}

/// The isomorphism classes of a `Stab(h, n, beta)`, sorted by edge count and
/// then by certificate.
#[derive(Clone, Debug)]
pub struct StabEnumeration {
    pub graphs: Vec<DecoratedGraph>,
    pub certificates: Vec<DecoratedCertificate>,
    index: BTreeMap<DecoratedCertificate, usize>,
}

impl StabEnumeration {
    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    pub fn index_of(&self, cert: &DecoratedCertificate) -> Option<usize> {
        self.index.get(cert).copied()
    }

    pub(crate) fn from_graphs(graphs: Vec<(DecoratedCertificate, DecoratedGraph)>) -> Self {
        let mut graphs = graphs;
        graphs.sort_by(|a, b| {
            let ea = a.1.graph().num_internal_edges();
            let eb = b.1.graph().num_internal_edges();
            ea.cmp(&eb).then_with(|| a.0.cmp(&b.0))
        });
        let index = graphs
            .iter()
            .enumerate()
            .map(|(i, (c, _))| (c.clone(), i))
            .collect();
        let (certificates, graphs) = graphs.into_iter().unzip();
        Self {
            graphs,
            certificates,
            index,
        }
    }
}

/// The one-vertex graph of genus `h`, class `beta` and `n` legs.
pub fn one_vertex_graph(h: u32, n: u32, beta: &CurveClass, labeled: bool) -> DecoratedGraph {
    let mut b = GraphBuilder::with_vertices(1);
    for l in 1..=n {
        b.add_leg(0, labeled.then_some(l));
    }
    DecoratedGraph::new(
        b.build().expect("legs on one vertex"),
        vec![VertexDecoration {
            genus: h,
            class: beta.clone(),
        }],
    )
    .expect("one decoration")
}

/// Upper bound on the number of vertices of a graph in `Stab(h, n, beta)`
/// from the Euler characteristic: the at most `deg + h + n` vertices that are
/// non-plain or carry a leg contribute at most 1 each to `chi >= 1 - h`, and
/// every other vertex contributes at most `-1/2`.
pub fn vertex_bound(h: u32, n: u32, degree: u64) -> u64 {
    let special = degree + h as u64 + n as u64;
    let others = 2 * (special + h as u64).saturating_sub(1);
    (special + others).max(1)
}

/// All one-edge splits of `g` that are stable.
pub fn stable_splits(g: &DecoratedGraph) -> Vec<DecoratedGraph> {
    let graph = g.graph();
    let mut out = Vec::new();
    let blocks = graph.vertex_blocks();
    for (v, block) in blocks.iter().enumerate() {
        let d = g.decoration(v);
        if d.genus >= 1 {
            let mut decs = g.decorations().to_vec();
            decs[v].genus -= 1;
            if decs[v].is_stable_with_valence(block.len() + 2) {
                let mut inv = graph.involution().to_vec();
                let mut vof = graph.vertex_map().to_vec();
                let mut labels = graph.labels().to_vec();
                let a = inv.len();
                inv.extend([a + 1, a]);
                vof.extend([v, v]);
                labels.extend([None, None]);
                let ng = HalfEdgeGraph::new(inv, vof, graph.num_vertices(), labels)
                    .expect("loop insertion keeps the graph valid");
                out.push(DecoratedGraph::new(ng, decs).expect("decorations match"));
            }
        }
        let summands = d.class.summands();
        let k = block.len();
        for mask in 0u64..(1u64 << k) {
            let stay = mask.count_ones() as usize;
            for g1 in 0..=d.genus {
                for a1 in &summands {
                    let first = VertexDecoration {
                        genus: g1,
                        class: a1.clone(),
                    };
                    let second = VertexDecoration {
                        genus: d.genus - g1,
                        class: d.class.checked_sub(a1).expect("summand"),
                    };
                    if !first.is_stable_with_valence(stay + 1)
                        || !second.is_stable_with_valence(k - stay + 1)
                    {
                        continue;
                    }
                    let new_v = graph.num_vertices();
                    let mut inv = graph.involution().to_vec();
                    let mut vof = graph.vertex_map().to_vec();
                    let mut labels = graph.labels().to_vec();
                    for (bit, &h) in block.iter().enumerate() {
                        if mask & (1 << bit) == 0 {
                            vof[h] = new_v;
                        }
                    }
                    let a = inv.len();
                    inv.extend([a + 1, a]);
                    vof.extend([v, new_v]);
                    labels.extend([None, None]);
                    let ng = HalfEdgeGraph::new(inv, vof, new_v + 1, labels)
                        .expect("vertex split keeps the graph valid");
                    let mut decs = g.decorations().to_vec();
                    decs[v] = first;
                    decs.push(second);
                    out.push(DecoratedGraph::new(ng, decs).expect("decorations match"));
                }
            }
        }
    }
    out
}

/// Enumerate `Stab(h, n, beta)` up to isomorphism.
pub fn enumerate_stab(
    h: u32,
    n: u32,
    beta: &CurveClass,
    monoid: &CurveClassMonoid,
    config: &EnumerationConfig,
) -> Result<StabEnumeration> {
    if beta.rank() != monoid.rank() {
        return Err(Error::Precondition(
            "beta rank differs from the monoid rank".into(),
        ));
    }
    let root = one_vertex_graph(h, n, beta, config.labeled_legs);
    if !root.is_stable() {
        return Ok(StabEnumeration::from_graphs(Vec::new()));
    }
    let mut all: Vec<(DecoratedCertificate, DecoratedGraph)> =
        vec![(root.certificate(), root.clone())];
    let mut level = vec![root];
    let candidates = AtomicUsize::new(1);
    while !level.is_empty() {
        // Dedup while generating; each class keeps the representative that
        // comes first in (parent, split) order so the output is deterministic.
        type Found = BTreeMap<DecoratedCertificate, ((usize, usize), DecoratedGraph)>;
        let found: Found = level
            .par_iter()
            .enumerate()
            .fold(Found::new, |mut found, (p, g)| {
                if candidates.load(Ordering::Relaxed) > config.ceiling {
                    return found;
                }
                for (k, s) in stable_splits(g).into_iter().enumerate() {
                    if config.saturated_only && !s.is_saturated() {
                        continue;
                    }
                    candidates.fetch_add(1, Ordering::Relaxed);
                    let c = s.certificate();
                    match found.get(&c) {
                        Some((o, _)) if *o <= (p, k) => {}
                        _ => {
                            found.insert(c, ((p, k), s));
                        }
                    }
                }
                found
            })
            .reduce(Found::new, |mut a, b| {
                for (c, (o, g)) in b {
                    match a.get(&c) {
                        Some((oa, _)) if *oa <= o => {}
                        _ => {
                            a.insert(c, (o, g));
                        }
                    }
                }
                a
            });
        if candidates.load(Ordering::Relaxed) > config.ceiling {
            return Err(Error::ResourceCeiling {
                ceiling: config.ceiling,
                context: format!("enumerating Stab({h}, {n}, {beta})"),
            });
        }
        let next: BTreeMap<DecoratedCertificate, DecoratedGraph> =
            found.into_iter().map(|(c, (_, g))| (c, g)).collect();
        level = next.values().cloned().collect();
        all.extend(next);
    }
    Ok(StabEnumeration::from_graphs(all))
}
