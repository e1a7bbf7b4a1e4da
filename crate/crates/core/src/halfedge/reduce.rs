//! Reduced graphs and the action of surjections on saturated graphs.

use std::collections::BTreeMap;

use serde::Serialize;

use super::classify::count_free;
use crate::decorated::{
    enumerate_stab, CurveClass, CurveClassMonoid, DecoratedCertificate, DecoratedGraph,
    EnumerationConfig, VertexDecoration,
};
use crate::error::{Error, Result};
use crate::graph::{HalfEdge, HalfEdgeGraph};

/// A saturated graph in which every plain vertex carries at most one leg.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedGraph(DecoratedGraph);

impl ReducedGraph {
    pub fn new(d: DecoratedGraph) -> Result<Self> {
        if !is_reduced(&d) {
            return Err(Error::Precondition(
                "a plain vertex has more than one leg".into(),
            ));
        }
        Ok(Self(d))
    }

    pub fn graph(&self) -> &DecoratedGraph {
        &self.0
    }

    pub fn into_inner(self) -> DecoratedGraph {
        self.0
    }

    /// Isomorphism class after forgetting leg labels. Two reduced graphs
    /// generate the same orbit exactly when their keys agree.
    pub fn orbit_key(&self) -> DecoratedCertificate {
        orbit_key(&self.0)
    }
}

/// Every plain vertex has at most one leg. The tripod, a lone plain vertex
/// with three legs, is the only stable graph in its orbit with fewest legs
/// and is accepted as well.
pub fn is_reduced(d: &DecoratedGraph) -> bool {
    let g = d.graph();
    let tripod = d.num_vertices() == 1 && d.is_plain(0) && g.num_legs() == 3 && g.valence(0) == 3;
    tripod || d.plain_vertices().into_iter().all(|v| g.legs_at(v) <= 1)
}

fn orbit_key(d: &DecoratedGraph) -> DecoratedCertificate {
    crate::graph::canonical_form(&d.graph().forget_labels(), d.decorations())
}

/// Rebuild from raw arrays, keeping the half-edges and vertices marked in
/// `keep_h` / `keep_v`, and relabelling legs `1..=k` in label order.
fn compact(
    inv: Vec<HalfEdge>,
    vof: Vec<usize>,
    labels: Vec<Option<u32>>,
    keep_h: &[bool],
    keep_v: &[bool],
    decs: &[VertexDecoration],
) -> DecoratedGraph {
    let mut vnew = vec![usize::MAX; keep_v.len()];
    let mut new_decs = Vec::new();
    for (v, &k) in keep_v.iter().enumerate() {
        if k {
            vnew[v] = new_decs.len();
            new_decs.push(decs[v].clone());
        }
    }
    let old: Vec<usize> = (0..inv.len()).filter(|&h| keep_h[h]).collect();
    let mut hnew = vec![usize::MAX; inv.len()];
    for (i, &h) in old.iter().enumerate() {
        hnew[h] = i;
    }
    let mut order: Vec<u32> = old.iter().filter_map(|&h| labels[h]).collect();
    order.sort_unstable();
    let rank: BTreeMap<u32, u32> = order
        .iter()
        .enumerate()
        .map(|(i, &l)| (l, i as u32 + 1))
        .collect();
    let g = HalfEdgeGraph::new(
        old.iter().map(|&h| hnew[inv[h]]).collect(),
        old.iter().map(|&h| vnew[vof[h]]).collect(),
        new_decs.len(),
        old.iter().map(|&h| labels[h].map(|l| rank[&l])).collect(),
    )
    .expect("compacted graph is valid");
    DecoratedGraph::new(g, new_decs).expect("one decoration per kept vertex")
}

/// Drop all but the smallest-labelled leg at each plain vertex, remove plain
/// vertices left bivalent by moving their leg to the neighbour, and relabel
/// the legs in order. A lone plain vertex keeps one leg if it has a
/// self-edge and three otherwise.
pub fn reduce_graph(d: &DecoratedGraph) -> Result<ReducedGraph> {
    if !d.is_saturated() {
        return Err(Error::Precondition("graph is not saturated".into()));
    }
    let g = d.graph();
    let mut inv = g.involution().to_vec();
    let vof = g.vertex_map().to_vec();
    let mut labels = g.labels().to_vec();
    let mut keep_h = vec![true; inv.len()];
    let mut keep_v = vec![true; g.num_vertices()];
    for v in d.plain_vertices() {
        let mut legs: Vec<HalfEdge> = g
            .half_edges_at(v)
            .into_iter()
            .filter(|&h| g.is_leg(h))
            .collect();
        legs.sort_by_key(|&h| g.label(h));
        let internal = g.valence(v) - legs.len();
        let keep = if internal == 0 { 3 } else { 1 };
        for &h in legs.iter().skip(keep) {
            keep_h[h] = false;
        }
        if internal == 1 && !legs.is_empty() {
            let e = g
                .half_edges_at(v)
                .into_iter()
                .find(|&h| !g.is_leg(h))
                .expect("one internal");
            let n = g.sigma(e);
            inv[n] = n;
            labels[n] = labels[legs[0]];
            keep_h[e] = false;
            keep_h[legs[0]] = false;
            keep_v[v] = false;
        }
    }
    ReducedGraph::new(compact(inv, vof, labels, &keep_h, &keep_v, d.decorations()))
}

/// `f^* G` for a surjection `f: {1..m} -> {1..n}` given as `f[x - 1]`. Each
/// leg `j` becomes the legs `f^{-1}(j)`: directly when the fibre is a point
/// or the leg sits on a plain vertex, and through a new plain vertex
/// otherwise.
pub fn pullback(d: &DecoratedGraph, f: &[u32]) -> Result<DecoratedGraph> {
    let g = d.graph();
    let n = g.num_legs() as u32;
    let mut fibres: Vec<Vec<u32>> = vec![Vec::new(); n as usize + 1];
    for (x, &j) in f.iter().enumerate() {
        if j == 0 || j > n {
            return Err(Error::Precondition(format!("{j} is not a leg label")));
        }
        fibres[j as usize].push(x as u32 + 1);
    }
    if fibres[1..].iter().any(Vec::is_empty) {
        return Err(Error::Precondition("map is not surjective".into()));
    }
    let mut inv = g.involution().to_vec();
    let mut vof = g.vertex_map().to_vec();
    let mut labels = g.labels().to_vec();
    let mut decs = d.decorations().to_vec();
    for h in g.legs() {
        let j = g
            .label(h)
            .ok_or_else(|| Error::Precondition("graph has unlabelled legs".into()))?;
        let fibre = &fibres[j as usize];
        labels[h] = Some(fibre[0]);
        if fibre.len() == 1 {
            continue;
        }
        let v = g.vertex_of(h);
        let host = if d.is_plain(v) {
            v
        } else {
            let p = decs.len();
            decs.push(VertexDecoration::plain(d.rank()));
            let a = inv.len();
            inv[h] = a;
            inv.push(h);
            vof.push(p);
            labels[h] = None;
            labels.push(None);
            p
        };
        let start = if host == v { 1 } else { 0 };
        for &x in &fibre[start..] {
            inv.push(inv.len());
            vof.push(host);
            labels.push(Some(x));
        }
    }
    let graph = HalfEdgeGraph::new(inv, vof, decs.len(), labels)?;
    DecoratedGraph::new(graph, decs)
}

/// Every surjection `{1..m} -> {1..n}` as a value vector.
pub fn surjections(m: u32, n: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    if n == 0 {
        if m == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    let mut cur = vec![1u32; m as usize];
    loop {
        let mut hit = vec![false; n as usize + 1];
        for &c in &cur {
            hit[c as usize] = true;
        }
        if hit[1..].iter().all(|&b| b) {
            out.push(cur.clone());
        }
        let mut i = 0;
        loop {
            if i == cur.len() {
                return out;
            }
            if cur[i] < n {
                cur[i] += 1;
                break;
            }
            cur[i] = 1;
            i += 1;
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Orbit {
    #[serde(skip)]
    pub representative: ReducedGraph,
    pub certificate: String,
    pub legs: usize,
    pub free: usize,
    /// Number of classes of the orbit in `Q(h, m, beta)` for `m = 0..=n`.
    pub sizes: Vec<usize>,
}

/// Orbits meeting `Q(h, m, beta)` for some `m <= n` with at most `i_max`
/// free half-edges, sorted by representative.
pub fn orbit_decompose(
    h: u32,
    n: u32,
    beta: &CurveClass,
    i_max: usize,
    monoid: &CurveClassMonoid,
    config: &EnumerationConfig,
) -> Result<Vec<Orbit>> {
    let cfg = EnumerationConfig {
        saturated_only: true,
        labeled_legs: true,
        ..config.clone()
    };
    let mut orbits: BTreeMap<DecoratedCertificate, Orbit> = BTreeMap::new();
    for m in 0..=n {
        for g in enumerate_stab(h, m, beta, monoid, &cfg)?.graphs {
            let free = count_free(&g);
            if free > i_max {
                continue;
            }
            let k = reduce_graph(&g)?;
            let key = k.orbit_key();
            let entry = orbits.entry(key.clone()).or_insert_with(|| Orbit {
                legs: k.graph().num_legs(),
                certificate: key.to_string(),
                representative: k,
                free,
                sizes: vec![0; n as usize + 1],
            });
            entry.sizes[m as usize] += 1;
        }
    }
    Ok(orbits.into_values().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decorated::tests::dec;
    use crate::halfedge::classify::tests::build;

    #[test]
    fn reduced_graph_is_unchanged() {
        let d = build(vec![dec(0, 0), dec(1, 1)], &[(0, 1), (0, 1)], &[0, 1]);
        let k = reduce_graph(&d).unwrap();
        assert_eq!(k.graph().certificate(), d.certificate());
    }

    #[test]
    fn extra_legs_on_a_plain_vertex_are_removed() {
        // Plain vertex with three legs and one edge: one leg survives and
        // the vertex is absorbed into its neighbour.
        let d = build(vec![dec(0, 0), dec(0, 1)], &[(0, 1)], &[0, 0, 0, 1]);
        let k = reduce_graph(&d).unwrap();
        assert_eq!(k.graph().num_vertices(), 1);
        assert_eq!(k.graph().num_legs(), 2);
        assert!(k.graph().is_stable());
    }

    #[test]
    fn lone_plain_vertex_keeps_a_stable_leg_count() {
        let tripod = build(vec![dec(0, 0)], &[], &[0, 0, 0, 0, 0]);
        assert_eq!(reduce_graph(&tripod).unwrap().graph().num_legs(), 3);
        let looped = build(vec![dec(0, 0)], &[(0, 0)], &[0, 0, 0]);
        assert_eq!(reduce_graph(&looped).unwrap().graph().num_legs(), 1);
    }

    #[test]
    fn pullback_of_reduction_recovers_the_orbit() {
        let d = build(vec![dec(0, 0), dec(0, 1)], &[(0, 1)], &[0, 0, 1]);
        let k = reduce_graph(&d).unwrap();
        assert_eq!(k.graph().num_legs(), 2);
        let back = pullback(k.graph(), &[1, 1, 2]).unwrap();
        assert_eq!(orbit_key(&back), orbit_key(&d));
        assert!(back.is_saturated() && back.is_stable());
    }

    #[test]
    fn pullback_at_a_plain_vertex_adds_legs() {
        let d = build(vec![dec(0, 0), dec(0, 1)], &[(0, 1), (0, 1)], &[0]);
        let p = pullback(&d, &[1, 1, 1]).unwrap();
        assert_eq!(p.num_vertices(), 2);
        assert_eq!(p.graph().legs_at(0), 3);
        assert_eq!(count_free(&p), count_free(&d));
    }

    #[test]
    fn surjection_counts() {
        assert_eq!(surjections(4, 2).len(), 14);
        assert_eq!(surjections(3, 3).len(), 6);
        assert_eq!(surjections(2, 3).len(), 0);
        assert_eq!(surjections(0, 0).len(), 1);
    }

    #[test]
    fn orbits_of_small_q() {
        let m = CurveClassMonoid::default();
        let orbits = orbit_decompose(
            0,
            4,
            &CurveClass(vec![1]),
            10,
            &m,
            &EnumerationConfig::default(),
        )
        .unwrap();
        for o in &orbits {
            assert!(is_reduced(o.representative.graph()));
            assert!(o.sizes[o.legs] >= 1);
            assert!(o.sizes[..o.legs].iter().all(|&s| s == 0));
        }
    }
}
