use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type HalfEdge = usize;
pub type Vertex = usize;

/// An internal edge, stored as its two half-edges with `0.0 < 0.1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge(pub HalfEdge, pub HalfEdge);

impl Edge {
    pub fn new(a: HalfEdge, b: HalfEdge) -> Self {
        if a < b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }
}

/// A graph in the half-edge formalism: a finite set of half-edges `0..len`,
/// an involution pairing half-edges into internal edges (fixed points are
/// external legs), and an assignment of half-edges to vertices.
///
/// Vertices may be empty. The half-edge formalism cannot describe a lone
/// vertex with no half-edges, but such vertices appear as the result of
/// contracting a loop on a one-vertex graph and as one-vertex strata with no
/// markings.
///
/// External labels form a partial injective map from legs to positive
/// integers; enumeration of unlabelled leg shapes uses legs without labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HalfEdgeGraph {
    involution: Vec<HalfEdge>,
    vertex_of: Vec<Vertex>,
    num_vertices: usize,
    labels: Vec<Option<u32>>,
}

impl HalfEdgeGraph {
    pub fn new(
        involution: Vec<HalfEdge>,
        vertex_of: Vec<Vertex>,
        num_vertices: usize,
        labels: Vec<Option<u32>>,
    ) -> Result<Self> {
        let n = involution.len();
        if vertex_of.len() != n || labels.len() != n {
            return Err(Error::InvalidGraph(
                "involution, vertex map and labels must have equal length".into(),
            ));
        }
        for (h, &s) in involution.iter().enumerate() {
            if s >= n || involution[s] != h {
                return Err(Error::InvalidGraph(format!(
                    "involution is not an involution at {h}"
                )));
            }
        }
        if let Some(&v) = vertex_of.iter().find(|&&v| v >= num_vertices) {
            return Err(Error::InvalidGraph(format!("vertex {v} out of range")));
        }
        let mut seen = std::collections::BTreeSet::new();
        for (h, l) in labels.iter().enumerate() {
            if let Some(l) = l {
                if involution[h] != h {
                    return Err(Error::InvalidGraph(format!(
                        "label {l} placed on internal half-edge {h}"
                    )));
                }
                if *l == 0 || !seen.insert(*l) {
                    return Err(Error::InvalidGraph(format!(
                        "label {l} is zero or repeated"
                    )));
                }
            }
        }
        Ok(Self {
            involution,
            vertex_of,
            num_vertices,
            labels,
        })
    }

    pub fn num_half_edges(&self) -> usize {
        self.involution.len()
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn sigma(&self, h: HalfEdge) -> HalfEdge {
        self.involution[h]
    }

    pub fn vertex_of(&self, h: HalfEdge) -> Vertex {
        self.vertex_of[h]
    }

    pub fn label(&self, h: HalfEdge) -> Option<u32> {
        self.labels[h]
    }

    pub fn involution(&self) -> &[HalfEdge] {
        &self.involution
    }

    pub fn vertex_map(&self) -> &[Vertex] {
        &self.vertex_of
    }

    pub fn labels(&self) -> &[Option<u32>] {
        &self.labels
    }

    pub fn is_leg(&self, h: HalfEdge) -> bool {
        self.involution[h] == h
    }

    /// Half-edges grouped by vertex, each block in increasing order.
    pub fn vertex_blocks(&self) -> Vec<Vec<HalfEdge>> {
        let mut blocks = vec![Vec::new(); self.num_vertices];
        for (h, &v) in self.vertex_of.iter().enumerate() {
            blocks[v].push(h);
        }
        blocks
    }

    pub fn half_edges_at(&self, v: Vertex) -> Vec<HalfEdge> {
        (0..self.num_half_edges())
            .filter(|&h| self.vertex_of[h] == v)
            .collect()
    }

    /// `n(v)`: number of half-edges at `v`.
    pub fn valence(&self, v: Vertex) -> usize {
        self.vertex_of.iter().filter(|&&w| w == v).count()
    }

    pub fn valences(&self) -> Vec<usize> {
        let mut val = vec![0; self.num_vertices];
        for &v in &self.vertex_of {
            val[v] += 1;
        }
        val
    }

    pub fn legs(&self) -> Vec<HalfEdge> {
        (0..self.num_half_edges())
            .filter(|&h| self.is_leg(h))
            .collect()
    }

    pub fn num_legs(&self) -> usize {
        (0..self.num_half_edges())
            .filter(|&h| self.is_leg(h))
            .count()
    }

    pub fn legs_at(&self, v: Vertex) -> usize {
        (0..self.num_half_edges())
            .filter(|&h| self.is_leg(h) && self.vertex_of[h] == v)
            .count()
    }

    pub fn internal_edges(&self) -> Vec<Edge> {
        (0..self.num_half_edges())
            .filter(|&h| self.involution[h] > h)
            .map(|h| Edge(h, self.involution[h]))
            .collect()
    }

    pub fn num_internal_edges(&self) -> usize {
        (0..self.num_half_edges())
            .filter(|&h| self.involution[h] > h)
            .count()
    }

    pub fn is_loop(&self, e: Edge) -> bool {
        self.vertex_of[e.0] == self.vertex_of[e.1]
    }

    pub fn endpoints(&self, e: Edge) -> (Vertex, Vertex) {
        (self.vertex_of[e.0], self.vertex_of[e.1])
    }

    /// True when every leg carries a label (the strict marking invariant).
    pub fn is_fully_labeled(&self) -> bool {
        (0..self.num_half_edges()).all(|h| !self.is_leg(h) || self.labels[h].is_some())
    }

    /// Adjacency multiplicities; the diagonal counts loops.
    pub fn multiplicity_matrix(&self) -> Vec<Vec<u32>> {
        let n = self.num_vertices;
        let mut m = vec![vec![0u32; n]; n];
        for Edge(a, b) in self.internal_edges() {
            let (u, w) = (self.vertex_of[a], self.vertex_of[b]);
            m[u][w] += 1;
            if u != w {
                m[w][u] += 1;
            }
        }
        m
    }

    /// Component index of each vertex, numbered in order of first appearance.
    pub fn components(&self) -> Vec<usize> {
        let mut uf = UnionFind::new(self.num_vertices);
        for Edge(a, b) in self.internal_edges() {
            uf.union(self.vertex_of[a], self.vertex_of[b]);
        }
        let mut ids = BTreeMap::new();
        (0..self.num_vertices)
            .map(|v| {
                let r = uf.find(v);
                let next = ids.len();
                *ids.entry(r).or_insert(next)
            })
            .collect()
    }

    pub fn num_components(&self) -> usize {
        self.components().into_iter().max().map_or(0, |m| m + 1)
    }

    pub fn is_connected(&self) -> bool {
        self.num_components() == 1
    }

    /// First Betti number: `|internal edges| - |V| + #components`.
    pub fn betti_1(&self) -> usize {
        self.num_internal_edges() + self.num_components() - self.num_vertices
    }

    /// Replace leg labels through `map` (old label -> new label).
    pub fn relabel(&self, map: &BTreeMap<u32, u32>) -> Result<Self> {
        let labels = self
            .labels
            .iter()
            .map(|l| l.map(|l| *map.get(&l).unwrap_or(&l)))
            .collect();
        Self::new(
            self.involution.clone(),
            self.vertex_of.clone(),
            self.num_vertices,
            labels,
        )
    }

    /// Copy of the graph with all leg labels removed.
    pub fn forget_labels(&self) -> Self {
        Self {
            involution: self.involution.clone(),
            vertex_of: self.vertex_of.clone(),
            num_vertices: self.num_vertices,
            labels: vec![None; self.num_half_edges()],
        }
    }

    /// Restrict to the half-edges in `keep` (which must be closed under the
    /// involution), renumbering them densely in increasing order. Vertices
    /// are kept as they are. Returns the graph and the new-to-old map.
    pub(crate) fn restrict(&self, keep: &[bool]) -> (Self, Vec<HalfEdge>) {
        let old: Vec<HalfEdge> = (0..self.num_half_edges()).filter(|&h| keep[h]).collect();
        let mut new_of = vec![usize::MAX; self.num_half_edges()];
        for (i, &h) in old.iter().enumerate() {
            new_of[h] = i;
        }
        let g = Self {
            involution: old.iter().map(|&h| new_of[self.involution[h]]).collect(),
            vertex_of: old.iter().map(|&h| self.vertex_of[h]).collect(),
            num_vertices: self.num_vertices,
            labels: old.iter().map(|&h| self.labels[h]).collect(),
        };
        (g, old)
    }

    /// Renumber vertices through `map` (old -> new, onto `0..count`).
    pub(crate) fn remap_vertices(&self, map: &[Vertex], count: usize) -> Self {
        Self {
            involution: self.involution.clone(),
            vertex_of: self.vertex_of.iter().map(|&v| map[v]).collect(),
            num_vertices: count,
            labels: self.labels.clone(),
        }
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            half_edges: (0..self.num_half_edges() as u64).collect(),
            involution: self
                .internal_edges()
                .into_iter()
                .map(|Edge(a, b)| [a as u64, b as u64])
                .collect(),
            vertices: self
                .vertex_blocks()
                .into_iter()
                .map(|b| b.into_iter().map(|h| h as u64).collect())
                .collect(),
            labels: (0..self.num_half_edges())
                .filter_map(|h| self.labels[h].map(|l| (h as u64, l)))
                .collect(),
        }
    }

    pub fn from_json(json: &GraphJson) -> Result<Self> {
        let mut index = BTreeMap::new();
        for &id in &json.half_edges {
            let next = index.len();
            if index.insert(id, next).is_some() {
                return Err(Error::InvalidGraph(format!("duplicate half-edge id {id}")));
            }
        }
        let lookup = |id: u64| {
            index
                .get(&id)
                .copied()
                .ok_or_else(|| Error::InvalidGraph(format!("unknown half-edge id {id}")))
        };
        let n = index.len();
        let mut involution: Vec<HalfEdge> = (0..n).collect();
        for &[a, b] in &json.involution {
            let (a, b) = (lookup(a)?, lookup(b)?);
            if a == b {
                continue;
            }
            if involution[a] != a || involution[b] != b {
                return Err(Error::InvalidGraph("half-edge paired twice".into()));
            }
            involution[a] = b;
            involution[b] = a;
        }
        let mut vertex_of = vec![usize::MAX; n];
        for (v, block) in json.vertices.iter().enumerate() {
            for &id in block {
                let h = lookup(id)?;
                if vertex_of[h] != usize::MAX {
                    return Err(Error::InvalidGraph(format!(
                        "half-edge {id} in two vertices"
                    )));
                }
                vertex_of[h] = v;
            }
        }
        if vertex_of.contains(&usize::MAX) {
            return Err(Error::InvalidGraph(
                "half-edge not assigned to any vertex".into(),
            ));
        }
        let mut labels = vec![None; n];
        for (&id, &l) in &json.labels {
            labels[lookup(id)?] = Some(l);
        }
        Self::new(involution, vertex_of, json.vertices.len(), labels)
    }

    /// Graphviz export as an undirected multigraph. Legs become point nodes
    /// carrying their label. `vertex_labels` overrides the vertex captions.
    pub fn to_dot(&self, vertex_labels: Option<&[String]>) -> String {
        let mut out = String::from("graph G {\n");
        for v in 0..self.num_vertices {
            let caption = vertex_labels.map_or_else(|| format!("v{v}"), |l| l[v].clone());
            let _ = writeln!(out, "  v{v} [label=\"{caption}\"];");
        }
        for h in self.legs() {
            let caption = self.labels[h].map_or_else(String::new, |l| l.to_string());
            let _ = writeln!(out, "  leg{h} [shape=plaintext, label=\"{caption}\"];");
            let _ = writeln!(out, "  v{} -- leg{h};", self.vertex_of[h]);
        }
        for Edge(a, b) in self.internal_edges() {
            let _ = writeln!(out, "  v{} -- v{};", self.vertex_of[a], self.vertex_of[b]);
        }
        out.push_str("}\n");
        out
    }
}

/// JSON form of a half-edge graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub half_edges: Vec<u64>,
    pub involution: Vec<[u64; 2]>,
    pub vertices: Vec<Vec<u64>>,
    #[serde(default)]
    pub labels: BTreeMap<u64, u32>,
}

/// Incremental construction of a [`HalfEdgeGraph`].
#[derive(Clone, Debug, Default)]
pub struct GraphBuilder {
    involution: Vec<HalfEdge>,
    vertex_of: Vec<Vertex>,
    num_vertices: usize,
    labels: Vec<Option<u32>>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_vertices(n: usize) -> Self {
        Self {
            num_vertices: n,
            ..Self::default()
        }
    }

    pub fn add_vertex(&mut self) -> Vertex {
        self.num_vertices += 1;
        self.num_vertices - 1
    }

    pub fn add_edge(&mut self, u: Vertex, w: Vertex) -> (HalfEdge, HalfEdge) {
        let a = self.involution.len();
        self.involution.extend([a + 1, a]);
        self.vertex_of.extend([u, w]);
        self.labels.extend([None, None]);
        (a, a + 1)
    }

    pub fn add_leg(&mut self, v: Vertex, label: Option<u32>) -> HalfEdge {
        let h = self.involution.len();
        self.involution.push(h);
        self.vertex_of.push(v);
        self.labels.push(label);
        h
    }

    pub fn build(self) -> Result<HalfEdgeGraph> {
        HalfEdgeGraph::new(
            self.involution,
            self.vertex_of,
            self.num_vertices,
            self.labels,
        )
    }
}

#[derive(Clone, Debug)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn theta() -> HalfEdgeGraph {
        let mut b = GraphBuilder::with_vertices(2);
        for _ in 0..3 {
            b.add_edge(0, 1);
        }
        b.build().unwrap()
    }

    #[test]
    fn betti_examples() {
        assert_eq!(GraphBuilder::with_vertices(1).build().unwrap().betti_1(), 0);
        let mut b = GraphBuilder::with_vertices(1);
        b.add_edge(0, 0);
        assert_eq!(b.build().unwrap().betti_1(), 1);
        assert_eq!(theta().betti_1(), 2);
    }

    #[test]
    fn rejects_bad_involution_and_labels() {
        assert!(HalfEdgeGraph::new(vec![1, 2, 0], vec![0, 0, 0], 1, vec![None; 3]).is_err());
        assert!(HalfEdgeGraph::new(vec![1, 0], vec![0, 0], 1, vec![Some(1), None]).is_err());
        assert!(HalfEdgeGraph::new(vec![0, 1], vec![0, 0], 1, vec![Some(2), Some(2)]).is_err());
    }

    #[test]
    fn json_round_trip_with_sparse_ids() {
        let json: GraphJson = serde_json::from_str(
            r#"{"half_edges":[10,11,12],"involution":[[10,11]],"vertices":[[10],[11,12]],"labels":{"12":1}}"#,
        )
        .unwrap();
        let g = HalfEdgeGraph::from_json(&json).unwrap();
        assert_eq!(g.num_vertices(), 2);
        assert_eq!(g.num_internal_edges(), 1);
        assert_eq!(g.label(2), Some(1));
        assert_eq!(HalfEdgeGraph::from_json(&g.to_json()).unwrap(), g);
    }

    #[test]
    fn dot_mentions_every_edge() {
        let dot = theta().to_dot(None);
        assert_eq!(dot.matches("v0 -- v1").count(), 3);
    }
}
