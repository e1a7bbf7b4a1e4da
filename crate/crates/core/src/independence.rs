//! Independence complexes of graphic matroids and their reduced homology.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::Serialize;

use crate::graph::{Edge, HalfEdgeGraph, UnionFind};
use crate::linalg;

/// Faces are the forests of internal edges, stored as bitmasks over
/// `edges`, grouped by size.
#[derive(Clone, Debug)]
pub struct IndependenceComplex {
    pub edges: Vec<Edge>,
    pub faces_by_size: Vec<Vec<u64>>,
    betti: usize,
}

impl IndependenceComplex {
    pub fn num_faces(&self) -> usize {
        self.faces_by_size.iter().map(Vec::len).sum()
    }

    /// Dimension of the complex, `-1` when only the empty face exists.
    pub fn dimension(&self) -> i64 {
        self.faces_by_size.len() as i64 - 2
    }

    /// `|E| - e - 1`.
    pub fn top_degree(&self) -> i64 {
        self.edges.len() as i64 - self.betti as i64 - 1
    }
}

fn is_forest(g: &HalfEdgeGraph, edges: &[Edge], mask: u64) -> bool {
    let mut uf = UnionFind::new(g.num_vertices());
    edges
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .all(|(_, &e)| {
            let (u, w) = g.endpoints(e);
            uf.union(u, w)
        })
}

pub fn independence_complex(g: &HalfEdgeGraph) -> IndependenceComplex {
    let edges = g.internal_edges();
    assert!(edges.len() < 64, "too many edges for bitmask faces");
    let mut faces_by_size: Vec<Vec<u64>> = Vec::new();
    for mask in 0u64..(1u64 << edges.len()) {
        if is_forest(g, &edges, mask) {
            let k = mask.count_ones() as usize;
            if faces_by_size.len() <= k {
                faces_by_size.resize(k + 1, Vec::new());
            }
            faces_by_size[k].push(mask);
        }
    }
    IndependenceComplex {
        edges,
        faces_by_size,
        betti: g.betti_1(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyRanks {
    /// Nonzero reduced Betti numbers by degree.
    pub ranks: BTreeMap<i64, usize>,
    pub top_degree: i64,
}

impl HomologyRanks {
    pub fn rank(&self, degree: i64) -> usize {
        self.ranks.get(&degree).copied().unwrap_or(0)
    }

    /// `I(G)`.
    pub fn top(&self) -> usize {
        self.rank(self.top_degree)
    }

    pub fn is_concentrated(&self) -> bool {
        self.ranks.keys().all(|&d| d == self.top_degree)
    }

    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.ranks
            .iter()
            .map(|(&d, &r)| if d % 2 == 0 { r as i64 } else { -(r as i64) })
            .sum()
    }
}

/// Reduced homology over the rationals. Faces of size `k` sit in degree
/// `k - 1`; the empty face makes the augmented chain complex.
pub fn homology_ranks(c: &IndependenceComplex) -> HomologyRanks {
    let sizes: Vec<usize> = c.faces_by_size.iter().map(Vec::len).collect();
    // boundary_rank[k]: rank of the map from size-k faces to size-(k-1) faces.
    let mut boundary_rank = vec![0usize; sizes.len() + 1];
    for k in 1..sizes.len() {
        let index: BTreeMap<u64, usize> = c.faces_by_size[k - 1]
            .iter()
            .enumerate()
            .map(|(i, &m)| (m, i))
            .collect();
        let matrix: Vec<Vec<BigInt>> = c.faces_by_size[k]
            .iter()
            .map(|&face| {
                let mut row = vec![BigInt::from(0); sizes[k - 1]];
                let mut sign = 1;
                for bit in 0..64 {
                    if face >> bit & 1 == 1 {
                        row[index[&(face & !(1 << bit))]] = BigInt::from(sign);
                        sign = -sign;
                    }
                }
                row
            })
            .collect();
        boundary_rank[k] = linalg::rank(&matrix);
    }
    let mut ranks = BTreeMap::new();
    for k in 0..sizes.len() {
        let r = sizes[k] - boundary_rank[k] - boundary_rank[k + 1];
        if r > 0 {
            ranks.insert(k as i64 - 1, r);
        }
    }
    HomologyRanks {
        ranks,
        top_degree: c.top_degree(),
    }
}

/// `T_G(0, 1)` by deletion and contraction: loops give a factor `y = 1`,
/// bridges a factor `x = 0`.
pub fn tutte_01(g: &HalfEdgeGraph) -> u64 {
    let edges: Vec<(usize, usize)> = g
        .internal_edges()
        .into_iter()
        .map(|e| g.endpoints(e))
        .collect();
    tutte_rec(g.num_vertices(), &edges)
}

fn connects_without(n: usize, edges: &[(usize, usize)], skip: usize) -> bool {
    let mut uf = UnionFind::new(n);
    for (i, &(u, w)) in edges.iter().enumerate() {
        if i != skip {
            uf.union(u, w);
        }
    }
    let (u, w) = edges[skip];
    uf.find(u) == uf.find(w)
}

fn tutte_rec(n: usize, edges: &[(usize, usize)]) -> u64 {
    let Some(&(u, w)) = edges.last() else {
        return 1;
    };
    let last = edges.len() - 1;
    let rest = &edges[..last];
    if u == w {
        return tutte_rec(n, rest);
    }
    if !connects_without(n, edges, last) {
        return 0;
    }
    let contracted: Vec<(usize, usize)> = rest
        .iter()
        .map(|&(a, b)| {
            let f = |x: usize| if x == w { u } else { x };
            (f(a), f(b))
        })
        .collect();
    tutte_rec(n, rest) + tutte_rec(n, &contracted)
}

/// Rank of reduced homology in degree `|E| - e - 1`.
pub fn i_invariant(g: &HalfEdgeGraph) -> usize {
    homology_ranks(&independence_complex(g)).top()
}
