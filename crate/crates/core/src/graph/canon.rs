//! Canonical certificates and automorphism groups by individualization and
//! refinement over vertex orderings. Adjacency multiplicities, loop counts,
//! leg labels and an arbitrary vertex coloring are preserved.
//!
//! Isomorphism classes of half-edge graphs coincide with isomorphism classes
//! of the underlying vertex-colored multigraph with labelled legs: every
//! vertex bijection preserving multiplicities lifts to half-edges. So it is
//! enough to canonize vertex orderings and lift at the end.

use std::fmt;

use serde::Serialize;

use super::halfedge::{Edge, HalfEdge, HalfEdgeGraph, Vertex};

/// Everything about a vertex that an isomorphism must preserve locally.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct VertexKey<K> {
    pub color: K,
    pub labels: Vec<u32>,
    pub unlabeled_legs: u32,
    pub loops: u32,
}

/// Canonical certificate: vertex keys and the strict upper triangle of the
/// multiplicity matrix, both in canonical vertex order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Certificate<K> {
    pub vertices: Vec<VertexKey<K>>,
    pub adjacency: Vec<u32>,
}

impl<K: fmt::Display> fmt::Display for Certificate<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, k) in self.vertices.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{}", k.color)?;
            if !k.labels.is_empty() {
                let labels: Vec<String> = k.labels.iter().map(u32::to_string).collect();
                write!(f, "[{}]", labels.join(","))?;
            }
            if k.unlabeled_legs > 0 {
                write!(f, "+{}", k.unlabeled_legs)?;
            }
            if k.loops > 0 {
                write!(f, "o{}", k.loops)?;
            }
        }
        f.write_str("|")?;
        let adj: Vec<String> = self.adjacency.iter().map(u32::to_string).collect();
        f.write_str(&adj.join(""))
    }
}

pub fn vertex_keys<K: Ord + Clone>(g: &HalfEdgeGraph, colors: &[K]) -> Vec<VertexKey<K>> {
    assert_eq!(colors.len(), g.num_vertices(), "one color per vertex");
    let mut keys: Vec<VertexKey<K>> = colors
        .iter()
        .map(|c| VertexKey {
            color: c.clone(),
            labels: Vec::new(),
            unlabeled_legs: 0,
            loops: 0,
        })
        .collect();
    for h in g.legs() {
        let k = &mut keys[g.vertex_of(h)];
        match g.label(h) {
            Some(l) => k.labels.push(l),
            None => k.unlabeled_legs += 1,
        }
    }
    for e in g.internal_edges() {
        if g.is_loop(e) {
            keys[g.vertex_of(e.0)].loops += 1;
        }
    }
    for k in &mut keys {
        k.labels.sort_unstable();
    }
    keys
}

struct Search<'a> {
    adj: &'a [Vec<u32>],
    prune_twins: bool,
    best: Option<Vec<u32>>,
    best_order: Vec<Vertex>,
    leaves: Vec<(Vec<u32>, Vec<Vertex>)>,
    collect: bool,
}

impl Search<'_> {
    fn refine(&self, mut cells: Vec<Vec<Vertex>>) -> Vec<Vec<Vertex>> {
        let n = self.adj.len();
        let mut cell_of = vec![0usize; n];
        loop {
            for (i, c) in cells.iter().enumerate() {
                for &v in c {
                    cell_of[v] = i;
                }
            }
            let mut next = Vec::with_capacity(cells.len());
            for c in &cells {
                if c.len() == 1 {
                    next.push(c.clone());
                    continue;
                }
                let mut sigs: Vec<(Vec<u32>, Vertex)> = c
                    .iter()
                    .map(|&v| {
                        let mut s = vec![0u32; cells.len()];
                        for w in 0..n {
                            if w != v {
                                s[cell_of[w]] += self.adj[v][w];
                            }
                        }
                        (s, v)
                    })
                    .collect();
                sigs.sort();
                let mut start = 0;
                for i in 1..=sigs.len() {
                    if i == sigs.len() || sigs[i].0 != sigs[start].0 {
                        next.push(sigs[start..i].iter().map(|p| p.1).collect());
                        start = i;
                    }
                }
            }
            if next.len() == cells.len() {
                return next;
            }
            cells = next;
        }
    }

    fn twins(&self, v: Vertex, w: Vertex) -> bool {
        (0..self.adj.len()).all(|x| x == v || x == w || self.adj[v][x] == self.adj[w][x])
    }

    fn run(&mut self, cells: Vec<Vec<Vertex>>) {
        let cells = self.refine(cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let order: Vec<Vertex> = cells.into_iter().flatten().collect();
            self.leaf(order);
            return;
        };
        let mut tried: Vec<Vertex> = Vec::new();
        for &v in &cells[target] {
            if self.prune_twins && tried.iter().any(|&w| self.twins(v, w)) {
                continue;
            }
            tried.push(v);
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..target]);
            next.push(vec![v]);
            next.push(cells[target].iter().copied().filter(|&w| w != v).collect());
            next.extend_from_slice(&cells[target + 1..]);
            self.run(next);
        }
    }

    fn leaf(&mut self, order: Vec<Vertex>) {
        let n = order.len();
        let mut code = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for i in 0..n {
            for j in i + 1..n {
                code.push(self.adj[order[i]][order[j]]);
            }
        }
        if self.best.as_ref().is_none_or(|b| code < *b) {
            self.best = Some(code.clone());
            self.best_order = order.clone();
        }
        if self.collect {
            self.leaves.push((code, order));
        }
    }
}

fn initial_cells<K: Ord>(keys: &[VertexKey<K>]) -> Vec<Vec<Vertex>> {
    let mut idx: Vec<Vertex> = (0..keys.len()).collect();
    idx.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
    let mut cells: Vec<Vec<Vertex>> = Vec::new();
    for v in idx {
        match cells.last_mut() {
            Some(c) if keys[c[0]] == keys[v] => c.push(v),
            _ => cells.push(vec![v]),
        }
    }
    cells
}

/// Canonical vertex order and certificate of `g` under `colors`.
pub fn canonical_order<K: Ord + Clone>(
    g: &HalfEdgeGraph,
    colors: &[K],
) -> (Vec<Vertex>, Certificate<K>) {
    let keys = vertex_keys(g, colors);
    let adj = g.multiplicity_matrix();
    let mut s = Search {
        adj: &adj,
        prune_twins: true,
        best: None,
        best_order: Vec::new(),
        leaves: Vec::new(),
        collect: false,
    };
    s.run(initial_cells(&keys));
    let order = s.best_order;
    let cert = Certificate {
        vertices: order.iter().map(|&v| keys[v].clone()).collect(),
        adjacency: s.best.unwrap_or_default(),
    };
    (order, cert)
}

/// Certificate equal for two graphs iff they are isomorphic by a bijection
/// of half-edges preserving the involution, the vertex partition, leg labels
/// and `colors`.
pub fn canonical_form<K: Ord + Clone>(g: &HalfEdgeGraph, colors: &[K]) -> Certificate<K> {
    canonical_order(g, colors).1
}

/// All color-preserving vertex automorphisms of the underlying multigraph
/// (as maps `v -> image`). Exhaustive search; intended for small graphs.
pub fn vertex_automorphisms<K: Ord + Clone>(g: &HalfEdgeGraph, colors: &[K]) -> Vec<Vec<Vertex>> {
    let keys = vertex_keys(g, colors);
    let adj = g.multiplicity_matrix();
    let mut s = Search {
        adj: &adj,
        prune_twins: false,
        best: None,
        best_order: Vec::new(),
        leaves: Vec::new(),
        collect: true,
    };
    s.run(initial_cells(&keys));
    let best = s.best.clone().unwrap_or_default();
    let reference = s.best_order.clone();
    let mut out: Vec<Vec<Vertex>> = s
        .leaves
        .into_iter()
        .filter(|(code, _)| *code == best)
        .map(|(_, order)| {
            let mut map = vec![0; order.len()];
            for (r, o) in reference.iter().zip(&order) {
                map[*r] = *o;
            }
            map
        })
        .collect();
    out.sort();
    out.dedup();
    out
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Order of the automorphism group of `g` (half-edge permutations).
pub fn automorphism_count<K: Ord + Clone>(g: &HalfEdgeGraph, colors: &[K]) -> u128 {
    let keys = vertex_keys(g, colors);
    let adj = g.multiplicity_matrix();
    let n = g.num_vertices();
    let mut local: u128 = 1;
    for v in 0..n {
        local *= factorial(keys[v].unlabeled_legs as usize);
        let loops = adj[v][v] as usize;
        local *= factorial(loops) << loops;
        for &m in &adj[v][v + 1..] {
            local *= factorial(m as usize);
        }
    }
    vertex_automorphisms(g, colors).len() as u128 * local
}

/// The full automorphism group as half-edge permutations (`perm[h]` is the
/// image of `h`), sorted, identity included.
pub fn automorphisms<K: Ord + Clone>(g: &HalfEdgeGraph, colors: &[K]) -> Vec<Vec<HalfEdge>> {
    let mut out = Vec::new();
    for gamma in vertex_automorphisms(g, colors) {
        lift(g, &gamma, &mut out);
    }
    out.sort();
    out
}

/// One block of interchangeable half-edge tuples: every tuple in `from` may
/// be sent to any tuple in `to`; `flip` allows reversing a pair (loops).
struct Block {
    from: Vec<Vec<HalfEdge>>,
    to: Vec<Vec<HalfEdge>>,
    flip: bool,
}

fn lift(g: &HalfEdgeGraph, gamma: &[Vertex], out: &mut Vec<Vec<HalfEdge>>) {
    let n = g.num_vertices();
    let mut blocks = Vec::new();
    let mut fixed: Vec<(HalfEdge, HalfEdge)> = Vec::new();
    let legs = g.legs();
    for (v, &gv) in gamma.iter().enumerate() {
        let unl = |w: Vertex| -> Vec<Vec<HalfEdge>> {
            legs.iter()
                .filter(|&&h| g.vertex_of(h) == w && g.label(h).is_none())
                .map(|&h| vec![h])
                .collect()
        };
        blocks.push(Block {
            from: unl(v),
            to: unl(gv),
            flip: false,
        });
        for &h in &legs {
            if g.vertex_of(h) == v {
                if let Some(l) = g.label(h) {
                    let img = legs
                        .iter()
                        .copied()
                        .find(|&k| g.vertex_of(k) == gv && g.label(k) == Some(l))
                        .expect("vertex automorphism preserves labels");
                    fixed.push((h, img));
                }
            }
        }
    }
    let oriented = |u: Vertex, w: Vertex| -> Vec<Vec<HalfEdge>> {
        g.internal_edges()
            .into_iter()
            .filter_map(|Edge(a, b)| {
                let (x, y) = (g.vertex_of(a), g.vertex_of(b));
                if (x, y) == (u, w) {
                    Some(vec![a, b])
                } else if (y, x) == (u, w) {
                    Some(vec![b, a])
                } else {
                    None
                }
            })
            .collect()
    };
    for u in 0..n {
        for w in u..n {
            let from = oriented(u, w);
            if from.is_empty() {
                continue;
            }
            blocks.push(Block {
                from,
                to: oriented(gamma[u], gamma[w]),
                flip: u == w,
            });
        }
    }
    let mut perm = vec![usize::MAX; g.num_half_edges()];
    for (h, img) in fixed {
        perm[h] = img;
    }
    extend(&blocks, 0, &mut perm, out);
}

fn extend(blocks: &[Block], i: usize, perm: &mut Vec<HalfEdge>, out: &mut Vec<Vec<HalfEdge>>) {
    let Some(b) = blocks.get(i) else {
        out.push(perm.clone());
        return;
    };
    let k = b.from.len();
    let mut used = vec![false; k];
    assign(b, 0, &mut used, perm, &mut |p| {
        extend(blocks, i + 1, p, out)
    });
}

fn assign(
    b: &Block,
    j: usize,
    used: &mut [bool],
    perm: &mut Vec<HalfEdge>,
    done: &mut dyn FnMut(&mut Vec<HalfEdge>),
) {
    if j == b.from.len() {
        done(perm);
        return;
    }
    for t in 0..b.to.len() {
        if used[t] {
            continue;
        }
        used[t] = true;
        let src = &b.from[j];
        let dst = &b.to[t];
        for flipped in [false, true] {
            if flipped && !(b.flip && src.len() == 2) {
                continue;
            }
            for (x, &h) in src.iter().enumerate() {
                let y = if flipped { src.len() - 1 - x } else { x };
                perm[h] = dst[y];
            }
            assign(b, j + 1, used, perm, done);
        }
        used[t] = false;
    }
}
