use proptest::prelude::*;
use stablegraph::graph::{automorphism_count, canonical_form, GraphBuilder, HalfEdgeGraph};

#[derive(Clone, Debug)]
struct Shape {
    colors: Vec<u8>,
    edges: Vec<(usize, usize)>,
    legs: Vec<(usize, bool)>,
}

fn build(s: &Shape) -> HalfEdgeGraph {
    let mut b = GraphBuilder::with_vertices(s.colors.len());
    for &(u, w) in &s.edges {
        b.add_edge(u, w);
    }
    let mut next = 0;
    for &(v, labeled) in &s.legs {
        let label = labeled.then(|| {
            next += 1;
            next
        });
        b.add_leg(v, label);
    }
    b.build().unwrap()
}

fn shape() -> impl Strategy<Value = Shape> {
    (1usize..=3).prop_flat_map(|n| {
        (
            prop::collection::vec(0u8..2, n),
            prop::collection::vec((0..n, 0..n), 0..=3),
            prop::collection::vec((0..n, any::<bool>()), 0..=2),
        )
            .prop_map(|(colors, edges, legs)| Shape {
                colors,
                edges,
                legs,
            })
    })
}

/// Half-edge bijections `a -> b` commuting with the involutions, carrying
/// vertex blocks onto vertex blocks of the same color, and preserving labels.
fn isomorphisms(a: &HalfEdgeGraph, ca: &[u8], b: &HalfEdgeGraph, cb: &[u8]) -> usize {
    let n = a.num_half_edges();
    if n != b.num_half_edges() || a.num_vertices() != b.num_vertices() {
        return 0;
    }
    let mut count = 0;
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend(a, ca, b, cb, 0, &mut perm, &mut used, &mut count);
    count
}

#[allow(clippy::too_many_arguments)]
fn extend(
    a: &HalfEdgeGraph,
    ca: &[u8],
    b: &HalfEdgeGraph,
    cb: &[u8],
    h: usize,
    perm: &mut Vec<usize>,
    used: &mut Vec<bool>,
    count: &mut usize,
) {
    let n = perm.len();
    if h == n {
        let mut vmap = vec![usize::MAX; a.num_vertices()];
        for (x, &y) in perm.iter().enumerate() {
            let (v, w) = (a.vertex_of(x), b.vertex_of(y));
            if vmap[v] != usize::MAX && vmap[v] != w {
                return;
            }
            vmap[v] = w;
        }
        let mut hit = vec![false; b.num_vertices()];
        for (v, &w) in vmap.iter().enumerate() {
            if w == usize::MAX {
                // Vertices without half-edges are not covered by this oracle.
                return;
            }
            if hit[w] || ca[v] != cb[w] {
                return;
            }
            hit[w] = true;
        }
        let ok =
            (0..n).all(|x| perm[a.sigma(x)] == b.sigma(perm[x]) && a.label(x) == b.label(perm[x]));
        if ok {
            *count += 1;
        }
        return;
    }
    for y in 0..n {
        if !used[y] {
            used[y] = true;
            perm[h] = y;
            extend(a, ca, b, cb, h + 1, perm, used, count);
            used[y] = false;
        }
    }
}

fn shuffle(g: &HalfEdgeGraph, hperm: &[usize], vperm: &[usize]) -> HalfEdgeGraph {
    let n = g.num_half_edges();
    let mut inv = vec![0; n];
    let mut vof = vec![0; n];
    let mut labels = vec![None; n];
    for h in 0..n {
        inv[hperm[h]] = hperm[g.sigma(h)];
        vof[hperm[h]] = vperm[g.vertex_of(h)];
        labels[hperm[h]] = g.label(h);
    }
    HalfEdgeGraph::new(inv, vof, g.num_vertices(), labels).unwrap()
}

fn permuted<T: Clone>(items: &[T], vperm: &[usize]) -> Vec<T> {
    let mut out = items.to_vec();
    for (v, &w) in vperm.iter().enumerate() {
        out[w] = items[v].clone();
    }
    out
}

fn covered(s: &Shape) -> bool {
    (0..s.colors.len()).all(|v| {
        s.edges.iter().any(|&(a, b)| a == v || b == v) || s.legs.iter().any(|&(w, _)| w == v)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn certificates_decide_isomorphism(a in shape(), b in shape()) {
        prop_assume!(covered(&a) && covered(&b));
        let (ga, gb) = (build(&a), build(&b));
        let same = canonical_form(&ga, &a.colors) == canonical_form(&gb, &b.colors);
        prop_assert_eq!(same, isomorphisms(&ga, &a.colors, &gb, &b.colors) > 0);
    }

    #[test]
    fn certificates_survive_renumbering(
        a in shape(),
        seed in any::<u64>(),
    ) {
        prop_assume!(covered(&a));
        let g = build(&a);
        let mut hperm: Vec<usize> = (0..g.num_half_edges()).collect();
        let mut vperm: Vec<usize> = (0..g.num_vertices()).collect();
        let mut state = seed | 1;
        let mut next = |k: usize| {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state % k as u64) as usize
        };
        for i in (1..hperm.len()).rev() {
            let j = next(i + 1);
            hperm.swap(i, j);
        }
        for i in (1..vperm.len()).rev() {
            let j = next(i + 1);
            vperm.swap(i, j);
        }
        let h = shuffle(&g, &hperm, &vperm);
        let colors = permuted(&a.colors, &vperm);
        prop_assert_eq!(canonical_form(&g, &a.colors), canonical_form(&h, &colors));
    }

    #[test]
    fn automorphism_count_matches_brute_force(a in shape()) {
        prop_assume!(covered(&a));
        let g = build(&a);
        prop_assert_eq!(automorphism_count(&g, &a.colors), isomorphisms(&g, &a.colors, &g, &a.colors) as u128);
    }
}
