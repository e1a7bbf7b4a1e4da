//! Connected graphs of fixed genus, indexed by edge excess, and the
//! dimension bounds on the first page of the associated spectral sequence.

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::Zero;
use serde::Serialize;

use super::poincare::poincare_table;
use crate::error::{Error, Result};
use crate::graph::{automorphism_count, generate, HalfEdgeGraph};
use crate::independence::i_invariant;

#[derive(Clone, Debug, Serialize)]
pub struct GeEntry {
    #[serde(skip)]
    pub graph: HalfEdgeGraph,
    pub vertices: usize,
    pub edges: usize,
    pub automorphisms: u128,
    pub i_invariant: usize,
}

/// Classes with first Betti number `e` and `e + p` edges.
#[derive(Clone, Debug, Serialize)]
pub struct BarIndex {
    pub e: usize,
    pub p: usize,
    pub graphs: Vec<GeEntry>,
}

pub const GE_CEILING: usize = 2_000_000;

pub fn enumerate_ge(e: usize, max_excess: usize) -> Result<Vec<BarIndex>> {
    enumerate_ge_within(e, max_excess, GE_CEILING)
}

pub fn enumerate_ge_within(e: usize, max_excess: usize, ceiling: usize) -> Result<Vec<BarIndex>> {
    if e == 0 {
        return Err(Error::Precondition("genus must be at least 1".into()));
    }
    let levels =
        generate::connected_multigraphs_within(e + max_excess, ceiling).ok_or_else(|| {
            Error::ResourceCeiling {
                ceiling,
                context: format!("connected graphs with {} edges", e + max_excess),
            }
        })?;
    Ok((0..=max_excess)
        .map(|p| BarIndex {
            e,
            p,
            graphs: levels[e + p]
                .iter()
                .filter(|g| g.betti_1() == e)
                .map(|g| GeEntry {
                    graph: g.clone(),
                    vertices: g.num_vertices(),
                    edges: g.num_internal_edges(),
                    automorphisms: automorphism_count(g, &vec![(); g.num_vertices()]),
                    i_invariant: i_invariant(g),
                })
                .collect(),
        })
        .collect())
}

/// `dim H_q` of the product over vertices of genus-0 moduli spaces, summed
/// over stable `f: [n] -> V(G)`: vertex `v` receives `|f^{-1}(v)| + n(v)`
/// points and must have at least 3.
pub fn fn_dimension(g: &HalfEdgeGraph, n: usize, q: usize) -> BigInt {
    let val = g.valences();
    let max_points = n + val.iter().copied().max().unwrap_or(0);
    let table = poincare_table(max_points.max(3));
    // dp[used][degree]
    let mut dp = vec![vec![BigInt::zero(); q + 1]; n + 1];
    dp[0][0] = BigInt::from(1);
    for &d in &val {
        let mut next = vec![vec![BigInt::zero(); q + 1]; n + 1];
        for used in 0..=n {
            for deg in 0..=q {
                if dp[used][deg].is_zero() {
                    continue;
                }
                for k in 0..=n - used {
                    let m = k + d;
                    if m < 3 {
                        continue;
                    }
                    let ways = binomial(BigInt::from(n - used), BigInt::from(k)) * &dp[used][deg];
                    for (qv, b) in table[m].iter().enumerate() {
                        if deg + qv > q || b.is_zero() {
                            continue;
                        }
                        next[used + k][deg + qv] += &ways * b;
                    }
                }
            }
        }
        dp = next;
    }
    dp[n][q].clone()
}

/// `sum_G fn_dimension(G, n, q) * I(G)` over graphs of genus `e` with
/// `e + p` edges.
pub fn e1_upper_bound(e: usize, n: usize, p: usize, q: usize) -> Result<BigInt> {
    let index = enumerate_ge(e, p)?;
    Ok(index[p]
        .graphs
        .iter()
        .filter(|entry| entry.i_invariant > 0)
        .map(|entry| fn_dimension(&entry.graph, n, q) * BigInt::from(entry.i_invariant))
        .sum())
}
