use std::collections::BTreeSet;

use serde::Serialize;

use super::enumerate::{enumerate_stab, EnumerationConfig, StabEnumeration};
use super::graph::{DecoratedCertificate, DecoratedGraph};
use super::monoid::{CurveClass, CurveClassMonoid};
use crate::error::Result;

/// A finite poset on isomorphism classes, given by generating pairs
/// `lower <= upper` and their reflexive-transitive closure.
#[derive(Clone, Debug)]
pub struct ContractionPoset {
    pub elements: Vec<DecoratedCertificate>,
    pub graphs: Vec<DecoratedGraph>,
    /// Generating relations `(lower, upper)`, deduplicated and sorted,
    /// without reflexive pairs.
    pub generators: Vec<(usize, usize)>,
    above: Vec<Vec<bool>>,
}

impl ContractionPoset {
    pub fn new(
        elements: Vec<DecoratedCertificate>,
        graphs: Vec<DecoratedGraph>,
        pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Self {
        let generators: Vec<(usize, usize)> = pairs
            .into_iter()
            .filter(|(a, b)| a != b)
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let n = elements.len();
        let mut succ = vec![Vec::new(); n];
        for &(a, b) in &generators {
            succ[a].push(b);
        }
        let above = (0..n)
            .map(|start| {
                let mut seen = vec![false; n];
                let mut stack = vec![start];
                seen[start] = true;
                while let Some(x) = stack.pop() {
                    for &y in &succ[x] {
                        if !seen[y] {
                            seen[y] = true;
                            stack.push(y);
                        }
                    }
                }
                seen
            })
            .collect();
        Self {
            elements,
            graphs,
            generators,
            above,
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn le(&self, a: usize, b: usize) -> bool {
        self.above[a][b]
    }

    /// All pairs `a <= b` with `a != b`.
    pub fn strict_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .filter(|&(a, b)| a != b && self.le(a, b))
            .collect()
    }

    /// Pairs of distinct elements below each other (empty iff antisymmetric).
    pub fn antisymmetry_violations(&self) -> Vec<(usize, usize)> {
        self.strict_pairs()
            .into_iter()
            .filter(|&(a, b)| a < b && self.le(b, a))
            .collect()
    }

    /// Covering pairs of the closure.
    pub fn hasse(&self) -> Vec<(usize, usize)> {
        let pairs = self.strict_pairs();
        pairs
            .iter()
            .copied()
            .filter(|&(a, b)| {
                !(0..self.len()).any(|c| c != a && c != b && self.le(a, c) && self.le(c, b))
            })
            .collect()
    }

    pub fn to_json(&self) -> PosetJson {
        PosetJson {
            elements: self.elements.iter().map(|c| c.to_string()).collect(),
            edges: self.hasse(),
        }
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph Hasse {\n  rankdir=BT;\n");
        for (i, c) in self.elements.iter().enumerate() {
            out.push_str(&format!("  n{i} [label=\"{c}\"];\n"));
        }
        for (a, b) in self.hasse() {
            out.push_str(&format!("  n{a} -> n{b};\n"));
        }
        out.push_str("}\n");
        out
    }
}

/// JSON export: certificates plus the Hasse diagram as index pairs
/// `[lower, upper]`.
#[derive(Clone, Debug, Serialize)]
pub struct PosetJson {
    pub elements: Vec<String>,
    pub edges: Vec<(usize, usize)>,
}

/// Single-edge contractions `G -> G/e` as pairs `(index(G), index(G/e))`.
pub fn single_edge_contractions(stab: &StabEnumeration) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (i, g) in stab.graphs.iter().enumerate() {
        for e in g.graph().internal_edges() {
            let (c, _) = g.contract(&[e]).expect("internal edge");
            let j = stab
                .index_of(&c.certificate())
                .expect("contraction of a stable graph is stable");
            out.push((i, j));
        }
    }
    out
}

/// The contraction poset on `Stab(h, n, beta)`.
pub fn build_stab_poset(stab: &StabEnumeration) -> ContractionPoset {
    ContractionPoset::new(
        stab.certificates.clone(),
        stab.graphs.clone(),
        single_edge_contractions(stab),
    )
}

/// The poset on saturated classes together with the saturation map.
#[derive(Clone, Debug)]
pub struct QPoset {
    pub poset: ContractionPoset,
    /// For every element of the Stab enumeration, the index of its saturation.
    pub saturation: Vec<usize>,
}

/// `Q(h, n, beta)`: the closure of the image of the Stab order under
/// saturation.
pub fn build_q_poset(stab: &StabEnumeration) -> QPoset {
    let mut q_of_stab = vec![usize::MAX; stab.len()];
    let mut elements = Vec::new();
    let mut graphs = Vec::new();
    for (i, g) in stab.graphs.iter().enumerate() {
        if g.is_saturated() {
            q_of_stab[i] = elements.len();
            elements.push(stab.certificates[i].clone());
            graphs.push(g.clone());
        }
    }
    let saturation: Vec<usize> = stab
        .graphs
        .iter()
        .map(|g| {
            let s = stab
                .index_of(&g.saturate().certificate())
                .expect("saturation is stable");
            q_of_stab[s]
        })
        .collect();
    let pairs: Vec<(usize, usize)> = single_edge_contractions(stab)
        .into_iter()
        .map(|(a, b)| (saturation[a], saturation[b]))
        .collect();
    QPoset {
        poset: ContractionPoset::new(elements, graphs, pairs),
        saturation,
    }
}

/// Convenience wrapper: enumerate and build both posets.
pub fn stab_and_q(
    h: u32,
    n: u32,
    beta: &CurveClass,
    monoid: &CurveClassMonoid,
    config: &EnumerationConfig,
) -> Result<(StabEnumeration, ContractionPoset, QPoset)> {
    let stab = enumerate_stab(h, n, beta, monoid, config)?;
    let sp = build_stab_poset(&stab);
    let q = build_q_poset(&stab);
    Ok((stab, sp, q))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_0_4_0_has_one_top_and_three_below() {
        let m = CurveClassMonoid::default();
        let (_, _, q) = stab_and_q(
            0,
            4,
            &CurveClass(vec![0]),
            &m,
            &EnumerationConfig::default(),
        )
        .unwrap();
        // Every genus-0 tree of plain vertices saturates to the single vertex.
        assert_eq!(q.poset.len(), 1);
        assert!(q.poset.antisymmetry_violations().is_empty());
    }

    #[test]
    fn stab_0_4_0_order() {
        let m = CurveClassMonoid::default();
        let (stab, sp, _) = stab_and_q(
            0,
            4,
            &CurveClass(vec![0]),
            &m,
            &EnumerationConfig::default(),
        )
        .unwrap();
        assert_eq!(stab.len(), 4);
        // The one-vertex class is the top; the three splits sit below it.
        let top = stab
            .graphs
            .iter()
            .position(|g| g.num_vertices() == 1)
            .unwrap();
        for i in 0..4 {
            assert!(sp.le(i, top));
        }
        assert_eq!(sp.hasse().len(), 3);
    }

    #[test]
    fn q_poset_antisymmetric_for_genus_one() {
        let m = CurveClassMonoid::default();
        let (stab, _, q) = stab_and_q(
            1,
            2,
            &CurveClass(vec![0]),
            &m,
            &EnumerationConfig::default(),
        )
        .unwrap();
        assert!(q.poset.antisymmetry_violations().is_empty());
        for (a, b) in single_edge_contractions(&stab) {
            assert!(stab.graphs[a].invariant_i() <= stab.graphs[b].invariant_i());
        }
    }
}
