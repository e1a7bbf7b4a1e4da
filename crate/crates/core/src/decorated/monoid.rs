use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An effective curve class: a vector of nonnegative integers.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CurveClass(pub Vec<u32>);

impl CurveClass {
    pub fn zero(rank: usize) -> Self {
        CurveClass(vec![0; rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &CurveClass) -> CurveClass {
        CurveClass(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn checked_sub(&self, other: &CurveClass) -> Option<CurveClass> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(CurveClass)
    }

    /// All effective `a` with `other - a` effective, in lexicographic order.
    pub fn summands(&self) -> Vec<CurveClass> {
        let mut out = vec![Vec::new()];
        for &c in &self.0 {
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<u32>| {
                    (0..=c).map(move |x| {
                        let mut p = prefix.clone();
                        p.push(x);
                        p
                    })
                })
                .collect();
        }
        out.into_iter().map(CurveClass).collect()
    }
}

impl fmt::Display for CurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() == 1 {
            write!(f, "{}", self.0[0])
        } else {
            let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
            write!(f, "({})", parts.join(","))
        }
    }
}

/// Abstract stand-in for the effective cone of curve classes: effective
/// classes are nonnegative integer vectors of length `rank`, and the ample
/// degree is a positive integer functional.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveClassMonoid {
    degree: Vec<u32>,
}

impl Default for CurveClassMonoid {
    fn default() -> Self {
        Self { degree: vec![1] }
    }
}

impl CurveClassMonoid {
    pub fn new(degree: Vec<u32>) -> Result<Self> {
        if degree.is_empty() || degree.contains(&0) {
            return Err(Error::Precondition(
                "degree functional must be a nonempty vector of positive integers".into(),
            ));
        }
        Ok(Self { degree })
    }

    pub fn rank(&self) -> usize {
        self.degree.len()
    }

    pub fn degree_vector(&self) -> &[u32] {
        &self.degree
    }

    /// `L . alpha`.
    pub fn degree(&self, alpha: &CurveClass) -> u64 {
        self.degree
            .iter()
            .zip(&alpha.0)
            .map(|(&l, &a)| l as u64 * a as u64)
            .sum()
    }

    pub fn class(&self, coords: Vec<u32>) -> Result<CurveClass> {
        if coords.len() != self.rank() {
            return Err(Error::Precondition(format!(
                "class has rank {} but the monoid has rank {}",
                coords.len(),
                self.rank()
            )));
        }
        Ok(CurveClass(coords))
    }

    /// Every effective class of degree at most `max_degree`.
    pub fn classes_up_to_degree(&self, max_degree: u64) -> Vec<CurveClass> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; self.rank()];
        self.fill(0, max_degree, &mut cur, &mut out);
        out
    }

    fn fill(&self, i: usize, budget: u64, cur: &mut Vec<u32>, out: &mut Vec<CurveClass>) {
        if i == self.rank() {
            out.push(CurveClass(cur.clone()));
            return;
        }
        let l = self.degree[i] as u64;
        for x in 0..=budget / l {
            cur[i] = x as u32;
            self.fill(i + 1, budget - x * l, cur, out);
        }
        cur[i] = 0;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nonzero_classes_have_positive_degree() {
        let m = CurveClassMonoid::new(vec![1, 2]).unwrap();
        for a in m.classes_up_to_degree(4) {
            assert!(a.is_zero() || m.degree(&a) >= 1);
            assert!(m.degree(&a) <= 4);
        }
        assert_eq!(m.classes_up_to_degree(2).len(), 4);
    }

    #[test]
    fn summands_are_finite_decompositions() {
        let b = CurveClass(vec![2, 1]);
        let s = b.summands();
        assert_eq!(s.len(), 6);
        for a in &s {
            assert_eq!(a.add(&b.checked_sub(a).unwrap()), b);
        }
    }

    #[test]
    fn rejects_degenerate_degree() {
        assert!(CurveClassMonoid::new(vec![]).is_err());
        assert!(CurveClassMonoid::new(vec![1, 0]).is_err());
    }
}
