//! Product decomposition of an orbit stratum and the height constant.

use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use super::reduce::ReducedGraph;
use crate::decorated::CurveClass;

/// `M_{g,n}(X, alpha)` for a vertex that is not plain or carries no leg.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct YFactor {
    pub vertex: usize,
    pub genus: u32,
    pub class: CurveClass,
    pub points: usize,
}

impl fmt::Display for YFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M_{{{},{}}}(X,{})", self.genus, self.points, self.class)
    }
}

/// The family attached to one leg label of a reduced graph, as a function of
/// the fibre `x` over that label.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum NFactor {
    /// `M_{0, x + 1}`-bar, a point when `|x| <= 1`.
    Pointed { label: u32 },
    /// Genus-`genus` curves with all components genus 0 and `|x| + extra`
    /// points, a point when the result is unstable.
    AllGenusZero {
        label: u32,
        genus: u32,
        extra_points: usize,
    },
}

impl fmt::Display for NFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NFactor::Pointed { label } => write!(f, "N({label},x) = M_{{0,x+1}}"),
            NFactor::AllGenusZero {
                label,
                genus,
                extra_points,
            } => {
                write!(f, "N({label},x) = M_{{{genus},x+{extra_points},0}}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StratumFactorization {
    pub y: Vec<YFactor>,
    /// One entry per leg label, in label order.
    pub n: Vec<NFactor>,
}

impl StratumFactorization {
    /// `Y(K)` counts as one factor.
    pub fn factor_count(&self) -> usize {
        self.n.len() + 1
    }
}

pub fn stratum_factorization(k: &ReducedGraph) -> StratumFactorization {
    let d = k.graph();
    let g = d.graph();
    let val = g.valences();
    let y = (0..d.num_vertices())
        .filter(|&v| !d.is_plain(v) || g.legs_at(v) == 0)
        .map(|v| YFactor {
            vertex: v,
            genus: d.decoration(v).genus,
            class: d.decoration(v).class.clone(),
            points: val[v],
        })
        .collect();
    let mut legs = g.legs();
    legs.sort_by_key(|&h| g.label(h));
    let n = legs
        .into_iter()
        .map(|h| {
            let label = g.label(h).unwrap_or(0);
            let v = g.vertex_of(h);
            if !d.is_plain(v) {
                return NFactor::Pointed { label };
            }
            let loops = g
                .internal_edges()
                .into_iter()
                .filter(|&e| g.is_loop(e) && g.vertex_of(e.0) == v)
                .count();
            NFactor::AllGenusZero {
                label,
                genus: loops as u32,
                extra_points: val[v] - 2 * loops - 1,
            }
        })
        .collect();
    StratumFactorization { y, n }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum HeightVariant {
    /// `(13i/2 + 1)(i + 2g + 2 deg + 1)`.
    #[default]
    Tight,
    /// `(13i/2 + 1)(2i + 2g + 2 deg + 1)`.
    Loose,
}

/// The height bound, computed exactly and rounded up.
pub fn height_constant(i: u64, g: u64, degree: u64, variant: HeightVariant) -> u64 {
    let first = Ratio::new(13 * i, 2) + 1;
    let coeff = match variant {
        HeightVariant::Tight => 1,
        HeightVariant::Loose => 2,
    };
    let second = Ratio::from_integer(coeff * i + 2 * g + 2 * degree + 1);
    (first * second).ceil().to_integer()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decorated::tests::dec;
    use crate::halfedge::classify::tests::build;

    #[test]
    fn example_stratum() {
        // A: genus 3, leg 4. B: class 1, legs 1 and 2. P: plain with a
        // self-edge and leg 3. Edges A-B, A-P, B-P.
        let d = build(
            vec![dec(3, 0), dec(0, 1), dec(0, 0)],
            &[(0, 1), (0, 2), (1, 2), (2, 2)],
            &[1, 1, 2, 0],
        );
        let k = ReducedGraph::new(d).unwrap();
        let s = stratum_factorization(&k);
        let ys: Vec<String> = s.y.iter().map(ToString::to_string).collect();
        assert_eq!(ys, vec!["M_{3,3}(X,0)", "M_{0,4}(X,1)"]);
        assert_eq!(s.factor_count(), 5);
        assert_eq!(
            s.n[2],
            NFactor::AllGenusZero {
                label: 3,
                genus: 1,
                extra_points: 2
            }
        );
        for j in [0, 1, 3] {
            assert!(matches!(s.n[j], NFactor::Pointed { .. }));
        }
    }

    #[test]
    fn height_constants() {
        assert_eq!(height_constant(0, 0, 0, HeightVariant::Tight), 1);
        assert_eq!(height_constant(2, 1, 1, HeightVariant::Tight), 98);
        assert_eq!(height_constant(2, 1, 1, HeightVariant::Loose), 126);
        // 13/2 + 1 = 15/2, times 4, is already an integer.
        assert_eq!(height_constant(1, 1, 0, HeightVariant::Tight), 30);
        assert_eq!(height_constant(1, 0, 0, HeightVariant::Tight), 15);
    }
}
