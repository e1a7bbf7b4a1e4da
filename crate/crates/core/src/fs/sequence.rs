use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::Zero;
use serde::Serialize;

use super::expr::Expr;

/// `|FS([n], [d])|` by inclusion-exclusion.
pub fn surjection_count(n: usize, d: usize) -> BigInt {
    let mut total = BigInt::zero();
    for j in 0..=d {
        let term = binomial(BigInt::from(d), BigInt::from(j)) * BigInt::from(d - j).pow(n as u32);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Dimensions `M[0], ..., M[len - 1]` together with the expression that
/// built them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimSequence {
    pub values: Vec<BigInt>,
    #[serde(serialize_with = "as_string")]
    pub provenance: Expr,
}

fn as_string<S: serde::Serializer>(e: &Expr, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&e.to_string())
}

impl DimSequence {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

pub fn dim_projective(d: usize, len: usize) -> DimSequence {
    DimSequence {
        values: (0..len).map(|n| surjection_count(n, d)).collect(),
        provenance: Expr::Projective(d),
    }
}

/// `n -> M[n + k]`; the result is `k` values shorter.
pub fn seq_shift(m: &DimSequence, k: usize) -> DimSequence {
    DimSequence {
        values: m.values.iter().skip(k).cloned().collect(),
        provenance: Expr::Shift(Box::new(m.provenance.clone()), k),
    }
}

/// `n -> sum_k C(n, k) M[k] N[n - k]`.
pub fn seq_convolve(m: &DimSequence, n: &DimSequence) -> DimSequence {
    let len = m.len().min(n.len());
    let values = (0..len)
        .map(|t| {
            (0..=t)
                .map(|k| {
                    binomial(BigInt::from(t), BigInt::from(k)) * &m.values[k] * &n.values[t - k]
                })
                .sum()
        })
        .collect();
    DimSequence {
        values,
        provenance: Expr::Conv(
            Box::new(m.provenance.clone()),
            Box::new(n.provenance.clone()),
        ),
    }
}

pub fn seq_sum(parts: &[DimSequence]) -> DimSequence {
    let len = parts.iter().map(DimSequence::len).min().unwrap_or(0);
    DimSequence {
        values: (0..len)
            .map(|t| parts.iter().map(|p| &p.values[t]).sum())
            .collect(),
        provenance: Expr::Sum(parts.iter().map(|p| p.provenance.clone()).collect()),
    }
}
