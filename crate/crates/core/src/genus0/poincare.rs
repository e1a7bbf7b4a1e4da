//! Betti numbers of the moduli spaces of stable genus-0 pointed curves.

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Signed, Zero};

use crate::decorated::{enumerate_stab, CurveClass, CurveClassMonoid, EnumerationConfig};
use crate::error::{Error, Result};

fn add_into(acc: &mut Vec<BigInt>, poly: &[BigInt], shift: usize, scale: &BigInt) {
    if acc.len() < poly.len() + shift {
        acc.resize(poly.len() + shift, BigInt::zero());
    }
    for (k, c) in poly.iter().enumerate() {
        acc[k + shift] += c * scale;
    }
}

fn mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Poincare polynomials in `q = t^2` for `3..=n` points, by the recursion
/// `P_{m+1} = (1 + q) P_m + (q / 2) sum_{j=2}^{m-2} C(m, j) P_{j+1} P_{m-j+1}`.
fn polynomials(n: usize) -> Vec<Vec<BigInt>> {
    let mut p: Vec<Vec<BigInt>> = vec![Vec::new(); n.max(3) + 1];
    p[3] = vec![BigInt::one()];
    for m in 3..n {
        let mut next = Vec::new();
        add_into(&mut next, &p[m], 0, &BigInt::one());
        add_into(&mut next, &p[m], 1, &BigInt::one());
        let mut split = Vec::new();
        for j in 2..=m.saturating_sub(2) {
            add_into(
                &mut split,
                &mul(&p[j + 1], &p[m - j + 1]),
                0,
                &binomial(BigInt::from(m), BigInt::from(j)),
            );
        }
        let half: Vec<BigInt> = split.iter().map(|c| c / 2).collect();
        add_into(&mut next, &half, 1, &BigInt::one());
        p[m + 1] = next;
    }
    p
}

/// Betti numbers `b_0, b_1, ..., b_{2(n-3)}` (odd ones are zero).
pub fn poincare_m0n(n: usize) -> Result<Vec<BigInt>> {
    if n < 3 {
        return Err(Error::Precondition(format!(
            "need at least 3 points, got {n}"
        )));
    }
    Ok(spread(&polynomials(n)[n]))
}

fn spread(poly: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); 2 * poly.len() - 1];
    for (k, c) in poly.iter().enumerate() {
        out[2 * k] = c.clone();
    }
    out
}

/// Betti numbers for every `3 <= m <= n`, indexed by `m`.
pub(crate) fn poincare_table(n: usize) -> Vec<Vec<BigInt>> {
    polynomials(n)
        .iter()
        .map(|p| if p.is_empty() { Vec::new() } else { spread(p) })
        .collect()
}

/// `2^{n-1} - C(n, 2) - 1`.
pub fn b2_closed_form(n: usize) -> BigInt {
    (BigInt::one() << (n - 1)) - BigInt::from(n * (n - 1) / 2) - 1
}

/// Euler characteristic from the boundary stratification: each stratum
/// contributes the product over its vertices of `(-1)^{m-3} (m-3)!`, the
/// Euler characteristic of the open moduli space with `m` points.
pub fn euler_characteristic_from_strata(n: u32) -> Result<BigInt> {
    let m = CurveClassMonoid::default();
    let stab = enumerate_stab(
        0,
        n,
        &CurveClass(vec![0]),
        &m,
        &EnumerationConfig::default(),
    )?;
    let mut total = BigInt::zero();
    for g in &stab.graphs {
        let mut term = BigInt::one();
        for val in g.graph().valences() {
            let k = val - 3;
            let fact: BigInt = (1..=k).map(BigInt::from).product();
            term *= if k % 2 == 0 { fact } else { -fact };
        }
        total += term;
    }
    Ok(total)
}

/// `b_k = b_{2(n-3)-k}`.
pub fn satisfies_duality(betti: &[BigInt]) -> bool {
    betti.iter().eq(betti.iter().rev()) && betti.iter().all(|b| !b.is_negative())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_cases() {
        assert_eq!(poincare_m0n(3).unwrap(), ints(&[1]));
        assert_eq!(poincare_m0n(4).unwrap(), ints(&[1, 0, 1]));
        assert_eq!(poincare_m0n(5).unwrap()[2], BigInt::from(5));
        assert_eq!(poincare_m0n(6).unwrap(), ints(&[1, 0, 16, 0, 16, 0, 1]));
        assert!(poincare_m0n(2).is_err());
    }

    #[test]
    fn closed_form_and_duality() {
        for n in 4..=12 {
            let b = poincare_m0n(n).unwrap();
            assert_eq!(b[2], b2_closed_form(n), "n = {n}");
            assert!(satisfies_duality(&b));
        }
    }

    #[test]
    fn total_dimension_matches_strata() {
        for n in 3..=7u32 {
            let total: BigInt = poincare_m0n(n as usize).unwrap().iter().sum();
            assert_eq!(
                total,
                euler_characteristic_from_strata(n).unwrap(),
                "n = {n}"
            );
        }
    }
}
