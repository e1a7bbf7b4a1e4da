//! Rational generating functions with denominators `prod_j (1 - j t)^{e_j}`
//! and exact recovery of such functions from finitely many terms.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RationalGF {
    /// Coefficients of `t^0, t^1, ...`.
    pub numerator: Vec<BigInt>,
    /// `j -> e_j`, with every `e_j > 0`.
    pub exponents: BTreeMap<u64, u32>,
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn trim(mut p: Vec<BigInt>) -> Vec<BigInt> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

impl RationalGF {
    pub fn new(numerator: Vec<BigInt>, exponents: BTreeMap<u64, u32>) -> Self {
        let exponents = exponents
            .into_iter()
            .filter(|&(j, e)| e > 0 && j > 0)
            .collect();
        Self {
            numerator: trim(numerator),
            exponents,
        }
    }

    pub fn denominator(&self) -> Vec<BigInt> {
        let mut d = vec![BigInt::one()];
        for (&j, &e) in &self.exponents {
            for _ in 0..e {
                d = poly_mul(&d, &[BigInt::one(), -BigInt::from(j)]);
            }
        }
        d
    }

    /// Largest `j` with `e_j > 0`.
    pub fn max_base(&self) -> u64 {
        self.exponents.keys().copied().max().unwrap_or(0)
    }

    /// First `len` power-series coefficients.
    pub fn expand(&self, len: usize) -> Vec<BigInt> {
        let d = self.denominator();
        let mut out: Vec<BigInt> = Vec::with_capacity(len);
        for n in 0..len {
            let mut c = self.numerator.get(n).cloned().unwrap_or_default();
            for k in 1..d.len().min(n + 1) {
                c -= &d[k] * &out[n - k];
            }
            out.push(c);
        }
        out
    }

    /// Equality as rational functions.
    pub fn same_function(&self, other: &RationalGF) -> bool {
        trim(poly_mul(&self.numerator, &other.denominator()))
            == trim(poly_mul(&other.numerator, &self.denominator()))
    }

    pub fn display(&self) -> String {
        let num = poly_string(&self.numerator);
        if self.exponents.is_empty() {
            return num;
        }
        let den: Vec<String> = self
            .exponents
            .iter()
            .map(|(&j, &e)| {
                let base = if j == 1 {
                    "(1-t)".to_string()
                } else {
                    format!("(1-{j}t)")
                };
                if e == 1 {
                    base
                } else {
                    format!("{base}^{e}")
                }
            })
            .collect();
        format!("({num})/({})", den.join(""))
    }
}

fn poly_string(p: &[BigInt]) -> String {
    let terms: Vec<String> = p
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| match k {
            0 => c.to_string(),
            1 => format!("{c}t"),
            _ => format!("{c}t^{k}"),
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ").replace("+ -", "- ")
    }
}

/// `d! t^d / prod_{j=1}^d (1 - j t)`.
pub fn gf_projective(d: usize) -> RationalGF {
    let mut numerator = vec![BigInt::zero(); d + 1];
    numerator[d] = (1..=d).map(BigInt::from).product();
    RationalGF::new(numerator, (1..=d as u64).map(|j| (j, 1)).collect())
}

/// `t^d / (1 - t)^d`: the dimensions of the `S_n`-invariants of `P_d`.
pub fn invariants_gf_projective(d: usize) -> Result<RationalGF> {
    if d == 0 {
        return Err(Error::Precondition("d must be at least 1".into()));
    }
    let mut numerator = vec![BigInt::zero(); d + 1];
    numerator[d] = BigInt::one();
    Ok(RationalGF::new(numerator, BTreeMap::from([(1, d as u32)])))
}

/// Orbits of `S_n` on surjections `[n] -> [d]`, counted by listing every map
/// and recording its vector of fibre sizes.
pub fn surjection_orbits_brute_force(n: usize, d: usize) -> usize {
    if d == 0 {
        return usize::from(n == 0);
    }
    assert!(d <= 16 && n < 256, "brute force is limited to small inputs");
    let mut seen = std::collections::BTreeSet::new();
    let mut f = vec![0usize; n];
    let mut sizes = [0u8; 16];
    sizes[0] = n as u8;
    loop {
        if sizes[..d].iter().all(|&s| s > 0) {
            seen.insert(sizes);
        }
        let mut i = 0;
        loop {
            if i == n {
                return seen.len();
            }
            sizes[f[i]] -= 1;
            f[i] += 1;
            if f[i] < d {
                sizes[f[i]] += 1;
                break;
            }
            f[i] = 0;
            sizes[0] += 1;
            i += 1;
        }
    }
}

/// `values[n] = sum_j p_j(n) j^n` for `n >= tail_start`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExpPolyFit {
    /// `polynomials[j - 1]` holds the coefficients of `p_j` in `n`, lowest
    /// first, with trailing zeros removed.
    #[serde(serialize_with = "rationals")]
    pub polynomials: Vec<Vec<BigRational>>,
    pub tail_start: usize,
    pub gf: RationalGF,
}

fn rationals<S: serde::Serializer>(
    p: &[Vec<BigRational>],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::Serialize;
    let strings: Vec<Vec<String>> = p
        .iter()
        .map(|c| c.iter().map(ToString::to_string).collect())
        .collect();
    strings.serialize(s)
}

impl ExpPolyFit {
    /// `deg p_j`, or `None` when `p_j = 0`.
    pub fn degrees(&self) -> Vec<Option<usize>> {
        self.polynomials
            .iter()
            .map(|p| p.len().checked_sub(1))
            .collect()
    }

    pub fn evaluate(&self, n: usize) -> BigRational {
        let mut total = BigRational::zero();
        for (j, p) in self.polynomials.iter().enumerate() {
            let base = BigRational::from_integer(BigInt::from(j + 1).pow(n as u32));
            let mut value = BigRational::zero();
            for c in p.iter().rev() {
                value = value * BigRational::from_integer(BigInt::from(n)) + c;
            }
            total += value * base;
        }
        total
    }
}

/// Smallest number of values accepted for `c` bases.
pub fn fit_horizon(c: usize) -> usize {
    2 * c * (c + 1)
}

/// Fit `values` by exponential polynomials in the bases `1..=c`, each of
/// degree at most `c`, from the earliest tail start that leaves the exact
/// system overdetermined.
pub fn fit_exponential_polynomial(values: &[BigInt], c: usize) -> Result<ExpPolyFit> {
    let needed = fit_horizon(c);
    if values.len() < needed || c == 0 {
        return Err(Error::HorizonTooShort {
            needed: needed.max(1),
            got: values.len(),
        });
    }
    let unknowns = c * (c + 1);
    let row = |n: usize| -> Vec<BigRational> {
        let mut r = Vec::with_capacity(unknowns);
        for j in 1..=c {
            let base = BigInt::from(j).pow(n as u32);
            for k in 0..=c {
                r.push(BigRational::from_integer(
                    &base * BigInt::from(n).pow(k as u32),
                ));
            }
        }
        r
    };
    let mut start = 0;
    while values.len() - start > unknowns {
        let a: Vec<Vec<BigRational>> = (start..values.len()).map(row).collect();
        let b: Vec<BigRational> = values[start..]
            .iter()
            .map(|v| BigRational::from_integer(v.clone()))
            .collect();
        if let Some(x) = linalg::solve(&a, &b) {
            let polynomials: Vec<Vec<BigRational>> = x
                .chunks(c + 1)
                .map(|chunk| {
                    let mut p = chunk.to_vec();
                    while p.last().is_some_and(Zero::is_zero) {
                        p.pop();
                    }
                    p
                })
                .collect();
            let gf = reconstruct(values, start, &polynomials);
            return Ok(ExpPolyFit {
                polynomials,
                tail_start: start,
                gf,
            });
        }
        start += 1;
    }
    Err(Error::NoFit {
        bases: c,
        horizon: values.len(),
    })
}

/// Denominator `prod_j (1 - j t)^{deg p_j + 1}`, numerator from the product
/// of the series with it.
fn reconstruct(values: &[BigInt], start: usize, polys: &[Vec<BigRational>]) -> RationalGF {
    let exponents: BTreeMap<u64, u32> = polys
        .iter()
        .enumerate()
        .filter(|(_, p)| !p.is_empty())
        .map(|(j, p)| (j as u64 + 1, p.len() as u32))
        .collect();
    let probe = RationalGF::new(vec![BigInt::one()], exponents.clone());
    let den = probe.denominator();
    let terms = start + den.len() - 1;
    let numerator: Vec<BigInt> = (0..terms.min(values.len()))
        .map(|n| {
            (0..=n.min(den.len() - 1))
                .map(|k| &den[k] * &values[n - k])
                .sum()
        })
        .collect();
    RationalGF::new(numerator, exponents)
}

/// `C(n - 1, d - 1)`, the closed form of the invariant dimensions.
pub fn invariant_dimension(n: usize, d: usize) -> BigInt {
    if d == 0 {
        return BigInt::from(usize::from(n == 0));
    }
    if n == 0 {
        return BigInt::zero();
    }
    binomial(BigInt::from(n - 1), BigInt::from(d - 1))
}
