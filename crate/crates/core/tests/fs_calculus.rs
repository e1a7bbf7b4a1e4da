use std::collections::BTreeMap;

use num_bigint::BigInt;
use proptest::prelude::*;
use stablegraph::fs::{
    dim_projective, fit_exponential_polynomial, fit_horizon, seq_convolve, seq_shift, seq_sum,
    Expr, RationalGF,
};

const LEN: usize = 12;

fn expr() -> impl Strategy<Value = Expr> {
    let leaf = (0usize..4).prop_map(Expr::Projective);
    leaf.prop_recursive(3, 12, 3, |inner| {
        prop_oneof![
            (inner.clone(), 0usize..3).prop_map(|(e, k)| Expr::Shift(Box::new(e), k)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Conv(Box::new(a), Box::new(b))),
            prop::collection::vec(inner, 1..3).prop_map(Expr::Sum),
        ]
    })
}

/// Rational functions whose pole at `1/j` has order at most `C + 1`, with
/// `C` the largest base; these are exactly the fittable ones.
fn admissible_gf() -> impl Strategy<Value = RationalGF> {
    (1u64..=3).prop_flat_map(|c| {
        (
            prop::collection::vec(-5i64..=5, 1..4),
            prop::collection::btree_map(1..=c, 1..=(c as u32 + 1), 0..c as usize),
            1..=(c as u32 + 1),
        )
            .prop_map(move |(num, mut exps, top)| {
                exps.insert(c, top);
                RationalGF::new(num.into_iter().map(BigInt::from).collect(), exps)
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn convolution_is_commutative(a in expr(), b in expr()) {
        let (x, y) = (a.evaluate(LEN), b.evaluate(LEN));
        prop_assert_eq!(seq_convolve(&x, &y).values, seq_convolve(&y, &x).values);
    }

    #[test]
    fn convolution_is_associative(a in expr(), b in expr(), c in expr()) {
        let (x, y, z) = (a.evaluate(LEN), b.evaluate(LEN), c.evaluate(LEN));
        let left = seq_convolve(&seq_convolve(&x, &y), &z);
        let right = seq_convolve(&x, &seq_convolve(&y, &z));
        prop_assert_eq!(left.values, right.values);
    }

    #[test]
    fn expressions_round_trip_through_text(e in expr()) {
        let parsed = Expr::parse(&e.to_string()).unwrap();
        prop_assert_eq!(&parsed, &e);
        prop_assert_eq!(parsed.height().bound, e.height().bound);
    }

    #[test]
    fn fitting_recovers_admissible_functions(gf in admissible_gf()) {
        let c = gf.max_base() as usize;
        let values = gf.expand(fit_horizon(c) + gf.numerator.len());
        let fit = fit_exponential_polynomial(&values, c).unwrap();
        prop_assert!(fit.gf.same_function(&gf), "{} vs {}", fit.gf.display(), gf.display());
        for (n, v) in values.iter().enumerate().skip(fit.tail_start) {
            prop_assert_eq!(fit.evaluate(n), num_rational::BigRational::from_integer(v.clone()));
        }
    }
}

#[test]
fn shift_and_sum_follow_their_definitions() {
    let p2 = dim_projective(2, LEN);
    let p3 = dim_projective(3, LEN);
    let s = seq_shift(&p3, 2);
    assert_eq!(s.values[..], p3.values[2..]);
    let total = seq_sum(&[p2.clone(), p3.clone()]);
    for n in 0..LEN {
        assert_eq!(total.values[n], &p2.values[n] + &p3.values[n]);
    }
    assert_eq!(total.provenance.to_string(), "sum(P2,P3)");
}

#[test]
fn fitting_a_pure_exponential() {
    let values: Vec<BigInt> = (0..fit_horizon(2) as u32)
        .map(|n| BigInt::from(3) * BigInt::from(2).pow(n))
        .collect();
    let fit = fit_exponential_polynomial(&values, 2).unwrap();
    let expected = RationalGF::new(vec![BigInt::from(3)], BTreeMap::from([(2, 1)]));
    assert!(fit.gf.same_function(&expected));
    assert_eq!(fit.tail_start, 0);
}
