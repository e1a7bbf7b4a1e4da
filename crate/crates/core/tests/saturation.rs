use stablegraph::decorated::{enumerate_stab, CurveClass, CurveClassMonoid, EnumerationConfig};
use stablegraph::halfedge::{count_free, orbit_decompose, reduce_graph};
use stablegraph::verify::{suite_orbits, Profile, SweepConfig};

#[test]
fn saturation_ignores_the_spanning_forest() {
    let m = CurveClassMonoid::default();
    let stab = enumerate_stab(
        0,
        6,
        &CurveClass(vec![0]),
        &m,
        &EnumerationConfig::default(),
    )
    .unwrap();
    assert!(!stab.is_empty());
    let mut forests = 0;
    for g in &stab.graphs {
        let expected = g.saturate().certificate();
        for f in g.plain_spanning_forests() {
            forests += 1;
            assert_eq!(g.saturate_along(&f).certificate(), expected);
        }
    }
    assert!(forests >= stab.len());
}

#[test]
fn saturation_is_idempotent_and_lands_in_q() {
    let m = CurveClassMonoid::default();
    let stab = enumerate_stab(
        1,
        3,
        &CurveClass(vec![1]),
        &m,
        &EnumerationConfig::default(),
    )
    .unwrap();
    for g in &stab.graphs {
        let s = g.saturate();
        assert!(s.is_saturated() && s.is_stable());
        assert_eq!(s.saturate().certificate(), s.certificate());
        assert_eq!(s.num_legs(), g.num_legs());
    }
}

#[test]
fn orbit_partition_matches_reduced_graphs() {
    let mut cfg = SweepConfig::for_profile(Profile::Full);
    let r = suite_orbits(&cfg).unwrap();
    assert!(r.passed, "{:?}", r.counterexamples);
    cfg.orbit_degree = 0;
    cfg.orbit_max_legs = 6;
    let r = suite_orbits(&cfg).unwrap();
    assert!(r.passed, "{:?}", r.counterexamples);
}

#[test]
fn orbits_have_constant_free_count_and_reduced_representatives() {
    let m = CurveClassMonoid::default();
    let cfg = EnumerationConfig::default();
    let orbits = orbit_decompose(1, 4, &CurveClass(vec![1]), 3, &m, &cfg).unwrap();
    assert!(!orbits.is_empty());
    for o in &orbits {
        let k = o.representative.graph();
        assert_eq!(count_free(k), o.free);
        assert_eq!(
            reduce_graph(k).unwrap().orbit_key(),
            o.representative.orbit_key()
        );
        assert!(o.sizes.iter().sum::<usize>() > 0);
    }
}
