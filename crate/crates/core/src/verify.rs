//! Property suites over finite sweeps. Every suite returns a deterministic
//! report: counts of what was checked, and counterexamples (expected empty).

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::decorated::{
    build_q_poset, build_stab_poset, enumerate_stab, single_edge_contractions, CurveClass,
    CurveClassMonoid, DecoratedGraph, EnumerationConfig, DEFAULT_CEILING,
};
use crate::error::Result;
use crate::fs::{
    fit_exponential_polynomial, fit_horizon, gf_projective, invariant_dimension,
    invariants_gf_projective, surjection_count, surjection_orbits_brute_force, RationalGF,
};
use crate::genus0::{
    b2_closed_form, euler_characteristic_from_strata, find_reduction, poincare_m0n,
    satisfies_duality, tree_pullback, RewriteStep, StableTreeClass,
};
use crate::graph::{canonical_form, generate, HalfEdgeGraph, UnionFind};
use crate::halfedge::{
    bound_halfedge_bound, check_plain_bound, check_tree_bound, classify_half_edges_with, pullback,
    qualifying_trees, reduce_graph, surjections, tree_shapes, HalfEdgeTag, PathSemantics,
    ReducedGraph,
};
use crate::independence::{homology_ranks, independence_complex, tutte_01};
use crate::oracle::naive_stab_counts;

/// Counterexamples kept per suite.
const MAX_COUNTEREXAMPLES: usize = 20;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Profile {
    #[default]
    Small,
    Full,
}

/// Ranges for every sweep. All ranges are inclusive.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub stab_max_genus: u32,
    pub stab_max_legs: u32,
    pub stab_max_degree: u32,
    pub independence_max_edges: usize,
    pub bounds_max_genus: u32,
    pub bounds_max_degree: u32,
    pub bounds_max_legs: u32,
    pub bounds_max_free: usize,
    pub tree_max_excess: usize,
    pub reduction_max_excess: usize,
    pub reduction_max_legs: usize,
    pub gf_max_n: usize,
    pub gf_max_d: usize,
    pub invariants_max_n: usize,
    pub invariants_max_d: usize,
    pub poincare_min_n: usize,
    pub poincare_max_n: usize,
    pub euler_max_n: u32,
    /// `Q(0, m, beta)` for `m <= orbit_max_legs`, with `L.beta = orbit_degree`.
    pub orbit_max_legs: u32,
    pub orbit_degree: u32,
    pub semantics: PathSemantics,
    pub ceiling: usize,
}

impl SweepConfig {
    pub fn for_profile(profile: Profile) -> Self {
        match profile {
            Profile::Full => Self {
                stab_max_genus: 1,
                stab_max_legs: 5,
                stab_max_degree: 1,
                independence_max_edges: 7,
                bounds_max_genus: 2,
                bounds_max_degree: 2,
                bounds_max_legs: 8,
                bounds_max_free: 3,
                tree_max_excess: 3,
                reduction_max_excess: 2,
                reduction_max_legs: 14,
                gf_max_n: 20,
                gf_max_d: 6,
                invariants_max_n: 12,
                invariants_max_d: 4,
                poincare_min_n: 4,
                poincare_max_n: 9,
                euler_max_n: 7,
                orbit_max_legs: 5,
                orbit_degree: 1,
                semantics: PathSemantics::Interior,
                ceiling: DEFAULT_CEILING * 20,
            },
            Profile::Small => Self {
                stab_max_genus: 1,
                stab_max_legs: 4,
                stab_max_degree: 1,
                independence_max_edges: 5,
                bounds_max_genus: 1,
                bounds_max_degree: 1,
                bounds_max_legs: 5,
                bounds_max_free: 3,
                tree_max_excess: 2,
                reduction_max_excess: 1,
                reduction_max_legs: 10,
                gf_max_n: 12,
                gf_max_d: 4,
                invariants_max_n: 8,
                invariants_max_d: 3,
                poincare_min_n: 4,
                poincare_max_n: 9,
                euler_max_n: 6,
                orbit_max_legs: 4,
                orbit_degree: 1,
                semantics: PathSemantics::Interior,
                ceiling: DEFAULT_CEILING,
            },
        }
    }

    fn enumeration(&self) -> EnumerationConfig {
        EnumerationConfig {
            ceiling: self.ceiling,
            ..Default::default()
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub passed: bool,
    pub checked: u64,
    pub details: Value,
    pub counterexamples: Vec<Value>,
}

struct Collector {
    checked: u64,
    failures: u64,
    counterexamples: Vec<Value>,
}

impl Collector {
    fn new() -> Self {
        Self {
            checked: 0,
            failures: 0,
            counterexamples: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, witness: impl FnOnce() -> Value) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.counterexamples.len() < MAX_COUNTEREXAMPLES {
                self.counterexamples.push(witness());
            }
        }
    }

    fn finish(self, name: &str, details: Value) -> SuiteReport {
        SuiteReport {
            name: name.to_string(),
            passed: self.failures == 0,
            checked: self.checked,
            details,
            counterexamples: self.counterexamples,
        }
    }
}

fn graph_json(d: &DecoratedGraph) -> Value {
    serde_json::to_value(d.to_json()).unwrap_or(Value::Null)
}

fn plain_json(g: &HalfEdgeGraph) -> Value {
    serde_json::to_value(g.to_json()).unwrap_or(Value::Null)
}

/// Enumeration sizes against the naive generator.
pub fn suite_enumeration(cfg: &SweepConfig) -> Result<SuiteReport> {
    let monoid = CurveClassMonoid::default();
    let mut c = Collector::new();
    let mut sizes = BTreeMap::new();
    for h in 0..=cfg.stab_max_genus {
        for b in 0..=cfg.stab_max_degree {
            for n in 0..=cfg.stab_max_legs {
                let got =
                    enumerate_stab(h, n, &CurveClass(vec![b]), &monoid, &cfg.enumeration())?.len();
                let (_, naive) = naive_stab_counts(h, n as usize, b);
                sizes.insert(format!("({h},{n},{b})"), got);
                c.check(
                    got == naive,
                    || json!({"h": h, "n": n, "beta": b, "enumerated": got, "naive": naive}),
                );
            }
        }
    }
    Ok(c.finish("enumeration-oracle", json!({ "sizes": sizes })))
}

/// Antisymmetry and strict monotonicity of `I` on `Q`, weak monotonicity
/// on coverings of `Stab` with equality exactly for plain-plain edges, and
/// saturation as an order-preserving retraction.
pub fn suite_poset(cfg: &SweepConfig) -> Result<SuiteReport> {
    let monoid = CurveClassMonoid::default();
    let mut c = Collector::new();
    let mut q_sizes = BTreeMap::new();
    for h in 0..=cfg.stab_max_genus {
        for b in 0..=cfg.stab_max_degree {
            for n in 0..=cfg.stab_max_legs {
                let stab = enumerate_stab(h, n, &CurveClass(vec![b]), &monoid, &cfg.enumeration())?;
                let sp = build_stab_poset(&stab);
                let q = build_q_poset(&stab);
                q_sizes.insert(format!("({h},{n},{b})"), q.poset.len());
                let tag = || json!({"h": h, "n": n, "beta": b});
                let violations = q.poset.antisymmetry_violations();
                c.check(
                    violations.is_empty(),
                    || json!({"case": tag(), "antisymmetry": violations}),
                );
                for (a, z) in q.poset.strict_pairs() {
                    let (ia, iz) = (
                        q.poset.graphs[a].invariant_i(),
                        q.poset.graphs[z].invariant_i(),
                    );
                    c.check(ia < iz, || {
                        json!({"case": tag(), "q_pair": [q.poset.elements[a].to_string(), q.poset.elements[z].to_string()]})
                    });
                }
                for (i, g) in stab.graphs.iter().enumerate() {
                    for e in g.graph().internal_edges() {
                        let (u, w) = g.graph().endpoints(e);
                        let plain_plain = u != w && g.is_plain(u) && g.is_plain(w);
                        let (target, _) = g.contract(&[e])?;
                        let (before, after) = (g.invariant_i(), target.invariant_i());
                        let ok = if plain_plain {
                            before == after
                        } else {
                            before < after
                        };
                        c.check(
                            ok,
                            || json!({"case": tag(), "graph": graph_json(g), "edge": [e.0, e.1]}),
                        );
                    }
                    let s = q.saturation[i];
                    let sat = &q.poset.graphs[s];
                    c.check(
                        sat.saturate().certificate() == sat.certificate(),
                        || json!({"case": tag(), "not_idempotent": graph_json(g)}),
                    );
                }
                for (a, z) in single_edge_contractions(&stab) {
                    c.check(
                        q.poset.le(q.saturation[a], q.saturation[z]),
                        || json!({"case": tag(), "stab_pair": [a, z]}),
                    );
                }
                for (a, z) in sp.strict_pairs() {
                    c.check(
                        q.poset.le(q.saturation[a], q.saturation[z]),
                        || json!({"case": tag(), "stab_closure_pair": [a, z]}),
                    );
                }
            }
        }
    }
    Ok(c.finish("poset-soundness", json!({ "q_sizes": q_sizes })))
}

/// Concentration of reduced homology in degree `|E| - e - 1` and agreement
/// with `T_G(0, 1)`.
pub fn suite_independence(cfg: &SweepConfig) -> Result<SuiteReport> {
    let levels = generate::connected_multigraphs(cfg.independence_max_edges);
    let mut c = Collector::new();
    let mut per_edges = Vec::new();
    for level in &levels {
        per_edges.push(level.len());
        let results: Vec<(bool, usize, u64, i64)> = level
            .par_iter()
            .map(|g| {
                let h = homology_ranks(&independence_complex(g));
                (
                    h.is_concentrated(),
                    h.top(),
                    tutte_01(g),
                    h.reduced_euler_characteristic(),
                )
            })
            .collect();
        for (g, (concentrated, top, tutte, euler)) in level.iter().zip(results) {
            let d = g.num_internal_edges() as i64 - g.betti_1() as i64 - 1;
            let sign = if d.rem_euclid(2) == 0 { 1 } else { -1 };
            let ok = concentrated && top as u64 == tutte && euler == sign * top as i64;
            c.check(ok, || {
                json!({"graph": plain_json(g), "concentrated": concentrated, "i": top, "tutte01": tutte})
            });
        }
    }
    Ok(c.finish("independence", json!({ "graphs_by_edges": per_edges })))
}

/// Counting bounds over saturated shapes, then the external-edge bound over
/// qualifying trees.
pub fn suite_bounds(cfg: &SweepConfig) -> Result<SuiteReport> {
    let monoid = CurveClassMonoid::default();
    let mut c = Collector::new();
    let shape_cfg = EnumerationConfig {
        ceiling: cfg.ceiling,
        labeled_legs: false,
        saturated_only: true,
    };
    let mut saturated = 0u64;
    let mut with_bound = 0u64;
    let mut within_free = 0u64;
    for g in 0..=cfg.bounds_max_genus {
        for b in 0..=cfg.bounds_max_degree {
            for n in 0..=cfg.bounds_max_legs {
                let q = enumerate_stab(g, n, &CurveClass(vec![b]), &monoid, &shape_cfg)?;
                saturated += q.len() as u64;
                let outcomes: Vec<Vec<(bool, &'static str)>> = q
                    .graphs
                    .par_iter()
                    .map(|d| bounds_for(d, g, b, cfg, &monoid))
                    .collect::<Result<_>>()?;
                for (d, checks) in q.graphs.iter().zip(outcomes) {
                    for (ok, what) in checks {
                        match what {
                            "bound" => with_bound += 1,
                            "plain" => within_free += 1,
                            _ => {}
                        }
                        c.check(ok, || json!({"check": what, "graph": graph_json(d)}));
                    }
                }
            }
        }
    }
    let mut trees = BTreeMap::new();
    for i in 0..=cfg.tree_max_excess {
        // Leaves of a qualifying tree have valence >= 4, so there are at most
        // i of them, at most i - 2 branch vertices and at most i further
        // vertices of excess; trivalent vertices of tree degree 2 are never
        // adjacent, so V <= 6i - 5. One more vertex is swept as a margin.
        let limit = (6 * i).saturating_sub(4).max(2);
        let found = qualifying_trees(i, limit);
        let mut max_vertices = 0;
        for t in &found {
            max_vertices = max_vertices.max(t.num_vertices());
            let r = check_tree_bound(t, i)?;
            c.check(
                r.ok,
                || json!({"check": "tree", "i": i, "tree": plain_json(t), "report": r}),
            );
        }
        c.check(
            max_vertices < limit,
            || json!({"check": "tree-margin", "i": i, "max_vertices": max_vertices}),
        );
        trees.insert(i.to_string(), json!({"qualifying": found.len(), "max_vertices": max_vertices, "swept_vertices": limit}));
    }
    Ok(c.finish(
        "bounds",
        json!({
            "saturated_shapes": saturated,
            "with_bound_half_edges": with_bound,
            "within_free_limit": within_free,
            "trees": trees,
        }),
    ))
}

fn bounds_for(
    d: &DecoratedGraph,
    genus: u32,
    degree: u32,
    cfg: &SweepConfig,
    monoid: &CurveClassMonoid,
) -> Result<Vec<(bool, &'static str)>> {
    let mut out = Vec::new();
    let cls = classify_half_edges_with(d, cfg.semantics);
    let free = cls.count(HalfEdgeTag::Free);
    if cls.count(HalfEdgeTag::Bound) > 0 {
        out.push((bound_halfedge_bound(d, monoid)?.ok, "bound"));
        out.push((cls.classes.iter().all(|k| k.len() >= 2), "class-size"));
    }
    if free <= cfg.bounds_max_free {
        out.push((check_plain_bound(d, free, monoid)?.ok, "plain"));
        // The orbit of the lone plain vertex is represented by the tripod,
        // which carries 3 legs whatever the bound says.
        if genus > 0 || degree > 0 {
            let k = reduce_graph(d)?;
            let limit = (2 * free + 2 * genus as usize + 2 * degree as usize).max(1);
            out.push((k.graph().num_legs() <= limit, "reduced-legs"));
        }
    }
    Ok(out)
}

fn validate_case1(h: &HalfEdgeGraph, step: &RewriteStep, degree: usize) -> bool {
    let RewriteStep::Case1 {
        delta, residual, ..
    } = step
    else {
        return false;
    };
    let Ok(r) = StableTreeClass::new(residual.clone()) else {
        return false;
    };
    let Ok(back) = tree_pullback(residual, delta) else {
        return false;
    };
    let units = |g: &HalfEdgeGraph| canonical_form(g, &vec![(); g.num_vertices()]);
    r.degree() == degree && r.num_legs() + 1 == h.num_legs() && units(&back) == units(h)
}

/// Every tree of excess `1 <= i <= max` with more than `13i/2` legs admits a
/// reduction step, and the step is valid.
pub fn suite_reduction(cfg: &SweepConfig) -> Result<SuiteReport> {
    let mut c = Collector::new();
    let mut counts = BTreeMap::new();
    for i in 1..=cfg.reduction_max_excess {
        let min_legs = 13 * i / 2 + 1;
        if min_legs > cfg.reduction_max_legs {
            continue;
        }
        let max_vertices = cfg.reduction_max_legs - 2 - i;
        let mut case1 = 0;
        let mut case2 = 0;
        for shape in tree_shapes(i, max_vertices) {
            let n = shape.num_legs();
            if n < min_legs {
                continue;
            }
            // Legs are interchangeable for applicability; label them in order.
            let labels: Vec<Option<u32>> = {
                let mut next = 0;
                (0..shape.num_half_edges())
                    .map(|h| {
                        shape.is_leg(h).then(|| {
                            next += 1;
                            next
                        })
                    })
                    .collect()
            };
            let g = HalfEdgeGraph::new(
                shape.involution().to_vec(),
                shape.vertex_map().to_vec(),
                shape.num_vertices(),
                labels,
            )?;
            let h = StableTreeClass::new(g.clone())?;
            let ok = match find_reduction(&h) {
                Ok(step @ RewriteStep::Case1 { .. }) => {
                    case1 += 1;
                    validate_case1(&g, &step, i)
                }
                Ok(RewriteStep::Case2 {
                    exchanged, then, ..
                }) => {
                    case2 += 1;
                    StableTreeClass::new(exchanged.clone()).is_ok_and(|x| x.degree() == i)
                        && validate_case1(&exchanged, &then, i)
                }
                Err(_) => false,
            };
            c.check(ok, || json!({"i": i, "tree": plain_json(&g)}));
        }
        counts.insert(i.to_string(), json!({"case1": case1, "case2": case2}));
    }
    Ok(c.finish("reduction-totality", json!({ "by_excess": counts })))
}

/// Generating functions against direct counts, plus exact fitting.
pub fn suite_generating_functions(cfg: &SweepConfig) -> Result<SuiteReport> {
    let mut c = Collector::new();
    for d in 0..=cfg.gf_max_d {
        let e = gf_projective(d).expand(cfg.gf_max_n + 1);
        for (n, v) in e.iter().enumerate() {
            c.check(
                *v == surjection_count(n, d),
                || json!({"projective": d, "n": n}),
            );
        }
    }
    for d in 1..=cfg.invariants_max_d {
        let e = invariants_gf_projective(d)?.expand(cfg.invariants_max_n + 1);
        for (n, v) in e.iter().enumerate() {
            let brute = surjection_orbits_brute_force(n, d);
            c.check(
                *v == BigInt::from(brute) && *v == invariant_dimension(n, d),
                || json!({"invariants": d, "n": n, "series": v.to_string(), "orbits": brute}),
            );
        }
    }
    let mut fits = BTreeMap::new();
    for d in 1..=cfg.gf_max_d.min(4) {
        let target = gf_projective(d);
        let values = target.expand(fit_horizon(d));
        let ok = match fit_exponential_polynomial(&values, d) {
            Ok(fit) => {
                fits.insert(
                    d.to_string(),
                    json!({"tail_start": fit.tail_start, "gf": fit.gf.display()}),
                );
                fit.gf.same_function(&target)
            }
            Err(_) => false,
        };
        c.check(ok, || json!({"fit_projective": d}));
    }
    for gf in sample_gfs() {
        let cmax = gf.max_base() as usize;
        let values = gf.expand(fit_horizon(cmax) + gf.numerator.len());
        let ok =
            fit_exponential_polynomial(&values, cmax).is_ok_and(|fit| fit.gf.same_function(&gf));
        c.check(ok, || json!({"retraction": gf.display()}));
    }
    Ok(c.finish("generating-functions", json!({ "fits": fits })))
}

/// A fixed family of rational functions with admissible denominators.
fn sample_gfs() -> Vec<RationalGF> {
    let b = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
    vec![
        RationalGF::new(b(&[1, -3, 2]), BTreeMap::from([(1, 2), (2, 1)])),
        RationalGF::new(b(&[0, 0, 5, 1, -7]), BTreeMap::from([(2, 2), (3, 1)])),
        RationalGF::new(b(&[4]), BTreeMap::from([(1, 2), (2, 1)])),
        RationalGF::new(b(&[2, 0, 0, 0, 0, 1]), BTreeMap::from([(1, 1), (3, 2)])),
    ]
}

/// Duality and the closed form of `b_2` for the genus-0 Betti numbers, and
/// their total against the Euler characteristic of the stratification.
pub fn suite_poincare(cfg: &SweepConfig) -> Result<SuiteReport> {
    let mut c = Collector::new();
    let mut table = BTreeMap::new();
    for n in cfg.poincare_min_n..=cfg.poincare_max_n {
        let b = poincare_m0n(n)?;
        table.insert(
            n.to_string(),
            b.iter()
                .step_by(2)
                .map(ToString::to_string)
                .collect::<Vec<_>>(),
        );
        c.check(satisfies_duality(&b), || json!({"duality": n}));
        c.check(
            b[2] == b2_closed_form(n),
            || json!({"b2": n, "got": b[2].to_string()}),
        );
    }
    for n in 3..=cfg.euler_max_n {
        let total: BigInt = poincare_m0n(n as usize)?.iter().sum();
        let strata = euler_characteristic_from_strata(n)?;
        c.check(
            total == strata,
            || json!({"euler": n, "betti_total": total.to_string(), "strata": strata.to_string()}),
        );
    }
    Ok(c.finish("poincare", json!({ "even_betti": table })))
}

/// The orbit partition generated by all surjection pullbacks agrees with
/// the partition by reduced graphs, and pullbacks preserve the free count.
pub fn suite_orbits(cfg: &SweepConfig) -> Result<SuiteReport> {
    let monoid = CurveClassMonoid::default();
    let beta = CurveClass(vec![cfg.orbit_degree]);
    let q_cfg = EnumerationConfig {
        ceiling: cfg.ceiling,
        labeled_legs: true,
        saturated_only: true,
    };
    let mut graphs: Vec<DecoratedGraph> = Vec::new();
    let mut index = BTreeMap::new();
    let mut by_legs: Vec<Vec<usize>> = Vec::new();
    for m in 0..=cfg.orbit_max_legs {
        let q = enumerate_stab(0, m, &beta, &monoid, &q_cfg)?;
        let mut ids = Vec::new();
        for (cert, g) in q.certificates.into_iter().zip(q.graphs) {
            index.insert(cert, graphs.len());
            ids.push(graphs.len());
            graphs.push(g);
        }
        by_legs.push(ids);
    }
    let mut c = Collector::new();
    let mut uf = UnionFind::new(graphs.len());
    let free: Vec<usize> = graphs
        .iter()
        .map(|g| classify_half_edges_with(g, cfg.semantics).count(HalfEdgeTag::Free))
        .collect();
    for (id, g) in graphs.iter().enumerate() {
        let n = g.num_legs() as u32;
        for m in n..=cfg.orbit_max_legs {
            for f in surjections(m, n) {
                let p = pullback(g, &f)?;
                match index.get(&p.certificate()) {
                    Some(&j) => {
                        uf.union(id, j);
                        c.check(
                            free[j] == free[id],
                            || json!({"free_changed": graph_json(g), "map": f}),
                        );
                    }
                    None => c.check(
                        false,
                        || json!({"pullback_missing": graph_json(g), "map": f}),
                    ),
                }
            }
        }
    }
    let keys: Vec<_> = graphs
        .iter()
        .map(|g| reduce_graph(g).map(|k: ReducedGraph| k.orbit_key()))
        .collect::<Result<_>>()?;
    for a in 0..graphs.len() {
        for b in a + 1..graphs.len() {
            let same_orbit = uf.find(a) == uf.find(b);
            c.check(same_orbit == (keys[a] == keys[b]), || {
                json!({"pair": [graph_json(&graphs[a]), graph_json(&graphs[b])], "same_orbit": same_orbit})
            });
        }
    }
    let orbits = {
        let mut roots: Vec<usize> = (0..graphs.len()).map(|i| uf.find(i)).collect();
        roots.sort_unstable();
        roots.dedup();
        roots.len()
    };
    let sizes: Vec<usize> = by_legs.iter().map(Vec::len).collect();
    Ok(c.finish("orbits", json!({ "q_sizes": sizes, "orbits": orbits })))
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub profile: Profile,
    pub config: SweepConfig,
    pub passed: bool,
    pub suites: Vec<SuiteReport>,
}

/// The suites in report order, by name.
pub const SUITES: [&str; 8] = [
    "enumeration-oracle",
    "poset-soundness",
    "independence",
    "bounds",
    "reduction-totality",
    "generating-functions",
    "poincare",
    "orbits",
];

pub fn run_suite(name: &str, cfg: &SweepConfig) -> Result<SuiteReport> {
    match name {
        "enumeration-oracle" => suite_enumeration(cfg),
        "poset-soundness" => suite_poset(cfg),
        "independence" => suite_independence(cfg),
        "bounds" => suite_bounds(cfg),
        "reduction-totality" => suite_reduction(cfg),
        "generating-functions" => suite_generating_functions(cfg),
        "poincare" => suite_poincare(cfg),
        "orbits" => suite_orbits(cfg),
        other => Err(crate::Error::Precondition(format!(
            "unknown suite '{other}'"
        ))),
    }
}

pub fn verify_all(profile: Profile, cfg: &SweepConfig) -> Result<VerifyReport> {
    let suites = SUITES
        .iter()
        .map(|s| run_suite(s, cfg))
        .collect::<Result<Vec<_>>>()?;
    Ok(VerifyReport {
        profile,
        config: cfg.clone(),
        passed: suites.iter().all(|s| s.passed),
        suites,
    })
}
