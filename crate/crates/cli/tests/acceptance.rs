use std::io::Write;
use std::process::Command;
use std::time::{Duration, Instant};

use stablegraph::verify::{
    suite_bounds, suite_enumeration, suite_generating_functions, suite_independence,
    suite_poincare, suite_poset, suite_reduction, Profile, SuiteReport, SweepConfig,
};

const ENUMERATION_LIMIT: Duration = Duration::from_secs(60);
const POSET_LIMIT: Duration = Duration::from_secs(60);
const INDEPENDENCE_LIMIT: Duration = Duration::from_secs(5 * 60);
const BOUNDS_LIMIT: Duration = Duration::from_secs(5 * 60);
const REDUCTION_LIMIT: Duration = Duration::from_secs(2 * 60);
const GF_LIMIT: Duration = Duration::from_secs(30);
const POINCARE_LIMIT: Duration = Duration::from_secs(10);

struct Outcome {
    criterion: u32,
    passed: bool,
    line: String,
}

fn line(text: &str) {
    // Straight to the process stderr so the lines survive output capture.
    let _ = writeln!(std::io::stderr(), "{text}");
}

fn timed(
    criterion: u32,
    title: &str,
    limit: Duration,
    run: impl FnOnce() -> stablegraph::Result<SuiteReport>,
) -> Outcome {
    let start = Instant::now();
    let result = run();
    let elapsed = start.elapsed();
    let (passed, detail) = match result {
        Ok(r) if !r.passed => (
            false,
            format!(
                "{} counterexamples, first: {}",
                r.counterexamples.len(),
                r.counterexamples
                    .first()
                    .map(|c| c.to_string())
                    .unwrap_or_default()
            ),
        ),
        Ok(_) if elapsed > limit => (false, format!("exceeded {:?}", limit)),
        Ok(r) => (true, format!("{} checks", r.checked)),
        Err(e) => (false, e.to_string()),
    };
    let status = if passed { "PASS" } else { "FAIL" };
    let text = format!(
        "criterion {criterion} [{status}] {title}: {detail} in {:.1}s (limit {}s)",
        elapsed.as_secs_f64(),
        limit.as_secs()
    );
    line(&text);
    Outcome {
        criterion,
        passed,
        line: text,
    }
}

fn determinism() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_stablegraph");
    let run = || {
        Command::new(bin)
            .args(["verify-all", "--profile", "small"])
            .env_remove("STABLEGRAPH_CEILING")
            .output()
            .expect("spawn stablegraph")
    };
    let (a, b) = (run(), run());
    let passed =
        a.status.success() && b.status.success() && !a.stdout.is_empty() && a.stdout == b.stdout;
    let status = if passed { "PASS" } else { "FAIL" };
    let text =
        format!(
        "criterion 8 [{status}] determinism: exit codes {:?}/{:?}, reports of {} and {} bytes {}",
        a.status.code(),
        b.status.code(),
        a.stdout.len(),
        b.stdout.len(),
        if a.stdout == b.stdout { "identical" } else { "differ" }
    );
    line(&text);
    Outcome {
        criterion: 8,
        passed,
        line: text,
    }
}

#[test]
fn acceptance_criteria() {
    let cfg = SweepConfig::for_profile(Profile::Full);
    assert_eq!(
        (cfg.stab_max_genus, cfg.stab_max_legs, cfg.stab_max_degree),
        (1, 5, 1)
    );
    assert_eq!(cfg.independence_max_edges, 7);
    assert_eq!(
        (
            cfg.bounds_max_genus,
            cfg.bounds_max_degree,
            cfg.bounds_max_free
        ),
        (2, 2, 3)
    );
    assert_eq!(cfg.tree_max_excess, 3);
    assert_eq!((cfg.reduction_max_excess, cfg.reduction_max_legs), (2, 14));
    assert_eq!(
        (
            cfg.gf_max_n,
            cfg.gf_max_d,
            cfg.invariants_max_n,
            cfg.invariants_max_d
        ),
        (20, 6, 12, 4)
    );
    assert_eq!((cfg.poincare_min_n, cfg.poincare_max_n), (4, 9));

    let outcomes = [
        timed(
            1,
            "enumeration vs naive generator",
            ENUMERATION_LIMIT,
            || suite_enumeration(&cfg),
        ),
        timed(2, "poset soundness", POSET_LIMIT, || suite_poset(&cfg)),
        timed(
            3,
            "independence concentration and Tutte",
            INDEPENDENCE_LIMIT,
            || suite_independence(&cfg),
        ),
        timed(4, "bound sweeps", BOUNDS_LIMIT, || suite_bounds(&cfg)),
        timed(5, "reduction totality", REDUCTION_LIMIT, || {
            suite_reduction(&cfg)
        }),
        timed(6, "generating functions", GF_LIMIT, || {
            suite_generating_functions(&cfg)
        }),
        timed(7, "Poincare duality and b2", POINCARE_LIMIT, || {
            suite_poincare(&cfg)
        }),
        determinism(),
    ];
    let failed: Vec<&Outcome> = outcomes.iter().filter(|o| !o.passed).collect();
    line(&format!(
        "acceptance: {}/{} criteria passed",
        outcomes.len() - failed.len(),
        outcomes.len()
    ));
    assert!(
        failed.is_empty(),
        "failed criteria {:?}:\n{}",
        failed.iter().map(|o| o.criterion).collect::<Vec<_>>(),
        failed
            .iter()
            .map(|o| o.line.as_str())
            .collect::<Vec<_>>()
            .join("\n")
    );
}
