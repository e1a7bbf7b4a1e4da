use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use stablegraph::decorated::{
    build_q_poset, build_stab_poset, enumerate_stab, CurveClassMonoid, DecoratedGraph,
    DecoratedJson, EnumerationConfig, DEFAULT_CEILING,
};
use stablegraph::fs::{fit_exponential_polynomial, gf_projective, invariants_gf_projective, Expr};
use stablegraph::genus0::{
    e1_upper_bound, enumerate_ge_within, find_reduction, StableTreeClass, GE_CEILING,
};
use stablegraph::graph::{GraphJson, HalfEdgeGraph};
use stablegraph::halfedge::{
    bound_halfedge_bound, check_plain_bound, classify_half_edges_with, height_constant,
    orbit_decompose, reduce_graph, stratum_factorization, HalfEdgeTag, HeightVariant,
    PathSemantics,
};
use stablegraph::independence::{homology_ranks, independence_complex, tutte_01};
use stablegraph::verify::{run_suite, suite_bounds, Profile, SweepConfig, VerifyReport, SUITES};
use stablegraph::Error;

const CEILING_VAR: &str = "STABLEGRAPH_CEILING";

#[derive(Parser)]
#[command(
    name = "stablegraph",
    version,
    about = "Stable decorated graphs and their boundary combinatorics"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum, Default)]
enum Format {
    #[default]
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum, Default)]
enum Semantics {
    #[default]
    Interior,
    Revisit,
}

impl From<Semantics> for PathSemantics {
    fn from(s: Semantics) -> Self {
        match s {
            Semantics::Interior => PathSemantics::Interior,
            Semantics::Revisit => PathSemantics::Revisit,
        }
    }
}

#[derive(Clone, Copy, ValueEnum, Default)]
enum Variant {
    #[default]
    Tight,
    Loose,
}

#[derive(Clone, Copy, ValueEnum, Default)]
enum ProfileArg {
    #[default]
    Small,
    Full,
}

/// Curve classes: `--degree 1,2` sets the ample functional (and the rank);
/// `--beta` is a coordinate vector of that rank.
#[derive(Args, Clone)]
struct MonoidArgs {
    /// Rank of the curve class lattice. Defaults to the length of --degree.
    #[arg(long)]
    monoid_rank: Option<usize>,
    /// Ample degree functional, comma separated.
    #[arg(long, value_delimiter = ',', default_value = "1")]
    degree: Vec<u32>,
}

impl MonoidArgs {
    fn monoid(&self) -> Result<CurveClassMonoid, Failure> {
        let mut degree = self.degree.clone();
        if let Some(r) = self.monoid_rank {
            match degree.len() {
                1 => degree = vec![degree[0]; r],
                l if l != r => {
                    return Err(Failure::Usage(format!(
                        "--degree has {l} entries but --monoid-rank is {r}"
                    )))
                }
                _ => {}
            }
        }
        Ok(CurveClassMonoid::new(degree)?)
    }
}

#[derive(Args, Clone)]
struct StabArgs {
    #[arg(long)]
    h: u32,
    #[arg(long)]
    n: u32,
    /// Curve class coordinates, comma separated.
    #[arg(long, value_delimiter = ',', default_value = "0")]
    beta: Vec<u32>,
    #[command(flatten)]
    monoid: MonoidArgs,
    /// Treat legs as interchangeable.
    #[arg(long)]
    unlabeled: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Isomorphism classes of Stab(h, n, beta).
    Enumerate {
        #[command(flatten)]
        stab: StabArgs,
        /// Only saturated graphs, i.e. Q(h, n, beta).
        #[arg(long)]
        saturated: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Contraction poset of Stab(h, n, beta), or of Q with --q.
    Poset {
        #[command(flatten)]
        stab: StabArgs,
        #[arg(long)]
        q: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Saturation of a decorated graph.
    Saturate {
        #[arg(long)]
        graph: PathBuf,
        #[command(flatten)]
        monoid: MonoidArgs,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Free and bound half-edges of a decorated graph.
    FreeEdges {
        #[arg(long)]
        graph: PathBuf,
        #[command(flatten)]
        monoid: MonoidArgs,
        #[arg(long, value_enum, default_value_t)]
        semantics: Semantics,
    },
    /// Plain-vertex and bound-half-edge bounds for one graph, or a sweep.
    BoundsCheck {
        #[arg(long, conflicts_with = "sweep")]
        graph: Option<PathBuf>,
        #[command(flatten)]
        monoid: MonoidArgs,
        #[arg(long)]
        sweep: bool,
        #[arg(long, value_enum, default_value_t)]
        profile: ProfileArg,
        #[arg(long, value_enum, default_value_t)]
        semantics: Semantics,
    },
    /// Reduced representative and stratum factorization of a saturated graph.
    Reduce {
        #[arg(long)]
        graph: PathBuf,
        #[command(flatten)]
        monoid: MonoidArgs,
    },
    /// Orbits of Q(h, m, beta), m <= n, with at most i-max free half-edges.
    Orbits {
        #[arg(long)]
        h: u32,
        #[arg(long)]
        n: u32,
        #[arg(long, value_delimiter = ',', default_value = "0")]
        beta: Vec<u32>,
        #[arg(long, default_value_t = 3)]
        i_max: usize,
        #[command(flatten)]
        monoid: MonoidArgs,
    },
    /// Independence complex homology of a graph.
    Independence {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Connected graphs with first Betti number e and up to e + excess edges.
    GeEnumerate {
        #[arg(long)]
        e: usize,
        #[arg(long)]
        excess: usize,
    },
    /// Upper bounds for E^1_{p,q} with p <= p-max and q <= q-max.
    E1Table {
        #[arg(long)]
        e: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        p_max: usize,
        #[arg(long, default_value_t = 2)]
        q_max: usize,
    },
    /// A reduction step for a labelled stable tree.
    ReduceTree {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Generating functions of dimension sequences.
    Gf {
        #[command(subcommand)]
        command: GfCommand,
    },
    /// The height bound at the given parameters.
    HeightConstant {
        #[arg(long)]
        i: u64,
        #[arg(long)]
        g: u64,
        #[arg(long)]
        degree: u64,
        #[arg(long, value_enum, default_value_t)]
        variant: Variant,
    },
    /// Height certificate of a module expression such as conv(shift(P3,2),P1).
    HeightTrace {
        #[arg(long)]
        expr: String,
        /// Also print the first LEN dimensions.
        #[arg(long, default_value_t = 0)]
        len: usize,
    },
    /// Run every verification suite.
    VerifyAll {
        #[arg(long, value_enum, default_value_t)]
        profile: ProfileArg,
        /// Run only the named suites.
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(SUITES))]
        suite: Vec<String>,
        #[arg(long, value_enum, default_value_t)]
        semantics: Semantics,
    },
}

#[derive(Subcommand)]
enum GfCommand {
    /// Generating function of P_d, and of its invariants with --invariants.
    Projective {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        invariants: bool,
        /// Number of coefficients to expand.
        #[arg(long, default_value_t = 10)]
        terms: usize,
    },
    /// Fit an exponential polynomial with bases 1..=C to a sequence.
    Fit {
        /// JSON array of integers (or strings of digits).
        #[arg(long)]
        file: PathBuf,
        #[arg(long = "C")]
        c: usize,
    },
}

enum Failure {
    Usage(String),
    Ceiling(String),
    Library(String),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ResourceCeiling { .. } => Failure::Ceiling(e.to_string()),
            other => Failure::Library(other.to_string()),
        }
    }
}

enum Output {
    Json(Value),
    Dot(String),
}

struct Report {
    output: Output,
    passed: bool,
}

impl Report {
    fn ok(value: impl Serialize) -> Result<Self, Failure> {
        Ok(Self {
            output: Output::Json(to_value(value)?),
            passed: true,
        })
    }
}

fn to_value(value: impl Serialize) -> Result<Value, Failure> {
    serde_json::to_value(value).map_err(|e| Failure::Library(e.to_string()))
}

fn ceiling() -> Result<usize, Failure> {
    match std::env::var(CEILING_VAR) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&c| c > 0)
            .ok_or_else(|| {
                Failure::Usage(format!(
                    "{CEILING_VAR} must be a positive integer, got '{v}'"
                ))
            }),
        Err(_) => Ok(DEFAULT_CEILING),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn read_decorated(path: &Path, monoid: &CurveClassMonoid) -> Result<DecoratedGraph, Failure> {
    let json: DecoratedJson = serde_json::from_str(&read(path)?)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    Ok(DecoratedGraph::from_json(&json, monoid)?)
}

fn read_plain(path: &Path) -> Result<HalfEdgeGraph, Failure> {
    let json: GraphJson = serde_json::from_str(&read(path)?)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    Ok(HalfEdgeGraph::from_json(&json)?)
}

fn enumeration(
    stab: &StabArgs,
    saturated: bool,
) -> Result<(CurveClassMonoid, stablegraph::decorated::StabEnumeration), Failure> {
    let monoid = stab.monoid.monoid()?;
    let beta = monoid.class(stab.beta.clone())?;
    let cfg = EnumerationConfig {
        ceiling: ceiling()?,
        labeled_legs: !stab.unlabeled,
        saturated_only: saturated,
    };
    let e = enumerate_stab(stab.h, stab.n, &beta, &monoid, &cfg)?;
    Ok((monoid, e))
}

fn sweep_config(
    profile: ProfileArg,
    semantics: Semantics,
) -> Result<(Profile, SweepConfig), Failure> {
    let profile = match profile {
        ProfileArg::Small => Profile::Small,
        ProfileArg::Full => Profile::Full,
    };
    let mut cfg = SweepConfig::for_profile(profile);
    cfg.semantics = semantics.into();
    if std::env::var(CEILING_VAR).is_ok() {
        cfg.ceiling = ceiling()?;
    }
    Ok((profile, cfg))
}

fn run(command: Command) -> Result<Report, Failure> {
    match command {
        Command::Enumerate {
            stab,
            saturated,
            format,
        } => {
            let (_, e) = enumeration(&stab, saturated)?;
            match format {
                Format::Dot => Ok(Report {
                    output: Output::Dot(
                        e.graphs
                            .iter()
                            .map(DecoratedGraph::to_dot)
                            .collect::<Vec<_>>()
                            .join("\n"),
                    ),
                    passed: true,
                }),
                Format::Json => {
                    let classes: Vec<Value> = e
                        .graphs
                        .iter()
                        .zip(&e.certificates)
                        .map(|(g, c)| json!({"certificate": c.to_string(), "graph": g.to_json()}))
                        .collect();
                    Report::ok(json!({"count": e.len(), "classes": classes}))
                }
            }
        }
        Command::Poset { stab, q, format } => {
            let (_, e) = enumeration(&stab, false)?;
            let poset = if q {
                build_q_poset(&e).poset
            } else {
                build_stab_poset(&e)
            };
            match format {
                Format::Dot => Ok(Report {
                    output: Output::Dot(poset.to_dot()),
                    passed: true,
                }),
                Format::Json => Report::ok(poset.to_json()),
            }
        }
        Command::Saturate {
            graph,
            monoid,
            format,
        } => {
            let d = read_decorated(&graph, &monoid.monoid()?)?;
            let s = d.saturate();
            match format {
                Format::Dot => Ok(Report {
                    output: Output::Dot(s.to_dot()),
                    passed: true,
                }),
                Format::Json => Report::ok(
                    json!({"certificate": s.certificate().to_string(), "graph": s.to_json()}),
                ),
            }
        }
        Command::FreeEdges {
            graph,
            monoid,
            semantics,
        } => {
            let d = read_decorated(&graph, &monoid.monoid()?)?;
            let c = classify_half_edges_with(&d, semantics.into());
            Report::ok(json!({
                "free": c.count(HalfEdgeTag::Free),
                "bound": c.count(HalfEdgeTag::Bound),
                "classification": c,
            }))
        }
        Command::BoundsCheck {
            graph,
            monoid,
            sweep,
            profile,
            semantics,
        } => {
            if sweep {
                let (_, cfg) = sweep_config(profile, semantics)?;
                let r = suite_bounds(&cfg)?;
                return Ok(Report {
                    passed: r.passed,
                    output: Output::Json(to_value(&r)?),
                });
            }
            let path = graph
                .ok_or_else(|| Failure::Usage("either --graph or --sweep is required".into()))?;
            let monoid = monoid.monoid()?;
            let d = read_decorated(&path, &monoid)?;
            let c = classify_half_edges_with(&d, semantics.into());
            let free = c.count(HalfEdgeTag::Free);
            let bound = match c.count(HalfEdgeTag::Bound) {
                0 => None,
                _ => Some(bound_halfedge_bound(&d, &monoid)?),
            };
            let plain = check_plain_bound(&d, free, &monoid)?;
            Ok(Report {
                passed: bound.as_ref().is_none_or(|b| b.ok) && plain.ok,
                output: Output::Json(json!({"bound_half_edges": bound, "plain_vertices": plain})),
            })
        }
        Command::Reduce { graph, monoid } => {
            let d = read_decorated(&graph, &monoid.monoid()?)?;
            let k = reduce_graph(&d)?;
            let f = stratum_factorization(&k);
            Report::ok(json!({
                "orbit_key": k.orbit_key().to_string(),
                "reduced": k.graph().to_json(),
                "factorization": f,
                "y": f.y.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "n": f.n.iter().map(ToString::to_string).collect::<Vec<_>>(),
            }))
        }
        Command::Orbits {
            h,
            n,
            beta,
            i_max,
            monoid,
        } => {
            let monoid = monoid.monoid()?;
            let beta = monoid.class(beta)?;
            let cfg = EnumerationConfig {
                ceiling: ceiling()?,
                ..Default::default()
            };
            let orbits = orbit_decompose(h, n, &beta, i_max, &monoid, &cfg)?;
            let listed: Vec<Value> = orbits
                .iter()
                .map(|o| json!({"orbit": o, "representative": o.representative.graph().to_json()}))
                .collect();
            Report::ok(json!({"count": orbits.len(), "orbits": listed}))
        }
        Command::Independence { graph } => {
            let g = read_plain(&graph)?;
            let c = independence_complex(&g);
            let h = homology_ranks(&c);
            let faces: Vec<usize> = c.faces_by_size.iter().map(Vec::len).collect();
            Report::ok(
                json!({"faces": faces, "ranks": h.ranks, "i_invariant": h.top(), "tutte01": tutte_01(&g)}),
            )
        }
        Command::GeEnumerate { e, excess } => {
            let ceiling = std::env::var(CEILING_VAR).map_or(Ok(GE_CEILING), |_| ceiling())?;
            let table = enumerate_ge_within(e, excess, ceiling)?;
            let rows: Vec<Value> = table
                .iter()
                .map(|b| {
                    let graphs: Vec<Value> = b
                        .graphs
                        .iter()
                        .map(|x| json!({"entry": x, "graph": x.graph.to_json()}))
                        .collect();
                    json!({"e": b.e, "p": b.p, "count": b.graphs.len(), "graphs": graphs})
                })
                .collect();
            Report::ok(rows)
        }
        Command::E1Table { e, n, p_max, q_max } => {
            let mut rows = Vec::new();
            for p in 0..=p_max {
                for q in 0..=q_max {
                    rows.push(
                        json!({"p": p, "q": q, "bound": e1_upper_bound(e, n, p, q)?.to_string()}),
                    );
                }
            }
            Report::ok(json!({"e": e, "n": n, "entries": rows}))
        }
        Command::ReduceTree { graph } => {
            let h = StableTreeClass::new(read_plain(&graph)?)?;
            Report::ok(find_reduction(&h)?)
        }
        Command::Gf { command } => match command {
            GfCommand::Projective {
                d,
                invariants,
                terms,
            } => {
                let gf = if invariants {
                    invariants_gf_projective(d)?
                } else {
                    gf_projective(d)
                };
                let series: Vec<String> =
                    gf.expand(terms).iter().map(ToString::to_string).collect();
                Report::ok(
                    json!({"d": d, "invariants": invariants, "gf": gf.display(), "series": series}),
                )
            }
            GfCommand::Fit { file, c } => {
                let values: Vec<Value> = serde_json::from_str(&read(&file)?)
                    .map_err(|e| Failure::Usage(format!("{}: {e}", file.display())))?;
                let values = values
                    .iter()
                    .map(|v| {
                        let s = match v {
                            Value::String(s) => s.clone(),
                            other => other.to_string(),
                        };
                        s.parse()
                            .map_err(|_| Failure::Usage(format!("not an integer: {s}")))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                let fit = fit_exponential_polynomial(&values, c)?;
                Report::ok(json!({"gf": fit.gf.display(), "degrees": fit.degrees(), "fit": fit}))
            }
        },
        Command::HeightConstant {
            i,
            g,
            degree,
            variant,
        } => {
            let v = match variant {
                Variant::Tight => HeightVariant::Tight,
                Variant::Loose => HeightVariant::Loose,
            };
            Report::ok(
                json!({"i": i, "g": g, "degree": degree, "variant": v, "constant": height_constant(i, g, degree, v)}),
            )
        }
        Command::HeightTrace { expr, len } => {
            let e = Expr::parse(&expr)?;
            let cert = e.height();
            let mut out = json!({"expr": e.to_string(), "certificate": cert});
            if len > 0 {
                let dims: Vec<String> = e
                    .evaluate(len)
                    .values
                    .iter()
                    .map(ToString::to_string)
                    .collect();
                out["dimensions"] = json!(dims);
            }
            Report::ok(out)
        }
        Command::VerifyAll {
            profile,
            suite,
            semantics,
        } => {
            let (profile, cfg) = sweep_config(profile, semantics)?;
            let names: Vec<&str> = if suite.is_empty() {
                SUITES.to_vec()
            } else {
                suite.iter().map(String::as_str).collect()
            };
            let suites = names
                .iter()
                .map(|s| run_suite(s, &cfg))
                .collect::<Result<Vec<_>, _>>()?;
            for s in &suites {
                eprintln!(
                    "{:<22} {} ({} checks)",
                    s.name,
                    if s.passed { "pass" } else { "FAIL" },
                    s.checked
                );
            }
            let report = VerifyReport {
                profile,
                config: cfg,
                passed: suites.iter().all(|s| s.passed),
                suites,
            };
            Ok(Report {
                passed: report.passed,
                output: Output::Json(to_value(&report)?),
            })
        }
    }
}

fn emit(output: Output, out: Option<&Path>) -> Result<(), Failure> {
    let mut text = match output {
        Output::Json(v) => {
            serde_json::to_string_pretty(&v).map_err(|e| Failure::Library(e.to_string()))?
        }
        Output::Dot(s) => s,
    };
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Io(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result =
        run(cli.command).and_then(|r| emit(r.output, cli.out.as_deref()).map(|_| r.passed));
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(m)) => {
            eprintln!("usage error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Ceiling(m)) => {
            eprintln!("aborted: {m}");
            ExitCode::from(3)
        }
        Err(Failure::Library(m)) | Err(Failure::Io(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(4)
        }
    }
}
