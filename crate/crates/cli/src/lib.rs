//! Command-line front end: builds graphs from families, files or
//! replacement products, analyses their connectivity and runs the
//! verification suites. Reports are JSON with a top-level `schema_version`.

mod source;

use std::path::PathBuf;

use log::info;
use serde::Serialize;
use serde_json::json;

use lpl_core::connectivity::{
    check_invariants, classify, cross_check_bruteforce, restricted_edge_connectivity, ConnectivityError,
    LambdaPrimeOptions, BRUTE_FORCE_CEILING,
};
use lpl_core::families::{circulant, complete, cycle, hypercube, ConstructError};
use lpl_core::graph::GraphError;
use lpl_core::group::{shift_semidirect_input, AssumptionError};
use lpl_core::replacement::{default_rotation_map, ReplacementError, RotationStrategy};
use lpl_core::verify::{
    build_degree_gap_cayley, build_non_optimal_cayley, check_cayley_corpus, check_optimality_criterion,
    check_product_bounds, cut_vertex_witness, random_product_sweep, verify_reference_values, BoundReport, ClaimStatus,
    VerifyError,
};
use lpl_core::Graph;

pub use source::{parse_gens, FamilySpec, GraphSource, RotationChoice, FAMILY_KINDS};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Construct(#[from] ConstructError),
    #[error(transparent)]
    Assumption(#[from] AssumptionError),
    #[error(transparent)]
    Replacement(#[from] ReplacementError),
    #[error(transparent)]
    Connectivity(#[from] ConnectivityError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OutputFormat {
    Json,
    Dot,
    EdgeList,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerifyTarget {
    /// Known closed-form values, product examples, the optimality criterion,
    /// the non-optimal constructions and the Cayley corpus.
    Reference { seed: u64 },
    RandomProducts { seed: u64, count: usize },
    DegreeGap { d: usize, s: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    Construct { source: GraphSource },
    Analyze { source: GraphSource, brute_force_check: bool },
    Atom { source: GraphSource },
    Verify(VerifyTarget),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub options: LambdaPrimeOptions,
    pub format: OutputFormat,
}

/// Serialized report and whether every checked claim held.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub body: String,
    pub all_hold: bool,
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        let t = self.options.brute_force_threshold;
        if t == 0 || t > BRUTE_FORCE_CEILING {
            return Err(CliError::Usage(format!("brute-force threshold must lie in 1..={BRUTE_FORCE_CEILING}")));
        }
        if self.options.prune_at == Some(0) {
            return Err(CliError::Usage("--prune-at must be positive".into()));
        }
        if !matches!(self.command, Command::Construct { .. }) && self.format != OutputFormat::Json {
            return Err(CliError::Usage("only `construct` writes dot or edge-list output".into()));
        }
        if let Command::Verify(VerifyTarget::RandomProducts { count: 0, .. }) = self.command {
            return Err(CliError::Usage("--count must be positive".into()));
        }
        Ok(())
    }
}

fn to_json(value: serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(&value).expect("reports serialize");
    s.push('\n');
    s
}

fn summary(rep: &BoundReport) -> serde_json::Value {
    json!({
        "holds": rep.count(ClaimStatus::Holds),
        "fails": rep.count(ClaimStatus::Fails),
        "not_applicable": rep.count(ClaimStatus::NotApplicable),
    })
}

pub fn run(config: &RunConfig) -> Result<Outcome, CliError> {
    config.validate()?;
    match &config.command {
        Command::Construct { source } => construct(source, config.format),
        Command::Analyze {
            source,
            brute_force_check,
        } => analyze(source, &config.options, *brute_force_check),
        Command::Atom { source } => atom(source, &config.options),
        Command::Verify(target) => verify(target, &config.options),
    }
}

fn construct(source: &GraphSource, format: OutputFormat) -> Result<Outcome, CliError> {
    let g = source.build()?;
    let body = match format {
        OutputFormat::Dot => g.to_dot("G"),
        OutputFormat::EdgeList => g.to_edge_list(),
        OutputFormat::Json => {
            let edges: Vec<[usize; 2]> = g.edges().map(|(u, v)| [u, v]).collect();
            let ports = g.rotation_map().map(|rot| {
                (0..g.vertex_count())
                    .map(|x| rot.ports(x).to_vec())
                    .collect::<Vec<_>>()
            });
            to_json(json!({
                "schema_version": SCHEMA_VERSION,
                "command": "construct",
                "source": source,
                "vertex_count": g.vertex_count(),
                "edge_count": g.edge_count(),
                "edges": edges,
                "ports": ports,
            }))
        }
    };
    Ok(Outcome { body, all_hold: true })
}

fn analyze(source: &GraphSource, opts: &LambdaPrimeOptions, brute_force_check: bool) -> Result<Outcome, CliError> {
    let g = source.build()?;
    info!("analyzing {source}: {} vertices, {} edges", g.vertex_count(), g.edge_count());
    if !g.is_connected() {
        return Err(CliError::Connectivity(ConnectivityError::Disconnected));
    }
    let mut report = classify(&g, opts)?;
    if brute_force_check {
        cross_check_bruteforce(&g, &mut report, opts.brute_force_threshold)?;
    }
    let violations = check_invariants(&g, &report);
    Ok(Outcome {
        all_hold: violations.is_empty(),
        body: to_json(json!({
            "schema_version": SCHEMA_VERSION,
            "command": "analyze",
            "source": source,
            "options": opts,
            "report": report,
            "invariant_violations": violations,
        })),
    })
}

fn atom(source: &GraphSource, opts: &LambdaPrimeOptions) -> Result<Outcome, CliError> {
    let g = source.build()?;
    let cut = restricted_edge_connectivity(&g, opts)?;
    let induced = g.induced_subgraph(&cut.certificate.fragment)?;
    let induced_edges: Vec<[usize; 2]> = induced
        .edges()
        .map(|(u, v)| [cut.certificate.fragment[u], cut.certificate.fragment[v]])
        .collect();
    Ok(Outcome {
        all_hold: true,
        body: to_json(json!({
            "schema_version": SCHEMA_VERSION,
            "command": "atom",
            "source": source,
            "lambda_prime": cut.value,
            "atom": cut.certificate.fragment,
            "atom_size": cut.certificate.fragment.len(),
            "induced_edges": induced_edges,
            "cut_edges": cut.certificate.cut_edges,
        })),
    })
}

fn verify(target: &VerifyTarget, opts: &LambdaPrimeOptions) -> Result<Outcome, CliError> {
    let transitive = LambdaPrimeOptions {
        use_vertex_transitivity: true,
        ..*opts
    };
    match target {
        VerifyTarget::Reference { seed } => reference_suite(&transitive, *seed),
        VerifyTarget::RandomProducts { seed, count } => {
            let rep = random_product_sweep(*seed, *count, opts)?;
            Ok(Outcome {
                all_hold: rep.all_hold(),
                body: to_json(json!({
                    "schema_version": SCHEMA_VERSION,
                    "command": "verify",
                    "suite": "random",
                    "seed": seed,
                    "count": count,
                    "summary": summary(&rep),
                    "records": rep.records,
                })),
            })
        }
        VerifyTarget::DegreeGap { d, s } => {
            info!("building the degree-gap Cayley graph for d = {d}, s = {s}");
            let out = build_degree_gap_cayley(*d, *s, &transitive)?;
            Ok(Outcome {
                all_hold: out.report.all_hold(),
                body: to_json(json!({
                    "schema_version": SCHEMA_VERSION,
                    "command": "verify",
                    "construction": "degree-gap",
                    "d": d,
                    "s": s,
                    "summary": summary(&out.report),
                    "result": out,
                })),
            })
        }
    }
}

fn reference_suite(opts: &LambdaPrimeOptions, seed: u64) -> Result<Outcome, CliError> {
    let mut rep = BoundReport::default();
    info!("[1/6] closed-form reference values");
    rep.extend(verify_reference_values(opts)?);

    info!("[2/6] replacement product bounds");
    let plain = LambdaPrimeOptions {
        use_vertex_transitivity: false,
        ..*opts
    };
    let products: [(&str, Graph, Graph); 3] = [
        ("K4®C3", complete(4)?, cycle(3)?),
        ("G(7;±[1, 2])®K4", circulant(7, &[1, 2])?, complete(4)?),
        ("Q4®C4", hypercube(4)?, cycle(4)?),
    ];
    for (name, g1, g2) in &products {
        let rot = default_rotation_map(g1, RotationStrategy::SortedNeighbors)?;
        rep.extend(check_product_bounds(name, g1, &rot, g2, &plain)?.1);
    }

    info!("[3/6] optimality criterion on semidirect Cayley graphs");
    for (n, gens) in [(3, vec![1]), (4, vec![1]), (5, vec![1]), (6, vec![1, 2]), (8, vec![1, 2])] {
        let input = shift_semidirect_input(n, &gens).map_err(AssumptionError::from)?;
        rep.extend(check_optimality_criterion(&format!("n={n} S_B=±{gens:?}"), &input, opts, seed)?);
    }

    info!("[4/6] non-optimal constructions");
    rep.extend(build_non_optimal_cayley(6, &[1, 2], opts)?.report);
    rep.extend(build_non_optimal_cayley(7, &[1, 2], opts)?.report);
    rep.extend(build_degree_gap_cayley(5, 1, opts)?.report);
    rep.extend(build_degree_gap_cayley(5, 2, opts)?.report);

    info!("[5/6] Cayley corpus");
    rep.extend(check_cayley_corpus(opts)?);

    info!("[6/6] cut-vertex witness search");
    let witness = cut_vertex_witness(seed)?;
    if let Some(w) = &witness {
        rep.extend(w.report.clone());
    }

    Ok(Outcome {
        all_hold: rep.all_hold(),
        body: to_json(json!({
            "schema_version": SCHEMA_VERSION,
            "command": "verify",
            "suite": "reference",
            "seed": seed,
            "summary": summary(&rep),
            "cut_vertex_witness": witness,
            "records": rep.records,
        })),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn analyze_config(spec: &str) -> RunConfig {
        RunConfig {
            command: Command::Analyze {
                source: GraphSource::Single {
                    graph: FamilySpec::parse(spec).unwrap(),
                },
                brute_force_check: false,
            },
            options: LambdaPrimeOptions::default(),
            format: OutputFormat::Json,
        }
    }

    #[test]
    fn analyze_ccc4() {
        let out = run(&analyze_config("ccc:4")).unwrap();
        let v: serde_json::Value = serde_json::from_str(&out.body).unwrap();
        assert_eq!(v["schema_version"], 1);
        assert_eq!(v["report"]["lambda"], 3);
        assert_eq!(v["report"]["lambda_prime"], 4);
        assert!(out.all_hold);
    }

    #[test]
    fn star_reports_undefined_lambda_prime() {
        let out = run(&analyze_config("star:5")).unwrap();
        let v: serde_json::Value = serde_json::from_str(&out.body).unwrap();
        assert_eq!(v["report"]["lambda_prime"], "undefined");
    }

    #[test]
    fn invalid_configs_are_rejected() {
        let mut c = analyze_config("cycle:5");
        c.format = OutputFormat::Dot;
        assert!(matches!(run(&c), Err(CliError::Usage(_))));
        let mut c = analyze_config("cycle:5");
        c.options.brute_force_threshold = 0;
        assert!(matches!(run(&c), Err(CliError::Usage(_))));
        assert!(matches!(run(&analyze_config("circulant:8:2")), Err(CliError::Connectivity(_))));
    }
}
