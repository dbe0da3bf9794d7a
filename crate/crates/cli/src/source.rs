use std::fmt;
use std::path::PathBuf;

use serde::Serialize;

use lpl_core::families::Family;
use lpl_core::graph::RotationMap;
use lpl_core::group::shift_semidirect_cayley;
use lpl_core::replacement::{default_rotation_map, replacement_product, RotationStrategy};
use lpl_core::Graph;

use crate::CliError;

/// One graph: a named family instance or an edge-list file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum FamilySpec {
    Circulant { n: usize, gens: Vec<usize> },
    Hypercube { dim: usize },
    Complete { n: usize },
    Cycle { n: usize },
    Star { n: usize },
    RandomRegular { n: usize, d: usize, seed: u64 },
    Ccc { n: usize },
    CayleySdp { n: usize, gens: Vec<usize> },
    File { path: PathBuf },
}

pub const FAMILY_KINDS: &str = "circulant, hypercube, complete, cycle, star, random-regular, ccc, cayley-sdp, file";

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn parse_number<T: std::str::FromStr>(what: &str, text: &str) -> Result<T, CliError> {
    text.trim().parse().map_err(|_| usage(format!("{what}: `{text}` is not a non-negative integer")))
}

pub fn parse_gens(text: &str) -> Result<Vec<usize>, CliError> {
    text.split(',').filter(|t| !t.trim().is_empty()).map(|t| parse_number("generator", t)).collect()
}

fn need<T>(value: Option<T>, kind: &str, flag: &str) -> Result<T, CliError> {
    value.ok_or_else(|| usage(format!("family `{kind}` needs {flag}")))
}

impl FamilySpec {
    /// Builds a family from separate flag values.
    pub fn from_flags(
        kind: &str,
        n: Option<usize>,
        gens: Option<&str>,
        d: Option<usize>,
        seed: u64,
    ) -> Result<FamilySpec, CliError> {
        let gens = gens.map(parse_gens).transpose()?;
        Ok(match kind {
            "circulant" => FamilySpec::Circulant {
                n: need(n, kind, "--n")?,
                gens: need(gens, kind, "--gens")?,
            },
            "hypercube" => FamilySpec::Hypercube {
                dim: need(n, kind, "--n")?,
            },
            "complete" => FamilySpec::Complete { n: need(n, kind, "--n")? },
            "cycle" => FamilySpec::Cycle { n: need(n, kind, "--n")? },
            "star" => FamilySpec::Star { n: need(n, kind, "--n")? },
            "random-regular" => FamilySpec::RandomRegular {
                n: need(n, kind, "--n")?,
                d: need(d, kind, "--d")?,
                seed,
            },
            "ccc" => FamilySpec::Ccc { n: need(n, kind, "--n")? },
            "cayley-sdp" => FamilySpec::CayleySdp {
                n: need(n, kind, "--n")?,
                gens: need(gens, kind, "--gens")?,
            },
            other => return Err(usage(format!("unknown family `{other}`; expected one of {FAMILY_KINDS}"))),
        })
    }

    /// Parses `kind:arg:arg`, e.g. `circulant:8:1,3`, `random-regular:10:3:7`
    /// or `file:graph.txt`.
    pub fn parse(text: &str) -> Result<FamilySpec, CliError> {
        let (kind, rest) = text.split_once(':').unwrap_or((text, ""));
        if kind == "file" {
            return Ok(FamilySpec::File { path: rest.into() });
        }
        let args: Vec<&str> = if rest.is_empty() { Vec::new() } else { rest.split(':').collect() };
        let arg = |i: usize| args.get(i).copied();
        let n = arg(0).map(|t| parse_number("n", t)).transpose()?;
        let (gens, d) = match kind {
            "circulant" | "cayley-sdp" => (arg(1), None),
            "random-regular" => (None, arg(1).map(|t| parse_number("d", t)).transpose()?),
            _ => (None, None),
        };
        let seed = match kind {
            "random-regular" => arg(2).map(|t| parse_number("seed", t)).transpose()?.unwrap_or(0),
            _ => 0,
        };
        let max_args = match kind {
            "random-regular" => 3,
            "circulant" | "cayley-sdp" => 2,
            _ => 1,
        };
        if args.len() > max_args {
            return Err(usage(format!("`{text}`: too many arguments for `{kind}`")));
        }
        FamilySpec::from_flags(kind, n, gens, d, seed)
    }

    pub fn build(&self) -> Result<Graph, CliError> {
        let family = match self {
            FamilySpec::Circulant { n, gens } => Family::Circulant { n: *n, gens: gens.clone() },
            FamilySpec::Hypercube { dim } => Family::Hypercube { dim: *dim },
            FamilySpec::Complete { n } => Family::Complete { n: *n },
            FamilySpec::Cycle { n } => Family::Cycle { n: *n },
            FamilySpec::Star { n } => Family::Star { n: *n },
            FamilySpec::RandomRegular { n, d, seed } => Family::RandomRegular {
                n: *n,
                d: *d,
                seed: *seed,
            },
            FamilySpec::Ccc { n } => return Ok(shift_semidirect_cayley(*n, &[1])?),
            FamilySpec::CayleySdp { n, gens } => return Ok(shift_semidirect_cayley(*n, gens)?),
            FamilySpec::File { path } => {
                let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
                    path: path.clone(),
                    source,
                })?;
                return Ok(Graph::parse_edge_list(&text)?);
            }
        };
        Ok(family.build()?)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |g: &[usize]| g.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(",");
        match self {
            FamilySpec::Circulant { n, gens } => write!(f, "circulant:{n}:{}", join(gens)),
            FamilySpec::Hypercube { dim } => write!(f, "hypercube:{dim}"),
            FamilySpec::Complete { n } => write!(f, "complete:{n}"),
            FamilySpec::Cycle { n } => write!(f, "cycle:{n}"),
            FamilySpec::Star { n } => write!(f, "star:{n}"),
            FamilySpec::RandomRegular { n, d, seed } => write!(f, "random-regular:{n}:{d}:{seed}"),
            FamilySpec::Ccc { n } => write!(f, "ccc:{n}"),
            FamilySpec::CayleySdp { n, gens } => write!(f, "cayley-sdp:{n}:{}", join(gens)),
            FamilySpec::File { path } => write!(f, "file:{}", path.display()),
        }
    }
}

/// How ports of `G₁` are assigned in a replacement product.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RotationChoice {
    Sorted,
    Dims,
    Gens,
    /// The ports carried by `G₁` itself (from its family or edge-list file).
    Attached,
}

impl RotationChoice {
    pub fn parse(text: &str) -> Result<RotationChoice, CliError> {
        match text {
            "sorted" => Ok(RotationChoice::Sorted),
            "dims" => Ok(RotationChoice::Dims),
            "gens" => Ok(RotationChoice::Gens),
            "attached" => Ok(RotationChoice::Attached),
            other => Err(usage(format!("unknown rotation `{other}`; expected sorted, dims, gens or attached"))),
        }
    }

    fn resolve(self, g1: &Graph) -> Result<RotationMap, CliError> {
        let strategy = match self {
            RotationChoice::Sorted => RotationStrategy::SortedNeighbors,
            RotationChoice::Dims => RotationStrategy::HypercubeDims,
            RotationChoice::Gens => RotationStrategy::CirculantGens,
            RotationChoice::Attached => {
                return g1.rotation_map().cloned().ok_or_else(|| usage("G₁ carries no ports; choose another --rotation"))
            }
        };
        Ok(default_rotation_map(g1, strategy)?)
    }
}

/// The graph a subcommand operates on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "source", rename_all = "kebab-case")]
pub enum GraphSource {
    Single { graph: FamilySpec },
    Replacement {
        g1: FamilySpec,
        g2: FamilySpec,
        rotation: RotationChoice,
    },
}

impl GraphSource {
    pub fn build(&self) -> Result<Graph, CliError> {
        match self {
            GraphSource::Single { graph } => graph.build(),
            GraphSource::Replacement { g1, g2, rotation } => {
                let g1 = g1.build()?;
                let g2 = g2.build()?;
                let rot = rotation.resolve(&g1)?;
                let (g, _) = replacement_product(&g1, &rot, &g2)?;
                Ok(g)
            }
        }
    }
}

impl fmt::Display for GraphSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSource::Single { graph } => write!(f, "{graph}"),
            GraphSource::Replacement { g1, g2, .. } => write!(f, "({g1}) ® ({g2})"),
        }
    }
}
