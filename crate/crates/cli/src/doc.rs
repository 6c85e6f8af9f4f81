//! JSON problem-document schema and conversion into core types.

use num_bigint::BigInt;
use serde::Deserialize;

use weylchi_core::arith::{parse_rational, Q};
use weylchi_core::{
    convex_hull, CartanType, FactorSpec, GroupSpec, LatticeBasis, RationalPolytope,
    RepresentationSpec, Summand,
};

use crate::CliError;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemDocument {
    pub group: GroupDoc,
    #[serde(default)]
    pub representations: Vec<RepDoc>,
    #[serde(default)]
    pub polytopes: Vec<PolytopeDoc>,
    /// Default target names when the command line gives none.
    #[serde(default)]
    pub reps: Vec<String>,
    /// Default multiplicities for `mixed-degree`.
    #[serde(default)]
    pub multiplicities: Vec<u32>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupDoc {
    #[serde(default)]
    pub factors: Vec<FactorDoc>,
    #[serde(default)]
    pub torus_rank: usize,
    /// Group-wide lattice convention; per-factor settings override it.
    #[serde(default)]
    pub lattice: Option<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorDoc {
    #[serde(rename = "type")]
    pub cartan: String,
    pub rank: usize,
    #[serde(default)]
    pub lattice: Option<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepDoc {
    pub name: String,
    pub summands: Vec<SummandDoc>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SummandDoc {
    /// Fundamental coordinates per simple factor.
    #[serde(default)]
    pub weight: Vec<Vec<u32>>,
    /// Central character on the torus directions.
    #[serde(default)]
    pub central: Vec<i64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolytopeDoc {
    pub name: String,
    /// Vertex coordinates: exact rationals as "p/q" strings or JSON integers.
    pub vertices: Vec<Vec<Coordinate>>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum Coordinate {
    Int(i64),
    Str(String),
}

impl Coordinate {
    fn to_rational(&self) -> Result<Q, CliError> {
        match self {
            Coordinate::Int(n) => Ok(weylchi_core::arith::q_int(*n)),
            Coordinate::Str(s) => parse_rational(s)
                .ok_or_else(|| CliError::schema(format!("invalid rational \"{s}\""))),
        }
    }
}

fn parse_lattice(s: &str) -> Result<LatticeBasis, CliError> {
    match s {
        "weight" => Ok(LatticeBasis::Weight),
        "root" => Ok(LatticeBasis::Root),
        other => Err(CliError::schema(format!(
            "lattice must be \"weight\" or \"root\", got \"{other}\""
        ))),
    }
}

impl ProblemDocument {
    pub fn load(path: &std::path::Path) -> Result<ProblemDocument, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::schema(format!("cannot read {}: {e}", path.display())))?;
        serde_json::from_str(&text)
            .map_err(|e| CliError::schema(format!("invalid problem document: {e}")))
    }

    pub fn group_spec(&self) -> Result<GroupSpec, CliError> {
        let default_lattice = match &self.group.lattice {
            Some(s) => parse_lattice(s)?,
            None => LatticeBasis::Weight,
        };
        let mut factors = Vec::new();
        for f in &self.group.factors {
            let mut chars = f.cartan.chars();
            let (letter, rest) = (chars.next(), chars.next());
            let cartan = match (letter.and_then(CartanType::from_letter), rest) {
                (Some(c), None) => c,
                _ => {
                    return Err(CliError::schema(format!(
                        "unknown Cartan type \"{}\"",
                        f.cartan
                    )))
                }
            };
            let lattice = match &f.lattice {
                Some(s) => parse_lattice(s)?,
                None => default_lattice,
            };
            factors.push(FactorSpec {
                cartan,
                rank: f.rank,
                lattice,
            });
        }
        Ok(GroupSpec::new(factors, self.group.torus_rank))
    }

    pub fn representation(&self, name: &str) -> Option<RepresentationSpec> {
        self.representations.iter().find(|r| r.name == name).map(|r| {
            RepresentationSpec {
                summands: r
                    .summands
                    .iter()
                    .map(|s| Summand {
                        weight: s.weight.clone(),
                        central: s.central.iter().map(|&c| BigInt::from(c)).collect(),
                    })
                    .collect(),
                name: Some(r.name.clone()),
            }
        })
    }

    pub fn explicit_polytope(&self, name: &str) -> Option<Result<RationalPolytope, CliError>> {
        let doc = self.polytopes.iter().find(|p| p.name == name)?;
        Some(build_polytope(doc))
    }

    pub fn has_polytope(&self, name: &str) -> bool {
        self.polytopes.iter().any(|p| p.name == name)
    }
}

fn build_polytope(doc: &PolytopeDoc) -> Result<RationalPolytope, CliError> {
    let mut points = Vec::with_capacity(doc.vertices.len());
    for v in &doc.vertices {
        let p: Vec<Q> = v
            .iter()
            .map(|c| c.to_rational())
            .collect::<Result<_, _>>()?;
        points.push(p);
    }
    convex_hull(&points).map_err(CliError::from)
}

/// A named computation target: either a representation or an explicit
/// polytope (the latter only allowed for torus-only groups).
pub enum Target {
    Rep(RepresentationSpec),
    Polytope(String, RationalPolytope),
}

impl Target {
    pub fn name(&self) -> &str {
        match self {
            Target::Rep(r) => r.name.as_deref().unwrap_or("?"),
            Target::Polytope(n, _) => n,
        }
    }
}

/// Resolves the requested names (command line first, then the document's
/// `reps` list) into targets.
pub fn resolve_targets(
    doc: &ProblemDocument,
    cli_reps: &[String],
    group: &GroupSpec,
) -> Result<Vec<Target>, CliError> {
    let names: Vec<String> = if !cli_reps.is_empty() {
        cli_reps.to_vec()
    } else if !doc.reps.is_empty() {
        doc.reps.clone()
    } else if doc.representations.len() == 1 && doc.polytopes.is_empty() {
        vec![doc.representations[0].name.clone()]
    } else {
        return Err(CliError::schema(
            "no target representations: pass --reps or set \"reps\" in the document".into(),
        ));
    };
    let mut out = Vec::new();
    for name in &names {
        if let Some(rep) = doc.representation(name) {
            out.push(Target::Rep(rep));
        } else if doc.has_polytope(name) {
            if !group.factors.is_empty() {
                return Err(CliError::schema(format!(
                    "explicit polytope \"{name}\" is only allowed for torus-only groups"
                )));
            }
            let p = doc.explicit_polytope(name).expect("checked above")?;
            out.push(Target::Polytope(name.clone(), p));
        } else {
            return Err(CliError::schema(format!(
                "unknown representation or polytope \"{name}\""
            )));
        }
    }
    Ok(out)
}
