use serde::{Deserialize, Serialize};

use super::{CliError, ValidationError};
use crate::dfa::{ControlFlowGraph, DfaSystem, Query, TransferFunction};
use crate::lattice::{cover_to_poset, poset_to_algebra, CoverRelation, Elem, Lattice, Poset};
use crate::reductions::{Digraph, MonotoneCircuit, RawCircuit};

/// One JSON instance file. Solver commands use `lattice`, `cfg`,
/// `functions` and `query`; `reduce mcv` uses `circuit`; `reduce gr` uses `graph`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(deny_unknown_fields)]
pub struct InstanceDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lattice: Option<LatticeSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cfg: Option<CfgSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub functions: Option<Vec<Vec<Elem>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub query: Option<QuerySection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub circuit: Option<RawCircuit>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph: Option<Digraph>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "representation", rename_all = "lowercase", deny_unknown_fields)]
pub enum LatticeSection {
    Cover {
        m: usize,
        covers: Vec<(Elem, Elem)>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        names: Option<Vec<String>>,
    },
    Poset {
        m: usize,
        leq: Vec<(Elem, Elem)>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        names: Option<Vec<String>>,
    },
    Algebra {
        m: usize,
        meet: Vec<Vec<Elem>>,
        join: Vec<Vec<Elem>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        names: Option<Vec<String>>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Representation {
    Cover,
    Poset,
    Algebra,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CfgSection {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub entry: usize,
    pub exit: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuerySection {
    pub vertex: usize,
    pub value: Elem,
}

fn schema(path: impl Into<String>, message: impl Into<String>) -> CliError {
    CliError::Schema {
        path: path.into(),
        message: message.into(),
    }
}

fn check_names(path: &str, names: &Option<Vec<String>>, count: usize) -> Result<(), CliError> {
    match names {
        Some(n) if n.len() != count => Err(schema(
            path,
            format!("expected {count} names, found {}", n.len()),
        )),
        _ => Ok(()),
    }
}

impl LatticeSection {
    pub fn element_count(&self) -> usize {
        match self {
            LatticeSection::Cover { m, .. }
            | LatticeSection::Poset { m, .. }
            | LatticeSection::Algebra { m, .. } => *m,
        }
    }

    pub fn names(&self) -> &Option<Vec<String>> {
        match self {
            LatticeSection::Cover { names, .. }
            | LatticeSection::Poset { names, .. }
            | LatticeSection::Algebra { names, .. } => names,
        }
    }

    /// Builds the algebraic form, converting through the order if needed.
    pub fn to_lattice(&self) -> Result<Lattice, CliError> {
        let m = self.element_count();
        check_names("lattice.names", self.names(), m)?;
        let lattice = match self {
            LatticeSection::Cover { covers, .. } => {
                let cover = CoverRelation::new(m, covers).map_err(ValidationError::from)?;
                poset_to_algebra(&cover_to_poset(&cover)).map_err(ValidationError::from)?
            }
            LatticeSection::Poset { leq, .. } => {
                let poset = Poset::from_pairs(m, leq).map_err(ValidationError::from)?;
                poset_to_algebra(&poset).map_err(ValidationError::from)?
            }
            LatticeSection::Algebra { meet, join, .. } => {
                for (key, table) in [("meet", meet), ("join", join)] {
                    if table.len() != m {
                        return Err(schema(
                            format!("lattice.{key}"),
                            format!("expected {m} rows, found {}", table.len()),
                        ));
                    }
                    if let Some(i) = table.iter().position(|row| row.len() != m) {
                        return Err(schema(
                            format!("lattice.{key}.{i}"),
                            format!("expected {m} entries"),
                        ));
                    }
                }
                Lattice::from_tables(m, meet.concat(), join.concat())
                    .map_err(ValidationError::from)?
            }
        };
        Ok(match self.names() {
            Some(n) => lattice.with_names(n.clone()),
            None => lattice,
        })
    }

    pub fn from_lattice(lattice: &Lattice, to: Representation) -> Self {
        let m = lattice.element_count();
        let names = lattice.names().map(<[String]>::to_vec);
        match to {
            Representation::Cover => LatticeSection::Cover {
                m,
                covers: lattice.to_cover().covers().collect(),
                names,
            },
            Representation::Poset => LatticeSection::Poset {
                m,
                leq: lattice.to_poset().strict_pairs(),
                names,
            },
            Representation::Algebra => LatticeSection::Algebra {
                m,
                meet: lattice
                    .meet_table()
                    .chunks(m)
                    .map(<[Elem]>::to_vec)
                    .collect(),
                join: lattice
                    .join_table()
                    .chunks(m)
                    .map(<[Elem]>::to_vec)
                    .collect(),
                names,
            },
        }
    }
}

/// A parsed document together with the validated objects it describes.
#[derive(Debug, Clone)]
pub struct ParsedInstance {
    pub document: InstanceDocument,
    pub lattice: Option<Lattice>,
    pub system: Option<DfaSystem>,
    pub circuit: Option<MonotoneCircuit>,
    pub graph: Option<Digraph>,
}

/// Parses and validates an instance document.
pub fn parse_instance(text: &str) -> Result<ParsedInstance, CliError> {
    let syntax = |e: serde_json::Error| CliError::Syntax {
        line: e.line(),
        message: e.to_string(),
    };
    let mut de = serde_json::Deserializer::from_str(text);
    let document: InstanceDocument = serde_path_to_error::deserialize(&mut de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        match inner.classify() {
            serde_json::error::Category::Syntax | serde_json::error::Category::Eof => syntax(inner),
            _ => schema(path, inner.to_string()),
        }
    })?;
    de.end().map_err(syntax)?;
    validate(document)
}

/// Validates an in-memory document.
pub fn validate(document: InstanceDocument) -> Result<ParsedInstance, CliError> {
    let lattice = document
        .lattice
        .as_ref()
        .map(LatticeSection::to_lattice)
        .transpose()?;

    let wants_system =
        document.cfg.is_some() || document.functions.is_some() || document.query.is_some();
    let system = if wants_system {
        let lattice = lattice
            .clone()
            .ok_or_else(|| schema("lattice", "missing section"))?;
        let cfg = document
            .cfg
            .as_ref()
            .ok_or_else(|| schema("cfg", "missing section"))?;
        let functions = document
            .functions
            .as_ref()
            .ok_or_else(|| schema("functions", "missing section"))?;
        let query = document
            .query
            .ok_or_else(|| schema("query", "missing section"))?;
        Some(build_system(lattice, cfg, functions, query)?)
    } else {
        None
    };

    let circuit = document
        .circuit
        .as_ref()
        .map(|raw| MonotoneCircuit::new(raw).map_err(ValidationError::from))
        .transpose()?;
    let graph = document.graph.clone();
    if let Some(g) = &graph {
        g.reachable_from_source().map_err(ValidationError::from)?;
    }
    Ok(ParsedInstance {
        document,
        lattice,
        system,
        circuit,
        graph,
    })
}

fn build_system(
    lattice: Lattice,
    cfg: &CfgSection,
    functions: &[Vec<Elem>],
    query: QuerySection,
) -> Result<DfaSystem, CliError> {
    let n = cfg.n;
    let m = lattice.element_count();
    check_names("cfg.names", &cfg.names, n)?;
    if functions.len() < n {
        return Err(schema(
            format!("functions.{}", functions.len()),
            format!("missing transfer function for vertex {}", functions.len()),
        ));
    }
    if functions.len() > n {
        return Err(schema(
            format!("functions.{n}"),
            format!("{} transfer functions for {n} vertices", functions.len()),
        ));
    }
    if let Some(i) = functions.iter().position(|f| f.len() != m) {
        return Err(schema(
            format!("functions.{i}"),
            format!("expected {m} entries, found {}", functions[i].len()),
        ));
    }
    let graph =
        ControlFlowGraph::new(n, &cfg.edges, cfg.entry, cfg.exit).map_err(ValidationError::from)?;
    let functions = functions
        .iter()
        .cloned()
        .map(TransferFunction::new)
        .collect();
    let sys = DfaSystem::new(
        graph,
        lattice,
        functions,
        Query {
            vertex: query.vertex,
            value: query.value,
        },
    )
    .map_err(ValidationError::from)?;
    Ok(sys.with_vertex_names(cfg.names.clone()))
}

impl InstanceDocument {
    /// The document describing a DFA system, with the lattice in cover form.
    pub fn from_system(sys: &DfaSystem) -> Self {
        let cfg = sys.cfg();
        let q = sys.query();
        InstanceDocument {
            lattice: Some(LatticeSection::from_lattice(
                sys.lattice(),
                Representation::Cover,
            )),
            cfg: Some(CfgSection {
                n: cfg.vertex_count(),
                edges: cfg.edges().collect(),
                entry: cfg.entry(),
                exit: cfg.exit(),
                names: sys.vertex_names().map(<[String]>::to_vec),
            }),
            functions: Some(sys.functions().iter().map(|f| f.table().to_vec()).collect()),
            query: Some(QuerySection {
                vertex: q.vertex,
                value: q.value,
            }),
            circuit: None,
            graph: None,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents serialize");
        s.push('\n');
        s
    }
}
