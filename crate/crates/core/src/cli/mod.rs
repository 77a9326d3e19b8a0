//! Command-line front end over JSON instance files.
//!
//! Exit status: 0 when the decision holds or the operation succeeded, 1 when
//! the decision is false, 2 on invalid input.

mod document;
mod dot;

pub use document::{
    parse_instance, validate, CfgSection, InstanceDocument, LatticeSection, ParsedInstance,
    QuerySection, Representation,
};
pub use dot::{emit_dot, product_node_id, DotMode};

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::dfa::{DfaError, DfaSystem, SystemSpec};
use crate::lattice::LatticeError;
use crate::reductions::{reduce_gr_to_mop, reduce_mcv_to_mfp, CircuitError, ReductionError};
use crate::solvers::{solve_mfp, solve_mop, SolveError};

pub const EXIT_TRUE: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ValidationError {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Dfa(#[from] DfaError),
    #[error(transparent)]
    Circuit(#[from] CircuitError),
    #[error(transparent)]
    Reduction(#[from] ReductionError),
    #[error(transparent)]
    Solve(#[from] SolveError),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("syntax error at line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("schema error at `{path}`: {message}")]
    Schema { path: String, message: String },
    #[error("invalid instance: {0}")]
    Validation(#[from] ValidationError),
}

#[derive(Debug, Parser)]
#[command(
    name = "latflow",
    version,
    about = "Data-flow analysis over finite lattices"
)]
struct Cli {
    /// Print the machine-readable report instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Maximum fixed point and its decision.
    Mfp { file: PathBuf },
    /// Meet over all paths and its decision.
    Mop { file: PathBuf },
    /// Both solvers side by side with monotonicity and distributivity.
    Check { file: PathBuf },
    /// Convert or validate a lattice section.
    #[command(subcommand)]
    Lattice(LatticeCommand),
    /// Turn a circuit or digraph into a solver instance.
    #[command(subcommand)]
    Reduce(ReduceCommand),
    /// Graphviz rendering of the CFG or the product graph.
    Dot {
        file: PathBuf,
        #[arg(long)]
        product: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Emit a catalog instance document.
    Catalog {
        kind: CatalogKind,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(short = 'n', long, default_value_t = 5)]
        vertices: usize,
        #[arg(short = 'm', long, default_value_t = 4)]
        elements: usize,
        #[arg(long, default_value_t = 3)]
        bits: u32,
        #[arg(long, default_value_t = 0.3)]
        density: f64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
enum LatticeCommand {
    /// Rewrite the lattice section in another representation.
    Convert {
        #[arg(long)]
        to: Representation,
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Validate the lattice section.
    Check { file: PathBuf },
}

#[derive(Debug, Subcommand)]
enum ReduceCommand {
    /// Circuit value instance to an MFP instance.
    Mcv {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Graph reachability instance to an MOP instance.
    Gr {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CatalogKind {
    Diamond,
    RandomMonotone,
    Random,
    Bitvector,
}

/// Per-vertex results by element name.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexResult {
    pub vertex: usize,
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mfp: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mop: Option<String>,
}

/// Machine-readable outcome of one command. Field order and map keys are fixed.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct RunReport {
    pub command: Vec<String>,
    pub exit_code: i32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub decision: Option<bool>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub vertices: Vec<VertexResult>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub properties: BTreeMap<String, bool>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub statistics: BTreeMap<String, u64>,
    #[serde(default)]
    pub warnings: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<String>,
    /// Generated text (DOT or a document) when no output file was given.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub artifact: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl RunReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}

/// Exit code, report and the text a front end should print.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutput {
    pub exit_code: i32,
    pub report: RunReport,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `argv` (program name first) and runs the command. Never panics on
/// bad input; every failure maps to [`EXIT_INVALID`].
pub fn run_command<I, S>(argv: I) -> CommandOutput
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv: Vec<String> = argv.into_iter().map(Into::into).collect();
    let mut report = RunReport {
        command: argv.iter().skip(1).cloned().collect(),
        ..RunReport::default()
    };
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_INVALID
            } else {
                EXIT_TRUE
            };
            report.exit_code = code;
            let text = e.render().to_string();
            if code != EXIT_TRUE {
                report.error = Some(text.clone());
            }
            let (stdout, stderr) = if code == EXIT_TRUE {
                (text, String::new())
            } else if argv.iter().any(|a| a == "--json") {
                (report.to_json(), String::new())
            } else {
                (String::new(), text)
            };
            return CommandOutput {
                exit_code: code,
                report,
                stdout,
                stderr,
            };
        }
    };
    let json = cli.json;
    let mut text = String::new();
    let code = match execute(cli.command, &mut report, &mut text) {
        Ok(code) => code,
        Err(e) => {
            report.error = Some(e.to_string());
            EXIT_INVALID
        }
    };
    report.exit_code = code;
    let (stdout, stderr) = if json {
        (report.to_json(), String::new())
    } else {
        let err = report
            .error
            .as_ref()
            .map(|e| format!("error: {e}\n"))
            .unwrap_or_default();
        (text, err)
    };
    CommandOutput {
        exit_code: code,
        report,
        stdout,
        stderr,
    }
}

fn load(path: &Path) -> Result<ParsedInstance, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    parse_instance(&text)
}

fn require<T>(value: Option<T>, section: &str) -> Result<T, CliError> {
    value.ok_or_else(|| CliError::Schema {
        path: section.into(),
        message: "missing section".into(),
    })
}

/// Writes `content` to `output`, or appends it to the text output.
fn deliver(
    content: &str,
    output: Option<&Path>,
    report: &mut RunReport,
    text: &mut String,
) -> Result<(), CliError> {
    match output {
        Some(path) => {
            std::fs::write(path, content).map_err(|e| CliError::Io {
                path: path.display().to_string(),
                message: e.to_string(),
            })?;
            report.output = Some(path.display().to_string());
            let _ = writeln!(text, "wrote {}", path.display());
        }
        None => {
            text.push_str(content);
            report.artifact = Some(content.to_string());
        }
    }
    Ok(())
}

fn decision_code(decision: bool) -> i32 {
    if decision {
        EXIT_TRUE
    } else {
        EXIT_FALSE
    }
}

fn query_line(sys: &DfaSystem, decision: bool) -> String {
    let q = sys.query();
    format!(
        "decision: {decision} (query {} = {})\n",
        sys.vertex_name(q.vertex),
        sys.lattice().name(q.value)
    )
}

fn execute(command: Command, report: &mut RunReport, text: &mut String) -> Result<i32, CliError> {
    match command {
        Command::Mfp { file } => {
            let sys = require(load(&file)?.system, "cfg")?;
            let r = solve_mfp(&sys).map_err(ValidationError::from)?;
            fill_rows(report, &sys, Some(&r.solution), None);
            report.decision = Some(r.decision);
            report
                .statistics
                .insert("evaluations".into(), r.work as u64);
            render_rows(text, report);
            text.push_str(&query_line(&sys, r.decision));
            Ok(decision_code(r.decision))
        }
        Command::Mop { file } => {
            let sys = require(load(&file)?.system, "cfg")?;
            let r = solve_mop(&sys);
            fill_rows(report, &sys, None, Some(&r.solution));
            report.decision = Some(r.decision);
            report
                .statistics
                .insert("visited_product_vertices".into(), r.work as u64);
            render_rows(text, report);
            text.push_str(&query_line(&sys, r.decision));
            Ok(decision_code(r.decision))
        }
        Command::Check { file } => {
            let sys = require(load(&file)?.system, "cfg")?;
            check(&sys, report, text)
        }
        Command::Lattice(LatticeCommand::Convert { to, file, output }) => {
            let mut parsed = load(&file)?;
            let lattice = require(parsed.lattice, "lattice")?;
            parsed.document.lattice = Some(LatticeSection::from_lattice(&lattice, to));
            report
                .statistics
                .insert("elements".into(), lattice.element_count() as u64);
            deliver(&parsed.document.to_json(), output.as_deref(), report, text)?;
            Ok(EXIT_TRUE)
        }
        Command::Lattice(LatticeCommand::Check { file }) => {
            let lattice = require(load(&file)?.lattice, "lattice")?;
            let stats = [
                ("elements", lattice.element_count()),
                ("bottom", lattice.bottom()),
                ("top", lattice.top()),
                ("height", lattice.height()),
            ];
            for (k, v) in stats {
                report.statistics.insert(k.into(), v as u64);
            }
            let _ = writeln!(
                text,
                "lattice: {} elements, bottom {}, top {}, height {}",
                lattice.element_count(),
                lattice.name(lattice.bottom()),
                lattice.name(lattice.top()),
                lattice.height()
            );
            Ok(EXIT_TRUE)
        }
        Command::Reduce(ReduceCommand::Mcv { file, output }) => {
            let circuit = require(load(&file)?.circuit, "circuit")?;
            let red = reduce_mcv_to_mfp(&circuit).map_err(ValidationError::from)?;
            report
                .properties
                .insert("circuit_output".into(), circuit.output_value());
            emit_reduced(&red.system, output.as_deref(), report, text)?;
            Ok(EXIT_TRUE)
        }
        Command::Reduce(ReduceCommand::Gr { file, output }) => {
            let graph = require(load(&file)?.graph, "graph")?;
            let red = reduce_gr_to_mop(&graph).map_err(ValidationError::from)?;
            let reachable = graph
                .reachable_from_source()
                .map_err(ValidationError::from)?;
            report
                .properties
                .insert("target_reachable".into(), reachable[graph.target]);
            emit_reduced(&red.system, output.as_deref(), report, text)?;
            Ok(EXIT_TRUE)
        }
        Command::Dot {
            file,
            product,
            output,
        } => {
            let sys = require(load(&file)?.system, "cfg")?;
            let mode = if product {
                DotMode::Product
            } else {
                DotMode::Cfg
            };
            deliver(&emit_dot(&sys, mode), output.as_deref(), report, text)?;
            Ok(EXIT_TRUE)
        }
        Command::Catalog {
            kind,
            seed,
            vertices,
            elements,
            bits,
            density,
            output,
        } => {
            let need_seed = || {
                seed.ok_or_else(|| CliError::Usage("random catalog systems require --seed".into()))
            };
            let spec = match kind {
                CatalogKind::Diamond => SystemSpec::Diamond,
                CatalogKind::RandomMonotone => SystemSpec::RandomMonotone {
                    seed: need_seed()?,
                    n: vertices,
                    m: elements,
                    density,
                },
                CatalogKind::Random => SystemSpec::Random {
                    seed: need_seed()?,
                    n: vertices,
                    m: elements,
                    density,
                },
                CatalogKind::Bitvector => SystemSpec::RandomBitVector {
                    seed: need_seed()?,
                    n: vertices,
                    bits,
                    density,
                },
            };
            if !(0.0..=1.0).contains(&density) {
                return Err(CliError::Usage("--density must lie in [0, 1]".into()));
            }
            let sys = spec.build().map_err(ValidationError::from)?;
            emit_reduced(&sys, output.as_deref(), report, text)?;
            Ok(EXIT_TRUE)
        }
    }
}

fn emit_reduced(
    sys: &DfaSystem,
    output: Option<&Path>,
    report: &mut RunReport,
    text: &mut String,
) -> Result<(), CliError> {
    report
        .statistics
        .insert("cfg_vertices".into(), sys.vertex_count() as u64);
    report
        .statistics
        .insert("cfg_edges".into(), sys.cfg().edge_count() as u64);
    report
        .statistics
        .insert("elements".into(), sys.lattice().element_count() as u64);
    deliver(
        &InstanceDocument::from_system(sys).to_json(),
        output,
        report,
        text,
    )
}

fn check(sys: &DfaSystem, report: &mut RunReport, text: &mut String) -> Result<i32, CliError> {
    let lattice = sys.lattice();
    let monotone = sys.is_monotone();
    let distributive = sys.is_distributive();
    let mop = solve_mop(sys);
    let mfp = if monotone {
        Some(solve_mfp(sys).map_err(ValidationError::from)?)
    } else {
        report
            .warnings
            .push("system is not monotone; MFP skipped".into());
        None
    };
    fill_rows(
        report,
        sys,
        mfp.as_ref().map(|r| &r.solution[..]),
        Some(&mop.solution),
    );
    report.properties.insert("monotone".into(), monotone);
    report
        .properties
        .insert("distributive".into(), distributive);
    report
        .properties
        .insert("mop_decision".into(), mop.decision);
    report
        .statistics
        .insert("visited_product_vertices".into(), mop.work as u64);
    if let Some(mfp) = &mfp {
        let below = lattice.slice_leq(&mfp.solution, &mop.solution);
        let coincide = mfp.solution == mop.solution;
        report
            .properties
            .insert("mfp_decision".into(), mfp.decision);
        report.properties.insert("mfp_below_mop".into(), below);
        report.properties.insert("coincide".into(), coincide);
        report
            .statistics
            .insert("evaluations".into(), mfp.work as u64);
        if !below {
            return Err(CliError::Validation(ValidationError::Solve(
                SolveError::NoMaximum,
            )));
        }
        if distributive && !coincide {
            report
                .warnings
                .push("distributive system whose MFP and MOP differ".into());
        }
    }
    render_rows(text, report);
    for (k, v) in &report.properties {
        let _ = writeln!(text, "{}: {v}", k.replace('_', " "));
    }
    for w in &report.warnings {
        let _ = writeln!(text, "warning: {w}");
    }
    Ok(EXIT_TRUE)
}

fn fill_rows(
    report: &mut RunReport,
    sys: &DfaSystem,
    mfp: Option<&[usize]>,
    mop: Option<&[usize]>,
) {
    let lattice = sys.lattice();
    report.vertices = (0..sys.vertex_count())
        .map(|v| VertexResult {
            vertex: v,
            name: sys.vertex_name(v),
            mfp: mfp.map(|s| lattice.name(s[v])),
            mop: mop.map(|s| lattice.name(s[v])),
        })
        .collect();
}

fn render_rows(text: &mut String, report: &RunReport) {
    let width = report
        .vertices
        .iter()
        .map(|r| r.name.len())
        .max()
        .unwrap_or(0)
        .max(6);
    let has_mfp = report.vertices.iter().any(|r| r.mfp.is_some());
    let has_mop = report.vertices.iter().any(|r| r.mop.is_some());
    let col = report
        .vertices
        .iter()
        .filter_map(|r| r.mfp.as_ref().map(String::len))
        .max()
        .unwrap_or(0)
        .max(3);
    let mut header = format!("{:<width$}", "vertex");
    if has_mfp {
        let _ = write!(header, "  {:<col$}", "mfp");
    }
    if has_mop {
        header.push_str("  mop");
    }
    let _ = writeln!(text, "{}", header.trim_end());
    for r in &report.vertices {
        let mut line = format!("{:<width$}", r.name);
        if let Some(v) = &r.mfp {
            let _ = write!(line, "  {v:<col$}");
        }
        if let Some(v) = &r.mop {
            let _ = write!(line, "  {v}");
        }
        let _ = writeln!(text, "{}", line.trim_end());
    }
}
