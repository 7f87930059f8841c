//! Command-line front end. Exit codes: 0 success, 1 a check failed, 2 usage error.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use griess_core::algebra::StructureAlgebra;
use griess_core::bplus::BPlusAlgebra;
use griess_core::niemeier::conway_order;
use griess_core::rootalgebra::{RootAlgebra, RootAlgebraError};
use griess_core::rootsys::{Family, RootSystem};
use griess_core::Rational;
use serde::Serialize;

use crate::data;
use crate::formats::{algebra_to_json, decomposition_to_json, DecompositionJson};
use crate::verify::{self, Target, VerifyError, VerifyOptions, VerifyReport, MAX_UNFORCED_BASIS};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "griess", version, about = "Exact checks for algebras attached to simply-laced root systems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the positive roots of a root system such as `A2`, `D4`, `A5^4+D4`.
    Roots {
        spec: String,
        #[arg(long)]
        json: bool,
    },
    /// Build A(Phi), T(Phi) or B^+ and summarize it or dump it as JSON.
    Algebra {
        spec: String,
        #[arg(long, value_enum, default_value_t = Kind::A)]
        kind: Kind,
        #[arg(long)]
        dump_json: bool,
        #[arg(long)]
        force: bool,
    },
    /// Build B^+ and summarize it or dump it as JSON.
    Bplus {
        spec: String,
        #[arg(long)]
        dump_json: bool,
        #[arg(long)]
        force: bool,
    },
    /// Decompose the identity of A(Phi) into orthogonal idempotents (JSON output).
    Decompose {
        spec: String,
        /// Simple-root indices `i1,i2,...` (prefixes form the chain) or nested
        /// subsets separated by `;`, e.g. `0;0,1;0,1,3`.
        #[arg(long)]
        chain: Option<String>,
        #[arg(long)]
        force: bool,
    },
    /// Run a verification target.
    Verify {
        /// lemma2.1, prop2.2, lemma2.3, lemma2.4, eq2.5, lemma2.5, lemma2.6,
        /// thm2.7, thm3.1, cor3.2, lemma4.2, formula4.1, table1, table2 or all
        target: String,
        /// Root system; may be repeated. Defaults to A1 A2 A3 D4 E6 A1^24 A2^12 A24.
        #[arg(long)]
        spec: Vec<String>,
        #[arg(long)]
        json: bool,
        /// Largest quadratic-space dimension for formula4.1.
        #[arg(long, default_value_t = 8)]
        max_dim: usize,
        #[arg(long)]
        force: bool,
        /// Print the time spent on each target.
        #[arg(long)]
        timings: bool,
    },
    /// The Niemeier root systems.
    Niemeier {
        #[command(subcommand)]
        command: NiemeierCommand,
    },
}

#[derive(Debug, Subcommand)]
enum NiemeierCommand {
    /// The 24 catalog entries with masses and orbit counts.
    List {
        #[arg(long)]
        json: bool,
    },
    /// Build and check the associative subalgebra of B^+ for one entry.
    Sub {
        name: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    A,
    T,
    Bplus,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Verify(#[from] VerifyError),
    #[error(transparent)]
    Other(#[from] anyhow::Error),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Verify(VerifyError::Usage(_) | VerifyError::UnknownTarget(_) | VerifyError::RootSystem(_)) => {
                EXIT_USAGE
            }
            _ => EXIT_FAIL,
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return EXIT_USAGE;
            }
            let _ = write!(out, "{}", e.render());
            return EXIT_OK;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.code()
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<i32, CliError> {
    match cmd {
        Command::Roots { spec, json } => roots(&spec, json, out),
        Command::Algebra { spec, kind, dump_json, force } => algebra(&spec, kind, dump_json, force, out),
        Command::Bplus { spec, dump_json, force } => algebra(&spec, Kind::Bplus, dump_json, force, out),
        Command::Decompose { spec, chain, force } => decompose(&spec, chain.as_deref(), force, out),
        Command::Verify { target, spec, json, max_dim, force, timings } => {
            let target: Target = target.parse()?;
            let reports = verify::run(target, &spec, &VerifyOptions { max_dim, force })?;
            print_reports(&reports, json, timings, out)?;
            Ok(if reports.iter().all(|r| r.passed) { EXIT_OK } else { EXIT_FAIL })
        }
        Command::Niemeier { command: NiemeierCommand::List { json } } => niemeier_list(json, out),
        Command::Niemeier { command: NiemeierCommand::Sub { name, json } } => niemeier_sub(&name, json, out),
    }
}

fn parse_spec(spec: &str, force: bool) -> Result<RootSystem, CliError> {
    let rs = RootSystem::from_spec(spec).map_err(|e| CliError::Usage(e.to_string()))?;
    if 2 * rs.num_positive() > MAX_UNFORCED_BASIS && !force {
        return Err(CliError::Usage(format!(
            "{spec} has 2N = {} > {MAX_UNFORCED_BASIS} basis vectors; pass --force",
            2 * rs.num_positive()
        )));
    }
    Ok(rs)
}

fn emit_json<T: Serialize>(value: &T, out: &mut dyn Write) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, value).map_err(anyhow::Error::from)?;
    writeln!(out).map_err(anyhow::Error::from)?;
    Ok(())
}

macro_rules! say {
    ($out:expr, $($arg:tt)*) => {
        writeln!($out, $($arg)*).map_err(anyhow::Error::from)?
    };
}

#[derive(Serialize)]
struct RootsJson {
    spec: String,
    rank: usize,
    num_positive: usize,
    components: Vec<ComponentJson>,
    roots: Vec<RootJson>,
}

#[derive(Serialize)]
struct ComponentJson {
    r#type: String,
    coxeter_number: usize,
}

#[derive(Serialize)]
struct RootJson {
    index: usize,
    component: usize,
    coeffs: Vec<i64>,
    height: i64,
}

fn roots(spec: &str, json: bool, out: &mut dyn Write) -> Result<i32, CliError> {
    let rs = parse_spec(spec, true)?;
    let doc = RootsJson {
        spec: rs.to_string(),
        rank: rs.rank(),
        num_positive: rs.num_positive(),
        components: rs
            .components()
            .iter()
            .map(|c| ComponentJson { r#type: c.to_string(), coxeter_number: c.coxeter_number() })
            .collect(),
        roots: rs
            .roots()
            .iter()
            .enumerate()
            .map(|(index, r)| RootJson { index, component: r.component(), coeffs: r.coeffs().to_vec(), height: r.height() })
            .collect(),
    };
    if json {
        emit_json(&doc, out)?;
        return Ok(EXIT_OK);
    }
    let hs: Vec<String> = doc.components.iter().map(|c| format!("{}: h = {}", c.r#type, c.coxeter_number)).collect();
    say!(out, "{}  rank {}  N = {}  ({})", doc.spec, doc.rank, doc.num_positive, hs.join(", "));
    for r in &doc.roots {
        say!(out, "{:>5}  {:?}  height {}", r.index, r.coeffs, r.height);
    }
    Ok(EXIT_OK)
}

fn algebra(spec: &str, kind: Kind, dump_json: bool, force: bool, out: &mut dyn Write) -> Result<i32, CliError> {
    let rs = parse_spec(spec, force)?;
    let name = rs.to_string();
    let (label, alg): (String, StructureAlgebra) = match kind {
        Kind::A => (format!("A({name})"), RootAlgebra::build_a(rs).algebra().clone()),
        Kind::T => (format!("T({name})"), RootAlgebra::build_t(rs).algebra().clone()),
        Kind::Bplus => (format!("B+({name})"), BPlusAlgebra::build(rs).algebra().clone()),
    };
    if dump_json {
        emit_json(&algebra_to_json(&alg), out)?;
        return Ok(EXIT_OK);
    }
    let identity = alg.find_identity();
    say!(out, "{label}");
    say!(out, "  dimension        {}", alg.dim());
    say!(out, "  radical          {}", alg.radical_dimension());
    match identity {
        Some(id) => say!(out, "  identity charge  {}", alg.central_charge(&id).map_err(anyhow::Error::from)?),
        None => say!(out, "  identity         none"),
    }
    Ok(EXIT_OK)
}

/// `0,1,2` gives the prefixes `{0}, {0,1}, {0,1,2}`; `0;0,1;0,1,3` lists subsets.
fn parse_chain(text: &str) -> Result<Vec<Vec<usize>>, CliError> {
    let parse_list = |s: &str| -> Result<Vec<usize>, CliError> {
        s.split(',')
            .map(str::trim)
            .filter(|x| !x.is_empty())
            .map(|x| x.parse().map_err(|_| CliError::Usage(format!("bad simple-root index {x:?}"))))
            .collect()
    };
    if text.contains(';') {
        text.split(';').map(parse_list).collect()
    } else {
        let order = parse_list(text)?;
        Ok((1..=order.len()).map(|k| order[..k].to_vec()).collect())
    }
}

fn decompose(spec: &str, chain: Option<&str>, force: bool, out: &mut dyn Write) -> Result<i32, CliError> {
    let rs = parse_spec(spec, force)?;
    let type_a = rs.components().iter().all(|c| c.family() == Family::A);
    let ra = RootAlgebra::build_a(rs);
    let report = match chain {
        Some(c) => ra.generalized_chain_decompose(&parse_chain(c)?),
        None if type_a => ra.coset_chain_decompose(),
        None => ra.component_chain_decompose(),
    };
    let report = report.map_err(|e| match e {
        RootAlgebraError::NotNested(_) | RootAlgebraError::RootSystem(_) => CliError::Usage(e.to_string()),
        e => CliError::Other(e.into()),
    })?;
    let doc: DecompositionJson = decomposition_to_json(&report);
    emit_json(&doc, out)?;
    Ok(if report.checks.all() { EXIT_OK } else { EXIT_FAIL })
}

fn print_reports(reports: &[VerifyReport], json: bool, timings: bool, out: &mut dyn Write) -> Result<(), CliError> {
    if json {
        #[derive(Serialize)]
        struct Doc<'a> {
            passed: bool,
            reports: &'a [VerifyReport],
        }
        return emit_json(&Doc { passed: reports.iter().all(|r| r.passed), reports }, out);
    }
    for r in reports {
        let head = match &r.spec {
            Some(s) => format!("{} [{s}]", r.target),
            None => r.target.clone(),
        };
        if timings {
            say!(out, "{head}  ({:.2?})", r.elapsed);
        } else {
            say!(out, "{head}");
        }
        for c in &r.clauses {
            match &c.detail {
                Some(d) => say!(out, "  {}  {}  [{d}]", c.status, c.description),
                None => say!(out, "  {}  {}", c.status, c.description),
            }
        }
    }
    let failed = reports.iter().filter(|r| !r.passed).count();
    if failed == 0 {
        say!(out, "result: PASS ({} reports)", reports.len());
    } else {
        say!(out, "result: FAIL ({failed} of {} reports)", reports.len());
    }
    Ok(())
}

#[derive(Serialize)]
struct EntryJson {
    name: String,
    components: String,
    coxeter_number: Option<usize>,
    k: usize,
    mass: String,
    count: String,
}

fn niemeier_list(json: bool, out: &mut dyn Write) -> Result<i32, CliError> {
    let co1 = Rational::from(num_bigint::BigInt::from(conway_order()));
    let rows: Vec<EntryJson> = data::catalog()
        .iter()
        .map(|e| EntryJson {
            name: e.name().to_string(),
            components: griess_core::rootsys::format_components(e.components()),
            coxeter_number: e.coxeter_number(),
            k: e.k(),
            mass: e.mass().to_string(),
            count: (e.mass() * &co1).to_string(),
        })
        .collect();
    if json {
        emit_json(&rows, out)?;
        return Ok(EXIT_OK);
    }
    say!(out, "{:<10} {:>3} {:>3}  {:<22} {}", "name", "h", "k", "mass", "mass * |Co_1|");
    for r in &rows {
        let h = r.coxeter_number.map_or("-".to_string(), |h| h.to_string());
        say!(out, "{:<10} {:>3} {:>3}  {:<22} {}", r.name, h, r.k, r.mass, r.count);
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct SubJson {
    name: String,
    dimension: usize,
    expected_dimension: usize,
    bplus_dimension: usize,
    passed: bool,
    decomposition: DecompositionJson,
}

fn niemeier_sub(name: &str, json: bool, out: &mut dyn Write) -> Result<i32, CliError> {
    let entry = data::find_entry(name).ok_or_else(|| CliError::Usage(format!("no catalog entry {name:?}")))?;
    if entry.is_leech() {
        return Err(CliError::Usage("the Leech lattice has no roots".into()));
    }
    let r = entry.lemma_4_2_subalgebra().map_err(anyhow::Error::from)?;
    let doc = SubJson {
        name: r.name.clone(),
        dimension: r.dimension,
        expected_dimension: r.expected_dimension,
        bplus_dimension: r.bplus_dim,
        passed: r.passed(),
        decomposition: decomposition_to_json(&r.report),
    };
    if json {
        emit_json(&doc, out)?;
    } else {
        say!(out, "{}: {} idempotents in B^+ of dimension {}", doc.name, doc.dimension, doc.bplus_dimension);
        say!(out, "  expected dimension 24 + k = {}", doc.expected_dimension);
        say!(out, "  charges {}", doc.decomposition.charges.join(", "));
        let c = &doc.decomposition.checks;
        say!(
            out,
            "  sum {}  idempotent {}  orthogonal {}  form-orthogonal {}  associative {}",
            c.sum_to_identity,
            c.idempotent,
            c.products_orthogonal,
            c.form_orthogonal,
            c.associative_span
        );
        say!(out, "result: {}", if doc.passed { "PASS" } else { "FAIL" });
    }
    Ok(if doc.passed { EXIT_OK } else { EXIT_FAIL })
}
