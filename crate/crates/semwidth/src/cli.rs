//! Command line front end. Exit codes: 0 success, 1 negative answer, 2 usage
//! or input error, 3 size limit exceeded.

use std::ffi::OsString;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{CommandFactory, Parser, Subcommand, ValueEnum};
use semwidth_core::covers::{
    dual, exotic_witness, fractional_cover, gap_report, integral_cover, transversality, vc_dimension,
};
use semwidth_core::decomp::{
    exact_hw, exact_width, ghd_covers, hypertree_width, subw_bounds, WidthKind,
};
use semwidth_core::hom::{core, find_homomorphism, Mapping};
use semwidth_core::model::{hypergraph_of, k2};
use semwidth_core::reductions::redh_reduce;
use semwidth_core::semantic::{scv_repair, semantic_hw, semantic_width, StructureWidth};
use semwidth_core::solver::{solve_bruteforce, solve_decomposed};
use semwidth_core::ucq::{make_nonredundant, solve_ucq, ucq_equivalent, ucq_semantic_subw_bounds, Ucq};
use semwidth_core::{Hypergraph, Limits, Structure};

use crate::check::{self, Suite};
use crate::format::{self, FormatError};
use crate::gen::{self, HypergraphParams, RangeError, StructureParams};
use crate::limits::{limits_from_env, LimitsError};

#[derive(Debug, Parser)]
#[command(name = "semwidth", version, about = "Cores, covers, widths and decomposition-guided solving")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WidthArg {
    Tw,
    Ghw,
    Fhw,
    Rho,
    RhoStar,
    Tau,
    TauStar,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SemanticArg {
    RhoStar,
    Tw,
    Ghw,
    Fhw,
    SubwBounds,
    Hw,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SolveMode {
    Brute,
    Decomp,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Hierarchy,
    CoreMinimality,
    Duality,
    ScvRepair,
    Redh,
    Ucq,
    SolverAgreement,
    All,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse a .str, .hg, .td or .ucq file and print a summary.
    Parse {
        file: PathBuf,
        /// Also print the file in normalized form.
        #[arg(long)]
        normalize: bool,
    },
    /// Width of a hypergraph (.hg) or of the hypergraph of a structure (.str).
    Width {
        #[arg(long, value_enum)]
        kind: WidthArg,
        file: PathBuf,
        /// Write the witness decomposition (.td) or cover.
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Hypertree width, or whether it is at most k.
    Hw {
        file: PathBuf,
        #[arg(long)]
        k: Option<usize>,
        /// Write the hypertree decomposition.
        #[arg(long)]
        td: Option<PathBuf>,
    },
    /// Bounds on the submodular width; for a .ucq the semantic bounds.
    SubwBounds { file: PathBuf },
    /// Core of a structure with a retraction onto it.
    Core {
        file: PathBuf,
        /// Core file, by default next to the input as <stem>.core.str.
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        retraction: Option<PathBuf>,
    },
    /// Semantic width of a structure, computed on its core.
    Semwidth {
        #[arg(long, value_enum)]
        kind: SemanticArg,
        file: PathBuf,
        #[arg(long)]
        core: Option<PathBuf>,
        /// For hw: the repaired equivalent structure.
        #[arg(long)]
        structure: Option<PathBuf>,
        /// For hw: the hypertree decomposition of the repaired structure.
        #[arg(long)]
        td: Option<PathBuf>,
    },
    /// Repair special condition violations of a GHD of a structure.
    RepairScv {
        structure: PathBuf,
        td: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        td_out: Option<PathBuf>,
    },
    /// Reduce (scopes, data) to (shape*, B) for a shape with the same hypergraph.
    Reduce {
        #[arg(long)]
        scopes: PathBuf,
        #[arg(long)]
        data: PathBuf,
        #[arg(long)]
        shape: PathBuf,
        /// Mapping from shape elements to scope elements; identity by default.
        #[arg(long)]
        ident: Option<PathBuf>,
        #[arg(long, default_value = "reduced-left.str")]
        left: PathBuf,
        #[arg(long, default_value = "reduced-right.str")]
        right: PathBuf,
    },
    /// Print the non-redundant form of a union.
    UcqNr { file: PathBuf },
    /// Decide equivalence of two unions.
    UcqEq { first: PathBuf, second: PathBuf },
    /// Decide whether a structure satisfies a union.
    UcqSolve { ucq: PathBuf, data: PathBuf },
    /// Decide whether a homomorphism left → right exists.
    Solve {
        #[arg(long, value_enum, default_value_t = SolveMode::Decomp)]
        mode: SolveMode,
        /// Decompose the scopes themselves instead of their core.
        #[arg(long)]
        no_core: bool,
        left: PathBuf,
        right: PathBuf,
        #[arg(long)]
        witness: Option<PathBuf>,
        /// Print decomposition statistics.
        #[arg(long)]
        stats: bool,
    },
    /// VC dimension with a shattered set.
    Vc { file: PathBuf },
    /// Find n vertices inducing at least 2^n − 1 distinct edges.
    Exotic { file: PathBuf, n: usize },
    /// Dual of a reduced hypergraph.
    Dual {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Cover and transversal numbers with integrality gaps.
    Gaps { file: PathBuf },
    /// Generate instances.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Run a property suite over a seeded pool.
    Check {
        #[arg(value_enum)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        count: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum GenKind {
    /// The n × n bidirected grid; data graph from a .str file, K2 by default.
    Grid {
        n: usize,
        data: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Also write the data graph.
        #[arg(long)]
        right: Option<PathBuf>,
    },
    /// A random structure in which every element occurs in a fact.
    RandomStructure {
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 2)]
        min_domain: usize,
        #[arg(long, default_value_t = 6)]
        max_domain: usize,
        #[arg(long, default_value_t = 3)]
        relations: usize,
        #[arg(long, default_value_t = 3)]
        arity: usize,
        /// Upper bound on facts drawn beyond one per relation.
        #[arg(long, default_value_t = 4)]
        facts: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// A random hypergraph without isolated vertices.
    RandomHypergraph {
        #[arg(long)]
        vertices: usize,
        #[arg(long)]
        edges: usize,
        #[arg(long, default_value_t = 3)]
        max_edge_size: usize,
        #[arg(long)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },
    #[error("{}: {source}", path.display())]
    Format { path: PathBuf, source: FormatError },
    #[error(transparent)]
    Core(#[from] semwidth_core::Error),
    #[error(transparent)]
    Limits(#[from] LimitsError),
    #[error(transparent)]
    Range(#[from] RangeError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(semwidth_core::Error::SizeLimit { .. })
            | CliError::Format {
                source: FormatError::Model(semwidth_core::Error::SizeLimit { .. }),
                ..
            } => 3,
            _ => 2,
        }
    }
}

type CliResult = Result<bool, CliError>;

/// Parses `args` (program name first) and runs the subcommand, returning the
/// exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let name = subcommand_name(&cli.command);
    let mut out = io::stdout().lock();
    match dispatch(cli.command, &mut out) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            eprintln!("error: {e}");
            if matches!(e, CliError::Usage(_)) {
                if let Some(sub) = Cli::command().find_subcommand_mut(name) {
                    eprintln!("{}", sub.render_usage());
                }
            }
            e.exit_code()
        }
    }
}

fn subcommand_name(c: &Command) -> &'static str {
    match c {
        Command::Parse { .. } => "parse",
        Command::Width { .. } => "width",
        Command::Hw { .. } => "hw",
        Command::SubwBounds { .. } => "subw-bounds",
        Command::Core { .. } => "core",
        Command::Semwidth { .. } => "semwidth",
        Command::RepairScv { .. } => "repair-scv",
        Command::Reduce { .. } => "reduce",
        Command::UcqNr { .. } => "ucq-nr",
        Command::UcqEq { .. } => "ucq-eq",
        Command::UcqSolve { .. } => "ucq-solve",
        Command::Solve { .. } => "solve",
        Command::Vc { .. } => "vc",
        Command::Exotic { .. } => "exotic",
        Command::Dual { .. } => "dual",
        Command::Gaps { .. } => "gaps",
        Command::Gen { .. } => "gen",
        Command::Check { .. } => "check",
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write_file(path: &Path, content: &str) -> Result<(), CliError> {
    std::fs::write(path, content).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn parsed<T>(path: &Path, r: format::Result<T>) -> Result<T, CliError> {
    r.map_err(|source| CliError::Format {
        path: path.to_path_buf(),
        source,
    })
}

fn load_structure(path: &Path) -> Result<Structure, CliError> {
    parsed(path, format::parse_structure(&read(path)?))
}

fn load_ucq(path: &Path) -> Result<Ucq, CliError> {
    parsed(path, format::parse_ucq(&read(path)?))
}

fn extension(path: &Path) -> &str {
    path.extension().and_then(|e| e.to_str()).unwrap_or("")
}

/// A `.str` file stands for its hypergraph; anything else is read as `.hg`.
fn load_hypergraph(path: &Path) -> Result<Hypergraph, CliError> {
    if extension(path) == "str" {
        Ok(hypergraph_of(&load_structure(path)?))
    } else {
        parsed(path, format::parse_hypergraph(&read(path)?))
    }
}

/// Both structures over the union of their signatures.
fn unify(a: &Structure, b: &Structure) -> Result<(Structure, Structure), CliError> {
    let sig = a.signature().merge(b.signature())?;
    Ok((a.extend_signature(&sig)?, b.extend_signature(&sig)?))
}

fn ucq_over(u: &Ucq, sig: &semwidth_core::Signature) -> Result<Ucq, CliError> {
    let ds = u
        .disjuncts()
        .iter()
        .map(|d| d.extend_signature(sig))
        .collect::<semwidth_core::Result<Vec<_>>>()?;
    Ok(Ucq::new(ds)?)
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    out.write_all(text.as_bytes()).map_err(|source| CliError::Io {
        path: PathBuf::from("<stdout>"),
        source,
    })
}

macro_rules! say {
    ($out:expr, $($fmt:tt)+) => {
        emit($out, &format!("{}\n", format_args!($($fmt)+)))?
    };
}

fn show(set: &std::collections::BTreeSet<String>) -> String {
    format!("{{{}}}", set.iter().map(String::as_str).collect::<Vec<_>>().join(","))
}

fn dispatch(command: Command, out: &mut dyn Write) -> CliResult {
    let limits: Limits = limits_from_env()?;
    match command {
        Command::Parse { file, normalize } => {
            let text = read(&file)?;
            match extension(&file) {
                "hg" => {
                    let h = parsed(&file, format::parse_hypergraph(&text))?;
                    say!(out, "hypergraph {} vertices {} edges rank {}", h.vertices().len(), h.edge_count(), h.rank());
                    if normalize {
                        emit(out, &format::write_hypergraph(&h))?;
                    }
                }
                "td" => {
                    let td = parsed(&file, format::parse_td(&text))?;
                    let covered = if td.covers.is_some() { " with covers" } else { "" };
                    say!(out, "td {} nodes {} {}{covered}", td.decomposition.len(), td.metric, td.value);
                    if normalize {
                        emit(out, &format::write_td(&td.decomposition, td.covers.as_deref(), &td.metric, &td.value))?;
                    }
                }
                "ucq" => {
                    let u = parsed(&file, format::parse_ucq(&text))?;
                    say!(out, "ucq {} disjuncts {} relations", u.len(), u.signature().len());
                    if normalize {
                        emit(out, &format::write_ucq(&u))?;
                    }
                }
                _ => {
                    let s = parsed(&file, format::parse_structure(&text))?;
                    let sig: Vec<String> = s.signature().iter().map(|(r, k)| format!("{r}/{k}")).collect();
                    say!(out, "structure {} elements {} facts signature {}", s.domain().len(), s.fact_count(), sig.join(","));
                    if normalize {
                        emit(out, &format::write_structure(&s))?;
                    }
                }
            }
            Ok(true)
        }
        Command::Width { kind, file, witness } => {
            let h = load_hypergraph(&file)?;
            let exact = |k: WidthKind| exact_width(&h, k, &limits);
            let (name, value, witness_text) = match kind {
                WidthArg::Tw | WidthArg::Ghw | WidthArg::Fhw => {
                    let k = match kind {
                        WidthArg::Tw => WidthKind::Tw,
                        WidthArg::Ghw => WidthKind::Ghw,
                        _ => WidthKind::Fhw,
                    };
                    let w = exact(k)?;
                    let value = w.value.to_string();
                    let text = if k == WidthKind::Tw {
                        format::write_td(&w.witness, None, k.name(), &value)
                    } else {
                        format::write_covered(&ghd_covers(&h, &w.witness)?, k.name(), &value)
                    };
                    (k.name(), value, text)
                }
                WidthArg::Rho => {
                    let c = integral_cover(&h, h.vertices())?;
                    ("rho", c.size.to_string(), format::write_integral_cover(&c))
                }
                WidthArg::RhoStar => {
                    let c = fractional_cover(&h, h.vertices())?;
                    ("rho-star", c.total.to_string(), format::write_fractional_cover(&c))
                }
                WidthArg::Tau => {
                    let t = transversality(&h)?;
                    let mut text: String = t.hitting_set.iter().map(|v| format!("{v} 1\n")).collect();
                    text.push_str(&format!("total {}\n", t.tau));
                    ("tau", t.tau.to_string(), text)
                }
                WidthArg::TauStar => {
                    let t = transversality(&h)?;
                    let cover = semwidth_core::covers::FractionalCover {
                        weights: t.weights,
                        total: t.tau_star.clone(),
                    };
                    ("tau-star", t.tau_star.to_string(), format::write_fractional_cover(&cover))
                }
            };
            say!(out, "{name} {value}");
            if let Some(path) = witness {
                write_file(&path, &witness_text)?;
            }
            Ok(true)
        }
        Command::Hw { file, k, td } => {
            let h = load_hypergraph(&file)?;
            let (answer, d) = match k {
                Some(0) => return Err(CliError::Usage("k must be at least 1".into())),
                Some(k) => {
                    let d = exact_hw(&h, k, &limits)?;
                    say!(out, "hw <= {k}: {}", if d.is_some() { "yes" } else { "no" });
                    (d.is_some(), d)
                }
                None => {
                    let (w, d) = hypertree_width(&h, &limits)?;
                    say!(out, "hw {w}");
                    (true, Some(d))
                }
            };
            if let (Some(path), Some(d)) = (td, d) {
                write_file(&path, &format::write_covered(&d, "hw", &d.width().to_string()))?;
            }
            Ok(answer)
        }
        Command::SubwBounds { file } => {
            if extension(&file) == "ucq" {
                let u = load_ucq(&file)?;
                let b = ucq_semantic_subw_bounds(&u, &limits)?;
                say!(out, "semantic subw {b}");
                say!(out, "lower {}", b.lower());
                say!(out, "upper {}", b.upper());
            } else {
                let h = load_hypergraph(&file)?;
                let b = subw_bounds(&h, &limits)?;
                match b.pinned() {
                    Some(v) => say!(out, "subw {v}"),
                    None => say!(out, "subw [{}, {}]", b.lower, b.upper),
                }
                say!(out, "lower {}", b.lower);
                say!(out, "upper {}", b.upper);
            }
            Ok(true)
        }
        Command::Core { file, output, retraction } => {
            let a = load_structure(&file)?;
            let c = core(&a);
            say!(out, "domain {}", c.core.domain().len());
            say!(out, "facts {}", c.core.fact_count());
            let path = output.unwrap_or_else(|| {
                let stem = file.file_stem().and_then(|s| s.to_str()).unwrap_or("core");
                file.with_file_name(format!("{stem}.core.str"))
            });
            write_file(&path, &format::write_structure(&c.core))?;
            if let Some(path) = retraction {
                write_file(&path, &format::write_mapping(&c.retraction))?;
            }
            Ok(true)
        }
        Command::Semwidth { kind, file, core: core_out, structure, td } => {
            let a = load_structure(&file)?;
            if kind == SemanticArg::Hw {
                let s = semantic_hw(&a, &limits)?;
                say!(out, "semantic hw {}", s.value);
                if let Some(path) = core_out {
                    write_file(&path, &format::write_structure(&s.core.core))?;
                }
                if let Some(path) = structure {
                    write_file(&path, &format::write_structure(&s.structure))?;
                }
                if let Some(path) = td {
                    write_file(&path, &format::write_covered(&s.decomposition, "hw", &s.value.to_string()))?;
                }
                return Ok(true);
            }
            if structure.is_some() || td.is_some() {
                return Err(CliError::Usage("--structure and --td only apply to --kind=hw".into()));
            }
            let k = match kind {
                SemanticArg::RhoStar => StructureWidth::RhoStar,
                SemanticArg::Tw => StructureWidth::Tw,
                SemanticArg::Ghw => StructureWidth::Ghw,
                SemanticArg::Fhw => StructureWidth::Fhw,
                _ => StructureWidth::SubwBounds,
            };
            let s = semantic_width(&a, k, &limits)?;
            say!(out, "semantic {} {}", k.name(), s.value);
            if let Some(path) = core_out {
                write_file(&path, &format::write_structure(&s.core.core))?;
            }
            Ok(true)
        }
        Command::RepairScv { structure, td, output, td_out } => {
            let a = load_structure(&structure)?;
            let file = parsed(&td, format::parse_td(&read(&td)?))?;
            let Some(d) = file.covered() else {
                return Err(CliError::Usage(format!("{} has no cover lines", td.display())));
            };
            let r = scv_repair(&a, &d)?;
            let counts: Vec<String> = r.scv_counts.iter().map(usize::to_string).collect();
            say!(out, "scv {}", counts.join(" -> "));
            say!(out, "steps {}", r.steps());
            say!(out, "width {}", r.decomposition.width());
            if let Some(path) = output {
                write_file(&path, &format::write_structure(&r.structure))?;
            }
            if let Some(path) = td_out {
                write_file(&path, &format::write_covered(&r.decomposition, "hw", &r.decomposition.width().to_string()))?;
            }
            Ok(true)
        }
        Command::Reduce { scopes, data, shape, ident, left, right } => {
            let (c, d) = unify(&load_structure(&scopes)?, &load_structure(&data)?)?;
            let a = load_structure(&shape)?;
            let ident: Option<Mapping> = match ident {
                Some(p) => Some(parsed(&p, format::parse_mapping(&read(&p)?))?),
                None => None,
            };
            let inst = redh_reduce(&c, &d, &a, ident.as_ref())?;
            write_file(&left, &format::write_structure(&inst.left))?;
            write_file(&right, &format::write_structure(&inst.right))?;
            say!(out, "left {} elements {} facts", inst.left.domain().len(), inst.left.fact_count());
            say!(out, "right {} elements {} facts", inst.right.domain().len(), inst.right.fact_count());
            Ok(true)
        }
        Command::UcqNr { file } => {
            let u = load_ucq(&file)?;
            emit(out, &format::write_ucq(&make_nonredundant(&u)?))?;
            Ok(true)
        }
        Command::UcqEq { first, second } => {
            let (u, v) = (load_ucq(&first)?, load_ucq(&second)?);
            let sig = u.signature().merge(v.signature())?;
            let eq = ucq_equivalent(&ucq_over(&u, &sig)?, &ucq_over(&v, &sig)?)?;
            say!(out, "{}", if eq { "equivalent" } else { "not equivalent" });
            Ok(eq)
        }
        Command::UcqSolve { ucq, data } => {
            let u = load_ucq(&ucq)?;
            let b = load_structure(&data)?;
            let sig = u.signature().merge(b.signature())?;
            let sat = solve_ucq(&ucq_over(&u, &sig)?, &b.extend_signature(&sig)?, &limits)?;
            say!(out, "{}", if sat { "SAT" } else { "UNSAT" });
            Ok(sat)
        }
        Command::Solve { mode, no_core, left, right, witness, stats } => {
            let (a, b) = unify(&load_structure(&left)?, &load_structure(&right)?)?;
            let (sat, map) = match mode {
                SolveMode::Brute => solve_bruteforce(&a, &b)?,
                SolveMode::Decomp => {
                    let run = solve_decomposed(&a, &b, !no_core, &limits)?;
                    if stats {
                        eprintln!("width {}", run.width);
                        eprintln!("max-bag-rows {}", run.max_bag_rows());
                    }
                    let map = match (&witness, run.satisfiable) {
                        (Some(_), true) => find_homomorphism(&a, &b, &Default::default())?,
                        _ => None,
                    };
                    (run.satisfiable, map)
                }
            };
            say!(out, "{}", if sat { "SAT" } else { "UNSAT" });
            if let (Some(path), Some(m)) = (witness, map) {
                write_file(&path, &format::write_mapping(&m))?;
            }
            Ok(sat)
        }
        Command::Vc { file } => {
            let h = load_hypergraph(&file)?;
            let vc = vc_dimension(&h)?;
            say!(out, "vc {}", vc.dimension);
            say!(out, "shattered {}", show(&vc.shattered));
            Ok(true)
        }
        Command::Exotic { file, n } => {
            let h = load_hypergraph(&file)?;
            match exotic_witness(&h, n)? {
                Some(u) => {
                    say!(out, "exotic {n} {}", show(&u));
                    Ok(true)
                }
                None => {
                    say!(out, "exotic {n} none");
                    Ok(false)
                }
            }
        }
        Command::Dual { file, output } => {
            let h = load_hypergraph(&file)?;
            let text = format::write_hypergraph(&dual(&h)?);
            match output {
                Some(path) => write_file(&path, &text)?,
                None => emit(out, &text)?,
            }
            Ok(true)
        }
        Command::Gaps { file } => {
            let h = load_hypergraph(&file)?;
            let g = gap_report(&h)?;
            let vc = vc_dimension(&h)?.dimension;
            say!(out, "rho {}", g.rho);
            say!(out, "rho-star {}", g.rho_star);
            say!(out, "tau {}", g.tau);
            say!(out, "tau-star {}", g.tau_star);
            say!(out, "cigap {}", g.cigap);
            say!(out, "tigap-dual {}", g.tigap_of_dual);
            say!(out, "vc {vc}");
            say!(out, "cigap-bound {:.4} (approximate)", check::ding_bound(vc, &g.rho_star));
            Ok(true)
        }
        Command::Gen { kind } => generate(kind, out),
        Command::Check { suite, seed, count } => {
            let suites: Vec<Suite> = match suite {
                SuiteArg::All => Suite::ALL.to_vec(),
                SuiteArg::Hierarchy => vec![Suite::Hierarchy],
                SuiteArg::CoreMinimality => vec![Suite::CoreMinimality],
                SuiteArg::Duality => vec![Suite::Duality],
                SuiteArg::ScvRepair => vec![Suite::ScvRepair],
                SuiteArg::Redh => vec![Suite::Redh],
                SuiteArg::Ucq => vec![Suite::Ucq],
                SuiteArg::SolverAgreement => vec![Suite::SolverAgreement],
            };
            let mut ok = true;
            for s in suites {
                let report = check::run(s, seed, count, &limits);
                ok &= report.passed();
                emit(out, &report.to_string())?;
            }
            Ok(ok)
        }
    }
}

fn emit_or_write(out: &mut dyn Write, path: Option<PathBuf>, text: &str) -> Result<(), CliError> {
    match path {
        Some(path) => write_file(&path, text),
        None => emit(out, text),
    }
}

fn generate(kind: GenKind, out: &mut dyn Write) -> CliResult {
    match kind {
        GenKind::Grid { n, data, output, right } => {
            let g = match data {
                Some(p) => load_structure(&p)?,
                None => k2(),
            };
            let inst = gen::grid(n, &g)?;
            emit_or_write(out, output, &format::write_structure(&inst.left))?;
            if let Some(path) = right {
                write_file(&path, &format::write_structure(&inst.right))?;
            }
        }
        GenKind::RandomStructure { seed, min_domain, max_domain, relations, arity, facts, output } => {
            let p = StructureParams {
                min_domain,
                max_domain,
                max_relations: relations,
                max_arity: arity,
                extra_facts: facts,
            };
            let s = gen::random_structure(seed, &p)?;
            emit_or_write(out, output, &format::write_structure(&s))?;
        }
        GenKind::RandomHypergraph { vertices, edges, max_edge_size, seed, output } => {
            let p = HypergraphParams {
                vertices,
                edges,
                max_edge_size,
            };
            let h = gen::random_hypergraph(seed, &p)?;
            emit_or_write(out, output, &format::write_hypergraph(&h))?;
        }
    }
    Ok(true)
}
