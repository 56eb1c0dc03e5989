//! `comodec` — exact structural analysis of finite-dimensional coalgebras
//! and their comodules from structure-constant input files.
//!
//! Exit codes: 0 success; 1 the analysis is refused (unsupported field or a
//! non-split semisimple dual); 2 malformed input or a violated precondition;
//! 3 an internal cross-check caught two routes disagreeing.

mod input;
mod report;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use comodec_core::builders::{
    grouplike, matrix_coalgebra, path_coalgebra, randomized_basis_coalgebra,
    randomized_basis_comodule, regular_comodule, standard_matrix_comodule, QuiverSpec,
};
use comodec_core::comodule::DEFAULT_WEAK_SAMPLES;
use comodec_core::rng::DEFAULT_SEED;
use comodec_core::{
    classify, coalgebra_link_graph, decompose_coalgebra, decompose_comodule, radical,
    verify_structure, AnalysisOptions, CheckStatus, Coalgebra, Comodule, Error, Field, Result,
    Subspace, WedgeMode,
};

use input::BuiltDocument;
use report::{
    render, CheckOut, ClassifyOut, ClosureOut, ComponentOut, CoradicalOut, DecomposeOut, GraphOut,
    SimplesOut, SocleOut, SubspaceOut, VerifyOut, WedgeOut,
};

const WEAK_SAMPLES_ENV: &str = "COMODEC_WEAK_SAMPLES";

#[derive(Parser)]
#[command(
    name = "comodec",
    version,
    about = "Exact decomposition and classification of finite-dimensional \
             coalgebras and their comodules",
    after_help = "Input files are JSON documents; every scalar is a string \
                  (an integer, a fraction in lowest terms over the rationals, \
                  or a residue in [0, p) over a prime field). Reports are \
                  deterministic: the same input and seed give byte-identical \
                  output.\n\nThe environment variable COMODEC_WEAK_SAMPLES \
                  overrides the number of vectors sampled for weak-closedness \
                  verdicts (default 64)."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Cross-check every wedge through the second formula (slower; any
    /// disagreement aborts with exit code 3).
    #[arg(long, global = true)]
    verify_wedge: bool,

    /// Seed for sampled verdicts and randomized bases.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,

    /// Write the report to this path instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Check the coalgebra and coaction laws; exit 2 listing violations.
    Check { input: PathBuf },
    /// Sum of the simple subcoalgebras, with its wedge filtration.
    Coradical { input: PathBuf },
    /// List the simple subcoalgebras.
    Simples { input: PathBuf },
    /// Wedge of two named subspaces.
    Wedge {
        input: PathBuf,
        left: String,
        right: String,
        /// Wedge inside the comodule instead of the coalgebra (both names
        /// must then denote subcomodules).
        #[arg(long)]
        module: bool,
    },
    /// Closure of a named module subspace, with a weak-closedness verdict.
    Closure { input: PathBuf, name: String },
    /// Largest subcomodule whose coefficients lie in a named subcoalgebra.
    Component { input: PathBuf, name: String },
    /// Sum of the minimal closed subcomodules, with its wedge filtration.
    Socle { input: PathBuf },
    /// Split the coalgebra — and the comodule if present — into
    /// indecomposable direct summands.
    Decompose { input: PathBuf },
    /// Report the structural flags of the comodule.
    Classify { input: PathBuf },
    /// Run the full structural check catalog; exit 3 if any check fails.
    Verify { input: PathBuf },
    /// Emit a generated instance as an input document.
    Gen {
        #[command(subcommand)]
        shape: GenCommand,
    },
}

#[derive(Subcommand)]
enum GenCommand {
    /// The coalgebra spanned by n grouplike elements.
    Grouplike {
        n: usize,
        #[command(flatten)]
        opts: GenOpts,
    },
    /// The n-by-n matrix coalgebra.
    Matrix {
        n: usize,
        /// Attach the standard n-dimensional comodule.
        #[arg(long, conflicts_with = "regular")]
        standard: bool,
        #[command(flatten)]
        opts: GenOpts,
    },
    /// The path coalgebra of a quiver, truncated at a maximum path length.
    Path {
        /// Number of vertices.
        #[arg(long)]
        vertices: usize,
        /// An arrow FROM:TO; repeat the flag for several arrows.
        #[arg(long = "arrow", value_name = "FROM:TO")]
        arrows: Vec<String>,
        /// Longest path length kept.
        #[arg(long, default_value_t = 1)]
        max_len: usize,
        #[command(flatten)]
        opts: GenOpts,
    },
}

#[derive(Args)]
struct GenOpts {
    /// Work over the prime field of this order instead of the rationals.
    #[arg(long)]
    prime: Option<u64>,
    /// Attach the regular comodule (the coalgebra coacting on itself).
    #[arg(long)]
    regular: bool,
    /// Re-express the instance in a seeded random basis.
    #[arg(long)]
    twist: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Unsupported(_) => 1,
                Error::Invalid(_) => 2,
                Error::Internal(_) => 3,
            })
        }
    }
}

fn options(cli: &Cli) -> Result<AnalysisOptions> {
    let weak_samples = match std::env::var(WEAK_SAMPLES_ENV) {
        Err(_) => DEFAULT_WEAK_SAMPLES,
        Ok(text) => text.trim().parse::<usize>().map_err(|_| {
            Error::Invalid(format!(
                "{WEAK_SAMPLES_ENV} must be a non-negative integer, found {text:?}"
            ))
        })?,
    };
    Ok(AnalysisOptions {
        wedge_mode: if cli.verify_wedge { WedgeMode::Verify } else { WedgeMode::Fast },
        weak_samples,
        seed: cli.seed,
    })
}

fn load(path: &PathBuf) -> Result<BuiltDocument> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Invalid(format!("cannot read {}: {e}", path.display())))?;
    let doc = input::parse_input(&text)
        .map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))?;
    input::build(&doc)
}

fn emit(cli: &Cli, text: &str) -> Result<()> {
    match &cli.output {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(path) => fs::write(path, text)
            .map_err(|e| Error::Invalid(format!("cannot write {}: {e}", path.display()))),
    }
}

fn require_comodule(built: &BuiltDocument) -> Result<&Comodule> {
    built.comodule.as_ref().ok_or_else(|| {
        Error::Invalid(
            "the document has no comodule block; add one, or generate a regular \
             comodule with `comodec gen ... --regular`"
                .to_string(),
        )
    })
}

/// Looks up a named subspace and checks it lives in the expected ambient
/// space (`None` for the coalgebra, `Some(m)` for the module side).
fn named(built: &BuiltDocument, name: &str, module: Option<&Comodule>) -> Result<Subspace> {
    let s = built.subspaces.get(name).ok_or_else(|| {
        let known: Vec<&str> = built.subspaces.keys().map(String::as_str).collect();
        Error::Invalid(format!(
            "unknown subspace {name:?}; the document defines {known:?}"
        ))
    })?;
    let (expected, side) = match module {
        Some(m) => (m.dim(), "module"),
        None => (built.coalgebra.dim(), "coalgebra"),
    };
    if s.ambient() != expected {
        return Err(Error::Invalid(format!(
            "subspace {name:?} has vectors of {} coordinates, but the {side} \
             has dimension {expected}",
            s.ambient()
        )));
    }
    Ok(s.clone())
}

fn run(cli: &Cli) -> Result<()> {
    let options = options(cli)?;
    match &cli.command {
        Command::Check { input } => {
            let built = load(input)?;
            let coalgebra_violations: Vec<String> =
                built.coalgebra.check().iter().map(|v| v.to_string()).collect();
            let comodule_violations: Option<Vec<String>> = built
                .comodule
                .as_ref()
                .map(|m| m.check().iter().map(|v| v.to_string()).collect());
            let ok = coalgebra_violations.is_empty()
                && comodule_violations.as_ref().is_none_or(Vec::is_empty);
            let first = coalgebra_violations
                .first()
                .or_else(|| comodule_violations.as_ref().and_then(|v| v.first()))
                .cloned();
            emit(cli, &render(&CheckOut { ok, coalgebra_violations, comodule_violations }))?;
            match first {
                None => Ok(()),
                Some(witness) => Err(Error::Invalid(format!("structure laws fail: {witness}"))),
            }
        }
        Command::Coradical { input } => {
            let built = load(input)?;
            let coradical = radical::coradical(&built.coalgebra)?;
            let tower = built.coalgebra.wedge_tower(coradical.space(), options.wedge_mode)?;
            let filtration_dims = tower.steps.iter().map(Subspace::dim).collect();
            emit(
                cli,
                &render(&CoradicalOut {
                    coradical: SubspaceOut::of_subcoalgebra(&coradical),
                    filtration_dims,
                }),
            )
        }
        Command::Simples { input } => {
            let built = load(input)?;
            let simples = radical::simple_subcoalgebras(&built.coalgebra)?;
            emit(
                cli,
                &render(&SimplesOut {
                    count: simples.len(),
                    simples: simples.iter().map(SubspaceOut::of_subcoalgebra).collect(),
                }),
            )
        }
        Command::Wedge { input, left, right, module } => {
            let built = load(input)?;
            let (ambient, wedge) = if *module {
                let m = require_comodule(&built)?;
                let x = named(&built, left, Some(m))?;
                let y = named(&built, right, Some(m))?;
                ("module", m.comodule_wedge(&x, &y, options.wedge_mode)?)
            } else {
                let x = named(&built, left, None)?;
                let y = named(&built, right, None)?;
                ("coalgebra", built.coalgebra.wedge(&x, &y, options.wedge_mode)?)
            };
            emit(
                cli,
                &render(&WedgeOut {
                    ambient,
                    left: left.clone(),
                    right: right.clone(),
                    wedge: SubspaceOut::of(&wedge),
                }),
            )
        }
        Command::Closure { input, name } => {
            let built = load(input)?;
            let m = require_comodule(&built)?;
            let s = named(&built, name, Some(m))?;
            let closure = m.closure(&s);
            let verdict = m.is_weak_closed(&s, options.weak_samples, options.seed);
            emit(
                cli,
                &render(&ClosureOut {
                    name: name.clone(),
                    input_dim: s.dim(),
                    input_closed: closure == s,
                    closure: SubspaceOut::of(&closure),
                    input_weak_closed: verdict.as_str(),
                }),
            )
        }
        Command::Component { input, name } => {
            let built = load(input)?;
            let m = require_comodule(&built)?;
            let e = named(&built, name, None)?;
            let component = m.component(&e)?;
            emit(
                cli,
                &render(&ComponentOut {
                    over: name.clone(),
                    component: SubspaceOut::of(&component),
                }),
            )
        }
        Command::Socle { input } => {
            let built = load(input)?;
            let m = require_comodule(&built)?;
            let socle = m.socle()?;
            let tower = m.comodule_wedge_tower(&socle, options.wedge_mode)?;
            emit(
                cli,
                &render(&SocleOut {
                    cosemisimple: socle.is_full(),
                    socle: SubspaceOut::of(&socle),
                    filtration_dims: tower.steps.iter().map(Subspace::dim).collect(),
                }),
            )
        }
        Command::Decompose { input } => {
            let built = load(input)?;
            let out = match &built.comodule {
                Some(m) => {
                    let report = decompose_comodule(m, &options)?;
                    DecomposeOut::of_report(m, &report)
                }
                None => {
                    let summands = decompose_coalgebra(&built.coalgebra, options.wedge_mode)?;
                    let (_, graph) =
                        coalgebra_link_graph(&built.coalgebra, options.wedge_mode)?;
                    DecomposeOut {
                        coalgebra: report::CoalgebraDecompositionOut {
                            dim: built.coalgebra.dim(),
                            graph: GraphOut::of(&graph),
                            summands: summands
                                .iter()
                                .map(SubspaceOut::of_subcoalgebra)
                                .collect(),
                        },
                        comodule: None,
                    }
                }
            };
            emit(cli, &render(&out))
        }
        Command::Classify { input } => {
            let built = load(input)?;
            let m = require_comodule(&built)?;
            let flags = classify(m, &options)?;
            emit(cli, &render(&ClassifyOut::of(&flags)))
        }
        Command::Verify { input } => {
            let built = load(input)?;
            let m = require_comodule(&built)?;
            let results = verify_structure(m, &options)?;
            let failed = results.iter().filter(|r| r.status == CheckStatus::Fail).count();
            emit(cli, &render(&VerifyOut::of(&results)))?;
            if failed > 0 {
                return Err(Error::Internal(format!(
                    "{failed} structural check(s) failed; see the report"
                )));
            }
            Ok(())
        }
        Command::Gen { shape } => {
            let (coalgebra, comodule) = generate(shape, cli.seed)?;
            let doc = input::document_for(&coalgebra, comodule.as_ref());
            emit(cli, &input::serialize_input(&doc))
        }
    }
}

fn gen_field(opts: &GenOpts) -> Result<Field> {
    match opts.prime {
        None => Ok(Field::Rationals),
        Some(p) => Field::prime(p),
    }
}

fn parse_arrow(text: &str) -> Result<(usize, usize)> {
    let err = || {
        Error::Invalid(format!(
            "arrow {text:?} is not of the form FROM:TO with vertex indices"
        ))
    };
    let (from, to) = text.split_once(':').ok_or_else(err)?;
    Ok((from.trim().parse().map_err(|_| err())?, to.trim().parse().map_err(|_| err())?))
}

fn generate(shape: &GenCommand, seed: u64) -> Result<(Arc<Coalgebra>, Option<Comodule>)> {
    let (coalgebra, comodule, opts) = match shape {
        GenCommand::Grouplike { n, opts } => {
            (Arc::new(grouplike(gen_field(opts)?, *n)?), None, opts)
        }
        GenCommand::Matrix { n, standard, opts } => {
            if *standard {
                let m = standard_matrix_comodule(gen_field(opts)?, *n)?;
                (m.coalgebra_arc(), Some(m), opts)
            } else {
                (Arc::new(matrix_coalgebra(gen_field(opts)?, *n)?), None, opts)
            }
        }
        GenCommand::Path { vertices, arrows, max_len, opts } => {
            let arrows = arrows.iter().map(|a| parse_arrow(a)).collect::<Result<Vec<_>>>()?;
            let quiver = QuiverSpec::new(*vertices, arrows, *max_len);
            (Arc::new(path_coalgebra(gen_field(opts)?, &quiver)?), None, opts)
        }
    };
    let comodule = match (comodule, opts.regular) {
        (Some(m), _) => Some(m),
        (None, true) => Some(regular_comodule(Arc::clone(&coalgebra))),
        (None, false) => None,
    };
    if !opts.twist {
        return Ok((coalgebra, comodule));
    }
    match comodule {
        Some(m) => {
            let twisted = randomized_basis_comodule(&m, seed);
            Ok((twisted.coalgebra_arc(), Some(twisted)))
        }
        None => Ok((Arc::new(randomized_basis_coalgebra(&coalgebra, seed)), None)),
    }
}
