//! Command-line surface for the srct library: enumeration, expansions,
//! class structure, poset export, module matrices, verification sweeps,
//! and count tables.
//!
//! Exit codes: 0 on success, 1 on verification failure (with a
//! machine-readable counterexample on stdout), 2 on usage errors.

mod render;
mod suites;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use srct::classes::equivalence_classes;
use srct::compositions::{Composition, SkewShapePair};
use srct::hecke::orbit;
use srct::modrep::{build_module, build_skew_module};
use srct::posets::{bruhat_interval, flip_poset, rank_unimodality_sweep, FinitePoset};
use srct::qsym::{canonical_qsym, quasisymmetric_schur, skew_quasisymmetric_schur};
use srct::shifted::{count_report, CountFamily, CountReport};
use srct::tableaux::{canonical_tableau, enumerate_skew_srct, enumerate_srct, Tableau};

#[derive(Parser)]
#[command(
    name = "srct",
    version,
    about = "Standard reverse composition tableaux: 0-Hecke flips, classes, quasisymmetric Schur expansions, modules, and counts",
    after_help = "Verification sweeps fan out across shapes; RAYON_NUM_THREADS controls the width."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
    Tsv,
    Dot,
}

#[derive(Args)]
struct OutputArgs {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_comp(s: &str) -> Result<Composition, String> {
    s.parse::<Composition>().map_err(|e| e.to_string())
}

#[derive(Subcommand)]
enum Command {
    /// List all SRCTs of a shape.
    Enum {
        /// Comma-separated parts, e.g. 2,1,3 (empty string for the empty shape).
        #[arg(long, value_parser = parse_comp)]
        shape: Composition,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// List all skew SRCTs of an outer//inner shape.
    SkewEnum {
        #[arg(long, value_parser = parse_comp)]
        shape: Composition,
        /// Inner shape of the skew pair.
        #[arg(long, value_parser = parse_comp)]
        skew: Composition,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Equivalence classes of a shape: size, st-word, source, sink, DRN.
    Classes {
        #[arg(long, value_parser = parse_comp)]
        shape: Composition,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Flip orbit of one tableau (default: the canonical tableau).
    Orbit {
        #[arg(long, value_parser = parse_comp)]
        shape: Composition,
        /// Index into the canonical enumeration instead of the canonical tableau.
        #[arg(long)]
        index: Option<usize>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Fundamental expansion of the quasisymmetric Schur function.
    Qs {
        #[arg(long, value_parser = parse_comp)]
        shape: Composition,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Fundamental expansion of the canonical quasisymmetric function.
    Canonical {
        #[arg(long, value_parser = parse_comp)]
        shape: Composition,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Fundamental expansion of a skew quasisymmetric Schur function.
    SkewQs {
        #[arg(long, value_parser = parse_comp)]
        shape: Composition,
        #[arg(long, value_parser = parse_comp)]
        skew: Composition,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Flip poset of one class, or the matching weak Bruhat interval.
    Poset {
        #[arg(long, value_parser = parse_comp)]
        shape: Composition,
        /// Which class (in canonical class order).
        #[arg(long, default_value_t = 0)]
        class_index: usize,
        /// Export the Bruhat interval [col source, col sink] instead.
        #[arg(long)]
        bruhat: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Basis tableaux and generator matrices of a module.
    Module {
        #[arg(long, value_parser = parse_comp)]
        shape: Composition,
        /// Inner shape: build the skew module S_{shape//skew}.
        #[arg(long, value_parser = parse_comp)]
        skew: Option<Composition>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run a verification sweep; exits 1 with a counterexample on failure.
    Verify {
        #[arg(long, value_enum)]
        suite: suites::Suite,
        /// Size bound for the sweep (default: the suite's acceptance bound).
        #[arg(long)]
        n: Option<usize>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Compare a closed-form count against direct enumeration.
    Counts {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// k parameter (threes, rectangle).
        #[arg(long)]
        k: Option<usize>,
        /// n parameter (staircase-double, rectangle).
        #[arg(long)]
        n: Option<usize>,
        /// Sweep the running parameter from 1 to MAX (tsv-friendly).
        #[arg(long)]
        max: Option<usize>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Rank vectors of every class poset up to a size bound.
    Conjecture {
        #[arg(long, default_value_t = 6)]
        n: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum FamilyArg {
    Threes,
    StaircaseDouble,
    Rectangle,
}

fn usage_error(message: &str) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(2)
}

fn emit(output: &OutputArgs, body: String) -> ExitCode {
    match &output.out {
        None => {
            println!("{body}");
            ExitCode::SUCCESS
        }
        Some(path) => match fs::write(path, body + "\n") {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => usage_error(&format!("cannot write {}: {e}", path.display())),
        },
    }
}

fn skew_pair(shape: &Composition, skew: &Composition) -> Result<SkewShapePair, String> {
    SkewShapePair::new(shape.clone(), skew.clone()).map_err(|e| e.to_string())
}

fn count_parameter(family: FamilyArg, k: Option<usize>, n: Option<usize>) -> Result<CountFamily, String> {
    let positive = |value: Option<usize>, what: &str| -> Result<usize, String> {
        match value {
            Some(0) => Err(format!("{what} must be at least 1")),
            Some(v) => Ok(v),
            None => Err(format!("{what} is required for this family")),
        }
    };
    match family {
        FamilyArg::Threes => Ok(CountFamily::Threes {
            k: positive(k, "--k")?,
        }),
        FamilyArg::StaircaseDouble => Ok(CountFamily::StaircaseDouble {
            n: positive(n, "--n")?,
        }),
        FamilyArg::Rectangle => Ok(CountFamily::Rectangle {
            n: positive(n, "--n")?,
            k: positive(k, "--k")?,
        }),
    }
}

fn run() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Enum { shape, output } => {
            let tableaux = enumerate_srct(&shape);
            let body = match output.format {
                Format::Json => render::json_pretty(&tableaux),
                _ => render::tableaux_text(&tableaux),
            };
            emit(&output, body)
        }
        Command::SkewEnum { shape, skew, output } => {
            let pair = match skew_pair(&shape, &skew) {
                Ok(p) => p,
                Err(e) => return usage_error(&e),
            };
            let tableaux = enumerate_skew_srct(&pair);
            let body = match output.format {
                Format::Json => render::json_pretty(&tableaux),
                _ => render::tableaux_text(&tableaux),
            };
            emit(&output, body)
        }
        Command::Classes { shape, output } => {
            let classes = equivalence_classes(&shape);
            let body = match output.format {
                Format::Json => render::classes_json(&classes),
                _ => render::classes_text(&classes),
            };
            emit(&output, body)
        }
        Command::Orbit {
            shape,
            index,
            output,
        } => {
            let start = match index {
                None => canonical_tableau(&shape),
                Some(i) => {
                    let all = enumerate_srct(&shape);
                    match all.get(i) {
                        Some(t) => t.clone(),
                        None => {
                            return usage_error(&format!(
                                "index {i} out of range: shape {shape} has {} tableaux",
                                all.len()
                            ))
                        }
                    }
                }
            };
            let members = orbit(&start);
            let body = match output.format {
                Format::Json => render::json_pretty(&members),
                _ => render::tableaux_text(&members),
            };
            emit(&output, body)
        }
        Command::Qs { shape, output } => {
            emit(&output, render::expansion(&quasisymmetric_schur(&shape), output.format))
        }
        Command::Canonical { shape, output } => {
            emit(&output, render::expansion(&canonical_qsym(&shape), output.format))
        }
        Command::SkewQs { shape, skew, output } => {
            let pair = match skew_pair(&shape, &skew) {
                Ok(p) => p,
                Err(e) => return usage_error(&e),
            };
            emit(
                &output,
                render::expansion(&skew_quasisymmetric_schur(&pair), output.format),
            )
        }
        Command::Poset {
            shape,
            class_index,
            bruhat,
            output,
        } => {
            let classes = equivalence_classes(&shape);
            let class = match classes.get(class_index) {
                Some(c) => c,
                None => {
                    return usage_error(&format!(
                        "class index {class_index} out of range: shape {shape} has {} classes",
                        classes.len()
                    ))
                }
            };
            let poset: FinitePoset = if bruhat {
                match bruhat_interval(
                    &class.source().column_word(),
                    &class.sink().column_word(),
                ) {
                    Ok(p) => p,
                    Err(e) => return usage_error(&e.to_string()),
                }
            } else {
                flip_poset(class)
            };
            let body = match output.format {
                Format::Dot => poset.to_dot(),
                Format::Json => render::json_pretty(&poset),
                _ => render::poset_text(&poset),
            };
            emit(&output, body)
        }
        Command::Module { shape, skew, output } => {
            let body = match skew {
                Some(inner) => {
                    let pair = match skew_pair(&shape, &inner) {
                        Ok(p) => p,
                        Err(e) => return usage_error(&e),
                    };
                    let module = build_skew_module(&pair);
                    render::module_body(
                        json!({"outer": pair.outer(), "inner": pair.inner()}),
                        module.basis(),
                        module.gens(),
                        output.format,
                    )
                }
                None => {
                    let module = build_module(&shape);
                    render::module_body(
                        json!({"shape": &shape}),
                        module.basis(),
                        module.gens(),
                        output.format,
                    )
                }
            };
            emit(&output, body)
        }
        Command::Verify { suite, n, output } => match suites::run_suite(suite, n) {
            Ok(summary) => emit(&output, summary),
            Err(counterexample) => {
                let _ = emit(&output, render::json_pretty(&counterexample));
                ExitCode::FAILURE
            }
        },
        Command::Counts {
            family,
            k,
            n,
            max,
            output,
        } => {
            let reports: Vec<CountReport> = match max {
                Some(limit) => {
                    let sweep: Result<Vec<CountReport>, String> = (1..=limit)
                        .map(|p| {
                            let fam = match family {
                                FamilyArg::Threes => count_parameter(family, Some(p), None)?,
                                FamilyArg::StaircaseDouble => {
                                    count_parameter(family, None, Some(p))?
                                }
                                FamilyArg::Rectangle => count_parameter(family, Some(p), n)?,
                            };
                            Ok(count_report(fam))
                        })
                        .collect();
                    match sweep {
                        Ok(r) => r,
                        Err(e) => return usage_error(&e),
                    }
                }
                None => match count_parameter(family, k, n) {
                    Ok(fam) => vec![count_report(fam)],
                    Err(e) => return usage_error(&e),
                },
            };
            let all_match = reports.iter().all(|r| r.matches);
            let body = render::counts_body(&reports, output.format);
            let code = emit(&output, body);
            if code == ExitCode::SUCCESS && !all_match {
                return ExitCode::FAILURE;
            }
            code
        }
        Command::Conjecture { n, output } => {
            let stats = rank_unimodality_sweep(n);
            emit(&output, render::conjecture_body(&stats, output.format))
        }
    }
}

fn main() -> ExitCode {
    run()
}
