//! Command-line surface of the verification workbench: load fixtures, run
//! check suites, and emit deterministic JSON reports or human-readable
//! summaries.
//!
//! Exit status: 0 when all checks pass, 1 when a check fails (the first
//! failing witness is printed), 2 on fixture or usage errors.

mod fixtures;
mod output;
mod suites;

use clap::{Parser, Subcommand, ValueEnum};
use output::RunOutcome;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "prerigid",
    version,
    about = "Desk-scale verification workbench for pre-rigid monoidal categories"
)]
struct Cli {
    /// Seed for all sampled morphisms and objects.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Carrier-size bound for set-based suites.
    #[arg(long, global = true)]
    max_size: Option<usize>,
    /// Dimension bound for matrix-based suites.
    #[arg(long, global = true)]
    max_dim: Option<usize>,
    /// Degree bound for graded and truncated-algebra suites.
    #[arg(long, global = true)]
    degree: Option<usize>,
    /// Write the report to a file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Verb {
    /// Pre-rigidity of finite sets and relations, by exhaustion.
    Finrel,
    /// Pre-rigidity of exact-rational matrix spaces, by rank certificates.
    Finvect,
    /// Family pre-duals, the product converse, and closedness round-trips.
    Fam {
        /// Family fixture (JSON) to verify instead of seeded samples.
        fixture: Option<String>,
    },
    /// The obstruction: index-contravariant families are never pre-rigid.
    Maf,
    /// Relation-indexed families over the terminal base.
    Famrel,
    /// Diagram-category pre-duals (built-in shapes or a fixture).
    Diagram {
        /// Diagram fixture (JSON) with an index category and a functor.
        fixture: Option<String>,
    },
    /// Graded pre-duals over the naturals and the two-element group.
    Graded {
        /// Graded-object fixture (JSON) to verify instead of the built-ins.
        fixture: Option<String>,
    },
    /// Pomonoid validation, classification and derived laws.
    Pomonoid {
        #[command(subcommand)]
        action: PomonoidAction,
    },
    /// Sentence parsing: concrete pomonoid products or free contractions.
    Parse {
        #[command(subcommand)]
        action: ParseAction,
    },
    /// Lifting machinery: lax structure, lift identity, truncated algebra.
    Lift {
        #[command(subcommand)]
        action: LiftAction,
    },
    /// Negative witnesses: non-closedness and the decimal refutation.
    Witness {
        #[command(subcommand)]
        action: WitnessAction,
    },
    /// The full check matrix in fixed order.
    All,
}

#[derive(Subcommand)]
enum PomonoidAction {
    /// Poset, monoid and monotonicity axioms, exhaustively.
    Validate { fixture: String },
    /// Protogroup / contractive / residuated / pregroup flags and tables.
    Classify { fixture: String },
    /// Derived proto-inverse laws and the Galois condition.
    Laws { fixture: String },
}

#[derive(Subcommand)]
enum ParseAction {
    /// Multiply word types in a pomonoid and compare with the target.
    Finite {
        fixture: String,
        /// Comma-separated element names.
        #[arg(long)]
        types: String,
        /// Target element name.
        #[arg(long)]
        target: String,
    },
    /// Reduce a sentence with adjacent contractions against a lexicon.
    Free {
        fixture: String,
        /// The sentence, as space-separated words.
        #[arg(long)]
        sentence: String,
    },
}

#[derive(Subcommand)]
enum LiftAction {
    /// Coherence of the pre-dual functor's lax structure.
    Lax,
    /// The two lifts of the pre-dual functor agree on sampled coalgebras.
    Barop {
        /// Optional bialgebra fixture whose coalgebra part joins the samples.
        fixture: Option<String>,
    },
    /// Degreewise dimension profile of k⟨X,Y⟩/(X², XY+YX).
    Tambara,
}

#[derive(Subcommand)]
enum WitnessAction {
    /// Growth of the constant-family hom dimension with the degree bound.
    NotClosed,
    /// Bounded refutation of residuatedness for the decimal pomonoid.
    Decimals,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let seed = cli.seed;
    let outcome: Result<RunOutcome, fixtures::FixtureError> = match &cli.verb {
        Verb::Finrel => Ok(suites::finrel_suite(seed, cli.max_size.unwrap_or(2))),
        Verb::Finvect => Ok(suites::finvect_suite(seed, cli.max_dim.unwrap_or(4))),
        Verb::Fam { fixture } => match fixture {
            Some(f) => fixtures::load_family(&fixtures::resolve(f))
                .map(|dims| suites::fam_suite(seed, 8, Some(dims))),
            None => Ok(suites::fam_suite(seed, 8, None)),
        },
        Verb::Maf => Ok(suites::maf_suite(seed)),
        Verb::Famrel => Ok(suites::famrel_suite(seed, cli.max_size.unwrap_or(3))),
        Verb::Diagram { fixture } => match fixture {
            Some(f) => fixtures::load_diagram(&fixtures::resolve(f))
                .map(|fx| suites::diagram_suite(seed, Some(fx))),
            None => Ok(suites::diagram_suite(seed, None)),
        },
        Verb::Graded { fixture } => match fixture {
            Some(f) => fixtures::load_graded(&fixtures::resolve(f))
                .map(|x| suites::graded_suite(seed, Some(x))),
            None => Ok(suites::graded_suite(seed, None)),
        },
        Verb::Pomonoid { action } => match action {
            PomonoidAction::Validate { fixture } => {
                fixtures::load_pomonoid(&fixtures::resolve(fixture))
                    .map(|p| suites::pomonoid_validate_suite(seed, &p))
            }
            PomonoidAction::Classify { fixture } => {
                fixtures::load_pomonoid(&fixtures::resolve(fixture))
                    .map(|p| suites::pomonoid_classify_suite(seed, &p))
            }
            PomonoidAction::Laws { fixture } => {
                fixtures::load_pomonoid(&fixtures::resolve(fixture))
                    .map(|p| suites::pomonoid_laws_suite(seed, &p))
            }
        },
        Verb::Parse { action } => match action {
            ParseAction::Finite {
                fixture,
                types,
                target,
            } => fixtures::load_pomonoid(&fixtures::resolve(fixture)).and_then(|p| {
                let lookup = |name: &str| {
                    p.elements.iter().position(|e| e == name).ok_or_else(|| {
                        fixtures::FixtureError {
                            path: fixtures::resolve(fixture),
                            location: "types".to_string(),
                            message: format!("unknown element \"{name}\""),
                        }
                    })
                };
                let type_ids: Vec<usize> = types
                    .split(',')
                    .filter(|s| !s.trim().is_empty())
                    .map(|s| lookup(s.trim()))
                    .collect::<Result<_, _>>()?;
                let target_id = lookup(target.trim())?;
                Ok(suites::parse_finite_suite(seed, &p, &type_ids, target_id))
            }),
            ParseAction::Free { fixture, sentence } => {
                fixtures::load_lexicon(&fixtures::resolve(fixture)).map(|lex| {
                    let words: Vec<&str> = sentence.split_whitespace().collect();
                    suites::parse_free_suite(seed, &lex, &words)
                })
            }
        },
        Verb::Lift { action } => match action {
            LiftAction::Lax => Ok(suites::lift_lax_suite(seed, cli.max_dim.unwrap_or(3))),
            LiftAction::Barop { fixture } => match fixture {
                Some(f) => fixtures::load_bialgebra(&fixtures::resolve(f))
                    .map(|b| suites::lift_barop_suite(seed, Some(b))),
                None => Ok(suites::lift_barop_suite(seed, None)),
            },
            LiftAction::Tambara => Ok(suites::lift_tambara_suite(seed, cli.degree.unwrap_or(12))),
        },
        Verb::Witness { action } => match action {
            WitnessAction::NotClosed => Ok(suites::witness_not_closed_suite(
                seed,
                cli.degree.unwrap_or(10),
            )),
            WitnessAction::Decimals => Ok(suites::witness_decimals_suite(
                seed,
                cli.degree.unwrap_or(3) as u32,
            )),
        },
        Verb::All => Ok(suites::all_suite(seed)),
    };

    let outcome = match outcome {
        Ok(o) => o,
        Err(e) => {
            eprintln!("fixture error: {e}");
            return ExitCode::from(2);
        }
    };

    let rendered = match cli.format {
        Format::Json => {
            let mut s =
                serde_json::to_string_pretty(&outcome.to_json()).expect("report serialises");
            s.push('\n');
            s
        }
        Format::Text => outcome.render_text(),
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, rendered) {
                eprintln!("cannot write report to {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{rendered}"),
    }

    if outcome.all_passed() {
        ExitCode::SUCCESS
    } else {
        if let Some(first) = outcome
            .sections
            .iter()
            .flat_map(|s| s.report.failures())
            .next()
        {
            eprintln!(
                "first failure: {} — {}",
                first.anchor,
                first.witness.clone().unwrap_or_default()
            );
        }
        ExitCode::from(1)
    }
}
