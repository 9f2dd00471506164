//! `sekit`: SE-models, canonical rules and program equivalence from the
//! command line.
//!
//! Exit codes: 0 for success or a positive verdict, 1 for a negative verdict,
//! 2 for any error.

mod input;
mod render;

use std::io::Write;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand, ValueEnum};
use sekit_core::canonical::secan;
use sekit_core::equivalence::{default_alphabet, equivalence_report, Notion};
use sekit_core::lattice::{is_rule_representable, Method};
use sekit_core::oracle::{closed_form_class_count, closure_experiment, count_se_classes, ClosureOp};
use sekit_core::parser::parse_rule;
use sekit_core::reconstruct::induce_rule;
use sekit_core::semantics::se_models_program;
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "sekit", version, about = "SE-model toolkit for disjunctive logic-program rules")]
struct Cli {
    /// Output format
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the SE-models of a rule or program
    Models {
        /// A single rule, e.g. 'p; not p :-.'
        rule: Option<String>,
        /// Program file, or `-` for standard input
        #[arg(long)]
        program: Option<String>,
        /// Comma-separated alphabet; must include every occurring atom
        #[arg(long, value_delimiter = ',')]
        alphabet: Option<Vec<String>>,
    },
    /// Print the canonical rule SE-equivalent to a rule
    Canon { rule: String },
    /// Print the rule induced by an SE-set and whether it represents the set
    Induce {
        /// Models file in the structured format, or `-`
        file: String,
    },
    /// Compare two programs under one or all equivalence notions
    Equiv {
        left: String,
        right: String,
        #[arg(long, value_enum, default_value_t = NotionArg::All)]
        notion: NotionArg,
        #[arg(long, value_delimiter = ',')]
        alphabet: Option<Vec<String>>,
    },
    /// Exhaustive experiments over the alphabet p, q, r, ...
    Explore {
        #[command(subcommand)]
        what: Explore,
    },
}

#[derive(Subcommand, Debug)]
enum Explore {
    /// Count SE-equivalence classes of rules over n atoms
    Classes {
        #[arg(short, default_value_t = 2)]
        n: usize,
    },
    /// Check whether rule-representable sets are closed under an operation
    Closure {
        #[arg(short, default_value_t = 2)]
        n: usize,
        #[arg(long, value_enum, default_value_t = OpArg::Intersection)]
        op: OpArg,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum NotionArg {
    S,
    Sr,
    Smr,
    Su,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OpArg {
    Union,
    Intersection,
}

/// What a command prints, in both formats, and how it exits.
struct Outcome {
    text: String,
    json: Value,
    code: u8,
}

impl Outcome {
    fn ok(text: String, json: Value) -> Self {
        Outcome { text, json, code: 0 }
    }

    fn verdict(holds: bool, text: String, json: Value) -> Self {
        Outcome {
            text,
            json,
            code: if holds { 0 } else { 1 },
        }
    }
}

fn run(cli: Cli) -> Result<Outcome> {
    let limits = input::limits()?;
    match cli.command {
        Command::Models { rule, program, alphabet } => {
            let program = input::read_input(rule.as_deref(), program.as_deref())?;
            let alphabet = input::resolve_alphabet(&program.alphabet(), alphabet.as_deref(), limits)?;
            let models = se_models_program(&program, &alphabet)?;
            Ok(Outcome::ok(render::se_set_text(&models), render::se_set_json(&models)))
        }
        Command::Canon { rule } => {
            let r = parse_rule(&rule)?;
            let c = secan(&r);
            Ok(Outcome::ok(c.to_string(), json!({ "rule": r.to_string(), "canonical": c.to_string() })))
        }
        Command::Induce { file } => {
            let set = input::read_se_set(&file, limits)?;
            let rule = induce_rule(&set)?;
            let rep = is_rule_representable(&set, Method::Lattice)?.representable;
            let label = if rep { "representable" } else { "not representable" };
            Ok(Outcome::verdict(
                rep,
                format!("{rule}\n{label}"),
                json!({ "rule": rule.to_string(), "representable": rep }),
            ))
        }
        Command::Equiv { left, right, notion, alphabet } => {
            if left == "-" && right == "-" {
                anyhow::bail!("only one program can come from standard input");
            }
            let (l, r) = (input::read_program(&left)?, input::read_program(&right)?);
            let alphabet = input::resolve_alphabet(&default_alphabet(&l, &r), alphabet.as_deref(), limits)?;
            let report = equivalence_report(&l, &r, &alphabet)?;
            let notions: Vec<Notion> = match notion {
                NotionArg::S => vec![Notion::S],
                NotionArg::Sr => vec![Notion::Sr],
                NotionArg::Smr => vec![Notion::Smr],
                NotionArg::Su => vec![Notion::Su],
                NotionArg::All => Notion::ALL.to_vec(),
            };
            let holds = notions.iter().all(|&n| report.verdict(n));
            Ok(Outcome::verdict(
                holds,
                render::equivalence_text(&report, &notions).trim_end().to_string(),
                render::equivalence_json(&report, &notions),
            ))
        }
        Command::Explore { what: Explore::Classes { n } } => {
            let alphabet = input::explore_alphabet(n, limits)?;
            let classes = count_se_classes(&alphabet)?;
            let formula = closed_form_class_count(n as u32);
            // a mismatch with the closed form is reported as a negative verdict
            Ok(Outcome::verdict(
                classes as u128 == formula,
                classes.to_string(),
                json!({ "atoms": n, "classes": classes, "closed_form": formula.to_string() }),
            ))
        }
        Command::Explore { what: Explore::Closure { n, op } } => {
            let alphabet = input::explore_alphabet(n, limits)?;
            let op = match op {
                OpArg::Union => ClosureOp::Union,
                OpArg::Intersection => ClosureOp::Intersection,
            };
            let report = closure_experiment(&alphabet, op)?;
            Ok(Outcome::ok(
                render::closure_text(&report).trim_end().to_string(),
                render::closure_json(&report),
            ))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match run(cli) {
        Ok(outcome) => {
            let mut out = std::io::stdout().lock();
            let written = match format {
                Format::Text => writeln!(out, "{}", outcome.text),
                Format::Json => writeln!(out, "{}", outcome.json),
            };
            match written {
                Ok(()) => ExitCode::from(outcome.code),
                // a closed pipe (`| head`) is not an error of ours
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::from(outcome.code),
                Err(e) => {
                    eprintln!("error: writing output: {e}");
                    ExitCode::from(2)
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
