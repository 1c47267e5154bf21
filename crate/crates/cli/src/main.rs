use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use omrev::catalog::{catalog_instances, CatalogEntry, Tag};
use omrev::reversal::first_minimal_pair;
use omrev::{reversal_classes, GroundOrder, Mode, Restriction};
use omrev_cli::survey::MAX_U2K;
use omrev_cli::{analyze, load_instance, parse_order, survey, verify_entries, AnalyzeOptions, CliError, Family, Scope};

#[derive(Parser)]
#[command(name = "omrev", version, about = "Reversal classes, activities and Tutte evaluations of small oriented matroids")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Out {
    Table,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum SurveyOut {
    Table,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    U2k,
}

#[derive(Clone, Copy, ValueEnum)]
enum SurveyScope {
    CatalogNonregular,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a catalog instance or a JSON instance file.
    Analyze {
        instance: String,
        /// Ground order as a permutation, smallest element first.
        #[arg(long)]
        order: Option<String>,
        #[arg(long, value_enum, default_value = "table")]
        out: Out,
        /// Include class memberships and per-reorientation activities (n <= 12).
        #[arg(long)]
        verbose: bool,
        /// Record elapsed time (makes the output non-deterministic).
        #[arg(long)]
        timing: bool,
    },
    /// Check the count identities and inequalities over the catalog.
    Verify {
        #[arg(long, default_value = "all")]
        scope: String,
        #[arg(long, value_enum, default_value = "table")]
        out: Out,
        /// Verify entries from a JSON file instead of the built-in catalog.
        #[arg(long, hide = true)]
        catalog: Option<String>,
    },
    /// Ratio of t(1,1) to the number of circuit-cocircuit reversal classes.
    Survey {
        #[arg(long, value_enum, conflicts_with = "scope")]
        family: Option<FamilyArg>,
        #[arg(long, default_value_t = 8, requires = "family")]
        max_n: usize,
        #[arg(long, value_enum)]
        scope: Option<SurveyScope>,
        /// Extra instances (catalog names or files) appended to the survey.
        #[arg(long, value_delimiter = ',')]
        include: Vec<String>,
        #[arg(long, value_enum, default_value = "table")]
        out: SurveyOut,
    },
    /// Built-in instances.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Find two minimal reorientations in the same reversal class.
    Witness {
        instance: String,
        #[arg(long, default_value = "cocircuit")]
        mode: String,
        #[arg(long, default_value = "acyclic")]
        restriction: String,
        #[arg(long)]
        order: Option<String>,
        #[arg(long, value_enum, default_value = "table")]
        out: Out,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    List {
        #[arg(long, value_enum, default_value = "table")]
        out: Out,
    },
}

fn json<T: Serialize>(value: &T) -> Result<String, CliError> {
    serde_json::to_string_pretty(value).map(|s| s + "\n").map_err(|e| CliError::Input(e.to_string()))
}

fn order_for(text: Option<&str>, n: usize) -> Result<GroundOrder, CliError> {
    match text {
        Some(t) => parse_order(t, n),
        None => Ok(GroundOrder::identity(n)),
    }
}

fn set_text(bits: u32) -> String {
    let items: Vec<String> = omrev::signed::elements(bits).map(|e| e.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

#[derive(Serialize)]
struct CatalogRow {
    name: String,
    n: usize,
    rank: usize,
    tags: Vec<Tag>,
    description: String,
}

#[derive(Serialize)]
struct WitnessOutput {
    instance: String,
    mode: Mode,
    restriction: Restriction,
    pair: Option<(u32, u32)>,
}

fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Analyze { instance, order, out, verbose, timing } => {
            let m = load_instance(&instance)?;
            let order = order.as_deref().map(|t| parse_order(t, m.n())).transpose()?;
            let report = analyze(&m, &AnalyzeOptions { order, verbose, timing })?;
            match out {
                Out::Json => json(&report),
                Out::Table => Ok(report.to_table()),
            }
        }
        Command::Verify { scope, out, catalog } => {
            let scope: Scope = scope.parse()?;
            let entries: Vec<CatalogEntry> = match catalog {
                Some(path) => {
                    let text = std::fs::read_to_string(&path).map_err(|e| CliError::Input(format!("{path}: {e}")))?;
                    serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{path}: {e}")))?
                }
                None => catalog_instances(),
            };
            let outcome = verify_entries(&entries, scope)?;
            let text = match out {
                Out::Json => json(&outcome)?,
                Out::Table => outcome.summary(),
            };
            if outcome.passed() {
                Ok(text)
            } else {
                print!("{text}");
                let f = outcome.first_failure().expect("a failed check");
                Err(CliError::Assertion(format!("{} [{}]: {}", f.instance, f.check, f.detail)))
            }
        }
        Command::Survey { family, max_n, scope, include, out } => {
            let family = match (family, scope) {
                (Some(FamilyArg::U2k), None) => Family::U2k { max_n },
                (None, Some(SurveyScope::CatalogNonregular)) => Family::CatalogNonregular,
                (None, None) => Family::U2k { max_n: max_n.min(MAX_U2K) },
                (Some(_), Some(_)) => unreachable!("clap rejects --family with --scope"),
            };
            let report = survey(family, &include)?;
            match out {
                SurveyOut::Json => json(&report),
                SurveyOut::Csv => report.to_csv(),
                SurveyOut::Table => Ok(report.to_table()),
            }
        }
        Command::Catalog { action: CatalogAction::List { out } } => {
            let rows = catalog_instances()
                .into_iter()
                .map(|e| {
                    let m = e.build()?;
                    Ok(CatalogRow { n: m.n(), rank: m.rank(), name: e.name, tags: e.tags, description: e.description })
                })
                .collect::<Result<Vec<_>, CliError>>()?;
            match out {
                Out::Json => json(&rows),
                Out::Table => {
                    let mut text = format!("{:<12} {:>3} {:>5}  {:<40} {}\n", "name", "n", "rank", "tags", "description");
                    for r in rows {
                        let tags: Vec<String> =
                            r.tags.iter().map(|t| serde_json::to_value(t).unwrap().as_str().unwrap().to_string()).collect();
                        text.push_str(&format!(
                            "{:<12} {:>3} {:>5}  {:<40} {}\n",
                            r.name,
                            r.n,
                            r.rank,
                            tags.join(","),
                            r.description
                        ));
                    }
                    Ok(text)
                }
            }
        }
        Command::Witness { instance, mode, restriction, order, out } => {
            let m = load_instance(&instance)?;
            let mode: Mode = mode.parse().map_err(CliError::Input)?;
            let restriction: Restriction = restriction.parse().map_err(CliError::Input)?;
            let order = order_for(order.as_deref(), m.n())?;
            let partition = reversal_classes(&m, mode, restriction)?;
            let pair = first_minimal_pair(&m, &partition, &order);
            let output = WitnessOutput {
                instance: m.name().to_string(),
                mode,
                restriction,
                pair: pair.map(|(a, b)| (a.0, b.0)),
            };
            match out {
                Out::Json => json(&output),
                Out::Table => Ok(match pair {
                    Some((a, b)) => format!(
                        "{}: {} and {} are {mode} minimal and in one class (mode {mode}, restriction {restriction})\n",
                        output.instance,
                        set_text(a.0),
                        set_text(b.0)
                    ),
                    None => format!("{}: no class holds two {mode} minimal reorientations (mode {mode}, restriction {restriction})\n", output.instance),
                }),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{e}");
            e.exit_code()
        }
    }
}
