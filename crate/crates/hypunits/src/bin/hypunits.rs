//! Thin command-line front end over the hypunits library. Verdicts never
//! drive exit codes: 0 = completed, 2 = invalid input, 3 = indeterminate
//! oracle result, 1 = internal error.

use clap::{Parser, Subcommand, ValueEnum};
use hypunits::cayley::catalog::{catalog, catalog_names};
use hypunits::cayley::{parse_json, parse_text, CayleyTable};
use hypunits::classify::{classify_semigroup, crosscheck};
use hypunits::enumerate::{census, enumerate_tables, Dedup};
use hypunits::exactalg::analyze_table;
use hypunits::green::{greens_data, principal_series, structure_scan};
use hypunits::raloop::{analyze_loop, classify_raloop, nontrivial_normalized_units};
use hypunits::verdict::{refute_search, try_algebra_verdict, Hyperbolicity};
use serde::Serialize;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "hypunits",
    about = "Decide the hyperbolic property of rational semigroup and loop algebras"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,
    /// Force a fully deterministic run (the default is already deterministic;
    /// this flag pins it for scripting).
    #[arg(long, global = true)]
    deterministic: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Structured,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum UpTo {
    Iso,
    Equiv,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a table and check the algebraic laws of its declared kind.
    Validate { input: String },
    /// Green's relations, structure scan and principal series.
    Analyze { input: String },
    /// Table-side classification with certificates.
    Classify { input: String },
    /// Exact algebra-side verdict.
    Oracle {
        input: String,
        /// Also report the component decomposition and shape details.
        #[arg(long)]
        shape: bool,
    },
    /// Run both engines and report agreement.
    Crosscheck { input: String },
    /// Search for an explicit Z^2 of units.
    Refute {
        input: String,
        #[arg(long, default_value_t = 2)]
        height: i64,
        #[arg(long, default_value_t = 4)]
        bound: i64,
    },
    /// Loop-side analysis (Moufang, RA-loop, subloop normality).
    Loop {
        input: String,
        /// Emit the loop-side classification verdict as well.
        #[arg(long)]
        classify: bool,
        /// Count nontrivial normalized units at this height (0 = skip).
        #[arg(long, default_value_t = 0)]
        unit_height: i64,
    },
    /// Enumerate small semigroups, optionally crosschecking every structure.
    Enumerate {
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value_t = UpTo::Equiv)]
        up_to: UpTo,
        /// Run the census (both engines on every structure).
        #[arg(long)]
        classify: bool,
        /// Write one .cay file per structure into this directory.
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
    /// Named inputs: `catalog list` or `catalog emit NAME`.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    List,
    Emit { name: String },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

/// Resolve `catalog:NAME` or a file path into a validated table.
fn load(input: &str) -> Result<CayleyTable, String> {
    let raw_table = if let Some(name) = input.strip_prefix("catalog:") {
        return Ok(catalog(name).map_err(|e| e.to_string())?.table);
    } else {
        let raw = std::fs::read_to_string(input)
            .map_err(|e| format!("cannot read {input}: {e}"))?;
        let trimmed = raw.trim_start();
        if trimmed.starts_with('{') {
            parse_json(&raw).map_err(|e| e.to_string())?
        } else {
            parse_text(&raw).map_err(|e| e.to_string())?
        }
    };
    raw_table.validate().map_err(|e| e.to_string())?;
    Ok(raw_table)
}

fn emit<T: Serialize + std::fmt::Debug>(fmt: Format, value: &T) {
    match fmt {
        Format::Structured => println!(
            "{}",
            serde_json::to_string(value).expect("reports serialize")
        ),
        Format::Human => println!("{:#?}", value),
    }
}

fn run(cli: &Cli) -> Result<ExitCode, String> {
    let fmt = cli.format;
    match &cli.command {
        Command::Validate { input } => {
            let t = load(input)?;
            #[derive(Serialize, Debug)]
            struct Validated {
                kind: String,
                order: usize,
                identity: Option<usize>,
                zero: Option<usize>,
            }
            emit(
                fmt,
                &Validated {
                    kind: format!("{:?}", t.kind),
                    order: t.order,
                    identity: t.identity,
                    zero: t.zero,
                },
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Analyze { input } => {
            let t = load(input)?;
            #[derive(Serialize, Debug)]
            struct Analysis {
                scan: hypunits::green::StructureScan,
                green: hypunits::green::GreenData,
                series: hypunits::green::PrincipalSeries,
            }
            emit(
                fmt,
                &Analysis {
                    scan: structure_scan(&t),
                    green: greens_data(&t),
                    series: principal_series(&t),
                },
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Classify { input } => {
            let t = load(input)?;
            emit(fmt, &classify_semigroup(&t));
            Ok(ExitCode::SUCCESS)
        }
        Command::Oracle { input, shape } => {
            let t = load(input)?;
            let verdict = try_algebra_verdict(&t).map_err(|e| e.to_string())?;
            let indeterminate = verdict.hyperbolic == Hyperbolicity::Indeterminate;
            if *shape {
                let report = analyze_table(&t).map_err(|e| e.to_string())?;
                #[derive(Serialize, Debug)]
                struct ShapeOut {
                    verdict: hypunits::verdict::AlgebraVerdict,
                    radical_dim: usize,
                    components: Vec<hypunits::exactalg::ComponentDescriptor>,
                }
                emit(
                    fmt,
                    &ShapeOut {
                        verdict,
                        radical_dim: report.split.radical_dim,
                        components: report.descriptors,
                    },
                );
            } else {
                emit(fmt, &verdict);
            }
            Ok(if indeterminate { ExitCode::from(3) } else { ExitCode::SUCCESS })
        }
        Command::Crosscheck { input } => {
            let t = load(input)?;
            let rec = crosscheck(input, &t);
            let indeterminate = rec.oracle_verdict == Hyperbolicity::Indeterminate;
            emit(fmt, &rec);
            Ok(if indeterminate { ExitCode::from(3) } else { ExitCode::SUCCESS })
        }
        Command::Refute { input, height, bound } => {
            let t = load(input)?;
            let witness = refute_search(&t, *height, *bound).map_err(|e| e.to_string())?;
            emit(fmt, &witness);
            Ok(ExitCode::SUCCESS)
        }
        Command::Loop { input, classify, unit_height } => {
            let t = load(input)?;
            if *classify {
                emit(fmt, &classify_raloop(&t));
            } else {
                let analysis = analyze_loop(&t).map_err(|e| e.to_string())?;
                emit(fmt, &analysis);
            }
            if *unit_height > 0 {
                #[derive(Serialize, Debug)]
                struct UnitScan {
                    height: i64,
                    nontrivial_normalized_units: usize,
                }
                emit(
                    fmt,
                    &UnitScan {
                        height: *unit_height,
                        nontrivial_normalized_units: nontrivial_normalized_units(
                            &t,
                            *unit_height,
                        ),
                    },
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate { order, up_to, classify, out } => {
            let dedup = match up_to {
                UpTo::Iso => Dedup::Iso,
                UpTo::Equiv => Dedup::Equivalence,
            };
            let tables = enumerate_tables(*order, dedup, false).map_err(|e| e.to_string())?;
            if let Some(dir) = out {
                std::fs::create_dir_all(dir).map_err(|e| e.to_string())?;
                for (i, t) in tables.iter().enumerate() {
                    let path = dir.join(format!("order{}_{:04}.cay", order, i));
                    std::fs::write(&path, t.to_text()).map_err(|e| e.to_string())?;
                }
            }
            if *classify {
                let outcome = census(*order).map_err(|e| e.to_string())?;
                emit(fmt, &outcome.row);
                for rec in &outcome.ledger {
                    emit(fmt, rec);
                }
                let indeterminate = outcome
                    .ledger
                    .iter()
                    .any(|r| r.oracle_verdict == Hyperbolicity::Indeterminate);
                return Ok(if indeterminate {
                    ExitCode::from(3)
                } else {
                    ExitCode::SUCCESS
                });
            }
            #[derive(Serialize, Debug)]
            struct Enumerated {
                order: usize,
                count: usize,
            }
            emit(fmt, &Enumerated { order: *order, count: tables.len() });
            Ok(ExitCode::SUCCESS)
        }
        Command::Catalog { action } => {
            match action {
                CatalogAction::List => {
                    for name in catalog_names() {
                        println!("{name}");
                    }
                }
                CatalogAction::Emit { name } => {
                    let entry = catalog(name).map_err(|e| e.to_string())?;
                    print!("{}", entry.table.to_text());
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}
