//! `mapbij` — rooted planar maps, their orientations and structures, and
//! the bijections between them, on the command line.
//!
//! Exit codes: 0 success, 2 validation or verification failure, 64 usage
//! error.

use clap::{Parser, Subcommand, ValueEnum};
use mapbij::bijections as bij;
use mapbij::bipolar::{minimal_bipolar, BipolarOrientation};
use mapbij::codec::{self, Record};
use mapbij::count::{count_formula, CountFamily};
use mapbij::decompose as dec;
use mapbij::enumerate::{enumerate_family, enumerate_maps, enumerate_simple_maps, Family};
use mapbij::transversal::{minimal_transversal, TransversalStructure};
use mapbij::verify::{self, Status};
use std::io::{Read, Write};
use std::process::ExitCode;

const EXIT_OK: u8 = 0;
const EXIT_CHECK: u8 = 2;
const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(name = "mapbij", version, about, disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    All,
    Simple,
    Loopless,
    Nonseparable,
    Triangulation,
    QuadTriangulation,
    Irreducible,
}

#[derive(Clone, Copy, ValueEnum)]
enum BijectionArg {
    Phi,
    Psi,
    Phiprime,
    Psiprime,
    F1,
    F1inv,
    F1tilde,
    F2,
    F2inv,
}

#[derive(Clone, Copy, ValueEnum)]
enum StructureArg {
    Bipolar,
    Transversal,
}

#[derive(Clone, Copy, ValueEnum)]
enum DecomposeKind {
    Block,
    Tri,
}

#[derive(Clone, Copy, ValueEnum)]
enum CountArg {
    ThetaNi,
    ThetaN,
    LambdaNi,
    LambdaN,
    #[value(name = "a-n", alias = "an")]
    AN,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Exhaustively enumerate a map family at one size.
    Enumerate {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Edge count for all/simple/loopless/nonseparable; `||T||` for the
        /// vertex-counted families.
        #[arg(long)]
        size: u32,
        /// Print only the number of maps.
        #[arg(long)]
        count_only: bool,
        /// Output path (default: stdout).
        #[arg(long)]
        out: Option<String>,
    },
    /// Apply one of the bijections to a decorated record.
    Apply {
        #[arg(long, value_enum)]
        bijection: BijectionArg,
        /// Input path (default: stdin).
        #[arg(long = "in")]
        input: Option<String>,
        #[arg(long)]
        out: Option<String>,
    },
    /// Compute the minimal bipolar orientation or transversal structure.
    Minimal {
        #[arg(long, value_enum)]
        structure: StructureArg,
        #[arg(long = "in")]
        input: Option<String>,
        #[arg(long)]
        out: Option<String>,
    },
    /// Decompose into core and components; prints `tuple <arity>` followed
    /// by the records.
    Decompose {
        #[arg(long, value_enum)]
        kind: DecomposeKind,
        #[arg(long = "in")]
        input: Option<String>,
    },
    /// Evaluate an exact counting formula.
    Count {
        #[arg(long, value_enum)]
        family: CountArg,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        i: Option<u64>,
    },
    /// Validate a record and report which structure it is.
    Check {
        #[arg(long = "in")]
        input: Option<String>,
    },
    /// Run the verification suite and print a pass/fail table.
    Verify {
        /// Largest map size enumerated (criteria cap their own ranges).
        #[arg(long, default_value_t = 5)]
        max_size: u32,
        /// Worker threads for the criteria (output is identical for any
        /// value).
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
}

fn read_input(path: &Option<String>) -> std::io::Result<String> {
    match path.as_deref() {
        None | Some("-") => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf)?;
            Ok(buf)
        }
        Some(p) => std::fs::read_to_string(p),
    }
}

fn write_output(path: &Option<String>, text: &str) -> std::io::Result<()> {
    match path.as_deref() {
        None | Some("-") => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
        Some(p) => std::fs::write(p, text),
    }
}

fn fail(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("mapbij: {msg}");
    ExitCode::from(EXIT_CHECK)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help/version requests are not usage errors
            use clap::error::ErrorKind::*;
            let _ = e.print();
            return match e.kind() {
                DisplayHelp | DisplayVersion => ExitCode::from(EXIT_OK),
                _ => ExitCode::from(EXIT_USAGE),
            };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(msg) => fail(msg),
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Enumerate {
            family,
            size,
            count_only,
            out,
        } => {
            let maps = match family {
                FamilyArg::All => enumerate_maps(size),
                FamilyArg::Simple => enumerate_simple_maps(size),
                FamilyArg::Loopless => enumerate_family(Family::Loopless, size),
                FamilyArg::Nonseparable => enumerate_family(Family::Nonseparable, size),
                FamilyArg::Triangulation => enumerate_family(Family::Triangulation, size),
                FamilyArg::QuadTriangulation => {
                    enumerate_family(Family::QuadTriangulation, size)
                }
                FamilyArg::Irreducible => enumerate_family(Family::Irreducible, size),
            }
            .map_err(|e| e.to_string())?;
            let text = if count_only {
                format!("{}\n", maps.len())
            } else {
                let records: Vec<Record> = maps.into_iter().map(Record::Map).collect();
                codec::encode_stream(&records)
            };
            write_output(&out, &text).map_err(|e| e.to_string())?;
            Ok(ExitCode::from(EXIT_OK))
        }
        Command::Apply {
            bijection,
            input,
            out,
        } => {
            let text = read_input(&input).map_err(|e| e.to_string())?;
            let record = codec::decode(&text).map_err(|e| e.to_string())?;
            let result = apply_bijection(bijection, record)?;
            write_output(&out, &codec::encode(&result)).map_err(|e| e.to_string())?;
            Ok(ExitCode::from(EXIT_OK))
        }
        Command::Minimal {
            structure,
            input,
            out,
        } => {
            let text = read_input(&input).map_err(|e| e.to_string())?;
            let record = codec::decode(&text).map_err(|e| e.to_string())?;
            let Record::Map(map) = record else {
                return Err(format!("expected a rooted map, found a {}", record.kind()));
            };
            let result = match structure {
                StructureArg::Bipolar => {
                    Record::Bipolar(minimal_bipolar(&map).map_err(|e| e.to_string())?)
                }
                StructureArg::Transversal => {
                    Record::Transversal(minimal_transversal(&map).map_err(|e| e.to_string())?)
                }
            };
            write_output(&out, &codec::encode(&result)).map_err(|e| e.to_string())?;
            Ok(ExitCode::from(EXIT_OK))
        }
        Command::Decompose { kind, input } => {
            let text = read_input(&input).map_err(|e| e.to_string())?;
            let record = codec::decode(&text).map_err(|e| e.to_string())?;
            let Record::Map(map) = record else {
                return Err(format!("expected a rooted map, found a {}", record.kind()));
            };
            let (core, components) = match kind {
                DecomposeKind::Block => {
                    let d = dec::block_decompose(&map).map_err(|e| e.to_string())?;
                    (d.core, d.components)
                }
                DecomposeKind::Tri => {
                    let d = dec::tri_decompose(&map).map_err(|e| e.to_string())?;
                    (d.core, d.components)
                }
            };
            let mut records = vec![Record::Map(core)];
            records.extend(components.into_iter().map(Record::Map));
            let mut text = format!("tuple {}\n\n", records.len());
            text.push_str(&codec::encode_stream(&records));
            write_output(&None, &text).map_err(|e| e.to_string())?;
            Ok(ExitCode::from(EXIT_OK))
        }
        Command::Count { family, n, i } => {
            let family = match family {
                CountArg::ThetaNi => CountFamily::ThetaNI,
                CountArg::ThetaN => CountFamily::ThetaN,
                CountArg::LambdaNi => CountFamily::LambdaNI,
                CountArg::LambdaN => CountFamily::LambdaN,
                CountArg::AN => CountFamily::AN,
            };
            let value = count_formula(family, n, i).map_err(|e| e.to_string())?;
            println!("{value}");
            Ok(ExitCode::from(EXIT_OK))
        }
        Command::Check { input } => {
            let text = read_input(&input).map_err(|e| e.to_string())?;
            match codec::decode(&text) {
                Ok(record) => {
                    let extra = match &record {
                        Record::Map(m) => {
                            let f = m.classify();
                            let mut tags = vec![];
                            for (on, tag) in [
                                (f.loopless, "loopless"),
                                (f.nonseparable, "non-separable"),
                                (f.triangulation, "triangulation"),
                                (f.quad_triangulation, "triangulation of the 4-gon"),
                                (f.irreducible, "irreducible"),
                            ] {
                                if on {
                                    tags.push(tag);
                                }
                            }
                            if tags.is_empty() {
                                String::new()
                            } else {
                                format!(" ({})", tags.join(", "))
                            }
                        }
                        Record::Bipolar(o) => {
                            if o.is_bipolar_poset() {
                                if o.is_n_avoiding() {
                                    " (N-avoiding plane bipolar poset)".into()
                                } else {
                                    " (plane bipolar poset)".into()
                                }
                            } else {
                                String::new()
                            }
                        }
                        Record::Transversal(x) => match x.is_n_avoiding() {
                            Ok(true) => " (N-avoiding)".into(),
                            _ => String::new(),
                        },
                    };
                    println!("valid {}{}", record.kind(), extra);
                    Ok(ExitCode::from(EXIT_OK))
                }
                Err(e) => {
                    println!("invalid: {e}");
                    Ok(ExitCode::from(EXIT_CHECK))
                }
            }
        }
        Command::Verify {
            max_size,
            jobs,
            format,
        } => {
            let reports = verify::run_parallel(max_size, jobs);
            let text = match format {
                Format::Table => verify::render_table(&reports),
                Format::Json => render_json(&reports),
            };
            print!("{text}");
            let ok = reports.iter().all(|r| r.status != Status::Fail);
            Ok(ExitCode::from(if ok { EXIT_OK } else { EXIT_CHECK }))
        }
    }
}

fn apply_bijection(which: BijectionArg, record: Record) -> Result<Record, String> {
    let want_orientation = |r: Record| -> Result<BipolarOrientation, String> {
        match r {
            Record::Bipolar(o) => Ok(o),
            other => Err(format!(
                "expected a plane bipolar orientation, found a {}",
                other.kind()
            )),
        }
    };
    let want_transversal = |r: Record| -> Result<TransversalStructure, String> {
        match r {
            Record::Transversal(x) => Ok(x),
            other => Err(format!(
                "expected a transversal structure, found a {}",
                other.kind()
            )),
        }
    };
    let want_map = |r: Record| -> Result<mapbij::RootedMap, String> {
        match r {
            Record::Map(m) => Ok(m),
            other => Err(format!("expected a rooted map, found a {}", other.kind())),
        }
    };
    let e = |err: bij::BijectionError| err.to_string();
    Ok(match which {
        BijectionArg::Phi => Record::Bipolar(bij::phi(&want_orientation(record)?).map_err(e)?),
        BijectionArg::Psi => Record::Bipolar(bij::psi(&want_orientation(record)?).map_err(e)?),
        BijectionArg::Phiprime => {
            Record::Transversal(bij::phi_prime(&want_orientation(record)?).map_err(e)?)
        }
        BijectionArg::Psiprime => {
            Record::Bipolar(bij::psi_prime(&want_transversal(record)?).map_err(e)?)
        }
        BijectionArg::F1 => Record::Map(bij::f1(&want_map(record)?).map_err(e)?),
        BijectionArg::F1inv => Record::Map(bij::f1_inv(&want_map(record)?).map_err(e)?),
        BijectionArg::F1tilde => Record::Map(bij::f1_tilde(&want_map(record)?).map_err(e)?),
        BijectionArg::F2 => {
            Record::Map(dec::f2(&want_map(record)?).map_err(|err| err.to_string())?)
        }
        BijectionArg::F2inv => {
            Record::Map(dec::f2_inv(&want_map(record)?).map_err(|err| err.to_string())?)
        }
    })
}

fn render_json(reports: &[verify::CriterionReport]) -> String {
    fn esc(s: &str) -> String {
        s.replace('\\', "\\\\").replace('"', "\\\"")
    }
    let rows: Vec<String> = reports
        .iter()
        .map(|r| {
            format!(
                "  {{\"id\": {}, \"name\": \"{}\", \"status\": \"{}\", \"observed\": \"{}\", \"expected\": \"{}\"}}",
                r.id,
                esc(r.name),
                match r.status {
                    Status::Pass => "pass",
                    Status::Fail => "fail",
                    Status::Skipped => "skipped",
                },
                esc(&r.observed),
                esc(&r.expected)
            )
        })
        .collect();
    format!("[\n{}\n]\n", rows.join(",\n"))
}
