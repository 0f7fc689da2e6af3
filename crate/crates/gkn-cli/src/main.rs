//! `gkn` — exact verdicts on geometric k-normality of nodal and cuspidal
//! curves on surfaces, with a rational interpolation oracle for the plane.
//!
//! Exit codes: 0 = success (a verdict was produced), 1 = input error,
//! 2 = internal invariant violation (never expected).

mod examples;
mod input;
mod render;

use std::panic::AssertUnwindSafe;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use num_traits::Signed;

use gkn_core::{criteria, formats, oracle};

/// Seed used when neither `--seed` nor `GKN_SEED` is given.
const DEFAULT_SEED: u64 = 1729;

type CliResult<T> = Result<T, Box<dyn std::error::Error>>;

#[derive(Parser)]
#[command(
    name = "gkn",
    version,
    about = "Exact sufficiency criteria for geometric k-normality of nodal curves on surfaces",
    long_about = None,
    subcommand_required = true,
    arg_required_else_help = true
)]
struct Cli {
    /// Emit one machine-readable JSON object instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Write the resolved surface spec to this path (round-trips exactly).
    #[arg(long, global = true, value_name = "PATH")]
    dump_surface: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SurfaceArgs {
    /// Builtin shorthand (`p2`, `quadric`, `ci:r=3,deg=6`), inline JSON, or
    /// a path to a surface spec file.
    #[arg(long)]
    surface: String,

    /// Divisor class: `nH` shorthand, comma-separated coordinates, or
    /// `{"coords":[...]}`.
    #[arg(long)]
    divisor: String,
}

#[derive(Subcommand)]
enum Command {
    /// Intersection numbers and the adjunction genus of a divisor class.
    Invariants {
        #[command(flatten)]
        surface: SurfaceArgs,
    },
    /// Geometric k-normality criteria.
    Gkn {
        #[command(subcommand)]
        command: GknCommand,
    },
    /// Brill–Noether number and the obstruction to geometric 2-normality.
    Bn {
        #[command(subcommand)]
        command: BnCommand,
    },
    /// Severi-variety regularity and the plane Severi bound.
    Severi {
        #[command(subcommand)]
        command: SeveriCommand,
    },
    /// Castelnuovo's maximal genus of a space curve.
    Castelnuovo {
        /// Degree of the curve.
        #[arg(long, value_parser = parse_positive)]
        degree: BigInt,
        /// Dimension of the ambient projective space.
        #[arg(long, value_parser = parse_positive)]
        ambient: BigInt,
    },
    /// Exact-rank oracle for plane point conditions.
    Oracle {
        #[command(subcommand)]
        command: OracleCommand,
    },
    /// Run the built-in worked examples against stored expected values.
    PaperExamples,
}

#[derive(Subcommand)]
enum GknCommand {
    /// Full sufficiency verdict for a curve with delta nodes and cusps.
    Check {
        #[command(flatten)]
        surface: SurfaceArgs,
        #[arg(long, value_parser = parse_positive)]
        k: BigInt,
        #[arg(long, value_parser = parse_nonnegative)]
        delta: BigInt,
    },
    /// The exact node-count bound f = (t+sqrt(s))/8.
    Bound {
        #[command(flatten)]
        surface: SurfaceArgs,
        #[arg(long, value_parser = parse_positive)]
        k: BigInt,
    },
    /// Specialized bound n(n-2k)deg(S)/4 for complete intersections.
    Ci {
        #[arg(long, value_parser = parse_positive)]
        n: BigInt,
        #[arg(long, value_parser = parse_positive)]
        k: BigInt,
        #[arg(long, value_parser = parse_positive)]
        deg: BigInt,
    },
    /// The instability quadratic F(delta) and its root interval.
    Quadratic {
        #[command(flatten)]
        surface: SurfaceArgs,
        #[arg(long, value_parser = parse_positive)]
        k: BigInt,
    },
}

#[derive(Subcommand)]
enum BnCommand {
    /// rho(g, r, d) = g - (r+1)(r - d + g).
    Rho {
        #[arg(long, value_parser = parse_nonnegative)]
        g: BigInt,
        #[arg(long, value_parser = parse_positive)]
        r: BigInt,
        #[arg(long, value_parser = parse_positive)]
        d: BigInt,
    },
    /// Obstruction to geometric 2-normality via rho > 0.
    Obstruct {
        #[command(flatten)]
        surface: SurfaceArgs,
        #[arg(long, value_parser = parse_nonnegative)]
        delta: BigInt,
    },
}

#[derive(Subcommand)]
enum SeveriCommand {
    /// Regular-point guarantee on surfaces with K_S a positive multiple of H.
    Regular {
        #[command(flatten)]
        surface: SurfaceArgs,
        #[arg(long, value_parser = parse_nonnegative)]
        delta: BigInt,
    },
    /// The plane Severi node bound for k = 1, 2, 3.
    PlaneBound {
        #[arg(long, value_parser = parse_positive)]
        n: BigInt,
        #[arg(long)]
        k: u32,
    },
    /// Statistical oracle check of the plane Severi bound.
    Verify {
        #[arg(long, value_parser = parse_positive)]
        n: BigInt,
        #[arg(long)]
        k: u32,
        #[arg(long, default_value_t = 20)]
        trials: u32,
        #[arg(long, env = "GKN_SEED", default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Exact rank of the evaluation/jet matrix of a point scheme.
    Rank {
        /// Point-list JSON file.
        #[arg(long, conflicts_with_all = ["random", "degree", "mult", "coord_bound"])]
        file: Option<PathBuf>,
        /// Number of random points to place instead of reading a file.
        #[arg(long, requires = "degree")]
        random: Option<usize>,
        /// Degree of the target system for random points.
        #[arg(long)]
        degree: Option<u32>,
        /// Multiplicity demand at each random point.
        #[arg(long, default_value_t = 1)]
        mult: u32,
        /// Coordinates are sampled uniformly from [-B, B].
        #[arg(long = "coord-bound", default_value_t = oracle::DEFAULT_COORDINATE_BOUND)]
        coord_bound: i64,
        #[arg(long, env = "GKN_SEED", default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

fn parse_positive(text: &str) -> Result<BigInt, String> {
    let value = BigInt::from_str(text).map_err(|e| e.to_string())?;
    if value.is_positive() {
        Ok(value)
    } else {
        Err(format!("must be a positive integer, got {value}"))
    }
}

fn parse_nonnegative(text: &str) -> Result<BigInt, String> {
    let value = BigInt::from_str(text).map_err(|e| e.to_string())?;
    if value.is_negative() {
        Err(format!("must be nonnegative, got {value}"))
    } else {
        Ok(value)
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // Help and version displays are successes, not input errors.
            let code = if err.use_stderr() { 1 } else { 0 };
            let _ = err.print();
            std::process::exit(code);
        }
    };
    let code = match std::panic::catch_unwind(AssertUnwindSafe(|| run(cli))) {
        Ok(Ok(code)) => code,
        Ok(Err(err)) => {
            eprintln!("error: {err}");
            1
        }
        Err(_) => {
            eprintln!("error: internal invariant violation");
            2
        }
    };
    std::process::exit(code);
}

fn resolve_surface(
    args: &SurfaceArgs,
    dump_to: &Option<PathBuf>,
) -> CliResult<(gkn_core::SurfaceModel, gkn_core::DivisorClass)> {
    let surface = input::parse_surface_arg(&args.surface)?;
    if let Some(path) = dump_to {
        let text = serde_json::to_string_pretty(&formats::dump_surface(&surface))?;
        std::fs::write(path, text)?;
    }
    let divisor = formats::parse_divisor(&args.divisor, &surface)?;
    Ok((surface, divisor))
}

fn run(cli: Cli) -> CliResult<i32> {
    let json = cli.json;
    match cli.command {
        Command::Invariants { surface } => {
            let (model, divisor) = resolve_surface(&surface, &cli.dump_surface)?;
            render::invariants(&model, &divisor, json)?;
        }
        Command::Gkn { command } => match command {
            GknCommand::Check { surface, k, delta } => {
                let (model, divisor) = resolve_surface(&surface, &cli.dump_surface)?;
                let verdict = criteria::gkn_sufficient(&model, &divisor, &k, &delta)?;
                render::gkn_verdict("gkn check", &verdict, Some(&delta), json);
            }
            GknCommand::Bound { surface, k } => {
                let (model, divisor) = resolve_surface(&surface, &cli.dump_surface)?;
                let report = criteria::delta_bound(&model, &divisor, &k)?;
                render::bound_report(&report, json);
            }
            GknCommand::Ci { n, k, deg } => {
                let bound = criteria::ci_bound(&n, &k, &deg)?;
                render::ci_bound(&bound, json);
            }
            GknCommand::Quadratic { surface, k } => {
                let (model, divisor) = resolve_surface(&surface, &cli.dump_surface)?;
                let quadratic = criteria::instability_quadratic(&model, &divisor, &k)?;
                render::quadratic(&quadratic, json);
            }
        },
        Command::Bn { command } => match command {
            BnCommand::Rho { g, r, d } => {
                let rho = criteria::brill_noether_rho(&g, &r, &d)?;
                render::rho(&g, &r, &d, &rho, json);
            }
            BnCommand::Obstruct { surface, delta } => {
                let (model, divisor) = resolve_surface(&surface, &cli.dump_surface)?;
                let verdict = criteria::obstruction_2normal(&model, &divisor, &delta)?;
                render::obstruction(&verdict, json);
            }
        },
        Command::Severi { command } => match command {
            SeveriCommand::Regular { surface, delta } => {
                let (model, divisor) = resolve_surface(&surface, &cli.dump_surface)?;
                let report = criteria::severi_regularity_sufficient(&model, &divisor, &delta)?;
                render::severi_regularity(&report, &delta, json);
            }
            SeveriCommand::PlaneBound { n, k } => {
                let bound = criteria::plane_severi_bound(&n, k)?;
                render::plane_severi_bound(&bound, json);
            }
            SeveriCommand::Verify { n, k, trials, seed } => {
                let summary = oracle::verify_plane_severi(&n, k, trials, seed)?;
                render::severi_verify(&summary, json);
            }
        },
        Command::Castelnuovo { degree, ambient } => {
            let genus = criteria::castelnuovo_max_genus(&degree, &ambient)?;
            render::castelnuovo(&degree, &ambient, &genus, json);
        }
        Command::Oracle { command } => match command {
            OracleCommand::Rank {
                file,
                random,
                degree,
                mult,
                coord_bound,
                seed,
            } => {
                let (scheme, source) = match (file, random) {
                    (Some(path), None) => {
                        let text = std::fs::read_to_string(&path)?;
                        let scheme = formats::parse_point_list(&text)?;
                        (scheme, render::RankSource::File { path })
                    }
                    (None, Some(count)) => {
                        let degree = degree.expect("clap enforces --degree with --random");
                        let scheme =
                            oracle::random_configuration(degree, count, mult, coord_bound, seed)?;
                        let source = render::RankSource::Random {
                            count,
                            mult,
                            coord_bound,
                            seed,
                            generator: oracle::GENERATOR_ID,
                        };
                        (scheme, source)
                    }
                    _ => {
                        return Err("oracle rank needs exactly one of --file or --random".into());
                    }
                };
                let report = oracle::independent_conditions(&scheme);
                render::rank_report(&scheme, &report, &source, json);
            }
        },
        Command::PaperExamples => {
            return examples::run(json);
        }
    }
    Ok(0)
}
