//! Command-line front end for the conjugate-equation toolkit: system
//! validation, solution evaluation and rendering, invariant measures,
//! Hölder thresholds, measure dimensions, exponent probes, stability
//! experiments, and the system catalog.
//!
//! Exit codes are the machine contract: 0 success/compatible,
//! 1 parameter or runtime error, 2 incompatible, 3 undecided.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use derham_core::config;
use derham_core::conjugate::{CompatStatus, ConjugateSystem};
use derham_core::csv::{fmt_f64, write_grid, write_points, write_series};
use derham_core::measure::{
    chaos_game, fan_lau_dimension, pushforward_check, ProbabilityVector,
};
use derham_core::point::Point;
use derham_core::regularity::{holder_thresholds, local_exponent_probe};
use derham_core::stability::{
    deformation_experiment, discrete_approximation_experiment, uniform_vs_hausdorff_check,
};
use derham_core::zoo;

#[derive(Parser)]
#[command(
    name = "derham",
    version,
    about = "Numerical toolkit for conjugate equations between iterated function systems"
)]
struct Cli {
    /// Cap the number of worker threads used by parallel sections.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SystemArgs {
    /// Catalog reference `name[:param,...]`, e.g. `lebesgue:0.5`.
    #[arg(long, conflicts_with = "config")]
    system: Option<String>,
    /// JSON system configuration file.
    #[arg(long)]
    config: Option<PathBuf>,
}

impl SystemArgs {
    fn build(&self) -> Result<ConjugateSystem> {
        match (&self.system, &self.config) {
            (Some(reference), None) => Ok(zoo::parse_reference(reference)?),
            (None, Some(path)) => Ok(config::load_system(path)?),
            _ => Err(anyhow!("exactly one of --system or --config is required")),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Side {
    X,
    Y,
}

#[derive(Clone, Copy, ValueEnum)]
enum StabilityCase {
    Discrete,
    Deform,
    Uniform,
}

#[derive(Subcommand)]
enum Command {
    /// Validate compatibility; exit 0/2/3 for compatible/incompatible/undecided.
    Check {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Evaluate the solution at a point; prints `y err_bound`.
    Eval {
        #[command(flatten)]
        sys: SystemArgs,
        /// Point: `x` for interval systems, `x1,x2` for the gasket.
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Solution values on all depth-`depth` word endpoints as CSV.
    Render {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long, default_value_t = 12)]
        depth: usize,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Chaos-game sample of an invariant measure as CSV.
    Measure {
        #[command(flatten)]
        sys: SystemArgs,
        /// Which side's IFS to sample.
        #[arg(long, value_enum, default_value_t = Side::X)]
        side: Side,
        /// Probability weights `p0,p1,...`; uniform when omitted.
        #[arg(long)]
        p: Option<String>,
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Burn-in; defaults to 100, or 1000 for parabolic systems.
        #[arg(long)]
        burn_in: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Hölder threshold exponents over the invariant measures.
    Holder {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long)]
        p: Option<String>,
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Dimension of the distribution-function measure via the transfer density.
    Dim {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long, default_value_t = 4096)]
        grid: usize,
        #[arg(long, default_value_t = 200)]
        iters: usize,
    },
    /// Local exponent probe along a seeded word stream, CSV `n,logF,logG,ratio`.
    Probe {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long)]
        p: Option<String>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 30)]
        depth: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Kolmogorov–Smirnov check of the pushforward identity.
    Pushforward {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long)]
        p: Option<String>,
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Stability experiments; CSV `n,distance` (or a labeled pair for `uniform`).
    Stability {
        #[arg(long, value_enum)]
        case: StabilityCase,
        /// System for `discrete` (its X side) and `uniform`.
        #[arg(long)]
        system: Option<String>,
        /// Second system for `uniform`.
        #[arg(long)]
        system_b: Option<String>,
        /// Attractor depths for `discrete`, e.g. `1,2,3,4,5,6`.
        #[arg(long, default_value = "1,2,3,4,5,6")]
        depths: String,
        /// Deformation indices for `deform`.
        #[arg(long, default_value = "2,4,8,16,32")]
        n: String,
        #[arg(long, default_value_t = 10)]
        depth: usize,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List the built-in systems; optionally export their configurations.
    Catalog {
        /// Write each entry as `<name>.json` into this directory.
        #[arg(long)]
        export: Option<PathBuf>,
    },
}

fn parse_p(arg: &Option<String>, n: usize) -> Result<ProbabilityVector> {
    match arg {
        None => Ok(ProbabilityVector::uniform(n)),
        Some(text) => {
            let weights: std::result::Result<Vec<f64>, _> =
                text.split(',').map(str::trim).map(str::parse).collect();
            Ok(ProbabilityVector::new(
                weights.with_context(|| format!("bad probability list '{text}'"))?,
            )?)
        }
    }
}

fn parse_usize_list(text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(str::trim)
        .map(|t| t.parse().with_context(|| format!("bad integer '{t}'")))
        .collect()
}

fn parse_point(text: &str) -> Result<Point> {
    let parts: std::result::Result<Vec<f64>, _> =
        text.split(',').map(str::trim).map(str::parse).collect();
    let parts = parts.with_context(|| format!("bad point '{text}'"))?;
    match parts.as_slice() {
        [x] => Ok(Point::scalar(*x)),
        [x, y] => Ok(Point::xy(*x, *y)),
        _ => Err(anyhow!("a point has one or two coordinates")),
    }
}

fn sink(out: &Option<PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match out {
        Some(path) => Box::new(fs::File::create(path)?),
        None => Box::new(std::io::stdout().lock()),
    })
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Check { sys, tol } => {
            let system = sys.build()?;
            let report = system.validate(tol);
            println!("system: {}", system.name());
            println!("status: {:?}", report.status);
            for check in &report.checks_run {
                println!("check: {check}");
            }
            for w in &report.witnesses {
                println!(
                    "witness: at {:?} forced values {} vs {} (discrepancy {})",
                    w.location.coords(),
                    fmt_f64(w.left),
                    fmt_f64(w.right),
                    fmt_f64(w.discrepancy)
                );
            }
            Ok(match report.status {
                CompatStatus::Compatible => 0,
                CompatStatus::Incompatible => 2,
                CompatStatus::Undecided => 3,
            })
        }
        Command::Eval { sys, x, tol } => {
            let system = sys.build()?;
            let (y, err) = system.evaluate(parse_point(&x)?, tol)?;
            println!("{} {}", fmt_f64(y), fmt_f64(err));
            Ok(0)
        }
        Command::Render {
            sys,
            depth,
            tol,
            out,
        } => {
            let system = sys.build()?;
            let rows = system.evaluate_grid(depth, tol)?;
            write_grid(&mut sink(&out)?, &rows)?;
            Ok(0)
        }
        Command::Measure {
            sys,
            side,
            p,
            samples,
            seed,
            burn_in,
            out,
        } => {
            let system = sys.build()?;
            let ifs = match side {
                Side::X => system.x_side(),
                Side::Y => system.y_side(),
            };
            let p = parse_p(&p, ifs.len())?;
            let burn = burn_in.unwrap_or_else(|| system.recommended_burn_in());
            let m = chaos_game(ifs, &p, samples, burn, seed)?;
            write_points(&mut sink(&out)?, &m.points)?;
            Ok(0)
        }
        Command::Holder {
            sys,
            p,
            samples,
            seed,
        } => {
            let system = sys.build()?;
            let p = parse_p(&p, system.x_side().len())?;
            let t = holder_thresholds(&system, &p, samples, seed)?;
            println!("alpha_star {}", fmt_f64(t.alpha_star));
            println!("beta_star {}", fmt_f64(t.beta_star));
            println!("stderr_alpha {}", fmt_f64(t.stderr_alpha));
            println!("stderr_beta {}", fmt_f64(t.stderr_beta));
            Ok(0)
        }
        Command::Dim { sys, grid, iters } => {
            let system = sys.build()?;
            println!("{}", fmt_f64(fan_lau_dimension(&system, grid, iters)?));
            Ok(0)
        }
        Command::Probe {
            sys,
            p,
            seed,
            depth,
            out,
        } => {
            let system = sys.build()?;
            let p = parse_p(&p, system.x_side().len())?;
            let trace = local_exponent_probe(&system, &p, seed, depth)?;
            let mut w = sink(&out)?;
            writeln!(w, "n,logF,logG,ratio")?;
            for k in 0..trace.depths.len() {
                writeln!(
                    w,
                    "{},{},{},{}",
                    trace.depths[k],
                    fmt_f64(trace.log_f[k]),
                    fmt_f64(trace.log_g[k]),
                    fmt_f64(trace.ratios[k])
                )?;
            }
            Ok(0)
        }
        Command::Pushforward {
            sys,
            p,
            samples,
            seed,
        } => {
            let system = sys.build()?;
            let p = parse_p(&p, system.x_side().len())?;
            println!(
                "ks_statistic {}",
                fmt_f64(pushforward_check(&system, &p, samples, seed)?)
            );
            Ok(0)
        }
        Command::Stability {
            case,
            system,
            system_b,
            depths,
            n,
            depth,
            tol,
            out,
        } => {
            match case {
                StabilityCase::Discrete => {
                    let reference = system
                        .ok_or_else(|| anyhow!("--system is required for the discrete case"))?;
                    let sys = zoo::parse_reference(&reference)?;
                    let rows =
                        discrete_approximation_experiment(sys.x_side(), &parse_usize_list(&depths)?)?;
                    let series: Vec<(f64, f64)> =
                        rows.iter().map(|&(n, d)| (n as f64, d)).collect();
                    write_series(&mut sink(&out)?, "n,distance", &series)?;
                }
                StabilityCase::Deform => {
                    let rows = deformation_experiment(&parse_usize_list(&n)?, depth, tol)?;
                    let series: Vec<(f64, f64)> =
                        rows.iter().map(|&(n, d)| (n as f64, d)).collect();
                    write_series(&mut sink(&out)?, "n,distance", &series)?;
                }
                StabilityCase::Uniform => {
                    let ra = system
                        .ok_or_else(|| anyhow!("--system is required for the uniform case"))?;
                    let rb = system_b
                        .ok_or_else(|| anyhow!("--system-b is required for the uniform case"))?;
                    let a = zoo::parse_reference(&ra)?;
                    let b = zoo::parse_reference(&rb)?;
                    let (sup, haus) = uniform_vs_hausdorff_check(&a, &b, depth)?;
                    let mut w = sink(&out)?;
                    writeln!(w, "sup_diff,haus_diff")?;
                    writeln!(w, "{},{}", fmt_f64(sup), fmt_f64(haus))?;
                }
            }
            Ok(0)
        }
        Command::Catalog { export } => {
            for entry in zoo::catalog() {
                println!(
                    "{:<40} {:<14} {}",
                    entry.reference(),
                    format!("{:?}", entry.expected_validation),
                    entry.notes
                );
                if let Some(dir) = &export {
                    fs::create_dir_all(dir)?;
                    let file = dir.join(format!(
                        "{}.json",
                        entry.reference().replace([':', ','], "_")
                    ));
                    fs::write(&file, config::system_to_json(&entry.build()?)?)?;
                }
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
        {
            eprintln!("warning: could not set thread count: {e}");
        }
    }
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
