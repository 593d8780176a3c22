//! `pushforge`: build explicit ReLU/Step generative networks, measure
//! transport distances exactly, sweep the closed-form bounds, and run the
//! acceptance suite. All randomness is counter-based from `--seed`
//! (default fixed), so every output is reproducible from config + seed.

mod config;
mod runs;
mod svg;

use std::path::PathBuf;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "pushforge",
    about = "Explicit generative ReLU networks with verified Wasserstein bounds",
    version
)]
struct Cli {
    /// TOML experiment config overriding sweep grids and tolerances
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// RNG seed for all sampled quantities (fixed default for reproducibility)
    #[arg(long, global = true, default_value_t = pushforge_verify::DEFAULT_SEED)]
    seed: u64,
    /// Output directory (artifacts are write-once; reruns need a fresh dir)
    #[arg(long, global = true, default_value = "out")]
    out: PathBuf,
    /// Worker threads for sweep grid points
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a network and write it with its accuracy certificate
    Build(BuildArgs),
    /// Evaluate a stored network at one input point
    Eval(EvalArgs),
    /// Enumerate the linear regions of a stored network
    Regions(RegionsArgs),
    /// Exact pushforward CDF of a scalar network under U[lo, hi]
    Cdf(CdfArgs),
    /// Exact 1-D Wasserstein distance of a pushforward to a reference law
    Wasserstein(WassersteinArgs),
    /// Sweep space-filling generators: measured EMD vs upper/lower bounds
    SweepTent,
    /// Sweep CDF-network accuracy and size against the target accuracy
    SweepPhi,
    /// Sweep binary-search inverter error against its bound
    SweepInverse,
    /// Box-Muller gadget: anchor checks, EMD, and a sample scatter
    BoxmullerDemo,
    /// Central-limit sum-of-uniforms distances across n
    BerryEsseen,
    /// Evaluate every closed-form bound for one architecture
    Bounds(BoundsArgs),
    /// Run the full acceptance suite; nonzero exit on any failure
    Verify,
}

#[derive(Args)]
struct BuildArgs {
    #[command(subcommand)]
    kind: BuildKind,
}

#[derive(Subcommand)]
enum BuildKind {
    /// k-piece tent map on [0,1]
    Tent {
        #[arg(long)]
        k: usize,
    },
    /// coordinate-wise clamp to [lo, hi]
    Clamp {
        #[arg(long, default_value_t = 0.0)]
        lo: f64,
        #[arg(long, default_value_t = 1.0)]
        hi: f64,
        #[arg(long, default_value_t = 1)]
        dim: usize,
    },
    /// space-filling generator [0,1]^n -> [0,1]^d under node/layer budgets
    SpaceFilling {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        nodes: usize,
        #[arg(long)]
        layers: usize,
    },
    /// normal CDF network with sup error <= eps
    NormalCdf {
        #[arg(long)]
        eps: f64,
    },
    /// normal quantile network (binary search against the CDF network)
    InverseNormalCdf {
        #[arg(long)]
        eps: f64,
    },
    /// pure-ReLU sampler U[0,1] -> approx N(0,1), Wasserstein <= eps
    UniformToNormal {
        #[arg(long)]
        eps: f64,
    },
    /// two-input Box-Muller sampler to a standard bivariate normal
    BoxMuller {
        #[arg(long)]
        eps: f64,
    },
    /// normalized sum of n uniforms (single affine layer)
    SumOfUniforms {
        #[arg(long)]
        n: usize,
    },
    /// scalar multiplier on [-m, m]^2 with error <= eps
    Multiplier {
        #[arg(long)]
        m: f64,
        #[arg(long)]
        eps: f64,
    },
}

#[derive(Args)]
struct EvalArgs {
    /// network file written by `build`
    #[arg(long)]
    net: PathBuf,
    /// comma-separated input coordinates
    #[arg(long)]
    input: String,
}

#[derive(Args)]
struct RegionsArgs {
    #[arg(long)]
    net: PathBuf,
    /// semicolon-separated per-coordinate "lo,hi" ranges; default unit box
    #[arg(long)]
    domain: Option<String>,
}

#[derive(Args)]
struct CdfArgs {
    #[arg(long)]
    net: PathBuf,
    #[arg(long, default_value_t = 0.0)]
    lo: f64,
    #[arg(long, default_value_t = 1.0)]
    hi: f64,
    /// knot-merge tolerance forwarded to the exact tracer
    #[arg(long, default_value_t = 1e-13)]
    merge_tol: f64,
}

#[derive(Args)]
struct WassersteinArgs {
    #[arg(long)]
    net: PathBuf,
    /// reference law: "uniform" (U[0,1]) or "normal" (standard normal)
    #[arg(long, default_value = "normal")]
    target: String,
    #[arg(long, default_value_t = 0.0)]
    lo: f64,
    #[arg(long, default_value_t = 1.0)]
    hi: f64,
    #[arg(long, default_value_t = 1e-13)]
    merge_tol: f64,
}

#[derive(Args)]
struct BoundsArgs {
    #[arg(long, default_value_t = 20)]
    nodes: u64,
    #[arg(long, default_value_t = 2)]
    layers: u64,
    #[arg(long, default_value_t = 1)]
    n: u64,
    #[arg(long, default_value_t = 2)]
    d: u64,
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            std::process::exit(1);
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<i32> {
    let cfg = config::load(cli.config.as_deref())?;
    if cli.jobs == 0 {
        bail!("--jobs must be at least 1");
    }
    let ctx = runs::Ctx {
        seed: cli.seed,
        out: cli.out,
        jobs: cli.jobs,
        cfg,
    };
    match cli.cmd {
        Command::Build(args) => runs::cmd_build(&ctx, &args.kind).map(|_| 0),
        Command::Eval(args) => {
            let net = runs::load_network(&args.net)?;
            let input: Vec<f64> = args
                .input
                .split(',')
                .map(|t| t.trim().parse::<f64>().context("parsing --input"))
                .collect::<anyhow::Result<_>>()?;
            let out = net.eval(&input)?;
            println!("{}", serde_json::to_string(&out)?);
            Ok(0)
        }
        Command::Regions(args) => runs::cmd_regions(&ctx, &args.net, args.domain.as_deref()).map(|_| 0),
        Command::Cdf(args) => {
            runs::cmd_cdf(&ctx, &args.net, (args.lo, args.hi), args.merge_tol).map(|_| 0)
        }
        Command::Wasserstein(args) => runs::cmd_wasserstein(
            &ctx,
            &args.net,
            &args.target,
            (args.lo, args.hi),
            args.merge_tol,
        )
        .map(|_| 0),
        Command::SweepTent => runs::cmd_sweep_tent(&ctx).map(|_| 0),
        Command::SweepPhi => runs::cmd_sweep_phi(&ctx).map(|_| 0),
        Command::SweepInverse => runs::cmd_sweep_inverse(&ctx).map(|_| 0),
        Command::BoxmullerDemo => runs::cmd_boxmuller_demo(&ctx).map(|_| 0),
        Command::BerryEsseen => runs::cmd_berry_esseen(&ctx).map(|_| 0),
        Command::Bounds(args) => {
            runs::cmd_bounds(&ctx, args.nodes, args.layers, args.n, args.d).map(|_| 0)
        }
        Command::Verify => runs::cmd_verify(&ctx),
    }
}
