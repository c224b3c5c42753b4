//! `qls`: log-Sobolev constants, spectral gaps and entropy-production bounds
//! for doubly stochastic quantum channels, from the command line.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use qls::capacity::{capacity_bound, CapacityAlpha};
use qls::channels::{random_pauli_channel, Liouvillian, PauliDistribution, QuantumChannel};
use qls::discrete::{
    alpha_d, discrete_bounds, discrete_hypercontractivity_check, power_monotonicity_check,
    AlphaDMethod,
};
use qls::group::{quantum_2to4_bound, t0_depolarizing, weyl_basis};
use qls::io;
use qls::ls::{
    alpha1_qubit, alpha1_variational, alpha2_qubit, alpha2_variational, entropy_production_curve,
    sandwich_bounds, spectral_gap, tensor_lower_bound, LsEstimate, VariationalOptions,
};
use qls::report::EstimateReport;
use qls::sample::{random_full_rank_density, rng_from_seed};
use qls::verify::{run_verification, Suite, SuiteConfig};
use qls::Real;

#[derive(Parser)]
#[command(
    name = "qls",
    version,
    about = "Entropy-production bounds, log-Sobolev constants and spectral gaps for doubly stochastic quantum channels"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate or construct channel JSON files.
    Channel {
        #[command(subcommand)]
        action: ChannelAction,
    },
    /// Compute a log-Sobolev constant or spectral gap.
    Ls(LsArgs),
    /// Discrete-time constant, bounds and power trace for a channel.
    Discrete(DiscreteArgs),
    /// Entropy trajectory against its certified bound, as CSV.
    Curve(CurveArgs),
    /// Exponential upper bound on unitary-corrected storage rates.
    Capacity(CapacityArgs),
    /// Weighted 2->4 hypercontractivity comparisons.
    Hyper(HyperArgs),
    /// Run verification suites over random instances.
    Verify(VerifyArgs),
}

#[derive(Subcommand)]
enum ChannelAction {
    /// Load a channel file and report its invariants.
    Validate { file: PathBuf },
    /// Write a channel JSON file.
    Make(MakeArgs),
}

#[derive(Args)]
struct MakeArgs {
    /// Channel family: dep | pauli | random.
    #[arg(long)]
    kind: String,
    #[arg(long, default_value_t = 2)]
    d: usize,
    /// Pauli weights (pauli kind).
    #[arg(long, default_value_t = 0.0)]
    p1: Real,
    #[arg(long, default_value_t = 0.0)]
    p2: Real,
    #[arg(long, default_value_t = 0.0)]
    p3: Real,
    /// Number of mixed unitaries (random kind).
    #[arg(long, default_value_t = 3)]
    k: usize,
    #[arg(long, default_value_t = 7)]
    seed: u64,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum LsKindArg {
    Alpha1,
    Alpha2,
    Gap,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    /// Closed form where available, variational otherwise.
    Auto,
    ClosedForm,
    Variational,
    /// Gap sandwich bracket.
    Sandwich,
    /// Tensor-stable bracket.
    Tensor,
}

#[derive(Args)]
struct LsArgs {
    /// Channel JSON; the generator is T - id.
    #[arg(long, conflicts_with = "liouvillian")]
    channel: Option<PathBuf>,
    /// Generator source: "dep" (with --d) or a generator JSON file.
    #[arg(long)]
    liouvillian: Option<String>,
    #[arg(long, default_value_t = 2)]
    d: usize,
    #[arg(long, value_enum, default_value_t = LsKindArg::Alpha2)]
    kind: LsKindArg,
    #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
    method: MethodArg,
    #[arg(long, default_value_t = 32)]
    restarts: usize,
    #[arg(long, default_value_t = 7)]
    seed: u64,
}

#[derive(Args)]
struct DiscreteArgs {
    #[arg(long)]
    channel: PathBuf,
    /// Also trace alpha_2((T*)^k T^k - id) for k = 1..=power.
    #[arg(long)]
    power: Option<usize>,
    /// Also run the hypercontractivity check at this exponent.
    #[arg(long)]
    q: Option<Real>,
    #[arg(long, default_value_t = 7)]
    seed: u64,
}

#[derive(Args)]
struct CurveArgs {
    /// Generator source: "dep" (with --d) or a generator JSON file.
    #[arg(long, default_value = "dep")]
    liouvillian: String,
    #[arg(long, default_value_t = 2)]
    d: usize,
    /// Initial state: pure | mixed | random.
    #[arg(long, default_value = "pure")]
    rho: String,
    #[arg(long, default_value_t = 3.0)]
    tmax: Real,
    #[arg(long, default_value_t = 60)]
    steps: usize,
    #[arg(long, default_value_t = 7)]
    seed: u64,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct CapacityArgs {
    #[arg(long, default_value = "dep")]
    liouvillian: String,
    #[arg(long, default_value_t = 2)]
    d: usize,
    #[arg(long, default_value_t = 3.0)]
    tmax: Real,
    #[arg(long, default_value_t = 30)]
    steps: usize,
    /// Decay constant: tensor (dimension-generic bound) or qubit (exact, d = 2).
    #[arg(long, default_value = "tensor")]
    alpha: String,
    /// Write CSV here instead of printing JSON.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct HyperArgs {
    /// Discrete check on a channel file at exponent --q.
    #[arg(long)]
    channel: Option<PathBuf>,
    #[arg(long)]
    q: Option<Real>,
    /// Continuous comparison for the depolarizing semigroup.
    #[arg(long, default_value_t = 2)]
    d: usize,
    #[arg(long, default_value_t = 1)]
    n: usize,
    /// Time; "t0" picks the hypercontractivity time of the generator.
    #[arg(long, default_value = "t0")]
    t: String,
    #[arg(long, default_value_t = 6)]
    restarts: usize,
    #[arg(long, default_value_t = 200)]
    samples: usize,
    #[arg(long, default_value_t = 7)]
    seed: u64,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name or "all".
    #[arg(long, default_value = "all")]
    suite: String,
    /// Comma-separated dimensions.
    #[arg(long, default_value = "2,3,4")]
    dims: String,
    /// Per-suite instance budget (defaults to each suite's own).
    #[arg(long)]
    instances: Option<usize>,
    #[arg(long, default_value_t = 7)]
    seed: u64,
    /// List the available suites and exit.
    #[arg(long)]
    list: bool,
    /// Include wall-clock timing in the report (breaks byte-for-byte
    /// reproducibility of the output).
    #[arg(long)]
    timing: bool,
    /// Write the JSON report here as well as to stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    qls::init_thread_pool_from_env();
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Channel { action } => channel_command(action),
        Command::Ls(args) => ls_command(args),
        Command::Discrete(args) => discrete_command(args),
        Command::Curve(args) => curve_command(args),
        Command::Capacity(args) => capacity_command(args),
        Command::Hyper(args) => hyper_command(args),
        Command::Verify(args) => verify_command(args),
    }
}

fn load_channel(path: &PathBuf) -> Result<QuantumChannel<Real>> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    io::channel_from_str(&text).with_context(|| format!("loading {}", path.display()))
}

fn load_liouvillian(source: &str, d: usize) -> Result<Liouvillian<Real>> {
    if source == "dep" {
        if d < 2 {
            bail!("depolarizing generator needs d >= 2");
        }
        return Ok(Liouvillian::depolarizing(d));
    }
    let path = PathBuf::from(source);
    let text = fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
    io::liouvillian_from_str(&text).with_context(|| format!("loading {}", path.display()))
}

fn channel_command(action: ChannelAction) -> Result<ExitCode> {
    match action {
        ChannelAction::Validate { file } => {
            let channel = load_channel(&file)?;
            let (primitive, peripheral) = channel.is_primitive()?;
            let summary = json!({
                "dim": channel.dim(),
                "kraus_operators": channel.kraus().len(),
                "doubly_stochastic": channel.is_doubly_stochastic(),
                "double_stochasticity_defect": channel.double_stochasticity_defect(),
                "primitive": primitive,
                "peripheral_eigenvalues": peripheral.len(),
            });
            println!("{}", serde_json::to_string_pretty(&summary)?);
            Ok(ExitCode::SUCCESS)
        }
        ChannelAction::Make(args) => {
            let channel = match args.kind.as_str() {
                "dep" => QuantumChannel::completely_depolarizing(args.d),
                "pauli" => {
                    let p = PauliDistribution::new(args.p1, args.p2, args.p3)
                        .map_err(|e| anyhow!("{e}"))?;
                    random_pauli_channel(&p)
                }
                "random" => {
                    let mut rng = rng_from_seed(args.seed);
                    qls::channels::random_doubly_stochastic_channel(args.d, args.k, &mut rng)
                }
                other => bail!("unknown channel kind '{other}' (expected dep | pauli | random)"),
            };
            let text = serde_json::to_string_pretty(&io::channel_to_json(&channel))?;
            fs::write(&args.out, text + "\n")
                .with_context(|| format!("writing {}", args.out.display()))?;
            println!("wrote {} (d = {})", args.out.display(), channel.dim());
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn ls_command(args: LsArgs) -> Result<ExitCode> {
    // Resolve the generator and remember the channel when we have one, since
    // the qubit closed forms work on the channel itself.
    let (liou, channel): (Liouvillian<Real>, Option<QuantumChannel<Real>>) =
        if let Some(path) = &args.channel {
            let t = load_channel(path)?;
            (Liouvillian::from_channel(&t), Some(t))
        } else {
            let source = args.liouvillian.as_deref().unwrap_or("dep");
            (load_liouvillian(source, args.d)?, None)
        };

    let opts = VariationalOptions::with_restarts(args.restarts);
    let output = match (args.kind, args.method) {
        (LsKindArg::Gap, _) => estimate_json(&spectral_gap(&liou).map_err(|e| anyhow!("{e}"))?),
        (_, MethodArg::Sandwich) => {
            let b = sandwich_bounds(&liou).map_err(|e| anyhow!("{e}"))?;
            json!({
                "lambda": b.lambda,
                "reversible": b.reversible,
                "alpha2": { "lower": estimate_json(&b.alpha2_lower), "upper": estimate_json(&b.alpha2_upper) },
                "alpha1": { "lower": estimate_json(&b.alpha1_lower), "upper": estimate_json(&b.alpha1_upper) },
            })
        }
        (_, MethodArg::Tensor) => {
            let tb = tensor_lower_bound(&liou).map_err(|e| anyhow!("{e}"))?;
            json!({
                "lambda": tb.lambda,
                "symmetrized_norm": tb.symmetrized_norm,
                "lower": estimate_json(&tb.lower),
                "upper": estimate_json(&tb.upper),
                "qubit_exact": tb.qubit_exact.as_ref().map(estimate_json),
            })
        }
        (kind, method) => {
            let closed: Option<LsEstimate<Real>> = match (&channel, kind) {
                (Some(t), LsKindArg::Alpha2) if t.dim() == 2 => alpha2_qubit(t).ok(),
                (Some(t), LsKindArg::Alpha1) if t.dim() == 2 => alpha1_qubit(t).ok(),
                _ => None,
            };
            let est = match method {
                MethodArg::ClosedForm => closed.ok_or_else(|| {
                    anyhow!("no closed form for this input (closed forms cover qubit channels)")
                })?,
                MethodArg::Auto => match closed {
                    Some(est) => est,
                    None => variational(&liou, kind, &opts, args.seed)?,
                },
                MethodArg::Variational => variational(&liou, kind, &opts, args.seed)?,
                MethodArg::Sandwich | MethodArg::Tensor => unreachable!(),
            };
            estimate_json(&est)
        }
    };
    println!("{}", serde_json::to_string_pretty(&output)?);
    Ok(ExitCode::SUCCESS)
}

fn variational(
    liou: &Liouvillian<Real>,
    kind: LsKindArg,
    opts: &VariationalOptions<Real>,
    seed: u64,
) -> Result<LsEstimate<Real>> {
    let est = match kind {
        LsKindArg::Alpha1 => alpha1_variational(liou, opts, seed),
        LsKindArg::Alpha2 => alpha2_variational(liou, opts, seed),
        LsKindArg::Gap => spectral_gap(liou),
    };
    est.map_err(|e| anyhow!("{e}"))
}

fn estimate_json(est: &LsEstimate<Real>) -> serde_json::Value {
    serde_json::to_value(EstimateReport::from_estimate(est)).expect("estimate serializes")
}

fn discrete_command(args: DiscreteArgs) -> Result<ExitCode> {
    let t = load_channel(&args.channel)?;
    let mut result = alpha_d(&t, AlphaDMethod::Auto, args.seed).map_err(|e| anyhow!("{e}"))?;
    let bounds = discrete_bounds(&t).map_err(|e| anyhow!("{e}"))?;
    let trace = match args.power {
        Some(power) => {
            let trace = power_monotonicity_check(&t, power, AlphaDMethod::Auto, args.seed)
                .map_err(|e| anyhow!("{e}"))?;
            result.power_trace = Some(trace.estimates.clone());
            Some(trace)
        }
        None => None,
    };
    let mut output = json!({
        "alpha_d": estimate_json(&result.alpha_d),
        "alpha2_composite": estimate_json(&result.alpha2_composite),
        "peripheral_eigenvalues": result.primitivity_witness.len(),
        "bounds": {
            "lambda": bounds.lambda,
            "lower": estimate_json(&bounds.lower),
            "upper": estimate_json(&bounds.upper),
        },
    });
    if let Some(trace) = trace {
        output["power_trace"] = json!({
            "alpha2": result
                .power_trace
                .as_ref()
                .map(|list| list.iter().map(|e| e.value).collect::<Vec<_>>()),
            "max_drop": trace.max_drop,
            "non_decreasing": trace.non_decreasing_within(1e-3),
        });
    }
    if let Some(q) = args.q {
        let hyper = discrete_hypercontractivity_check(&t, q, 200, 8, args.seed)
            .map_err(|e| anyhow!("{e}"))?;
        output["hypercontractivity"] = json!({
            "q": hyper.q,
            "alpha_d": hyper.alpha_d,
            "max_ratio": hyper.max_ratio,
            "min_slack_norm_entropy": hyper.min_slack_norm_entropy,
            "min_slack_energy": hyper.min_slack_energy,
        });
    }
    println!("{}", serde_json::to_string_pretty(&output)?);
    Ok(ExitCode::SUCCESS)
}

fn curve_command(args: CurveArgs) -> Result<ExitCode> {
    let liou = load_liouvillian(&args.liouvillian, args.d)?;
    let d = liou.dim();
    let mut rng = rng_from_seed(args.seed);
    let rho = match args.rho.as_str() {
        "pure" => qls::sample::random_pure_state::<Real>(d, &mut rng),
        "mixed" => qls::linalg::Density::maximally_mixed(d),
        "random" => random_full_rank_density::<Real>(d, 1e-8, &mut rng),
        other => bail!("unknown state '{other}' (expected pure | mixed | random)"),
    };
    // Certified lower constant: the sandwich lower bound, which for qubit
    // generators equals the exact constant.
    let bounds = sandwich_bounds(&liou).map_err(|e| anyhow!("{e}"))?;
    let alpha = bounds.alpha1_lower.clone();
    let ts: Vec<Real> = (0..=args.steps)
        .map(|k| args.tmax * k as Real / args.steps.max(1) as Real)
        .collect();
    let rows = entropy_production_curve(&liou, &rho, &ts, &alpha).map_err(|e| anyhow!("{e}"))?;
    let mut csv = String::from("t,entropy,bound,slack\n");
    for row in rows {
        csv.push_str(&format!(
            "{:.12e},{:.12e},{:.12e},{:.12e}\n",
            row.t, row.entropy, row.bound, row.slack
        ));
    }
    fs::write(&args.out, csv).with_context(|| format!("writing {}", args.out.display()))?;
    println!(
        "wrote {} ({} rows, certified alpha = {:.6})",
        args.out.display(),
        args.steps + 1,
        alpha.value
    );
    Ok(ExitCode::SUCCESS)
}

fn capacity_command(args: CapacityArgs) -> Result<ExitCode> {
    let liou = load_liouvillian(&args.liouvillian, args.d)?;
    let choice = match args.alpha.as_str() {
        "tensor" => CapacityAlpha::TensorBound,
        "qubit" => CapacityAlpha::QubitExact,
        other => bail!("unknown alpha choice '{other}' (expected tensor | qubit)"),
    };
    let ts: Vec<Real> = (0..=args.steps)
        .map(|k| args.tmax * k as Real / args.steps.max(1) as Real)
        .collect();
    let bound = capacity_bound(&liou, &ts, choice).map_err(|e| anyhow!("{e}"))?;
    if let Some(out) = &args.out {
        let mut csv = String::from("t,bound\n");
        for (t, v) in &bound.rows {
            csv.push_str(&format!("{t:.12e},{v:.12e}\n"));
        }
        fs::write(out, csv).with_context(|| format!("writing {}", out.display()))?;
        println!("wrote {}", out.display());
    } else {
        let output = json!({
            "dim": bound.dim,
            "lambda": bound.lambda,
            "alpha": bound.alpha,
            "rows": bound.rows.iter().map(|(t, v)| json!({"t": t, "bound": v})).collect::<Vec<_>>(),
        });
        println!("{}", serde_json::to_string_pretty(&output)?);
    }
    Ok(ExitCode::SUCCESS)
}

fn hyper_command(args: HyperArgs) -> Result<ExitCode> {
    if let Some(path) = &args.channel {
        let t = load_channel(path)?;
        let q = args.q.ok_or_else(|| anyhow!("--q is required with --channel"))?;
        let report =
            discrete_hypercontractivity_check(&t, q, args.samples, args.restarts, args.seed)
                .map_err(|e| anyhow!("{e}"))?;
        let output = json!({
            "mode": "discrete",
            "q": report.q,
            "alpha_d": report.alpha_d,
            "max_ratio": report.max_ratio,
            "min_slack_norm_entropy": report.min_slack_norm_entropy,
            "min_slack_energy": report.min_slack_energy,
            "contractive": report.max_ratio <= 1.0 + 1e-6,
        });
        println!("{}", serde_json::to_string_pretty(&output)?);
        return Ok(ExitCode::SUCCESS);
    }

    let liou = Liouvillian::<Real>::depolarizing(args.d);
    let basis = weyl_basis::<Real>(args.d);
    let t = if args.t == "t0" {
        t0_depolarizing::<Real>(args.d)
    } else {
        args.t.parse::<Real>().context("parsing --t")?
    };
    let cmp = quantum_2to4_bound(&liou, &basis, t, args.n, args.restarts, args.seed)
        .map_err(|e| anyhow!("{e}"))?;
    let output = json!({
        "mode": "continuous",
        "d": args.d,
        "n": cmp.copies,
        "t": cmp.t,
        "t0": t0_depolarizing::<Real>(args.d),
        "quantum": cmp.quantum,
        "classical": cmp.classical,
        "ordered": cmp.quantum <= cmp.classical + 1e-6,
    });
    println!("{}", serde_json::to_string_pretty(&output)?);
    Ok(ExitCode::SUCCESS)
}

fn verify_command(args: VerifyArgs) -> Result<ExitCode> {
    if args.list {
        for suite in Suite::ALL {
            println!("{:26} {}", suite.name(), suite.claim());
        }
        return Ok(ExitCode::SUCCESS);
    }
    let suites: Vec<Suite> = if args.suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![Suite::parse(&args.suite)
            .ok_or_else(|| anyhow!("unknown suite '{}' (try --list)", args.suite))?]
    };
    let dims: Vec<usize> = args
        .dims
        .split(',')
        .map(|s| s.trim().parse::<usize>().context("parsing --dims"))
        .collect::<Result<_>>()?;
    let cfg = SuiteConfig { dims, instances: args.instances, seed: args.seed };

    let started = Instant::now();
    let mut report = run_verification(&suites, &cfg);
    if args.timing {
        report.wall_secs = Some(started.elapsed().as_secs_f64());
    }
    let text = serde_json::to_string_pretty(&report)?;
    println!("{text}");
    if let Some(out) = &args.out {
        fs::write(out, text + "\n").with_context(|| format!("writing {}", out.display()))?;
    }
    for check in &report.checks {
        eprintln!(
            "{} {:45} violation {:.3e} (tol {:.1e})",
            if check.pass { "PASS" } else { "FAIL" },
            check.id,
            check.max_violation,
            check.tolerance
        );
    }
    Ok(if report.pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
