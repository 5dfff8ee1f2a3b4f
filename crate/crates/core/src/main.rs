use std::fs;
use std::path::PathBuf;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};

use blockade::model::DEFAULT_DT_MAX;
use blockade::{
    analytic, build_liouvillian, build_space, emit_csv, evolve, g2_zero, mean_occupation,
    observables, parse_config, run_sweep, steady_state, DensityMatrix, FockTruncation, Mode,
    SystemParams,
};

#[derive(Parser)]
#[command(
    name = "blockade",
    version,
    about = "Three-mode four-wave-mixing photon blockade simulator"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve one parameter point and print its observables.
    Point {
        #[command(flatten)]
        params: ParamArgs,
        /// Truncation as n_a_max,n_b_max,n_c_max.
        #[arg(long, value_parser = parse_trunc)]
        trunc: Option<FockTruncation>,
        /// Also integrate the master equation from vacuum and report the
        /// trace distance to the linear-solve steady state.
        #[arg(long)]
        oracle: bool,
        /// Integration time for the oracle, in 1/κ.
        #[arg(long, default_value_t = 100.0)]
        oracle_time: f64,
    },
    /// Run a configured sweep and write CSV.
    Sweep {
        #[arg(long)]
        config: PathBuf,
        /// CSV destination; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_parser = parse_trunc)]
        trunc: Option<FockTruncation>,
    },
    /// Weak-drive amplitudes, g² estimate and two-photon eigenfrequencies.
    Analytic {
        #[command(flatten)]
        params: ParamArgs,
        /// Grid step for the optimal-detuning scan over [-10, 10]κ.
        #[arg(long, default_value_t = 0.01)]
        scan_step: f64,
    },
}

/// Model parameters in units of κ.
#[derive(Args)]
struct ParamArgs {
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    delta_a: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    delta_b: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    delta_c: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    g: f64,
    #[arg(long, default_value_t = 0.01)]
    f_a: f64,
    #[arg(long, default_value_t = 1.0)]
    kappa_a: f64,
    #[arg(long, default_value_t = 1.0)]
    kappa_b: f64,
    #[arg(long, default_value_t = 1.0)]
    kappa_c: f64,
}

impl ParamArgs {
    fn to_params(&self) -> anyhow::Result<SystemParams> {
        let p = SystemParams {
            delta_a: self.delta_a,
            delta_b: self.delta_b,
            delta_c: self.delta_c,
            g: self.g,
            f_a: self.f_a,
            kappa_a: self.kappa_a,
            kappa_b: self.kappa_b,
            kappa_c: self.kappa_c,
        };
        p.validate()?;
        Ok(p)
    }
}

fn parse_trunc(s: &str) -> Result<FockTruncation, String> {
    let parts: Vec<usize> = s
        .split(',')
        .map(|x| x.trim().parse::<usize>().map_err(|e| format!("{x:?}: {e}")))
        .collect::<Result<_, _>>()?;
    let [a, b, c] = parts[..] else {
        return Err(format!("expected three comma-separated counts, got {s:?}"));
    };
    FockTruncation::new(a, b, c).map_err(|e| e.to_string())
}

fn main() -> anyhow::Result<()> {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match Cli::parse().command {
        Command::Point {
            params,
            trunc,
            oracle,
            oracle_time,
        } => point(
            &params.to_params()?,
            trunc.unwrap_or_default(),
            oracle.then_some(oracle_time),
        ),
        Command::Sweep { config, out, trunc } => sweep(&config, out.as_ref(), trunc),
        Command::Analytic { params, scan_step } => analytic_report(&params.to_params()?, scan_step),
    }
}

fn point(params: &SystemParams, trunc: FockTruncation, oracle: Option<f64>) -> anyhow::Result<()> {
    let space = build_space(trunc)?;
    let l = build_liouvillian(params, &space);
    let rho = steady_state(&l)?;

    println!("truncation = {trunc}");
    println!("dim = {}", space.dim());
    match g2_zero(&rho, &space, Mode::A) {
        Ok(g2) => println!("g2_a = {g2:.9e}"),
        Err(e) => println!("g2_a = nan  # {e}"),
    }
    for mode in Mode::ALL {
        println!("n_{mode} = {:.9e}", mean_occupation(&rho, &space, mode));
    }
    println!(
        "top_level_a = {:.3e}",
        observables::top_level_population(&rho, &space, Mode::A)
    );
    println!("min_eigenvalue = {:.3e}", rho.min_eigenvalue()?);

    if let Some(t) = oracle {
        let evolved = evolve(&l, &DensityMatrix::vacuum(&space), t, DEFAULT_DT_MAX)?;
        println!("oracle_time = {t}");
        println!(
            "oracle_trace_distance = {:.3e}",
            rho.trace_distance(&evolved)?
        );
    }
    Ok(())
}

fn sweep(
    config: &PathBuf,
    out: Option<&PathBuf>,
    trunc: Option<FockTruncation>,
) -> anyhow::Result<()> {
    let text =
        fs::read_to_string(config).with_context(|| format!("reading {}", config.display()))?;
    let (_, mut spec) =
        parse_config(&text).with_context(|| format!("parsing {}", config.display()))?;
    if let Some(t) = trunc {
        spec.trunc = t;
    }
    let result = run_sweep(&spec)?;
    let gaps = result.records.iter().filter(|r| r.is_gap()).count();
    if gaps == result.records.len() {
        bail!("every sweep point failed");
    }
    if gaps > 0 {
        log::warn!(
            "{gaps} of {} points failed and were written as gaps",
            result.records.len()
        );
    }
    let csv = emit_csv(&result);
    match out {
        Some(path) => {
            fs::write(path, csv).with_context(|| format!("writing {}", path.display()))?
        }
        None => print!("{csv}"),
    }
    Ok(())
}

fn analytic_report(params: &SystemParams, scan_step: f64) -> anyhow::Result<()> {
    let (hi, lo) = analytic::manifold_eigenfrequencies(params);
    println!("omega_plus = {hi:.9e}");
    println!("omega_minus = {lo:.9e}");
    println!("splitting = {:.9e}", hi - lo);

    let amp = analytic::steady_amplitudes(params)?;
    for (name, c) in [
        ("c000", amp.c000),
        ("c100", amp.c100),
        ("c200", amp.c200),
        ("c011", amp.c011),
    ] {
        println!(
            "{name} = {:.9e} {:+.9e}i  # |{name}| = {:.9e}",
            c.re,
            c.im,
            c.norm()
        );
    }
    match analytic::weak_drive_g2(params) {
        Ok(g2) => println!("g2_weak = {g2:.9e}"),
        Err(e) => println!("g2_weak = nan  # {e}"),
    }
    if (params.delta_b + params.delta_c).abs() < 1e-12 && params.f_a <= analytic::WEAK_DRIVE_LIMIT {
        let opt = analytic::optimal_detuning_scan(params, (-10.0, 10.0), scan_step)?;
        println!("delta_a_opt = {opt:.9e}");
    }
    Ok(())
}
