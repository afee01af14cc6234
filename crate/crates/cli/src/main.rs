use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use hopf_ent::{e_closed, ep_monte_carlo, evolve_closed, DeformParam};
use hopf_ent_cli::sweep::{self, McReport};
use hopf_ent_cli::verify;

const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const MAX_Z: f64 = 4.0;

#[derive(Parser)]
#[command(
    name = "hopf-ent",
    version,
    about = "Coproduct dynamics and operator entanglement of U_q(su(2)) qubits"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every invariant check and report the worst deviation per group.
    Verify {
        /// Threshold scale; 1e-10 reproduces the built-in per-check tolerances.
        #[arg(long, default_value_t = verify::DEFAULT_TOLERANCE)]
        tolerance: f64,
    },
    /// Emit E(U(t)), the mixed invariant and e_p over time for each q.
    SweepTime {
        /// Comma-separated q values (the default set is a plotting choice).
        #[arg(long = "q", value_delimiter = ',', default_value = "1,1.5,2,3")]
        q_list: Vec<f64>,
        /// Time samples per q, endpoints included.
        #[arg(long, default_value_t = 401)]
        points: usize,
        /// Span of each trajectory in units of the period 2π/α.
        #[arg(long, default_value_t = 2.0)]
        periods: f64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Emit the maximum of E(U(t)) over one period for evenly spaced q.
    SweepQ {
        #[arg(long, default_value_t = 1.0)]
        min: f64,
        #[arg(long, default_value_t = 5.0)]
        max: f64,
        #[arg(long, default_value_t = 50)]
        points: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Monte Carlo entangling power of U(t) against the closed form (4/9)E.
    McEp {
        #[arg(long)]
        q: f64,
        /// Evolution time.
        #[arg(long, required_unless_present = "alpha_t", conflicts_with = "alpha_t")]
        t: Option<f64>,
        /// Phase αt instead of t (e.g. 3.141592653589793 for half a period).
        #[arg(long)]
        alpha_t: Option<f64>,
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Also write the result as a one-row CSV.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Failure split by exit code.
enum Failure {
    Usage(anyhow::Error),
    Runtime(anyhow::Error),
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(anyhow::anyhow!(msg.into()))
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Runtime(e)
    }
}

fn deform(q: f64) -> Result<DeformParam, Failure> {
    DeformParam::new(q).map_err(|e| Failure::Usage(e.into()))
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    let f = File::create(path).with_context(|| format!("cannot write {}", path.display()))?;
    Ok(BufWriter::new(f))
}

fn cmd_verify(tolerance: f64) -> Result<bool, Failure> {
    if !(tolerance.is_finite() && tolerance > 0.0) {
        return Err(usage("--tolerance must be positive"));
    }
    let start = Instant::now();
    let checks = verify::run(tolerance)?;
    let mut ok = true;
    for c in &checks {
        println!("{}", c.line());
        ok &= c.passed();
    }
    let failed = checks.iter().filter(|c| !c.passed()).count();
    println!(
        "{} checks, {} failed, {:.2?}",
        checks.len(),
        failed,
        start.elapsed()
    );
    Ok(ok)
}

fn cmd_sweep_time(
    q_list: &[f64],
    points: usize,
    periods: f64,
    out: &Path,
) -> Result<bool, Failure> {
    if q_list.is_empty() {
        return Err(usage("--q needs at least one value"));
    }
    let qs = q_list
        .iter()
        .map(|&q| deform(q))
        .collect::<Result<Vec<_>, _>>()?;
    if points < 2 {
        return Err(usage("--points must be at least 2"));
    }
    if !(periods.is_finite() && periods > 0.0) {
        return Err(usage("--periods must be positive"));
    }
    let rows = sweep::time_rows(&qs, points, periods)?;
    let mut w = create(out)?;
    sweep::write_time_csv(&mut w, &rows)?;
    w.flush().context("flushing output")?;
    eprintln!("wrote {} rows to {}", rows.len(), out.display());
    Ok(true)
}

fn cmd_sweep_q(min: f64, max: f64, points: usize, out: &Path) -> Result<bool, Failure> {
    if !(min > 0.0 && min < max && max.is_finite()) {
        return Err(usage("need 0 < --min < --max"));
    }
    if points < 2 {
        return Err(usage("--points must be at least 2"));
    }
    let rows = sweep::q_rows(min, max, points)?;
    let mut w = create(out)?;
    sweep::write_q_csv(&mut w, &rows)?;
    w.flush().context("flushing output")?;
    eprintln!("wrote {} rows to {}", rows.len(), out.display());
    Ok(true)
}

fn cmd_mc_ep(
    q: f64,
    t: Option<f64>,
    alpha_t: Option<f64>,
    samples: usize,
    seed: u64,
    out: Option<&Path>,
) -> Result<bool, Failure> {
    let q = deform(q)?;
    let t = match (t, alpha_t) {
        (Some(t), None) => t,
        (None, Some(phase)) => phase / q.alpha(),
        _ => return Err(usage("give exactly one of --t and --alpha-t")),
    };
    if !t.is_finite() {
        return Err(usage("time must be finite"));
    }
    if samples < hopf_ent::entangle::MIN_MC_SAMPLES {
        return Err(usage(format!(
            "--samples must be at least {}",
            hopf_ent::entangle::MIN_MC_SAMPLES
        )));
    }
    let u = evolve_closed(q, t).u;
    let est = ep_monte_carlo(&u, samples, seed).map_err(anyhow::Error::from)?;
    let closed = 4.0 / 9.0 * e_closed(q, t);
    let report = McReport {
        q: q.q(),
        t,
        n_samples: samples,
        seed,
        estimate: est.estimate,
        std_error: est.std_error,
        closed_form: closed,
        z_score: est.z_score(closed),
    };
    println!("estimate     {}", sweep::fmt_f64(report.estimate));
    println!("std_error    {}", sweep::fmt_f64(report.std_error));
    println!("closed_form  {}", sweep::fmt_f64(report.closed_form));
    println!("z_score      {:.4}", report.z_score);
    if let Some(path) = out {
        let mut w = create(path)?;
        sweep::write_mc_csv(&mut w, &report)?;
        w.flush().context("flushing output")?;
    }
    Ok(report.z_score.abs() <= MAX_Z)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Verify { tolerance } => cmd_verify(*tolerance),
        Command::SweepTime {
            q_list,
            points,
            periods,
            out,
        } => cmd_sweep_time(q_list, *points, *periods, out),
        Command::SweepQ {
            min,
            max,
            points,
            out,
        } => cmd_sweep_q(*min, *max, *points, out),
        Command::McEp {
            q,
            t,
            alpha_t,
            samples,
            seed,
            out,
        } => cmd_mc_ep(*q, *t, *alpha_t, *samples, *seed, out.as_deref()),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_FAILURE),
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Runtime(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_FAILURE)
        }
    }
}
