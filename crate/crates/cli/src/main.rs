//! `qchan`: closed-form concurrence, entropy roofs and Holevo capacity for
//! 1-qubit Kraus channels, with brute-force cross-checks.
//!
//! Data goes to stdout as a single JSON document (or CSV for sweeps); logs
//! go to stderr. Exit codes: 0 success, 1 usage error, 2 input validation
//! failure, 3 no anti-linear operator exists (Kraus span > 2),
//! 4 numerical-invariant failure.

mod io;

use clap::{Parser, Subcommand};

use qchan::{
    capacity, capacity_degenerate, channel_concurrence, entropy_roof, entropy_wrt_channel,
    optimal_signal_report, oracle_concurrence, oracle_entropy_roof, span_scale,
    theta_from_channel, AntiHermOp, Complex64, Error, KrausChannel, OracleConfig,
};

use io::{fmt_bloch, fmt_complex, fmt_ensemble_member, fmt_f64, load_channel, load_state, parse_grid};

#[derive(Debug)]
pub struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn usage(message: String) -> Self {
        Self { code: 1, message }
    }
    fn validation(message: String) -> Self {
        Self { code: 2, message }
    }
    fn construction(message: String) -> Self {
        Self { code: 3, message }
    }
    fn numerical(message: String) -> Self {
        Self { code: 4, message }
    }
    fn from_core(e: Error) -> Self {
        match e {
            Error::SpanTooLarge { .. } => Self::construction(e.to_string()),
            Error::InvariantViolation { .. } => Self::numerical(e.to_string()),
            Error::Config(_) => Self::usage(e.to_string()),
            _ => Self::validation(e.to_string()),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        Self::from_core(e)
    }
}

#[derive(Parser)]
#[command(
    name = "qchan",
    about = "Concurrence, entropy roofs and Holevo capacity of 1-qubit Kraus channels",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the trace-preservation condition of a channel file.
    Validate {
        #[arg(long)]
        channel: String,
        /// Pass threshold for the largest entrywise deviation.
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// The anti-linear operator of a channel: entries, scale, span rank.
    Theta {
        #[arg(long)]
        channel: String,
        /// Skip the trace-preservation gate.
        #[arg(long, default_value_t = false)]
        no_validate: bool,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Maximize the channel entropy H_T over the Bloch ball.
    Capacity {
        #[arg(long)]
        channel: String,
        #[arg(long, default_value_t = false)]
        no_validate: bool,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Number of simplex starts.
        #[arg(long, default_value_t = 32)]
        restarts: usize,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// Capacity curves over a channel family, as CSV (or JSON).
    Sweep {
        /// `degenerate-t` or `extremal-real`.
        #[arg(long)]
        family: String,
        /// Inclusive parameter grid `start:stop:steps`.
        #[arg(long)]
        grid: String,
        /// Output file (stdout when absent).
        #[arg(long)]
        out: Option<String>,
        #[arg(long, default_value = "csv")]
        format: String,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 32)]
        restarts: usize,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// Compare closed-form C_T, E_T, H_T against the brute-force solvers.
    OracleCompare {
        #[arg(long)]
        channel: String,
        /// Inline state `bloch:x,y,z`.
        #[arg(long)]
        state: Option<String>,
        /// State file with `bloch` or `matrix`.
        #[arg(long)]
        state_file: Option<String>,
        #[arg(long, default_value_t = false)]
        no_validate: bool,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 16)]
        restarts: usize,
        /// Direction grid resolution (grid × grid scan).
        #[arg(long, default_value_t = 64)]
        grid: usize,
        #[arg(long, default_value_t = 200)]
        refine_iters: usize,
        /// Pass tolerance on the oracle/closed-form gap.
        #[arg(long, default_value_t = 1e-4)]
        tol: f64,
    },
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help/version go to stdout and exit 0, real errors to stderr
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    match run(cli) {
        Ok(()) => {}
        Err(e) => {
            eprintln!("error: {}", e.message);
            std::process::exit(e.code as i32);
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Validate { channel, tol, .. } => cmd_validate(&channel, tol),
        Command::Theta {
            channel,
            no_validate,
            tol,
            ..
        } => cmd_theta(&channel, no_validate, tol),
        Command::Capacity {
            channel,
            no_validate,
            seed,
            restarts,
            tol,
        } => cmd_capacity(&channel, no_validate, seed, restarts, tol),
        Command::Sweep {
            family,
            grid,
            out,
            format,
            seed,
            restarts,
            tol,
        } => cmd_sweep(&family, &grid, out.as_deref(), &format, seed, restarts, tol),
        Command::OracleCompare {
            channel,
            state,
            state_file,
            no_validate,
            seed,
            restarts,
            grid,
            refine_iters,
            tol,
        } => cmd_oracle_compare(
            &channel,
            state.as_deref(),
            state_file.as_deref(),
            no_validate,
            OracleConfig {
                restarts,
                grid,
                seed,
                refine_iters,
                tol: 1e-10,
            },
            tol,
        ),
    }
}

/// Load a channel and, unless waived, gate on trace preservation.
fn gated_channel(path: &str, no_validate: bool) -> Result<KrausChannel, CliError> {
    let channel = load_channel(path)?;
    if !no_validate {
        let rep = channel.validate_cptp();
        if !rep.pass {
            return Err(CliError::validation(format!(
                "channel {path} is not trace preserving (deviation {:.3e}); use --no-validate to proceed",
                rep.max_deviation
            )));
        }
    }
    Ok(channel)
}

fn theta_or_exit3(channel: &KrausChannel) -> Result<AntiHermOp, CliError> {
    theta_from_channel(channel).map_err(CliError::from)
}

fn cmd_validate(path: &str, tol: f64) -> Result<(), CliError> {
    let channel = load_channel(path)?;
    let rep = channel.validate_cptp();
    let pass = rep.max_deviation <= tol;
    println!(
        "{{\"pass\": {}, \"deviation\": {}}}",
        pass,
        fmt_f64(rep.max_deviation)
    );
    if pass {
        Ok(())
    } else {
        Err(CliError::validation(format!(
            "trace-preservation deviation {:.3e} exceeds {tol:.1e}",
            rep.max_deviation
        )))
    }
}

fn cmd_theta(path: &str, no_validate: bool, _tol: f64) -> Result<(), CliError> {
    let channel = gated_channel(path, no_validate)?;
    let span = channel.kraus_span();
    let theta = theta_or_exit3(&channel)?;
    println!(
        "{{\"alpha\": {}, \"beta\": {}, \"delta\": {}, \"scale\": {}, \"spanDim\": {}}}",
        fmt_complex(theta.alpha()),
        fmt_complex(theta.beta()),
        fmt_complex(theta.delta()),
        fmt_f64(span_scale(&span)),
        span.span_dim
    );
    Ok(())
}

fn cmd_capacity(
    path: &str,
    no_validate: bool,
    seed: u64,
    restarts: usize,
    tol: f64,
) -> Result<(), CliError> {
    let channel = gated_channel(path, no_validate)?;
    let theta = theta_or_exit3(&channel)?;
    let cfg = OracleConfig {
        restarts,
        seed,
        tol,
        ..OracleConfig::default()
    };
    let cap = capacity(&channel, &theta, &cfg)?;
    let members: Vec<String> = cap
        .ensemble
        .weights()
        .iter()
        .zip(cap.ensemble.states())
        .map(|(w, s)| fmt_ensemble_member(*w, s))
        .collect();
    let overlap = if cap.ensemble.states().len() >= 2 {
        cap.ensemble.states()[0].overlap(&cap.ensemble.states()[1])
    } else {
        1.0
    };
    println!(
        "{{\"value\": {}, \"argmax_bloch\": {}, \"ensemble\": [{}], \"overlap\": {}}}",
        fmt_f64(cap.value),
        fmt_bloch(cap.argmax.bloch()),
        members.join(", "),
        fmt_f64(overlap)
    );
    Ok(())
}

fn cmd_sweep(
    family: &str,
    grid: &str,
    out: Option<&str>,
    format: &str,
    seed: u64,
    restarts: usize,
    tol: f64,
) -> Result<(), CliError> {
    let points = parse_grid(grid)?;
    let mut rows: Vec<Vec<(&str, f64)>> = Vec::with_capacity(points.len());
    match family {
        "degenerate-t" => {
            for &t in &points {
                let (value, r_star) = capacity_degenerate(t).map_err(CliError::from)?;
                rows.push(vec![
                    ("t", t),
                    ("capacity", value),
                    ("r_star", r_star),
                    ("overlap", (1.0 - 2.0 * r_star).abs()),
                ]);
            }
        }
        "extremal-real" => {
            let cfg = OracleConfig {
                restarts,
                seed,
                tol,
                ..OracleConfig::default()
            };
            for &u in &points {
                let channel = KrausChannel::extremal(
                    Complex64::new(u.cos(), 0.0),
                    Complex64::new(1.0, 0.0),
                    Complex64::new(0.0, 0.0),
                    Complex64::new(u.sin(), 0.0),
                )
                .map_err(CliError::from)?;
                let theta = theta_or_exit3(&channel)?;
                let rep = optimal_signal_report(&channel, &theta, &cfg)?;
                rows.push(vec![
                    ("u", u),
                    ("capacity", rep.capacity),
                    ("overlap", rep.overlap),
                ]);
            }
        }
        other => {
            return Err(CliError::usage(format!(
                "unknown family \"{other}\" (expected degenerate-t or extremal-real)"
            )))
        }
    }

    let rendered = match format {
        "csv" => {
            let mut text = String::new();
            if let Some(first) = rows.first() {
                let header: Vec<&str> = first.iter().map(|(k, _)| *k).collect();
                text.push_str(&header.join(","));
                text.push('\n');
            }
            for row in &rows {
                let cells: Vec<String> = row.iter().map(|(_, v)| fmt_f64(*v)).collect();
                text.push_str(&cells.join(","));
                text.push('\n');
            }
            text
        }
        "json" => {
            let objects: Vec<String> = rows
                .iter()
                .map(|row| {
                    let fields: Vec<String> = row
                        .iter()
                        .map(|(k, v)| format!("\"{k}\": {}", fmt_f64(*v)))
                        .collect();
                    format!("{{{}}}", fields.join(", "))
                })
                .collect();
            format!("[{}]\n", objects.join(", "))
        }
        other => {
            return Err(CliError::usage(format!(
                "unknown format \"{other}\" (expected csv or json)"
            )))
        }
    };

    match out {
        Some(path) => std::fs::write(path, rendered)
            .map_err(|e| CliError::validation(format!("cannot write {path}: {e}")))?,
        None => print!("{rendered}"),
    }
    Ok(())
}

fn cmd_oracle_compare(
    path: &str,
    state: Option<&str>,
    state_file: Option<&str>,
    no_validate: bool,
    cfg: OracleConfig,
    pass_tol: f64,
) -> Result<(), CliError> {
    let channel = gated_channel(path, no_validate)?;
    let rho = load_state(state, state_file)?;
    let theta = theta_or_exit3(&channel)?;

    let c_t = channel_concurrence(&theta, &rho);
    let e_t = entropy_roof(&theta, &rho);
    let s_t = qchan::von_neumann_entropy(&channel.apply(&rho)?);
    let h_t = entropy_wrt_channel(&channel, &theta, &rho)?;
    let (oracle_e, _) = oracle_entropy_roof(&channel, &rho, &cfg)?;
    let oracle_c = oracle_concurrence(&channel, &rho, &cfg)?;

    let gap_c = oracle_c - c_t;
    let gap_e = oracle_e - e_t;
    let pass = gap_c.abs() <= pass_tol && gap_e.abs() <= pass_tol;
    println!(
        "{{\"c_t\": {}, \"e_t\": {}, \"s_t\": {}, \"h_t\": {}, \"h_t_raw\": {}, \"oracle_c_t\": {}, \"oracle_e_t\": {}, \"gap_c\": {}, \"gap_e\": {}, \"tolerance\": {}, \"pass\": {}}}",
        fmt_f64(c_t),
        fmt_f64(e_t),
        fmt_f64(s_t),
        fmt_f64(h_t),
        fmt_f64(s_t - e_t),
        fmt_f64(oracle_c),
        fmt_f64(oracle_e),
        fmt_f64(gap_c),
        fmt_f64(gap_e),
        fmt_f64(pass_tol),
        pass
    );
    if gap_c < -1e-9 || gap_e < -1e-9 {
        return Err(CliError::numerical(format!(
            "a decomposition beat the closed form (gap_c {gap_c:.3e}, gap_e {gap_e:.3e})"
        )));
    }
    Ok(())
}
