//! `phifde` — solve two-term weighted-Caputo initial value problems from a
//! config file: linear resolvent solutions, monotone extremal iterations,
//! analytic bounds, and bundled demonstration runs.

mod commands;
mod config;
mod output;

use std::path::PathBuf;

use clap::{Parser, Subcommand};

use commands::{resolve_out_dir, CliError};

#[derive(Parser)]
#[command(
    name = "phifde",
    version,
    about = "Two-term weighted-Caputo fractional IVP toolkit",
    propagate_version = true
)]
struct Cli {
    /// Output directory (overrides the config's output_dir; default `.`)
    #[arg(long, global = true, value_name = "DIR")]
    out: Option<PathBuf>,

    /// Print the parsed configuration in canonical form and exit
    #[arg(long, global = true)]
    dump_config: bool,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Solve the linear problem with a state-free forcing H(t)
    SolveLinear {
        /// Path to the run configuration
        config: PathBuf,
        /// Forcing expression in t, e.g. "sin(t) + 1"
        #[arg(long, value_name = "EXPR")]
        forcing: String,
        /// Check a constant forcing against the closed-form solution
        #[arg(long)]
        verify: bool,
    },
    /// Run the monotone iteration from the configured lower/upper seeds
    Extremal {
        /// Path to the run configuration
        config: PathBuf,
        /// Skip the seed (lower/upper solution) verification
        #[arg(long)]
        force: bool,
    },
    /// Print the analytic bound values for the configured problem
    Bounds {
        /// Path to the run configuration
        config: PathBuf,
        /// Initial-value perturbation for the dependence bound
        #[arg(long, value_name = "D")]
        delta: Option<String>,
    },
    /// Regenerate the bundled demonstration tables and figure data
    Reproduce {
        /// Which bundled problem: example1 or example2
        which: String,
    },
}

fn init_thread_pool() -> Result<(), CliError> {
    let Some(raw) = std::env::var_os("PHIFDE_THREADS") else {
        return Ok(());
    };
    let text = raw.to_string_lossy();
    let threads: usize = text.parse().map_err(|_| {
        CliError::Config(format!(
            "PHIFDE_THREADS: expected a positive integer, got `{text}`"
        ))
    })?;
    if threads == 0 {
        return Err(CliError::Config(
            "PHIFDE_THREADS: expected a positive integer, got `0`".into(),
        ));
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| CliError::Numeric(format!("thread pool setup failed: {e}")))
}

fn run(cli: Cli) -> Result<(), CliError> {
    init_thread_pool()?;
    match &cli.cmd {
        Cmd::SolveLinear {
            config,
            forcing,
            verify,
        } => {
            let cfg = config::load(config)?;
            if cli.dump_config {
                print!("{}", config::dump(&cfg));
                return Ok(());
            }
            let out = resolve_out_dir(cli.out.as_deref(), Some(&cfg));
            commands::cmd_solve_linear(&cfg, forcing, *verify, &out)
        }
        Cmd::Extremal { config, force } => {
            let cfg = config::load(config)?;
            if cli.dump_config {
                print!("{}", config::dump(&cfg));
                return Ok(());
            }
            let out = resolve_out_dir(cli.out.as_deref(), Some(&cfg));
            commands::cmd_extremal(&cfg, *force, &out)
        }
        Cmd::Bounds { config, delta } => {
            let cfg = config::load(config)?;
            if cli.dump_config {
                print!("{}", config::dump(&cfg));
                return Ok(());
            }
            let out = resolve_out_dir(cli.out.as_deref(), Some(&cfg));
            commands::cmd_bounds(&cfg, delta.as_deref(), &out)
        }
        Cmd::Reproduce { which } => {
            let plan = commands::reproduce_plan(which)?;
            if cli.dump_config {
                let cfg = config::parse_config(plan.config_text)?;
                print!("{}", config::dump(&cfg));
                return Ok(());
            }
            let out = resolve_out_dir(cli.out.as_deref(), None);
            commands::cmd_reproduce(which, &out)
        }
    }
}

fn main() {
    let cli = Cli::parse();
    if let Err(e) = run(cli) {
        eprintln!("error: {}", e.message());
        std::process::exit(e.exit_code());
    }
}
