use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use qpurity::sweep::{preset, run_experiment, validate_point, ExperimentConfig, ExperimentKind};
use qpurity::Error;

/// Driven-qubit gate purity experiments.
#[derive(Parser)]
#[command(name = "qpurity", version, about)]
struct Cli {
    /// Override the output CSV path from the config.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Worker threads for grid evaluation (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the experiment described by a TOML config file.
    Run {
        /// Path to the config file.
        config: PathBuf,
    },
    /// Run a named built-in experiment (fig2..fig6, quantum_dot).
    Preset {
        /// Preset name.
        name: String,
        /// Print the preset's config as TOML instead of running it.
        #[arg(long)]
        emit_config: bool,
    },
    /// Check a config file and, for single-point runs, compare the numerical
    /// pipeline against the analytic rate.
    Validate {
        /// Path to the config file.
        config: PathBuf,
    },
}

fn load_config(path: &PathBuf) -> Result<ExperimentConfig, Error> {
    let text = std::fs::read_to_string(path)?;
    ExperimentConfig::from_toml(&text)
}

fn warn_regime(config: &ExperimentConfig) {
    if let Ok(bath) = config.bath_spec() {
        if bath.beyond_weak_coupling() {
            eprintln!(
                "warning: alpha = {} is outside the weak-coupling regime; \
                 second-order dissipative results are unreliable",
                bath.alpha
            );
        }
    }
}

fn execute(cli: Cli) -> Result<(), Error> {
    #[cfg(feature = "parallel")]
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Error::Config(format!("cannot configure thread pool: {e}")))?;
    }
    #[cfg(not(feature = "parallel"))]
    if let Some(n) = cli.threads {
        if n != 1 {
            eprintln!("warning: built without the 'parallel' feature; running single-threaded");
        }
    }

    match cli.command {
        Command::Run { config } => {
            let cfg = load_config(&config)?;
            warn_regime(&cfg);
            let path = run_experiment(&cfg, cli.output.as_deref())?;
            eprintln!("wrote {}", path.display());
        }
        Command::Preset { name, emit_config } => {
            let cfg = preset(&name)?;
            if emit_config {
                print!("{}", cfg.to_toml());
                return Ok(());
            }
            warn_regime(&cfg);
            let path = run_experiment(&cfg, cli.output.as_deref())?;
            eprintln!("wrote {}", path.display());
        }
        Command::Validate { config } => {
            let cfg = load_config(&config)?;
            warn_regime(&cfg);
            if cfg.experiment.kind == ExperimentKind::SinglePoint {
                let r = validate_point(&cfg)?;
                println!("duration            {:.11e}", r.duration);
                println!("analytic purity loss {:.11e}", r.analytic_loss);
                println!("numeric purity loss  {:.11e}", r.numeric_loss);
                println!("numeric decay rate   {:.11e}", r.numeric_rate);
                if r.analytic_loss.is_finite() && r.analytic_loss != 0.0 {
                    println!(
                        "relative deviation   {:+.3e}",
                        r.numeric_loss / r.analytic_loss - 1.0
                    );
                }
            } else {
                println!("config ok ({} grid points)", cfg.grid().len());
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e @ Error::Config(_)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
