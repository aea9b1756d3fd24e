use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use distsense::cli::{
    bounds_csv, cmd_bounds, cmd_simulate, cmd_sweep, noon_csv, noon_table, sweep_csv,
    thread_limit, OutputFormat, ScenarioConfig,
};
use distsense::{Error, Result};

#[derive(Parser)]
#[command(name = "distsense", version, about = "Phase-sensing bounds for signed weighted sums")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print closed-form bounds and the configured scheme's QCRB/CCRB.
    Bounds {
        #[arg(long)]
        config: PathBuf,
    },
    /// Optimize two-mode probes over squeezing ratios and write a CSV.
    Sweep {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Sample homodyne records, estimate, and write a JSON report.
    Simulate {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Print the NOON/NNOO table up to `n` photons.
    Noon {
        #[arg(long)]
        n: usize,
    },
}

fn write(path: &PathBuf, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Config(format!("cannot write {}: {e}", path.display())))
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Bounds { config } => {
            let cfg = ScenarioConfig::from_path(&config)?;
            let rows = cmd_bounds(&cfg)?;
            let json = matches!(cfg.output.as_ref().map(|o| o.format), Some(OutputFormat::Json));
            if json {
                let text = serde_json::to_string_pretty(&rows).map_err(|e| Error::Config(e.to_string()))?;
                println!("{text}");
            } else {
                print!("{}", bounds_csv(&rows));
            }
        }
        Command::Sweep { config, out } => {
            let cfg = ScenarioConfig::from_path(&config)?;
            let rows = cmd_sweep(&cfg)?;
            write(&out, &sweep_csv(&rows))?;
            let failed = rows.iter().filter(|r| !r.converged()).count();
            if failed > 0 {
                eprintln!("warning: {failed} of {} sweep points did not converge", rows.len());
            }
        }
        Command::Simulate { config, out } => {
            let cfg = ScenarioConfig::from_path(&config)?;
            let report = cmd_simulate(&cfg)?;
            let mut text = serde_json::to_string_pretty(&report).map_err(|e| Error::Config(e.to_string()))?;
            text.push('\n');
            write(&out, &text)?;
        }
        Command::Noon { n } => print!("{}", noon_csv(&noon_table(n)?)),
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = thread_limit().and_then(|limit| {
        let mut builder = rayon::ThreadPoolBuilder::new();
        if let Some(n) = limit {
            builder = builder.num_threads(n);
        }
        let pool = builder
            .build()
            .map_err(|e| Error::NumericalFailure(format!("thread pool: {e}")))?;
        pool.install(|| run(cli))
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
