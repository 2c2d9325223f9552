use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use monogamy::harness::{
    cmd_family, cmd_fuzz, cmd_hunt, cmd_measure, emit, Command, HuntMode, HuntParams, HuntStart,
    OutputFormat, RunConfig, SEED_ENV,
};
use monogamy::inequalities::{InequalityReport, DEFAULT_TOLERANCE};

#[derive(Parser)]
#[command(version, about = "Entanglement monogamy measurements and fuzzing")]
struct Cli {
    /// Verdict tolerance.
    #[arg(long = "tol", global = true, default_value_t = DEFAULT_TOLERANCE)]
    tolerance: f64,
    /// Output file; stdout when absent.
    #[arg(long = "out", global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, default_value = "json")]
    format: OutputFormat,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Every measure and verdict for one state file.
    Measure {
        #[arg(long)]
        state: PathBuf,
    },
    /// Seeded campaign over Haar-random states.
    Fuzz {
        #[arg(long)]
        qubits: usize,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, env = SEED_ENV, default_value_t = 0)]
        seed: u64,
    },
    /// Random-restart search for extreme discriminants.
    Hunt {
        #[arg(long)]
        qubits: usize,
        #[arg(long, default_value_t = 20)]
        restarts: usize,
        #[arg(long, default_value_t = 2000)]
        iters: usize,
        #[arg(long, default_value = "min")]
        mode: HuntMode,
        /// Start every restart near the W state.
        #[arg(long)]
        from_w: bool,
        #[arg(long, default_value_t = 0.1)]
        step: f64,
        #[arg(long, env = SEED_ENV, default_value_t = 0)]
        seed: u64,
    },
    /// GHZ, W and product rows from three qubits up.
    Family {
        #[arg(long)]
        max_qubits: usize,
    },
}

fn write_out(
    out: &Option<PathBuf>,
    f: impl FnOnce(&mut dyn Write) -> monogamy::Result<()>,
) -> monogamy::Result<()> {
    match out {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path)?);
            f(&mut w)?;
            w.flush()?;
        }
        None => f(&mut io::stdout().lock())?,
    }
    Ok(())
}

fn run(cli: Cli) -> monogamy::Result<bool> {
    let fmt = cli.format;
    let violated = match cli.command {
        Cmd::Measure { state } => {
            let mut cfg = RunConfig::new(Command::Measure, 2);
            cfg.tolerance = cli.tolerance;
            let doc = cmd_measure(&state, &cfg)?;
            write_out(&cli.out, |w| emit(&doc, &doc.reports, fmt, w))?;
            doc.any_violation()
        }
        Cmd::Fuzz {
            qubits,
            samples,
            seed,
        } => {
            let mut cfg = RunConfig::fuzz(qubits, samples, seed);
            cfg.tolerance = cli.tolerance;
            cfg.output_format = fmt;
            let doc = cmd_fuzz(&cfg)?;
            eprintln!(
                "fuzz: {} samples of {} qubits in {:.2?}",
                doc.samples, doc.n_qubits, doc.wall_time
            );
            let worst: Vec<&InequalityReport> = doc.checkers.iter().map(|c| &c.worst).collect();
            write_out(&cli.out, |w| emit(&doc, worst, fmt, w))?;
            doc.any_violation()
        }
        Cmd::Hunt {
            qubits,
            restarts,
            iters,
            mode,
            from_w,
            step,
            seed,
        } => {
            let params = HuntParams {
                restarts,
                iters,
                mode,
                start: if from_w {
                    HuntStart::W
                } else {
                    HuntStart::Haar
                },
                initial_step: step,
                ..HuntParams::default()
            };
            let mut cfg = RunConfig::hunt(qubits, params, seed);
            cfg.tolerance = cli.tolerance;
            let doc = cmd_hunt(&cfg)?;
            eprintln!(
                "hunt ({}): best discriminant {:.12} at {} qubits in {:.2?}",
                doc.mode, doc.best_value, doc.n_qubits, doc.wall_time
            );
            write_out(&cli.out, |w| emit(&doc, doc.reports(), fmt, w))?;
            doc.any_violation()
        }
        Cmd::Family { max_qubits } => {
            let doc = cmd_family(max_qubits, cli.tolerance)?;
            let reports = doc.rows.iter().flat_map(|r| &r.reports);
            write_out(&cli.out, |w| emit(&doc, reports, fmt, w))?;
            doc.any_violation()
        }
    };
    Ok(violated)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => {
            eprintln!("at least one relation was violated");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
