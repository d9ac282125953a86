use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use sedwit::commands::{self, GridSpec, Input, Kind, SweepArgs};
use sedwit::format::sig12;
use sedwit::{CliError, Result};

/// Entanglement witnesses in single-experiment-detectable form.
#[derive(Parser)]
#[command(name = "sedwit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Ghz,
    W,
    Generic,
}

impl From<KindArg> for Kind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Ghz => Kind::Ghz,
            KindArg::W => Kind::W,
            KindArg::Generic => Kind::Generic,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum InputArg {
    Pseudopure,
    Mixed,
    Random,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Witness constant, trace, detection threshold and pseudopure expectation.
    Witness {
        #[arg(long, value_enum, default_value = "ghz")]
        kind: KindArg,
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Override the witness constant.
        #[arg(long)]
        c: Option<f64>,
        /// Pseudopure fraction of the evaluated state.
        #[arg(long)]
        epsilon: Option<f64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Checks the SED equality on random diagonal outputs and the V' diagonal.
    SedVerify {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Ancilla-qubit readout compared against the direct trace.
    Ancilla {
        #[arg(long, value_enum, default_value = "ghz")]
        kind: KindArg,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long)]
        c: Option<f64>,
        /// Ancilla polarization.
        #[arg(long)]
        p: f64,
        #[arg(long, value_enum, default_value = "pseudopure")]
        input: InputArg,
        #[arg(long, default_value_t = 1.0)]
        epsilon: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Gate counts of the expanded V'† circuit with a log-log fit.
    Gatecount {
        #[arg(long, default_value_t = 4)]
        n_min: usize,
        #[arg(long, default_value_t = 10)]
        n_max: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Noisy (p, h) sweep written as CSV.
    Sweep {
        #[arg(long, value_enum, default_value = "ghz")]
        kind: KindArg,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 0.5)]
        p_min: f64,
        #[arg(long, default_value_t = 1.0)]
        p_max: f64,
        #[arg(long, default_value_t = 0.05)]
        p_step: f64,
        #[arg(long, default_value_t = 0.5)]
        h_min: f64,
        #[arg(long, default_value_t = 1.0)]
        h_max: f64,
        #[arg(long, default_value_t = 0.05)]
        h_step: f64,
        /// Leave the register unentangled.
        #[arg(long)]
        separable: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, short)]
        output: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Prints the V'† circuit, or summarizes a circuit file.
    Circuit {
        #[arg(long, required_unless_present = "input")]
        n: Option<usize>,
        /// Expand multi-controlled gates.
        #[arg(long)]
        expand: bool,
        /// Circuit file to read instead.
        #[arg(long, conflicts_with_all = ["n", "expand"])]
        input: Option<PathBuf>,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

fn emit<T: Serialize>(report: &T, format: Format) -> Result<()> {
    let value = serde_json::to_value(report)?;
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&value)?),
        Format::Text => print_flat(&value, ""),
    }
    Ok(())
}

fn print_flat(v: &serde_json::Value, prefix: &str) {
    use serde_json::Value;
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                print_flat(x, &key);
            }
        }
        Value::Array(items) => {
            for (i, x) in items.iter().enumerate() {
                print_flat(x, &format!("{prefix}[{i}]"));
            }
        }
        Value::Number(n) if n.is_f64() => println!("{prefix}: {}", sig12(n.as_f64().unwrap())),
        Value::Null => println!("{prefix}: none"),
        Value::String(x) => println!("{prefix}: {x}"),
        other => println!("{prefix}: {other}"),
    }
}

fn verdict(passed: bool, what: &str) -> Result<()> {
    if passed {
        Ok(())
    } else {
        Err(CliError::Verification(what.into()))
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Witness {
            kind,
            n,
            c,
            epsilon,
            seed,
            format,
        } => emit(&commands::witness(kind.into(), n, c, epsilon, seed)?, format),
        Command::SedVerify { n, trials, seed, format } => {
            let r = commands::sed_verify(n, trials, seed)?;
            emit(&r, format)?;
            verdict(r.passed, "SED equality outside tolerance")
        }
        Command::Ancilla {
            kind,
            n,
            c,
            p,
            input,
            epsilon,
            seed,
            format,
        } => {
            let input = match input {
                InputArg::Pseudopure => Input::Pseudopure,
                InputArg::Mixed => Input::MaximallyMixed,
                InputArg::Random => Input::Random,
            };
            let r = commands::ancilla(kind.into(), n, c, p, input, epsilon, seed)?;
            emit(&r, format)?;
            verdict(r.passed, "ancilla readout disagrees with the direct trace")
        }
        Command::Gatecount { n_min, n_max, format } => {
            let r = commands::gatecount(n_min, n_max)?;
            if format == Format::Json {
                return emit(&r, format);
            }
            println!("{:>4} {:>10} {:>8}", "n", "G(n)", "gates");
            for row in &r.rows {
                println!("{:>4} {:>10} {:>8}", row.n, row.gates, row.gates_before_expansion);
            }
            if let Some(e) = r.exponent {
                println!("exponent: {}", sig12(e));
            }
            Ok(())
        }
        Command::Sweep {
            kind,
            n,
            p_min,
            p_max,
            p_step,
            h_min,
            h_max,
            h_step,
            separable,
            seed,
            output,
            format,
        } => {
            let args = SweepArgs {
                kind: kind.into(),
                n,
                p: GridSpec {
                    min: p_min,
                    max: p_max,
                    step: p_step,
                },
                h: GridSpec {
                    min: h_min,
                    max: h_max,
                    step: h_step,
                },
                separable,
                seed,
                output,
            };
            emit(&commands::run_sweep(&args)?, format)
        }
        Command::Circuit { n, expand, input, output } => {
            if let Some(path) = input {
                let r = commands::circuit_info(&fs::read_to_string(path)?)?;
                return emit(&r, Format::Text);
            }
            let text = commands::circuit_text(n.expect("required by clap"), expand)?;
            match output {
                Some(path) => fs::write(path, text)?,
                None => print!("{text}"),
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("sedwit: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
