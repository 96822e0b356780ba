use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use reconfig_calc_core::{Calculus, MatchMode, DEFAULT_STATE_BOUND, DEFAULT_UNFOLD_DEPTH};

mod commands;
mod input;

#[derive(Parser)]
#[command(
    name = "reconfig-calc",
    version,
    about = "Parse, run and analyse CCS^dp and Webpi-infinity models"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a model and print its normal form.
    Parse {
        file: String,
        #[command(flatten)]
        config: Config,
    },
    /// Follow one run of silent steps.
    Trace {
        file: String,
        #[command(flatten)]
        config: Config,
        /// Maximum number of steps.
        #[arg(long, default_value_t = 20)]
        steps: usize,
        #[arg(long, value_enum, default_value_t = StrategyArg::Random)]
        strategy: StrategyArg,
        /// Comma-separated successor indices to take at each step; overrides
        /// --strategy.
        #[arg(long, value_delimiter = ',')]
        script: Option<Vec<usize>>,
    },
    /// Explore the state space and report stuck states and termination.
    Check {
        file: String,
        #[command(flatten)]
        config: Config,
    },
    /// Decide strong bisimilarity of the main terms of two models.
    Bisim {
        file1: String,
        file2: String,
        #[command(flatten)]
        config: Config,
    },
    /// Print the transition system of a model.
    Lts {
        file: String,
        #[command(flatten)]
        config: Config,
        /// Only silent steps (tau, rcf and Webpi reductions).
        #[arg(long)]
        silent: bool,
    },
}

#[derive(Args, Clone)]
pub struct Config {
    /// Calculus of the input; defaults to the file's `# calculus:` line.
    #[arg(long, value_enum)]
    calculus: Option<CalculusArg>,
    /// How fraction denominators are matched.
    #[arg(long, value_enum, default_value_t = ModeArg::Syntactic)]
    mode: ModeArg,
    /// Maximum number of states explored.
    #[arg(long, env = "RECONFIG_CALC_BOUND", default_value_t = DEFAULT_STATE_BOUND)]
    bound: usize,
    /// Guards under which constants are unfolded in congruence matching.
    #[arg(long, default_value_t = DEFAULT_UNFOLD_DEPTH)]
    unfold_depth: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

impl Config {
    fn calculus(&self) -> Option<Calculus> {
        self.calculus.map(|c| match c {
            CalculusArg::Ccsdp => Calculus::CcsDp,
            CalculusArg::Webpi => Calculus::WebPi,
        })
    }

    fn match_mode(&self) -> MatchMode {
        match self.mode {
            ModeArg::Syntactic => MatchMode::Syntactic,
            ModeArg::Congruence => MatchMode::Congruence {
                unfold_depth: self.unfold_depth,
            },
            ModeArg::Bisim => MatchMode::Bisim {
                state_bound: self.bound,
            },
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum CalculusArg {
    Ccsdp,
    Webpi,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Syntactic,
    Congruence,
    Bisim,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Random,
    First,
}

/// Printed output and exit status of a command.
pub struct Outcome {
    pub stdout: String,
    pub code: u8,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Parse { file, config } => commands::parse(file, config),
        Command::Trace {
            file,
            config,
            steps,
            strategy,
            script,
        } => {
            let strategy = match (script, strategy) {
                (Some(s), _) => reconfig_calc_core::Strategy::Scripted(s.clone()),
                (None, StrategyArg::Random) => reconfig_calc_core::Strategy::Random,
                (None, StrategyArg::First) => reconfig_calc_core::Strategy::FirstEnabled,
            };
            commands::trace(file, config, strategy, *steps)
        }
        Command::Check { file, config } => commands::check(file, config),
        Command::Bisim {
            file1,
            file2,
            config,
        } => commands::bisim(file1, file2, config),
        Command::Lts {
            file,
            config,
            silent,
        } => commands::lts(file, config, *silent),
    };
    match result {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.stdout.as_bytes());
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(commands::error_code(&e))
        }
    }
}
