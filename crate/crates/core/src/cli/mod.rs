//! Command-line front end for the `sta` binary.

pub mod commands;
pub mod config;
pub mod format;
pub mod verify;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::units::TrapSpec;

/// Trap frequencies used by the figure presets (Hz).
pub const PRESET_OMEGA0_HZ: f64 = 2500.0;
pub const PRESET_OMEGAF_HZ: f64 = 25.0;

#[derive(Parser, Debug)]
#[command(name = "sta", version, about = "Design and analyse shortcut-to-adiabaticity trap expansions")]
#[command(args_override_self = true)]
pub struct Cli {
    /// key = value file mirroring the long flags; command-line flags win
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Sample b, its derivatives and omega^2 for one protocol
    Protocol(ProtocolArgs),
    /// Energy trace and summary (averages, virial check, bounds)
    Energy(ProtocolArgs),
    /// Time-averaged energy against protocol time for several families
    Sweep(SweepArgs),
    /// Relative power of the quintic and the power-optimised septic
    Power(PowerArgs),
    /// Run the built-in invariant checks
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Preset {
    /// 2500 Hz -> 25 Hz, total-energy sweep
    Fig1,
    /// 2500 Hz -> 25 Hz, non-adiabatic energy sweep
    Fig3,
    /// 2500 Hz -> 25 Hz, t_f = 8 ms, relative power
    Fig4,
}

#[derive(Args, Debug, Clone, Default)]
pub struct TrapArgs {
    /// Initial trap frequency in Hz (multiplied by 2 pi)
    #[arg(long)]
    pub omega0_hz: Option<f64>,
    /// Final trap frequency in Hz (multiplied by 2 pi)
    #[arg(long)]
    pub omegaf_hz: Option<f64>,
    /// Expansion factor sqrt(omega0/omega_f); selects dimensionless units
    #[arg(long)]
    pub gamma: Option<f64>,
    /// Mode index
    #[arg(long, default_value_t = 0)]
    pub n: u32,
    #[arg(long, value_enum)]
    pub preset: Option<Preset>,
}

#[derive(Args, Debug, Clone, Default)]
pub struct TimeArgs {
    /// Protocol duration in seconds (SI trap only)
    #[arg(long)]
    pub tf: Option<f64>,
    /// Protocol duration in units of 1/omega0
    #[arg(long)]
    pub tf_dimensionless: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Quintic,
    Septic,
    QuasiOptimal,
    Dirac,
    Hybrid,
    Linear,
    BangBang,
    BangBangNa,
    ConstantPower,
}

#[derive(Args, Debug, Clone, Default)]
pub struct ShapeArgs {
    #[arg(long, value_enum)]
    pub family: Option<FamilyArg>,
    /// Septic s^3 coefficient
    #[arg(long, allow_hyphen_values = true)]
    pub c3: Option<f64>,
    /// Septic s^4 coefficient
    #[arg(long, allow_hyphen_values = true)]
    pub c4: Option<f64>,
    /// Final bang-bang frequency for the free-expansion variant (units of omega0)
    #[arg(long)]
    pub beta: Option<f64>,
    /// First bang-bang frequency, omega^2 = -omega1^2 (units of omega0)
    #[arg(long)]
    pub omega1: Option<f64>,
    /// Second bang-bang frequency (units of omega0)
    #[arg(long)]
    pub omega2: Option<f64>,
    /// Launch cap duration (same unit as the protocol time)
    #[arg(long)]
    pub tau_l: Option<f64>,
    /// Stopping cap duration (same unit as the protocol time)
    #[arg(long)]
    pub tau_s: Option<f64>,
}

#[derive(Args, Debug, Clone, Default)]
pub struct ProtocolArgs {
    #[command(flatten)]
    pub trap: TrapArgs,
    #[command(flatten)]
    pub time: TimeArgs,
    #[command(flatten)]
    pub shape: ShapeArgs,
    /// Grid nodes
    #[arg(long, default_value_t = crate::grid::DEFAULT_NODES)]
    pub grid: usize,
    /// Output file (stdout when absent)
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Quantity {
    /// Time-averaged total energy
    Energy,
    /// Time-averaged non-adiabatic energy (ground state)
    Nonadiabatic,
}

#[derive(Args, Debug, Clone, Default)]
pub struct SweepArgs {
    #[command(flatten)]
    pub trap: TrapArgs,
    /// Single family to sweep (default: the families of the chosen quantity)
    #[arg(long, value_enum)]
    pub family: Option<FamilyArg>,
    #[arg(long, value_enum)]
    pub quantity: Option<Quantity>,
    /// Shortest protocol time (seconds for an SI trap)
    #[arg(long)]
    pub tf_min: Option<f64>,
    /// Longest protocol time (seconds for an SI trap)
    #[arg(long)]
    pub tf_max: Option<f64>,
    #[arg(long, default_value_t = 60)]
    pub points_per_decade: usize,
    #[arg(long, default_value_t = crate::grid::DEFAULT_NODES)]
    pub grid: usize,
    /// Output directory, one CSV per family
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
}

#[derive(Args, Debug, Clone, Default)]
pub struct PowerArgs {
    #[command(flatten)]
    pub trap: TrapArgs,
    #[command(flatten)]
    pub time: TimeArgs,
    /// Use these septic coefficients instead of optimising
    #[arg(long, allow_hyphen_values = true, requires = "c4")]
    pub c3: Option<f64>,
    #[arg(long, allow_hyphen_values = true, requires = "c3")]
    pub c4: Option<f64>,
    #[arg(long, default_value_t = crate::optimize::POWER_PEAK_NODES)]
    pub grid: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FaultArg {
    /// Flip the sign of b'^2 in the partially integrated energy
    Eq14Sign,
}

#[derive(Args, Debug, Clone, Default)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = crate::grid::DEFAULT_NODES)]
    pub grid: usize,
    /// Deliberately break one formula (self-test of the checks)
    #[arg(long, value_enum, hide = true)]
    pub inject_fault: Option<FaultArg>,
}

/// A trap resolved from flags: SI or dimensionless.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Trap {
    pub spec: TrapSpec,
    pub si: bool,
}

impl Trap {
    pub fn resolve(args: &TrapArgs) -> Result<Self> {
        let si_given = args.omega0_hz.is_some() || args.omegaf_hz.is_some();
        match (si_given, args.gamma) {
            (true, Some(_)) => {
                Err(Error::Config("give either --omega0-hz/--omegaf-hz or --gamma, not both".into()))
            }
            (true, None) => {
                let (Some(f0), Some(ff)) = (args.omega0_hz, args.omegaf_hz) else {
                    return Err(Error::Config("an SI trap needs both --omega0-hz and --omegaf-hz".into()));
                };
                Ok(Self { spec: TrapSpec::from_hz(f0, ff, args.n)?, si: true })
            }
            (false, Some(g)) => Ok(Self { spec: TrapSpec::dimensionless(g, args.n)?, si: false }),
            (false, None) => match args.preset {
                Some(_) => Ok(Self {
                    spec: TrapSpec::from_hz(PRESET_OMEGA0_HZ, PRESET_OMEGAF_HZ, args.n)?,
                    si: true,
                }),
                None => Err(Error::Config(
                    "no trap given: use --omega0-hz/--omegaf-hz, --gamma or --preset".into(),
                )),
            },
        }
    }

    /// Convert a user time (seconds if SI) to `omega0 t`.
    pub fn to_tau(&self, t: f64) -> f64 {
        if self.si {
            self.spec.to_dimensionless(t)
        } else {
            t
        }
    }

    /// Convert `omega0 t` back to the user's time unit.
    pub fn from_tau(&self, tau: f64) -> f64 {
        if self.si {
            self.spec.from_dimensionless(tau)
        } else {
            tau
        }
    }

    pub fn time_unit(&self) -> &'static str {
        if self.si {
            "s"
        } else {
            "1/omega0"
        }
    }
}

/// Resolve the protocol time in units of `1/omega0`; `preset_tf` (seconds)
/// applies when neither flag is given.
pub fn resolve_tau(trap: &Trap, time: &TimeArgs, preset_tf: Option<f64>) -> Result<Option<f64>> {
    match (time.tf, time.tf_dimensionless) {
        (Some(_), Some(_)) => Err(Error::Config("give either --tf or --tf-dimensionless, not both".into())),
        (Some(t), None) => {
            if !trap.si {
                return Err(Error::Config(
                    "--tf is in seconds and needs an SI trap; use --tf-dimensionless".into(),
                ));
            }
            Ok(Some(trap.spec.to_dimensionless(t)))
        }
        (None, Some(tau)) => Ok(Some(tau)),
        (None, None) => Ok(preset_tf.filter(|_| trap.si).map(|t| trap.spec.to_dimensionless(t))),
    }
}

/// Parse and run; returns the process exit code.
pub fn main_with_args<I: IntoIterator<Item = OsString>>(args: I) -> i32 {
    let args = match config::expand(args.into_iter().collect()) {
        Ok(a) => a,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match run(&cli.command, &mut out) {
        Ok(code) => code,
        // reader went away (e.g. `| head`); nothing left to report
        Err(Error::Config(msg)) if msg == BROKEN_PIPE => 0,
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e}");
            1
        }
    }
}

/// Execute a parsed command, writing human-readable output to `out`.
pub fn run<W: Write>(command: &Command, out: &mut W) -> Result<i32> {
    match command {
        Command::Protocol(a) => commands::protocol(a, out).map(|_| 0),
        Command::Energy(a) => commands::energy(a, out).map(|_| 0),
        Command::Sweep(a) => commands::sweep(a, out).map(|_| 0),
        Command::Power(a) => commands::power(a, out).map(|_| 0),
        Command::Verify(a) => {
            let opts = verify::VerifyOptions {
                nodes: a.grid,
                fault: a.inject_fault.map(|FaultArg::Eq14Sign| verify::Fault::Eq14SignFlip),
            };
            let report = verify::run(&opts);
            write!(out, "{}", report.render()).map_err(io_error)?;
            Ok(if report.all_passed() { 0 } else { 1 })
        }
    }
}

const BROKEN_PIPE: &str = "broken pipe";

pub(crate) fn io_error(e: std::io::Error) -> Error {
    if e.kind() == std::io::ErrorKind::BrokenPipe {
        return Error::Config(BROKEN_PIPE.into());
    }
    Error::Config(format!("i/o error: {e}"))
}
