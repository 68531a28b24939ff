//! Command-line front end. [`run`] takes its output streams as arguments so
//! the commands are testable in-process; the binary only forwards the exit code.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 usage or parse error.

use std::f64::consts::PI;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::borel::{BorelSet, QubitClass};
use crate::error::{Error, Result};
use crate::fuzzylogic::{State, System};
use crate::gates::Gate;
use crate::qubit::{
    membership_qubit, membership_qubit_oracle, parse_vec3, pure_state_at_angle, Observable2,
    QubitState,
};
use crate::qutrit::{nonlocal_transform, QutritBloch};
use crate::report::format_number;
use crate::sampling::DEFAULT_SEED;
use crate::tolerance::Tolerances;
use crate::twoqubit::{membership_two, membership_two_oracle, BlochMatrix};
use crate::vec3::Vec3;
use crate::verify::{run_suite_with, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "fuzzybit", version, about = "Membership functions of the qubit quantum logic")]
pub struct Cli {
    /// Sampling seed, decimal or 0x-prefixed hex.
    #[arg(long, global = true, env = "FUZZYBIT_SEED", value_parser = parse_seed)]
    pub seed: Option<u64>,
    /// Print 17 significant digits instead of 15.
    #[arg(long, global = true)]
    pub full_precision: bool,
    /// Tolerance override `NAME=VALUE`, repeatable (e.g. `oracle=1e-10`).
    #[arg(long = "tol", global = true, value_name = "NAME=VALUE")]
    pub tolerances: Vec<String>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one membership function and compare with the trace oracle.
    Membership(MembershipArgs),
    /// Emit `theta,f` rows of `f = 1/2 + v cos θ` on `[0, π]`.
    Curve(CurveArgs),
    /// Run a verification suite; one line per check.
    Verify(VerifyArgs),
    /// Qutrit operations.
    #[command(subcommand)]
    Qutrit(QutritCommand),
    /// Gate operations.
    #[command(subcommand)]
    Gate(GateCommand),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SystemArg {
    Qubit,
    Twoqubit,
}

impl From<SystemArg> for System {
    fn from(s: SystemArg) -> Self {
        match s {
            SystemArg::Qubit => System::Qubit,
            SystemArg::Twoqubit => System::TwoQubit,
        }
    }
}

#[derive(Debug, Args)]
pub struct MembershipArgs {
    #[arg(long, value_enum, default_value = "qubit")]
    pub system: SystemArg,
    /// Axis of the first (or only) qubit, `x,y,z`.
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<String>,
    /// Axis of the second qubit.
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<String>,
    /// Qubit Bloch vector `x,y,z` (radius at most 1/2).
    #[arg(long, allow_hyphen_values = true)]
    pub rho: Option<String>,
    /// State file: one line `x y z`, or four rows of the Bloch matrix.
    #[arg(long)]
    pub state: Option<PathBuf>,
    /// Use the pure qubit state `cos α|0⟩ + sin α|1⟩`.
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<f64>,
    /// Borel class: `0`, `+`, `-`, `+-` for a qubit; `++`, `+-`, `-+`, `--`
    /// or a comma pair such as `+,+-` for two qubits.
    #[arg(long, allow_hyphen_values = true)]
    pub class: Option<String>,
    /// Observable `a0;a1,a2,a3` of the first qubit; the class is then read off `--borel`.
    #[arg(long, allow_hyphen_values = true)]
    pub observable: Option<String>,
    /// Observable of the second qubit.
    #[arg(long, allow_hyphen_values = true)]
    pub observable_b: Option<String>,
    /// Borel set such as `[0,1)u{5}`.
    #[arg(long, allow_hyphen_values = true)]
    pub borel: Option<String>,
}

#[derive(Debug, Args)]
pub struct CurveArgs {
    /// Bloch-vector length `v` in `[0, 1/2]`.
    #[arg(long)]
    pub rho_norm: f64,
    #[arg(long, default_value_t = 181)]
    pub points: usize,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// lattice, positivity, orthogonality, pykacz, laws, cartan, qutrit, gates or oracle.
    #[arg(long)]
    pub suite: String,
    #[arg(long, value_enum, default_value = "qubit")]
    pub system: SystemArg,
    #[arg(long)]
    pub samples: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum QutritCommand {
    /// Apply the non-local torus action to a qutrit Bloch matrix.
    Evolve(EvolveArgs),
}

#[derive(Debug, Args)]
pub struct EvolveArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub theta1: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub theta2: f64,
    #[arg(long)]
    pub state: PathBuf,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum GateCommand {
    /// Apply NOT, √NOT or CNOT to a state file.
    Apply(ApplyArgs),
}

#[derive(Debug, Args)]
pub struct ApplyArgs {
    /// not, sqrt-not or cnot.
    #[arg(long)]
    pub gate: String,
    #[arg(long)]
    pub state: PathBuf,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn parse_seed(s: &str) -> std::result::Result<u64, String> {
    let t = s.trim().replace('_', "");
    let parsed = match t.strip_prefix("0x").or_else(|| t.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => t.parse(),
    };
    parsed.map_err(|e| format!("invalid seed `{s}`: {e}"))
}

/// Everything a command needs besides its own flags.
#[derive(Debug, Clone, Copy)]
pub struct RunConfig {
    pub seed: u64,
    pub full_precision: bool,
    pub tolerances: Tolerances,
}

enum Failure {
    Usage(String),
    Check,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    let mut tolerances = Tolerances::DEFAULT;
    for spec in &cli.tolerances {
        let parsed = spec
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("expected NAME=VALUE, got `{spec}`")))
            .and_then(|(k, v)| {
                let v = v
                    .parse::<f64>()
                    .map_err(|_| Error::Parse(format!("bad tolerance value `{v}`")))?;
                tolerances.set(k.trim(), v)
            });
        if let Err(e) = parsed {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    }
    let config = RunConfig {
        seed: cli.seed.unwrap_or(DEFAULT_SEED),
        full_precision: cli.full_precision,
        tolerances,
    };
    let result = match &cli.command {
        Command::Membership(a) => cmd_membership(a, &config, out),
        Command::Curve(a) => cmd_curve(a, &config, out),
        Command::Verify(a) => cmd_verify(a, &config, out),
        Command::Qutrit(QutritCommand::Evolve(a)) => cmd_evolve(a, out),
        Command::Gate(GateCommand::Apply(a)) => cmd_apply(a, out),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(Failure::Check) => EXIT_CHECK_FAILED,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn io_error(path: &Path, e: std::io::Error) -> Failure {
    Failure::Usage(format!("{}: {e}", path.display()))
}

fn emit(out: &mut dyn Write, text: &str) -> std::result::Result<(), Failure> {
    out.write_all(text.as_bytes())
        .map_err(|e| Failure::Usage(format!("write failed: {e}")))
}

/// Reads a state file: one line `x y z` is a qubit, four rows a Bloch matrix.
pub fn read_state(path: &Path) -> Result<State> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    parse_state(&text)
}

pub fn parse_state(text: &str) -> Result<State> {
    let lines = text.lines().filter(|l| !l.trim().is_empty()).count();
    match lines {
        1 => Ok(State::Qubit(text.trim().parse()?)),
        4 => Ok(State::TwoQubit(text.parse()?)),
        n => Err(Error::Parse(format!(
            "state file needs 1 line (qubit) or 4 rows (two qubits), found {n}"
        ))),
    }
}

/// The file form of a state, round-trip safe.
pub fn format_state(state: &State) -> String {
    match state {
        State::Qubit(q) => {
            // + 0.0 turns -0 into 0
            let [x, y, z] = q.bloch().map(|v| v + 0.0);
            format!("{x} {y} {z}\n")
        }
        State::TwoQubit(bm) => bm.to_string(),
    }
}

/// Two-qubit class pair: `++`-style for single-eigenvalue classes, or a comma
/// pair of qubit classes.
pub fn parse_class_pair(s: &str) -> Result<(QubitClass, QubitClass)> {
    let t = s.trim();
    if let Some((a, b)) = t.split_once(',') {
        return Ok((a.parse()?, b.parse()?));
    }
    let chars: Vec<char> = t.chars().collect();
    if chars.len() == 2 {
        let one = |c: char| c.to_string().parse::<QubitClass>();
        return Ok((one(chars[0])?, one(chars[1])?));
    }
    Err(Error::Parse(format!(
        "two-qubit class `{s}`: use two of 0,+,- (e.g. `+-`) or a comma pair (e.g. `+,+-`)"
    )))
}

fn axis_flag(flag: &str, value: &Option<String>) -> Result<Option<Vec3>> {
    value
        .as_deref()
        .map(|s| parse_vec3(s).map_err(|e| Error::Parse(format!("--{flag}: {e}"))))
        .transpose()
}

/// Axis and class from an observable and a Borel set; a degenerate observable
/// has no axis, and its class (`0` or `+-`) does not need one.
fn from_observable(obs: &str, borel: &BorelSet) -> Result<(Vec3, QubitClass)> {
    let o: Observable2 = obs.parse()?;
    Ok((o.axis().unwrap_or([0.0, 0.0, 1.0]), o.classify(borel)))
}

fn print_value(out: &mut dyn Write, value: f64, oracle: f64, full: bool) -> std::result::Result<(), Failure> {
    emit(
        out,
        &format!(
            "{}\noracle={} diff={}\n",
            format_number(value, full),
            format_number(oracle, full),
            format_number((value - oracle).abs(), full)
        ),
    )
}

fn cmd_membership(a: &MembershipArgs, cfg: &RunConfig, out: &mut dyn Write) -> std::result::Result<(), Failure> {
    let borel = a.borel.as_deref().map(str::parse::<BorelSet>).transpose()?;
    if a.observable.is_some() != borel.is_some() && a.observable_b.is_none() {
        return Err(Failure::Usage("--observable and --borel go together".into()));
    }
    match a.system {
        SystemArg::Qubit => {
            let (axis, class) = match (&a.observable, &borel) {
                (Some(obs), Some(e)) => from_observable(obs, e)?,
                _ => {
                    let axis = axis_flag("a", &a.a)?
                        .ok_or_else(|| Failure::Usage("--a is required".into()))?;
                    let class = a.class.as_deref().unwrap_or("+").parse::<QubitClass>()?;
                    (axis, class)
                }
            };
            let rho = match (&a.rho, &a.state, a.alpha) {
                (Some(r), None, None) => r.parse::<QubitState>()?,
                (None, Some(path), None) => match read_state(path)? {
                    State::Qubit(q) => q,
                    State::TwoQubit(_) => {
                        return Err(Failure::Usage("qubit system needs a one-line state file".into()))
                    }
                },
                (None, None, Some(alpha)) => pure_state_at_angle(alpha),
                _ => {
                    return Err(Failure::Usage(
                        "give exactly one of --rho, --state, --alpha".into(),
                    ))
                }
            };
            let v = membership_qubit(&axis, &rho, class)?;
            let o = membership_qubit_oracle(&axis, &rho, class)?;
            print_value(out, v, o, cfg.full_precision)
        }
        SystemArg::Twoqubit => {
            let ((ax, ca), (bx, cb)) = match (&a.observable, &a.observable_b, &borel) {
                (Some(oa), Some(ob), Some(e)) => (from_observable(oa, e)?, from_observable(ob, e)?),
                (None, None, None) => {
                    let ax = axis_flag("a", &a.a)?.ok_or_else(|| Failure::Usage("--a is required".into()))?;
                    let bx = axis_flag("b", &a.b)?.ok_or_else(|| Failure::Usage("--b is required".into()))?;
                    let (ca, cb) = parse_class_pair(a.class.as_deref().unwrap_or("++"))?;
                    ((ax, ca), (bx, cb))
                }
                _ => {
                    return Err(Failure::Usage(
                        "two qubits need --observable, --observable-b and --borel together".into(),
                    ))
                }
            };
            if a.rho.is_some() || a.alpha.is_some() {
                return Err(Failure::Usage("two qubits take the state from --state".into()));
            }
            let path = a
                .state
                .as_ref()
                .ok_or_else(|| Failure::Usage("--state is required for two qubits".into()))?;
            let bm: BlochMatrix = match read_state(path)? {
                State::TwoQubit(bm) => bm,
                State::Qubit(_) => {
                    return Err(Failure::Usage("two-qubit system needs a four-row state file".into()))
                }
            };
            let v = membership_two(&ax, &bx, &bm, ca, cb)?;
            let o = membership_two_oracle(&ax, &bx, &bm, ca, cb)?;
            print_value(out, v, o, cfg.full_precision)
        }
    }
}

/// `(θ, 1/2 + v cos θ)` at `θ = πk/(N−1)`.
pub fn curve(v: f64, points: usize) -> Result<Vec<(f64, f64)>> {
    if !(0.0..=0.5).contains(&v) {
        return Err(Error::Parse(format!("--rho-norm {v} outside [0, 1/2]")));
    }
    if points < 2 {
        return Err(Error::Parse("--points must be at least 2".into()));
    }
    let last = (points - 1) as f64;
    Ok((0..points)
        .map(|k| {
            // exact endpoints and midpoint
            let theta = if k == points - 1 { PI } else { PI * k as f64 / last };
            let c = if 2 * k == points - 1 { 0.0 } else { theta.cos() };
            (theta, 0.5 + v * c)
        })
        .collect())
}

fn cmd_curve(a: &CurveArgs, cfg: &RunConfig, out: &mut dyn Write) -> std::result::Result<(), Failure> {
    let rows = curve(a.rho_norm, a.points)?;
    let mut text = String::from("theta,f\n");
    for (t, f) in rows {
        text.push_str(&format!(
            "{},{}\n",
            format_number(t, cfg.full_precision),
            format_number(f, cfg.full_precision)
        ));
    }
    emit(out, &text)
}

fn cmd_verify(a: &VerifyArgs, cfg: &RunConfig, out: &mut dyn Write) -> std::result::Result<(), Failure> {
    let suite: Suite = a.suite.parse()?;
    let mut report = run_suite_with(suite, a.system.into(), a.samples, cfg.seed, &cfg.tolerances)?;
    report.full_precision = cfg.full_precision;
    emit(out, &report.to_string())?;
    if report.all_passed() {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn write_or_print(out: &mut dyn Write, path: &Option<PathBuf>, text: &str) -> std::result::Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| io_error(p, e)),
        None => emit(out, text),
    }
}

fn cmd_evolve(a: &EvolveArgs, out: &mut dyn Write) -> std::result::Result<(), Failure> {
    let bm = match read_state(&a.state)? {
        State::TwoQubit(bm) => bm,
        State::Qubit(_) => return Err(Failure::Usage("qutrit state needs a four-row Bloch matrix".into())),
    };
    let q = QutritBloch::new(bm)?;
    let evolved = nonlocal_transform(&q, a.theta1, a.theta2);
    write_or_print(out, &a.out, &evolved.bloch().to_string())
}

fn cmd_apply(a: &ApplyArgs, out: &mut dyn Write) -> std::result::Result<(), Failure> {
    let gate: Gate = a.gate.parse()?;
    let state = read_state(&a.state)?;
    let image = gate.apply(&state).map_err(|_| {
        Failure::Usage(format!(
            "gate {gate} acts on {} qubit(s), the state file holds {}",
            gate.arity(),
            match state {
                State::Qubit(_) => 1,
                State::TwoQubit(_) => 2,
            }
        ))
    })?;
    write_or_print(out, &a.out, &format_state(&image))
}
