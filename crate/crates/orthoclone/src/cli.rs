//! The command-line front end.
//!
//! Four commands, all emitting UTF-8 to stdout:
//!
//! * `classify <file.json>` — clonability verdict for a state-set
//!   document, as JSON with a witness and reduced-state diagnostics.
//! * `simulate --protocol … --attack …` — one protocol through one
//!   attack; exact by default, Monte Carlo with `--shots`; JSON or CSV.
//! * `sweep --protocol ki --attack …` — the two-state family over an
//!   angle grid, one CSV row (or JSON report) per angle.
//! * `list` — the protocol and attack catalogs.
//!
//! Exit codes: `0` success (including both classify verdicts), `2`
//! input or usage errors, `3` a state set that is not pairwise
//! orthogonal, `4` an attack incompatible with the protocol (failed
//! precondition, non-commuting reductions, or a release-schedule
//! violation). Identical invocations produce byte-identical output;
//! floats are printed with 12 significant digits and `.` as the decimal
//! separator regardless of locale.

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::adversary::AttackSpec;
use crate::cloneability::{classify_set, reduced_family, CloneVerdict, StateSet};
use crate::error::{Error, Result};
use crate::formats::load_state_set;
use crate::protocols::{make_protocol, ProtocolKind};
use crate::simulator::{ki_alpha_grid, report, sample_run, sweep, LabelMetrics, RunReport};

#[derive(Parser, Debug)]
#[command(
    name = "orthoclone",
    about = "Clonability of orthogonal composite states, and the key-distribution \
             protocols built on them",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify a state-set file for clonability under sequential release
    Classify {
        /// Path to a state-set JSON document
        input: std::path::PathBuf,
    },
    /// Run one protocol against one attack and report exact (or sampled) metrics
    Simulate {
        /// Protocol name (see `list`)
        #[arg(long)]
        protocol: String,
        /// Angle parameter for the `ki` protocol, radians in [0, π/2]
        #[arg(long)]
        alpha: Option<f64>,
        /// Attack name (see `list`)
        #[arg(long)]
        attack: String,
        /// Measurement basis angle in radians, for the attacks that take one
        #[arg(long)]
        basis_angle: Option<f64>,
        /// Which round an intercept-resend attack measures (1 or 2)
        #[arg(long)]
        round: Option<usize>,
        /// Sample outcome statistics over this many shots instead of
        /// reporting exact probabilities
        #[arg(long)]
        shots: Option<u64>,
        /// Seed for sampled mode (default 0)
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        output: OutputFormat,
    },
    /// Evaluate the two-state family over an angle grid against one attack
    Sweep {
        /// Protocol family to sweep (only `ki` has a parameter)
        #[arg(long)]
        protocol: String,
        /// Attack name (see `list`)
        #[arg(long)]
        attack: String,
        /// Measurement basis angle in radians, for the attacks that take one
        #[arg(long)]
        basis_angle: Option<f64>,
        /// Which round an intercept-resend attack measures (1 or 2)
        #[arg(long)]
        round: Option<usize>,
        /// Grid start, radians (default 0)
        #[arg(long, default_value_t = 0.0)]
        alpha_min: f64,
        /// Grid end, radians (default π/2)
        #[arg(long, default_value_t = std::f64::consts::FRAC_PI_2)]
        alpha_max: f64,
        /// Number of grid points, ≥ 2
        #[arg(long, default_value_t = 9)]
        steps: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        output: OutputFormat,
    },
    /// List the protocol and attack catalogs
    List,
}

/// Pairwise relation between two labels' reductions on one subsystem.
#[derive(Serialize)]
struct PairDiagnostics {
    a: String,
    b: String,
    overlap: f64,
    orthogonal: bool,
    identical: bool,
    commute: bool,
}

/// Spectrum of one label's reduction on one subsystem.
#[derive(Serialize)]
struct ReductionDiagnostics {
    label: String,
    eigenvalues: Vec<f64>,
}

#[derive(Serialize)]
struct SubsystemDiagnostics {
    subsystem: usize,
    reductions: Vec<ReductionDiagnostics>,
    pairwise: Vec<PairDiagnostics>,
}

/// The classify command's document: the verdict plus the reduced-state
/// facts it rests on.
#[derive(Serialize)]
struct ClassifyOutput {
    #[serde(flatten)]
    verdict: CloneVerdict,
    diagnostics: Vec<SubsystemDiagnostics>,
}

fn diagnostics_for(set: &StateSet) -> Result<Vec<SubsystemDiagnostics>> {
    let labels = set.labels();
    let mut out = Vec::new();
    for position in 0..set.dims().len() {
        let subsystem = set.release_order()[position];
        let family = reduced_family(set, subsystem)?;
        let reductions = labels
            .iter()
            .zip(&family)
            .map(|(label, rho)| ReductionDiagnostics {
                label: label.to_string(),
                eigenvalues: rho.eig().eigenvalues.clone(),
            })
            .collect();
        let mut pairwise = Vec::new();
        for i in 0..family.len() {
            for j in (i + 1)..family.len() {
                pairwise.push(PairDiagnostics {
                    a: labels[i].to_string(),
                    b: labels[j].to_string(),
                    overlap: crate::qlinalg::overlap(&family[i], &family[j])?,
                    orthogonal: crate::qlinalg::is_orthogonal(&family[i], &family[j])?,
                    identical: crate::qlinalg::is_identical(&family[i], &family[j])?,
                    commute: crate::qlinalg::commutes(&family[i], &family[j])?,
                });
            }
        }
        out.push(SubsystemDiagnostics {
            subsystem,
            reductions,
            pairwise,
        });
    }
    Ok(out)
}

fn cmd_classify(input: &std::path::Path) -> Result<String> {
    let set = load_state_set(input)?;
    let verdict = classify_set(&set)?;
    let output = ClassifyOutput {
        diagnostics: diagnostics_for(&set)?,
        verdict,
    };
    Ok(serde_json::to_string_pretty(&output).expect("verdict serialises"))
}

/// CSV schema shared by `simulate` and `sweep`, in the stable order.
const CSV_HEADER: &str =
    "protocol,protocol_params,attack,attack_params,label,fidelity,qber,reject_rate,eve_guess,disturbance";

fn params_cell(params: &std::collections::BTreeMap<String, String>) -> String {
    params
        .iter()
        .map(|(k, v)| format!("{}={}", k, v))
        .collect::<Vec<_>>()
        .join(";")
}

fn csv_row(rep: &RunReport, label: &str, fidelity: f64) -> String {
    format!(
        "{},{},{},{},{},{},{},{},{},{}",
        rep.protocol,
        params_cell(&rep.protocol_params),
        rep.attack,
        params_cell(&rep.attack_params),
        label,
        crate::report_float(fidelity),
        crate::report_float(rep.qber),
        crate::report_float(rep.reject_rate),
        crate::report_float(rep.eve_guess),
        crate::report_float(rep.disturbance),
    )
}

fn simulate_csv(rep: &RunReport) -> String {
    let mut lines = vec![CSV_HEADER.to_string()];
    for LabelMetrics { label, fidelity, .. } in &rep.labels {
        lines.push(csv_row(rep, label, *fidelity));
    }
    lines.join("\n")
}

fn sweep_csv(reports: &[RunReport]) -> String {
    let mut lines = vec![CSV_HEADER.to_string()];
    for rep in reports {
        let min_fidelity = rep
            .labels
            .iter()
            .map(|m| m.fidelity)
            .fold(f64::INFINITY, f64::min);
        lines.push(csv_row(rep, "all", min_fidelity));
    }
    lines.join("\n")
}

#[allow(clippy::too_many_arguments)]
fn cmd_simulate(
    protocol: &str,
    alpha: Option<f64>,
    attack: &str,
    basis_angle: Option<f64>,
    round: Option<usize>,
    shots: Option<u64>,
    seed: Option<u64>,
    output: OutputFormat,
) -> Result<String> {
    let kind: ProtocolKind = protocol.parse()?;
    let protocol = make_protocol(kind, alpha)?;
    let spec = AttackSpec::from_cli(attack, basis_angle, round)?;
    let channel = spec.build(&protocol)?;
    let rep = match shots {
        None => report(&protocol, &channel)?,
        Some(shots) => sample_run(&protocol, &channel, None, shots, seed.unwrap_or(0))?,
    };
    Ok(match output {
        OutputFormat::Json => serde_json::to_string_pretty(&rep).expect("report serialises"),
        OutputFormat::Csv => simulate_csv(&rep),
    })
}

#[allow(clippy::too_many_arguments)]
fn cmd_sweep(
    protocol: &str,
    attack: &str,
    basis_angle: Option<f64>,
    round: Option<usize>,
    alpha_min: f64,
    alpha_max: f64,
    steps: usize,
    output: OutputFormat,
) -> Result<String> {
    let kind: ProtocolKind = protocol.parse()?;
    if kind != ProtocolKind::Ki {
        return Err(Error::InvalidArgument(format!(
            "sweep drives the parameterised `ki` family; `{}` has no parameter \
             (use `simulate` for a single run)",
            kind.name()
        )));
    }
    let spec = AttackSpec::from_cli(attack, basis_angle, round)?;
    let grid = ki_alpha_grid(alpha_min, alpha_max, steps)?;
    let reports = sweep(&grid, &spec)?;
    Ok(match output {
        OutputFormat::Json => serde_json::to_string_pretty(&reports).expect("reports serialise"),
        OutputFormat::Csv => sweep_csv(&reports),
    })
}

fn cmd_list() -> String {
    let mut lines = vec!["protocols:".to_string()];
    for kind in ProtocolKind::ALL {
        lines.push(format!("  {:<16} {}", kind.name(), kind.describe()));
    }
    lines.push("attacks:".to_string());
    for (name, description) in AttackSpec::catalog() {
        lines.push(format!("  {:<16} {}", name, description));
    }
    lines.join("\n")
}

fn execute(command: Command) -> Result<String> {
    match command {
        Command::Classify { input } => cmd_classify(&input),
        Command::Simulate {
            protocol,
            alpha,
            attack,
            basis_angle,
            round,
            shots,
            seed,
            output,
        } => cmd_simulate(
            &protocol,
            alpha,
            &attack,
            basis_angle,
            round,
            shots,
            seed,
            output,
        ),
        Command::Sweep {
            protocol,
            attack,
            basis_angle,
            round,
            alpha_min,
            alpha_max,
            steps,
            output,
        } => cmd_sweep(
            &protocol,
            &attack,
            basis_angle,
            round,
            alpha_min,
            alpha_max,
            steps,
            output,
        ),
        Command::List => Ok(cmd_list()),
    }
}

fn exit_code_for(error: &Error) -> i32 {
    match error {
        Error::NotOrthogonalInput(_) => 3,
        Error::PreconditionFailed(_)
        | Error::NonCommutingFamily(_)
        | Error::ScheduleViolation(_) => 4,
        _ => 2,
    }
}

/// Parses `args` (including the program name) and runs the selected
/// command, printing output to stdout and errors to stderr. Returns the
/// process exit code.
pub fn run<I>(args: I) -> i32
where
    I: IntoIterator,
    I::Item: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // --help/--version land here by design and are not errors.
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli.command) {
        Ok(text) => {
            println!("{}", text);
            0
        }
        Err(e) => {
            eprintln!("error: {}", e);
            exit_code_for(&e)
        }
    }
}
