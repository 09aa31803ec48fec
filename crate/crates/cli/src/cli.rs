//! Command definitions and handlers.

use std::path::PathBuf;

use activeinfo::{
    active_information, active_information_from_probabilities, is_dominated, pmf_entropy,
    solve_maxent, verify_dominance_lemma, BaselineSpec, Distribution, Feature, InfoUnit,
    MomentConstraint, DEFAULT_MAX_ITERATIONS, DEFAULT_TOLERANCE,
};
use clap::{ArgGroup, Args, Parser, Subcommand};
use serde_json::Value;

use crate::dataset::Dataset;
use crate::errors::CliError;
use crate::fitting::{fit_baseline, FitFamily};
use crate::jsonfmt::{fmt_float, Json};
use crate::modes::mode_hunt;
use crate::report::{emit, Extra};
use crate::specparse::{BaselineArg, CliTarget, DistArg, GridArg, TargetArg, VelocityArg};
use crate::svg::cdf_overlay;

#[derive(Parser)]
#[command(
    name = "activeinfo",
    version,
    about = "Active information analysis over maximum-entropy baselines",
    propagate_version = true
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Active information of observed data (or a named alternative) against a baseline
    Ai(AiArgs),
    /// Solve a maximum-entropy pmf under moment constraints
    Maxent(MaxentArgs),
    /// Check stochastic dominance between distributions
    Dominance(DominanceArgs),
    /// Hunt for over-represented histogram bins relative to a baseline
    Modes(ModesArgs),
    /// Physical checkpoints built on maximum-entropy distributions
    #[command(subcommand)]
    Physics(PhysicsCommand),
    /// Fit a baseline family to observed data
    Fit(FitArgs),
}

#[derive(Args)]
#[command(group = ArgGroup::new("source").required(true).multiple(false))]
struct AiArgs {
    /// Baseline distribution, e.g. exponential:mu=2 or normal:mu=0,sigma2=1
    #[arg(long)]
    baseline: BaselineArg,
    /// Target event: le:X, interval:LO,HI, set:A;B;C, or JSON
    #[arg(long)]
    target: TargetArg,
    /// CSV dataset (one numeric column, or label,count rows)
    #[arg(long, group = "source")]
    data: Option<PathBuf>,
    /// Alternative distribution to compare instead of data
    #[arg(long, group = "source")]
    alternative: Option<DistArg>,
    /// Information unit
    #[arg(long, default_value = "bits", value_name = "bits|nats|hartleys")]
    unit: InfoUnit,
    /// Skip the first CSV row
    #[arg(long, requires = "data")]
    header: bool,
    /// Write BASE.json next to the stdout report
    #[arg(long, value_name = "BASE")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct MaxentArgs {
    /// Problem description file (JSON with "support" and "constraints")
    #[arg(long)]
    problem: PathBuf,
    /// Residual tolerance for convergence
    #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
    tolerance: f64,
    /// Iteration budget
    #[arg(long, default_value_t = DEFAULT_MAX_ITERATIONS)]
    max_iterations: usize,
    /// Write BASE.json and BASE.csv (point,mass rows)
    #[arg(long, value_name = "BASE")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct DominanceArgs {
    /// Distribution to compare (repeat two or more times)
    #[arg(long = "dist", value_name = "DIST")]
    dists: Vec<DistArg>,
    /// Comparison grid: auto or LO,HI,STEP
    #[arg(long, default_value = "auto")]
    grid: GridArg,
    /// Information unit for the lemma cross-check
    #[arg(long, default_value = "bits", value_name = "bits|nats|hartleys")]
    unit: InfoUnit,
    /// Cross-check each CDF comparison against its active-information reading
    #[arg(long)]
    verify_lemma: bool,
    /// Write BASE.json and BASE.svg (CDF overlay)
    #[arg(long, value_name = "BASE")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ModesArgs {
    /// CSV dataset (one numeric column)
    #[arg(long)]
    data: PathBuf,
    /// Baseline distribution the bins are judged against
    #[arg(long)]
    baseline: BaselineArg,
    /// Number of equal-width bins
    #[arg(long, default_value_t = 10)]
    bins: usize,
    /// Flag bins whose active information exceeds this many bits
    #[arg(long, default_value_t = 0.5)]
    threshold_bits: f64,
    /// Skip the first CSV row
    #[arg(long)]
    header: bool,
    /// Write BASE.json next to the stdout report
    #[arg(long, value_name = "BASE")]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum PhysicsCommand {
    /// Isothermal pressure ratio at altitude
    Barometric(BarometricArgs),
    /// Maxwell-Boltzmann velocity density
    Maxwell(MaxwellArgs),
}

#[derive(Args)]
struct BarometricArgs {
    /// Altitude above the reference level, meters
    #[arg(long)]
    height: f64,
    /// Temperature, kelvin
    #[arg(long)]
    temperature: f64,
    /// What-if override: gravitational acceleration, m/s^2
    #[arg(long)]
    gravity: Option<f64>,
    /// What-if override: molar mass, kg/mol
    #[arg(long)]
    molar_mass: Option<f64>,
    /// What-if override: gas constant, J/(mol K)
    #[arg(long)]
    gas_constant: Option<f64>,
    /// Write BASE.json next to the stdout report
    #[arg(long, value_name = "BASE")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct MaxwellArgs {
    /// Velocity components, m/s, as X,Y,Z
    #[arg(long)]
    velocity: VelocityArg,
    /// Particle mass, kg
    #[arg(long)]
    mass: f64,
    /// Temperature, kelvin
    #[arg(long)]
    temperature: f64,
    /// What-if override: Boltzmann constant, J/K
    #[arg(long)]
    boltzmann: Option<f64>,
    /// Write BASE.json next to the stdout report
    #[arg(long, value_name = "BASE")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct FitArgs {
    /// CSV dataset
    #[arg(long)]
    data: PathBuf,
    /// Family to fit: equiprobable, uniform, geometric, exponential, normal
    #[arg(long)]
    family: FitFamilyArg,
    /// Uniform lower bound (defaults to the observed minimum)
    #[arg(long)]
    a: Option<f64>,
    /// Uniform upper bound (defaults to the observed maximum)
    #[arg(long)]
    b: Option<f64>,
    /// Skip the first CSV row
    #[arg(long)]
    header: bool,
    /// Write BASE.json next to the stdout report
    #[arg(long, value_name = "BASE")]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone)]
struct FitFamilyArg(FitFamily);

impl std::str::FromStr for FitFamilyArg {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        s.parse().map(FitFamilyArg)
    }
}

pub fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Ai(args) => run_ai(args),
        Command::Maxent(args) => run_maxent(args),
        Command::Dominance(args) => run_dominance(args),
        Command::Modes(args) => run_modes(args),
        Command::Physics(PhysicsCommand::Barometric(args)) => run_barometric(args),
        Command::Physics(PhysicsCommand::Maxwell(args)) => run_maxwell(args),
        Command::Fit(args) => run_fit(args),
    }
}

fn info_fields(report: &activeinfo::InfoReport) -> Vec<(&'static str, Json)> {
    vec![
        ("baseline_probability", Json::Num(report.baseline_prob)),
        (
            "alternative_probability",
            Json::Num(report.alternative_prob),
        ),
        ("endogenous", Json::Num(report.endogenous)),
        ("exogenous", Json::Num(report.exogenous)),
        ("active", Json::Num(report.active)),
    ]
}

fn run_ai(args: AiArgs) -> Result<(), CliError> {
    let baseline = args.baseline.0;
    let target = args.target.0;
    let unit = args.unit;

    let (report, source) = if let Some(alt) = args.alternative {
        let numeric = target.to_numeric_target().map_err(CliError::Usage)?;
        let base_dist = Distribution::from(baseline.clone());
        let report = active_information(&alt.0, &base_dist, &numeric, unit)?;
        let source = Json::obj(vec![
            ("kind", Json::Str("distribution".into())),
            ("display", Json::Str(alt.0.to_string())),
        ]);
        (report, source)
    } else {
        let path = args.data.expect("clap guarantees a source");
        let dataset = Dataset::load(&path, args.header)?;
        match dataset.labeled() {
            Some(rows) => labeled_ai(&baseline, &target, rows, &dataset, unit)?,
            None => numeric_ai(&baseline, &target, &dataset, unit)?,
        }
    };

    let result = Json::obj(
        [
            ("unit", Json::Str(unit.label().into())),
            ("baseline", Json::Str(baseline.to_string())),
            ("target", Json::Str(target.describe())),
            ("source", source),
        ]
        .into_iter()
        .chain(info_fields(&report))
        .collect(),
    );
    emit("ai", result, args.out.as_deref(), &[])
}

fn numeric_ai(
    baseline: &BaselineSpec,
    target: &CliTarget,
    dataset: &Dataset,
    unit: InfoUnit,
) -> Result<(activeinfo::InfoReport, Json), CliError> {
    let values = dataset.numeric()?;
    let numeric = target.to_numeric_target().map_err(CliError::Domain)?;
    let matched = values.iter().filter(|v| numeric.contains(**v)).count();
    let empirical = matched as f64 / values.len() as f64;
    let base_prob = baseline.probability(&numeric)?;
    let report = active_information_from_probabilities(empirical, base_prob, unit)?;
    let source = Json::obj(vec![
        ("kind", Json::Str("numeric-dataset".into())),
        ("path", Json::Str(dataset.source.clone())),
        ("rows", Json::Int(dataset.rows as i64)),
        ("matched", Json::Int(matched as i64)),
    ]);
    Ok((report, source))
}

fn labeled_ai(
    baseline: &BaselineSpec,
    target: &CliTarget,
    rows: &[(String, u64)],
    dataset: &Dataset,
    unit: InfoUnit,
) -> Result<(activeinfo::InfoReport, Json), CliError> {
    let n = match baseline {
        BaselineSpec::Equiprobable { n } => *n,
        other => {
            return Err(CliError::Domain(format!(
                "label,count data needs an equiprobable baseline, got {other}"
            )))
        }
    };
    let labels = target.label_set().ok_or_else(|| {
        CliError::Domain("label,count data needs a set:... target of labels".to_string())
    })?;
    if rows.len() > n {
        return Err(CliError::Domain(format!(
            "baseline has {n} categories but the data shows {} distinct labels",
            rows.len()
        )));
    }
    if labels.len() > n {
        return Err(CliError::Domain(format!(
            "target names {} labels but the baseline has only {n} categories",
            labels.len()
        )));
    }
    let total: u64 = rows.iter().map(|(_, c)| c).sum();
    if total == 0 {
        return Err(CliError::Domain(
            "all label counts are zero; nothing was observed".to_string(),
        ));
    }
    let matched: u64 = rows
        .iter()
        .filter(|(label, _)| labels.contains(label))
        .map(|(_, c)| c)
        .sum();
    let empirical = matched as f64 / total as f64;
    let base_prob = labels.len() as f64 / n as f64;
    let report = active_information_from_probabilities(empirical, base_prob, unit)?;
    let source = Json::obj(vec![
        ("kind", Json::Str("labeled-dataset".into())),
        ("path", Json::Str(dataset.source.clone())),
        ("rows", Json::Int(dataset.rows as i64)),
        ("total_count", Json::Int(total as i64)),
        ("matched_count", Json::Int(matched as i64)),
    ]);
    Ok((report, source))
}

fn json_number(v: &Value, what: &str) -> Result<f64, CliError> {
    v.as_f64()
        .ok_or_else(|| CliError::Domain(format!("problem file: {what} must be a number")))
}

fn parse_support(v: &Value) -> Result<Vec<f64>, CliError> {
    if let Some(arr) = v.as_array() {
        return arr
            .iter()
            .map(|x| json_number(x, "support point"))
            .collect();
    }
    let obj = v.as_object().ok_or_else(|| {
        CliError::Domain(
            "problem file: \"support\" must be an array, {\"range\":...}, or {\"integers\":...}"
                .to_string(),
        )
    })?;
    if let Some(range) = obj.get("range") {
        let lo = json_number(
            range.get("lo").ok_or_else(|| {
                CliError::Domain("problem file: range needs \"lo\"".to_string())
            })?,
            "range lo",
        )?;
        let hi = json_number(
            range.get("hi").ok_or_else(|| {
                CliError::Domain("problem file: range needs \"hi\"".to_string())
            })?,
            "range hi",
        )?;
        let points = range
            .get("points")
            .and_then(Value::as_u64)
            .ok_or_else(|| {
                CliError::Domain("problem file: range needs integer \"points\"".to_string())
            })?;
        if points < 2 || !(hi > lo) {
            return Err(CliError::Domain(format!(
                "problem file: range needs hi > lo and points >= 2, got [{lo}, {hi}] with {points}"
            )));
        }
        let n = points as usize;
        return Ok((0..n)
            .map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
            .collect());
    }
    if let Some(ints) = obj.get("integers") {
        let lo = ints.get("lo").and_then(Value::as_i64).ok_or_else(|| {
            CliError::Domain("problem file: integers needs integer \"lo\"".to_string())
        })?;
        let hi = ints.get("hi").and_then(Value::as_i64).ok_or_else(|| {
            CliError::Domain("problem file: integers needs integer \"hi\"".to_string())
        })?;
        if hi < lo {
            return Err(CliError::Domain(format!(
                "problem file: integers needs lo <= hi, got [{lo}, {hi}]"
            )));
        }
        return Ok((lo..=hi).map(|i| i as f64).collect());
    }
    Err(CliError::Domain(
        "problem file: \"support\" must be an array, {\"range\":...}, or {\"integers\":...}"
            .to_string(),
    ))
}

fn parse_constraint(v: &Value) -> Result<MomentConstraint, CliError> {
    let obj = v.as_object().ok_or_else(|| {
        CliError::Domain("problem file: each constraint must be an object".to_string())
    })?;
    let feature_v = obj.get("feature").ok_or_else(|| {
        CliError::Domain("problem file: constraint needs \"feature\"".to_string())
    })?;
    let feature = match feature_v {
        Value::String(name) => match name.as_str() {
            "identity" => Feature::Identity,
            "square" => Feature::Square,
            other => {
                return Err(CliError::Domain(format!(
                    "problem file: unknown feature '{other}'"
                )))
            }
        },
        Value::Object(o) => {
            if let Some(center) = o.get("centered_square") {
                Feature::CenteredSquare {
                    center: json_number(center, "centered_square")?,
                }
            } else if let Some(values) = o.get("tabulated") {
                let arr = values.as_array().ok_or_else(|| {
                    CliError::Domain("problem file: tabulated must be an array".to_string())
                })?;
                Feature::Tabulated {
                    values: arr
                        .iter()
                        .map(|x| json_number(x, "tabulated value"))
                        .collect::<Result<_, _>>()?,
                }
            } else {
                return Err(CliError::Domain(
                    "problem file: feature object must hold \"centered_square\" or \"tabulated\""
                        .to_string(),
                ));
            }
        }
        _ => {
            return Err(CliError::Domain(
                "problem file: feature must be a string or an object".to_string(),
            ))
        }
    };
    let value = json_number(
        obj.get("value").ok_or_else(|| {
            CliError::Domain("problem file: constraint needs \"value\"".to_string())
        })?,
        "constraint value",
    )?;
    MomentConstraint::new(feature, value).map_err(Into::into)
}

fn feature_json(feature: &Feature) -> Json {
    match feature {
        Feature::Identity => Json::Str("identity".into()),
        Feature::Square => Json::Str("square".into()),
        Feature::CenteredSquare { center } => {
            Json::obj(vec![("centered_square", Json::Num(*center))])
        }
        Feature::Tabulated { values } => Json::obj(vec![(
            "tabulated",
            Json::Int(values.len() as i64),
        )]),
    }
}

fn run_maxent(args: MaxentArgs) -> Result<(), CliError> {
    let text = std::fs::read_to_string(&args.problem).map_err(|e| {
        CliError::Domain(format!("cannot read {}: {e}", args.problem.display()))
    })?;
    let v: Value = serde_json::from_str(&text).map_err(|e| {
        CliError::Domain(format!("{}: invalid JSON: {e}", args.problem.display()))
    })?;
    let support = parse_support(v.get("support").ok_or_else(|| {
        CliError::Domain("problem file: missing \"support\"".to_string())
    })?)?;
    let constraints: Vec<MomentConstraint> = match v.get("constraints") {
        None => Vec::new(),
        Some(c) => c
            .as_array()
            .ok_or_else(|| {
                CliError::Domain("problem file: \"constraints\" must be an array".to_string())
            })?
            .iter()
            .map(parse_constraint)
            .collect::<Result<_, _>>()?,
    };

    let solution = solve_maxent(&support, &constraints, args.tolerance, args.max_iterations)?;
    let max_residual = solution
        .residuals
        .iter()
        .fold(0.0f64, |m, r| m.max(r.abs()));

    let constraints_json: Vec<Json> = constraints
        .iter()
        .map(|c| {
            Json::obj(vec![
                ("feature", feature_json(&c.feature)),
                ("value", Json::Num(c.value)),
            ])
        })
        .collect();

    let mut csv = String::from("point,mass\n");
    for (p, m) in solution.pmf.points().iter().zip(solution.pmf.masses()) {
        csv.push_str(&fmt_float(*p));
        csv.push(',');
        csv.push_str(&fmt_float(*m));
        csv.push('\n');
    }

    let result = Json::obj(vec![
        ("support_size", Json::Int(support.len() as i64)),
        ("constraints", Json::Arr(constraints_json)),
        ("tolerance", Json::Num(args.tolerance)),
        ("max_iterations", Json::Int(args.max_iterations as i64)),
        ("iterations", Json::Int(solution.iterations as i64)),
        ("multipliers", Json::num_array(&solution.multipliers)),
        ("residuals", Json::num_array(&solution.residuals)),
        ("max_residual", Json::Num(max_residual)),
        (
            "entropy_bits",
            Json::Num(pmf_entropy(&solution.pmf, InfoUnit::Bits)),
        ),
        (
            "entropy_nats",
            Json::Num(pmf_entropy(&solution.pmf, InfoUnit::Nats)),
        ),
        ("points", Json::num_array(solution.pmf.points())),
        ("masses", Json::num_array(solution.pmf.masses())),
    ]);
    emit(
        "maxent",
        result,
        args.out.as_deref(),
        &[Extra {
            extension: "csv",
            content: csv,
        }],
    )
}

fn run_dominance(args: DominanceArgs) -> Result<(), CliError> {
    if args.dists.len() < 2 {
        return Err(CliError::Usage(format!(
            "dominance needs at least two --dist arguments, got {}",
            args.dists.len()
        )));
    }
    let dists: Vec<Distribution> = args.dists.into_iter().map(|d| d.0).collect();
    let grid = args.grid.0;
    let unit = args.unit;

    let mut pairs = Vec::new();
    for i in 0..dists.len() {
        for j in (i + 1)..dists.len() {
            let forward = is_dominated(&dists[i], &dists[j], &grid)?;
            let reverse = is_dominated(&dists[j], &dists[i], &grid)?;
            let lemma = if args.verify_lemma {
                let fwd = verify_dominance_lemma(&dists[i], &dists[j], &grid, unit)?;
                let rev = verify_dominance_lemma(&dists[j], &dists[i], &grid, unit)?;
                Json::Bool(fwd && rev)
            } else {
                Json::Null
            };
            pairs.push(Json::obj(vec![
                ("first", Json::Int(i as i64)),
                ("second", Json::Int(j as i64)),
                (
                    "first_dominated_by_second",
                    Json::Bool(forward.dominated),
                ),
                ("witness", Json::opt_num(forward.witness)),
                (
                    "second_dominated_by_first",
                    Json::Bool(reverse.dominated),
                ),
                ("reverse_witness", Json::opt_num(reverse.witness)),
                ("checked_points", Json::Int(forward.checked_points as i64)),
                ("comparison", Json::Str(forward.grid)),
                ("lemma_consistent", lemma),
            ]));
        }
    }

    let labeled: Vec<(String, &Distribution)> = dists
        .iter()
        .enumerate()
        .map(|(i, d)| (format!("{i}: {d}"), d))
        .collect();
    let svg = cdf_overlay(&labeled)?;

    let result = Json::obj(vec![
        ("unit", Json::Str(unit.label().into())),
        ("grid", Json::Str(grid.to_string())),
        (
            "distributions",
            Json::Arr(
                dists
                    .iter()
                    .map(|d| Json::Str(d.to_string()))
                    .collect(),
            ),
        ),
        ("lemma_checked", Json::Bool(args.verify_lemma)),
        ("pairs", Json::Arr(pairs)),
    ]);
    emit(
        "dominance",
        result,
        args.out.as_deref(),
        &[Extra {
            extension: "svg",
            content: svg,
        }],
    )
}

fn run_modes(args: ModesArgs) -> Result<(), CliError> {
    let dataset = Dataset::load(&args.data, args.header)?;
    let values = dataset.numeric()?;
    let report = mode_hunt(values, &args.baseline.0, args.bins, args.threshold_bits)?;

    let bins_json: Vec<Json> = report
        .bins
        .iter()
        .map(|b| {
            Json::obj(vec![
                ("lo", Json::Num(b.lo)),
                ("hi", Json::Num(b.hi)),
                ("hi_closed", Json::Bool(b.hi_closed)),
                ("count", Json::Int(b.count as i64)),
                ("empirical", Json::Num(b.empirical)),
                (
                    "baseline_probability",
                    Json::opt_num(b.baseline_probability),
                ),
                ("active_bits", Json::opt_num(b.active_bits)),
                ("flagged", Json::Bool(b.flagged)),
            ])
        })
        .collect();

    let result = Json::obj(vec![
        ("baseline", Json::Str(args.baseline.0.to_string())),
        (
            "source",
            Json::obj(vec![
                ("path", Json::Str(dataset.source.clone())),
                ("rows", Json::Int(dataset.rows as i64)),
            ]),
        ),
        (
            "range",
            Json::obj(vec![
                ("lo", Json::Num(report.lo)),
                ("hi", Json::Num(report.hi)),
            ]),
        ),
        ("bins", Json::Int(report.bins.len() as i64)),
        ("bin_width", Json::Num(report.bin_width)),
        ("threshold_bits", Json::Num(report.threshold_bits)),
        ("flagged", Json::Int(report.flagged as i64)),
        ("bins_detail", Json::Arr(bins_json)),
    ]);
    emit("modes", result, args.out.as_deref(), &[])
}

fn run_barometric(args: BarometricArgs) -> Result<(), CliError> {
    use activeinfo::physics::*;
    let what_if =
        args.gravity.is_some() || args.molar_mass.is_some() || args.gas_constant.is_some();
    let gravity = args.gravity.unwrap_or(STANDARD_GRAVITY_M_PER_S2);
    let molar_mass = args.molar_mass.unwrap_or(MOLAR_MASS_DRY_AIR_KG_PER_MOL);
    let gas_constant = args.gas_constant.unwrap_or(GAS_CONSTANT_J_PER_MOL_K);
    let ratio = if what_if {
        barometric_pressure_ratio_with(
            args.height,
            args.temperature,
            gravity,
            molar_mass,
            gas_constant,
        )?
    } else {
        barometric_pressure_ratio(args.height, args.temperature)?
    };
    let mean_altitude = gas_constant * args.temperature / (gravity * molar_mass);
    let result = Json::obj(vec![
        (
            "mode",
            Json::Str(if what_if { "what-if" } else { "reference" }.into()),
        ),
        ("height_m", Json::Num(args.height)),
        ("temperature_k", Json::Num(args.temperature)),
        (
            "constants",
            Json::obj(vec![
                ("gravity_m_per_s2", Json::Num(gravity)),
                ("molar_mass_kg_per_mol", Json::Num(molar_mass)),
                ("gas_constant_j_per_mol_k", Json::Num(gas_constant)),
            ]),
        ),
        ("pressure_ratio", Json::Num(ratio)),
        ("exponential_mean_m", Json::Num(mean_altitude)),
    ]);
    emit("physics.barometric", result, args.out.as_deref(), &[])
}

fn run_maxwell(args: MaxwellArgs) -> Result<(), CliError> {
    use activeinfo::physics::*;
    let what_if = args.boltzmann.is_some();
    let boltzmann = args.boltzmann.unwrap_or(BOLTZMANN_J_PER_K);
    let velocity = args.velocity.0;
    let density = if what_if {
        maxwell_boltzmann_density_with(velocity, args.mass, args.temperature, boltzmann)?
    } else {
        maxwell_boltzmann_density(velocity, args.mass, args.temperature)?
    };
    let speed = velocity.iter().map(|v| v * v).sum::<f64>().sqrt();
    let result = Json::obj(vec![
        (
            "mode",
            Json::Str(if what_if { "what-if" } else { "reference" }.into()),
        ),
        ("velocity_m_per_s", Json::num_array(&velocity)),
        ("speed_m_per_s", Json::Num(speed)),
        ("mass_kg", Json::Num(args.mass)),
        ("temperature_k", Json::Num(args.temperature)),
        ("boltzmann_j_per_k", Json::Num(boltzmann)),
        (
            "component_variance_m2_per_s2",
            Json::Num(boltzmann * args.temperature / args.mass),
        ),
        ("density_s3_per_m3", Json::Num(density)),
    ]);
    emit("physics.maxwell", result, args.out.as_deref(), &[])
}

fn run_fit(args: FitArgs) -> Result<(), CliError> {
    let dataset = Dataset::load(&args.data, args.header)?;
    let family = args.family.0;
    let spec = fit_baseline(family, &dataset, args.a, args.b)?;
    let parameters = match &spec {
        BaselineSpec::Equiprobable { n } => Json::obj(vec![("n", Json::Int(*n as i64))]),
        BaselineSpec::UniformInterval { a, b } => {
            Json::obj(vec![("a", Json::Num(*a)), ("b", Json::Num(*b))])
        }
        BaselineSpec::Geometric { mu } => Json::obj(vec![
            ("mu", Json::Num(*mu)),
            ("p", Json::Num(1.0 / mu)),
        ]),
        BaselineSpec::Exponential { mu } => Json::obj(vec![
            ("mu", Json::Num(*mu)),
            ("rate", Json::Num(1.0 / mu)),
        ]),
        BaselineSpec::Normal { mu, sigma2 } => Json::obj(vec![
            ("mu", Json::Num(*mu)),
            ("sigma2", Json::Num(*sigma2)),
        ]),
    };
    let result = Json::obj(vec![
        ("family", Json::Str(family.name().into())),
        (
            "source",
            Json::obj(vec![
                ("path", Json::Str(dataset.source.clone())),
                ("rows", Json::Int(dataset.rows as i64)),
            ]),
        ),
        ("baseline", Json::Str(spec.to_string())),
        ("parameters", parameters),
    ]);
    emit("fit", result, args.out.as_deref(), &[])
}
