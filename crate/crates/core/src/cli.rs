//! The `relspeed` command line.
//!
//! ```text
//! relspeed <plan-inertial|plan-accel|simulate|race|scenario|sweep> [flags]
//! ```
//!
//! Every flag can also come from a `--config` file (TOML or JSON, keys are
//! the flag names without dashes); flags given on the command line win.
//! A JSON document produced by `plan-inertial` or `plan-accel` is itself a
//! valid config file: its `config` object is read back.
//!
//! Exit codes: 0 success, 1 usage error, 2 domain error. Errors are written
//! to stderr as a single JSON line. Floats are printed with 12 significant
//! digits.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Parser, ValueEnum};
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::accel::{plan_accel, solve_acceleration, ProperAcceleration};
use crate::inertial::{four_momentum, plan_inertial, ComputationSpec};
use crate::scenarios::{lhc_scenario, race_grover, sweep_table};
use crate::units::UnitSystem;
use crate::worldline::{simulate_path1_with_step, simulate_path2, WorldlineTrace};

/// Significant digits in every printed float.
pub const SIGNIFICANT_DIGITS: usize = 12;

const CONFIG_KEYS: &[&str] = &[
    "queries",
    "order",
    "query-time-s",
    "rest-mass-kg",
    "units",
    "step",
    "format",
    "output",
    "path",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    PlanInertial,
    PlanAccel,
    Simulate,
    Race,
    Scenario,
    Sweep,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "relspeed",
    version,
    about = "Plan time-dilated computations and check them against a worldline integrator",
    allow_negative_numbers = true
)]
struct Args {
    command: Command,
    /// Query count N; comma-separated list for `sweep`.
    #[arg(long)]
    queries: Option<String>,
    /// Reduction order n >= 1; comma-separated list for `sweep`.
    #[arg(long)]
    order: Option<String>,
    /// Seconds per query (SI units only).
    #[arg(long = "query-time-s")]
    query_time_s: Option<String>,
    /// Traveller rest mass in kg (required with `--units si`).
    #[arg(long = "rest-mass-kg")]
    rest_mass_kg: Option<String>,
    #[arg(long, value_parser = ["natural", "si"])]
    units: Option<String>,
    /// Proper-time step for `simulate`.
    #[arg(long)]
    step: Option<String>,
    #[arg(long, value_parser = ["json", "csv"])]
    format: Option<String>,
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long)]
    config: Option<PathBuf>,
    /// Worldline simulated by `simulate`: 1 (impulsive boosts) or 2 (four hyperbolic legs).
    #[arg(long)]
    path: Option<String>,
}

/// Fully resolved invocation.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub queries: Vec<u64>,
    pub orders: Vec<f64>,
    pub query_time: Option<f64>,
    pub rest_mass_kg: Option<f64>,
    pub units: UnitSystem,
    pub step: Option<f64>,
    pub format: Format,
    pub output: Option<PathBuf>,
    pub path: u8,
}

#[derive(Debug, Clone, PartialEq)]
pub enum CliError {
    Usage(String),
    Domain(String),
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Domain(_) => 2,
        }
    }

    fn to_line(&self) -> String {
        let (kind, message) = match self {
            CliError::Usage(m) => ("usage", m),
            CliError::Domain(m) => ("domain", m),
        };
        format!("{}\n", json!({ "error": kind, "message": message }))
    }
}

impl From<crate::Error> for CliError {
    fn from(e: crate::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// What a run printed and how it exited.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunOutcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs one invocation; `argv[0]` is the program name.
pub fn run<I, T>(argv: I) -> RunOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(args) => args,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return RunOutcome {
                    code: 0,
                    stdout: e.to_string(),
                    stderr: String::new(),
                };
            }
            let msg = e.to_string();
            let first = msg.lines().next().unwrap_or("invalid arguments");
            let err = usage(first.trim_start_matches("error: "));
            return RunOutcome {
                code: err.code(),
                stdout: String::new(),
                stderr: err.to_line(),
            };
        }
    };
    match resolve(args).and_then(|cfg| execute(&cfg).map(|doc| (cfg, doc))) {
        Ok((cfg, doc)) => match &cfg.output {
            Some(path) => match std::fs::write(path, &doc) {
                Ok(()) => RunOutcome {
                    code: 0,
                    stdout: String::new(),
                    stderr: String::new(),
                },
                Err(e) => {
                    let err = usage(format!("cannot write {}: {e}", path.display()));
                    RunOutcome {
                        code: err.code(),
                        stdout: String::new(),
                        stderr: err.to_line(),
                    }
                }
            },
            None => RunOutcome {
                code: 0,
                stdout: doc,
                stderr: String::new(),
            },
        },
        Err(err) => RunOutcome {
            code: err.code(),
            stdout: String::new(),
            stderr: err.to_line(),
        },
    }
}

/// Reads a flat key-value config file. Values are returned in their textual
/// form so they go through the same parsers as command-line flags.
pub fn load_config(path: &Path) -> Result<BTreeMap<String, String>, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read config {}: {e}", path.display())))?;
    let table: Map<String, Value> = if text.trim_start().starts_with('{') {
        let value: Value = serde_json::from_str(&text)
            .map_err(|e| usage(format!("malformed config {}: {e}", path.display())))?;
        match value {
            Value::Object(mut obj) => match obj.remove("config") {
                Some(Value::Object(inner)) => inner,
                _ => obj,
            },
            _ => return Err(usage("config must be a key-value document")),
        }
    } else {
        let value: toml::Table = toml::from_str(&text)
            .map_err(|e| usage(format!("malformed config {}: {e}", path.display())))?;
        serde_json::to_value(value)
            .ok()
            .and_then(|v| v.as_object().cloned())
            .ok_or_else(|| usage("config must be a key-value document"))?
    };

    let mut out = BTreeMap::new();
    for (key, value) in table {
        if !CONFIG_KEYS.contains(&key.as_str()) {
            return Err(usage(format!("unknown config key `{key}`")));
        }
        out.insert(key.clone(), scalar_text(&key, &value)?);
    }
    Ok(out)
}

fn scalar_text(key: &str, value: &Value) -> Result<String, CliError> {
    match value {
        Value::String(s) => Ok(s.clone()),
        Value::Number(n) => Ok(n.to_string()),
        Value::Array(items) => items
            .iter()
            .map(|v| match v {
                Value::Number(n) => Ok(n.to_string()),
                Value::String(s) => Ok(s.clone()),
                _ => Err(usage(format!(
                    "config key `{key}` has a non-scalar list entry"
                ))),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(|parts| parts.join(",")),
        _ => Err(usage(format!(
            "config key `{key}` must be a number, string or list"
        ))),
    }
}

fn parse_f64(key: &str, text: &str) -> Result<f64, CliError> {
    text.trim()
        .parse::<f64>()
        .map_err(|_| usage(format!("--{key}: `{text}` is not a number")))
}

fn parse_count(text: &str) -> Result<u64, CliError> {
    let t = text.trim();
    if let Ok(n) = t.parse::<u64>() {
        return Ok(n);
    }
    // allow 1e6 and 100.0
    match t.parse::<f64>() {
        Ok(v) if v >= 0.0 && v.fract() == 0.0 && v <= u64::MAX as f64 => Ok(v as u64),
        _ => Err(usage(format!(
            "--queries: `{text}` is not a non-negative integer"
        ))),
    }
}

fn parse_list<T>(
    text: &str,
    parse: impl Fn(&str) -> Result<T, CliError>,
) -> Result<Vec<T>, CliError> {
    text.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(parse)
        .collect()
}

fn resolve(args: Args) -> Result<RunConfig, CliError> {
    let mut values = match &args.config {
        Some(path) => load_config(path)?,
        None => BTreeMap::new(),
    };
    let flags = [
        ("queries", args.queries),
        ("order", args.order),
        ("query-time-s", args.query_time_s),
        ("rest-mass-kg", args.rest_mass_kg),
        ("units", args.units),
        ("step", args.step),
        ("format", args.format),
        (
            "output",
            args.output.map(|p| p.to_string_lossy().into_owned()),
        ),
        ("path", args.path),
    ];
    for (key, value) in flags {
        if let Some(v) = value {
            values.insert(key.to_owned(), v);
        }
    }
    let get = |k: &str| values.get(k).map(String::as_str);

    let units = match get("units") {
        None | Some("natural") => UnitSystem::Natural,
        Some("si") => UnitSystem::Si,
        Some(other) => {
            return Err(usage(format!(
                "--units: expected natural or si, got `{other}`"
            )))
        }
    };
    let format = match get("format") {
        None | Some("json") => Format::Json,
        Some("csv") => Format::Csv,
        Some(other) => {
            return Err(usage(format!(
                "--format: expected json or csv, got `{other}`"
            )))
        }
    };
    let query_time = get("query-time-s")
        .map(|v| parse_f64("query-time-s", v))
        .transpose()?;
    let rest_mass_kg = get("rest-mass-kg")
        .map(|v| parse_f64("rest-mass-kg", v))
        .transpose()?;
    match units {
        UnitSystem::Natural if query_time.is_some() => {
            return Err(usage("--query-time-s requires --units si"))
        }
        UnitSystem::Natural if rest_mass_kg.is_some() => {
            return Err(usage("--rest-mass-kg requires --units si"))
        }
        UnitSystem::Si if rest_mass_kg.is_none() => {
            return Err(usage("--units si requires --rest-mass-kg"))
        }
        _ => {}
    }
    let path = match get("path") {
        None | Some("1") => 1,
        Some("2") => 2,
        Some(other) => return Err(usage(format!("--path: expected 1 or 2, got `{other}`"))),
    };

    Ok(RunConfig {
        command: args.command,
        queries: get("queries")
            .map(|v| parse_list(v, parse_count))
            .transpose()?
            .unwrap_or_default(),
        orders: get("order")
            .map(|v| parse_list(v, |s| parse_f64("order", s)))
            .transpose()?
            .unwrap_or_default(),
        query_time,
        rest_mass_kg,
        units,
        step: get("step").map(|v| parse_f64("step", v)).transpose()?,
        format,
        output: get("output").map(PathBuf::from),
        path,
    })
}

impl RunConfig {
    fn single_queries(&self) -> Result<u64, CliError> {
        match self.queries.as_slice() {
            [n] => Ok(*n),
            [] => Err(usage("missing required flag --queries")),
            _ => Err(usage("--queries takes a single value for this command")),
        }
    }

    fn single_order(&self) -> Result<f64, CliError> {
        match self.orders.as_slice() {
            [n] => Ok(*n),
            [] => Err(usage("missing required flag --order")),
            _ => Err(usage("--order takes a single value for this command")),
        }
    }

    fn spec(&self) -> Result<ComputationSpec, CliError> {
        let (n, order) = (self.single_queries()?, self.single_order()?);
        Ok(ComputationSpec::with_query_time(
            n,
            self.query_time.unwrap_or(1.0),
            order,
        )?)
    }

    fn rest_mass(&self) -> f64 {
        self.rest_mass_kg.unwrap_or(1.0)
    }

    /// The inputs that shaped the result, keyed like the flags.
    fn echo(&self) -> Value {
        let mut m = Map::new();
        let list = |v: Value, many: bool| {
            if many {
                v
            } else {
                v.as_array()
                    .and_then(|a| a.first().cloned())
                    .unwrap_or(Value::Null)
            }
        };
        if !self.queries.is_empty() {
            m.insert(
                "queries".into(),
                list(json!(self.queries), self.command == Command::Sweep),
            );
        }
        if !self.orders.is_empty() {
            m.insert(
                "order".into(),
                list(json!(self.orders), self.command == Command::Sweep),
            );
        }
        if let Some(dt) = self.query_time {
            m.insert("query-time-s".into(), json!(dt));
        }
        if let Some(kg) = self.rest_mass_kg {
            m.insert("rest-mass-kg".into(), json!(kg));
        }
        m.insert("units".into(), json!(self.units));
        if let Some(step) = self.step {
            m.insert("step".into(), json!(step));
        }
        if self.command == Command::Simulate {
            m.insert("path".into(), json!(self.path));
        }
        m.insert("format".into(), json!(self.format));
        Value::Object(m)
    }
}

/// Output of a command before rendering.
enum Document {
    Record(Value),
    Table {
        json: Value,
        header: Vec<String>,
        rows: Vec<Vec<Value>>,
    },
}

fn execute(cfg: &RunConfig) -> Result<String, CliError> {
    let doc = match cfg.command {
        Command::PlanInertial => cmd_plan_inertial(cfg)?,
        Command::PlanAccel => cmd_plan_accel(cfg)?,
        Command::Simulate => cmd_simulate(cfg)?,
        Command::Race => cmd_race(cfg)?,
        Command::Scenario => cmd_scenario(cfg)?,
        Command::Sweep => cmd_sweep(cfg)?,
    };
    Ok(match (doc, cfg.format) {
        (Document::Record(v), Format::Json) | (Document::Table { json: v, .. }, Format::Json) => {
            render_json(v)
        }
        (Document::Record(v), Format::Csv) => {
            let mut fields = Vec::new();
            flatten("", &v, &mut fields);
            let (header, row): (Vec<_>, Vec<_>) = fields.into_iter().unzip();
            render_csv(&header, &[row])
        }
        (Document::Table { header, rows, .. }, Format::Csv) => render_csv(&header, &rows),
    })
}

fn envelope(cfg: &RunConfig, body: Value) -> Value {
    let mut m = Map::new();
    m.insert("command".into(), json!(cfg.command));
    m.insert("config".into(), cfg.echo());
    if let Value::Object(body) = body {
        m.extend(body);
    }
    Value::Object(m)
}

fn cmd_plan_inertial(cfg: &RunConfig) -> Result<Document, CliError> {
    let plan = plan_inertial(cfg.spec()?, cfg.rest_mass())?;
    let mut body = json!({
        "plan": plan,
        "four_momentum": four_momentum(&plan),
    });
    if cfg.units == UnitSystem::Si {
        let u = cfg.units;
        body["si"] = json!({
            "energy_j": plan.energy_ratio * u.rest_energy(plan.rest_mass),
            "distance_m": u.length(plan.distance),
            "turnaround_distance_m": u.length(plan.turnaround_distance),
            "momentum_kg_m_s": plan.rest_mass * u.c() * four_momentum(&plan).components[1],
        });
    }
    Ok(Document::Record(envelope(cfg, body)))
}

fn cmd_plan_accel(cfg: &RunConfig) -> Result<Document, CliError> {
    let spec = cfg.spec()?;
    let plan = plan_accel(spec)?;
    let single = solve_acceleration(&spec)?;
    let mut body = json!({
        "single_leg_accel": single,
        "plan": plan,
    });
    if cfg.units == UnitSystem::Si {
        let u = cfg.units;
        let m0 = cfg.rest_mass();
        body["si"] = json!({
            "accel_m_s2": u.acceleration(plan.accel.value()),
            "single_leg_accel_m_s2": u.acceleration(single.value()),
            "max_distance_m": u.length(plan.max_distance),
            "fuel_single_leg_kg": plan.fuel_single_leg * m0,
            "fuel_full_path_kg": plan.fuel_full_path * m0,
        });
    }
    Ok(Document::Record(envelope(cfg, body)))
}

fn trace_table(json: Value, trace: &WorldlineTrace) -> Document {
    Document::Table {
        json,
        header: ["tau", "t", "x", "beta"].map(String::from).to_vec(),
        rows: trace
            .samples
            .iter()
            .map(|s| vec![json!(s.tau), json!(s.t), json!(s.x), json!(s.beta)])
            .collect(),
    }
}

fn cmd_simulate(cfg: &RunConfig) -> Result<Document, CliError> {
    let spec = cfg.spec()?;
    if cfg.path == 1 {
        let step = cfg.step.unwrap_or(spec.proper_time() / 1000.0);
        let (trace, report) = simulate_path1_with_step(spec, step)?;
        let body = json!({ "path_label": trace.path_label, "step": trace.step, "report": report, "samples": trace.samples });
        return Ok(trace_table(envelope(cfg, body), &trace));
    }
    let plan = plan_accel(spec)?;
    if plan.accel.is_inertial() {
        return Err(CliError::Domain(
            "order 1 needs no acceleration; use --path 1".into(),
        ));
    }
    let g = ProperAcceleration::new(plan.accel.value())?;
    let step = cfg.step.unwrap_or(plan.proper_time / 1e5);
    let sim = simulate_path2(g, plan.proper_time, step)?;
    let body = json!({
        "path_label": sim.trace.path_label,
        "step": sim.trace.step,
        "accel": g,
        "report": sim.report,
        "simulated_max_distance": sim.simulated_max_distance,
        "composed_max_distance": sim.plan.max_distance,
        "half_trip_max_distance": sim.plan.half_trip_max_distance,
        "half_trip_rel_error": sim.half_trip_rel_error,
        "half_trip_refuted": sim.half_trip_refuted,
        "samples": sim.trace.samples,
    });
    Ok(trace_table(envelope(cfg, body), &sim.trace))
}

fn cmd_race(cfg: &RunConfig) -> Result<Document, CliError> {
    let report = race_grover(cfg.single_queries()?, cfg.single_order()?, cfg.rest_mass())?;
    let mut body = json!({ "report": report });
    if cfg.units == UnitSystem::Si {
        let e0 = cfg.units.rest_energy(cfg.rest_mass());
        body["si"] = json!({
            "classical_energy_j": report.classical_energy * e0,
            "grover_equivalent_energy_j": report.grover_equivalent_energy * e0,
        });
    }
    Ok(Document::Record(envelope(cfg, body)))
}

fn cmd_scenario(cfg: &RunConfig) -> Result<Document, CliError> {
    let body = json!({ "scenario": "lhc", "result": lhc_scenario() });
    Ok(Document::Record(envelope(cfg, body)))
}

fn cmd_sweep(cfg: &RunConfig) -> Result<Document, CliError> {
    if cfg.queries.is_empty() {
        return Err(usage("missing required flag --queries"));
    }
    if cfg.orders.is_empty() {
        return Err(usage("missing required flag --order"));
    }
    let rows = sweep_table(&cfg.queries, &cfg.orders, cfg.rest_mass());
    let header = [
        "queries",
        "order",
        "proper_time",
        "beta",
        "energy_ratio",
        "distance",
        "accel",
        "errors",
    ]
    .map(String::from)
    .to_vec();
    let table = rows
        .iter()
        .map(|r| {
            vec![
                json!(r.queries),
                json!(r.order),
                json!(r.proper_time),
                json!(r.beta),
                json!(r.energy_ratio),
                json!(r.distance),
                json!(r.accel),
                json!(r.errors.join("; ")),
            ]
        })
        .collect();
    Ok(Document::Table {
        json: envelope(cfg, json!({ "rows": rows })),
        header,
        rows: table,
    })
}

/// Rounds a float to [`SIGNIFICANT_DIGITS`].
pub fn round_significant(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x)
        .parse()
        .unwrap_or(x)
}

fn round_floats(v: &mut Value) {
    match v {
        Value::Number(n) if n.is_f64() => {
            if let Some(r) = n
                .as_f64()
                .map(round_significant)
                .and_then(serde_json::Number::from_f64)
            {
                *n = r;
            }
        }
        Value::Array(items) => items.iter_mut().for_each(round_floats),
        Value::Object(map) => map.values_mut().for_each(round_floats),
        _ => {}
    }
}

fn render_json(mut v: Value) -> String {
    round_floats(&mut v);
    let mut s = serde_json::to_string_pretty(&v).expect("JSON values always serialise");
    s.push('\n');
    s
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, Value)>) {
    let key = |k: &str| {
        if prefix.is_empty() {
            k.to_owned()
        } else {
            format!("{prefix}.{k}")
        }
    };
    match v {
        Value::Object(map) => map.iter().for_each(|(k, v)| flatten(&key(k), v, out)),
        Value::Array(items) => items
            .iter()
            .enumerate()
            .for_each(|(i, v)| flatten(&key(&i.to_string()), v, out)),
        other => out.push((prefix.to_owned(), other.clone())),
    }
}

fn csv_cell(v: &Value) -> String {
    let mut v = v.clone();
    round_floats(&mut v);
    let text = match v {
        Value::Null => String::new(),
        Value::String(s) => s,
        other => other.to_string(),
    };
    if text.contains([',', '"', '\n']) {
        format!("\"{}\"", text.replace('"', "\"\""))
    } else {
        text
    }
}

fn render_csv(header: &[String], rows: &[Vec<Value>]) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for row in rows {
        out.push_str(&row.iter().map(csv_cell).collect::<Vec<_>>().join(","));
        out.push('\n');
    }
    out
}
