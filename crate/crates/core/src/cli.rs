//! The `wordlab` command line.
//!
//! Five subcommands expose the library: `costs` prints memory-cost tables,
//! `pareto` the six-order score table with front membership, `dynamics`
//! runs the Metropolis chain and writes its artifacts, `ingest` summarizes
//! a dominant-order table, and `verify` reruns the brute-force claims.
//!
//! Flags can be preloaded from a flat `key=value` file via `--config`;
//! explicit flags win over config values, which win over defaults.  Data
//! goes to stdout, diagnostics to stderr.  Exit codes: 0 on success, 1 for
//! domain or configuration errors, 2 for I/O or parse errors.

use std::collections::BTreeMap;
use std::fmt::Display;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::cost::CostFunction;
use crate::dynamics::{
    build_ring, classify_dominance, count_local_minima, simulate_trajectory,
    stationary_distribution, transition_matrix, ChainSpec,
};
use crate::error::{Error, Result};
use crate::layout::ConstituentLayout;
use crate::ordering::{
    front_flags, scalarized_energy, score_orders, svo_layout, DominantOrder, EnergyParams,
    WordOrder,
};
use crate::typology::{parse_language_table, summarize};
use crate::verify::{run_claims, VerifyOptions};

const DEFAULT_LAMBDA: f64 = 0.5;
const DEFAULT_MU: f64 = 0.5;
const DEFAULT_BETA: f64 = 2.0;
const DEFAULT_STEPS: usize = 100_000;
const DEFAULT_SEED: u64 = 42;
const DEFAULT_THETA: f64 = 2.0 / 3.0;

#[derive(Debug, Parser)]
#[command(name = "wordlab", version, about = "Word-order constraint laboratory")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Memory-cost tables by head position, optionally at the word level.
    Costs(CostsArgs),
    /// Score the six orders and mark the Pareto front.
    Pareto(ParetoArgs),
    /// Run the Metropolis chain and write landscape, stationary
    /// distribution, trajectory, and summary files.
    Dynamics(DynamicsArgs),
    /// Summarize a dominant-order table by verb position.
    Ingest(IngestArgs),
    /// Recheck the closed-form claims by brute force.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Csv,
    Json,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(Error::config(format!("unknown format {other:?}, expected csv or json"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CostKindArg {
    Linear,
    Power,
    #[value(alias = "logarithmic")]
    Log,
}

impl FromStr for CostKindArg {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "linear" => Ok(CostKindArg::Linear),
            "power" => Ok(CostKindArg::Power),
            "log" | "logarithmic" => Ok(CostKindArg::Log),
            other => Err(Error::config(format!(
                "unknown cost function {other:?}, expected linear, power, or log"
            ))),
        }
    }
}

#[derive(Debug, Args)]
struct CostsArgs {
    /// Number of dependents.
    #[arg(long)]
    n: Option<usize>,
    /// Cost function: linear, power, or log.
    #[arg(long, value_enum)]
    g: Option<CostKindArg>,
    /// Exponent for the power cost function.
    #[arg(long)]
    exponent: Option<f64>,
    /// Word counts for subject, verb, object (switches on word-level rows).
    #[arg(long)]
    sizes: Option<String>,
    /// Restrict word-level rows to one order.
    #[arg(long)]
    order: Option<WordOrder>,
    #[arg(long, value_enum)]
    format: Option<OutputFormat>,
    /// Flat key=value file supplying defaults for the flags above.
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct ParetoArgs {
    #[arg(long, value_enum)]
    g: Option<CostKindArg>,
    #[arg(long)]
    exponent: Option<f64>,
    /// Word counts for subject, verb, object.
    #[arg(long)]
    sizes: Option<String>,
    /// Weight of memory against predictability in the energy column.
    #[arg(long)]
    lambda: Option<f64>,
    /// Weight of head against dependent predictability.
    #[arg(long)]
    mu: Option<f64>,
    #[arg(long, value_enum)]
    format: Option<OutputFormat>,
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct DynamicsArgs {
    #[arg(long)]
    lambda: Option<f64>,
    #[arg(long)]
    mu: Option<f64>,
    /// Inverse temperature of the Metropolis chain.
    #[arg(long)]
    beta: Option<f64>,
    /// Trajectory length including the initial SOV state.
    #[arg(long)]
    steps: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    /// Dominance threshold in (0.5, 1].
    #[arg(long)]
    theta: Option<f64>,
    /// Word counts for subject, verb, object.
    #[arg(long)]
    sizes: Option<String>,
    /// Directory for landscape.csv, stationary.csv, trajectory.csv, and
    /// summary.json.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct IngestArgs {
    /// Dominant-order table to read.
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<OutputFormat>,
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Largest dependent count for the sweeps.
    #[arg(long)]
    max_n: Option<usize>,
    /// Adds a constant cost function so the center-minimality claim must
    /// report a failure.
    #[arg(long)]
    inject_nonmonotone: bool,
    /// Seed for the sampled detailed-balance claim.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    config: Option<PathBuf>,
}

const CONFIG_KEYS: [&str; 15] = [
    "n", "g", "exponent", "sizes", "order", "lambda", "mu", "beta", "steps", "seed", "theta",
    "input", "out", "format", "max_n",
];

/// Values loaded from a `--config` file.
#[derive(Debug, Default)]
struct ConfigMap {
    values: BTreeMap<String, String>,
}

impl ConfigMap {
    fn load(path: Option<&Path>) -> Result<Self> {
        let mut values = BTreeMap::new();
        let Some(path) = path else {
            return Ok(ConfigMap { values });
        };
        let text = std::fs::read_to_string(path)?;
        for (index, raw_line) in text.lines().enumerate() {
            let line = raw_line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(Error::config(format!(
                    "config line {} is not key=value: {raw_line:?}",
                    index + 1
                )));
            };
            let key = key.trim();
            if !CONFIG_KEYS.contains(&key) {
                return Err(Error::config(format!("unknown config key {key:?}")));
            }
            values.insert(key.to_string(), value.trim().to_string());
        }
        Ok(ConfigMap { values })
    }

    fn get<T: FromStr>(&self, key: &str) -> Result<Option<T>>
    where
        T::Err: Display,
    {
        match self.values.get(key) {
            None => Ok(None),
            Some(raw) => raw.parse::<T>().map(Some).map_err(|err| {
                Error::config(format!("config key {key} has invalid value {raw:?}: {err}"))
            }),
        }
    }

    fn resolve<T: FromStr>(&self, flag: Option<T>, key: &str, default: T) -> Result<T>
    where
        T::Err: Display,
    {
        Ok(match flag {
            Some(value) => value,
            None => self.get(key)?.unwrap_or(default),
        })
    }

    fn require<T: FromStr>(&self, flag: Option<T>, key: &str) -> Result<T>
    where
        T::Err: Display,
    {
        match flag {
            Some(value) => Ok(value),
            None => self
                .get(key)?
                .ok_or_else(|| Error::config(format!("missing required option --{key}"))),
        }
    }
}

fn parse_sizes(raw: &str) -> Result<[usize; 3]> {
    let parts: Vec<&str> = raw.split(',').collect();
    if parts.len() != 3 {
        return Err(Error::config(format!(
            "sizes must be three comma-separated word counts, got {raw:?}"
        )));
    }
    let mut sizes = [0usize; 3];
    for (slot, part) in sizes.iter_mut().zip(parts) {
        *slot = part
            .trim()
            .parse()
            .map_err(|_| Error::config(format!("invalid word count {part:?} in sizes")))?;
    }
    Ok(sizes)
}

struct SizesSpec(String);

impl FromStr for SizesSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_sizes(s)?;
        Ok(SizesSpec(s.to_string()))
    }
}

fn build_cost_function(
    kind: CostKindArg,
    exponent_flag: Option<f64>,
    config: &ConfigMap,
    domain_max: usize,
) -> Result<CostFunction> {
    match kind {
        CostKindArg::Linear | CostKindArg::Log => {
            if exponent_flag.is_some() {
                return Err(Error::config("--exponent only applies to the power cost function"));
            }
            Ok(match kind {
                CostKindArg::Linear => CostFunction::linear(domain_max),
                _ => CostFunction::logarithmic(domain_max),
            })
        }
        CostKindArg::Power => {
            let exponent = match exponent_flag {
                Some(exponent) => exponent,
                None => config.get("exponent")?.ok_or_else(|| {
                    Error::config("the power cost function requires --exponent")
                })?,
            };
            CostFunction::power(exponent, domain_max)
        }
    }
}

fn layout_from_sizes(sizes: [usize; 3]) -> Result<ConstituentLayout> {
    svo_layout(sizes[0], sizes[1], sizes[2])
}

fn format_float(value: f64) -> String {
    format!("{value}")
}

fn json_line<T: serde::Serialize>(value: &T) -> Result<String> {
    serde_json::to_string(value)
        .map(|mut s| {
            s.push('\n');
            s
        })
        .map_err(|err| Error::domain(format!("serialization failed: {err}")))
}

/// Parses `args` (including the program name) and runs the selected
/// subcommand, writing data output to `out`.
pub fn run<W: Write>(args: &[String], out: &mut W) -> Result<()> {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err)
            if matches!(
                err.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            ) =>
        {
            write!(out, "{err}")?;
            return Ok(());
        }
        Err(err) => return Err(Error::config(err.to_string())),
    };
    match cli.command {
        Command::Costs(args) => cmd_costs(args, out),
        Command::Pareto(args) => cmd_pareto(args, out),
        Command::Dynamics(args) => cmd_dynamics(args, out),
        Command::Ingest(args) => cmd_ingest(args, out),
        Command::Verify(args) => cmd_verify(args, out),
    }
}

#[derive(serde::Serialize)]
struct PositionCostRow {
    n: usize,
    l: usize,
    g_kind: &'static str,
    cost: f64,
}

#[derive(serde::Serialize)]
struct WordCostRow {
    n: usize,
    l: usize,
    g_kind: &'static str,
    order: Option<&'static str>,
    cost: f64,
}

fn cmd_costs<W: Write>(args: CostsArgs, out: &mut W) -> Result<()> {
    let config = ConfigMap::load(args.config.as_deref())?;
    let n: usize = config.require(args.n, "n")?;
    if n == 0 {
        return Err(Error::domain("at least one dependent is required"));
    }
    let kind = config.resolve(args.g, "g", CostKindArg::Linear)?;
    let format = config.resolve(args.format, "format", OutputFormat::Csv)?;
    let sizes_spec: Option<SizesSpec> = match args.sizes {
        Some(raw) => Some(raw.parse()?),
        None => config.get("sizes")?,
    };
    let order: Option<WordOrder> = match args.order {
        Some(order) => Some(order),
        None => config.get("order")?,
    };

    let word_level = sizes_spec.is_some() || order.is_some();
    let sizes = match &sizes_spec {
        Some(SizesSpec(raw)) => parse_sizes(raw)?,
        None => [1, 1, 1],
    };
    if word_level && n != 2 {
        return Err(Error::config(format!(
            "word-level tables describe the three-constituent orders; use --n 2, got {n}"
        )));
    }
    let domain_max = n.max(sizes.iter().sum::<usize>().saturating_sub(1));
    let g = build_cost_function(kind, args.exponent, &config, domain_max)?;

    let mut position_rows = Vec::new();
    for l in 1..=n + 1 {
        position_rows.push(PositionCostRow {
            n,
            l,
            g_kind: g.kind_label(),
            cost: crate::cost::memory_cost_constituents(n, l, &g)?,
        });
    }

    if !word_level {
        match format {
            OutputFormat::Csv => {
                let mut table = String::from("n,l,g_kind,cost\n");
                for row in &position_rows {
                    table.push_str(&format!(
                        "{},{},{},{}\n",
                        row.n,
                        row.l,
                        row.g_kind,
                        format_float(row.cost)
                    ));
                }
                out.write_all(table.as_bytes())?;
            }
            OutputFormat::Json => out.write_all(json_line(&position_rows)?.as_bytes())?,
        }
        return Ok(());
    }

    let layout = layout_from_sizes(sizes)?;
    let orders: Vec<WordOrder> = match order {
        Some(order) => vec![order],
        None => WordOrder::ALL.to_vec(),
    };
    let mut rows: Vec<WordCostRow> = position_rows
        .into_iter()
        .map(|row| WordCostRow { n: row.n, l: row.l, g_kind: row.g_kind, order: None, cost: row.cost })
        .collect();
    for order in orders {
        let lin = order.linearization();
        rows.push(WordCostRow {
            n,
            l: order.verb_rank(),
            g_kind: g.kind_label(),
            order: Some(order.token()),
            cost: crate::cost::memory_cost_words(&layout, &lin, &g)?,
        });
    }
    match format {
        OutputFormat::Csv => {
            let mut table = String::from("n,l,g_kind,order,cost\n");
            for row in &rows {
                table.push_str(&format!(
                    "{},{},{},{},{}\n",
                    row.n,
                    row.l,
                    row.g_kind,
                    row.order.unwrap_or(""),
                    format_float(row.cost)
                ));
            }
            out.write_all(table.as_bytes())?;
        }
        OutputFormat::Json => out.write_all(json_line(&rows)?.as_bytes())?,
    }
    Ok(())
}

#[derive(serde::Serialize)]
struct ParetoRow {
    order: &'static str,
    memory: f64,
    memory_normalized: f64,
    head_pred: f64,
    dep_pred: f64,
    on_front: bool,
    energy: f64,
}

fn cmd_pareto<W: Write>(args: ParetoArgs, out: &mut W) -> Result<()> {
    let config = ConfigMap::load(args.config.as_deref())?;
    let kind = config.resolve(args.g, "g", CostKindArg::Linear)?;
    let format = config.resolve(args.format, "format", OutputFormat::Csv)?;
    let lambda = config.resolve(args.lambda, "lambda", DEFAULT_LAMBDA)?;
    let mu = config.resolve(args.mu, "mu", DEFAULT_MU)?;
    let sizes = match args.sizes {
        Some(raw) => parse_sizes(&raw)?,
        None => match config.get::<SizesSpec>("sizes")? {
            Some(SizesSpec(raw)) => parse_sizes(&raw)?,
            None => [1, 1, 1],
        },
    };
    let params = EnergyParams::new(lambda, mu)?;
    let layout = layout_from_sizes(sizes)?;
    let domain_max = layout.total_words().saturating_sub(1).max(2);
    let g = build_cost_function(kind, args.exponent, &config, domain_max)?;

    let scored = score_orders(&WordOrder::ALL, &layout, &g)?;
    let flags = front_flags(&scored);
    let rows: Vec<ParetoRow> = scored
        .iter()
        .zip(flags)
        .map(|(entry, on_front)| ParetoRow {
            order: entry.order.token(),
            memory: entry.scores.memory,
            memory_normalized: entry.scores.memory_normalized,
            head_pred: entry.scores.head_pred,
            dep_pred: entry.scores.dep_pred,
            on_front,
            energy: scalarized_energy(&entry.scores, &params),
        })
        .collect();
    match format {
        OutputFormat::Csv => {
            let mut table =
                String::from("order,memory,memory_normalized,head_pred,dep_pred,on_front,energy\n");
            for row in &rows {
                table.push_str(&format!(
                    "{},{},{},{},{},{},{}\n",
                    row.order,
                    format_float(row.memory),
                    format_float(row.memory_normalized),
                    format_float(row.head_pred),
                    format_float(row.dep_pred),
                    row.on_front,
                    format_float(row.energy)
                ));
            }
            out.write_all(table.as_bytes())?;
        }
        OutputFormat::Json => out.write_all(json_line(&rows)?.as_bytes())?,
    }
    Ok(())
}

#[derive(serde::Serialize)]
struct DynamicsSummary {
    reversion_count: u64,
    local_minima: usize,
    dominance: DominantOrder,
    pi: BTreeMap<WordOrder, f64>,
}

fn cmd_dynamics<W: Write>(args: DynamicsArgs, out: &mut W) -> Result<()> {
    let config = ConfigMap::load(args.config.as_deref())?;
    let lambda = config.resolve(args.lambda, "lambda", DEFAULT_LAMBDA)?;
    let mu = config.resolve(args.mu, "mu", DEFAULT_MU)?;
    let beta = config.resolve(args.beta, "beta", DEFAULT_BETA)?;
    let steps = config.resolve(args.steps, "steps", DEFAULT_STEPS)?;
    let seed = config.resolve(args.seed, "seed", DEFAULT_SEED)?;
    let theta = config.resolve(args.theta, "theta", DEFAULT_THETA)?;
    let out_dir: PathBuf = config.require(args.out, "out")?;
    let sizes = match args.sizes {
        Some(raw) => parse_sizes(&raw)?,
        None => match config.get::<SizesSpec>("sizes")? {
            Some(SizesSpec(raw)) => parse_sizes(&raw)?,
            None => [1, 1, 1],
        },
    };

    let params = EnergyParams::new(lambda, mu)?;
    let layout = layout_from_sizes(sizes)?;
    let g = CostFunction::linear(layout.total_words().saturating_sub(1).max(2));
    let ring = build_ring();
    let spec = ChainSpec::from_layout(&layout, &g, &params, beta)?;
    let matrix = transition_matrix(&spec, &ring);
    let pi = stationary_distribution(&matrix)?;
    let minima = count_local_minima(spec.energies(), &ring)?;
    let dominance = classify_dominance(&pi, theta)?;
    let stats = simulate_trajectory(&spec, &ring, steps, seed)?;

    std::fs::create_dir_all(&out_dir)?;

    let mut landscape = String::from("order,energy\n");
    for order in WordOrder::ALL {
        landscape.push_str(&format!("{},{}\n", order, format_float(spec.energy(order))));
    }
    std::fs::write(out_dir.join("landscape.csv"), landscape)?;

    let mut stationary = String::from("order,energy,pi\n");
    for order in WordOrder::ALL {
        stationary.push_str(&format!(
            "{},{},{}\n",
            order,
            format_float(spec.energy(order)),
            format_float(pi[&order])
        ));
    }
    std::fs::write(out_dir.join("stationary.csv"), stationary)?;

    let mut trajectory = String::with_capacity(stats.len() * 8 + 16);
    trajectory.push_str("step,order\n");
    for (step, state) in stats.states().iter().enumerate() {
        trajectory.push_str(&format!("{step},{state}\n"));
    }
    std::fs::write(out_dir.join("trajectory.csv"), trajectory)?;

    let summary = DynamicsSummary {
        reversion_count: stats.reversion_count(),
        local_minima: minima,
        dominance,
        pi,
    };
    let summary_json = json_line(&summary)?;
    std::fs::write(out_dir.join("summary.json"), &summary_json)?;
    out.write_all(summary_json.as_bytes())?;
    Ok(())
}

fn cmd_ingest<W: Write>(args: IngestArgs, out: &mut W) -> Result<()> {
    let config = ConfigMap::load(args.config.as_deref())?;
    let input: PathBuf = config.require(args.input, "input")?;
    let format = config.resolve(args.format, "format", OutputFormat::Csv)?;
    let file = std::fs::File::open(&input)?;
    let records = parse_language_table(std::io::BufReader::new(file))?;
    let summary = summarize(&records);
    match format {
        OutputFormat::Csv => {
            out.write_all(
                format!(
                    "n1,n2,n3,none_count,total\n{},{},{},{},{}\n",
                    summary.n1, summary.n2, summary.n3, summary.none_count, summary.total
                )
                .as_bytes(),
            )?;
        }
        OutputFormat::Json => out.write_all(json_line(&summary)?.as_bytes())?,
    }
    Ok(())
}

fn cmd_verify<W: Write>(args: VerifyArgs, out: &mut W) -> Result<()> {
    let config = ConfigMap::load(args.config.as_deref())?;
    let defaults = VerifyOptions::default();
    let options = VerifyOptions {
        max_n: config.resolve(args.max_n, "max_n", defaults.max_n)?,
        inject_nonmonotone: args.inject_nonmonotone,
        seed: config.resolve(args.seed, "seed", defaults.seed)?,
    };
    if options.max_n == 0 {
        return Err(Error::domain("at least one dependent is required"));
    }
    let results = run_claims(&options)?;
    let mut failures = 0;
    for claim in &results {
        let status = if claim.passed { "PASS" } else { "FAIL" };
        writeln!(out, "{status} {}: {}", claim.name, claim.detail)?;
        if !claim.passed {
            failures += 1;
        }
    }
    if failures > 0 {
        return Err(Error::domain(format!(
            "{failures} of {} claims failed",
            results.len()
        )));
    }
    Ok(())
}
