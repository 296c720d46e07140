//! The `basesize` command-line front end.
//!
//! Every subcommand except `emit` prints one JSON run record on stdout:
//! the subcommand, its full configuration (including seeds and primes), the
//! output, the wall time and the crate version. `emit` prints the requested
//! table alone so that its output is byte-stable.
//!
//! Exit codes: 0 on success, 2 on usage or validation errors, 3 when a bound
//! criterion is inconclusive.

use crate::bounds::{self, BoundsError};
use crate::classdata::{load_dataset, resolve_dataset, ClassDataError};
use crate::finitecheck::{self, ActionKind, FiniteError, FiniteFamily, FiniteGroupAction, MatrixGroup};
use crate::formulas::{self, ActionSpec, FormulaError};
use crate::genstab::{self, GenstabError, ModuleSpec, VerifyOptions, DEFAULT_PRIME, SECOND_PRIME};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use std::time::Instant;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "basesize", version, about = "Base sizes of primitive actions of simple algebraic groups", arg_required_else_help = true)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundsMode {
    /// Upper bound on the generic base size.
    B1,
    /// Upper bound on the connected base size.
    B0,
    /// Compare the dataset's bounds with its recorded values.
    Sandwich,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FiniteMode {
    Base,
    Order,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Fixed-point-ratio bounds from a class-fusion dataset.
    Bounds {
        /// Shipped dataset name or path to a JSONL file.
        #[arg(long)]
        dataset: String,
        #[arg(long, value_enum, default_value = "b1")]
        mode: BoundsMode,
        /// Use the weak inequality for long root elements.
        #[arg(long)]
        refine_long_root: bool,
        /// Drop excludable semisimple records before bounding.
        #[arg(long)]
        reduce_semisimple: bool,
        /// Characteristic for `--mode b0`.
        #[arg(long)]
        characteristic: Option<u32>,
    },
    /// The closed-form triple `(b^0, b, b^1)` of an action.
    Formula {
        /// Action spec as JSON.
        #[arg(long)]
        spec: String,
    },
    /// Generic stabilizer dimensions of sampled configurations.
    Verify {
        /// Subspace action spec as JSON (omit with `--module`).
        #[arg(long)]
        spec: Option<String>,
        /// Number of parts; with `--c-max` searches for `b^0` instead.
        #[arg(long)]
        c: Option<usize>,
        #[arg(long)]
        c_max: Option<usize>,
        #[arg(long, default_value_t = 5)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Prime field (repeatable); defaults to two primes near 2^31.
        #[arg(long)]
        prime: Vec<u64>,
        /// Compute over the rationals.
        #[arg(long)]
        rational: bool,
        /// Module action instead of subspaces: `sym2` or `so_tensor`.
        #[arg(long)]
        module: Option<String>,
        /// Dimension for `--module`.
        #[arg(long)]
        n: Option<usize>,
        /// Second dimension for `--module so_tensor`.
        #[arg(long)]
        m: Option<usize>,
    },
    /// Exact computations in small finite matrix groups.
    Finite {
        /// GL (projectively PGL), SL or Sp.
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u32,
        /// points, subspaces:<d>, torus-normalizer, nondeg-pairs or forms.
        #[arg(long)]
        action: String,
        #[arg(long, value_enum, default_value = "base")]
        mode: FiniteMode,
        /// Keep matrices instead of working modulo scalars.
        #[arg(long)]
        linear: bool,
        /// For `--mode order` with subspaces: stabilizers of random `c`-tuples.
        #[arg(long)]
        c: Option<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
    /// Print a reproduced table: table:parab, table:ep, table:c or table:e.
    Emit {
        target: String,
        #[arg(long, value_enum, default_value = "csv")]
        format: TableFormat,
    },
}

/// Everything a run wrote, plus its exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

#[derive(Debug, Serialize)]
struct RunRecord {
    subcommand: &'static str,
    config: Value,
    output: Value,
    wall_time_ms: u128,
    version: &'static str,
}

enum Failure {
    Invalid(String),
    Inconclusive(String),
}

impl From<FormulaError> for Failure {
    fn from(e: FormulaError) -> Self {
        Failure::Invalid(e.to_string())
    }
}

impl From<BoundsError> for Failure {
    fn from(e: BoundsError) -> Self {
        match e {
            BoundsError::Inconclusive(_) | BoundsError::NoSemisimpleFamily => Failure::Inconclusive(e.to_string()),
            other => Failure::Invalid(other.to_string()),
        }
    }
}

impl From<ClassDataError> for Failure {
    fn from(e: ClassDataError) -> Self {
        Failure::Invalid(e.to_string())
    }
}

impl From<GenstabError> for Failure {
    fn from(e: GenstabError) -> Self {
        Failure::Invalid(e.to_string())
    }
}

impl From<FiniteError> for Failure {
    fn from(e: FiniteError) -> Self {
        Failure::Invalid(e.to_string())
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable output")
}

fn parse_spec(text: &str) -> Result<ActionSpec, Failure> {
    serde_json::from_str(text).map_err(|e| Failure::Invalid(format!("invalid spec: {e}")))
}

/// Parses `argv` (including the program name) and runs the subcommand.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() || e.kind() == clap::error::ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand {
                EXIT_INVALID
            } else {
                EXIT_OK
            };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { stdout: text, stderr: String::new(), code }
            } else {
                Outcome { stdout: String::new(), stderr: text, code }
            };
        }
    };
    if let Command::Emit { target, format } = &cli.command {
        return emit(target, *format);
    }
    let start = Instant::now();
    let result = match &cli.command {
        Command::Bounds { dataset, mode, refine_long_root, reduce_semisimple, characteristic } => {
            run_bounds(dataset, *mode, *refine_long_root, *reduce_semisimple, *characteristic).map(|(c, o)| ("bounds", c, o))
        }
        Command::Formula { spec } => run_formula(spec).map(|(c, o)| ("formula", c, o)),
        Command::Verify { spec, c, c_max, trials, seed, prime, rational, module, n, m } => {
            let primes = if prime.is_empty() { vec![DEFAULT_PRIME, SECOND_PRIME] } else { prime.clone() };
            let opts = VerifyOptions { trials: *trials, seed: *seed, primes, rational: *rational };
            run_verify(spec.as_deref(), *c, *c_max, &opts, module.as_deref(), *n, *m).map(|(c, o)| ("verify", c, o))
        }
        Command::Finite { family, n, q, action, mode, linear, c, seed, samples } => {
            run_finite(family, *n, *q, action, *mode, *linear, *c, *seed, *samples).map(|(c, o)| ("finite", c, o))
        }
        Command::Emit { .. } => unreachable!("handled above"),
    };
    match result {
        Ok((subcommand, config, output)) => {
            let rec = RunRecord { subcommand, config, output, wall_time_ms: start.elapsed().as_millis(), version: env!("CARGO_PKG_VERSION") };
            Outcome { stdout: serde_json::to_string_pretty(&rec).expect("serializable") + "\n", stderr: String::new(), code: EXIT_OK }
        }
        Err(Failure::Invalid(m)) => Outcome { stdout: String::new(), stderr: format!("error: {m}\n"), code: EXIT_INVALID },
        Err(Failure::Inconclusive(m)) => Outcome { stdout: String::new(), stderr: format!("inconclusive: {m}\n"), code: EXIT_INCONCLUSIVE },
    }
}

fn emit(target: &str, format: TableFormat) -> Outcome {
    let table = target.strip_prefix("table:").and_then(formulas::tables::table_by_name);
    match table {
        Some(t) => Outcome {
            stdout: match format {
                TableFormat::Csv => t.to_csv(),
                TableFormat::Json => t.to_json(),
            },
            stderr: String::new(),
            code: EXIT_OK,
        },
        None => Outcome {
            stdout: String::new(),
            stderr: format!("error: unknown emit target `{target}` (expected table:parab, table:ep, table:c or table:e)\n"),
            code: EXIT_INVALID,
        },
    }
}

fn run_bounds(dataset: &str, mode: BoundsMode, refine: bool, reduce: bool, characteristic: Option<u32>) -> Result<(Value, Value), Failure> {
    let path = resolve_dataset(dataset)?;
    let ds = load_dataset(&path)?;
    let config = json!({
        "dataset": dataset,
        "group": ds.header.group,
        "subgroup": ds.header.subgroup,
        "mode": mode,
        "refine_long_root": refine,
        "reduce_semisimple": reduce,
        "characteristic": characteristic,
    });
    let records = if reduce { bounds::apply_semisimple_reduction(&ds.records) } else { ds.records.clone() };
    let output = match mode {
        BoundsMode::B1 => to_value(&bounds::upper_bound_b1(&records, refine)?),
        BoundsMode::B0 => to_value(&bounds::upper_bound_b0(&records, characteristic.or(ds.header.characteristic))?),
        BoundsMode::Sandwich => to_value(&bounds::sandwich(dataset, &ds)?),
    };
    Ok((config, output))
}

fn run_formula(spec_text: &str) -> Result<(Value, Value), Failure> {
    let spec = parse_spec(spec_text)?;
    let triple = formulas::triple(&spec)?;
    let mut output = json!({ "description": spec.describe(), "triple": triple });
    if let Ok(v) = formulas::dimhalf_predicate(&spec) {
        output["dimhalf_predicate"] = json!(v);
    }
    Ok((json!({ "spec": spec }), output))
}

fn run_verify(
    spec_text: Option<&str>,
    c: Option<usize>,
    c_max: Option<usize>,
    opts: &VerifyOptions,
    module: Option<&str>,
    n: Option<usize>,
    m: Option<usize>,
) -> Result<(Value, Value), Failure> {
    let mut config = json!({ "trials": opts.trials, "seed": opts.seed, "primes": if opts.rational { json!([]) } else { json!(opts.primes) }, "rational": opts.rational, "c": c, "c_max": c_max });
    if let Some(label) = module {
        let n = n.ok_or_else(|| Failure::Invalid("--module needs --n".into()))?;
        let ms = ModuleSpec::parse(label, n, m)?;
        let c = c.ok_or_else(|| Failure::Invalid("--module needs --c".into()))?;
        config["module"] = to_value(&ms);
        return Ok((config, to_value(&genstab::module_stabilizer_dim(&ms, c, opts)?)));
    }
    let spec = parse_spec(spec_text.ok_or_else(|| Failure::Invalid("verify needs --spec or --module".into()))?)?;
    config["spec"] = to_value(&spec);
    let output = match (c, c_max) {
        (_, Some(cm)) => to_value(&genstab::estimate_b0(&spec, cm, opts)?),
        (Some(c), None) => to_value(&genstab::verify(&spec, c, opts)?),
        (None, None) => return Err(Failure::Invalid("verify needs --c or --c-max".into())),
    };
    Ok((config, output))
}

#[allow(clippy::too_many_arguments)]
fn run_finite(
    family: &str,
    n: usize,
    q: u32,
    action: &str,
    mode: FiniteMode,
    linear: bool,
    c: Option<usize>,
    seed: u64,
    samples: usize,
) -> Result<(Value, Value), Failure> {
    let fam: FiniteFamily = family.parse()?;
    let kind: ActionKind = action.parse()?;
    let config = json!({ "family": fam, "n": n, "q": q, "action": kind, "mode": mode, "projective": !linear, "c": c, "seed": seed, "samples": samples });
    if let (FiniteMode::Order, Some(c), ActionKind::Subspaces { d }) = (mode, c, kind) {
        if fam == FiniteFamily::Sp {
            return Err(Failure::Invalid("random tuple stabilizers are implemented for GL and SL".into()));
        }
        let rep = finitecheck::random_subspace_tuple_stabilizers(n, d, c, q, fam == FiniteFamily::SL, seed, samples.max(1))?;
        return Ok((config, to_value(&rep)));
    }
    let group = MatrixGroup::generate(fam, n, q, !linear, finitecheck::ELEMENT_BOUND)?;
    let act = FiniteGroupAction::new(group, kind)?;
    let output = match mode {
        FiniteMode::Base => to_value(&act.exact_base_size(seed)?),
        FiniteMode::Order => {
            let y = act.general_position_partner();
            let hist: serde_json::Map<String, Value> = act.pair_histogram().into_iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
            json!({
                "group": act.group.name(),
                "group_order": act.group.order(),
                "degree": act.degree(),
                "kernel_order": act.kernel_order(),
                "pair_stabilizer_histogram": hist,
                "general_position_pair": [0, y],
                "general_position_pair_stabilizer_order": act.stabilizer_order(&[0, y])?,
            })
        }
    };
    Ok((config, output))
}
