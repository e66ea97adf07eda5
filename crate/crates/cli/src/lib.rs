//! Command-line front end for `ordring`.
//!
//! Exit codes: 0 success, 1 property failure, 2 usage or parse error.

pub mod script;

use std::cmp::Ordering;
use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ordring::literal::{is_tower_literal, parse_ring, parse_tower};
use ordring::realization::{probe_cone_closure, OUT_OF_SCOPE_NOTICE};
use ordring::suite::{run_suite, OutputFormat, RunConfig};
use ordring::{LeadingTerm, ProbeReport, StageFlavor, Tower, TowerElement, UnitVerdict};
use serde::Deserialize;
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "ordring", version, about = "Ordered group rings, units and ordered module towers")]
pub struct Cli {
    #[command(flatten)]
    pub opts: Opts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

/// Flags shared by every subcommand. Unset flags fall back to the `--config`
/// file and then to the built-in defaults.
#[derive(Debug, Default, Args)]
pub struct Opts {
    /// Group kind: free_abelian:N, heisenberg, klein, lexprod(A,B)
    #[arg(long, global = true)]
    pub group: Option<String>,
    /// Rank of the base free module
    #[arg(long, global = true)]
    pub rank: Option<usize>,
    /// Primes generating S, comma separated
    #[arg(long, global = true, value_delimiter = ',')]
    pub primes: Option<Vec<u64>>,
    /// Stage flavors, comma separated (free|divisible)
    #[arg(long, global = true, value_delimiter = ',')]
    pub flavors: Option<Vec<StageFlavor>>,
    #[arg(long, global = true)]
    pub trials: Option<u64>,
    #[arg(long, global = true)]
    pub radius: Option<u32>,
    #[arg(long, global = true)]
    pub coeff_bound: Option<u32>,
    /// 64-bit seed, decimal or 0x-prefixed hex
    #[arg(long, global = true, value_parser = parse_seed)]
    pub seed: Option<u64>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// TOML file with any of the keys above
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compare two ring or tower literals
    Cmp {
        #[arg(allow_hyphen_values = true)]
        lhs: String,
        #[arg(allow_hyphen_values = true)]
        rhs: String,
    },
    /// Decide whether a ring literal is a unit
    Unit {
        #[arg(allow_hyphen_values = true)]
        literal: String,
    },
    /// Run every property suite
    Suite,
    /// Execute a tower script (path, or - for stdin)
    Tower { script: PathBuf },
    /// Probe closure of the positive cone under multiplication
    Probe,
}

fn parse_seed(s: &str) -> Result<u64, String> {
    match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => s.parse(),
    }
    .map_err(|e| e.to_string())
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    group: Option<String>,
    rank: Option<usize>,
    primes: Option<Vec<u64>>,
    flavors: Option<Vec<String>>,
    trials: Option<u64>,
    radius: Option<u32>,
    coeff_bound: Option<u32>,
    seed: Option<u64>,
    format: Option<String>,
}

/// What a command printed and how it should exit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String, code: i32) -> Self {
        Outcome { stdout, stderr: String::new(), code }
    }
}

struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

pub fn resolve_config(opts: &Opts) -> Result<RunConfig, String> {
    let file = match &opts.config {
        Some(path) => {
            let src = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
            toml::from_str::<FileConfig>(&src).map_err(|e| format!("{}: {e}", path.display()))?
        }
        None => FileConfig::default(),
    };
    let file_flavors = file
        .flavors
        .map(|v| v.iter().map(|s| s.parse::<StageFlavor>()).collect::<Result<Vec<_>, _>>())
        .transpose()
        .map_err(|e| e.to_string())?;
    let file_format = match file.format.as_deref() {
        None => None,
        Some("text") => Some(Format::Text),
        Some("structured") => Some(Format::Structured),
        Some(other) => return Err(format!("unknown format `{other}`")),
    };
    let d = RunConfig::default();
    let format = opts.format.or(file_format).map_or(d.format, |f| match f {
        Format::Text => OutputFormat::Text,
        Format::Structured => OutputFormat::Structured,
    });
    Ok(RunConfig {
        group: opts.group.clone().or(file.group).unwrap_or(d.group),
        rank: opts.rank.or(file.rank).unwrap_or(d.rank),
        primes: opts.primes.clone().or(file.primes).unwrap_or(d.primes),
        flavors: opts.flavors.clone().or(file_flavors).unwrap_or(d.flavors),
        trials: opts.trials.or(file.trials).unwrap_or(d.trials),
        radius: opts.radius.or(file.radius).unwrap_or(d.radius),
        coeff_bound: opts.coeff_bound.or(file.coeff_bound).unwrap_or(d.coeff_bound),
        seed: opts.seed.or(file.seed).unwrap_or(d.seed),
        format,
    })
}

pub fn run(cli: Cli) -> Outcome {
    let structured = cli.opts.format == Some(Format::Structured);
    let name = match cli.command {
        Command::Cmp { .. } => "cmp",
        Command::Unit { .. } => "unit",
        Command::Suite => "suite",
        Command::Tower { .. } => "tower",
        Command::Probe => "probe",
    };
    let result = resolve_config(&cli.opts).map_err(Usage).and_then(|config| match &cli.command {
        Command::Cmp { lhs, rhs } => cmd_cmp(&config, lhs, rhs),
        Command::Unit { literal } => cmd_unit(&config, literal),
        Command::Suite => cmd_suite(&config),
        Command::Tower { script } => cmd_tower(&config, script),
        Command::Probe => cmd_probe(&config),
    });
    match result {
        Ok(outcome) => outcome,
        Err(Usage(message)) => {
            let stdout = if structured {
                json!({ "command": name, "error": message }).to_string() + "\n"
            } else {
                String::new()
            };
            Outcome { stdout, stderr: format!("error: {message}\n"), code: EXIT_USAGE }
        }
    }
}

fn is_structured(config: &RunConfig) -> bool {
    config.format == OutputFormat::Structured
}

fn emit(config: &RunConfig, text: String, doc: Value, code: i32) -> Outcome {
    if is_structured(config) {
        Outcome::ok(serde_json::to_string_pretty(&doc).expect("json") + "\n", code)
    } else {
        Outcome::ok(text, code)
    }
}

/// Component of a nonzero tower element that fixes its sign, with that
/// component's leading term.
fn tower_deciding(d: &TowerElement) -> Option<(String, LeadingTerm)> {
    if let Some((k, f)) = d.fracs().iter().enumerate().rev().find(|(_, f)| !f.is_zero()) {
        return Some((format!("g{k}"), f.numerator().leading().ok()?));
    }
    let (i, c) = d.base_vector().coords().iter().enumerate().find(|(_, c)| !c.is_zero())?;
    Some((format!("e{i}"), c.leading().ok()?))
}

fn cmd_cmp(config: &RunConfig, lhs: &str, rhs: &str) -> Result<Outcome, Usage> {
    let (verdict, deciding, lhs_n, rhs_n): (Ordering, Option<String>, String, String) =
        if is_tower_literal(lhs) || is_tower_literal(rhs) {
            let tower = config.tower()?;
            let a = parse_tower(&tower, lhs)?;
            let b = parse_tower(&tower, rhs)?;
            let d = a.sub(&b)?;
            let deciding = tower_deciding(&d).map(|(c, t)| format!("{c}: {t}"));
            (a.cmp(&b)?, deciding, a.to_string(), b.to_string())
        } else {
            let kind = config.group_kind()?;
            let a = parse_ring(&kind, lhs)?;
            let b = parse_ring(&kind, rhs)?;
            let deciding = a.sub(&b)?.leading().ok().map(|t| t.to_string());
            (a.cmp_ring(&b)?, deciding, a.to_string(), b.to_string())
        };
    let verdict = format!("{verdict:?}");
    let text = format!("{verdict}\ndeciding term: {}\n", deciding.as_deref().unwrap_or("none"));
    let doc = json!({
        "command": "cmp",
        "group": config.group,
        "lhs": lhs_n,
        "rhs": rhs_n,
        "verdict": verdict,
        "deciding_term": deciding,
    });
    Ok(emit(config, text, doc, EXIT_OK))
}

fn cmd_unit(config: &RunConfig, literal: &str) -> Result<Outcome, Usage> {
    let kind = config.group_kind()?;
    let r = parse_ring(&kind, literal)?;
    let (text, doc) = match r.try_invert() {
        UnitVerdict::Unit { inverse } => (
            format!("unit\ninverse: {inverse}\njustified_by_biorder: {}\n", kind.is_bi_ordered()),
            json!({
                "command": "unit",
                "group": config.group,
                "element": r.to_string(),
                "verdict": "unit",
                "inverse": inverse.to_string(),
                "justified_by_biorder": kind.is_bi_ordered(),
            }),
        ),
        UnitVerdict::NonUnit { reason, justified_by_biorder } => (
            format!("non-unit\nreason: {reason}\njustified_by_biorder: {justified_by_biorder}\n"),
            json!({
                "command": "unit",
                "group": config.group,
                "element": r.to_string(),
                "verdict": "non-unit",
                "reason": reason,
                "justified_by_biorder": justified_by_biorder,
            }),
        ),
    };
    Ok(emit(config, text, doc, EXIT_OK))
}

fn cmd_suite(config: &RunConfig) -> Result<Outcome, Usage> {
    config.validate()?;
    let report = run_suite(config)?;
    let code = if report.passed { EXIT_OK } else { EXIT_FAILURE };
    let out = if is_structured(config) { report.to_json() + "\n" } else { report.to_text() };
    Ok(Outcome::ok(out, code))
}

fn read_script(path: &PathBuf) -> Result<String, Usage> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| Usage(format!("{}: {e}", path.display())))
    }
}

fn tower_header(tower: &Tower) -> String {
    let primes: Vec<String> = tower.sconfig().primes().iter().map(u64::to_string).collect();
    let flavors: Vec<String> = tower.flavors().iter().map(StageFlavor::to_string).collect();
    format!(
        "tower: group={} rank={} primes={} flavors={}\n",
        tower.group(),
        tower.rank(),
        primes.join(","),
        flavors.join(",")
    )
}

fn cmd_tower(config: &RunConfig, path: &PathBuf) -> Result<Outcome, Usage> {
    let tower = config.tower()?;
    let src = read_script(path)?;
    let run = script::run_script(&tower, &src)?;
    let wd = &run.well_definedness;
    let code = if wd.failures.is_empty() { EXIT_OK } else { EXIT_FAILURE };
    let mut text = tower_header(&tower);
    for s in &run.steps {
        match (&s.verdict, &s.name, &s.value, s.stage, s.sign) {
            (Some(v), ..) => text.push_str(&format!("step {}: {} -> {v}\n", s.step, s.line)),
            (None, Some(n), Some(val), Some(stage), Some(sign)) => {
                text.push_str(&format!("step {}: {n} = {val}  stage {stage}  sign {sign:?}\n", s.step))
            }
            _ => {}
        }
    }
    text.push_str(&format!("well-definedness: {} checks, {} failures\n", wd.checks, wd.failures.len()));
    for f in &wd.failures {
        text.push_str(&format!("  {f}\n"));
    }
    let doc = json!({
        "command": "tower",
        "tower": {
            "group": tower.group().to_string(),
            "rank": tower.rank(),
            "primes": tower.sconfig().primes(),
            "flavors": tower.flavors(),
        },
        "steps": run.steps,
        "well_definedness": run.well_definedness,
    });
    Ok(emit(config, text, doc, code))
}

fn report_text(r: &ProbeReport, out: &mut String) {
    let status = match (r.passed(), r.informational) {
        (true, _) => "pass",
        (false, true) => "info",
        (false, false) => "FAIL",
    };
    out.push_str(&format!("{status:4}  {:<24} trials={} failures={}\n", r.property, r.trials, r.failures));
    for w in r.witnesses.iter().take(3) {
        out.push_str(&format!("      witness: {} => {}\n", w.inputs.join(", "), w.verdicts.join(", ")));
    }
}

fn cmd_probe(config: &RunConfig) -> Result<Outcome, Usage> {
    config.validate()?;
    let kind = config.group_kind()?;
    let probe = probe_cone_closure(&kind, config.trials, config.radius, config.coeff_bound, config.seed)?;
    let violation = probe.violation_found();
    let verdict = if violation { "violation found" } else { "closed" };
    let code = if violation && kind.is_bi_ordered() { EXIT_FAILURE } else { EXIT_OK };
    let mut text = format!("cone closure probe: group={kind} order={:?}\n", kind.order_class());
    report_text(&probe.sampled, &mut text);
    if let Some(ex) = &probe.exhaustive {
        report_text(ex, &mut text);
    }
    text.push_str(&format!("verdict: {verdict}\nscope: {OUT_OF_SCOPE_NOTICE}\n"));
    let doc = json!({
        "command": "probe",
        "group": kind.to_string(),
        "order_class": format!("{:?}", kind.order_class()),
        "verdict": verdict,
        "sampled": probe.sampled,
        "exhaustive": probe.exhaustive,
        "out_of_scope": [OUT_OF_SCOPE_NOTICE],
    });
    Ok(emit(config, text, doc, code))
}
