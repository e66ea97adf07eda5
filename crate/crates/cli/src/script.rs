//! Tower scripts: one step per line, `#` starts a comment.
//!
//! ```text
//! let  NAME = <tower literal>
//! lift NAME = BASE by <frac literal>      # BASE is a name or 0
//! act  NAME = SRC by <ring literal>
//! add  NAME = A B
//! cmp  A B
//! sign A
//! ```

use std::collections::BTreeMap;

use ordring::literal::{parse_frac, parse_ring, parse_tower};
use ordring::tower::well_definedness_probe;
use ordring::{SValue, Sign, Tower, TowerElement};
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct StepOutcome {
    pub step: usize,
    pub line: String,
    pub name: Option<String>,
    pub value: Option<String>,
    pub stage: Option<usize>,
    pub sign: Option<Sign>,
    pub verdict: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ProbeSummary {
    pub checks: u64,
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ScriptRun {
    pub steps: Vec<StepOutcome>,
    pub well_definedness: ProbeSummary,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepError {
    pub step: usize,
    pub message: String,
}

impl std::fmt::Display for StepError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "step {}: {}", self.step, self.message)
    }
}

fn is_name(s: &str) -> bool {
    let mut chars = s.chars();
    chars.next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

struct Env<'a> {
    tower: &'a Tower,
    names: BTreeMap<String, TowerElement>,
}

impl Env<'_> {
    fn get(&self, name: &str) -> Result<TowerElement, String> {
        if name == "0" {
            return Ok(self.tower.zero(0));
        }
        self.names.get(name).cloned().ok_or_else(|| format!("unknown name `{name}`"))
    }
}

/// `NAME = REST`
fn binding(rest: &str) -> Result<(&str, &str), String> {
    let (name, rhs) = rest.split_once('=').ok_or("expected `NAME = ...`")?;
    let name = name.trim();
    if !is_name(name) {
        return Err(format!("invalid name `{name}`"));
    }
    Ok((name, rhs.trim()))
}

/// `SRC by LITERAL`
fn source_by(rhs: &str) -> Result<(&str, &str), String> {
    let (src, lit) = rhs.split_once(" by ").ok_or("expected `SOURCE by LITERAL`")?;
    Ok((src.trim(), lit.trim()))
}

pub fn run_script(tower: &Tower, script: &str) -> Result<ScriptRun, StepError> {
    let mut env = Env { tower, names: BTreeMap::new() };
    let mut steps = Vec::new();
    let mut step = 0;
    for raw in script.lines() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        step += 1;
        let outcome = run_step(&mut env, step, line).map_err(|message| StepError { step, message })?;
        steps.push(outcome);
    }
    Ok(ScriptRun { steps, well_definedness: probe_all(tower, &env.names) })
}

fn run_step(env: &mut Env<'_>, step: usize, line: &str) -> Result<StepOutcome, String> {
    let (op, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
    let rest = rest.trim();
    let tower = env.tower;
    let mut outcome = StepOutcome {
        step,
        line: line.to_string(),
        name: None,
        value: None,
        stage: None,
        sign: None,
        verdict: None,
    };
    let produced = match op {
        "let" => {
            let (name, lit) = binding(rest)?;
            Some((name, parse_tower(tower, lit).map_err(|e| e.to_string())?))
        }
        "lift" => {
            let (name, rhs) = binding(rest)?;
            let (src, lit) = source_by(rhs)?;
            let base = env.get(src)?;
            let frac = parse_frac(tower, lit).map_err(|e| e.to_string())?;
            Some((name, tower.lift(&base, frac).map_err(|e| e.to_string())?))
        }
        "act" => {
            let (name, rhs) = binding(rest)?;
            let (src, lit) = source_by(rhs)?;
            let y = env.get(src)?;
            let r = parse_ring(tower.group(), lit).map_err(|e| e.to_string())?;
            Some((name, y.act(&r).map_err(|e| e.to_string())?))
        }
        "add" => {
            let (name, rhs) = binding(rest)?;
            let mut it = rhs.split_whitespace();
            let (Some(a), Some(b), None) = (it.next(), it.next(), it.next()) else {
                return Err("expected `add NAME = A B`".into());
            };
            Some((name, env.get(a)?.add(&env.get(b)?).map_err(|e| e.to_string())?))
        }
        "cmp" => {
            let mut it = rest.split_whitespace();
            let (Some(a), Some(b), None) = (it.next(), it.next(), it.next()) else {
                return Err("expected `cmp A B`".into());
            };
            let o = env.get(a)?.cmp(&env.get(b)?).map_err(|e| e.to_string())?;
            outcome.verdict = Some(format!("{o:?}"));
            None
        }
        "sign" => {
            let y = env.get(rest)?;
            outcome.name = Some(rest.to_string());
            outcome.value = Some(y.to_string());
            outcome.stage = Some(y.stage());
            outcome.sign = Some(y.sign());
            outcome.verdict = Some(format!("{:?}", y.sign()));
            None
        }
        other => return Err(format!("unknown step `{other}`")),
    };
    if let Some((name, y)) = produced {
        tower.validate(&y).map_err(|e| e.to_string())?;
        outcome.name = Some(name.to_string());
        outcome.value = Some(y.to_string());
        outcome.stage = Some(y.stage());
        outcome.sign = Some(y.sign());
        env.names.insert(name.to_string(), y);
    }
    Ok(outcome)
}

/// Multipliers `1`, `p`, `p^2` per prime and the product of all primes.
fn multipliers(tower: &Tower) -> Vec<SValue> {
    let primes = tower.sconfig().primes();
    let mut out = vec![SValue::one()];
    for &p in primes {
        out.push(SValue::prime_power(p, 1));
        out.push(SValue::prime_power(p, 2));
    }
    out.push(primes.iter().fold(SValue::one(), |acc, &p| acc.mul(&SValue::prime_power(p, 1))));
    out
}

fn probe_all(tower: &Tower, names: &BTreeMap<String, TowerElement>) -> ProbeSummary {
    let ms = multipliers(tower);
    let mut checks = 0;
    let mut failures = Vec::new();
    for (name, y) in names.iter().filter(|(_, y)| y.stage() > 0) {
        for s in &ms {
            for s2 in &ms {
                checks += 1;
                let report = well_definedness_probe(y, s, s2);
                if !report.passed() {
                    failures.push(format!("{name} with s = {s}, s' = {s2}: {}", report.failures.join("; ")));
                }
            }
        }
    }
    ProbeSummary { checks, failures }
}
