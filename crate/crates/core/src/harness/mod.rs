//! Seeded verification suite: named checks over fixtures and random
//! instances, and the conformance report built from them.

mod checks;
pub mod gen;

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::error::{PolarError, Result};

pub use gen::{derive_seed, generate_instance, Family, Gen};

/// Outcome of a single trial.
#[derive(Clone, Debug, PartialEq)]
pub enum Trial {
    Held,
    /// The hypothesis did not apply to this instance.
    Vacuous,
    Failed(Value),
}

impl Trial {
    pub fn check(ok: bool, witness: impl FnOnce() -> Value) -> Trial {
        if ok {
            Trial::Held
        } else {
            Trial::Failed(witness())
        }
    }
}

type TrialFn = fn(&mut Gen) -> Result<Trial>;

#[derive(Clone, Copy)]
pub(crate) enum Body {
    Random(TrialFn),
    /// Runs once; the trial count is ignored.
    Fixed(fn() -> Result<Trial>),
    Skipped(&'static str),
}

/// A registry entry.
#[derive(Clone, Copy)]
pub struct CheckDef {
    pub name: &'static str,
    /// The mathematical statement under test, in words.
    pub statement: &'static str,
    pub generator: &'static str,
    pub default_trials: usize,
    /// Why a pass only counts as one-sided evidence, when it does.
    pub caveat: Option<&'static str>,
    pub(crate) body: Body,
}

impl CheckDef {
    pub fn is_skipped(&self) -> bool {
        matches!(self.body, Body::Skipped(_))
    }
}

pub fn registry() -> &'static [CheckDef] {
    checks::REGISTRY
}

pub fn find_check(name: &str) -> Result<&'static CheckDef> {
    registry().iter().find(|c| c.name == name).ok_or_else(|| PolarError::UnknownCheck(name.to_string()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckSpec {
    pub name: String,
    pub statement: String,
    pub generator: String,
    pub trials: usize,
    pub seed: u64,
}

impl CheckSpec {
    pub fn new(name: &str, seed: u64, trials: Option<usize>) -> Result<Self> {
        let def = find_check(name)?;
        Ok(CheckSpec {
            name: def.name.to_string(),
            statement: def.statement.to_string(),
            generator: def.generator.to_string(),
            trials: trials.unwrap_or(def.default_trials),
            seed,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    PassWithCaveat {
        caveat: String,
    },
    Fail {
        /// Index and seed of the first failing trial; rerun it with [`replay`].
        trial: usize,
        trial_seed: u64,
        witness: Value,
    },
    Skipped {
        reason: String,
    },
}

impl Verdict {
    pub fn is_fail(&self) -> bool {
        matches!(self, Verdict::Fail { .. })
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::PassWithCaveat { .. } => "pass-with-caveat",
            Verdict::Fail { .. } => "fail",
            Verdict::Skipped { .. } => "skipped",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub statement: String,
    pub generator: String,
    pub seed: u64,
    #[serde(flatten)]
    pub verdict: Verdict,
    pub trials_run: usize,
    /// Trials whose instance did not meet the hypothesis.
    pub vacuous: usize,
    pub elapsed_ms: u64,
}

fn as_failure(r: Result<Trial>) -> Trial {
    r.unwrap_or_else(|e| Trial::Failed(serde_json::json!({ "error": e.to_string() })))
}

pub fn run_check(spec: &CheckSpec) -> Result<CheckReport> {
    let def = find_check(&spec.name)?;
    let start = Instant::now();
    let (verdict, trials_run, vacuous) = match def.body {
        Body::Skipped(reason) => (Verdict::Skipped { reason: reason.to_string() }, 0, 0),
        Body::Fixed(f) => match as_failure(f()) {
            Trial::Failed(witness) => (Verdict::Fail { trial: 0, trial_seed: 0, witness }, 1, 0),
            _ => (passing(def, false), 1, 0),
        },
        Body::Random(f) => {
            let outcomes: Vec<Trial> = (0..spec.trials)
                .into_par_iter()
                .map(|i| as_failure(f(&mut Gen::new(derive_seed(spec.seed, def.name, i as u64)))))
                .collect();
            let vacuous = outcomes.iter().filter(|t| **t == Trial::Vacuous).count();
            let first_fail = outcomes.into_iter().enumerate().find_map(|(i, t)| match t {
                Trial::Failed(w) => Some((i, w)),
                _ => None,
            });
            let verdict = match first_fail {
                Some((trial, witness)) => {
                    Verdict::Fail { trial, trial_seed: derive_seed(spec.seed, def.name, trial as u64), witness }
                }
                None => passing(def, spec.trials > 0 && vacuous == spec.trials),
            };
            (verdict, spec.trials, vacuous)
        }
    };
    Ok(CheckReport {
        name: def.name.to_string(),
        statement: def.statement.to_string(),
        generator: def.generator.to_string(),
        seed: spec.seed,
        verdict,
        trials_run,
        vacuous,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

fn passing(def: &CheckDef, all_vacuous: bool) -> Verdict {
    match (def.caveat, all_vacuous) {
        (_, true) => Verdict::PassWithCaveat { caveat: "no generated instance met the hypothesis".to_string() },
        (Some(c), false) => Verdict::PassWithCaveat { caveat: c.to_string() },
        (None, false) => Verdict::Pass,
    }
}

/// Reruns one trial of a randomized check from its derived seed.
pub fn replay(name: &str, trial_seed: u64) -> Result<Trial> {
    let def = find_check(name)?;
    Ok(match def.body {
        Body::Random(f) => as_failure(f(&mut Gen::new(trial_seed))),
        Body::Fixed(f) => as_failure(f()),
        Body::Skipped(_) => Trial::Vacuous,
    })
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub pass_with_caveat: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub checks: Vec<CheckReport>,
    pub summary: Summary,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.summary.fail == 0
    }

    /// One human-readable line per check.
    pub fn lines(&self) -> Vec<String> {
        self.checks
            .iter()
            .map(|c| {
                let extra = match &c.verdict {
                    Verdict::PassWithCaveat { caveat } => format!(" [{caveat}]"),
                    Verdict::Skipped { reason } => format!(" [{reason}]"),
                    Verdict::Fail { trial, .. } => format!(" [first failing trial {trial}]"),
                    Verdict::Pass => String::new(),
                };
                format!("{:<17} {:<16} {}{}", c.verdict.label(), c.name, c.statement, extra)
            })
            .collect()
    }
}

/// Runs the named checks (all of them when `only` is empty) in registry order.
pub fn run_all(seed: u64, trials: Option<usize>, only: &[String]) -> Result<VerifyReport> {
    let names: Vec<&str> = if only.is_empty() {
        registry().iter().map(|c| c.name).collect()
    } else {
        for n in only {
            find_check(n)?;
        }
        registry().iter().map(|c| c.name).filter(|n| only.iter().any(|o| o == n)).collect()
    };
    let mut checks = Vec::with_capacity(names.len());
    let mut summary = Summary::default();
    for name in names {
        let report = run_check(&CheckSpec::new(name, seed, trials)?)?;
        match report.verdict {
            Verdict::Pass => summary.pass += 1,
            Verdict::PassWithCaveat { .. } => summary.pass_with_caveat += 1,
            Verdict::Fail { .. } => summary.fail += 1,
            Verdict::Skipped { .. } => summary.skipped += 1,
        }
        checks.push(report);
    }
    Ok(VerifyReport { seed, checks, summary })
}

pub const DEFAULT_SEED: u64 = 20_240_601;
