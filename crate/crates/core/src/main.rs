use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use polarlab::error::{PolarError, Result};
use polarlab::fixtures;
use polarlab::harness::{self, DEFAULT_SEED};
use polarlab::io::{read_json_arg, ConstraintSet, Operator, UniverseDoc};
use polarlab::maximality::{greedy_maximal_extension, is_d_maximal};
use polarlab::model1d::{pw_classify, pw_is_d_maximal, pw_polar};
use polarlab::operator::{classify, Pair, PolarKind};
use polarlab::polar::{operator_polar_member, operator_zero_polar_member, polar_fiber_1d, pw_zero_polar_set};
use polarlab::rational::Rational;
use polarlab::vector::Vector;
use polarlab::vip::{self, john_equivalence, polar_vip, Which, JOHN_DEFAULT_MAX_DOM};

/// Exact computations with monotone, pseudomonotone and quasimonotone polars.
///
/// Operators, candidates, universes and constraint sets are JSON, given
/// inline or as a file path. Rationals are strings such as "3/2".
#[derive(Parser)]
#[command(name = "polarlab", version)]
struct Cli {
    /// Indent the JSON output.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    #[value(alias = "mono")]
    Mu,
    #[value(alias = "pseudo")]
    Rho,
    #[value(alias = "quasi")]
    Nu,
}

impl From<Kind> for PolarKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Mu => PolarKind::Mono,
            Kind::Rho => PolarKind::Pseudo,
            Kind::Nu => PolarKind::Quasi,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum WhichArg {
    S,
    M,
}

#[derive(Subcommand)]
enum Command {
    /// Decide monotonicity, quasimonotonicity and pseudomonotonicity.
    Classify {
        #[arg(long)]
        operator: String,
    },
    /// Decide membership of a candidate pair in a polar, or print the whole
    /// polar of a one-dimensional operator when no candidate is given.
    Polar {
        #[arg(long)]
        operator: String,
        #[arg(long, value_enum, default_value = "rho")]
        kind: Kind,
        /// A pair {"x":[..],"xs":[..]}.
        #[arg(long)]
        candidate: Option<String>,
    },
    /// The fiber of a polar over a point of the line, as a cone.
    Fiber {
        #[arg(long)]
        operator: String,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, value_enum, default_value = "rho")]
        kind: Kind,
    },
    /// Zeros of the operator and of its pseudomonotone polar.
    Zeros {
        #[arg(long)]
        operator: String,
        /// Only test whether this point is a zero of the polar.
        #[arg(long)]
        x: Option<String>,
    },
    /// Greedy maximal pseudomonotone extension inside a finite universe.
    Extend {
        #[arg(long)]
        operator: String,
        /// {"dim":d,"candidates":[pairs]} or {"points":[..],"covectors":[..]}.
        #[arg(long)]
        universe: String,
        /// "lex", or a JSON array of universe indices (inline or a file).
        #[arg(long, default_value = "lex")]
        order: String,
    },
    /// D-maximality: exact on the line, relative to a universe otherwise.
    Dmax {
        #[arg(long)]
        operator: String,
        #[arg(long)]
        universe: Option<String>,
    },
    /// Stampacchia (S) or Minty (M) variational inequality on K.
    Vip {
        #[arg(long)]
        operator: String,
        /// {"finite":[points]} or {"interval":..}.
        #[arg(long = "K")]
        k: String,
        #[arg(long, value_enum, ignore_case = true)]
        which: WhichArg,
        /// Solve for the given polar of the operator instead.
        #[arg(long, value_enum)]
        polar: Option<Kind>,
    },
    /// Compare pseudomonotonicity with S(T,K) ⊂ M(T,K) over every K ⊂ dom T.
    John {
        #[arg(long)]
        operator: String,
        #[arg(long, default_value_t = JOHN_DEFAULT_MAX_DOM)]
        max_dom: usize,
    },
    /// Run the verification suite. Exit status is 0 iff no check fails.
    Verify {
        /// Comma-separated check names.
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
        #[arg(long, env = "POLARLAB_SEED")]
        seed: Option<u64>,
        /// Override every check's default trial count.
        #[arg(long)]
        trials: Option<usize>,
        /// Write the JSON report here instead of standard output.
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

enum Outcome {
    Ok(Value),
    /// Printed, but the process still exits with status 1.
    Failed(Value),
}

fn value<T: Serialize>(t: &T) -> Result<Value> {
    serde_json::to_value(t).map_err(PolarError::from)
}

/// A JSON document or file, falling back to a built-in fixture of that name.
fn read_operator(arg: &str) -> Result<Operator> {
    match read_json_arg(arg) {
        Err(e) if !std::path::Path::new(arg).exists() => fixtures::fixture(arg).ok_or(e),
        other => other,
    }
}

fn finite_only(op: Operator, what: &str) -> Result<polarlab::operator::FiniteOperator> {
    match op {
        Operator::Finite(t) => Ok(t),
        Operator::Pw1d(_) => Err(PolarError::Unsupported(format!("{what} needs a finite operator"))),
    }
}

fn run(command: Command) -> Result<Outcome> {
    let out = match command {
        Command::Classify { operator } => match read_operator(&operator)? {
            Operator::Finite(t) => value(&classify(&t))?,
            Operator::Pw1d(t) => {
                let c = pw_classify(&t);
                json!({
                    "monotone": c.monotone.holds,
                    "quasimonotone": c.quasimonotone.holds,
                    "pseudomonotone": c.pseudomonotone.holds,
                    "witness": {
                        "monotone": c.monotone.witness,
                        "quasimonotone": c.quasimonotone.witness,
                        "pseudomonotone": c.pseudomonotone.witness,
                    },
                })
            }
        },
        Command::Polar { operator, kind, candidate } => {
            let op = read_operator(&operator)?;
            match candidate {
                Some(c) => {
                    let c: Pair = read_json_arg(&c)?;
                    json!({ "member": operator_polar_member(&op, &c, kind.into())? })
                }
                None => value(&Operator::Pw1d(pw_polar(&op.to_pw()?, kind.into())?))?,
            }
        }
        Command::Fiber { operator, x, kind } => {
            let op = read_operator(&operator)?;
            let x: Rational = x.parse()?;
            value(&polar_fiber_1d(&op, &x, kind.into())?)?
        }
        Command::Zeros { operator, x } => {
            let op = read_operator(&operator)?;
            match x {
                Some(x) => {
                    let x: Vector = read_json_arg(&x)?;
                    json!({ "polar_zero": operator_zero_polar_member(&op, &x)? })
                }
                None => match op {
                    Operator::Finite(t) if t.dim() > 1 => json!({ "zeros": t.zeros() }),
                    other => {
                        let t = other.to_pw()?;
                        json!({ "zeros": t.zeros(), "polar_zeros": pw_zero_polar_set(&t) })
                    }
                },
            }
        }
        Command::Extend { operator, universe, order } => {
            let t = finite_only(read_operator(&operator)?, "extend")?;
            let u = read_json_arg::<UniverseDoc>(&universe)?.build()?;
            let order = if order == "lex" { u.lex_order() } else { read_json_arg::<Vec<usize>>(&order)? };
            value(&greedy_maximal_extension(&t, &u, &order)?)?
        }
        Command::Dmax { operator, universe } => {
            let op = read_operator(&operator)?;
            match (op, universe) {
                (Operator::Finite(t), Some(u)) => {
                    value(&is_d_maximal(&t, &read_json_arg::<UniverseDoc>(&u)?.build()?)?)?
                }
                (op, None) if op.dim() == 1 => value(&pw_is_d_maximal(&op.to_pw()?)?)?,
                (Operator::Pw1d(_), Some(_)) => {
                    return Err(PolarError::Unsupported(
                        "piecewise operators are decided exactly; drop --universe".into(),
                    ))
                }
                _ => return Err(PolarError::Unsupported("dimension 2 and up needs --universe".into())),
            }
        }
        Command::Vip { operator, k, which, polar } => {
            let op = read_operator(&operator)?;
            let k: ConstraintSet = read_json_arg(&k)?;
            let which = match which {
                WhichArg::S => Which::S,
                WhichArg::M => Which::M,
            };
            let result = match (polar, &k) {
                (None, _) => vip::solve(&op, &k, which)?,
                (Some(kind), ConstraintSet::Finite(points)) => polar_vip(&op, points, kind.into(), which)?,
                (Some(kind), ConstraintSet::Interval(_)) => {
                    let p = Operator::Pw1d(pw_polar(&op.to_pw()?, kind.into())?);
                    vip::solve(&p, &k, which)?
                }
            };
            value(&result)?
        }
        Command::John { operator, max_dom } => {
            let t = finite_only(read_operator(&operator)?, "john")?;
            value(&john_equivalence(&t, max_dom)?)?
        }
        Command::Verify { only, seed, trials, report } => {
            let rep = harness::run_all(seed.unwrap_or(DEFAULT_SEED), trials, &only)?;
            for line in rep.lines() {
                eprintln!("{line}");
            }
            let doc = value(&rep)?;
            if let Some(path) = report {
                let text = serde_json::to_string_pretty(&doc)?;
                std::fs::write(&path, text)
                    .map_err(|e| PolarError::Parse(format!("cannot write {}: {e}", path.display())))?;
                let summary = value(&rep.summary)?;
                return Ok(if rep.ok() { Outcome::Ok(summary) } else { Outcome::Failed(summary) });
            }
            return Ok(if rep.ok() { Outcome::Ok(doc) } else { Outcome::Failed(doc) });
        }
    };
    Ok(Outcome::Ok(out))
}

fn print(v: &Value, pretty: bool) {
    let text = if pretty { serde_json::to_string_pretty(v) } else { serde_json::to_string(v) };
    println!("{}", text.expect("JSON values always serialize"));
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Outcome::Ok(v)) => {
            print(&v, cli.pretty);
            ExitCode::SUCCESS
        }
        Ok(Outcome::Failed(v)) => {
            print(&v, cli.pretty);
            ExitCode::from(1)
        }
        Err(e) => {
            print(&json!({ "error": e.to_string() }), cli.pretty);
            ExitCode::from(1)
        }
    }
}
