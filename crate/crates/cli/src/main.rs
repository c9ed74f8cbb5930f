//! `germsig`: JSON front end for local signatures, the Meyer cocycle and the
//! winding computations.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{error::ErrorKind, Parser, Subcommand};
use germsig::coverrep::{word_to_matrix, CoverSpec, GeneratorWord};
use germsig::exact::format_rational;
use germsig::gsign::{total_signature, GroupActionData};
use germsig::localsig::{phi_word, sigma_loc, GermData, PhiTable};
use germsig::symplectic::{check_symplectic, matrix_from_json, meyer_tau};
use germsig::verify::{self, Check};
use germsig::winding::{chi_loc_p1, parse_pair, relative_winding, BoundaryLoop};
use germsig::Error;
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "germsig", version, about = "Local signatures of fiber germs and the Meyer cocycle")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Meyer cocycle of two symplectic matrices given as {g, rows} JSON files.
    Tau { a: PathBuf, b: PathBuf },
    /// Symplectic matrix of a word in half twists (`s12`, `t1,12`, `s23^-1`).
    Rep {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        word: String,
        /// Monodromy labels, comma separated; all 1 when omitted.
        #[arg(long, value_delimiter = ',')]
        labels: Option<Vec<u32>>,
    },
    /// Cobounding function of the Meyer cocycle on a word, for the cover with all labels 1.
    Phi {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        word: String,
    },
    /// Local signature of a germ described in JSON.
    Sigloc { germ: PathBuf },
    /// Signature from fixed point data of a group action described in JSON.
    Gsign { action: PathBuf },
    /// Boundary intersection number of two section products, `i:jk*i:jk/i:jk`.
    Winding {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        pair: String,
    },
    /// Local Euler number of the tangency germ.
    ChiLoc {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        m: usize,
    },
    /// Run one verification suite, or all of them.
    Verify { suite: Option<String> },
}

/// A domain failure with the module it came from.
struct Failure {
    module: &'static str,
    error: Error,
}

type Outcome = Result<(Value, Vec<Check>), Failure>;

fn in_module(module: &'static str) -> impl Fn(Error) -> Failure {
    move |error| Failure { module, error }
}

fn read_json(path: &Path, module: &'static str) -> Result<Value, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| in_module(module)(Error::InvalidData(format!("cannot read {}: {e}", path.display()))))?;
    serde_json::from_str(&text)
        .map_err(|e| in_module(module)(Error::InvalidData(format!("{} is not valid JSON: {e}", path.display()))))
}

fn bad_shape(module: &'static str, what: &'static str) -> impl Fn(serde_json::Error) -> Failure {
    move |e| in_module(module)(Error::InvalidData(format!("{what}: {e}")))
}

fn describe(command: &Command) -> (&'static str, Value) {
    match command {
        Command::Tau { a, b } => ("tau", json!({"a": a, "b": b})),
        Command::Rep { d, m, word, labels } => ("rep", json!({"d": d, "m": m, "word": word, "labels": labels})),
        Command::Phi { d, m, word } => ("phi", json!({"d": d, "m": m, "word": word})),
        Command::Sigloc { germ } => ("sigloc", json!({"germ": germ})),
        Command::Gsign { action } => ("gsign", json!({"action": action})),
        Command::Winding { m, pair } => ("winding", json!({"m": m, "pair": pair})),
        Command::ChiLoc { d, m } => ("chi-loc", json!({"d": d, "m": m})),
        Command::Verify { suite } => ("verify", json!({"suite": suite})),
    }
}

fn run(command: &Command) -> Outcome {
    match command {
        Command::Tau { a, b } => {
            let sym = in_module("symplectic");
            let load = |p: &Path| -> Result<_, Failure> {
                let v = read_json(p, "symplectic")?;
                matrix_from_json(&v).and_then(check_symplectic).map_err(&sym)
            };
            let (a, b) = (load(a)?, load(b)?);
            Ok((json!(meyer_tau(&a, &b).map_err(&sym)?), Vec::new()))
        }
        Command::Rep { d, m, word, labels } => {
            let rep = in_module("coverrep");
            let spec = match labels {
                Some(l) if l.len() != *m => {
                    return Err(rep(Error::BadSpec(format!("{} labels given for m = {m}", l.len()))))
                }
                Some(l) => CoverSpec::new(*d, l.clone()),
                None => CoverSpec::p1(*d, *m),
            }
            .map_err(&rep)?;
            let w: GeneratorWord = word.parse().map_err(&rep)?;
            let mat = word_to_matrix(&spec, &w).map_err(&rep)?;
            Ok((serde_json::to_value(&mat).expect("matrix serializes"), Vec::new()))
        }
        Command::Phi { d, m, word } => {
            let loc = in_module("localsig");
            let table = PhiTable::p1(*d, *m).map_err(&loc)?;
            let w: GeneratorWord = word.parse().map_err(&loc)?;
            Ok((json!(format_rational(&phi_word(&table, &w).map_err(&loc)?)), Vec::new()))
        }
        Command::Sigloc { germ } => {
            let germ: GermData =
                serde_json::from_value(read_json(germ, "localsig")?).map_err(bad_shape("localsig", "germ data"))?;
            let v = sigma_loc(&germ).map_err(in_module("localsig"))?;
            Ok((json!(format_rational(&v)), Vec::new()))
        }
        Command::Gsign { action } => {
            let data: GroupActionData = serde_json::from_value(read_json(action, "gsign")?)
                .map_err(bad_shape("gsign", "group action data"))?;
            let v = total_signature(&data).map_err(in_module("gsign"))?;
            Ok((json!(format_rational(&v)), Vec::new()))
        }
        Command::Winding { m, pair } => {
            let wind = in_module("winding");
            let (a, b) = parse_pair(*m, pair).map_err(&wind)?;
            let lp = BoundaryLoop::for_sections(&[a.as_slice(), b.as_slice()].concat());
            Ok((json!(relative_winding(&a, &b, &lp).map_err(&wind)?), Vec::new()))
        }
        Command::ChiLoc { d, m } => {
            let v = chi_loc_p1(*d, *m).map_err(in_module("winding"))?;
            Ok((json!(format_rational(&v)), Vec::new()))
        }
        Command::Verify { suite } => {
            let results = match suite {
                Some(name) => {
                    let info = verify::suite(name).map_err(in_module("verify"))?;
                    vec![(info, verify::run_suite(name).map_err(in_module("verify"))?)]
                }
                None => verify::run_all(),
            };
            let passed = verify::summary(&results);
            let mut checks = Vec::new();
            let mut suites = Vec::new();
            for (info, cs) in results {
                suites.push(json!({
                    "name": info.name,
                    "criterion": info.criterion,
                    "passed": cs.iter().all(|c| c.passed),
                }));
                checks.extend(cs.into_iter().map(|c| Check { name: format!("{}: {}", info.name, c.name), ..c }));
            }
            Ok((json!({"passed": passed, "suites": suites}), checks))
        }
    }
}

fn checks_json(checks: &[Check]) -> Value {
    Value::Array(
        checks
            .iter()
            .map(|c| json!({"name": c.name, "passed": c.passed, "details": c.details}))
            .collect(),
    )
}

fn emit(report: &Value) {
    println!("{}", serde_json::to_string(report).expect("report serializes"));
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let message = e.render().to_string();
            let message = message.lines().next().unwrap_or("usage error").trim_start_matches("error: ");
            emit(&json!({
                "checks": [],
                "command": std::env::args().nth(1),
                "error": {"name": "UsageError", "message": message},
                "inputs": std::env::args().skip(1).collect::<Vec<_>>(),
            }));
            return ExitCode::from(2);
        }
    };
    let (name, inputs) = describe(&cli.command);
    if let Command::Verify { suite: Some(suite) } = &cli.command {
        if verify::suite(suite).is_err() {
            let known: Vec<&str> = verify::suites().iter().map(|s| s.name.as_str()).collect();
            emit(&json!({
                "checks": [],
                "command": name,
                "error": {"name": "UsageError", "message": format!("unknown suite '{suite}', expected one of {}", known.join(", "))},
                "inputs": inputs,
            }));
            return ExitCode::from(2);
        }
    }
    match run(&cli.command) {
        Ok((result, checks)) => {
            let all_passed = checks.iter().all(|c| c.passed);
            emit(&json!({"checks": checks_json(&checks), "command": name, "inputs": inputs, "result": result}));
            if all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure { module, error }) => {
            emit(&json!({
                "checks": [],
                "command": name,
                "error": {"module": module, "name": error.name(), "message": error.to_string()},
                "inputs": inputs,
            }));
            ExitCode::from(1)
        }
    }
}
