//! `whitehead`: JSON in, JSON out.
//!
//! Exit codes: 0 success, 1 negative decision, 2 input or validation error,
//! 3 integrity failure.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::Value;

use whitehead::fgab::FgAbGroup;
use whitehead::gamma::{gamma_group, gamma_oracle, ORACLE_LIMIT};
use whitehead::homalg::ext1;
use whitehead::intlinalg::smith_normal_form;
use whitehead::json::{
    self, ExtClassJson, FourDimJson, GammaSystemJson, GroupJson, LadderJson, MatrixJson, SmithJson,
    WesJson, WitnessJson,
};
use whitehead::wes::{
    beta_matrix_decomposition, characteristic_extension, check_ladder, check_strong,
    choose_splitting, classify4, derive_wes_with, pi_class, validate_system, Classification,
    GammaSystem, LadderReport, WhiteheadSequence, ROBUSTNESS_SEEDS,
};
use whitehead::Error;

#[derive(Parser)]
#[command(name = "whitehead", version, about = "Invariants of Whitehead's certain exact sequence")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Args)]
struct Opts {
    /// Write the result here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Cross-check Γ against the presentation oracle.
    #[arg(long, global = true)]
    oracle: bool,
    /// Coefficient bound for automorphisms of free parts.
    #[arg(long, global = true, default_value_t = 3)]
    bound: u32,
    /// Splitting seed.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Parse and validate the inputs without computing.
    #[arg(long, global = true)]
    check_only: bool,
}

#[derive(Subcommand)]
enum Verb {
    /// Smith normal form `U·M·V = D` of a matrix.
    Snf { matrix: PathBuf },
    /// Homology groups of a chain complex or of the complex of a Γ-system.
    Homology { complex: PathBuf },
    /// Γ of a group.
    Gamma { group: PathBuf },
    /// Ext¹(A, B).
    Ext { a: PathBuf, b: PathBuf },
    /// The certain exact sequence of a Γ-system.
    Wes { system: PathBuf },
    /// Splitting data and characteristic extensions of a Γ-system.
    Charext { system: PathBuf },
    /// Whether a ladder between two systems is strong.
    CheckStrong { x: PathBuf, y: PathBuf, ladder: PathBuf },
    /// Classification of simply connected 4-dimensional systems.
    Classify4 { x: PathBuf, y: PathBuf },
}

struct Failure {
    code: u8,
    body: Value,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let (code, kind) = match &e {
            Error::Integrity(_) => (3, "integrity"),
            Error::InvalidSystem(_) => (2, "invalid_system"),
            Error::OracleTooLarge { .. } => (2, "oracle_too_large"),
            _ => (2, "input"),
        };
        let mut err = serde_json::json!({"kind": kind, "message": e.to_string()});
        if let Error::InvalidSystem(r) = &e {
            err["violations"] = serde_json::to_value(r.violations()).expect("serializable");
        }
        Failure {
            code,
            body: serde_json::json!({ "error": err }),
        }
    }
}

type Outcome = Result<(u8, Value), Failure>;

fn read(path: &Path) -> Result<Value, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Malformed(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| Error::Malformed(format!("{}: {e}", path.display())).into())
}

fn parse<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    serde_json::from_value(read(path)?)
        .map_err(|e| Error::Malformed(format!("{}: {e}", path.display())).into())
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("DTOs serialize")
}

fn ok<T: Serialize>(v: &T) -> Outcome {
    Ok((0, to_value(v)))
}

fn valid() -> Outcome {
    Ok((0, serde_json::json!({"valid": true})))
}

fn group(path: &Path) -> Result<FgAbGroup, Failure> {
    Ok(parse::<GroupJson>(path)?.to_group()?)
}

fn system(path: &Path) -> Result<GammaSystem, Failure> {
    let s = parse::<GammaSystemJson>(path)?.to_system()?;
    validate_system(&s).into_result()?;
    Ok(s)
}

/// A Γ-system or a 4-dimensional system, as its exact sequence.
fn sequence(path: &Path, seed: u64, check_only: bool) -> Result<Option<WhiteheadSequence>, Failure> {
    let v = read(path)?;
    if v.get("H2").is_some() {
        let x: FourDimJson = serde_json::from_value(v)
            .map_err(|e| Error::Malformed(format!("{}: {e}", path.display())))?;
        let x = x.to_system()?;
        return Ok((!check_only).then(|| x.to_wes()));
    }
    let s = system(path)?;
    if check_only {
        return Ok(None);
    }
    Ok(Some(derive_wes_with(&s, seed, ROBUSTNESS_SEEDS)?))
}

fn snf(path: &Path, o: &Opts) -> Outcome {
    let m = parse::<MatrixJson>(path)?.to_matrix()?;
    if o.check_only {
        return valid();
    }
    ok(&SmithJson::from_smith(&smith_normal_form(&m)))
}

fn homology(path: &Path, o: &Opts) -> Outcome {
    let v = read(path)?;
    let c = match v.get("complex") {
        Some(_) => system(path)?.complex().clone(),
        None => {
            let c: json::ComplexJson = serde_json::from_value(v)
                .map_err(|e| Error::Malformed(format!("{}: {e}", path.display())))?;
            let c = c.to_complex()?;
            c.validate().into_result()?;
            c
        }
    };
    if o.check_only {
        return valid();
    }
    let degrees: Vec<Value> = (2..=c.top())
        .map(|n| {
            let h = c.homology(n).expect("degree in range");
            serde_json::json!({"n": n, "group": to_value(&GroupJson::from_group(h.group()))})
        })
        .collect();
    Ok((0, serde_json::json!({ "degrees": degrees })))
}

fn gamma(path: &Path, o: &Opts) -> Outcome {
    let a = group(path)?;
    if o.check_only {
        return valid();
    }
    let g = gamma_group(&a).0;
    if o.oracle {
        let oracle = gamma_oracle(&a, ORACLE_LIMIT)?;
        if oracle != g {
            return Err(Error::Integrity(format!("Γ({a}) = {g} but the oracle gives {oracle}")).into());
        }
    }
    ok(&GroupJson::from_group(&g))
}

fn ext(a: &Path, b: &Path, o: &Opts) -> Outcome {
    let (a, b) = (group(a)?, group(b)?);
    if o.check_only {
        return valid();
    }
    ok(&GroupJson::from_group(ext1(&a, &b).group()))
}

fn wes(path: &Path, o: &Opts) -> Outcome {
    match sequence(path, o.seed, o.check_only)? {
        None => valid(),
        Some(w) => ok(&WesJson::from_sequence(&w)),
    }
}

fn charext(path: &Path, o: &Opts) -> Outcome {
    let s = system(path)?;
    if o.check_only {
        return valid();
    }
    let mut degrees = Vec::new();
    for n in 2..=s.top() {
        let sp = choose_splitting(&s, n, o.seed)?;
        let dec = beta_matrix_decomposition(&s, n, &sp)?;
        let ch = characteristic_extension(&s, n, &sp)?;
        let pi = pi_class(&s, n, o.seed)?;
        degrees.push(serde_json::json!({
            "n": n,
            "sigma": to_value(&MatrixJson::from_matrix(&sp.sigma)),
            "t": to_value(&MatrixJson::from_matrix(&sp.t)),
            "phi": to_value(&MatrixJson::from_matrix(dec.phi.matrix())),
            "theta": to_value(&MatrixJson::from_matrix(dec.theta.matrix())),
            "characteristic_class": to_value(&ExtClassJson::from_class(&ch)),
            "pi_class": to_value(&ExtClassJson::from_class(&pi)),
        }));
    }
    Ok((0, serde_json::json!({"seed": o.seed, "degrees": degrees})))
}

fn ladder_failure(r: &LadderReport) -> Outcome {
    Ok((
        1,
        serde_json::json!({"ladder": {"passed": false, "violations": to_value(&r.violations)}, "strong": false}),
    ))
}

fn strong(x: &Path, y: &Path, l: &Path, o: &Opts) -> Outcome {
    let wx = sequence(x, o.seed, o.check_only)?;
    let wy = sequence(y, o.seed, o.check_only)?;
    let l = parse::<LadderJson>(l)?.to_ladder()?;
    let (Some(wx), Some(wy)) = (wx, wy) else {
        return valid();
    };
    let r = check_ladder(&wx, &wy, &l);
    if !r.passed() {
        return ladder_failure(&r);
    }
    let report = check_strong(&wx, &wy, &l)?;
    let degrees: Vec<Value> = report
        .degrees
        .iter()
        .map(|d| {
            let witness = d.witness.as_ref().map(|(a, b)| {
                serde_json::json!({
                    "x": to_value(&ExtClassJson::from_class(a)),
                    "y": to_value(&ExtClassJson::from_class(b)),
                })
            });
            serde_json::json!({"n": d.n, "strong": d.witness.is_some(), "witness": witness})
        })
        .collect();
    let is_strong = report.is_strong();
    Ok((
        if is_strong { 0 } else { 1 },
        serde_json::json!({"ladder": {"passed": true}, "strong": is_strong, "degrees": degrees}),
    ))
}

fn classify(x: &Path, y: &Path, o: &Opts) -> Outcome {
    let x = parse::<FourDimJson>(x)?.to_system()?;
    let y = parse::<FourDimJson>(y)?.to_system()?;
    if o.check_only {
        return valid();
    }
    Ok(match classify4(&x, &y, o.bound)? {
        Classification::Equivalent(w) => (
            0,
            serde_json::json!({
                "result": "equivalent",
                "certificate": "algebraic equivalence certificate",
                "witness": to_value(&WitnessJson::from_witness(&w)),
            }),
        ),
        Classification::NotEquivalent { reason } => {
            (1, serde_json::json!({"result": "not_equivalent", "reason": reason}))
        }
        Classification::NoWitnessWithinBound { reason } => (
            1,
            serde_json::json!({"result": "no_witness_within_bound", "bound": o.bound, "reason": reason}),
        ),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let o = &cli.opts;
    let outcome = match &cli.verb {
        Verb::Snf { matrix } => snf(matrix, o),
        Verb::Homology { complex } => homology(complex, o),
        Verb::Gamma { group } => gamma(group, o),
        Verb::Ext { a, b } => ext(a, b, o),
        Verb::Wes { system } => wes(system, o),
        Verb::Charext { system } => charext(system, o),
        Verb::CheckStrong { x, y, ladder } => strong(x, y, ladder, o),
        Verb::Classify4 { x, y } => classify(x, y, o),
    };
    let (code, body) = match outcome {
        Ok(r) => r,
        Err(f) => {
            if let Some(m) = f.body["error"]["message"].as_str() {
                eprintln!("whitehead: {m}");
            }
            (f.code, f.body)
        }
    };
    let text = serde_json::to_string(&body).expect("JSON values serialize") + "\n";
    match &o.output {
        Some(path) => {
            if let Err(e) = fs::write(path, &text) {
                eprintln!("whitehead: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::from(code)
}
