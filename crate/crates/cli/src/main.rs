//! Command-line surface: local reduction data, twists, table lookups,
//! genus-2 type instantiation, torsion bounds, and corpus conformance runs.
//!
//! Exit codes: 0 all checks pass, 1 any corpus FAIL, 2 usage or parse error.

use clap::{Args, Parser, Subcommand};
use cmreduce::cmclass::{allowed_types_cm, allowed_types_potential_cm, JClass, TableLookup};
use cmreduce::corpus::{self, Outcome};
use cmreduce::field::{FieldElement, QuadraticField};
use cmreduce::genus2::{self, Genus2Context};
use cmreduce::place::LocalPlace;
use cmreduce::residue::ResidueBound;
use cmreduce::torsion::{torsion_bound, TorsionInput};
use cmreduce::weierstrass::WeierstrassModel;
use num_bigint::BigInt;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "cmreduce", version, about = "Local reduction data of CM elliptic curves")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute Kodaira type and local data of a model at a place.
    Reduce(ReduceArgs),
    /// Quadratic twist of a model.
    Twist(TwistArgs),
    /// Look up the allowed reduction types from the CM tables.
    ClassifyCm(ClassifyArgs),
    /// Admissible genus-2 reduction types under CM constraints.
    Genus2Types(Genus2Args),
    /// Exact local torsion bound.
    TorsionBound(TorsionArgs),
    /// Run a JSON-lines corpus of curves and report conformance.
    Corpus(CorpusArgs),
}

#[derive(Args)]
struct FieldPlaceArgs {
    /// Base field: `Q` or a squarefree integer D for Q(sqrt(D)).
    #[arg(long, default_value = "Q", allow_hyphen_values = true)]
    field: String,
    /// Residue characteristic.
    #[arg(long)]
    p: u64,
    /// Index among the places above p (split places are ordered by their
    /// canonical root representative).
    #[arg(long, default_value_t = 0)]
    place_index: usize,
    /// Cap on the residue characteristic of supported places.
    #[arg(long)]
    max_residue: Option<u64>,
}

#[derive(Args)]
struct ReduceArgs {
    #[command(flatten)]
    at: FieldPlaceArgs,
    /// a1,a2,a3,a4,a6 with each coefficient an integer, `a/c`, or `a/b/c`
    /// meaning (a + b*sqrt(D))/c.
    #[arg(long, allow_hyphen_values = true)]
    ainvs: String,
    #[arg(long, conflicts_with = "table")]
    json: bool,
    #[arg(long)]
    table: bool,
}

#[derive(Args)]
struct TwistArgs {
    /// Base field: `Q` or a squarefree integer D.
    #[arg(long, default_value = "Q", allow_hyphen_values = true)]
    field: String,
    #[arg(long, allow_hyphen_values = true)]
    ainvs: String,
    /// Twisting element, same coefficient syntax as --ainvs entries.
    #[arg(long, allow_hyphen_values = true)]
    d: String,
}

#[derive(Args)]
struct ClassifyArgs {
    #[arg(long)]
    p: u64,
    /// v(p), the absolute ramification index of the completion.
    #[arg(long, default_value_t = 1)]
    vp: u32,
    /// j-invariant class: `0`, `1728`, or `generic`.
    #[arg(long)]
    j: String,
    /// Use the CM-over-the-base-field table instead of the potential-CM one.
    #[arg(long)]
    defined_over_base: bool,
}

#[derive(Args)]
struct Genus2Args {
    #[arg(long)]
    mu: u32,
    #[arg(long, conflicts_with = "not_potentially_good")]
    potentially_good: bool,
    #[arg(long)]
    not_potentially_good: bool,
    /// Apply the restricted tables (special stable fiber excluded).
    #[arg(long)]
    restricted: bool,
    /// Degree-of-singularity invariant d.
    #[arg(long, allow_hyphen_values = true)]
    d: Option<i64>,
    /// The r-invariant.
    #[arg(long, allow_hyphen_values = true)]
    r: Option<i64>,
}

#[derive(Args)]
struct TorsionArgs {
    #[arg(long)]
    g: u32,
    #[arg(long)]
    p: u64,
    #[arg(long)]
    q: u64,
    #[arg(long)]
    e: u32,
    #[arg(long)]
    mu: u32,
}

#[derive(Args)]
struct CorpusArgs {
    /// Path to a JSON-lines corpus file.
    path: String,
    /// Worker pool size.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long)]
    max_residue: Option<u64>,
    #[arg(long, conflicts_with = "table")]
    json: bool,
    #[arg(long)]
    table: bool,
}

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn parse_field(s: &str) -> Result<QuadraticField, String> {
    if s == "Q" || s == "q" {
        return Ok(QuadraticField::RATIONAL);
    }
    let d: i64 = s
        .parse()
        .map_err(|_| format!("--field must be `Q` or an integer, got `{s}`"))?;
    QuadraticField::quadratic(d).map_err(|e| format!("--field {s}: {e}"))
}

fn parse_coeff(field: QuadraticField, s: &str) -> Result<FieldElement, String> {
    let parts: Vec<&str> = s.split('/').collect();
    let int = |t: &str| -> Result<BigInt, String> {
        t.trim()
            .parse::<BigInt>()
            .map_err(|_| format!("bad integer `{t}` in coefficient `{s}`"))
    };
    let (a, b, c) = match parts.as_slice() {
        [a] => (int(a)?, BigInt::from(0), BigInt::from(1)),
        [a, c] => (int(a)?, BigInt::from(0), int(c)?),
        [a, b, c] => (int(a)?, int(b)?, int(c)?),
        _ => return Err(format!("coefficient `{s}` has too many `/`")),
    };
    if field.is_rational() && b != BigInt::from(0) {
        return Err(format!("coefficient `{s}` has a sqrt part but the field is Q"));
    }
    if c == BigInt::from(0) {
        return Err(format!("coefficient `{s}` has denominator 0"));
    }
    Ok(FieldElement::new(field, a, b, c))
}

fn parse_model(field: QuadraticField, ainvs: &str) -> Result<WeierstrassModel, String> {
    let coeffs: Vec<&str> = ainvs.split(',').collect();
    if coeffs.len() != 5 {
        return Err(format!(
            "--ainvs needs 5 comma-separated coefficients, got {}",
            coeffs.len()
        ));
    }
    let mut parsed = coeffs
        .iter()
        .map(|s| parse_coeff(field, s))
        .collect::<Result<Vec<_>, _>>()?
        .into_iter();
    WeierstrassModel::new(
        parsed.next().unwrap(),
        parsed.next().unwrap(),
        parsed.next().unwrap(),
        parsed.next().unwrap(),
        parsed.next().unwrap(),
    )
    .map_err(|e| e.to_string())
}

fn bound_from(max_residue: Option<u64>) -> ResidueBound {
    match max_residue {
        None => ResidueBound::default(),
        Some(m) => ResidueBound {
            degree_one: m,
            degree_two: m,
        },
    }
}

fn pick_place(args: &FieldPlaceArgs) -> Result<LocalPlace, String> {
    let field = parse_field(&args.field)?;
    let places = LocalPlace::factor_prime_bounded(field, args.p, bound_from(args.max_residue))
        .map_err(|e| e.to_string())?;
    places.get(args.place_index).copied().ok_or_else(|| {
        format!(
            "--place-index {} out of range: {} place(s) above {}",
            args.place_index,
            places.len(),
            args.p
        )
    })
}

fn coeff_json(x: &FieldElement) -> serde_json::Value {
    let mut m = serde_json::Map::new();
    m.insert("a".into(), serde_json::Value::String(x.a().to_string()));
    if !x.field().is_rational() {
        m.insert("b".into(), serde_json::Value::String(x.b().to_string()));
    }
    m.insert("c".into(), serde_json::Value::String(x.c().to_string()));
    serde_json::Value::Object(m)
}

fn model_json(m: &WeierstrassModel) -> serde_json::Value {
    serde_json::json!({
        "ainvs": [coeff_json(&m.a1), coeff_json(&m.a2), coeff_json(&m.a3),
                  coeff_json(&m.a4), coeff_json(&m.a6)],
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => usage_error(msg),
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Reduce(args) => {
            let field = parse_field(&args.at.field)?;
            let model = parse_model(field, &args.ainvs)?;
            let place = pick_place(&args.at)?;
            let data = cmreduce::tate_algorithm(&model, &place).map_err(|e| e.to_string())?;
            if args.table {
                println!("place          {place}");
                println!("kodaira        {}", data.kodaira);
                println!("v(Delta_min)   {}", data.v_delta_min);
                println!("c_local        {}", data.c_local);
                println!("phi_geom       {}", data.phi_geom);
                match data.conductor_exponent {
                    Some(f) => println!("conductor      {f}"),
                    None => println!("conductor      unavailable (residue characteristic < 5)"),
                }
            } else {
                println!("{}", serde_json::to_string(&data).unwrap());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Twist(args) => {
            let field = parse_field(&args.field)?;
            let model = parse_model(field, &args.ainvs)?;
            let d = parse_coeff(field, &args.d)?;
            let tw = model.quadratic_twist(&d).map_err(|e| e.to_string())?;
            println!("{}", serde_json::to_string(&model_json(&tw)).unwrap());
            Ok(ExitCode::SUCCESS)
        }
        Command::ClassifyCm(args) => {
            let jc = match args.j.as_str() {
                "0" => JClass::Zero,
                "1728" => JClass::J1728,
                "generic" => JClass::Generic,
                other => return Err(format!("--j must be 0, 1728, or generic, got `{other}`")),
            };
            let lookup = if args.defined_over_base {
                allowed_types_cm(args.p, args.vp, jc)
            } else {
                allowed_types_potential_cm(args.p, args.vp, jc)
            };
            match lookup {
                TableLookup::Covered(set) => {
                    let symbols: Vec<String> = set.iter().map(|k| k.symbol()).collect();
                    println!("{}", serde_json::to_string(&symbols).unwrap());
                }
                TableLookup::NotCovered => {
                    println!("{}", serde_json::json!({"not_covered": true}));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Genus2Types(args) => {
            let out: Vec<String> = if args.not_potentially_good {
                let ctx = Genus2Context { d: args.d, r: args.r, ..Default::default() };
                genus2::allowed_not_potentially_good(args.mu, &ctx)
                    .map_err(|e| e.to_string())?
                    .iter()
                    .map(|t| t.symbol())
                    .collect()
            } else if args.restricted {
                genus2::allowed_potentially_good_restricted(args.mu)
                    .map_err(|e| e.to_string())?
                    .iter()
                    .map(|t| t.symbol())
                    .collect()
            } else {
                genus2::allowed_potentially_good(args.mu)
                    .map_err(|e| e.to_string())?
                    .iter()
                    .map(|t| t.symbol())
                    .collect()
            };
            for symbol in &out {
                println!("{}", serde_json::json!(symbol));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::TorsionBound(args) => {
            let input = TorsionInput::new(args.g, args.p, args.q, args.e, args.mu);
            let t = torsion_bound(&input);
            // exact integers of any size, emitted as JSON numbers
            let num = |x: &num_bigint::BigUint| -> serde_json::Number {
                x.to_string().parse().expect("integer literal")
            };
            println!(
                "{}",
                serde_json::json!({
                    "bound": num(&t.bound),
                    "branches": [num(&t.branches[0]), num(&t.branches[1])],
                })
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Corpus(args) => {
            let text = std::fs::read_to_string(&args.path)
                .map_err(|e| format!("cannot read {}: {e}", args.path))?;
            let entries = corpus::parse_corpus(&text).map_err(|e| e.to_string())?;
            let run = corpus::run_corpus(&entries, args.jobs, bound_from(args.max_residue));
            if args.table {
                for r in &run.entries {
                    let outcome = match r.outcome {
                        Outcome::Pass => "PASS",
                        Outcome::Fail => "FAIL",
                        Outcome::NotCovered => "NOT_COVERED",
                    };
                    let detail = match (&r.report, r.problems.is_empty()) {
                        (_, false) => r.problems.join("; "),
                        (Some(rep), true) => format!("type {}", rep.computed),
                        (None, true) => String::new(),
                    };
                    println!("{outcome:12} {:32} {detail}", r.label);
                }
                println!(
                    "pass {}  fail {}  not_covered {}",
                    run.summary.pass, run.summary.fail, run.summary.not_covered
                );
            } else {
                for r in &run.entries {
                    println!("{}", serde_json::to_string(r).unwrap());
                }
                println!("{}", serde_json::to_string(&run.summary).unwrap());
            }
            Ok(if run.any_fail() {
                ExitCode::FAILURE
            } else {
                ExitCode::SUCCESS
            })
        }
    }
}
