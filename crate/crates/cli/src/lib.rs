//! Command-line front end for `relcyc-core`.
//!
//! [`run`] takes the argument vector and two writers and returns the process
//! exit code: 0 on success, 1 when the mathematics refuses the input
//! (reducible base, defective power, ...), 2 for usage and parse errors.

pub mod parse;
mod render;

use std::io::Write;

use clap::{Args, Parser, Subcommand};
use relcyc_core::cyclo::{cyclotomic, divisors};
use relcyc_core::galois::{is_galois_heuristic, DEFAULT_PRIME_BOUND};
use relcyc_core::relcyc::{
    build_f, find_uniform_shift, power_min_poly, relative_factorization, shifted_base, survey,
    uniform_degree_report,
};
use relcyc_core::zfactor::factor_over_z;
use relcyc_core::zpoly::is_squarefree;
use relcyc_core::BasePoly;
use serde_json::{json, Value};

pub use parse::{parse_poly, ParseError};

/// Environment variable holding the splitting seed.
pub const SEED_VAR: &str = "RELCYC_SEED";

#[derive(Parser, Debug)]
#[command(name = "relcyc", version, about = "Relative cyclotomic polynomials over the integers")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct BaseArg {
    /// Monic irreducible base polynomial, e.g. "x^2 - 2x - 1".
    #[arg(short = 'f', long = "poly", allow_hyphen_values = true)]
    f: String,
}

#[derive(Args, Debug)]
struct BaseAndM {
    #[command(flatten)]
    base: BaseArg,
    /// Exponent m >= 1.
    #[arg(short, value_parser = clap::value_parser!(u64).range(1..))]
    m: u64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Relative cyclotomic factors Ψ_d for d | m.
    Phi {
        #[command(flatten)]
        args: BaseAndM,
        /// Only this divisor.
        #[arg(short, value_parser = clap::value_parser!(u64).range(1..))]
        d: Option<u64>,
    },
    /// F_m(x) = f_m(x^m).
    Fm {
        #[command(flatten)]
        args: BaseAndM,
    },
    /// f_m, the minimal polynomial of the m-th power of a root.
    Minpow {
        #[command(flatten)]
        args: BaseAndM,
    },
    /// Irreducible factorization over the integers.
    Factor {
        #[arg(short = 'p', long = "poly", allow_hyphen_values = true)]
        p: String,
    },
    /// Orders n for which a ratio of conjugates is a primitive n-th root of unity.
    Uniform {
        #[command(flatten)]
        base: BaseArg,
    },
    /// Smallest shift t making f(x - t) uniform for every m.
    Shift {
        #[command(flatten)]
        base: BaseArg,
    },
    /// Frobenius pattern test for the Galois property.
    Galois {
        #[command(flatten)]
        base: BaseArg,
        #[arg(long, default_value_t = DEFAULT_PRIME_BOUND, value_parser = clap::value_parser!(u64).range(2..))]
        prime_bound: u64,
    },
    /// Factor counts of F_m against the divisor count of m.
    Survey {
        #[command(flatten)]
        base: BaseArg,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        m_max: u64,
    },
    /// Classical cyclotomic polynomial Φ_n.
    Cyclotomic {
        #[arg(short, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Domain(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(_) => 1,
            CliError::Parse(_) | CliError::Usage(_) => 2,
        }
    }

    fn to_json(&self) -> Value {
        let mut obj = json!({ "message": self.to_string() });
        match self {
            CliError::Parse(e) => {
                obj["kind"] = json!("parse");
                obj["position"] = json!(e.position);
                obj["expected"] = json!(e.expected);
            }
            CliError::Usage(_) => obj["kind"] = json!("usage"),
            CliError::Domain(_) => obj["kind"] = json!("domain"),
        }
        json!({ "error": obj })
    }
}

/// Successful command output in both forms.
struct Report {
    text: String,
    json: Value,
}

fn load_base(text: &str) -> Result<BasePoly, CliError> {
    let poly = parse_poly(text)?;
    BasePoly::new(poly).map_err(|e| CliError::Domain(e.to_string()))
}

fn envelope(command: &str, input: Value, result: Value, flags: Value) -> Value {
    json!({ "command": command, "input": input, "result": result, "flags": flags })
}

fn input_f(b: &BasePoly, extra: &[(&str, Value)]) -> Value {
    let mut v = json!({ "f": render::coeffs(b.poly()) });
    for (k, x) in extra {
        v[*k] = x.clone();
    }
    v
}

fn phi(b: &BasePoly, m: u64, only: Option<u64>, seed: u64) -> Result<Report, CliError> {
    if let Some(d) = only {
        if m % d != 0 {
            return Err(CliError::Usage(format!("-d {d} does not divide m = {m}")));
        }
    }
    let sys = relative_factorization(b, m, seed).map_err(|e| CliError::Domain(e.to_string()))?;
    let chosen: Vec<_> = sys
        .components
        .iter()
        .filter(|c| only.is_none_or(|d| c.d == d))
        .collect();
    let mut text = String::new();
    for c in &chosen {
        text += &format!("Psi_{}(x) = {}\n", c.d, c.psi);
        if !c.irreducible {
            text += &format!("  reducible: {}\n", render::factorization(&c.factorization));
        }
    }
    if sys.outside_theorem_hypotheses() {
        text += "note: m <= 2 lies outside the theorem hypotheses\n";
    }
    if !sys.pattern_holds {
        text += &format!("pattern fails: {} factors for {} divisors\n", sys.factor_count(), sys.components.len());
    }
    let components: Vec<Value> = chosen
        .iter()
        .map(|c| {
            json!({
                "d": c.d,
                "degree": c.psi.degree(),
                "psi": render::coeffs(&c.psi),
                "irreducible": c.irreducible,
                "factors": render::factorization_json(&c.factorization),
            })
        })
        .collect();
    let mut input = input_f(b, &[("m", json!(m))]);
    if let Some(d) = only {
        input["d"] = json!(d);
    }
    let json = envelope(
        "phi",
        input,
        json!({ "components": components, "factor_count": sys.factor_count() }),
        json!({
            "pattern_holds": sys.pattern_holds,
            "outside_theorem_hypotheses": sys.outside_theorem_hypotheses(),
        }),
    );
    Ok(Report { text, json })
}

fn dispatch(command: Command, seed: u64) -> Result<Report, CliError> {
    match command {
        Command::Phi { args, d } => phi(&load_base(&args.base.f)?, args.m, d, seed),
        Command::Fm { args } => {
            let b = load_base(&args.base.f)?;
            let f = build_f(&b, args.m).map_err(|e| CliError::Domain(e.to_string()))?;
            Ok(Report {
                text: format!("{f}\n"),
                json: envelope(
                    "fm",
                    input_f(&b, &[("m", json!(args.m))]),
                    json!({ "F": render::coeffs(&f), "degree": f.degree() }),
                    json!({}),
                ),
            })
        }
        Command::Minpow { args } => {
            let b = load_base(&args.base.f)?;
            let fm = power_min_poly(&b, args.m);
            let squarefree = is_squarefree(&fm);
            let mut text = format!("{fm}\n");
            if !squarefree {
                text += &format!("note: not squarefree, the power {} is defective\n", args.m);
            }
            Ok(Report {
                text,
                json: envelope(
                    "minpow",
                    input_f(&b, &[("m", json!(args.m))]),
                    json!({ "f_m": render::coeffs(&fm) }),
                    json!({ "squarefree": squarefree }),
                ),
            })
        }
        Command::Factor { p } => {
            let poly = parse_poly(&p)?;
            let fac = factor_over_z(&poly, seed).map_err(|e| CliError::Domain(e.to_string()))?;
            Ok(Report {
                text: format!("{}\n", render::factorization(&fac)),
                json: envelope(
                    "factor",
                    json!({ "f": render::coeffs(&poly) }),
                    json!({
                        "unit": fac.unit,
                        "content": fac.content.to_string(),
                        "factors": render::factorization_json(&fac),
                    }),
                    json!({ "irreducible": fac.is_single_irreducible() }),
                ),
            })
        }
        Command::Uniform { base } => {
            let b = load_base(&base.f)?;
            let r = uniform_degree_report(&b);
            let text = if r.bad_orders.is_empty() {
                "bad orders: none\n".to_string()
            } else {
                let list: Vec<String> = r.bad_orders.iter().map(u64::to_string).collect();
                format!("bad orders: {}\n", list.join(", "))
            };
            Ok(Report {
                text,
                json: envelope(
                    "uniform",
                    input_f(&b, &[]),
                    json!({ "bad_orders": r.bad_orders }),
                    json!({ "uniform_for_all_m": r.uniform_for_all_m }),
                ),
            })
        }
        Command::Shift { base } => {
            let b = load_base(&base.f)?;
            let t = find_uniform_shift(&b);
            let shifted = shifted_base(&b, t).expect("search returns a valid shift");
            Ok(Report {
                text: format!("t = {t}\nf(x - {t}) = {}\n", shifted.poly()),
                json: envelope(
                    "shift",
                    input_f(&b, &[]),
                    json!({ "t": t, "shifted": render::coeffs(shifted.poly()) }),
                    json!({}),
                ),
            })
        }
        Command::Galois { base, prime_bound } => {
            let b = load_base(&base.f)?;
            let v = is_galois_heuristic(b.poly(), prime_bound, seed);
            Ok(Report {
                text: format!("{}\n", render::verdict(&v)),
                json: envelope(
                    "galois",
                    input_f(&b, &[("prime_bound", json!(prime_bound))]),
                    render::verdict_json(&v),
                    json!({}),
                ),
            })
        }
        Command::Survey { base, m_max } => {
            let b = load_base(&base.f)?;
            let rows = survey(&b, m_max, seed).map_err(|e| CliError::Domain(e.to_string()))?;
            Ok(Report {
                text: render::survey_table(&rows),
                json: envelope(
                    "survey",
                    input_f(&b, &[("m_max", json!(m_max))]),
                    json!({ "rows": rows.iter().map(render::survey_row_json).collect::<Vec<_>>() }),
                    json!({}),
                ),
            })
        }
        Command::Cyclotomic { n } => {
            let phi = cyclotomic(n);
            Ok(Report {
                text: format!("{phi}\n"),
                json: envelope(
                    "cyclotomic",
                    json!({ "n": n }),
                    json!({ "phi": render::coeffs(&phi), "divisors": divisors(n).as_slice() }),
                    json!({}),
                ),
            })
        }
    }
}

fn seed_from_env() -> Result<u64, CliError> {
    match std::env::var(SEED_VAR) {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{SEED_VAR} must be an unsigned integer, got {s:?}"))),
        Err(_) => Ok(0),
    }
}

/// Runs one invocation. `args[0]` is the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let wants_json = args.iter().any(|a| a == "--json");
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            if wants_json {
                let obj = CliError::Usage(e.kind().to_string()).to_json();
                let _ = writeln!(out, "{obj}");
            } else {
                let _ = write!(err, "{e}");
            }
            return 2;
        }
    };
    let result = seed_from_env().and_then(|seed| dispatch(cli.command, seed));
    match result {
        Ok(report) => {
            let _ = if cli.json {
                writeln!(out, "{}", report.json)
            } else {
                write!(out, "{}", report.text)
            };
            0
        }
        Err(e) => {
            if cli.json {
                let _ = writeln!(out, "{}", e.to_json());
            } else {
                let _ = writeln!(err, "error: {e}");
            }
            e.exit_code()
        }
    }
}

