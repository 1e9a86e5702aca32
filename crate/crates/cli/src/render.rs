use relcyc_core::galois::GaloisVerdict;
use relcyc_core::relcyc::{Disjointness, SurveyOutcome, SurveyRow};
use relcyc_core::{Factorization, IntPoly};
use serde_json::{json, Value};

/// Ascending coefficients as decimal strings.
pub fn coeffs(p: &IntPoly) -> Vec<String> {
    p.coeffs().iter().map(|c| c.to_string()).collect()
}

/// `-6 * (x - 1)^2 * (x + 2)` style.
pub fn factorization(f: &Factorization) -> String {
    let mut parts: Vec<String> = Vec::new();
    let scalar = if f.unit < 0 { -f.content.clone() } else { f.content.clone() };
    if scalar != 1.into() || f.factors.is_empty() {
        parts.push(scalar.to_string());
    }
    for (g, e) in &f.factors {
        let s = if f.factors.len() == 1 && *e == 1 && parts.is_empty() {
            g.to_string()
        } else {
            format!("({g})")
        };
        parts.push(if *e > 1 { format!("{s}^{e}") } else { s });
    }
    parts.join(" * ")
}

pub fn factorization_json(f: &Factorization) -> Value {
    f.factors
        .iter()
        .map(|(g, e)| json!({ "factor": coeffs(g), "multiplicity": e }))
        .collect()
}

pub fn verdict(v: &GaloisVerdict) -> String {
    match v {
        GaloisVerdict::NotGalois { witness } => {
            format!("not Galois: unequal factor degrees mod {witness}")
        }
        GaloisVerdict::LikelyGalois { primes_tested } => {
            format!("likely Galois: equal factor degrees at {primes_tested} unramified primes")
        }
    }
}

pub fn verdict_json(v: &GaloisVerdict) -> Value {
    match v {
        GaloisVerdict::NotGalois { witness } => json!({ "verdict": "not_galois", "witness": witness }),
        GaloisVerdict::LikelyGalois { primes_tested } => {
            json!({ "verdict": "likely_galois", "primes_tested": primes_tested })
        }
    }
}

fn disjoint_str(d: Disjointness) -> &'static str {
    match d {
        Disjointness::Disjoint => "disjoint",
        Disjointness::Unknown => "unknown",
    }
}

pub fn survey_table(rows: &[SurveyRow]) -> String {
    let mut s = format!("{:>4} {:>4} {:>8}  {:<10} {}\n", "m", "tau", "factors", "pattern", "disjointness");
    for r in rows {
        let (count, pattern) = match r.outcome {
            SurveyOutcome::Computed { factor_count, pattern_holds } => {
                (factor_count.to_string(), if pattern_holds { "holds" } else { "fails" })
            }
            SurveyOutcome::Defective => ("-".to_string(), "defective"),
        };
        s += &format!(
            "{:>4} {:>4} {:>8}  {:<10} {}\n",
            r.m,
            r.tau,
            count,
            pattern,
            disjoint_str(r.disjointness)
        );
    }
    s
}

pub fn survey_row_json(r: &SurveyRow) -> Value {
    let mut v = json!({
        "m": r.m,
        "tau": r.tau,
        "disjointness": disjoint_str(r.disjointness),
    });
    match r.outcome {
        SurveyOutcome::Computed { factor_count, pattern_holds } => {
            v["factor_count"] = json!(factor_count);
            v["pattern_holds"] = json!(pattern_holds);
            v["defective"] = json!(false);
        }
        SurveyOutcome::Defective => v["defective"] = json!(true),
    }
    v
}
