//! Acceptance run: one line per criterion, non-zero exit if any fails.
//!
//! Run with `cargo test -p relcyc-core --test acceptance` (add `--release`
//! for representative timings).

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{base, numeric, p, small_corpus, SEXTIC_F, SEXTIC_G};
use num_bigint::BigInt;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use relcyc_core::cyclo::{cyclotomic, divisors, tau};
use relcyc_core::galois::{is_galois_heuristic, GaloisVerdict};
use relcyc_core::relcyc::{
    build_f, find_uniform_shift, is_uniform_for_m, mobius_phi, relative_factorization,
    shifted_base, survey, uniform_degree_report, RelCycError, RelCycSystem, SurveyOutcome,
};
use relcyc_core::zfactor::factor_over_z;
use relcyc_core::IntPoly;

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome, u64);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

/// Polynomial from coefficients listed highest degree first.
fn desc(c: &[i64]) -> IntPoly {
    let mut v = c.to_vec();
    v.reverse();
    p(&v)
}

fn system(c: &[i64], m: u64) -> Result<RelCycSystem, String> {
    relative_factorization(&base(c), m, 0).map_err(|e| e.to_string())
}

fn degrees(sys: &RelCycSystem) -> Vec<usize> {
    sys.components.iter().map(|c| c.psi.degree().unwrap()).collect()
}

fn sextic_f_m8() -> Outcome {
    let f8 = desc(&[
        1, 0, 0, 0, 0, 0, 0, 0, -1405, 0, 0, 0, 0, 0, 0, 0, 226310, 0, 0, 0, 0, 0, 0, 0, -3670777,
        0, 0, 0, 0, 0, 0, 0, 1940230, 0, 0, 0, 0, 0, 0, 0, -201085, 0, 0, 0, 0, 0, 0, 0, 1,
    ]);
    let phi8 = desc(&[
        1, 0, 0, 0, 53, 0, 0, 0, 702, 0, 0, 0, 2553, 0, 0, 0, 2062, 0, 0, 0, 453, 0, 0, 0, 1,
    ]);
    let built = build_f(&base(&SEXTIC_F), 8).map_err(|e| e.to_string())?;
    ensure!(built == f8, "F_8 differs: {built}");
    let sys = system(&SEXTIC_F, 8)?;
    ensure!(degrees(&sys) == [6, 6, 12, 24], "degrees {:?}", degrees(&sys));
    ensure!(sys.pattern_holds, "some Ψ_d reducible");
    ensure!(sys.component(8).unwrap().psi == phi8, "Ψ_8 differs");
    Ok(())
}

fn sextic_g_m3() -> Outcome {
    let f3 = desc(&[1, 0, 0, -3, 0, 0, 11, 0, 0, 5, 0, 0, 11, 0, 0, -3, 0, 0, 1]);
    let phi3 = desc(&[1, -3, 4, -5, 5, 2, -7, 2, 5, -5, 4, -3, 1]);
    let built = build_f(&base(&SEXTIC_G), 3).map_err(|e| e.to_string())?;
    ensure!(built == f3, "F_3 differs: {built}");
    let sys = system(&SEXTIC_G, 3)?;
    ensure!(sys.component(1).unwrap().psi == p(&SEXTIC_G), "Ψ_1 is not g");
    ensure!(sys.component(3).unwrap().psi == phi3, "Ψ_3 differs");
    ensure!(sys.pattern_holds, "some Ψ_d reducible");
    Ok(())
}

fn sextic_g_m5() -> Outcome {
    let f5 = desc(&[
        1, 0, 0, 0, 0, -17, 0, 0, 0, 0, 95, 0, 0, 0, 0, -135, 0, 0, 0, 0, 95, 0, 0, 0, 0, -17, 0, 0,
        0, 0, 1,
    ]);
    let phi5 = desc(&[
        1, -3, 4, -2, -4, -3, 27, -45, 37, 8, -11, -45, 73, -45, -11, 8, 37, -45, 27, -3, -4, -2, 4,
        -3, 1,
    ]);
    let built = build_f(&base(&SEXTIC_G), 5).map_err(|e| e.to_string())?;
    ensure!(built == f5, "F_5 differs: {built}");
    let sys = system(&SEXTIC_G, 5)?;
    ensure!(degrees(&sys) == [6, 24], "degrees {:?}", degrees(&sys));
    ensure!(sys.component(5).unwrap().psi == phi5, "Ψ_5 differs");
    ensure!(sys.pattern_holds, "Ψ_5 reducible");
    Ok(())
}

fn classical() -> Outcome {
    for m in 1..=60 {
        let sys = system(&[-1, 1], m)?;
        for c in &sys.components {
            ensure!(c.psi == cyclotomic(c.d), "m = {m}: Ψ_{} is not Φ_{}", c.d, c.d);
        }
        let prod: IntPoly = sys.components.iter().map(|c| &c.psi).product();
        ensure!(prod == IntPoly::x_pow_minus(m as usize, 1), "m = {m}: product is not x^m - 1");
    }
    Ok(())
}

fn failure_mode() -> Outcome {
    let rows = survey(&base(&[-1, -2, 1]), 24, 0).map_err(|e| e.to_string())?;
    for row in rows {
        let SurveyOutcome::Computed { factor_count, pattern_holds } = row.outcome else {
            return Err(format!("m = {} unexpectedly defective", row.m));
        };
        ensure!(row.tau == tau(row.m), "tau mismatch at m = {}", row.m);
        if row.m % 8 == 0 {
            ensure!(!pattern_holds, "m = {}: pattern should fail", row.m);
            ensure!(
                factor_count as u64 > row.tau,
                "m = {}: {factor_count} factors, τ = {}",
                row.m,
                row.tau
            );
        } else {
            ensure!(pattern_holds, "m = {}: pattern should hold", row.m);
            ensure!(factor_count as u64 == row.tau, "m = {}: {factor_count} factors", row.m);
        }
    }
    Ok(())
}

/// Shifted Eisenstein polynomial, irreducible by construction.
fn random_irreducible(rng: &mut ChaCha8Rng) -> IntPoly {
    let pick = |rng: &mut ChaCha8Rng, lo: i64, hi: i64| lo + (rng.next_u64() % (hi - lo + 1) as u64) as i64;
    if rng.next_u64() % 4 == 0 {
        loop {
            let (a, b) = (pick(rng, 1, 5), pick(rng, -9, 9));
            if num_integer::gcd(a, b) == 1 {
                return p(&[b, a]);
            }
        }
    }
    let q = [2i64, 3, 5][pick(rng, 0, 2) as usize];
    let n = pick(rng, 2, 4) as usize;
    let lc = loop {
        let l = pick(rng, 1, 3);
        if l % q != 0 {
            break l;
        }
    };
    let unit = loop {
        let u = [1i64, -1, 2, -2, 4][pick(rng, 0, 4) as usize];
        if u % q != 0 {
            break u;
        }
    };
    let mut c = vec![q * unit];
    for _ in 1..n {
        c.push(q * pick(rng, -2, 2));
    }
    c.push(lc);
    p(&c).shift(&BigInt::from(pick(rng, -2, 2))).primitive_part()
}

fn property_suites() -> Outcome {
    let corpus: Vec<Vec<i64>> = vec![
        vec![-1, 1],
        vec![2, 1],
        vec![-1, -2, 1],
        vec![-1, -1, 0, 1],
        vec![1, 0, 1],
        vec![-2, 0, 0, 1],
        SEXTIC_G.to_vec(),
    ];
    for c in &corpus {
        let b = base(c);
        for m in 1..=12 {
            match relative_factorization(&b, m, 0) {
                Ok(sys) => {
                    for comp in &sys.components {
                        let mob = mobius_phi(&b, comp.d).map_err(|e| e.to_string())?;
                        ensure!(mob == comp.psi, "Möbius disagrees for {} at d = {}", b.poly(), comp.d);
                    }
                }
                Err(RelCycError::DefectivePower(_)) => {
                    ensure!(
                        divisors(m).iter().any(|d| !is_uniform_for_m(&b, d)),
                        "spurious defect for {} at m = {m}",
                        b.poly()
                    );
                }
                Err(e) => return Err(e.to_string()),
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(20261014);
    for i in 0..200 {
        let parts: Vec<IntPoly> = (0..2 + rng.next_u64() % 3).map(|_| random_irreducible(&mut rng)).collect();
        let input: IntPoly = parts.iter().product();
        let fac = factor_over_z(&input, i).map_err(|e| e.to_string())?;
        ensure!(fac.expand() == input, "round trip failed for {input}");
        let deg: usize = fac.factors.iter().map(|(g, e)| g.degree().unwrap() * e).sum();
        ensure!(Some(deg) == input.degree(), "degree not conserved for {input}");
        ensure!(fac.count_with_multiplicity() == parts.len(), "factor count for {input}");
        ensure!(fac.content == BigInt::from(1), "content of {input}");
    }

    for n in 1..=100u64 {
        let prod: IntPoly = divisors(n).iter().map(cyclotomic).product();
        ensure!(prod == IntPoly::x_pow_minus(n as usize, 1), "Π Φ_d ≠ x^{n} - 1");
    }

    for (c, expected) in small_corpus() {
        let b = base(&c);
        let report = uniform_degree_report(&b);
        ensure!(report.bad_orders == expected, "bad orders of {}", b.poly());
        let roots = numeric::roots(b.poly());
        for m in 1..=20 {
            ensure!(
                is_uniform_for_m(&b, m) != numeric::powers_collide(&roots, m, 20),
                "numeric oracle disagrees for {} at m = {m}",
                b.poly()
            );
        }
    }
    Ok(())
}

fn galois() -> Outcome {
    let likely = |f: &IntPoly| matches!(is_galois_heuristic(f, 200, 0), GaloisVerdict::LikelyGalois { .. });
    ensure!(likely(&p(&SEXTIC_G)), "g rejected");
    for n in 1..=20 {
        ensure!(likely(&cyclotomic(n)), "Φ_{n} rejected");
    }
    for (f, witness) in [(desc(&[1, 0, 0, -2]), 5), (desc(&[1, 0, 0, 0, 0, 0, -154, 99]), 2)] {
        let v = is_galois_heuristic(&f, 200, 0);
        ensure!(v == GaloisVerdict::NotGalois { witness }, "{f}: {v:?}");
    }
    for (c, m) in [(&SEXTIC_F[..], 8), (&SEXTIC_G[..], 3), (&SEXTIC_G[..], 5)] {
        for comp in system(c, m)?.components.iter().filter(|c| c.irreducible) {
            ensure!(likely(&comp.psi), "Ψ_{} for m = {m} rejected", comp.d);
        }
    }
    Ok(())
}

fn uniform_shift() -> Outcome {
    let b = base(&[1, 0, 1]);
    let t = find_uniform_shift(&b);
    ensure!(t == 2, "shift {t}");
    let shifted = shifted_base(&b, t).ok_or("shifted base invalid")?;
    ensure!(uniform_degree_report(&shifted).bad_orders.is_empty(), "shifted base still has bad orders");
    for c in [vec![-1, 1], vec![-1, -2, 1], SEXTIC_G.to_vec(), vec![-1, -1, 0, 1]] {
        ensure!(find_uniform_shift(&base(&c)) == 0, "nonzero shift for uniform {}", p(&c));
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 F_8 and Ψ_d for x^6 + 3x^5 - 2x^4 - 9x^3 + 5x + 1", sextic_f_m8, 120),
        ("2 F_3 and Ψ_3 for g = x^6 + 3x^5 + 5x^4 + 5x^3 + 5x^2 + 3x + 1", sextic_g_m3, 10),
        ("3 F_5 and Ψ_5 for g", sextic_g_m5, 60),
        ("4 classical degeneration, m <= 60", classical, 30),
        ("5 failure mode x^2 - 2x - 1, m <= 24", failure_mode, 0),
        ("6 property suites", property_suites, 0),
        ("7 Galois heuristic", galois, 0),
        ("8 uniform shift", uniform_shift, 0),
    ];
    let mut failed = 0;
    for (name, run, budget) in criteria {
        let start = Instant::now();
        let mut result = run();
        let elapsed = start.elapsed();
        if result.is_ok() && budget > 0 && elapsed > Duration::from_secs(budget) {
            result = Err(format!("over the {budget} s budget"));
        }
        let secs = elapsed.as_secs_f64();
        match result {
            Ok(()) => println!("[PASS] {name} ({secs:.2} s)"),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {name} ({secs:.2} s): {why}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
