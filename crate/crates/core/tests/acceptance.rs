//! Acceptance gate: one line per criterion, non-zero exit if any fails.
//!
//! Run with `cargo test -p descent-codes --test acceptance`.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use descent_codes::codes::{
    cardinality_closed_form, decode_single_deletion, r_poly_closed_form, residue_counts,
    sphere_cardinality, CodeSpec,
};
use descent_codes::numtheory::{divisors, gcd};
use descent_codes::qpoly::{
    eval_at_root_of_unity, lattice_path_weight_distribution, q_binomial,
    q_binomial_limit_at_primitive_root, QPoly, ResiduePoly,
};
use descent_codes::words::{constant_weight_dm, enumerate_code, run_class_table, Word};
use descent_codes::{Error, Exec};
use num_complex::Complex64;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, elapsed: Duration) -> Result<(), String> {
    ensure(elapsed < limit, || {
        format!("runtime {elapsed:?} exceeds {limit:?}")
    })
}

fn ac01_q_binomial_4_2() -> Outcome {
    let start = Instant::now();
    let b = q_binomial(4, 2);
    let elapsed = start.elapsed();
    let expected = QPoly::from_coeffs([1, 1, 2, 1, 1]);
    ensure(b == expected, || format!("got {b}"))?;
    within(Duration::from_millis(1), elapsed)?;
    Ok(format!("{b} in {elapsed:?}"))
}

fn ac02_lattice_paths() -> Outcome {
    let start = Instant::now();
    let mut points = 0;
    for i in 0..=16usize {
        for j in 0..=i {
            let paths = lattice_path_weight_distribution(i, j).map_err(|e| e.to_string())?;
            let b = q_binomial(i as i64, j as i64);
            ensure(paths == b, || {
                format!("(i, j) = ({i}, {j}): {paths} != {b}")
            })?;
            points += 1;
        }
    }
    within(Duration::from_secs(30), start.elapsed())?;
    Ok(format!("{points} (i, j) points in {:?}", start.elapsed()))
}

fn ac03_dm_equals_q_binomial() -> Outcome {
    let start = Instant::now();
    let mut points = 0;
    for n in 2..=16usize {
        for a in 1..n {
            let b = n - a;
            let dm = constant_weight_dm(a, b, Exec::default()).map_err(|e| e.to_string())?;
            let qb = q_binomial(n as i64, b as i64);
            ensure(dm == qb, || format!("(α, β) = ({a}, {b}): {dm} != {qb}"))?;
            points += 1;
        }
    }
    within(Duration::from_secs(60), start.elapsed())?;
    Ok(format!("{points} (α, β) points in {:?}", start.elapsed()))
}

fn ac04_memberships_2_2() -> Outcome {
    let expected: [&[&str]; 4] = [&["AABB", "BABA"], &["BAAB"], &["ABAB", "BBAA"], &["ABBA"]];
    for (m, want) in expected.iter().enumerate() {
        let spec = CodeSpec::new(2, 2, m as i64).map_err(|e| e.to_string())?;
        let got: Vec<String> = enumerate_code(&spec).map(|w| w.to_string()).collect();
        ensure(got == *want, || format!("C(2,2,{m}) = {got:?}"))?;
    }
    Ok("C(2,2,0..3) match".into())
}

fn ac05_cardinality() -> Outcome {
    let start = Instant::now();
    let mut points = 0;
    for n in 2..=18usize {
        for a in 1..n {
            let b = n - a;
            let counts = residue_counts(a, b, Exec::default()).map_err(|e| e.to_string())?;
            let spec0 = CodeSpec::new(a, b, 0).map_err(|e| e.to_string())?;
            let top = cardinality_closed_form(&spec0).map_err(|e| e.to_string())?;
            for (m, &count) in counts.iter().enumerate() {
                let spec = CodeSpec::new(a, b, m as i64).map_err(|e| e.to_string())?;
                let closed = cardinality_closed_form(&spec).map_err(|e| e.to_string())?;
                ensure(closed == count as u128, || {
                    format!("#C({a},{b},{m}): closed form {closed}, enumerated {count}")
                })?;
                ensure(closed <= top, || {
                    format!("#C({a},{b},{m}) = {closed} exceeds #C({a},{b},0) = {top}")
                })?;
                points += 1;
            }
        }
    }
    within(Duration::from_secs(300), start.elapsed())?;
    Ok(format!(
        "{points} (α, β, m) points in {:?}",
        start.elapsed()
    ))
}

fn ac06_residue_congruence() -> Outcome {
    let mut points = 0;
    for n in 2..=16usize {
        for a in 1..n {
            let b = n - a;
            let counts = residue_counts(a, b, Exec::default()).map_err(|e| e.to_string())?;
            let lhs = ResiduePoly::from_coeffs(n, counts).map_err(|e| e.to_string())?;
            let rhs = q_binomial(n as i64, b as i64)
                .reduce_mod(n)
                .map_err(|e| e.to_string())?;
            ensure(lhs == rhs, || {
                format!("(α, β) = ({a}, {b}): {lhs} != {rhs}")
            })?;
            points += 1;
        }
    }
    Ok(format!("{points} (α, β) points"))
}

fn ac07_r_poly() -> Outcome {
    let mut points = 0;
    for a in 1..=8usize {
        for b in 1..=8usize {
            let table = run_class_table(a, b, Exec::default()).map_err(|e| e.to_string())?;
            for (r, oracle) in table.iter().enumerate().skip(2) {
                let closed = r_poly_closed_form(a, b, r as i64);
                ensure(closed == *oracle, || {
                    format!("R_{r} at ({a},{b}): closed {closed}, oracle {oracle}")
                })?;
                points += 1;
            }
        }
    }
    Ok(format!("{points} (α, β, r) points"))
}

fn ac08_symmetry() -> Outcome {
    let mut points = 0;
    for g in 1..=8usize {
        for r in 2..=2 * g {
            let lhs = r_poly_closed_form(g, g, r as i64)
                .reduce_mod(2 * g)
                .map_err(|e| e.to_string())?;
            let rhs = r_poly_closed_form(g, g, (2 * g + 2 - r) as i64)
                .reduce_mod(2 * g)
                .map_err(|e| e.to_string())?;
            ensure(lhs == rhs, || format!("γ = {g}, r = {r}: {lhs} != {rhs}"))?;
            points += 1;
        }
    }
    Ok(format!("{points} (γ, r) points"))
}

fn ac09_sphere_theorem() -> Outcome {
    let start = Instant::now();
    let mut points = 0;
    for g in 1..=8usize {
        for m in 0..2 * g {
            let spec = CodeSpec::new(g, g, m as i64).map_err(|e| e.to_string())?;
            let count = sphere_cardinality(&spec);
            let closed = cardinality_closed_form(&spec).map_err(|e| e.to_string())?;
            let want = (g as u128 + 1) * closed;
            ensure(count.sphere as u128 == want, || {
                format!("γ = {g}, m = {m}: #dS = {}, (γ+1)#C = {want}", count.sphere)
            })?;
            points += 1;
        }
    }
    let s0 = sphere_cardinality(&CodeSpec::new(2, 2, 0).map_err(|e| e.to_string())?);
    let s1 = sphere_cardinality(&CodeSpec::new(2, 2, 1).map_err(|e| e.to_string())?);
    ensure(s0.sphere == 6 && s0.codewords == 2, || {
        format!("γ=2, m=0: {s0:?}")
    })?;
    ensure(s1.sphere == 3 && s1.codewords == 1, || {
        format!("γ=2, m=1: {s1:?}")
    })?;
    within(Duration::from_secs(120), start.elapsed())?;
    Ok(format!(
        "{points} (γ, m) points, 6 = 3·2 and 3 = 3·1, in {:?}",
        start.elapsed()
    ))
}

fn ac10_sphere_size_is_run_number() -> Outcome {
    let mut words = 0u64;
    for len in 1..=14usize {
        for bits in 0..(1u64 << len) {
            let x = Word::from_bits(bits, len).map_err(|e| e.to_string())?;
            let size = x.deletion_sphere().len();
            ensure(size == x.run_number(), || {
                format!("{x}: #dS = {size}, runs = {}", x.run_number())
            })?;
            words += 1;
        }
    }
    Ok(format!("{words} words"))
}

fn ac11_decoder_round_trip() -> Outcome {
    let start = Instant::now();
    let mut trips = 0u64;
    for n in 2..=12usize {
        for a in 1..n {
            for m in 0..n {
                let spec = CodeSpec::new(a, n - a, m as i64).map_err(|e| e.to_string())?;
                for c in enumerate_code(&spec) {
                    for i in 0..n {
                        let received = c.delete(i).map_err(|e| e.to_string())?;
                        match decode_single_deletion(&received, &spec) {
                            Ok(Some(d)) if d == c => trips += 1,
                            Ok(other) => {
                                return Err(format!("{c} -{i}-> {received} decoded to {other:?}"))
                            }
                            Err(e @ Error::UniquenessViolation { .. }) => {
                                return Err(format!("uniqueness violation: {e}"))
                            }
                            Err(e) => return Err(e.to_string()),
                        }
                    }
                }
            }
        }
    }
    within(Duration::from_secs(120), start.elapsed())?;
    Ok(format!("{trips} round trips in {:?}", start.elapsed()))
}

fn ac12_root_of_unity_limits() -> Outcome {
    const TOLERANCE: f64 = 1e-6;
    let mut checks = 0;
    let mut worst: f64 = 0.0;
    for a in 1..=8u64 {
        for b in 1..=8u64 {
            let n = a + b;
            let poly = q_binomial(n as i64, b as i64);
            for d in divisors(n).map_err(|e| e.to_string())? {
                let limit =
                    q_binomial_limit_at_primitive_root(a, b, d).map_err(|e| e.to_string())?;
                for k in (0..d).filter(|&k| gcd(k, d) == 1) {
                    let value =
                        eval_at_root_of_unity(&poly, d, k as i64).map_err(|e| e.to_string())?;
                    let diff = (value - Complex64::new(limit as f64, 0.0)).norm();
                    worst = worst.max(diff);
                    ensure(diff <= TOLERANCE, || {
                        format!("({a},{b}) d={d} k={k}: {value} vs {limit}")
                    })?;
                    checks += 1;
                }
            }
        }
    }
    Ok(format!("{checks} evaluations, max error {worst:.2e}"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("AC-01 q_binomial(4,2) exact, < 1 ms", ac01_q_binomial_4_2),
        (
            "AC-02 lattice paths = q_binomial, i <= 16",
            ac02_lattice_paths,
        ),
        (
            "AC-03 DM(C(a,b)) = q_binomial, a+b <= 16",
            ac03_dm_equals_q_binomial,
        ),
        ("AC-04 C(2,2,m) memberships", ac04_memberships_2_2),
        (
            "AC-05 closed-form #C and m=0 bound, a+b <= 18",
            ac05_cardinality,
        ),
        (
            "AC-06 residue congruence mod q^(a+b)-1, a+b <= 16",
            ac06_residue_congruence,
        ),
        ("AC-07 R_r closed form = oracle, a,b <= 8", ac07_r_poly),
        ("AC-08 R_r symmetry mod q^(2g)-1, g <= 8", ac08_symmetry),
        ("AC-09 #dS(C(g,g,m)) = (g+1)#C, g <= 8", ac09_sphere_theorem),
        (
            "AC-10 #dS({x}) = runs, len <= 14",
            ac10_sphere_size_is_run_number,
        ),
        (
            "AC-11 decoder round trip, a+b <= 12",
            ac11_decoder_round_trip,
        ),
        (
            "AC-12 root-of-unity limits within 1e-6",
            ac12_root_of_unity_limits,
        ),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL {name}: {why}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
