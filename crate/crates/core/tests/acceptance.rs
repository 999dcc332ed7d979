//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits non-zero if any criterion fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use finedecomp::construct::{lemma_basis_matrix, shift_block, special_nilpotent, GadgetIndex};
use finedecomp::verify::{exhaustive_feasible, random_invertible, OracleBudget};
use finedecomp::{
    block_form, complement_for_invertible, complement_for_nilpotent, decompose, feasible, frobenius_form,
    nilpotent_max_rank, random_matrix_of_rank, verify_decomposition, FieldSpec, Matrix, Outcome, Polynomial,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let elapsed = start.elapsed();
    ensure(elapsed < limit, || format!("took {elapsed:?}, limit {limit:?}"))
}

fn example1() -> Check {
    let start = Instant::now();
    for field in [q(), f11()] {
        let b = m(field, &EXAMPLE1_B);
        let expected = m(field, &N_1_3_5).add(&m(field, &N_2_7_4)).unwrap();
        let poly = Polynomial::from_i64(field, &[-1, -1, 1]);
        let n_b = complement_for_invertible(&poly, 7, 5).map_err(|e| e.to_string())?;
        ensure(n_b == expected, || format!("over {field}: complement differs"))?;
        let u = b.add(&n_b).unwrap();
        ensure(u == m(field, &EXAMPLE1_B_PLUS_NB), || {
            format!("over {field}: B + N_B differs")
        })?;
        ensure(!u.det().unwrap().is_zero(), || {
            format!("over {field}: B + N_B singular")
        })?;
        ensure(n_b.pow(5).unwrap().is_zero(), || format!("over {field}: N_B^5 != 0"))?;

        let d = decompose(&b, 5).map_err(|e| e.to_string())?;
        let d = d.decomposition().ok_or("decompose reported infeasible")?;
        ensure(d.n == expected.neg(), || {
            format!("over {field}: decompose N != -(N_135 + N_274)")
        })?;
    }
    within(start, Duration::from_secs(1))?;
    Ok("complement = N_{1,3,5} + N_{2,7,4} over Q and F_11".into())
}

fn example2() -> Check {
    let start = Instant::now();
    for field in [q(), f11()] {
        let c = m(field, &EXAMPLE2_C);
        let expected = m(field, &N_1_4_4).add(&m(field, &N_2_7_4)).unwrap();
        let n_c = complement_for_nilpotent(4, 5, 4, field).map_err(|e| e.to_string())?;
        ensure(n_c == expected, || format!("over {field}: complement differs"))?;
        let u = c.add(&n_c).unwrap();
        ensure(u == m(field, &EXAMPLE2_C_PLUS_NC), || {
            format!("over {field}: C + N_C differs")
        })?;
        ensure(!u.det().unwrap().is_zero(), || {
            format!("over {field}: C + N_C singular")
        })?;
        ensure(n_c.pow(4).unwrap().is_zero(), || format!("over {field}: N_C^4 != 0"))?;

        let d = decompose(&c, 4).map_err(|e| e.to_string())?;
        let d = d.decomposition().ok_or("decompose reported infeasible")?;
        ensure(d.n == expected.neg(), || {
            format!("over {field}: decompose N != -(N_144 + N_274)")
        })?;
    }
    within(start, Duration::from_secs(1))?;
    Ok("complement = N_{1,4,4} + N_{2,7,4} over Q and F_11".into())
}

/// Three-way agreement between constructor, rank criterion and oracle on one instance.
fn agree(a: &Matrix, k: usize) -> Result<bool, String> {
    let n = a.rows();
    let criterion = k * a.rank() >= n;
    let outcome = decompose(a, k).map_err(|e| e.to_string())?;
    let oracle = exhaustive_feasible(a, k, OracleBudget::default()).map_err(|e| e.to_string())?;
    let built = match &outcome {
        Outcome::Decomposed(d) => {
            let report = verify_decomposition(a, &d.u, &d.n, k).unwrap();
            ensure(report.overall, || {
                format!("verifier rejected decomposition of\n{a}k={k}")
            })?;
            true
        }
        Outcome::Infeasible { .. } => false,
    };
    ensure(built == criterion && criterion == oracle.feasible, || {
        format!(
            "disagreement (constructor {built}, criterion {criterion}, oracle {}) on\n{a}k={k}",
            oracle.feasible
        )
    })?;
    ensure(criterion == feasible(a, k).unwrap(), || "feasible() disagrees".into())?;
    if let Some(w) = &oracle.witness {
        ensure(
            w.pow(k).unwrap().is_zero() && !a.sub(w).unwrap().det().unwrap().is_zero(),
            || "invalid oracle witness".into(),
        )?;
    }
    Ok(criterion)
}

fn exhaustive_iff() -> Check {
    let start = Instant::now();
    let (mut instances, mut feasible_count) = (0, 0);
    for (p, n) in [(2, 2), (2, 3), (3, 2)] {
        let field = FieldSpec::prime(p).unwrap();
        for a in all_matrices(field, n) {
            for k in 1..=n {
                instances += 1;
                feasible_count += agree(&a, k)? as usize;
            }
        }
    }
    within(start, Duration::from_secs(120))?;
    Ok(format!(
        "{instances} (A, k) pairs, {feasible_count} feasible, all agree"
    ))
}

fn sampled_iff_n4() -> Check {
    let start = Instant::now();
    let f2 = FieldSpec::prime(2).unwrap();
    let mut feasible_count = 0;
    for seed in 0..50u64 {
        let a = random_matrix_of_rank(4, (seed % 5) as usize, f2, seed);
        for k in 2..=4 {
            feasible_count += agree(&a, k)? as usize;
        }
    }
    within(start, Duration::from_secs(300))?;
    Ok(format!(
        "150 (A, k) pairs over F_2, {feasible_count} feasible, all agree"
    ))
}

fn check_decomposition(a: &Matrix, k: usize) -> Result<(), String> {
    let n = a.rows();
    let outcome = decompose(a, k).map_err(|e| format!("{e} on\n{a}k={k}"))?;
    let d = outcome
        .decomposition()
        .ok_or_else(|| format!("feasible instance reported infeasible:\n{a}k={k}"))?;
    ensure(d.u.add(&d.n).unwrap() == *a, || "A != U + N".into())?;
    ensure(!d.u.det().unwrap().is_zero(), || "U singular".into())?;
    ensure(d.n.pow(k).unwrap().is_zero(), || "N^k != 0".into())?;
    ensure(d.n.rank() <= nilpotent_max_rank(n, k), || "rank(N) too large".into())?;
    Ok(())
}

fn property_suite() -> Check {
    let start = Instant::now();
    let primes = [2u64, 3, 5, 7, 101];
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for i in 0..200 {
        let field = FieldSpec::prime(primes[i % primes.len()]).unwrap();
        let n = rng.random_range(2..=12usize);
        let k = rng.random_range(1..=n);
        let r = rng.random_range(n.div_ceil(k)..=n);
        let a = random_matrix_of_rank(n, r, field, rng.random());
        check_decomposition(&a, k)?;
    }
    for _ in 0..50 {
        let n = rng.random_range(2..=8usize);
        let k = rng.random_range(1..=n);
        let r = rng.random_range(n.div_ceil(k)..=n);
        let a = random_matrix_of_rank(n, r, q(), rng.random());
        check_decomposition(&a, k)?;
    }
    within(start, Duration::from_secs(120))?;
    Ok("200 instances over F_p and 50 over Q decomposed and checked".into())
}

fn necessity() -> Check {
    let start = Instant::now();
    for k in 2..=4 {
        let n = k + 2;
        for field in [q(), f11()] {
            let a = Matrix::unit(field, n, 0, 1);
            let outcome = decompose(&a, k).map_err(|e| e.to_string())?;
            ensure(outcome == Outcome::Infeasible { rank: 1, n, k }, || {
                format!("e_12 in M_{n}, k={k} over {field} not infeasible")
            })?;
        }
    }
    within(start, Duration::from_secs(1))?;
    Ok("e_12 in M_{k+2} infeasible for k = 2, 3, 4".into())
}

fn lemma_sweep() -> Check {
    let start = Instant::now();
    let field = q();
    let mut count = 0;
    for n in 2..=8 {
        for k in 2..=n {
            let jordan = shift_block(n, k, field);
            for s in 2..=n + 2 - k {
                for r in 1..s {
                    let g = special_nilpotent(n, r, s, k, field).map_err(|e| e.to_string())?;
                    let label = format!("N_{{{r},{s},{k}}} in M_{n}");
                    ensure(g.rank() == k - 1, || format!("{label}: rank {}", g.rank()))?;
                    ensure(g.nilpotency_index(k).unwrap() == Some(k), || {
                        format!("{label}: index != {k}")
                    })?;
                    let basis = lemma_basis_matrix(n, r, s, k, field).unwrap();
                    ensure(jordan.conjugate(&basis).unwrap() == g, || {
                        format!("{label}: similarity fails")
                    })?;
                    count += 1;
                }
            }
        }
    }
    let displayed = m(field, &N_1_2_5);
    ensure(special_nilpotent(9, 1, 2, 5, field).unwrap() == displayed, || {
        "N_{1,2,5} display".into()
    })?;
    ensure(
        shift_block(9, 5, field)
            .conjugate(&lemma_basis_matrix(9, 1, 2, 5, field).unwrap())
            .unwrap()
            == displayed,
        || "N_{1,2,5} similarity".into(),
    )?;
    ensure(
        GadgetIndex::new(1, 3, 5).build(9, field).unwrap() == m(field, &N_1_3_5),
        || "N_{1,3,5} display".into(),
    )?;
    within(start, Duration::from_secs(30))?;
    Ok(format!("{count} valid (n, r, s, k) tuples"))
}

fn j_determinants() -> Check {
    for field in [q(), FieldSpec::prime(3).unwrap()] {
        for r in 1..=10 {
            let expected = field.from_i64(if r % 2 == 0 { 1 } else { -1 });
            let det = j_block(field, r).det().unwrap();
            ensure(det == expected, || format!("det(J_{r}) = {det} over {field}"))?;
        }
    }
    Ok("det(J_r) = (-1)^r for r = 1..10 over Q and F_3".into())
}

/// Random matrices with rich invariant-factor structure: conjugates of block
/// diagonals built from a few repeated small companions.
fn structured_matrix(field: FieldSpec, rng: &mut ChaCha8Rng) -> Matrix {
    let n = rng.random_range(2..=10usize);
    let palette: Vec<Polynomial> = (0..2)
        .map(|_| {
            let deg = rng.random_range(1..=2usize);
            let mut c: Vec<i64> = (0..deg).map(|_| rng.random_range(-2..=2)).collect();
            c.push(1);
            Polynomial::from_i64(field, &c)
        })
        .chain([Polynomial::x_power(field, 1), Polynomial::x_power(field, 2)])
        .collect();
    let mut blocks = Vec::new();
    let mut size = 0;
    while size < n {
        let f = &palette[rng.random_range(0..palette.len())];
        let d = f.degree().unwrap();
        if size + d > n {
            continue;
        }
        blocks.push(f.companion().unwrap());
        size += d;
    }
    let d = Matrix::block_diag(&blocks).unwrap();
    let s = random_invertible(n, field, rng.random());
    d.conjugate(&s).unwrap()
}

fn canonical_contract() -> Check {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for i in 0..100 {
        let field = if i % 2 == 0 { FieldSpec::prime(5).unwrap() } else { q() };
        let a = if i % 4 < 2 {
            structured_matrix(field, &mut rng)
        } else {
            let n = rng.random_range(1..=10usize);
            random_matrix_of_rank(n, rng.random_range(0..=n), field, rng.random())
        };
        let frob = frobenius_form(&a).map_err(|e| e.to_string())?;
        ensure(frob.transform.det().unwrap() != field.zero(), || {
            "Frobenius P singular".into()
        })?;
        ensure(a.conjugate(&frob.transform).unwrap() == frob.realization(), || {
            "Frobenius conjugation".into()
        })?;
        ensure(frob.factors.windows(2).all(|w| w[0].divides(&w[1]).unwrap()), || {
            "divisibility chain".into()
        })?;
        ensure(
            frob.characteristic_polynomial().eval_matrix(&a).unwrap().is_zero(),
            || "Cayley-Hamilton".into(),
        )?;

        let form = block_form(&a).map_err(|e| e.to_string())?;
        ensure(!form.transform.det().unwrap().is_zero(), || "block P singular".into())?;
        ensure(a.conjugate(&form.transform).unwrap() == form.realization(), || {
            "block conjugation".into()
        })?;
        ensure(form.singular_block_count() == a.rows() - a.rank(), || {
            "nullity count".into()
        })?;
    }
    within(start, Duration::from_secs(60))?;
    Ok("100 instances over F_5 and Q".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("AC1 worked example, invertible host", example1),
        ("AC2 worked example, nilpotent host", example2),
        ("AC3 iff, exhaustive over M_2(F_2), M_3(F_2), M_2(F_3)", exhaustive_iff),
        ("AC4 iff, sampled over M_4(F_2)", sampled_iff_n4),
        ("AC5 property suite", property_suite),
        ("AC6 necessity witness", necessity),
        ("AC7 gadget sweep n <= 8", lemma_sweep),
        ("AC8 det(J_r)", j_determinants),
        ("AC9 canonical-form contract", canonical_contract),
    ];
    let mut failures = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        match run() {
            Ok(detail) => println!("PASS  {name}: {detail} [{:.2?}]", start.elapsed()),
            Err(why) => {
                failures += 1;
                println!("FAIL  {name}: {why} [{:.2?}]", start.elapsed());
            }
        }
    }
    println!("{} of 9 criteria passed", 9 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
