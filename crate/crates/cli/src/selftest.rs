//! Replays the two worked examples entrywise and sweeps the gadget similarity.

use finedecomp::construct::shift_block;
use finedecomp::{
    complement_for_invertible, complement_for_nilpotent, decompose, lemma_basis_matrix, special_nilpotent, FieldSpec,
    Matrix, Polynomial,
};

type Grid = [[i64; 9]; 9];

/// `N_{1,3,5} + N_{2,7,4}`.
const COMPLEMENT_1: Grid = [
    [1, 0, 0, 0, 0, -1, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0, 0, -1],
    [1, 0, -1, -1, -1, -1, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, -1, -1, -1],
    [0, 0, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 1, 0],
];

const UNIT_1: Grid = [
    [1, 1, 0, 0, 0, -1, 0, 0, 0],
    [1, 2, 0, 0, 0, 0, 0, 0, -1],
    [1, 0, -1, -1, -1, -1, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, -1, -1, -1],
    [0, 0, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 1, 0],
];

/// `N_{1,4,4} + N_{2,7,4}`.
const COMPLEMENT_2: Grid = [
    [1, 0, 0, 0, 0, -1, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0, 0, -1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 0, 0, -1, -1, -1, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, -1, -1, -1],
    [0, 0, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 1, 0],
];

const UNIT_2: Grid = [
    [1, 0, 0, 0, 0, -1, 0, 0, 0],
    [1, 1, 0, 0, 0, 0, 0, 0, -1],
    [0, 1, 0, 0, 0, 0, 0, 0, 0],
    [1, 0, 1, -1, -1, -1, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, -1, -1, -1],
    [0, 0, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 1, 0],
];

fn grid(field: FieldSpec, g: &Grid) -> Matrix {
    Matrix::from_i64_rows(field, g).expect("9x9 grid")
}

fn check(cond: bool, what: &str) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what.to_string())
    }
}

/// `host ⊕ 0` padded to 9x9, its complement, the expected `U`, and `k`.
fn replay(a: &Matrix, complement: Matrix, expected_c: &Grid, expected_u: &Grid, k: usize) -> Result<(), String> {
    let field = a.field();
    check(complement == grid(field, expected_c), "complement differs")?;
    let u = a.add(&complement).map_err(|e| e.to_string())?;
    check(u == grid(field, expected_u), "host + complement differs")?;
    check(
        !u.det().map_err(|e| e.to_string())?.is_zero(),
        "host + complement is singular",
    )?;
    let outcome = decompose(a, k).map_err(|e| e.to_string())?;
    let d = outcome.decomposition().ok_or("reported infeasible")?;
    check(d.n == grid(field, expected_c).neg(), "decompose returned a different N")
}

pub fn example_invertible_host(field: FieldSpec) -> Result<(), String> {
    let q = Polynomial::from_i64(field, &[-1, -1, 1]);
    let blocks = [q.companion().unwrap(), Matrix::zeros(field, 7, 7)];
    let b = Matrix::block_diag(&blocks).unwrap();
    let c = complement_for_invertible(&q, 7, 5).map_err(|e| e.to_string())?;
    replay(&b, c, &COMPLEMENT_1, &UNIT_1, 5)
}

pub fn example_nilpotent_host(field: FieldSpec) -> Result<(), String> {
    let blocks = [shift_block(4, 4, field), Matrix::zeros(field, 5, 5)];
    let c_mat = Matrix::block_diag(&blocks).unwrap();
    let c = complement_for_nilpotent(4, 5, 4, field).map_err(|e| e.to_string())?;
    replay(&c_mat, c, &COMPLEMENT_2, &UNIT_2, 4)
}

/// Rank `k-1`, index exactly `k`, and `Q^-1 J Q = N_{r,s,k}` for all valid `(r, s, k)` with `n <= 8`.
pub fn gadget_sweep(field: FieldSpec) -> Result<(), String> {
    for n in 2..=8 {
        for k in 2..=n {
            let j = shift_block(n, k, field);
            for s in 2..=n + 2 - k {
                for r in 1..s {
                    let g = special_nilpotent(n, r, s, k, field).map_err(|e| e.to_string())?;
                    let label = format!("N_{{{r},{s},{k}}} in M_{n}");
                    check(g.rank() == k - 1, &format!("{label}: wrong rank"))?;
                    check(
                        g.nilpotency_index(k).ok().flatten() == Some(k),
                        &format!("{label}: wrong index"),
                    )?;
                    let basis = lemma_basis_matrix(n, r, s, k, field).map_err(|e| e.to_string())?;
                    check(
                        j.conjugate(&basis).ok() == Some(g),
                        &format!("{label}: similarity fails"),
                    )?;
                }
            }
        }
    }
    Ok(())
}

/// Every self-test case, by name.
pub fn run() -> Vec<(String, Result<(), String>)> {
    let mut out = Vec::new();
    for field in [FieldSpec::rationals(), FieldSpec::prime(11).expect("11 is prime")] {
        out.push((
            format!("example, invertible host, over {field}"),
            example_invertible_host(field),
        ));
        out.push((
            format!("example, nilpotent host, over {field}"),
            example_nilpotent_host(field),
        ));
    }
    out.push(("gadget sweep n <= 8".to_string(), gadget_sweep(FieldSpec::rationals())));
    out
}
