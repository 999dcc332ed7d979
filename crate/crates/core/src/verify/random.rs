use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::field::{FieldSpec, Scalar};
use crate::matrix::Matrix;

fn random_entry(field: FieldSpec, rng: &mut ChaCha8Rng) -> Scalar {
    match field.modulus() {
        Some(p) => field.from_i64(rng.random_range(0..p as i64)),
        None => field.from_i64(rng.random_range(-9..=9)),
    }
}

fn random_full_rank(field: FieldSpec, rows: usize, cols: usize, rng: &mut ChaCha8Rng) -> Matrix {
    let target = rows.min(cols);
    loop {
        let entries = (0..rows * cols).map(|_| random_entry(field, rng)).collect();
        let m = Matrix::from_entries(field, rows, cols, entries).expect("shape is consistent");
        if m.rank() == target {
            return m;
        }
    }
}

/// A reproducible `n x n` matrix of rank exactly `rank`, built as `L * R` with
/// `L` (`n x rank`) and `R` (`rank x n`) of full rank. Rational entries of the
/// factors are drawn from `-9..=9`.
pub fn random_matrix_of_rank(n: usize, rank: usize, field: FieldSpec, seed: u64) -> Matrix {
    assert!(rank <= n, "rank {rank} exceeds size {n}");
    if rank == 0 {
        return Matrix::zeros(field, n, n);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let left = random_full_rank(field, n, rank, &mut rng);
    let right = random_full_rank(field, rank, n, &mut rng);
    left.mul(&right).expect("conformable")
}

/// A reproducible random invertible `n x n` matrix.
pub fn random_invertible(n: usize, field: FieldSpec, seed: u64) -> Matrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    random_full_rank(field, n, n, &mut rng)
}
