//! Worked-example matrices, transcribed entry by entry.
#![allow(dead_code)]

use finedecomp::{FieldSpec, Matrix};

pub fn m(field: FieldSpec, rows: &[[i64; 9]; 9]) -> Matrix {
    Matrix::from_i64_rows(field, rows).unwrap()
}

/// `C(x^2 - x - 1) ⊕ 0_7`.
pub const EXAMPLE1_B: [[i64; 9]; 9] = [
    [0, 1, 0, 0, 0, 0, 0, 0, 0],
    [1, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
];

pub const N_1_3_5: [[i64; 9]; 9] = [
    [1, 0, 0, 0, 0, -1, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 0, -1, -1, -1, -1, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
];

pub const N_2_7_4: [[i64; 9]; 9] = [
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0, 0, -1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, -1, -1, -1],
    [0, 0, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 1, 0],
];

pub const EXAMPLE1_B_PLUS_NB: [[i64; 9]; 9] = [
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

/// `C(x^4) ⊕ 0_5`.
pub const EXAMPLE2_C: [[i64; 9]; 9] = [
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
];

pub const N_1_4_4: [[i64; 9]; 9] = [
    [1, 0, 0, 0, 0, -1, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 0, 0, -1, -1, -1, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
];

pub const EXAMPLE2_C_PLUS_NC: [[i64; 9]; 9] = [
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

/// `N_{1,2,5}` in `M_9`: top-left `k x k` corner of the displayed `N_{1,2,k}`.
pub const N_1_2_5: [[i64; 9]; 9] = [
    [1, 0, 0, 0, -1, 0, 0, 0, 0],
    [1, -1, -1, -1, -1, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
];

/// `J_r`: first row all `-1`, ones on the subdiagonal.
pub fn j_block(field: FieldSpec, r: usize) -> Matrix {
    let mut j = Matrix::zeros(field, r, r);
    for c in 0..r {
        j.set(0, c, field.from_i64(-1));
    }
    for i in 1..r {
        j.set(i, i - 1, field.one());
    }
    j
}

pub fn f11() -> FieldSpec {
    FieldSpec::prime(11).unwrap()
}

pub fn q() -> FieldSpec {
    FieldSpec::rationals()
}

/// Every matrix in `M_n(F_p)`, row-major lexicographic.
pub fn all_matrices(field: FieldSpec, n: usize) -> Vec<Matrix> {
    let p = field.modulus().unwrap() as u64;
    let count = p.pow((n * n) as u32);
    (0..count)
        .map(|mut idx| {
            let mut entries = vec![field.zero(); n * n];
            for slot in entries.iter_mut().rev() {
                *slot = field.from_i64((idx % p) as i64);
                idx /= p;
            }
            Matrix::from_entries(field, n, n, entries).unwrap()
        })
        .collect()
}
