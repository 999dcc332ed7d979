//! Dense exact matrices.
//!
//! Storage is row-major. All elimination routines pivot on the first nonzero
//! entry found scanning a column top to bottom, so every result (rank profile,
//! null-space basis, inverse) is a deterministic function of the input.

use std::fmt;
use std::ops::Index;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    /// The `rows x cols` zero matrix. Panics if either dimension is zero.
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        assert!(rows >= 1 && cols >= 1, "matrix dimensions must be positive");
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    /// Matrix unit with a single one at `(row, col)` (zero-based).
    pub fn unit(field: FieldSpec, n: usize, row: usize, col: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        m.set(row, col, field.one());
        m
    }

    /// Builds a matrix from a row-major entry vector, checking shape and field.
    pub fn from_entries(field: FieldSpec, rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Self> {
        if rows == 0 || cols == 0 || data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if let Some(bad) = data.iter().find(|s| s.field() != field) {
            return Err(Error::MixedFields {
                left: field.to_string(),
                right: bad.field().to_string(),
            });
        }
        Ok(Matrix {
            field,
            rows,
            cols,
            data,
        })
    }

    /// Builds a matrix from integer rows mapped into `field`.
    pub fn from_i64_rows<R: AsRef<[i64]>>(field: FieldSpec, rows: &[R]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.as_ref().len());
        if rows.iter().any(|row| row.as_ref().len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let data = rows
            .iter()
            .flat_map(|row| row.as_ref().iter().map(|&v| field.from_i64(v)))
            .collect();
        Self::from_entries(field, r, c, data)
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: FieldSpec, columns: &[Vec<Scalar>]) -> Result<Self> {
        let rows = columns.first().map_or(0, Vec::len);
        let cols = columns.len();
        if columns.iter().any(|c| c.len() != rows) {
            return Err(Error::DimensionMismatch("columns of unequal length".into()));
        }
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for c in columns {
                data.push(c[i].clone());
            }
        }
        Self::from_entries(field, rows, cols, data)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn get(&self, row: usize, col: usize) -> &Scalar {
        &self.data[row * self.cols + col]
    }

    /// Panics if `value` belongs to a different field.
    pub fn set(&mut self, row: usize, col: usize, value: Scalar) {
        assert_eq!(value.field(), self.field, "entry field differs from matrix field");
        self.data[row * self.cols + col] = value;
    }

    pub fn row(&self, row: usize) -> &[Scalar] {
        &self.data[row * self.cols..(row + 1) * self.cols]
    }

    pub fn column(&self, col: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, col).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    fn check_field(&self, other: &Matrix) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::MixedFields {
                left: self.field.to_string(),
                right: other.field.to_string(),
            })
        }
    }

    fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.check_field(other)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for (l, a) in self.row(i).iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(l, j);
                    if !b.is_zero() {
                        let idx = i * other.cols + j;
                        out.data[idx] = &out.data[idx] + &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    fn zip_with(&self, other: &Matrix, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Result<Matrix> {
        self.check_field(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn neg(&self) -> Matrix {
        Matrix {
            data: self.data.iter().map(|a| -a).collect(),
            ..self.clone()
        }
    }

    /// Panics if `c` belongs to a different field.
    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            data: self.data.iter().map(|a| a * c).collect(),
            ..self.clone()
        }
    }

    pub fn transpose(&self) -> Matrix {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Matrix {
            field: self.field,
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    /// `self * v` for a column vector given as a slice.
    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(self.field.zero(), |acc, (a, b)| &acc + &(a * b))
            })
            .collect()
    }

    /// Copy of the rows as vectors, the working form for elimination.
    fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Rank by exact Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut rows = self.to_rows();
        forward_eliminate(&mut rows, self.cols).len()
    }

    pub fn det(&self) -> Result<Scalar> {
        let n = self.require_square()?;
        let mut rows = self.to_rows();
        let mut det = self.field.one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&i| !rows[i][col].is_zero()) else {
                return Ok(self.field.zero());
            };
            if p != col {
                rows.swap(p, col);
                det = -det;
            }
            let pivot = rows[col][col].clone();
            det = &det * &pivot;
            let pinv = pivot.inv()?;
            for i in col + 1..n {
                if rows[i][col].is_zero() {
                    continue;
                }
                let factor = &rows[i][col] * &pinv;
                let (top, bottom) = rows.split_at_mut(i);
                axpy(&mut bottom[0], &factor, &top[col], col);
            }
        }
        Ok(det)
    }

    /// Exact inverse via Gauss-Jordan on `[A | I]`.
    pub fn inverse(&self) -> Result<Matrix> {
        let n = self.require_square()?;
        let mut rows: Vec<Vec<Scalar>> = self
            .to_rows()
            .into_iter()
            .enumerate()
            .map(|(i, mut r)| {
                r.extend((0..n).map(|j| if i == j { self.field.one() } else { self.field.zero() }));
                r
            })
            .collect();
        for col in 0..n {
            let p = (col..n).find(|&i| !rows[i][col].is_zero()).ok_or(Error::Singular)?;
            rows.swap(p, col);
            let pinv = rows[col][col].inv()?;
            for x in rows[col].iter_mut() {
                *x = &*x * &pinv;
            }
            for i in 0..n {
                if i == col || rows[i][col].is_zero() {
                    continue;
                }
                let factor = rows[i][col].clone();
                let pivot_row = rows[col].clone();
                axpy(&mut rows[i], &factor, &pivot_row, col);
            }
        }
        let data = rows.into_iter().flat_map(|r| r.into_iter().skip(n)).collect();
        Ok(Matrix {
            field: self.field,
            rows: n,
            cols: n,
            data,
        })
    }

    /// Similarity transform `P^-1 * self * P`.
    pub fn conjugate(&self, p: &Matrix) -> Result<Matrix> {
        let n = self.require_square()?;
        p.require_square()?;
        if p.rows != n {
            return Err(Error::DimensionMismatch(format!(
                "conjugating {n}x{n} by {}x{}",
                p.rows, p.cols
            )));
        }
        p.inverse()?.mul(self)?.mul(p)
    }

    pub fn pow(&self, e: usize) -> Result<Matrix> {
        let n = self.require_square()?;
        let mut acc = Matrix::identity(self.field, n);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Smallest `j <= cap` with `self^j = 0`, or `None` if there is none.
    ///
    /// The zero matrix reports index 1.
    pub fn nilpotency_index(&self, cap: usize) -> Result<Option<usize>> {
        self.require_square()?;
        let mut power = self.clone();
        for j in 1..=cap {
            if power.is_zero() {
                return Ok(Some(j));
            }
            if j < cap {
                power = power.mul(self)?;
            }
        }
        Ok(None)
    }

    /// Block-diagonal matrix with the given square blocks along the diagonal.
    pub fn block_diag(blocks: &[Matrix]) -> Result<Matrix> {
        let first = blocks.first().ok_or(Error::EmptyBlockList)?;
        let mut n = 0;
        for b in blocks {
            first.check_field(b)?;
            n += b.require_square()?;
        }
        let mut out = Matrix::zeros(first.field, n, n);
        let mut offset = 0;
        for b in blocks {
            out.embed(b, offset);
            offset += b.rows;
        }
        Ok(out)
    }

    /// Writes the square matrix `block` into `self` with its top-left corner at `(offset, offset)`.
    pub(crate) fn embed(&mut self, block: &Matrix, offset: usize) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.data[(offset + i) * self.cols + offset + j] = block.get(i, j).clone();
            }
        }
    }

    /// The principal submatrix on rows/columns `offset..offset + size`.
    pub fn principal_block(&self, offset: usize, size: usize) -> Matrix {
        let mut data = Vec::with_capacity(size * size);
        for i in offset..offset + size {
            data.extend_from_slice(&self.row(i)[offset..offset + size]);
        }
        Matrix {
            field: self.field,
            rows: size,
            cols: size,
            data,
        }
    }

    /// Permutation matrix `P` with `P e_j = e_{perm[j]}`.
    pub fn permutation(field: FieldSpec, perm: &[usize]) -> Result<Matrix> {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::NotAPermutation(n));
            }
        }
        if n == 0 {
            return Err(Error::NotAPermutation(0));
        }
        let mut m = Matrix::zeros(field, n, n);
        for (j, &p) in perm.iter().enumerate() {
            m.set(p, j, field.one());
        }
        Ok(m)
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (r, c): (usize, usize)) -> &Scalar {
        self.get(r, c)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for i in 0..self.rows {
            let line: Vec<String> = cells[i * self.cols..(i + 1) * self.cols]
                .iter()
                .map(|c| format!("{c:>width$}"))
                .collect();
            writeln!(f, "[{}]", line.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix over {} ({}x{})", self.field, self.rows, self.cols)?;
        fmt::Display::fmt(self, f)
    }
}

/// `target[j] -= factor * source[j]` for `j >= from`.
fn axpy(target: &mut [Scalar], factor: &Scalar, source: &[Scalar], from: usize) {
    for j in from..target.len() {
        if !source[j].is_zero() {
            target[j] = &target[j] - &(factor * &source[j]);
        }
    }
}

/// In-place reduction to row echelon form. Returns the pivot columns; the
/// first `len` rows of `rows` are the nonzero echelon rows afterwards.
pub(crate) fn forward_eliminate(rows: &mut [Vec<Scalar>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(p, r);
        let pinv = rows[r][col].inv().expect("pivot is nonzero");
        for i in r + 1..rows.len() {
            if rows[i][col].is_zero() {
                continue;
            }
            let factor = &rows[i][col] * &pinv;
            let (top, bottom) = rows.split_at_mut(i);
            axpy(&mut bottom[0], &factor, &top[r], col);
        }
        pivots.push(col);
        r += 1;
    }
    pivots
}

/// Reduced row echelon form in place; returns pivot columns.
pub(crate) fn reduce_rref(rows: &mut [Vec<Scalar>], cols: usize) -> Vec<usize> {
    let pivots = forward_eliminate(rows, cols);
    for (r, &col) in pivots.iter().enumerate().rev() {
        let pinv = rows[r][col].inv().expect("pivot is nonzero");
        for x in rows[r].iter_mut() {
            *x = &*x * &pinv;
        }
        for i in 0..r {
            if rows[i][col].is_zero() {
                continue;
            }
            let factor = rows[i][col].clone();
            let (top, bottom) = rows.split_at_mut(r);
            axpy(&mut top[i], &factor, &bottom[0], col);
        }
    }
    pivots
}

/// Basis of `{x : M x = 0}`, one vector per free column in increasing order.
pub(crate) fn null_space(m: &Matrix) -> Vec<Vec<Scalar>> {
    let mut rows = m.to_rows();
    let pivots = reduce_rref(&mut rows, m.cols);
    let field = m.field;
    (0..m.cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![field.zero(); m.cols];
            v[free] = field.one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -&rows[r][free];
            }
            v
        })
        .collect()
}

/// One solution of `M x = b` (free variables set to zero), or `None`.
pub(crate) fn solve(m: &Matrix, b: &[Scalar]) -> Option<Vec<Scalar>> {
    assert_eq!(b.len(), m.rows);
    let mut rows: Vec<Vec<Scalar>> = m
        .to_rows()
        .into_iter()
        .zip(b)
        .map(|(mut r, bi)| {
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = reduce_rref(&mut rows, m.cols + 1);
    if pivots.last() == Some(&m.cols) {
        return None;
    }
    let mut x = vec![m.field.zero(); m.cols];
    for (r, &pc) in pivots.iter().enumerate() {
        x[pc] = rows[r][m.cols].clone();
    }
    Some(x)
}
