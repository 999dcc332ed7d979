use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::Matrix;

/// Outcome of checking a claimed decomposition `A = U + N`, `N^k = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub sum_ok: bool,
    pub unit_ok: bool,
    pub nilpotent_ok: bool,
    /// Smallest `j <= k` with `N^j = 0`; `None` if `N^k != 0`.
    pub index_of_n: Option<usize>,
    pub overall: bool,
}

/// Checks `A = U + N` entrywise, `det U != 0` and `N^k = 0`.
pub fn verify_decomposition(a: &Matrix, u: &Matrix, n: &Matrix, k: usize) -> Result<VerifyReport> {
    for m in [u, n] {
        if m.field() != a.field() {
            return Err(Error::MixedFields {
                left: a.field().to_string(),
                right: m.field().to_string(),
            });
        }
        if m.rows() != a.rows() || m.cols() != a.cols() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} against {}x{}",
                m.rows(),
                m.cols(),
                a.rows(),
                a.cols()
            )));
        }
    }
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    if k == 0 {
        return Err(Error::IndexConstraintViolated("k must be positive".into()));
    }
    let sum_ok = u.add(n)? == *a;
    let unit_ok = !u.det()?.is_zero();
    let index_of_n = n.nilpotency_index(k)?;
    let nilpotent_ok = index_of_n.is_some();
    Ok(VerifyReport {
        sum_ok,
        unit_ok,
        nilpotent_ok,
        index_of_n,
        overall: sum_ok && unit_ok && nilpotent_ok,
    })
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = |b: bool| if b { "ok" } else { "FAIL" };
        writeln!(f, "A = U + N      {}", mark(self.sum_ok))?;
        writeln!(f, "U invertible   {}", mark(self.unit_ok))?;
        match self.index_of_n {
            Some(j) => writeln!(f, "N^k = 0        ok (index {j})")?,
            None => writeln!(f, "N^k = 0        FAIL")?,
        }
        write!(f, "overall        {}", mark(self.overall))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;

    #[test]
    fn tampering_is_detected() {
        let q = FieldSpec::rationals();
        let a = Matrix::unit(q, 2, 1, 0);
        let u = Matrix::from_i64_rows(q, &[[1, -1], [2, -1]]).unwrap();
        let n = Matrix::from_i64_rows(q, &[[-1, 1], [-1, 1]]).unwrap();
        let good = verify_decomposition(&a, &u, &n, 2).unwrap();
        assert!(good.overall);
        assert_eq!(good.index_of_n, Some(2));

        let bad_n = n.add(&Matrix::unit(q, 2, 0, 0)).unwrap();
        let r = verify_decomposition(&a, &u, &bad_n, 2).unwrap();
        assert!(!r.nilpotent_ok && !r.sum_ok && !r.overall);

        let r = verify_decomposition(&a, &Matrix::zeros(q, 2, 2), &n, 2).unwrap();
        assert!(!r.unit_ok && !r.overall);

        let r = verify_decomposition(&a, &u, &n, 1).unwrap();
        assert!(!r.nilpotent_ok);
    }

    #[test]
    fn shape_and_field_errors() {
        let q = FieldSpec::rationals();
        let a = Matrix::identity(q, 2);
        assert!(matches!(
            verify_decomposition(&a, &Matrix::identity(q, 3), &a, 2),
            Err(Error::DimensionMismatch(_))
        ));
        let f3 = Matrix::identity(FieldSpec::prime(3).unwrap(), 2);
        assert!(matches!(
            verify_decomposition(&a, &f3, &a, 2),
            Err(Error::MixedFields { .. })
        ));
    }
}
