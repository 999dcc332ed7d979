//! Dense univariate polynomials.
//!
//! Coefficients are stored in ascending degree order. The vector is empty for
//! the zero polynomial and otherwise ends in a nonzero coefficient.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::matrix::Matrix;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    field: FieldSpec,
    coeffs: Vec<Scalar>,
}

impl Polynomial {
    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn new(field: FieldSpec, coeffs: Vec<Scalar>) -> Result<Self> {
        if let Some(bad) = coeffs.iter().find(|c| c.field() != field) {
            return Err(Error::MixedFields {
                left: field.to_string(),
                right: bad.field().to_string(),
            });
        }
        let mut p = Polynomial { field, coeffs };
        p.normalize();
        Ok(p)
    }

    /// Ascending integer coefficients mapped into `field`.
    pub fn from_i64(field: FieldSpec, coeffs: &[i64]) -> Self {
        let mut p = Polynomial {
            field,
            coeffs: coeffs.iter().map(|&c| field.from_i64(c)).collect(),
        };
        p.normalize();
        p
    }

    pub fn zero(field: FieldSpec) -> Self {
        Polynomial {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: FieldSpec) -> Self {
        Polynomial {
            field,
            coeffs: vec![field.one()],
        }
    }

    /// The monomial `x^m`.
    pub fn x_power(field: FieldSpec, m: usize) -> Self {
        let mut coeffs = vec![field.zero(); m + 1];
        coeffs[m] = field.one();
        Polynomial { field, coeffs }
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Scalar::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(Scalar::is_one)
    }

    /// Value at zero.
    pub fn constant_term(&self) -> Scalar {
        self.coeff(0)
    }

    fn check_field(&self, other: &Polynomial) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::MixedFields {
                left: self.field.to_string(),
                right: other.field.to_string(),
            })
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_field(other)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| &self.coeff(i) + &other.coeff(i)).collect();
        Polynomial::new(self.field, coeffs)
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_field(other)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| &self.coeff(i) - &other.coeff(i)).collect();
        Polynomial::new(self.field, coeffs)
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_field(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(self.field));
        }
        let mut coeffs = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Polynomial::new(self.field, coeffs)
    }

    /// Panics if `c` is from another field.
    pub fn scale(&self, c: &Scalar) -> Polynomial {
        let mut p = Polynomial {
            field: self.field,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        };
        p.normalize();
        p
    }

    /// Divides by the leading coefficient. The zero polynomial stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            None => self.clone(),
            Some(lc) => self.scale(&lc.inv().expect("leading coefficient is nonzero")),
        }
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn divmod(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        self.check_field(divisor)?;
        let dd = divisor.degree().ok_or(Error::DivisionByZeroPoly)?;
        let lc_inv = divisor.leading().unwrap().inv()?;
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree().filter(|&d| d >= dd) else {
            return Ok((Polynomial::zero(self.field), self.clone()));
        };
        let mut quot = vec![self.field.zero(); nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let c = &rem[i + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = &rem[i + j] - &(&c * b);
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Ok((Polynomial::new(self.field, quot)?, Polynomial::new(self.field, rem)?))
    }

    /// True if `self` divides `other` (the zero polynomial divides only zero).
    pub fn divides(&self, other: &Polynomial) -> Result<bool> {
        if self.is_zero() {
            return Ok(other.is_zero());
        }
        Ok(other.divmod(self)?.1.is_zero())
    }

    /// Quotient of a division known to be exact.
    pub(crate) fn div_exact(&self, divisor: &Polynomial) -> Polynomial {
        let (q, r) = self.divmod(divisor).expect("same field, nonzero divisor");
        debug_assert!(r.is_zero(), "inexact division");
        q
    }

    /// Monic greatest common divisor. `gcd(0, 0)` is the zero polynomial.
    pub fn gcd(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_field(other)?;
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.divmod(&b)?.1;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Splits off the largest power of `x`: returns `(m, g)` with
    /// `self = x^m * g` and `g(0) != 0`.
    pub fn strip_x_power(&self) -> Result<(usize, Polynomial)> {
        let m = self
            .coeffs
            .iter()
            .position(|c| !c.is_zero())
            .ok_or(Error::ZeroPolynomial)?;
        Ok((
            m,
            Polynomial {
                field: self.field,
                coeffs: self.coeffs[m..].to_vec(),
            },
        ))
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coeffs
            .iter()
            .rev()
            .fold(self.field.zero(), |acc, c| &(&acc * x) + c)
    }

    /// Horner evaluation at a square matrix.
    pub fn eval_matrix(&self, t: &Matrix) -> Result<Matrix> {
        if !t.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "polynomial evaluated at a {}x{} matrix",
                t.rows(),
                t.cols()
            )));
        }
        if t.field() != self.field {
            return Err(Error::MixedFields {
                left: self.field.to_string(),
                right: t.field().to_string(),
            });
        }
        let n = t.rows();
        let id = Matrix::identity(self.field, n);
        let mut acc = Matrix::zeros(self.field, n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(t)?.add(&id.scale(c))?;
        }
        Ok(acc)
    }

    /// Horner evaluation of `f(T) v` without forming `f(T)`.
    pub(crate) fn apply(&self, t: &Matrix, v: &[Scalar]) -> Vec<Scalar> {
        let mut acc = vec![self.field.zero(); v.len()];
        for c in self.coeffs.iter().rev() {
            acc = t.mul_vec(&acc);
            for (a, b) in acc.iter_mut().zip(v) {
                *a = &*a + &(c * b);
            }
        }
        acc
    }

    /// Companion matrix: ones on the subdiagonal, last column `-a_0, ..., -a_{m-1}`.
    pub fn companion(&self) -> Result<Matrix> {
        let m = self.degree().ok_or(Error::ZeroPolynomial)?;
        if m == 0 {
            return Err(Error::DegreeZero);
        }
        if !self.is_monic() {
            return Err(Error::NotMonic);
        }
        let mut c = Matrix::zeros(self.field, m, m);
        for i in 1..m {
            c.set(i, i - 1, self.field.one());
        }
        for i in 0..m {
            c.set(i, m - 1, -&self.coeffs[i]);
        }
        Ok(c)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let text = c.to_string();
            let (neg, mag) = match text.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, text),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let mono = match i {
                0 => String::new(),
                1 => "x".into(),
                _ => format!("x^{i}"),
            };
            match (mag.as_str(), i) {
                (m, 0) => write!(f, "{m}")?,
                ("1", _) => write!(f, "{mono}")?,
                (m, _) => write!(f, "{m}*{mono}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} over {}", self.field)
    }
}
