//! Exact scalars over a prime field `F_p` or the rationals.
//!
//! A [`Scalar`] always knows which field it belongs to. Arithmetic between
//! scalars of different fields is an error for the checked `try_*` methods and
//! a panic for the operator impls, which are meant for code that has already
//! established field agreement (every entry of a [`crate::Matrix`] shares the
//! matrix's field).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest supported modulus (exclusive). Keeps every product below 2^62.
pub const MAX_MODULUS: u64 = 1 << 31;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Kind {
    Prime(u32),
    Rationals,
}

/// The field a scalar, matrix or polynomial lives in.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldSpec(Kind);

impl FieldSpec {
    /// The prime field `F_p`. Rejects composite `p` and `p` outside `2..2^31`.
    pub fn prime(p: u64) -> Result<Self> {
        if !(2..MAX_MODULUS).contains(&p) {
            return Err(Error::ModulusOutOfRange(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldSpec(Kind::Prime(p as u32)))
    }

    pub fn rationals() -> Self {
        FieldSpec(Kind::Rationals)
    }

    /// The modulus for `F_p`, `None` for the rationals.
    pub fn modulus(&self) -> Option<u32> {
        match self.0 {
            Kind::Prime(p) => Some(p),
            Kind::Rationals => None,
        }
    }

    pub fn is_rationals(&self) -> bool {
        matches!(self.0, Kind::Rationals)
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    /// Image of an integer under the canonical ring map `Z -> F`.
    pub fn from_i64(&self, v: i64) -> Scalar {
        match self.0 {
            Kind::Prime(p) => Scalar::residue(v.rem_euclid(p as i64) as u32, p),
            Kind::Rationals => Scalar(Repr::Rational(BigRational::from_integer(BigInt::from(v)))),
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> Scalar {
        match self.0 {
            Kind::Prime(p) => {
                let r = v.mod_floor(&BigInt::from(p));
                Scalar::residue(r.to_u32().expect("reduced residue fits in u32"), p)
            }
            Kind::Rationals => Scalar(Repr::Rational(BigRational::from_integer(v.clone()))),
        }
    }

    /// `num / den` in this field. In `F_p` this is `num * den^-1`.
    pub fn from_ratio(&self, num: i64, den: i64) -> Result<Scalar> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        match self.0 {
            Kind::Prime(_) => self.from_i64(num).try_mul(&self.from_i64(den).inv()?),
            Kind::Rationals => Ok(Scalar(Repr::Rational(BigRational::new(num.into(), den.into())))),
        }
    }

    /// Parses a textual entry: a decimal integer in `F_p` (reduced into
    /// `[0, p)`), an integer or `num/den` over the rationals.
    pub fn parse_scalar(&self, text: &str) -> Result<Scalar> {
        let out_of_field = || Error::EntryOutOfField {
            entry: text.to_string(),
            field: self.to_string(),
        };
        let parse_int = |s: &str| -> Result<BigInt> {
            let s = s.trim();
            let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(out_of_field());
            }
            s.parse::<BigInt>().map_err(|_| out_of_field())
        };
        match self.0 {
            Kind::Prime(_) => Ok(self.from_bigint(&parse_int(text)?)),
            Kind::Rationals => match text.split_once('/') {
                None => Ok(self.from_bigint(&parse_int(text)?)),
                Some((n, d)) => {
                    let n = parse_int(n)?;
                    let d = parse_int(d)?;
                    if d.is_zero() {
                        return Err(out_of_field());
                    }
                    Ok(Scalar(Repr::Rational(BigRational::new(n, d))))
                }
            },
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Kind::Prime(p) => write!(f, "F_{p}"),
            Kind::Rationals => write!(f, "Q"),
        }
    }
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Trial division; `p < 2^31` so this is at most ~46k divisions.
pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut d = 3;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Residue { value: u32, modulus: u32 },
    Rational(BigRational),
}

/// An exact field element tagged with its field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar(Repr);

impl Scalar {
    fn residue(value: u32, modulus: u32) -> Self {
        debug_assert!(value < modulus);
        Scalar(Repr::Residue { value, modulus })
    }

    pub fn field(&self) -> FieldSpec {
        match self.0 {
            Repr::Residue { modulus, .. } => FieldSpec(Kind::Prime(modulus)),
            Repr::Rational(_) => FieldSpec(Kind::Rationals),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Residue { value, .. } => *value == 0,
            Repr::Rational(q) => q.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.0 {
            Repr::Residue { value, .. } => *value == 1,
            Repr::Rational(q) => q.is_one(),
        }
    }

    /// The residue in `[0, p)` for prime-field scalars.
    pub fn residue_value(&self) -> Option<u32> {
        match self.0 {
            Repr::Residue { value, .. } => Some(value),
            Repr::Rational(_) => None,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.0 {
            Repr::Rational(q) => Some(q),
            Repr::Residue { .. } => None,
        }
    }

    fn check_same(&self, other: &Scalar) -> Result<()> {
        if self.field() == other.field() {
            Ok(())
        } else {
            Err(Error::MixedFields {
                left: self.field().to_string(),
                right: other.field().to_string(),
            })
        }
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar> {
        self.check_same(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.check_same(other)?;
        Ok(self.sub_unchecked(other))
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.check_same(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub fn try_div(&self, other: &Scalar) -> Result<Scalar> {
        self.check_same(other)?;
        Ok(self.mul_unchecked(&other.inv()?))
    }

    /// Multiplicative inverse.
    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match &self.0 {
            Repr::Residue { value, modulus } => Scalar::residue(inv_mod(*value, *modulus), *modulus),
            Repr::Rational(q) => Scalar(Repr::Rational(q.recip())),
        })
    }

    fn add_unchecked(&self, other: &Scalar) -> Scalar {
        match (&self.0, &other.0) {
            (Repr::Residue { value: a, modulus }, Repr::Residue { value: b, .. }) => {
                let s = (*a as u64 + *b as u64) % *modulus as u64;
                Scalar::residue(s as u32, *modulus)
            }
            (Repr::Rational(a), Repr::Rational(b)) => Scalar(Repr::Rational(a + b)),
            _ => unreachable!("field agreement checked by caller"),
        }
    }

    fn sub_unchecked(&self, other: &Scalar) -> Scalar {
        match (&self.0, &other.0) {
            (Repr::Residue { value: a, modulus }, Repr::Residue { value: b, .. }) => {
                let m = *modulus as u64;
                let s = (*a as u64 + m - *b as u64) % m;
                Scalar::residue(s as u32, *modulus)
            }
            (Repr::Rational(a), Repr::Rational(b)) => Scalar(Repr::Rational(a - b)),
            _ => unreachable!("field agreement checked by caller"),
        }
    }

    fn mul_unchecked(&self, other: &Scalar) -> Scalar {
        match (&self.0, &other.0) {
            (Repr::Residue { value: a, modulus }, Repr::Residue { value: b, .. }) => {
                let s = (*a as u64 * *b as u64) % *modulus as u64;
                Scalar::residue(s as u32, *modulus)
            }
            (Repr::Rational(a), Repr::Rational(b)) => Scalar(Repr::Rational(a * b)),
            _ => unreachable!("field agreement checked by caller"),
        }
    }

    fn assert_same(&self, other: &Scalar) {
        if let Err(e) = self.check_same(other) {
            panic!("{e}");
        }
    }
}

fn inv_mod(a: u32, p: u32) -> u32 {
    let (mut r0, mut r1) = (p as i64, a as i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1);
    t0.rem_euclid(p as i64) as u32
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match &self.0 {
            Repr::Residue { value, modulus } => Scalar::residue((modulus - value) % modulus, *modulus),
            Repr::Rational(q) => Scalar(Repr::Rational(-q)),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            /// Panics if the operands live in different fields.
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.assert_same(rhs);
                self.$inner(rhs)
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, add_unchecked);
binop!(Sub, sub, sub_unchecked);
binop!(Mul, mul, mul_unchecked);

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Residue { value, .. } => write!(f, "{value}"),
            Repr::Rational(q) if q.is_integer() => write!(f, "{}", q.numer()),
            Repr::Rational(q) => write!(f, "{}/{}", q.numer(), q.denom()),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// True if a rational scalar is in lowest terms with positive denominator.
/// Prime-field scalars are always canonical.
pub fn is_canonical(s: &Scalar) -> bool {
    match &s.0 {
        Repr::Residue { value, modulus } => value < modulus,
        Repr::Rational(q) => q.denom().is_positive() && q.numer().gcd(q.denom()).is_one(),
    }
}
