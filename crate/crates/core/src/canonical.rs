//! Frobenius (rational canonical) form with an explicit similarity transform,
//! and its refinement into the three block types the decomposition needs.
//!
//! The Frobenius form is computed by cyclic deflation: find a vector whose
//! order polynomial is the minimal polynomial of the operator, split off the
//! cyclic subspace it generates together with an invariant complement, and
//! recurse on the complement. Each invariant factor `f` is then written as
//! `x^m * g` with `g(0) != 0`, and the cyclic block of `f` is split into a
//! nilpotent part (companion of `x^m`) and an invertible part (companion of
//! `g`). No polynomial factorization is ever needed.
//!
//! Transforms follow one convention throughout: the columns of `P` are the new
//! basis vectors, so the canonical matrix is `P^-1 A P`.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::matrix::{null_space, solve, Matrix};
use crate::poly::Polynomial;

/// Invariant factors `f_1 | f_2 | ... | f_s` and a transform `P` with
/// `P^-1 A P = C(f_1) ⊕ ... ⊕ C(f_s)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusForm {
    pub factors: Vec<Polynomial>,
    pub transform: Matrix,
}

impl FrobeniusForm {
    /// The block diagonal of companion matrices of the invariant factors.
    pub fn realization(&self) -> Matrix {
        let blocks: Vec<Matrix> = self
            .factors
            .iter()
            .map(|f| f.companion().expect("invariant factors are monic of positive degree"))
            .collect();
        Matrix::block_diag(&blocks).expect("at least one invariant factor")
    }

    /// Product of the invariant factors, the characteristic polynomial.
    pub fn characteristic_polynomial(&self) -> Polynomial {
        let field = self.transform.field();
        self.factors
            .iter()
            .fold(Polynomial::one(field), |acc, f| acc.mul(f).expect("same field"))
    }
}

/// The three kinds of diagonal block.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BlockKind {
    /// `C(q)` with `q(0) != 0`.
    InvertibleCompanion(Polynomial),
    /// The 1x1 zero block, companion of `x`.
    ZeroOne,
    /// `C(x^m)` for `m >= 2`, a single nilpotent Jordan-type block.
    XPower(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BlockSpec {
    kind: BlockKind,
}

impl BlockSpec {
    pub fn invertible(q: Polynomial) -> Result<Self> {
        match q.degree() {
            None => return Err(Error::ZeroPolynomial),
            Some(0) => return Err(Error::DegreeZero),
            _ => {}
        }
        if !q.is_monic() {
            return Err(Error::NotMonic);
        }
        if q.constant_term().is_zero() {
            return Err(Error::IndexConstraintViolated(format!(
                "invertible block polynomial {q} vanishes at 0"
            )));
        }
        Ok(BlockSpec {
            kind: BlockKind::InvertibleCompanion(q),
        })
    }

    pub fn zero_one() -> Self {
        BlockSpec {
            kind: BlockKind::ZeroOne,
        }
    }

    /// Companion of `x^m`; `m = 1` yields the 1x1 zero block.
    pub fn x_power(m: usize) -> Result<Self> {
        match m {
            0 => Err(Error::DegreeZero),
            1 => Ok(Self::zero_one()),
            _ => Ok(BlockSpec {
                kind: BlockKind::XPower(m),
            }),
        }
    }

    pub fn kind(&self) -> &BlockKind {
        &self.kind
    }

    pub fn size(&self) -> usize {
        match &self.kind {
            BlockKind::InvertibleCompanion(q) => q.degree().unwrap_or(0),
            BlockKind::ZeroOne => 1,
            BlockKind::XPower(m) => *m,
        }
    }

    pub fn rank(&self) -> usize {
        match &self.kind {
            BlockKind::InvertibleCompanion(_) => self.size(),
            BlockKind::ZeroOne => 0,
            BlockKind::XPower(m) => m - 1,
        }
    }

    pub fn is_zero_one(&self) -> bool {
        matches!(self.kind, BlockKind::ZeroOne)
    }

    /// The block as a concrete matrix.
    pub fn realize(&self, field: FieldSpec) -> Matrix {
        match &self.kind {
            BlockKind::InvertibleCompanion(q) => q.companion().expect("validated at construction"),
            BlockKind::ZeroOne => Matrix::zeros(field, 1, 1),
            BlockKind::XPower(m) => Polynomial::x_power(field, *m).companion().expect("m >= 2"),
        }
    }
}

impl fmt::Display for BlockSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            BlockKind::InvertibleCompanion(q) => write!(f, "C({q})"),
            BlockKind::ZeroOne => write!(f, "(0)"),
            BlockKind::XPower(m) => write!(f, "C(x^{m})"),
        }
    }
}

/// Ordered blocks and a transform `P` with `P^-1 A P` equal to their direct sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockForm {
    pub blocks: Vec<BlockSpec>,
    pub transform: Matrix,
}

impl BlockForm {
    pub fn realization(&self) -> Matrix {
        let field = self.transform.field();
        let blocks: Vec<Matrix> = self.blocks.iter().map(|b| b.realize(field)).collect();
        Matrix::block_diag(&blocks).expect("at least one block")
    }

    pub fn size(&self) -> usize {
        self.blocks.iter().map(BlockSpec::size).sum()
    }

    pub fn rank(&self) -> usize {
        self.blocks.iter().map(BlockSpec::rank).sum()
    }

    /// Number of singular blocks (types (ii) and (iii)); equals the nullity.
    pub fn singular_block_count(&self) -> usize {
        self.blocks
            .iter()
            .filter(|b| !matches!(b.kind, BlockKind::InvertibleCompanion(_)))
            .count()
    }
}

/// Tracks a growing list of vectors in echelon form, remembering how each
/// reduced vector combines the inputs, so dependencies can be read off.
struct KrylovSpan {
    field: FieldSpec,
    reduced: Vec<(usize, Vec<Scalar>, Vec<Scalar>)>,
    inputs: usize,
}

impl KrylovSpan {
    fn new(field: FieldSpec) -> Self {
        KrylovSpan {
            field,
            reduced: Vec::new(),
            inputs: 0,
        }
    }

    /// Adds `v`. If it depends on the earlier inputs, returns `c` with
    /// `v = sum c_i input_i` and does not record it.
    fn push(&mut self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let k = self.inputs;
        let mut residual = v.to_vec();
        let mut comb = vec![self.field.zero(); k + 1];
        comb[k] = self.field.one();
        for (pivot, vec, vcomb) in &self.reduced {
            if residual[*pivot].is_zero() {
                continue;
            }
            let factor = &residual[*pivot] * &vec[*pivot].inv().expect("pivot is nonzero");
            for (r, x) in residual.iter_mut().zip(vec) {
                if !x.is_zero() {
                    *r = &*r - &(&factor * x);
                }
            }
            for (c, x) in comb.iter_mut().zip(vcomb) {
                if !x.is_zero() {
                    *c = &*c - &(&factor * x);
                }
            }
        }
        match residual.iter().position(|x| !x.is_zero()) {
            Some(pivot) => {
                self.reduced.push((pivot, residual, comb));
                self.inputs += 1;
                None
            }
            None => {
                comb.pop();
                Some(comb.into_iter().map(|c| -c).collect())
            }
        }
    }
}

/// Order polynomial of `v` under `t` and its Krylov chain `v, tv, ..., t^{d-1} v`.
fn krylov_order(t: &Matrix, v: &[Scalar]) -> (Polynomial, Vec<Vec<Scalar>>) {
    let field = t.field();
    let mut span = KrylovSpan::new(field);
    let mut chain: Vec<Vec<Scalar>> = Vec::new();
    let mut current = v.to_vec();
    loop {
        if let Some(c) = span.push(&current) {
            let mut coeffs: Vec<Scalar> = c.into_iter().map(|x| -x).collect();
            coeffs.push(field.one());
            let order = Polynomial::new(field, coeffs).expect("same field");
            return (order, chain);
        }
        let next = t.mul_vec(&current);
        chain.push(current);
        current = next;
    }
}

/// Splits `lcm(a, b)` as `a' * b'` with `a' | a`, `b' | b` and `gcd(a', b') = 1`,
/// moving shared factors to whichever side has the higher multiplicity.
fn coprime_lcm_split(a: &Polynomial, b: &Polynomial) -> (Polynomial, Polynomial) {
    let g = a.gcd(b).expect("same field");
    let mut left = a.clone();
    let mut right = b.div_exact(&g);
    loop {
        let h = left.gcd(&right).expect("same field");
        if h.degree() == Some(0) {
            return (left, right);
        }
        left = left.div_exact(&h);
        right = right.mul(&h).expect("same field");
    }
}

fn unit_vector(field: FieldSpec, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![field.zero(); n];
    v[i] = field.one();
    v
}

/// A vector whose order is the minimal polynomial of `t`, with that order.
fn maximal_vector(t: &Matrix) -> (Vec<Scalar>, Polynomial) {
    let field = t.field();
    let n = t.rows();
    let mut v = unit_vector(field, n, 0);
    let (mut order, _) = krylov_order(t, &v);
    for j in 1..n {
        if order.degree() == Some(n) {
            break;
        }
        let e = unit_vector(field, n, j);
        let (ord_e, _) = krylov_order(t, &e);
        if ord_e.divides(&order).expect("same field") {
            continue;
        }
        let (left, right) = coprime_lcm_split(&order, &ord_e);
        let u1 = order.div_exact(&left).apply(t, &v);
        let u2 = ord_e.div_exact(&right).apply(t, &e);
        v = u1.iter().zip(&u2).map(|(a, b)| a + b).collect();
        order = left.mul(&right).expect("same field");
        debug_assert_eq!(krylov_order(t, &v).0, order);
    }
    (v, order)
}

/// Cyclic decomposition of `t`: (order, chain) pairs, largest order first,
/// whose chains together form a basis.
fn cyclic_decomposition(t: &Matrix) -> Vec<(Polynomial, Vec<Vec<Scalar>>)> {
    let field = t.field();
    let n = t.rows();
    let (v, order) = maximal_vector(t);
    let (_, chain) = krylov_order(t, &v);
    let d = chain.len();
    if d == n {
        return vec![(order, chain)];
    }

    // A functional vanishing on v, ..., t^{d-2} v and equal to 1 on t^{d-1} v.
    // The common kernel of lambda, lambda t, ..., lambda t^{d-1} is a
    // t-invariant complement of the cyclic subspace.
    let krylov = Matrix::from_columns(field, &chain).expect("nonempty chain");
    let target = unit_vector(field, d, d - 1);
    let lambda = solve(&krylov.transpose(), &target).expect("chain is linearly independent");
    let t_transposed = t.transpose();
    let mut constraint_rows = vec![lambda];
    for i in 1..d {
        let next = t_transposed.mul_vec(&constraint_rows[i - 1]);
        constraint_rows.push(next);
    }
    let constraints = Matrix::from_columns(field, &constraint_rows)
        .expect("rows of equal length")
        .transpose();
    let complement = null_space(&constraints);
    debug_assert_eq!(complement.len(), n - d);
    let basis = Matrix::from_columns(field, &complement).expect("complement is nonempty");

    let restricted_columns: Vec<Vec<Scalar>> = complement
        .iter()
        .map(|w| solve(&basis, &t.mul_vec(w)).expect("complement is t-invariant"))
        .collect();
    let restricted = Matrix::from_columns(field, &restricted_columns).expect("square");

    let mut out = vec![(order, chain)];
    for (ord, sub_chain) in cyclic_decomposition(&restricted) {
        let lifted = sub_chain.iter().map(|u| basis.mul_vec(u)).collect();
        out.push((ord, lifted));
    }
    out
}

/// Frobenius normal form with transform. Returns the invariant factors in
/// divisibility order `f_1 | ... | f_s`.
pub fn frobenius_form(a: &Matrix) -> Result<FrobeniusForm> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let mut parts = cyclic_decomposition(a);
    parts.reverse();
    let mut factors = Vec::with_capacity(parts.len());
    let mut columns = Vec::with_capacity(a.rows());
    for (f, chain) in parts {
        factors.push(f);
        columns.extend(chain);
    }
    let transform = Matrix::from_columns(a.field(), &columns)?;
    let form = FrobeniusForm { factors, transform };
    if a.conjugate(&form.transform)? != form.realization() {
        return Err(Error::InternalVerificationFailed(
            "Frobenius transform does not conjugate to the companion blocks".into(),
        ));
    }
    if form.factors.windows(2).any(|w| !w[0].divides(&w[1]).unwrap_or(false)) {
        return Err(Error::InternalVerificationFailed(
            "invariant factors do not form a divisibility chain".into(),
        ));
    }
    Ok(form)
}

/// Splits the companion block of `f = x^m g` (with `g(0) != 0`) into the
/// companion of `x^m` followed by the companion of `g`.
///
/// Returns the blocks and `Q` with `Q^-1 C(f) Q` equal to their direct sum.
/// With `T = C(f)` and `v = e_1`, the columns of `Q` are the Krylov chain of
/// `g(T) v` (order `x^m`) followed by the chain of `T^m v` (order `g`).
pub fn coprime_split_block(f: &Polynomial) -> Result<(Vec<BlockSpec>, Matrix)> {
    let t = f.companion()?;
    let field = f.field();
    let n = t.rows();
    let (m, g) = f.strip_x_power()?;
    let g_degree = g.degree().expect("nonzero");
    if m == 0 {
        return Ok((vec![BlockSpec::invertible(f.clone())?], Matrix::identity(field, n)));
    }
    if g_degree == 0 {
        return Ok((vec![BlockSpec::x_power(m)?], Matrix::identity(field, n)));
    }
    let e1 = unit_vector(field, n, 0);
    let mut columns = Vec::with_capacity(n);
    let mut v = g.apply(&t, &e1);
    for _ in 0..m {
        let next = t.mul_vec(&v);
        columns.push(v);
        v = next;
    }
    let mut v = Polynomial::x_power(field, m).apply(&t, &e1);
    for _ in 0..g_degree {
        let next = t.mul_vec(&v);
        columns.push(v);
        v = next;
    }
    let q = Matrix::from_columns(field, &columns)?;
    Ok((vec![BlockSpec::x_power(m)?, BlockSpec::invertible(g)?], q))
}

/// Reads `a` as a direct sum of type (i)/(ii)/(iii) companion blocks, if it is one.
///
/// Block extents follow the runs of ones on the subdiagonal; the polynomial of
/// each block is read off its last column.
fn parse_block_diagonal(a: &Matrix) -> Option<Vec<BlockSpec>> {
    let n = a.rows();
    let field = a.field();
    let mut blocks = Vec::new();
    let mut offset = 0;
    while offset < n {
        let mut size = 1;
        while offset + size < n && a.get(offset + size, offset + size - 1).is_one() {
            size += 1;
        }
        let last = offset + size - 1;
        let mut coeffs: Vec<Scalar> = (offset..=last).map(|i| -a.get(i, last)).collect();
        coeffs.push(field.one());
        let f = Polynomial::new(field, coeffs).ok()?;
        let (m, g) = f.strip_x_power().ok()?;
        blocks.push(match (m, g.degree()) {
            (0, _) => BlockSpec::invertible(f).ok()?,
            (m, Some(0)) => BlockSpec::x_power(m).ok()?,
            _ => return None,
        });
        offset += size;
    }
    let realized: Vec<Matrix> = blocks.iter().map(|b| b.realize(field)).collect();
    (Matrix::block_diag(&realized).ok()? == *a).then_some(blocks)
}

/// Similarity to a direct sum of type (i), (ii) and (iii) blocks.
///
/// An input that already is such a direct sum is returned as is, with the
/// identity transform. Otherwise blocks come in invariant-factor order and,
/// within one factor, the nilpotent part precedes the invertible part. The
/// result is re-verified before returning.
pub fn block_form(a: &Matrix) -> Result<BlockForm> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let form = match parse_block_diagonal(a) {
        Some(blocks) => BlockForm {
            blocks,
            transform: Matrix::identity(a.field(), a.rows()),
        },
        None => {
            let frob = frobenius_form(a)?;
            let mut blocks = Vec::new();
            let mut local = Vec::new();
            for f in &frob.factors {
                let (b, q) = coprime_split_block(f)?;
                blocks.extend(b);
                local.push(q);
            }
            let transform = frob.transform.mul(&Matrix::block_diag(&local)?)?;
            BlockForm { blocks, transform }
        }
    };

    let conjugated = a
        .conjugate(&form.transform)
        .map_err(|e| Error::InternalVerificationFailed(format!("block transform not invertible: {e}")))?;
    if conjugated != form.realization() {
        return Err(Error::InternalVerificationFailed(
            "block transform does not conjugate to the realized blocks".into(),
        ));
    }
    if form.rank() != a.rank() {
        return Err(Error::InternalVerificationFailed(format!(
            "block ranks sum to {}, matrix rank is {}",
            form.rank(),
            a.rank()
        )));
    }
    Ok(form)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    #[test]
    fn companion_input_is_its_own_form() {
        let f = Polynomial::from_i64(q(), &[-1, -1, 1]);
        let form = frobenius_form(&f.companion().unwrap()).unwrap();
        assert_eq!(form.factors, vec![f]);
        assert_eq!(form.transform, Matrix::identity(q(), 2));
    }

    #[test]
    fn identity_has_two_linear_factors() {
        let form = frobenius_form(&Matrix::identity(q(), 2)).unwrap();
        let f = Polynomial::from_i64(q(), &[-1, 1]);
        assert_eq!(form.factors, vec![f.clone(), f]);
    }

    #[test]
    fn distinct_eigenvalues_give_one_factor() {
        let f5 = FieldSpec::prime(5).unwrap();
        let a = Matrix::from_i64_rows(f5, &[[1, 0], [0, 2]]).unwrap();
        let form = frobenius_form(&a).unwrap();
        assert_eq!(form.factors, vec![Polynomial::from_i64(f5, &[2, 2, 1])]);
    }

    #[test]
    fn lcm_split_moves_factors_to_higher_multiplicity() {
        // a = x^2 (x+1), b = x (x+1)^3 -> a' = x^2, b' = (x+1)^3
        let a = Polynomial::from_i64(q(), &[0, 0, 1, 1]);
        let b = Polynomial::from_i64(q(), &[0, 1, 3, 3, 1]);
        let (l, r) = coprime_lcm_split(&a, &b);
        assert_eq!(l, Polynomial::from_i64(q(), &[0, 0, 1]));
        assert_eq!(r, Polynomial::from_i64(q(), &[1, 3, 3, 1]));
    }

    #[test]
    fn maximal_vector_needs_combination() {
        // diag(1, 2): e_1 has order x-1, e_2 has order x-2.
        let a = Matrix::from_i64_rows(q(), &[[1, 0], [0, 2]]).unwrap();
        let (_, order) = maximal_vector(&a);
        assert_eq!(order, Polynomial::from_i64(q(), &[2, -3, 1]));
    }

    #[test]
    fn split_of_x_squared_plus_x() {
        let f = Polynomial::from_i64(q(), &[0, 1, 1]);
        let (blocks, qm) = coprime_split_block(&f).unwrap();
        assert_eq!(
            blocks,
            vec![
                BlockSpec::zero_one(),
                BlockSpec::invertible(Polynomial::from_i64(q(), &[1, 1])).unwrap()
            ]
        );
        assert_eq!(qm, Matrix::from_i64_rows(q(), &[[1, 0], [1, 1]]).unwrap());
    }

    #[test]
    fn split_trivial_cases() {
        let f = Polynomial::from_i64(q(), &[-1, -1, 1]);
        let (blocks, qm) = coprime_split_block(&f).unwrap();
        assert_eq!(blocks, vec![BlockSpec::invertible(f).unwrap()]);
        assert_eq!(qm, Matrix::identity(q(), 2));
        let (blocks, qm) = coprime_split_block(&Polynomial::x_power(q(), 3)).unwrap();
        assert_eq!(blocks, vec![BlockSpec::x_power(3).unwrap()]);
        assert_eq!(qm, Matrix::identity(q(), 3));
        assert_eq!(
            coprime_split_block(&Polynomial::from_i64(q(), &[0, 2])),
            Err(Error::NotMonic)
        );
    }

    #[test]
    fn block_form_of_companion_with_root_zero() {
        let a = Polynomial::from_i64(q(), &[0, 1, 1]).companion().unwrap();
        let form = block_form(&a).unwrap();
        assert_eq!(
            form.blocks,
            vec![
                BlockSpec::zero_one(),
                BlockSpec::invertible(Polynomial::from_i64(q(), &[1, 1])).unwrap()
            ]
        );
    }

    #[test]
    fn block_diagonal_inputs_are_recognized() {
        let mut blocks = vec![Polynomial::from_i64(q(), &[-1, -1, 1]).companion().unwrap()];
        blocks.extend(std::iter::repeat_n(Matrix::zeros(q(), 1, 1), 7));
        let b = Matrix::block_diag(&blocks).unwrap();
        let form = block_form(&b).unwrap();
        let mut expected = vec![BlockSpec::invertible(Polynomial::from_i64(q(), &[-1, -1, 1])).unwrap()];
        expected.extend(std::iter::repeat_n(BlockSpec::zero_one(), 7));
        assert_eq!(form.blocks, expected);
        assert_eq!(form.transform, Matrix::identity(q(), 9));

        // C(x^2 + x) is a companion block but not one of the three types.
        assert!(parse_block_diagonal(&Polynomial::from_i64(q(), &[0, 1, 1]).companion().unwrap()).is_none());
        // A stray off-block entry disqualifies the fast path.
        let mut c = Matrix::zeros(q(), 3, 3);
        c.set(0, 2, q().one());
        assert!(parse_block_diagonal(&c).is_none());
    }

    #[test]
    fn block_spec_validation() {
        assert!(BlockSpec::invertible(Polynomial::from_i64(q(), &[0, 1])).is_err());
        assert_eq!(BlockSpec::x_power(1).unwrap(), BlockSpec::zero_one());
        assert_eq!(BlockSpec::x_power(0), Err(Error::DegreeZero));
        assert_eq!(BlockSpec::x_power(4).unwrap().rank(), 3);
    }

    #[test]
    fn nilpotent_and_zero_inputs() {
        let z = Matrix::zeros(q(), 3, 3);
        let form = block_form(&z).unwrap();
        assert_eq!(form.blocks, vec![BlockSpec::zero_one(); 3]);
        let mut j = Matrix::zeros(q(), 4, 4);
        j.set(1, 0, q().one());
        j.set(2, 1, q().one());
        let form = block_form(&j).unwrap();
        assert_eq!(form.singular_block_count(), 2);
        assert_eq!(form.rank(), 2);
    }
}
