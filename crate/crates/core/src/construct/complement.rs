//! Nilpotent complements that make a single host block plus trailing zero
//! blocks invertible.
//!
//! A host of size `t` followed by `z` zero 1x1 blocks occupies a
//! `(t+z) x (t+z)` principal region. The complement is a sum of pairwise
//! orthogonal gadgets `N_{r,s,j}` with `j <= k`, chosen so that host plus
//! complement has nonzero determinant.

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::matrix::Matrix;
use crate::poly::Polynomial;

use super::gadget::{shift_block, GadgetIndex};

/// Zero blocks an invertible companion host of size `t` can absorb.
pub fn invertible_capacity(t: usize, k: usize) -> usize {
    t * k.saturating_sub(1)
}

/// Zero blocks a `C(x^t)` host can absorb: `t(k-1) - k`, which equals
/// `k - 2 + (t-2)(k-1)`.
pub fn nilpotent_capacity(t: usize, k: usize) -> usize {
    (t * k.saturating_sub(1)).saturating_sub(k)
}

/// Gadget layout for an invertible host of size `t` with `z = c(k-1) + d` zeros:
/// `N_{i, t+1+(i-1)(k-1), k}` for `i = 1..=c`, then `N_{c+1, t+1+c(k-1), d+1}` if `d > 0`.
pub fn invertible_gadgets(t: usize, z: usize, k: usize) -> Result<Vec<GadgetIndex>> {
    let capacity = invertible_capacity(t, k);
    if z > capacity {
        return Err(Error::CapacityExceeded { zeros: z, capacity });
    }
    if z == 0 {
        return Ok(Vec::new());
    }
    let (c, d) = (z / (k - 1), z % (k - 1));
    let mut out: Vec<GadgetIndex> = (1..=c)
        .map(|i| GadgetIndex::new(i, t + 1 + (i - 1) * (k - 1), k))
        .collect();
    if d > 0 {
        out.push(GadgetIndex::new(c + 1, t + 1 + c * (k - 1), d + 1));
    }
    Ok(out)
}

/// Gadget layout for a `C(x^t)` host with `z` zeros.
///
/// If `z < k - 2` a single `N_{1,t,z+2}` suffices. Otherwise, writing
/// `z - k + 2 = c(k-1) + d`: `N_{1,t,k}`, then `N_{i, t+(i-1)(k-1), k}` for
/// `i = 2..=c+1`, then `N_{c+2, t+(c+1)(k-1), d+1}` if `d > 0`.
pub fn nilpotent_gadgets(t: usize, z: usize, k: usize) -> Result<Vec<GadgetIndex>> {
    if t < 2 || k < 2 {
        return Err(Error::IndexConstraintViolated(format!(
            "nilpotent host needs t >= 2 and k >= 2 (t={t}, k={k})"
        )));
    }
    let capacity = nilpotent_capacity(t, k);
    if z > capacity {
        return Err(Error::CapacityExceeded { zeros: z, capacity });
    }
    if z < k - 2 {
        return Ok(vec![GadgetIndex::new(1, t, z + 2)]);
    }
    let rest = z + 2 - k;
    let (c, d) = (rest / (k - 1), rest % (k - 1));
    let mut out: Vec<GadgetIndex> = (1..=c + 1)
        .map(|i| GadgetIndex::new(i, t + (i - 1) * (k - 1), k))
        .collect();
    if d > 0 {
        out.push(GadgetIndex::new(c + 2, t + (c + 1) * (k - 1), d + 1));
    }
    Ok(out)
}

fn sum_gadgets(gadgets: &[GadgetIndex], n: usize, field: FieldSpec) -> Result<Matrix> {
    gadgets
        .iter()
        .try_fold(Matrix::zeros(field, n, n), |acc, g| acc.add(&g.build(n, field)?))
}

/// Checks `N^k = 0` and `det(host + N) != 0`.
fn certify(host: &Matrix, complement: &Matrix, k: usize) -> Result<()> {
    if complement.nilpotency_index(k.max(1))?.is_none() {
        return Err(Error::InternalVerificationFailed(format!(
            "complement is not nilpotent of index <= {k}"
        )));
    }
    if host.add(complement)?.det()?.is_zero() {
        return Err(Error::InternalVerificationFailed(
            "host plus complement is singular".into(),
        ));
    }
    Ok(())
}

/// Complement `N_B` for `B = C(q) ⊕ 0_z`: `N_B^k = 0` and `B + N_B` invertible.
pub fn complement_for_invertible(q: &Polynomial, z: usize, k: usize) -> Result<Matrix> {
    let t = q.degree().ok_or(Error::ZeroPolynomial)?;
    let companion = q.companion()?;
    if q.constant_term().is_zero() {
        return Err(Error::IndexConstraintViolated(format!("{q} vanishes at 0")));
    }
    if k == 0 {
        return Err(Error::IndexConstraintViolated("k must be positive".into()));
    }
    let field = q.field();
    let n = t + z;
    let gadgets = invertible_gadgets(t, z, k)?;
    let complement = sum_gadgets(&gadgets, n, field)?;
    let mut host = Matrix::zeros(field, n, n);
    host.embed(&companion, 0);
    certify(&host, &complement, k)?;
    Ok(complement)
}

/// Complement `N_C` for `C = C(x^t) ⊕ 0_z`: `N_C^k = 0` and `C + N_C` invertible.
pub fn complement_for_nilpotent(t: usize, z: usize, k: usize, field: FieldSpec) -> Result<Matrix> {
    let gadgets = nilpotent_gadgets(t, z, k)?;
    let n = t + z;
    let complement = sum_gadgets(&gadgets, n, field)?;
    certify(&shift_block(n, t, field), &complement, k)?;
    Ok(complement)
}
