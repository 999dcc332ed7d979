//! The rank-`(k-1)` nilpotent building block `N_{r,s,k}`.
//!
//! Indices `r`, `s` are one-based, matching the usual `e_{ij}` notation for
//! matrix units, so `N_{1,3,5}` is `special_nilpotent(9, 1, 3, 5, f)` for a
//! 9x9 matrix.

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::matrix::Matrix;

/// Parameters `(r, s, k)` of one `N_{r,s,k}` gadget, one-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GadgetIndex {
    pub r: usize,
    pub s: usize,
    pub k: usize,
}

impl GadgetIndex {
    pub fn new(r: usize, s: usize, k: usize) -> Self {
        GadgetIndex { r, s, k }
    }

    /// Checks `2 <= k <= n`, `1 <= r < s <= n` and `s + k - 2 <= n`.
    pub fn validate(&self, n: usize) -> Result<()> {
        let GadgetIndex { r, s, k } = *self;
        if !(2 <= k && k <= n && 1 <= r && r < s && s <= n && s + k - 2 <= n) {
            return Err(Error::IndexConstraintViolated(format!(
                "N_{{{r},{s},{k}}} does not fit in a {n}x{n} matrix"
            )));
        }
        Ok(())
    }

    /// Last row/column the gadget touches (one-based).
    pub fn last(&self) -> usize {
        self.s + self.k - 2
    }

    /// The rows/columns the gadget is supported on: `{r} ∪ {s, ..., s+k-2}` (one-based).
    pub fn support(&self) -> impl Iterator<Item = usize> {
        std::iter::once(self.r).chain(self.s..=self.last())
    }

    pub fn build(&self, n: usize, field: FieldSpec) -> Result<Matrix> {
        special_nilpotent(n, self.r, self.s, self.k, field)
    }
}

/// `N_{r,s,k} = e_{r,r} + e_{s,r} - e_{r,s+k-2} - Σ_{i=0}^{k-2} e_{s,s+i} + Σ_{i=0}^{k-3} e_{s+i+1,s+i}`.
pub fn special_nilpotent(n: usize, r: usize, s: usize, k: usize, field: FieldSpec) -> Result<Matrix> {
    GadgetIndex::new(r, s, k).validate(n)?;
    let one = field.one();
    let minus_one = -&one;
    let mut m = Matrix::zeros(field, n, n);
    // Zero-based from here on.
    let (r, s) = (r - 1, s - 1);
    m.set(r, r, one.clone());
    m.set(s, r, one.clone());
    m.set(r, s + k - 2, minus_one.clone());
    for i in 0..=k - 2 {
        m.set(s, s + i, minus_one.clone());
    }
    for i in 0..k.saturating_sub(2) {
        m.set(s + i + 1, s + i, one.clone());
    }
    Ok(m)
}

/// Change of basis `Q` taking the single nilpotent Jordan block
/// `Σ_{i=1}^{k-1} e_{i+1,i}` to `N_{r,s,k}`, i.e. `Q^-1 J Q = N_{r,s,k}`.
///
/// Column `r` is `e_1`, column `s + i` is `e_{i+2} - e_1` for `i = 0..=k-2`,
/// and the remaining columns are `e_{k+1}, ..., e_n` in order.
pub fn lemma_basis_matrix(n: usize, r: usize, s: usize, k: usize, field: FieldSpec) -> Result<Matrix> {
    let idx = GadgetIndex::new(r, s, k);
    idx.validate(n)?;
    let mut q = Matrix::zeros(field, n, n);
    let one = field.one();
    q.set(0, r - 1, one.clone());
    for i in 0..=k - 2 {
        let col = s - 1 + i;
        q.set(i + 1, col, one.clone());
        q.set(0, col, -&one);
    }
    let used: Vec<usize> = idx.support().collect();
    let free_slots = (1..=n).filter(|c| !used.contains(c));
    for (slot, row) in free_slots.zip(k..n) {
        q.set(row, slot - 1, one.clone());
    }
    Ok(q)
}

/// The single nilpotent Jordan-type block of size `k` in the top-left corner of an `n x n` matrix.
pub fn shift_block(n: usize, k: usize, field: FieldSpec) -> Matrix {
    let mut m = Matrix::zeros(field, n, n);
    for i in 1..k.min(n) {
        m.set(i, i - 1, field.one());
    }
    m
}

/// Largest rank of an `n x n` matrix `N` with `N^k = 0`: `n - ceil(n/k)`.
pub fn nilpotent_max_rank(n: usize, k: usize) -> usize {
    assert!(k >= 1, "nilpotence bound must be positive");
    n - n.div_ceil(k)
}
