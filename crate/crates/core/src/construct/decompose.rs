use crate::canonical::{block_form, BlockKind};
use crate::error::{Error, Result};
use crate::matrix::Matrix;

use super::assign::{distribute_zeros, HostAssignment};
use super::complement::{complement_for_invertible, complement_for_nilpotent};
use super::gadget::nilpotent_max_rank;

/// Evidence attached to a decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub rank_a: usize,
    /// Smallest `j` with `N^j = 0`.
    pub index_n: usize,
    /// `None` when no construction was needed (`A` invertible or `k = 1`).
    pub assignment: Option<HostAssignment>,
}

/// `A = U + N` with `U` invertible and `N^k = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub u: Matrix,
    pub n: Matrix,
    pub k: usize,
    pub certificate: Certificate,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Decomposed(Decomposition),
    /// `k * rank(A) < n`: no decomposition exists.
    Infeasible {
        rank: usize,
        n: usize,
        k: usize,
    },
}

impl Outcome {
    pub fn decomposition(&self) -> Option<&Decomposition> {
        match self {
            Outcome::Decomposed(d) => Some(d),
            Outcome::Infeasible { .. } => None,
        }
    }
}

fn require_square(a: &Matrix) -> Result<usize> {
    if a.is_square() {
        Ok(a.rows())
    } else {
        Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        })
    }
}

/// Whether `A = U + N` with `U` invertible and `N^k = 0` is possible: `k * rank(A) >= n`.
pub fn feasible(a: &Matrix, k: usize) -> Result<bool> {
    let n = require_square(a)?;
    Ok(k.saturating_mul(a.rank()) >= n)
}

/// Decomposes `A` as `U + N` with `U` invertible and `N^k = 0`, or reports
/// that no such decomposition exists.
///
/// `A` is brought to block form, every 1x1 zero block is assigned to a host
/// block, each host region receives a nilpotent complement making it
/// invertible, and `N` is minus the direct sum of complements, carried back to
/// the original basis. Every returned decomposition has been re-checked.
pub fn decompose(a: &Matrix, k: usize) -> Result<Outcome> {
    let n = require_square(a)?;
    if k == 0 {
        return Err(Error::IndexConstraintViolated("k must be positive".into()));
    }
    let field = a.field();
    let rank_a = a.rank();
    if k.saturating_mul(rank_a) < n {
        return Ok(Outcome::Infeasible { rank: rank_a, n, k });
    }
    if k == 1 || rank_a == n {
        let d = Decomposition {
            u: a.clone(),
            n: Matrix::zeros(field, n, n),
            k,
            certificate: Certificate {
                rank_a,
                index_n: 1,
                assignment: None,
            },
        };
        return Ok(Outcome::Decomposed(d));
    }

    let k_eff = k.min(n);
    let form = block_form(a)?;
    let assignment = distribute_zeros(&form.blocks, k_eff)
        .map_err(|e| Error::InternalVerificationFailed(format!("feasible input but distribution failed: {e}")))?;

    let mut offsets = Vec::with_capacity(form.blocks.len());
    let mut acc = 0;
    for b in &form.blocks {
        offsets.push(acc);
        acc += b.size();
    }
    let order: Vec<usize> = assignment
        .permutation
        .iter()
        .flat_map(|&pos| offsets[pos]..offsets[pos] + form.blocks[pos].size())
        .collect();
    let basis = form.transform.mul(&Matrix::permutation(field, &order)?)?;

    let mut complements = Matrix::zeros(field, n, n);
    let mut offset = 0;
    for host in &assignment.hosts {
        let z = host.zeros_assigned;
        let c = match host.block.kind() {
            BlockKind::InvertibleCompanion(q) => complement_for_invertible(q, z, k_eff)?,
            BlockKind::XPower(t) => complement_for_nilpotent(*t, z, k_eff, field)?,
            BlockKind::ZeroOne => unreachable!("zero blocks are never hosts"),
        };
        complements.embed(&c, offset);
        offset += host.block.size() + z;
    }

    // N = -(sum of complements) in canonical coordinates, so U = A - N adds them.
    let nil = basis.mul(&complements.neg())?.mul(&basis.inverse()?)?;
    let u = a.sub(&nil)?;
    let index_n = nil
        .nilpotency_index(k_eff)?
        .ok_or_else(|| Error::InternalVerificationFailed(format!("N^{k_eff} != 0")))?;
    if u.det()?.is_zero() {
        return Err(Error::InternalVerificationFailed("U is singular".into()));
    }
    if u.add(&nil)? != *a {
        return Err(Error::InternalVerificationFailed("U + N != A".into()));
    }
    let max_rank = nilpotent_max_rank(n, k);
    if nil.rank() > max_rank {
        return Err(Error::InternalVerificationFailed(format!("rank(N) exceeds {max_rank}")));
    }
    Ok(Outcome::Decomposed(Decomposition {
        u,
        n: nil,
        k,
        certificate: Certificate {
            rank_a,
            index_n,
            assignment: Some(assignment),
        },
    }))
}
