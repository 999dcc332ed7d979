use crate::canonical::{BlockKind, BlockSpec};
use crate::error::{Error, Result};

use super::complement::{invertible_capacity, nilpotent_capacity};

/// A non-zero block together with the 1x1 zero blocks placed after it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Host {
    pub block: BlockSpec,
    /// Position of the host in the input block list.
    pub position: usize,
    pub zeros_assigned: usize,
}

/// Which zero blocks go with which host, and the block reordering that
/// places each host directly in front of its zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HostAssignment {
    pub hosts: Vec<Host>,
    /// New order of the input block positions.
    pub permutation: Vec<usize>,
}

/// Zero blocks `block` can host under nilpotence bound `k`.
pub fn host_capacity(block: &BlockSpec, k: usize) -> usize {
    match block.kind() {
        BlockKind::InvertibleCompanion(_) => invertible_capacity(block.size(), k),
        BlockKind::XPower(t) => nilpotent_capacity(*t, k),
        BlockKind::ZeroOne => 0,
    }
}

/// Greedy assignment: invertible hosts first, then `C(x^m)` hosts, each in
/// input order, each filled to capacity before moving on.
pub fn distribute_zeros(blocks: &[BlockSpec], k: usize) -> Result<HostAssignment> {
    if k < 2 {
        return Err(Error::IndexConstraintViolated(format!(
            "zero distribution needs k >= 2, got {k}"
        )));
    }
    let zero_positions: Vec<usize> = (0..blocks.len()).filter(|&i| blocks[i].is_zero_one()).collect();
    let host_positions: Vec<usize> = (0..blocks.len())
        .filter(|&i| matches!(blocks[i].kind(), BlockKind::InvertibleCompanion(_)))
        .chain((0..blocks.len()).filter(|&i| matches!(blocks[i].kind(), BlockKind::XPower(_))))
        .collect();
    let capacity: usize = host_positions.iter().map(|&i| host_capacity(&blocks[i], k)).sum();
    if capacity < zero_positions.len() {
        return Err(Error::DistributionImpossible {
            zeros: zero_positions.len(),
            capacity,
        });
    }

    let mut remaining = zero_positions.iter().copied();
    let mut left = zero_positions.len();
    let mut hosts = Vec::with_capacity(host_positions.len());
    let mut permutation = Vec::with_capacity(blocks.len());
    for &pos in &host_positions {
        let take = host_capacity(&blocks[pos], k).min(left);
        left -= take;
        permutation.push(pos);
        permutation.extend(remaining.by_ref().take(take));
        hosts.push(Host {
            block: blocks[pos].clone(),
            position: pos,
            zeros_assigned: take,
        });
    }
    debug_assert_eq!(left, 0);
    debug_assert_eq!(permutation.len(), blocks.len());
    Ok(HostAssignment { hosts, permutation })
}
