//! Explicit construction of `A = U + N` with `N^k = 0`.
//!
//! [`gadget`] builds the nilpotent gadgets `N_{r,s,k}`, [`complement`] sums
//! them into a complement for a single host block, [`assign`] spreads the 1x1
//! zero blocks over the hosts, and [`decompose`] puts it all together.

pub mod assign;
pub mod complement;
pub mod decompose;
pub mod gadget;

pub use assign::{distribute_zeros, host_capacity, Host, HostAssignment};
pub use complement::{
    complement_for_invertible, complement_for_nilpotent, invertible_capacity, invertible_gadgets, nilpotent_capacity,
    nilpotent_gadgets,
};
pub use decompose::{decompose, feasible, Certificate, Decomposition, Outcome};
pub use gadget::{lemma_basis_matrix, nilpotent_max_rank, shift_block, special_nilpotent, GadgetIndex};
