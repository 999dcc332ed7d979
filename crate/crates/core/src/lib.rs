//! Exact decompositions `A = U + N` of square matrices over a field, with `U`
//! invertible and `N` nilpotent of index at most `k`.
//!
//! Such a decomposition exists if and only if `k * rank(A) >= n`. When it
//! exists, [`decompose`] builds one explicitly: `A` is brought to a block
//! form made of invertible companion blocks, 1x1 zero blocks and nilpotent
//! shift blocks, the zero blocks are distributed over the other blocks, and
//! each resulting region receives a sum of explicit nilpotent gadgets that
//! makes it invertible.
//!
//! Everything is exact. Supported fields are the prime fields `F_p` with
//! `p < 2^31` and the rationals.
//!
//! ```
//! use finedecomp::{decompose, verify_decomposition, FieldSpec, Matrix, Outcome};
//!
//! let q = FieldSpec::rationals();
//! let a = Matrix::from_i64_rows(q, &[[0, 0, 0], [1, 0, 0], [0, 1, 0]]).unwrap();
//! let Outcome::Decomposed(d) = decompose(&a, 2).unwrap() else { unreachable!() };
//! assert!(verify_decomposition(&a, &d.u, &d.n, 2).unwrap().overall);
//! ```

pub mod canonical;
pub mod construct;
pub mod error;
pub mod field;
pub mod matrix;
pub mod poly;
pub mod verify;

pub use canonical::{block_form, coprime_split_block, frobenius_form, BlockForm, BlockKind, BlockSpec, FrobeniusForm};
pub use construct::{
    complement_for_invertible, complement_for_nilpotent, decompose, distribute_zeros, feasible, lemma_basis_matrix,
    nilpotent_max_rank, special_nilpotent, Decomposition, HostAssignment, Outcome,
};
pub use error::{Error, Result};
pub use field::{FieldSpec, Scalar};
pub use matrix::Matrix;
pub use poly::Polynomial;
pub use verify::{exhaustive_feasible, random_matrix_of_rank, verify_decomposition, OracleBudget, VerifyReport};

// The guide's code listings run as doctests, one module per chapter.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/arithmetic.md")]
    mod arithmetic {}
    #[doc = include_str!("../../../book/src/canonical.md")]
    mod canonical {}
    #[doc = include_str!("../../../book/src/gadgets.md")]
    mod gadgets {}
    #[doc = include_str!("../../../book/src/decomposition.md")]
    mod decomposition {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
