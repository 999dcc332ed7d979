//! Independent certification: a decomposition checker, a brute-force
//! feasibility oracle, and reproducible random instances.

pub mod oracle;
pub mod random;
pub mod report;

pub use oracle::{exhaustive_feasible, exhaustive_feasible_with_jobs, OracleBudget, OracleVerdict};
pub use random::{random_invertible, random_matrix_of_rank};
pub use report::{verify_decomposition, VerifyReport};
