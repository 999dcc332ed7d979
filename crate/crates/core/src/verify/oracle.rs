//! Brute-force feasibility over small prime fields.
//!
//! Enumerates every `N` in `M_n(F_p)` and looks for one with `N^k = 0` and
//! `A - N` invertible. Arithmetic here is plain `u64` modular arithmetic on
//! flat arrays and shares no code with the constructive path it is meant to
//! check.

use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::{Error, Result};
use crate::matrix::Matrix;

/// Upper bound on the number of candidates the oracle will enumerate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_candidates: u64,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_candidates: 1 << 26,
        }
    }
}

/// Result of an exhaustive search. `witness` is the lexicographically first
/// valid `N` (row-major, first entry most significant).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleVerdict {
    pub feasible: bool,
    pub witness: Option<Matrix>,
}

struct Problem {
    p: u64,
    n: usize,
    k: usize,
    a: Vec<u64>,
}

impl Problem {
    fn decode(&self, mut index: u64, out: &mut [u64]) {
        for slot in out.iter_mut().rev() {
            *slot = index % self.p;
            index /= self.p;
        }
    }

    /// Advances `digits` to the next candidate in lexicographic order.
    fn increment(&self, digits: &mut [u64]) {
        for d in digits.iter_mut().rev() {
            *d += 1;
            if *d < self.p {
                return;
            }
            *d = 0;
        }
    }

    fn mat_mul(&self, x: &[u64], y: &[u64], out: &mut [u64]) {
        let n = self.n;
        for i in 0..n {
            for j in 0..n {
                let mut s = 0u64;
                for l in 0..n {
                    s = (s + x[i * n + l] * y[l * n + j]) % self.p;
                }
                out[i * n + j] = s;
            }
        }
    }

    fn is_nilpotent_within(&self, m: &[u64], scratch: &mut [u64], power: &mut [u64]) -> bool {
        let n = self.n;
        if (0..n).map(|i| m[i * n + i]).sum::<u64>() % self.p != 0 {
            return false;
        }
        power.copy_from_slice(m);
        // N^j = 0 for some j <= n whenever N is nilpotent, so k beyond n adds nothing.
        for _ in 1..self.k.min(n) {
            if power.iter().all(|&x| x == 0) {
                return true;
            }
            self.mat_mul(power, m, scratch);
            power.copy_from_slice(scratch);
        }
        power.iter().all(|&x| x == 0)
    }

    fn is_invertible(&self, m: &mut [u64]) -> bool {
        let (n, p) = (self.n, self.p);
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| m[r * n + col] != 0) else {
                return false;
            };
            if piv != col {
                for j in 0..n {
                    m.swap(piv * n + j, col * n + j);
                }
            }
            let inv = pow_mod(m[col * n + col], p - 2, p);
            for r in col + 1..n {
                let f = m[r * n + col] * inv % p;
                if f == 0 {
                    continue;
                }
                for j in col..n {
                    m[r * n + j] = (m[r * n + j] + (p - f) * m[col * n + j]) % p;
                }
            }
        }
        true
    }

    /// First witness index in `[start, end)` below `bound`.
    fn scan(&self, start: u64, end: u64, bound: &AtomicU64) -> Option<u64> {
        let len = self.n * self.n;
        let mut digits = vec![0u64; len];
        let mut scratch = vec![0u64; len];
        let mut power = vec![0u64; len];
        let mut diff = vec![0u64; len];
        self.decode(start, &mut digits);
        let mut index = start;
        while index < end {
            if index & 0xfff == 0 && index >= bound.load(Ordering::Relaxed) {
                return None;
            }
            if self.is_nilpotent_within(&digits, &mut scratch, &mut power) {
                for ((d, a), x) in diff.iter_mut().zip(&self.a).zip(&digits) {
                    *d = (a + self.p - x) % self.p;
                }
                if self.is_invertible(&mut diff) {
                    bound.fetch_min(index, Ordering::Relaxed);
                    return Some(index);
                }
            }
            self.increment(&mut digits);
            index += 1;
        }
        None
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Exhaustive search for `N` with `N^k = 0` and `A - N` invertible.
pub fn exhaustive_feasible(a: &Matrix, k: usize, budget: OracleBudget) -> Result<OracleVerdict> {
    exhaustive_feasible_with_jobs(a, k, budget, 1)
}

/// As [`exhaustive_feasible`], splitting the search over `jobs` threads.
/// The verdict and witness do not depend on `jobs`.
pub fn exhaustive_feasible_with_jobs(a: &Matrix, k: usize, budget: OracleBudget, jobs: usize) -> Result<OracleVerdict> {
    let field = a.field();
    let p = field.modulus().ok_or(Error::RationalsUnsupported)? as u64;
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    if k == 0 {
        return Err(Error::IndexConstraintViolated("k must be positive".into()));
    }
    let n = a.rows();
    let total = u32::try_from(n * n)
        .ok()
        .and_then(|e| p.checked_pow(e))
        .filter(|&t| t <= budget.max_candidates)
        .ok_or_else(|| Error::BudgetExceeded {
            needed: format!("{p}^{}", n * n),
            budget: budget.max_candidates,
        })?;
    let problem = Problem {
        p,
        n,
        k,
        a: a.entries().iter().map(|s| s.residue_value().unwrap() as u64).collect(),
    };

    let bound = AtomicU64::new(u64::MAX);
    let jobs = jobs.clamp(1, 256) as u64;
    if jobs == 1 {
        problem.scan(0, total, &bound);
    } else {
        let chunk = total.div_ceil(jobs);
        std::thread::scope(|s| {
            for j in 0..jobs {
                let (start, end) = (j * chunk, ((j + 1) * chunk).min(total));
                let (problem, bound) = (&problem, &bound);
                if start < end {
                    s.spawn(move || problem.scan(start, end, bound));
                }
            }
        });
    }

    let found = bound.load(Ordering::Relaxed);
    if found == u64::MAX {
        return Ok(OracleVerdict {
            feasible: false,
            witness: None,
        });
    }
    let mut digits = vec![0u64; n * n];
    problem.decode(found, &mut digits);
    let entries = digits.into_iter().map(|d| field.from_i64(d as i64)).collect();
    Ok(OracleVerdict {
        feasible: true,
        witness: Some(Matrix::from_entries(field, n, n, entries)?),
    })
}
