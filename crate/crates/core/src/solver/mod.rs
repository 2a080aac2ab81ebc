//! Exact minimum vertex cover of `P(n, k)`.
//!
//! [`beta_exact`] is a branch and bound over `u128` vertex bitsets, warm
//! started from the best explicit construction. [`beta_bruteforce`] walks
//! every vertex subset and serves as its oracle on small instances, and
//! [`enumerate_min_covers`] lists every minimum cover for `2n <= 24`.

mod bnb;
mod brute;
mod enumerate;

use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::cover::{Cover, CoverCertificate};
use crate::graph::GraphParams;

pub use bnb::{beta_exact, beta_exact_with};
pub use brute::{beta_bruteforce, beta_bruteforce_with, BRUTEFORCE_MAX_ORDER};
pub use enumerate::{enumerate_min_covers, MinCoverEnumeration, ENUMERATION_MAX_ORDER};

/// Largest `n` the bitset solver accepts (`2n <= 128`).
pub const SOLVER_MAX_N: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SolveMethod {
    BruteForce,
    BranchAndBound,
}

#[derive(Clone, Debug)]
pub struct SolverConfig {
    pub node_budget: u64,
    pub time_budget: Option<Duration>,
    /// Seed the incumbent with the best explicit construction.
    pub warm_start: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self { node_budget: 100_000_000, time_budget: None, warm_start: true }
    }
}

#[derive(Clone, Debug)]
pub struct BetaResult {
    pub params: GraphParams,
    pub beta: usize,
    pub witness: Cover,
    pub method: SolveMethod,
    pub nodes: u64,
    pub elapsed: Duration,
}

impl BetaResult {
    /// Size of the independent set complementary to the witness.
    pub fn independence_number(&self) -> usize {
        self.params.vertex_count() - self.beta
    }

    pub fn report(&self) -> BetaReport {
        BetaReport {
            n: self.params.n(),
            k: self.params.k(),
            beta: self.beta,
            method: self.method,
            nodes: self.nodes,
            elapsed_ms: self.elapsed.as_secs_f64() * 1e3,
            certificate: self.witness.to_certificate(),
        }
    }
}

/// JSON form of a [`BetaResult`].
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BetaReport {
    pub n: usize,
    pub k: usize,
    pub beta: usize,
    pub method: SolveMethod,
    pub nodes: u64,
    pub elapsed_ms: f64,
    pub certificate: CoverCertificate,
}

/// Circular shift of an `n`-bit mask towards higher indices.
#[inline]
pub(crate) fn rot(mask: u64, by: usize, n: usize) -> u64 {
    let full = (1u64 << n) - 1;
    ((mask << by) | (mask >> (n - by))) & full
}
