//! Minimum vertex covers of generalized Petersen graphs `P(n, k)`.
//!
//! * [`graph`]: the graphs themselves, edge classes, inner cycles, sectors.
//! * [`cover`]: covers, strips, `a(c)`/`b(c)`, the semi-optimal transform.
//! * [`solver`]: exact `beta(P(n,k))` by brute force and branch and bound,
//!   plus enumeration of every minimum cover on small instances.
//! * [`constructions`]: explicit covers behind each upper bound, and the
//!   strip-reduction procedure.
//! * [`bounds`]: closed-form lower/upper bounds and exact-value formulas.
//! * [`harness`]: conjecture sweeps, property suites, caching and export.

pub mod bounds;
pub mod constructions;
pub mod cover;
pub mod error;
pub mod graph;
pub mod harness;
pub mod par;
pub mod solver;

pub use cover::{Cover, CoverCertificate, CoverStats, Strip, StripDecomposition};
pub use error::{Error, Result};
pub use graph::{Edge, EdgeKind, GraphParams, PetersenGraph, Side, VertexId};
pub use par::Execution;

/// `n + ceil(n / 5)`, the conjectured upper bound on `beta(P(n,k))`.
pub fn conjecture_value(n: usize) -> usize {
    n + n.div_ceil(5)
}
