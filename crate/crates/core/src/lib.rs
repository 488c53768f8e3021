//! Static equilibria of convex polytopes and exact infeasibility
//! certificates for mono-unstable 0-skeletons.
//!
//! The crate is organised bottom-up:
//!
//! - [`ratcore`]: exact rational arithmetic, linear solves and
//!   positive-definiteness tests.
//! - [`equilibria`]: shadowing matrices, equilibrium counts for vertex and
//!   face configurations, simplex face/area vectors and hull-vertex checks.
//! - [`expansion`]: the `(V-1)!` shadowing systems of the `(3,0,V)` problem
//!   and their quadratic forms in the `3V-7` free coordinates.
//! - [`prover`]: certificate verification and randomized search, and the
//!   per-`V` proof driver.
//! - [`table`], [`report`]: bundled certificate tables, run manifests and
//!   JSON reports.
//! - [`cli`]: the `monoproof` command line, callable in-process.
//!
//! A vertex `p_i` of a polytope with centre of mass at the origin is
//! *shadowed* by `p_j` when `(r_i - r_j)·r_i < 0`; a vertex that nobody
//! shadows carries an unstable equilibrium. A mono-unstable polytope has
//! every vertex but the farthest one shadowed. Ordering vertices by
//! distance, each vertex `i ≥ 2` must be shadowed by some `j(i) < i`, which
//! gives `(V-1)!` systems of quadratic inequalities. Each system is refuted
//! by positive integer weights `c_i` whose weighted sum `f` of the
//! inequality left-hand sides is strictly convex with a strictly positive
//! minimum.

pub mod cli;
pub mod equilibria;
pub mod expansion;
pub mod prover;
pub mod ratcore;
pub mod report;
pub mod table;

pub use ratcore::{rat, RatMatrix, RatVector, Rational};
