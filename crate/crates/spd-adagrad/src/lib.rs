//! Adaptive Riemannian gradient methods on the manifold of symmetric positive
//! definite matrices, with runtime monitors for the underlying step-size
//! theory and a deterministic benchmark harness.
//!
//! The manifold carries the affine-invariant metric
//! `⟨U, V⟩_X = tr(V X⁻¹ U X⁻¹)`; geodesics, distances and parallel transport
//! are the exact closed forms built on symmetric eigendecompositions.
//!
//! What's here:
//!
//! - [`sym`] — symmetric-matrix kernels (eigendecomposition, spectral
//!   functions, Frobenius norms).
//! - [`manifold`] — SPD points, tangent vectors, exp/log maps, distance,
//!   parallel transport, and the gradient conversion `grad f(X) = X f'(X) X`.
//! - [`objectives`] — the three benchmark families: a geodesically convex
//!   log-det quadratic, the Karcher-mean objective, and a nonconvex quartic
//!   log-det family with a Polyak–Łojasiewicz certificate.
//! - [`solvers`] — the adaptive-norm gradient method (one exponential map per
//!   iteration), its reciprocal-accumulator variant, and Armijo backtracking,
//!   all under one traced run loop.
//! - [`theory`] — closed-form complexity-bound evaluators and trace audits
//!   for the per-iteration inequalities the methods are proved to satisfy.
//! - [`harness`] — seeded instance generation, parallel batch execution, and
//!   Dolan–Moré performance profiles.
//! - [`io`] — CSV/JSON persistence for traces, profiles, audits, instances.
//! - [`cli`] — the `run` / `profile` / `check` / `demo` subcommands.
//!
//! Start with the runnable examples (`cargo run --example geometry_tour`,
//! `solve_logdet`, `karcher_mean`, `pl_certificate`, `theory_audit`,
//! `performance_profile`), or the `spd-adagrad` binary for the batch surface.

pub mod error;
pub mod manifold;
pub mod objectives;
pub mod solvers;
pub mod sym;

pub use error::{Error, Result};
pub use manifold::{SpdPoint, TangentVector};
pub use objectives::{Objective, PlCertificate};
pub use solvers::{RunStatus, RunTrace, SolverConfig, SolverKind};
pub mod cli;
