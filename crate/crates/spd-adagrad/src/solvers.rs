//! The three solvers under one run-loop contract: the adaptive-norm gradient
//! method (one exponential map per iteration, step `η/√β_{k+1}` with
//! `β_{k+1} = β_k + ‖grad f(x_k)‖²` and `β₀ = 0`), the reciprocal-accumulator
//! variant (step `1/β_k`, then `β_{k+1} = β_k + ‖grad f(x_k)‖²/β_k`, `β₀ > 0`),
//! and Riemannian steepest descent with Armijo backtracking.
//!
//! A run is single-threaded and deterministic given (objective, start,
//! config); every iteration appends one record to the trace, and a terminal
//! record carries the final point's measurements together with the status.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::manifold::{self, SpdPoint, TangentVector};
use crate::objectives::Objective;

/// Which solver to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SolverKind {
    MAdaGrad,
    RwnGrad,
    Armijo,
}

impl SolverKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            SolverKind::MAdaGrad => "madagrad",
            SolverKind::RwnGrad => "rwngrad",
            SolverKind::Armijo => "armijo",
        }
    }
}

impl std::str::FromStr for SolverKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "madagrad" => Ok(SolverKind::MAdaGrad),
            "rwngrad" => Ok(SolverKind::RwnGrad),
            "armijo" => Ok(SolverKind::Armijo),
            other => Err(Error::InvalidInput(format!("unknown solver '{other}'"))),
        }
    }
}

impl std::fmt::Display for SolverKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Policy for the Armijo trial step at the start of each iteration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TrialRule {
    /// Every iteration starts the backtracking from `alpha0`.
    Fixed,
    /// Each iteration starts from twice the previously accepted step.
    PreviousStepDoubling,
}

/// Armijo line-search parameters.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ArmijoParams {
    /// Sufficient-decrease fraction, in (0, 1).
    pub rho: f64,
    /// Backtracking factor, in (0, 1).
    pub omega: f64,
    /// Initial trial step, > 0.
    pub alpha0: f64,
    pub trial_rule: TrialRule,
}

impl Default for ArmijoParams {
    fn default() -> Self {
        Self {
            rho: 1e-4,
            omega: 0.5,
            alpha0: 1.0,
            trial_rule: TrialRule::Fixed,
        }
    }
}

/// Backtracking cap: `0.5^60` underflows any meaningful step, so exceeding it
/// indicates a gradient/value inconsistency rather than a short step.
pub const MAX_BACKTRACK_HALVINGS: u32 = 60;

/// Full solver configuration. Echoed into every trace.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolverConfig {
    pub kind: SolverKind,
    /// Step-scale parameter of the adaptive-norm method, > 0.
    pub eta: f64,
    /// Initial accumulator of the reciprocal variant, > 0.
    pub beta0: f64,
    pub armijo: ArmijoParams,
    /// Stop when the Riemannian gradient norm falls to or below this.
    pub tol_grad: f64,
    pub max_iter: usize,
}

impl SolverConfig {
    pub fn madagrad() -> Self {
        Self {
            kind: SolverKind::MAdaGrad,
            ..Self::base()
        }
    }

    pub fn rwngrad() -> Self {
        Self {
            kind: SolverKind::RwnGrad,
            ..Self::base()
        }
    }

    pub fn armijo() -> Self {
        Self {
            kind: SolverKind::Armijo,
            ..Self::base()
        }
    }

    fn base() -> Self {
        Self {
            kind: SolverKind::MAdaGrad,
            eta: 10.0,
            beta0: 1.0,
            armijo: ArmijoParams::default(),
            tol_grad: 1e-4,
            max_iter: 1000,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.eta > 0.0) {
            return Err(Error::InvalidInput(format!("eta must be > 0, got {}", self.eta)));
        }
        if !(self.beta0 > 0.0) {
            return Err(Error::InvalidInput(format!(
                "beta0 must be > 0, got {}",
                self.beta0
            )));
        }
        let a = &self.armijo;
        if !(a.rho > 0.0 && a.rho < 1.0) || !(a.omega > 0.0 && a.omega < 1.0) || !(a.alpha0 > 0.0) {
            return Err(Error::InvalidInput(format!(
                "Armijo parameters out of range: rho={}, omega={}, alpha0={}",
                a.rho, a.omega, a.alpha0
            )));
        }
        if !(self.tol_grad >= 0.0) {
            return Err(Error::InvalidInput(format!(
                "tol_grad must be ≥ 0, got {}",
                self.tol_grad
            )));
        }
        Ok(())
    }
}

/// How a run ended.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RunStatus {
    /// Gradient norm reached `tol_grad`.
    Converged,
    /// Iteration budget exhausted.
    MaxIter,
    /// The gradient vanished exactly (stationary point).
    ZeroGradient,
    /// A step failed numerically (overflow, lost positive definiteness,
    /// exhausted backtracking).
    NumericalFailure,
}

impl RunStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            RunStatus::Converged => "Converged",
            RunStatus::MaxIter => "MaxIter",
            RunStatus::ZeroGradient => "ZeroGradient",
            RunStatus::NumericalFailure => "NumericalFailure",
        }
    }

    /// Converged and ZeroGradient both count as a solved problem.
    pub fn solved(&self) -> bool {
        matches!(self, RunStatus::Converged | RunStatus::ZeroGradient)
    }
}

impl std::str::FromStr for RunStatus {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "Converged" => Ok(RunStatus::Converged),
            "MaxIter" => Ok(RunStatus::MaxIter),
            "ZeroGradient" => Ok(RunStatus::ZeroGradient),
            "NumericalFailure" => Ok(RunStatus::NumericalFailure),
            other => Err(Error::Parse(format!("unknown run status '{other}'"))),
        }
    }
}

impl std::fmt::Display for RunStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Mutable solver state threaded through the step functions.
#[derive(Clone, Debug)]
pub struct SolverState {
    pub x: SpdPoint,
    pub k: usize,
    /// Accumulator `β_k`: 0 initially for the adaptive-norm method, `beta0`
    /// for the reciprocal variant; nondecreasing over the run.
    pub beta: f64,
    pub last_alpha: f64,
    pub expmap_count: u64,
    pub fevals: u64,
    pub gevals: u64,
}

impl SolverState {
    fn new(x: SpdPoint, beta: f64) -> Self {
        Self {
            x,
            k: 0,
            beta,
            last_alpha: 0.0,
            expmap_count: 0,
            fevals: 0,
            gevals: 0,
        }
    }
}

/// One row of a run trace: the measurements at iterate `x_k` plus the step
/// taken to leave it. `beta` is the accumulator value at `x_k` (before the
/// step's update); `alpha` is the accepted step size, 0 on the terminal row.
/// Counters are cumulative. `f` on a row is observational and is not counted
/// in `fevals`; `fevals` counts only line-search trial evaluations.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IterRecord {
    pub k: usize,
    pub f: f64,
    pub grad_norm: f64,
    pub alpha: f64,
    pub beta: f64,
    pub expmaps: u64,
    pub fevals: u64,
    pub elapsed_ns: u128,
}

/// Per-iteration record of one solver run plus its terminal status, with the
/// configuration and instance seed echoed for reproducibility.
#[derive(Clone, Debug)]
pub struct RunTrace {
    pub run_id: String,
    pub problem: String,
    pub config: SolverConfig,
    pub seed: u64,
    pub records: Vec<IterRecord>,
    pub status: RunStatus,
}

impl RunTrace {
    pub fn final_record(&self) -> &IterRecord {
        self.records.last().expect("a trace always has a terminal record")
    }

    /// Number of completed iterations (index of the terminal record).
    pub fn iterations(&self) -> usize {
        self.final_record().k
    }

    pub fn total_expmaps(&self) -> u64 {
        self.final_record().expmaps
    }

    pub fn solved(&self) -> bool {
        self.status.solved()
    }
}

struct StepOutcome {
    x: SpdPoint,
    alpha: f64,
}

/// Run one solver from `x0` until convergence, a zero gradient, the iteration
/// budget, or a numerical failure. Step errors become a terminal
/// `NumericalFailure` record rather than an `Err`.
pub fn run(obj: &Objective, x0: &SpdPoint, cfg: &SolverConfig) -> Result<RunTrace> {
    run_traced(obj, x0, cfg, String::new(), 0)
}

/// [`run`] with an explicit run id and instance seed echoed into the trace.
pub fn run_traced(
    obj: &Objective,
    x0: &SpdPoint,
    cfg: &SolverConfig,
    run_id: String,
    seed: u64,
) -> Result<RunTrace> {
    cfg.validate()?;
    if x0.dim() != obj.dim() {
        return Err(Error::InvalidInput(format!(
            "start dim {} does not match objective dim {}",
            x0.dim(),
            obj.dim()
        )));
    }

    let start = Instant::now();
    let beta_init = match cfg.kind {
        SolverKind::MAdaGrad => 0.0,
        SolverKind::RwnGrad => cfg.beta0,
        SolverKind::Armijo => 0.0,
    };
    let mut state = SolverState::new(x0.clone(), beta_init);
    let mut trial_alpha = cfg.armijo.alpha0;
    let mut records = Vec::new();
    let mut status;

    loop {
        let k = state.k;
        // One gradient evaluation per iteration, shared between the stopping
        // test and the step.
        let measured = obj.value(&state.x).and_then(|f| {
            state.gevals += 1;
            let grad = obj.riemannian_grad(&state.x)?;
            let gnorm = manifold::norm(&state.x, &grad)?;
            Ok((f, grad, gnorm))
        });
        let (f, grad, gnorm) = match measured {
            Ok(t) => t,
            Err(_) => {
                records.push(record(k, f64::NAN, f64::NAN, 0.0, state.beta, &state, &start));
                status = RunStatus::NumericalFailure;
                break;
            }
        };

        if gnorm == 0.0 {
            records.push(record(k, f, gnorm, 0.0, state.beta, &state, &start));
            status = RunStatus::ZeroGradient;
            break;
        }
        if gnorm <= cfg.tol_grad {
            records.push(record(k, f, gnorm, 0.0, state.beta, &state, &start));
            status = RunStatus::Converged;
            break;
        }
        if k >= cfg.max_iter {
            records.push(record(k, f, gnorm, 0.0, state.beta, &state, &start));
            status = RunStatus::MaxIter;
            break;
        }

        let beta_at_row = state.beta;
        let stepped = match cfg.kind {
            SolverKind::MAdaGrad => madagrad_step(&mut state, &grad, gnorm, cfg.eta),
            SolverKind::RwnGrad => rwngrad_step(&mut state, &grad, gnorm),
            SolverKind::Armijo => {
                armijo_step(&mut state, obj, &grad, gnorm, f, &mut trial_alpha, &cfg.armijo)
            }
        };
        match stepped {
            Ok(outcome) => {
                state.last_alpha = outcome.alpha;
                records.push(record(k, f, gnorm, outcome.alpha, beta_at_row, &state, &start));
                state.x = outcome.x;
                state.k += 1;
            }
            Err(_) => {
                records.push(record(k, f, gnorm, 0.0, beta_at_row, &state, &start));
                status = RunStatus::NumericalFailure;
                break;
            }
        }
    }

    Ok(RunTrace {
        run_id,
        problem: obj.label(),
        config: cfg.clone(),
        seed,
        records,
        status,
    })
}

fn record(
    k: usize,
    f: f64,
    grad_norm: f64,
    alpha: f64,
    beta: f64,
    state: &SolverState,
    start: &Instant,
) -> IterRecord {
    IterRecord {
        k,
        f,
        grad_norm,
        alpha,
        beta,
        expmaps: state.expmap_count,
        fevals: state.fevals,
        elapsed_ns: start.elapsed().as_nanos(),
    }
}

/// One adaptive-norm step: `β ← β + ‖g‖²`, `α = η/√β`, `x ← exp_x(−α·g)`.
/// Exactly one exponential map; the accumulator strictly increases.
fn madagrad_step(
    state: &mut SolverState,
    grad: &TangentVector,
    gnorm: f64,
    eta: f64,
) -> Result<StepOutcome> {
    state.beta += gnorm * gnorm;
    let alpha = eta / state.beta.sqrt();
    state.expmap_count += 1;
    let x = manifold::exp_map(&state.x, &grad.scale(-alpha))?;
    Ok(StepOutcome { x, alpha })
}

/// One reciprocal-accumulator step: `x ← exp_x(−(1/β)·g)` using the current
/// `β`, then `β ← β + ‖g‖²/β`.
fn rwngrad_step(
    state: &mut SolverState,
    grad: &TangentVector,
    gnorm: f64,
) -> Result<StepOutcome> {
    debug_assert!(state.beta > 0.0);
    let alpha = 1.0 / state.beta;
    state.expmap_count += 1;
    let x = manifold::exp_map(&state.x, &grad.scale(-alpha))?;
    state.beta += gnorm * gnorm / state.beta;
    Ok(StepOutcome { x, alpha })
}

/// One Armijo iteration: backtrack from the trial step until
/// `f(exp_x(−α·g)) ≤ f(x) − ρ·α·‖g‖²`. Each trial costs one exponential map
/// and one function evaluation.
fn armijo_step(
    state: &mut SolverState,
    obj: &Objective,
    grad: &TangentVector,
    gnorm: f64,
    f0: f64,
    trial_alpha: &mut f64,
    params: &ArmijoParams,
) -> Result<StepOutcome> {
    let base = match params.trial_rule {
        TrialRule::Fixed => params.alpha0,
        TrialRule::PreviousStepDoubling => *trial_alpha,
    };
    let accepted = backtrack(base, params, |alpha| {
        state.expmap_count += 1;
        let candidate = manifold::exp_map(&state.x, &grad.scale(-alpha))?;
        state.fevals += 1;
        let fc = obj.value(&candidate)?;
        Ok((candidate, fc))
    }, f0, gnorm * gnorm)?;
    if params.trial_rule == TrialRule::PreviousStepDoubling {
        *trial_alpha = 2.0 * accepted.alpha;
    }
    Ok(accepted)
}

/// Backtracking core, generic over the trial evaluator so the halving cap can
/// be exercised in isolation.
fn backtrack<F>(
    base_alpha: f64,
    params: &ArmijoParams,
    mut trial: F,
    f0: f64,
    gnorm_sq: f64,
) -> Result<StepOutcome>
where
    F: FnMut(f64) -> Result<(SpdPoint, f64)>,
{
    let mut alpha = base_alpha;
    for _ in 0..=MAX_BACKTRACK_HALVINGS {
        let (candidate, fc) = trial(alpha)?;
        if fc <= f0 - params.rho * alpha * gnorm_sq {
            return Ok(StepOutcome { x: candidate, alpha });
        }
        alpha *= params.omega;
    }
    Err(Error::BacktrackExhausted {
        halvings: MAX_BACKTRACK_HALVINGS,
    })
}
