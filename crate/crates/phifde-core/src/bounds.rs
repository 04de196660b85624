//! Analytic envelopes for the two-term weighted-Caputo problem: the
//! Gronwall-type bound, the a-priori solution estimate, the
//! continuous-dependence bound, and the comparison-principle check for
//! nonnegative forcing.

use crate::expr::Expr;
use crate::phicalc::{GridFunction, PhiCalcError, PhiMap};
use crate::solver::{solve_linear, LinearForcing, ProblemSpec, SolverConfig, SolverError};
use crate::special::{gamma_fn, ml_one, SeriesControl, SpecialError};

/// Comparison-check pass threshold: quadrature noise allowance below zero.
pub const COMPARISON_FLOOR: f64 = -1e-9;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum BoundsError {
    #[error("invalid bound inputs: {0}")]
    BadInputs(String),
    #[error("envelope input must be nondecreasing; it decreases at node {node}")]
    NonMonotone { node: usize },
    #[error("order must lie in (0, 1], got {mu}")]
    OrderOutOfRange { mu: f64 },
    #[error("forcing must be nonnegative on the grid; found {value} at node {node} (t={t})")]
    NegativeForcing { node: usize, t: f64, value: f64 },
    #[error("initial value must be nonnegative, got {0}")]
    NegativeInitialValue(f64),
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error(transparent)]
    Special(#[from] SpecialError),
    #[error(transparent)]
    Phi(#[from] PhiCalcError),
}

/// Constants feeding the analytic bounds. All must be nonnegative.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct BoundInputs {
    /// Lipschitz constant of F in its state argument.
    pub lipschitz_l: f64,
    /// sup over the interval of |F(t, 0)|.
    pub f_star: f64,
    /// One-sided monotonicity constant (recorded; no bound consumes it
    /// directly — uniqueness shows up as sequence agreement in the solver).
    pub monotone_m: f64,
    /// Initial-value perturbation |z_a − z̄_a|.
    pub delta_z_a: f64,
}

impl BoundInputs {
    pub fn validate(&self) -> Result<(), BoundsError> {
        for (name, v) in [
            ("lipschitz_l", self.lipschitz_l),
            ("f_star", self.f_star),
            ("monotone_m", self.monotone_m),
            ("delta_z_a", self.delta_z_a),
        ] {
            if !(v >= 0.0 && v.is_finite()) {
                return Err(BoundsError::BadInputs(format!(
                    "{name} must be nonnegative and finite, got {v}"
                )));
            }
        }
        Ok(())
    }
}

/// Verdict of [`comparison_check`].
#[derive(Debug, Clone)]
pub struct ComparisonReport {
    /// True when every node value clears [`COMPARISON_FLOOR`].
    pub passed: bool,
    pub min_value: f64,
    pub argmin_node: usize,
    pub solution: GridFunction,
}

/// Evaluate Φ(b) − Φ(a) for a problem.
fn phi_span(p: &ProblemSpec) -> Result<f64, BoundsError> {
    Ok(p.phi.phi_at(p.b)? - p.phi.phi_at(p.a)?)
}

/// Gronwall-type envelope: maps a nondecreasing v to
/// ℓ ↦ v(ℓ)·E_μ(Γ(μ)·w·(Φ(ℓ)−Φ(a))^μ).
///
/// Any grid function u satisfying u(ℓ) ≤ v(ℓ) + w·∫ Φ′(Φℓ−Φρ)^{μ−1} u dρ is
/// dominated by this envelope.
pub fn gronwall_envelope(
    v: &GridFunction,
    w: f64,
    mu: f64,
    phi: &PhiMap,
) -> Result<GridFunction, BoundsError> {
    if !(mu > 0.0 && mu <= 1.0) {
        return Err(BoundsError::OrderOutOfRange { mu });
    }
    if !(w >= 0.0 && w.is_finite()) {
        return Err(BoundsError::BadInputs(format!(
            "envelope rate w must be nonnegative and finite, got {w}"
        )));
    }
    for i in 1..v.len() {
        if v.value(i) < v.value(i - 1) {
            return Err(BoundsError::NonMonotone { node: i });
        }
    }
    // E_mu(0) = 1, so zero rate means the envelope IS v — return it without
    // routing through the evaluator, which is only accurate to a few ulp.
    if w == 0.0 {
        return Ok(v.clone());
    }
    let grid = v.grid();
    let gm = gamma_fn(mu)?;
    let u_a = phi.phi_at(grid.a())?;
    let ctl = SeriesControl::default();
    let mut out = Vec::with_capacity(v.len());
    for i in 0..v.len() {
        let span = phi.phi_at(grid.node(i))? - u_a;
        let factor = ml_one(mu, gm * w * span.max(0.0).powf(mu), ctl)?;
        out.push(v.value(i) * factor);
    }
    Ok(GridFunction::new(std::sync::Arc::clone(&grid), out)?)
}

/// Scalar envelope dominating |z(ℓ)| on the whole interval:
///
/// ```text
/// (|z_a| + A·(Φ(b)−Φ(a))^μ / Γ(μ+1)) · E_μ(L·(Φ(b)−Φ(a))^μ)
/// ```
///
/// with A = F* when `corrected`, A = L·F* otherwise. The uncorrected form
/// reproduces a printed constant that is inconsistent with the Lipschitz
/// splitting |F(t,z)| ≤ F* + L|z| it is derived from; the corrected form is
/// the internally consistent one and the recommended default.
pub fn a_priori_estimate(
    p: &ProblemSpec,
    inputs: &BoundInputs,
    corrected: bool,
) -> Result<f64, BoundsError> {
    p.validate()?;
    inputs.validate()?;
    let span = phi_span(p)?;
    let amp = if corrected {
        inputs.f_star
    } else {
        inputs.lipschitz_l * inputs.f_star
    };
    let ctl = SeriesControl::default();
    let base = p.z_a.abs() + amp * span.powf(p.mu) / gamma_fn(p.mu + 1.0)?;
    Ok(base * ml_one(p.mu, inputs.lipschitz_l * span.powf(p.mu), ctl)?)
}

/// Bound on the sup-distance of two solutions whose data differ only in the
/// initial value: E_μ(L·(Φ(b)−Φ(a))^μ) · |z_a − z̄_a|.
pub fn continuous_dependence_bound(
    p: &ProblemSpec,
    inputs: &BoundInputs,
) -> Result<f64, BoundsError> {
    p.validate()?;
    inputs.validate()?;
    let span = phi_span(p)?;
    let ctl = SeriesControl::default();
    let factor = ml_one(p.mu, inputs.lipschitz_l * span.powf(p.mu), ctl)?;
    Ok(factor * inputs.delta_z_a)
}

/// Comparison principle: with nonnegative forcing and nonnegative initial
/// value, the linear solution must be nonnegative. The preconditions are
/// rejected before any solve; the report carries the minimum node value and
/// where it occurs.
pub fn comparison_check(
    orders: (f64, f64, f64),
    phi: &PhiMap,
    h_forcing: &LinearForcing,
    gamma_a: f64,
    cfg: &SolverConfig,
) -> Result<ComparisonReport, BoundsError> {
    let (mu, kappa, omega) = orders;
    if !(gamma_a >= 0.0 && gamma_a.is_finite()) {
        return Err(BoundsError::NegativeInitialValue(gamma_a));
    }
    for (node, &t) in cfg.grid.nodes().iter().enumerate() {
        let value = h_forcing
            .expr()
            .eval(t, None)
            .map_err(|source| SolverError::RhsEval { node, t, source })
            .map_err(BoundsError::Solver)?;
        if value < 0.0 {
            return Err(BoundsError::NegativeForcing { node, t, value });
        }
    }
    let p = ProblemSpec {
        mu,
        kappa,
        omega,
        a: cfg.grid.a(),
        b: cfg.grid.b(),
        z_a: gamma_a,
        rhs: Expr::Const(0.0),
        phi: phi.clone(),
    };
    let solution = solve_linear(&p, h_forcing, cfg)?;
    let mut min_value = f64::INFINITY;
    let mut argmin_node = 0;
    for (i, &v) in solution.values().iter().enumerate() {
        if v < min_value {
            min_value = v;
            argmin_node = i;
        }
    }
    Ok(ComparisonReport {
        passed: min_value >= COMPARISON_FLOOR,
        min_value,
        argmin_node,
        solution,
    })
}
