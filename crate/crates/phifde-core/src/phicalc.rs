//! The weight function Φ, uniform grids, grid functions, and the numerical
//! Φ-weighted fractional integral and Caputo-type derivative operators,
//! together with their closed-form power-law identities (used as oracles in
//! the test suite).

use std::sync::Arc;

use crate::expr::{EvalError, Expr};
use crate::special::gamma_fn;
use crate::volterra::{QuadratureScheme, SingularConvolution};

/// Errors raised by grid construction and the fractional operators.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum PhiCalcError {
    #[error("weight-map expressions must depend on t only")]
    StateVariableInPhi,
    #[error("grid requires a < b and n_intervals >= 2 (got a={a}, b={b}, n={n})")]
    BadGrid { a: f64, b: f64, n: usize },
    #[error("grid function needs {expected} values, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("grid function value at node {node} is not finite")]
    NonFiniteValue { node: usize },
    #[error("fractional order {mu} outside the supported range ({lo}, {hi}]")]
    OrderOutOfRange { mu: f64, lo: f64, hi: f64 },
    #[error("node index {i} exceeds grid size {n}")]
    NodeOutOfRange { i: usize, n: usize },
    #[error("power-law derivative identity requires kappa > mu (got kappa={kappa}, mu={mu})")]
    KappaNotAboveMu { kappa: f64, mu: f64 },
    #[error("weight map evaluation failed at t={t}: {source}")]
    PhiEval { t: f64, source: EvalError },
}

// ---------------------------------------------------------------------------
// PhiMap
// ---------------------------------------------------------------------------

/// An increasing differentiable reparametrization map Φ with its derivative
/// Φ′, both supplied as expressions in `t`.
#[derive(Debug, Clone, PartialEq)]
pub struct PhiMap {
    phi: Expr,
    phi_prime: Expr,
    label: String,
}

impl PhiMap {
    /// Φ(t) = t.
    pub fn identity() -> Self {
        PhiMap {
            phi: Expr::Time,
            phi_prime: Expr::Const(1.0),
            label: "identity".into(),
        }
    }

    /// Φ(t) = 1/(1+e^{−t}), whose derivative is Φ(t)(1−Φ(t)).
    pub fn sigmoid() -> Self {
        let s = || Expr::Call(crate::expr::Func::Sigmoid, Box::new(Expr::Time));
        PhiMap {
            phi: s(),
            phi_prime: Expr::Mul(
                Box::new(s()),
                Box::new(Expr::Sub(Box::new(Expr::Const(1.0)), Box::new(s()))),
            ),
            label: "sigmoid".into(),
        }
    }

    /// A user-supplied map. Both expressions must depend on `t` only; the
    /// increasing/consistency requirements are checked by [`validate_phi`].
    pub fn from_exprs(
        phi: Expr,
        phi_prime: Expr,
        label: impl Into<String>,
    ) -> Result<Self, PhiCalcError> {
        if phi.uses_state() || phi_prime.uses_state() {
            return Err(PhiCalcError::StateVariableInPhi);
        }
        Ok(PhiMap {
            phi,
            phi_prime,
            label: label.into(),
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn phi_expr(&self) -> &Expr {
        &self.phi
    }

    pub fn phi_prime_expr(&self) -> &Expr {
        &self.phi_prime
    }

    /// Φ(t).
    pub fn phi_at(&self, t: f64) -> Result<f64, PhiCalcError> {
        self.phi
            .eval(t, None)
            .map_err(|source| PhiCalcError::PhiEval { t, source })
    }

    /// Φ′(t).
    pub fn dphi_at(&self, t: f64) -> Result<f64, PhiCalcError> {
        self.phi_prime
            .eval(t, None)
            .map_err(|source| PhiCalcError::PhiEval { t, source })
    }
}

// ---------------------------------------------------------------------------
// Grid and GridFunction
// ---------------------------------------------------------------------------

/// Uniform node set over [a, b] with `n_intervals` equal panels.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    a: f64,
    b: f64,
    n_intervals: usize,
    nodes: Vec<f64>,
}

impl Grid {
    pub fn uniform(a: f64, b: f64, n_intervals: usize) -> Result<Arc<Grid>, PhiCalcError> {
        if !(a < b) || n_intervals < 2 || !a.is_finite() || !b.is_finite() {
            return Err(PhiCalcError::BadGrid {
                a,
                b,
                n: n_intervals,
            });
        }
        let h = (b - a) / n_intervals as f64;
        let mut nodes: Vec<f64> = (0..=n_intervals).map(|i| a + i as f64 * h).collect();
        // pin the right endpoint exactly so quadrature reaches b itself
        nodes[n_intervals] = b;
        Ok(Arc::new(Grid {
            a,
            b,
            n_intervals,
            nodes,
        }))
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn n_intervals(&self) -> usize {
        self.n_intervals
    }

    pub fn h(&self) -> f64 {
        (self.b - self.a) / self.n_intervals as f64
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn node(&self, i: usize) -> f64 {
        self.nodes[i]
    }
}

/// Finite values of a scalar function at the nodes of a [`Grid`].
#[derive(Debug, Clone, PartialEq)]
pub struct GridFunction {
    grid: Arc<Grid>,
    values: Vec<f64>,
}

impl GridFunction {
    pub fn new(grid: Arc<Grid>, values: Vec<f64>) -> Result<Self, PhiCalcError> {
        if values.len() != grid.nodes.len() {
            return Err(PhiCalcError::LengthMismatch {
                expected: grid.nodes.len(),
                got: values.len(),
            });
        }
        if let Some(node) = values.iter().position(|v| !v.is_finite()) {
            return Err(PhiCalcError::NonFiniteValue { node });
        }
        Ok(GridFunction { grid, values })
    }

    /// Sample a plain function of t at the grid nodes.
    pub fn sample(
        grid: &Arc<Grid>,
        f: impl Fn(f64) -> f64,
    ) -> Result<Self, PhiCalcError> {
        let values = grid.nodes.iter().map(|&t| f(t)).collect();
        GridFunction::new(Arc::clone(grid), values)
    }

    /// Sample a t-only expression at the grid nodes.
    pub fn from_expr(grid: &Arc<Grid>, e: &Expr) -> Result<Self, PhiCalcError> {
        if e.uses_state() {
            return Err(PhiCalcError::StateVariableInPhi);
        }
        let mut values = Vec::with_capacity(grid.nodes.len());
        for &t in &grid.nodes {
            values.push(
                e.eval(t, None)
                    .map_err(|source| PhiCalcError::PhiEval { t, source })?,
            );
        }
        GridFunction::new(Arc::clone(grid), values)
    }

    pub fn constant(grid: &Arc<Grid>, c: f64) -> Result<Self, PhiCalcError> {
        GridFunction::new(Arc::clone(grid), vec![c; grid.nodes.len()])
    }

    pub fn grid(&self) -> &Arc<Grid> {
        &self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn value(&self, i: usize) -> f64 {
        self.values[i]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

// ---------------------------------------------------------------------------
// Weight-map validation
// ---------------------------------------------------------------------------

/// One failed check in a [`PhiValidation`] report.
#[derive(Debug, Clone, PartialEq)]
pub struct PhiViolation {
    /// Index into the validation node list (grid nodes interleaved with
    /// panel midpoints; index 0 is t = a).
    pub check_index: usize,
    pub t: f64,
    pub detail: String,
}

/// Result of [`validate_phi`].
#[derive(Debug, Clone, PartialEq)]
pub struct PhiValidation {
    pub passed: bool,
    /// First violating validation node, if any.
    pub first_violation: Option<PhiViolation>,
    pub nodes_checked: usize,
}

/// Check that Φ′ is strictly positive and consistent with a central
/// difference of Φ (step 1e-5, tolerance 1e-6·max(1,|Φ′|)) at every grid
/// node and panel midpoint. The finite-difference probe evaluates Φ at
/// t ± 1e-5, so Φ must be defined marginally beyond [a, b].
pub fn validate_phi(phi: &PhiMap, grid: &Grid) -> PhiValidation {
    const FD_STEP: f64 = 1e-5;
    const FD_TOL: f64 = 1e-6;

    let mut check_nodes = Vec::with_capacity(2 * grid.n_intervals() + 1);
    for i in 0..grid.n_intervals() {
        let t = grid.node(i);
        check_nodes.push(t);
        check_nodes.push(0.5 * (t + grid.node(i + 1)));
    }
    check_nodes.push(grid.node(grid.n_intervals()));

    for (check_index, &t) in check_nodes.iter().enumerate() {
        let fail = |detail: String| PhiValidation {
            passed: false,
            first_violation: Some(PhiViolation {
                check_index,
                t,
                detail,
            }),
            nodes_checked: check_index + 1,
        };
        let dp = match phi.dphi_at(t) {
            Ok(v) => v,
            Err(e) => return fail(format!("{e}")),
        };
        if !dp.is_finite() || dp <= 0.0 {
            return fail(format!("phi_prime({t}) = {dp} is not strictly positive"));
        }
        let hi = match phi.phi_at(t + FD_STEP) {
            Ok(v) => v,
            Err(e) => return fail(format!("{e}")),
        };
        let lo = match phi.phi_at(t - FD_STEP) {
            Ok(v) => v,
            Err(e) => return fail(format!("{e}")),
        };
        let fd = (hi - lo) / (2.0 * FD_STEP);
        if (fd - dp).abs() > FD_TOL * dp.abs().max(1.0) {
            return fail(format!(
                "phi_prime({t}) = {dp} disagrees with central difference {fd}"
            ));
        }
    }
    PhiValidation {
        passed: true,
        first_violation: None,
        nodes_checked: check_nodes.len(),
    }
}

// ---------------------------------------------------------------------------
// Fractional operators
// ---------------------------------------------------------------------------

/// Weighted fractional integral of order `mu` of the grid function `f`,
/// evaluated at node `i`:
///
/// ```text
/// (1/Γ(μ)) ∫_a^{ℓ_i} Φ′(ρ) (Φ(ℓ_i) − Φ(ρ))^{μ−1} f(ρ) dρ
/// ```
///
/// using product-trapezoidal quadrature (O(h²) for f with bounded second
/// derivative with respect to Φ). Supported orders: mu ∈ (0, 2].
pub fn frac_integral(
    mu: f64,
    phi: &PhiMap,
    f: &GridFunction,
    i: usize,
) -> Result<f64, PhiCalcError> {
    let conv = frac_integral_convolution(mu, phi, f)?;
    frac_integral_at(&conv, mu, f, i)
}

/// Weighted fractional integral at every grid node (shared quadrature
/// setup; equivalent to calling [`frac_integral`] for each node).
pub fn frac_integral_all(
    mu: f64,
    phi: &PhiMap,
    f: &GridFunction,
) -> Result<GridFunction, PhiCalcError> {
    let conv = frac_integral_convolution(mu, phi, f)?;
    let mut values = Vec::with_capacity(f.len());
    for i in 0..f.len() {
        values.push(frac_integral_at(&conv, mu, f, i)?);
    }
    GridFunction::new(Arc::clone(f.grid()), values)
}

fn frac_integral_convolution<'f>(
    mu: f64,
    phi: &PhiMap,
    f: &'f GridFunction,
) -> Result<SingularConvolution<'f>, PhiCalcError> {
    if !(mu > 0.0 && mu <= 2.0) {
        return Err(PhiCalcError::OrderOutOfRange {
            mu,
            lo: 0.0,
            hi: 2.0,
        });
    }
    let values = f.values();
    SingularConvolution::new(mu, phi, f.grid(), move |_i, j| values[j])
}

fn frac_integral_at(
    conv: &SingularConvolution<'_>,
    mu: f64,
    f: &GridFunction,
    i: usize,
) -> Result<f64, PhiCalcError> {
    if i >= f.len() {
        return Err(PhiCalcError::NodeOutOfRange {
            i,
            n: f.len() - 1,
        });
    }
    if i == 0 {
        return Ok(0.0);
    }
    let scheme = QuadratureScheme::product_trapezoid(f.grid().h());
    let gamma_mu = gamma_fn(mu).expect("gamma is finite on (0, 2]");
    Ok(conv.convolve_at(i, scheme) / gamma_mu)
}

/// Caputo-type weighted derivative of order `mu` ∈ (0, 1] of the grid
/// function `f`, returned at every node.
///
/// Computes f′/Φ′ by second-order central differences (one-sided at the two
/// endpoints), then applies the weighted fractional integral of order 1−μ;
/// for μ = 1 the quotient itself is returned.
pub fn caputo_deriv(
    mu: f64,
    phi: &PhiMap,
    f: &GridFunction,
) -> Result<GridFunction, PhiCalcError> {
    if !(mu > 0.0 && mu <= 1.0) {
        return Err(PhiCalcError::OrderOutOfRange {
            mu,
            lo: 0.0,
            hi: 1.0,
        });
    }
    let grid = f.grid();
    let n = grid.n_intervals();
    let h = grid.h();
    let v = f.values();
    let mut quotient = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let df = if j == 0 {
            (-3.0 * v[0] + 4.0 * v[1] - v[2]) / (2.0 * h)
        } else if j == n {
            (3.0 * v[n] - 4.0 * v[n - 1] + v[n - 2]) / (2.0 * h)
        } else {
            (v[j + 1] - v[j - 1]) / (2.0 * h)
        };
        let dphi = phi.dphi_at(grid.node(j))?;
        quotient.push(df / dphi);
    }
    let q = GridFunction::new(Arc::clone(grid), quotient)?;
    if mu == 1.0 {
        return Ok(q);
    }
    frac_integral_all(1.0 - mu, phi, &q)
}

// ---------------------------------------------------------------------------
// Closed-form power-law identities (test oracles)
// ---------------------------------------------------------------------------

/// Closed form of the weighted fractional integral of the power function:
/// with s = Φ(ℓ)−Φ(a), the order-μ integral of s^{κ−1} equals
/// Γ(κ)/Γ(κ+μ) · s^{κ+μ−1}.
pub fn power_integral_cf(mu: f64, kappa: f64, s: f64) -> Result<f64, PhiCalcError> {
    if !(mu > 0.0) {
        return Err(PhiCalcError::OrderOutOfRange {
            mu,
            lo: 0.0,
            hi: f64::INFINITY,
        });
    }
    if !(kappa > 0.0) {
        return Err(PhiCalcError::OrderOutOfRange {
            mu: kappa,
            lo: 0.0,
            hi: f64::INFINITY,
        });
    }
    let g_k = gamma_fn(kappa).expect("kappa > 0");
    let g_km = gamma_fn(kappa + mu).expect("kappa + mu > 0");
    Ok(g_k / g_km * s.powf(kappa + mu - 1.0))
}

/// Closed form of the weighted Caputo derivative of the power function:
/// with s = Φ(ℓ)−Φ(a), the order-μ derivative of s^{κ−1} equals
/// Γ(κ)/Γ(κ−μ) · s^{κ−μ−1}. Requires κ > μ.
pub fn power_deriv_cf(mu: f64, kappa: f64, s: f64) -> Result<f64, PhiCalcError> {
    if !(mu > 0.0) {
        return Err(PhiCalcError::OrderOutOfRange {
            mu,
            lo: 0.0,
            hi: f64::INFINITY,
        });
    }
    if kappa <= mu {
        return Err(PhiCalcError::KappaNotAboveMu { kappa, mu });
    }
    let g_k = gamma_fn(kappa).expect("kappa > 0");
    let g_km = gamma_fn(kappa - mu).expect("kappa - mu > 0");
    Ok(g_k / g_km * s.powf(kappa - mu - 1.0))
}
