//! Quadrature for weakly singular weighted Volterra integrals
//!
//! ```text
//! ∫_a^{ℓ_i} Φ′(ρ) (Φ(ℓ_i) − Φ(ρ))^{e−1} · smooth(ρ) dρ,   e ∈ (0, 2]
//! ```
//!
//! The default `product_trapezoid` scheme substitutes u = Φ(ρ), interpolates
//! the smooth factor piecewise linearly in u, and integrates the kernel
//! (u_top − u)^{e−1} against it exactly on every panel — including the
//! terminal panel where the kernel is singular for e < 1. The alternative
//! `simpson_desingularized` scheme applies composite Simpson in ρ on all but
//! the last panel (trapezoid fallback when the panel count is odd) and the
//! exact product rule on the last panel.

use std::sync::Arc;

use crate::phicalc::{Grid, PhiCalcError, PhiMap};

/// Which composite rule drives [`SingularConvolution::convolve_at`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SchemeKind {
    ProductTrapezoid,
    SimpsonDesingularized,
}

/// A quadrature scheme: the rule plus the grid step it is meant for.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureScheme {
    pub kind: SchemeKind,
    pub h: f64,
}

impl QuadratureScheme {
    pub fn product_trapezoid(h: f64) -> Self {
        assert!(h > 0.0, "quadrature step must be positive");
        QuadratureScheme {
            kind: SchemeKind::ProductTrapezoid,
            h,
        }
    }

    pub fn simpson_desingularized(h: f64) -> Self {
        assert!(h > 0.0, "quadrature step must be positive");
        QuadratureScheme {
            kind: SchemeKind::SimpsonDesingularized,
            h,
        }
    }

    pub fn for_grid(kind: SchemeKind, grid: &Grid) -> Self {
        QuadratureScheme {
            kind,
            h: grid.h(),
        }
    }
}

/// Compensated (Neumaier) accumulator: deterministic summation with the
/// low-order bits carried separately.
struct Neumaier {
    sum: f64,
    comp: f64,
}

impl Neumaier {
    fn new() -> Self {
        Neumaier {
            sum: 0.0,
            comp: 0.0,
        }
    }

    fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    fn total(&self) -> f64 {
        self.sum + self.comp
    }
}

/// big^e − small^e for 0 ≤ small ≤ big, computed without catastrophic
/// cancellation when the two bases are close.
fn pow_diff(big: f64, small: f64, e: f64) -> f64 {
    debug_assert!(small >= 0.0 && big >= small);
    if small == big {
        return 0.0;
    }
    if small == 0.0 {
        return big.powf(e);
    }
    let x = (big - small) / small;
    small.powf(e) * (e * x.ln_1p()).exp_m1()
}

/// Exact product-integration weights for one panel: returns (w_left,
/// w_right) such that, for any linear function `lin` on [u_lo, u_hi],
///
/// ```text
/// ∫_{u_lo}^{u_hi} (u_top − u)^{exponent−1} · lin(u) du
///   = w_left · lin(u_lo) + w_right · lin(u_hi).
/// ```
///
/// Both weights are nonnegative. A degenerate panel (u_lo = u_hi) yields
/// (0, 0). Valid for exponent ∈ (0, 2]; u_hi = u_top (the singular terminal
/// panel) is handled exactly.
pub fn moment_weights(exponent: f64, u_lo: f64, u_hi: f64, u_top: f64) -> (f64, f64) {
    debug_assert!(
        exponent > 0.0 && exponent <= 2.0,
        "kernel exponent {exponent} outside (0, 2]"
    );
    debug_assert!(u_hi <= u_top);
    if !(u_hi > u_lo) {
        return (0.0, 0.0);
    }
    let e = exponent;
    let d = u_hi - u_lo;
    let big = u_top - u_lo;
    let small = u_top - u_hi;
    let pe = pow_diff(big, small, e);
    let pe1 = pow_diff(big, small, e + 1.0);
    // closed forms of the two panel moments against the linear hat functions
    let w_right = (big * pe / e - pe1 / (e + 1.0)) / d;
    let w_left = (pe1 / (e + 1.0) - small * pe / e) / d;
    (w_left, w_right)
}

/// A weakly singular convolution bound to one grid and weight map. The
/// smooth factor is a callable `(i, j) -> value at quadrature node j for
/// target node i` so that kernels depending on the target node (resolvent
/// kernels) and plain integrands (fractional integrals, which ignore `i`)
/// share one code path.
pub struct SingularConvolution<'a> {
    exponent: f64,
    grid: Arc<Grid>,
    /// Φ at the grid nodes.
    u: Vec<f64>,
    /// Φ′ at the grid nodes (used by the Simpson scheme).
    du: Vec<f64>,
    smooth: Box<dyn Fn(usize, usize) -> f64 + Sync + Send + 'a>,
}

impl<'a> SingularConvolution<'a> {
    /// Evaluates Φ and Φ′ once at every node. `exponent` must lie in
    /// (0, 2]; Φ must be increasing on the grid (see `validate_phi`).
    pub fn new(
        exponent: f64,
        phi: &PhiMap,
        grid: &Arc<Grid>,
        smooth: impl Fn(usize, usize) -> f64 + Sync + Send + 'a,
    ) -> Result<Self, PhiCalcError> {
        if !(exponent > 0.0 && exponent <= 2.0) {
            return Err(PhiCalcError::OrderOutOfRange {
                mu: exponent,
                lo: 0.0,
                hi: 2.0,
            });
        }
        let mut u = Vec::with_capacity(grid.nodes().len());
        let mut du = Vec::with_capacity(grid.nodes().len());
        for &t in grid.nodes() {
            u.push(phi.phi_at(t)?);
            du.push(phi.dphi_at(t)?);
        }
        Ok(SingularConvolution {
            exponent,
            grid: Arc::clone(grid),
            u,
            du,
            smooth: Box::new(smooth),
        })
    }

    pub fn grid(&self) -> &Arc<Grid> {
        &self.grid
    }

    pub fn exponent(&self) -> f64 {
        self.exponent
    }

    /// Φ values at the grid nodes.
    pub fn phi_nodes(&self) -> &[f64] {
        &self.u
    }

    /// Approximate the convolution integral up to node `i` (0 yields 0).
    /// Pure; distinct node indices may be evaluated concurrently. Panel
    /// contributions accumulate in ascending order with compensated
    /// summation, so the result is independent of thread count.
    pub fn convolve_at(&self, i: usize, scheme: QuadratureScheme) -> f64 {
        assert!(i < self.u.len(), "node index {i} out of range");
        if i == 0 {
            return 0.0;
        }
        match scheme.kind {
            SchemeKind::ProductTrapezoid => self.product_trapezoid_at(i),
            SchemeKind::SimpsonDesingularized => self.simpson_at(i, scheme.h),
        }
    }

    fn product_trapezoid_at(&self, i: usize) -> f64 {
        let e = self.exponent;
        let u_top = self.u[i];
        let mut acc = Neumaier::new();
        for j in 0..i {
            let (w_left, w_right) = moment_weights(e, self.u[j], self.u[j + 1], u_top);
            acc.add(w_left * (self.smooth)(i, j));
            acc.add(w_right * (self.smooth)(i, j + 1));
        }
        acc.total()
    }

    fn simpson_at(&self, i: usize, h: f64) -> f64 {
        let e = self.exponent;
        let u_top = self.u[i];
        let g = |j: usize| {
            self.du[j] * (u_top - self.u[j]).powf(e - 1.0) * (self.smooth)(i, j)
        };
        let mut acc = Neumaier::new();
        // regular part: panels [ρ_0, ρ_{i-1}], where the integrand is smooth
        let m = i - 1;
        let mut j = 0;
        while j + 2 <= m {
            acc.add(h / 3.0 * (g(j) + 4.0 * g(j + 1) + g(j + 2)));
            j += 2;
        }
        if j < m {
            acc.add(h / 2.0 * (g(m - 1) + g(m)));
        }
        // terminal panel, where the kernel is singular for e < 1: product rule
        let (w_left, w_right) = moment_weights(e, self.u[i - 1], self.u[i], u_top);
        acc.add(w_left * (self.smooth)(i, i - 1) + w_right * (self.smooth)(i, i));
        acc.total()
    }
}
