//! Numerical toolkit for two-term fractional initial value problems with a
//! general increasing time reparametrization.
//!
//! The crate solves problems of the form
//!
//! ```text
//! D^{mu;Phi} z(t) + omega * D^{kappa;Phi} z(t) = F(t, z(t)),   z(a) = z_a,
//! ```
//!
//! where `D^{alpha;Phi}` is the Caputo-type fractional derivative taken with
//! respect to an increasing map `Phi`, `0 < kappa < mu <= 1`, and `omega > 0`.
//! It provides:
//!
//! * [`expr`] — a tiny expression language for right-hand sides and `Phi`,
//! * [`special`] — gamma-family and Mittag-Leffler special functions,
//! * [`phicalc`] — fractional integrals/derivatives against `Phi` on grids,
//! * [`volterra`] — product-quadrature rules for weakly singular kernels,
//! * [`solver`] — the linear resolvent solver and monotone iteration driver,
//! * [`bounds`] — Gronwall-type envelopes and a-priori/stability bounds.

pub mod bounds;
pub mod expr;
pub mod phicalc;
pub mod solver;
pub mod special;
pub mod volterra;
