//! Asymptotics of polynomials orthogonal on [−1,1] with respect to modified
//! Jacobi weights w(x) = (1−x)^α(1+x)^β h(x), together with an independent
//! quadrature-based orthogonalization oracle that every formula is tested
//! against.
//!
//! Module map:
//! - [`spectral`]: Chebyshev series, Clenshaw evaluation, Bernstein-ellipse
//!   contour quadrature.
//! - [`weight`]: weight specs, validation, analytic continuation.
//! - [`ortho_oracle`]: Stieltjes recurrence, Gauss–Jacobi quadrature,
//!   monic evaluation, Hankel determinants, zeros — the ground truth.
//! - [`bessel`]: J, Y, I, K of real order, derivatives, zeros of J.
//! - [`szego_maps`]: φ, g, f, Szegő function D, W, c_n/d_n, phase ψ.
//! - [`rh_asymptotics`]: the explicit asymptotic predictions (outer, bulk,
//!   edge, recurrence coefficients, Hankel) and the parametrix/R-matrix
//!   consistency checks.
//! - [`convergence`]: log–log rate fits and the report type emitted by the
//!   CLI.

pub mod bessel;
pub mod convergence;
pub mod error;
pub mod ortho_oracle;
pub mod rh_asymptotics;
pub mod spectral;
pub mod szego_maps;
pub mod weight;

pub use error::{Error, Result};
