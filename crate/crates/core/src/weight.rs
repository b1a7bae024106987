//! Modified Jacobi weights w(x) = (1−x)^α (1+x)^β h(x) on [−1,1].
//!
//! The analytic factor h is restricted to three families — a positive
//! constant, exp(q(x)) for a real polynomial q, and a strictly positive real
//! polynomial p(x) — all entire, so w extends analytically to any
//! neighborhood of [−1,1]. Validation certifies Re h > 0 on the Bernstein
//! ellipse with ρ = 1 + margin (a practical sufficient check that log h is
//! single-valued there) and strict positivity on [−1,1].

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::spectral::{cheb_transform, clenshaw_eval, ChebSeries, EllipseContour};

/// Family of the analytic factor h.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HKind {
    /// h(x) = c for a positive constant c (coeffs = [c]).
    Constant,
    /// h(x) = exp(q(x)) for a real polynomial q (coeffs ascending in x).
    ExpPoly,
    /// h(x) = p(x) for a real polynomial p, strictly positive on [−1,1].
    PositivePoly,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct HSpec {
    kind: HKind,
    coeffs: Vec<f64>,
}

fn default_margin() -> f64 {
    0.5
}

/// A modified Jacobi weight (1−x)^α(1+x)^β h(x); the single source of truth
/// for a weight. Serializes to/from the CLI JSON schema
/// `{"alpha":…, "beta":…, "h":{"kind":…, "coeffs":[…]}, "margin":…}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WeightSpec {
    pub alpha: f64,
    pub beta: f64,
    h: HSpec,
    /// Analyticity margin r ∈ (0,1): h is certified on the ellipse ρ = 1 + r.
    #[serde(default = "default_margin")]
    pub margin: f64,
}

impl WeightSpec {
    /// Build and validate a weight spec.
    pub fn new(alpha: f64, beta: f64, h_kind: HKind, h_params: Vec<f64>) -> Result<Self> {
        Self::with_margin(alpha, beta, h_kind, h_params, default_margin())
    }

    /// Build and validate a weight spec with an explicit analyticity margin.
    pub fn with_margin(alpha: f64, beta: f64, h_kind: HKind, h_params: Vec<f64>, margin: f64) -> Result<Self> {
        let spec = Self {
            alpha,
            beta,
            h: HSpec { kind: h_kind, coeffs: h_params },
            margin,
        };
        validate(&spec)?;
        Ok(spec)
    }

    /// Legendre weight w ≡ 1.
    pub fn legendre() -> Self {
        Self::new(0.0, 0.0, HKind::Constant, vec![1.0]).unwrap()
    }

    /// Chebyshev weight (1−x²)^{−1/2}.
    pub fn chebyshev() -> Self {
        Self::new(-0.5, -0.5, HKind::Constant, vec![1.0]).unwrap()
    }

    /// Parse and validate from the CLI JSON schema.
    pub fn from_json(json: &str) -> Result<Self> {
        let spec: Self = serde_json::from_str(json)
            .map_err(|e| Error::Parameter(format!("weight spec JSON: {e}")))?;
        validate(&spec)?;
        Ok(spec)
    }

    pub fn h_kind(&self) -> HKind {
        self.h.kind
    }

    pub fn h_params(&self) -> &[f64] {
        &self.h.coeffs
    }

    /// h(x) for real x.
    pub fn h_eval(&self, x: f64) -> f64 {
        match self.h.kind {
            HKind::Constant => self.h.coeffs[0],
            HKind::ExpPoly => poly_eval(&self.h.coeffs, x).exp(),
            HKind::PositivePoly => poly_eval(&self.h.coeffs, x),
        }
    }

    /// Analytic continuation of h to complex z (entire for all families).
    pub fn h_continuation(&self, z: Complex64) -> Complex64 {
        match self.h.kind {
            HKind::Constant => Complex64::new(self.h.coeffs[0], 0.0),
            HKind::ExpPoly => poly_eval_c(&self.h.coeffs, z).exp(),
            HKind::PositivePoly => poly_eval_c(&self.h.coeffs, z),
        }
    }

    /// log h(x) for real x.
    pub fn log_h_eval(&self, x: f64) -> f64 {
        match self.h.kind {
            HKind::Constant => self.h.coeffs[0].ln(),
            HKind::ExpPoly => poly_eval(&self.h.coeffs, x),
            HKind::PositivePoly => poly_eval(&self.h.coeffs, x).ln(),
        }
    }

    /// True when the weight is even: α = β and h(−x) = h(x) within roundoff.
    pub fn is_symmetric(&self) -> bool {
        if self.alpha != self.beta {
            return false;
        }
        let odd_free = |coeffs: &[f64]| coeffs.iter().skip(1).step_by(2).all(|&c| c == 0.0);
        match self.h.kind {
            HKind::Constant => true,
            HKind::ExpPoly | HKind::PositivePoly => odd_free(&self.h.coeffs),
        }
    }
}

/// Chebyshev series of log h, with the invariant exp(series) = h on [−1,1].
#[derive(Debug, Clone)]
pub struct LogHSeries {
    pub series: ChebSeries,
}

impl LogHSeries {
    /// Evaluate log h at x ∈ [−1,1].
    pub fn eval(&self, x: f64) -> Result<f64> {
        clenshaw_eval(&self.series, x)
    }
}

fn poly_eval(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}

fn poly_eval_c(coeffs: &[f64], z: Complex64) -> Complex64 {
    coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
}

fn poly_degree(coeffs: &[f64]) -> usize {
    coeffs.iter().rposition(|&c| c != 0.0).unwrap_or(0)
}

/// Validate a weight spec: α, β > −1, margin ∈ (0,1), h strictly positive on
/// [−1,1] and Re h > 0 on the validation ellipse ρ = 1 + margin.
pub fn validate(spec: &WeightSpec) -> Result<()> {
    if !(spec.alpha > -1.0) || !spec.alpha.is_finite() {
        return Err(Error::Parameter(format!("alpha must be > -1, got {}", spec.alpha)));
    }
    if !(spec.beta > -1.0) || !spec.beta.is_finite() {
        return Err(Error::Parameter(format!("beta must be > -1, got {}", spec.beta)));
    }
    if !(spec.margin > 0.0 && spec.margin < 1.0) {
        return Err(Error::Parameter(format!("margin must lie in (0,1), got {}", spec.margin)));
    }
    if spec.h.coeffs.is_empty() || spec.h.coeffs.iter().any(|c| !c.is_finite()) {
        return Err(Error::Parameter("h coefficients must be nonempty and finite".into()));
    }
    if spec.h.kind == HKind::Constant {
        if spec.h.coeffs.len() != 1 {
            return Err(Error::Parameter("constant h takes exactly one coefficient".into()));
        }
        if spec.h.coeffs[0] <= 0.0 {
            return Err(Error::Analyticity(format!("constant h must be positive, got {}", spec.h.coeffs[0])));
        }
        return Ok(());
    }
    if spec.h.kind == HKind::PositivePoly {
        // Strict positivity on [−1,1], sampled densely.
        for j in 0..2048 {
            let x = -1.0 + 2.0 * j as f64 / 2047.0;
            if poly_eval(&spec.h.coeffs, x) <= 0.0 {
                return Err(Error::Analyticity(format!("h(x) ≤ 0 at x = {x}")));
            }
        }
    }
    // Re h > 0 on the validation ellipse, so log h is single-valued inside.
    let ellipse = EllipseContour { rho: 1.0 + spec.margin, nodes: 512 };
    for j in 0..ellipse.nodes {
        let theta = 2.0 * std::f64::consts::PI * j as f64 / ellipse.nodes as f64;
        let z = ellipse.point(theta);
        let h = spec.h_continuation(z);
        if !h.re.is_finite() || !h.im.is_finite() || h.re <= 0.0 {
            return Err(Error::Analyticity(format!("Re h ≤ 0 on the validation ellipse at ζ = {z}")));
        }
    }
    Ok(())
}

/// w(x) = (1−x)^α(1+x)^β h(x) for x ∈ (−1,1).
pub fn weight_eval(spec: &WeightSpec, x: f64) -> Result<f64> {
    if !(-1.0 < x && x < 1.0) {
        return Err(Error::Domain(format!("weight_eval requires x in (-1,1), got {x}")));
    }
    Ok((1.0 - x).powf(spec.alpha) * (1.0 + x).powf(spec.beta) * spec.h_eval(x))
}

/// Analytic continuation (1−z)^α(1+z)^β h(z) with principal branches of
/// (1−z)^α (cut [1,∞)) and (1+z)^β (cut (−∞,−1]).
pub fn weight_continuation(spec: &WeightSpec, z: Complex64) -> Result<Complex64> {
    if z.im == 0.0 && z.re.abs() >= 1.0 {
        return Err(Error::Branch(format!("z = {z} lies on a branch cut of the weight")));
    }
    let one_minus = (1.0 - z).ln() * spec.alpha;
    let one_plus = (1.0 + z).ln() * spec.beta;
    Ok((one_minus + one_plus).exp() * spec.h_continuation(z))
}

/// Chebyshev series of log h at degree m. For constant and exp_poly h the
/// series is exact (tail bound 0); for positive_poly it is the degree-m
/// interpolant of log p.
pub fn logh_series(spec: &WeightSpec, m: usize) -> Result<LogHSeries> {
    let series = match spec.h.kind {
        HKind::Constant => ChebSeries::new(vec![spec.h.coeffs[0].ln()], 0.0)?,
        HKind::ExpPoly => {
            let deg = poly_degree(&spec.h.coeffs);
            let mut s = cheb_transform(|x| poly_eval(&spec.h.coeffs, x), deg.max(1))?;
            s.tail_bound = 0.0;
            s
        }
        HKind::PositivePoly => cheb_transform(|x| poly_eval(&spec.h.coeffs, x).ln(), m.max(4))?,
    };
    Ok(LogHSeries { series })
}

/// Default log h degree for the positive_poly family.
pub const LOGH_DEGREE_DEFAULT: usize = 64;
