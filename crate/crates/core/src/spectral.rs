//! Chebyshev-series and contour-quadrature primitives.
//!
//! Everything downstream (weight validation, Szegő functions, endpoint
//! coefficients) is built on three tools: Chebyshev interpolation at
//! Lobatto points, Clenshaw evaluation, and trapezoid quadrature over
//! Bernstein ellipses. All are pure functions of their inputs.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Chebyshev-T coefficient vector a_0..a_m with a truncation-error estimate.
///
/// Convention: a_0 is the plain coefficient of T_0 (no halving), so the
/// represented function is Σ_{k=0}^{m} a_k T_k(x).
#[derive(Debug, Clone, PartialEq)]
pub struct ChebSeries {
    /// Coefficients a_0..a_m.
    pub coeffs: Vec<f64>,
    /// Estimate of the truncation error on [−1,1].
    pub tail_bound: f64,
}

impl ChebSeries {
    /// Build a series from explicit coefficients with a stated tail bound.
    pub fn new(coeffs: Vec<f64>, tail_bound: f64) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Parameter("ChebSeries needs at least one coefficient".into()));
        }
        if coeffs.iter().any(|c| !c.is_finite()) || !tail_bound.is_finite() || tail_bound < 0.0 {
            return Err(Error::Parameter("ChebSeries coefficients and tail bound must be finite, tail_bound ≥ 0".into()));
        }
        Ok(Self { coeffs, tail_bound })
    }

    /// Degree m of the series.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }
}

/// Bernstein ellipse {(ρe^{iθ} + ρ^{−1}e^{−iθ})/2 : θ ∈ [0,2π)} discretized
/// by `nodes` equispaced trapezoid points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipseContour {
    /// Ellipse parameter ρ > 1.
    pub rho: f64,
    /// Number of trapezoid nodes (even, ≥ 16).
    pub nodes: usize,
}

impl EllipseContour {
    pub fn new(rho: f64, nodes: usize) -> Result<Self> {
        if !(rho > 1.0) || !rho.is_finite() {
            return Err(Error::Parameter(format!("ellipse parameter rho must be > 1, got {rho}")));
        }
        if nodes < 16 || nodes % 2 != 0 {
            return Err(Error::Parameter(format!("ellipse nodes must be even and ≥ 16, got {nodes}")));
        }
        Ok(Self { rho, nodes })
    }

    /// Default contour: ρ = 1.3 with 128 nodes.
    pub fn default_contour() -> Self {
        Self { rho: 1.3, nodes: 128 }
    }

    /// Point ζ(θ) = (ρe^{iθ} + ρ^{−1}e^{−iθ})/2 on the ellipse.
    pub fn point(&self, theta: f64) -> Complex64 {
        let u = self.rho * Complex64::new(theta.cos(), theta.sin());
        (u + 1.0 / u) * 0.5
    }

    /// Derivative dζ/dθ at θ.
    pub fn tangent(&self, theta: f64) -> Complex64 {
        let i = Complex64::new(0.0, 1.0);
        let u = self.rho * Complex64::new(theta.cos(), theta.sin());
        i * (u - 1.0 / u) * 0.5
    }

    /// Semi-axes (major, minor) of the ellipse.
    pub fn semi_axes(&self) -> (f64, f64) {
        ((self.rho + 1.0 / self.rho) * 0.5, (self.rho - 1.0 / self.rho) * 0.5)
    }
}

/// Interpolate f on [−1,1] by a degree-m Chebyshev series.
///
/// Samples f at the Chebyshev–Lobatto points cos(jπ/m), j = 0..m, and forms
/// the interpolant coefficients by direct cosine sums (O(m²), which is ample
/// at desk scale). The tail bound is 2 × max |a_k| over the last
/// max(2, m/4) coefficients.
pub fn cheb_transform<F: Fn(f64) -> f64>(f: F, m: usize) -> Result<ChebSeries> {
    if m == 0 {
        let v = f(0.0);
        if !v.is_finite() {
            return Err(Error::Evaluation("function sample is not finite".into()));
        }
        return ChebSeries::new(vec![v], 0.0);
    }
    let mf = m as f64;
    let samples: Vec<f64> = (0..=m).map(|j| f((j as f64 * std::f64::consts::PI / mf).cos())).collect();
    if samples.iter().any(|v| !v.is_finite()) {
        return Err(Error::Evaluation("function sample is not finite".into()));
    }
    let mut coeffs = vec![0.0; m + 1];
    for (k, c) in coeffs.iter_mut().enumerate() {
        let mut s = 0.0;
        for (j, &fj) in samples.iter().enumerate() {
            let w = if j == 0 || j == m { 0.5 } else { 1.0 };
            s += w * fj * (k as f64 * j as f64 * std::f64::consts::PI / mf).cos();
        }
        let edge = if k == 0 || k == m { 0.5 } else { 1.0 };
        *c = edge * 2.0 * s / mf;
    }
    let window = (m / 4).max(2).min(m + 1);
    let tail = coeffs[coeffs.len() - window..]
        .iter()
        .fold(0.0f64, |acc, c| acc.max(c.abs()));
    ChebSeries::new(coeffs, 2.0 * tail)
}

/// Evaluate Σ a_k T_k(x) by the Clenshaw backward recurrence.
pub fn clenshaw_eval(s: &ChebSeries, x: f64) -> Result<f64> {
    if !(-1.0..=1.0).contains(&x) {
        return Err(Error::Domain(format!("clenshaw_eval requires |x| ≤ 1, got {x}")));
    }
    let mut b1 = 0.0;
    let mut b2 = 0.0;
    for &a in s.coeffs.iter().skip(1).rev() {
        let b0 = a + 2.0 * x * b1 - b2;
        b2 = b1;
        b1 = b0;
    }
    Ok(s.coeffs[0] + x * b1 - b2)
}

/// Chebyshev polynomial of the second kind U_k(x).
pub fn cheb_u_eval(k: usize, x: f64) -> Result<f64> {
    if !(-1.0..=1.0).contains(&x) {
        return Err(Error::Domain(format!("cheb_u_eval requires |x| ≤ 1, got {x}")));
    }
    let mut u_prev = 1.0;
    let mut u_curr = 2.0 * x;
    match k {
        0 => Ok(u_prev),
        1 => Ok(u_curr),
        _ => {
            for _ in 1..k {
                let u_next = 2.0 * x * u_curr - u_prev;
                u_prev = u_curr;
                u_curr = u_next;
            }
            Ok(u_curr)
        }
    }
}

/// Contour integral (1/2πi)∮ F(ζ)dζ over the ellipse by the trapezoid rule.
///
/// Spectrally accurate for F analytic in a neighborhood of the contour.
pub fn contour_integral<F: Fn(Complex64) -> Complex64>(f: F, c: &EllipseContour) -> Result<Complex64> {
    let n = c.nodes;
    let dtheta = 2.0 * std::f64::consts::PI / n as f64;
    let mut acc = Complex64::new(0.0, 0.0);
    for j in 0..n {
        let theta = j as f64 * dtheta;
        let v = f(c.point(theta)) * c.tangent(theta);
        if !v.re.is_finite() || !v.im.is_finite() {
            return Err(Error::Evaluation(format!("contour integrand not finite at theta = {theta}")));
        }
        acc += v;
    }
    let two_pi_i = Complex64::new(0.0, 2.0 * std::f64::consts::PI);
    Ok(acc * dtheta / two_pi_i)
}

/// (z²−1)^{1/2} on the branch that behaves like z at infinity, realized as
/// √(z−1)·√(z+1) with principal roots. Used uniformly across the library.
pub fn sqrt_z2m1(z: Complex64) -> Complex64 {
    (z - 1.0).sqrt() * (z + 1.0).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b} (tol {tol})");
    }

    #[test]
    fn transform_constant() {
        let s = cheb_transform(|_| 1.0, 8).unwrap();
        assert_close(s.coeffs[0], 1.0, 1e-14);
        for &c in &s.coeffs[1..] {
            assert_close(c, 0.0, 1e-14);
        }
    }

    #[test]
    fn transform_linear() {
        let s = cheb_transform(|x| x, 8).unwrap();
        assert_close(s.coeffs[1], 1.0, 1e-14);
        for (k, &c) in s.coeffs.iter().enumerate() {
            if k != 1 {
                assert_close(c, 0.0, 1e-14);
            }
        }
    }

    #[test]
    fn transform_square() {
        // x² = (T_0 + T_2)/2
        let s = cheb_transform(|x| x * x, 8).unwrap();
        assert_close(s.coeffs[0], 0.5, 1e-14);
        assert_close(s.coeffs[2], 0.5, 1e-14);
        assert_close(s.coeffs[1], 0.0, 1e-14);
        assert_close(s.coeffs[3], 0.0, 1e-14);
    }

    #[test]
    fn transform_rejects_non_finite() {
        assert!(cheb_transform(|x| 1.0 / (x - 1.0), 8).is_err());
    }

    #[test]
    fn clenshaw_t3() {
        // T_3(cos 60°) = cos 180° = −1
        let s = ChebSeries::new(vec![0.0, 0.0, 0.0, 1.0], 0.0).unwrap();
        assert_close(clenshaw_eval(&s, 0.5).unwrap(), -1.0, 1e-14);
    }

    #[test]
    fn clenshaw_t0() {
        let s = ChebSeries::new(vec![1.0], 0.0).unwrap();
        for x in [-1.0, -0.3, 0.0, 0.7, 1.0] {
            assert_close(clenshaw_eval(&s, x).unwrap(), 1.0, 1e-14);
        }
    }

    #[test]
    fn clenshaw_square() {
        let s = ChebSeries::new(vec![0.5, 0.0, 0.5], 0.0).unwrap();
        assert_close(clenshaw_eval(&s, 0.3).unwrap(), 0.09, 1e-14);
    }

    #[test]
    fn clenshaw_rejects_outside() {
        let s = ChebSeries::new(vec![1.0], 0.0).unwrap();
        assert!(clenshaw_eval(&s, 1.5).is_err());
    }

    #[test]
    fn cheb_u_values() {
        assert_close(cheb_u_eval(0, 0.3).unwrap(), 1.0, 1e-14);
        assert_close(cheb_u_eval(1, 0.5).unwrap(), 1.0, 1e-14);
        assert_close(cheb_u_eval(2, 0.0).unwrap(), -1.0, 1e-14);
        // U_k(cos θ) = sin((k+1)θ)/sin θ
        let theta: f64 = 0.7;
        for k in 0..12usize {
            let want = (((k + 1) as f64) * theta).sin() / theta.sin();
            assert_close(cheb_u_eval(k, theta.cos()).unwrap(), want, 1e-12);
        }
    }

    #[test]
    fn transform_then_eval_reproduces_function() {
        let f = |x: f64| (2.0 * x).sin() * (x * x).exp();
        let s = cheb_transform(f, 48).unwrap();
        for j in 0..=100 {
            let x = -1.0 + 2.0 * j as f64 / 100.0;
            let err = (clenshaw_eval(&s, x).unwrap() - f(x)).abs();
            assert!(err <= s.tail_bound + 1e-13, "err {err} at x={x}");
        }
    }

    #[test]
    fn contour_pole_outside() {
        let c = EllipseContour::new(1.2, 128).unwrap();
        let v = contour_integral(|z| 1.0 / (z - 2.0), &c).unwrap();
        assert!(v.norm() < 1e-10, "{v}");
    }

    #[test]
    fn contour_pole_inside() {
        let c = EllipseContour::new(1.2, 128).unwrap();
        let v = contour_integral(|z| 1.0 / (z - 0.3), &c).unwrap();
        assert!((v - 1.0).norm() < 1e-10, "{v}");
    }

    #[test]
    fn contour_c0_integrand() {
        // F(ζ) = 0.5ζ/((ζ²−1)^{1/2}(ζ−1)) ~ 0.5/ζ at infinity, so the
        // integral equals the residue at infinity, 0.5.
        let c = EllipseContour::new(1.3, 128).unwrap();
        let v = contour_integral(|z| 0.5 * z / (sqrt_z2m1(z) * (z - 1.0)), &c).unwrap();
        assert!((v - 0.5).norm() < 1e-9, "{v}");
    }

    #[test]
    fn contour_rho_invariance() {
        let f = |z: Complex64| (z * 0.5).exp() / (sqrt_z2m1(z) * (z + 1.0));
        let a = contour_integral(f, &EllipseContour::new(1.2, 256).unwrap()).unwrap();
        let b = contour_integral(f, &EllipseContour::new(1.4, 256).unwrap()).unwrap();
        assert!((a - b).norm() < 1e-9, "{a} vs {b}");
    }

    #[test]
    fn contour_node_doubling() {
        let f = |z: Complex64| 1.0 / (z - 0.3) + (z * z).exp() / (z + 0.4);
        let c1 = EllipseContour::new(1.25, 128).unwrap();
        let c2 = EllipseContour::new(1.25, 256).unwrap();
        let a = contour_integral(f, &c1).unwrap();
        let b = contour_integral(f, &c2).unwrap();
        assert!((a - b).norm() < 1e-11);
    }

    #[test]
    fn sqrt_branch_behaves_like_z() {
        for z in [
            Complex64::new(1e6, 0.0),
            Complex64::new(-1e6, 1.0),
            Complex64::new(0.0, 1e6),
            Complex64::new(-300.0, -400.0),
        ] {
            let r = sqrt_z2m1(z) / z;
            assert!((r - 1.0).norm() < 1e-5, "z={z} r={r}");
        }
        // at z = 2: √3
        assert_close(sqrt_z2m1(Complex64::new(2.0, 0.0)).re, 3.0f64.sqrt(), 1e-14);
    }
}
