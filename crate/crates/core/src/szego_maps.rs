//! Scalar analytic machinery: the conformal map φ, the functions g and f,
//! the Szegő function D(z;w) and D_∞, the boundary square roots W and W̃,
//! the endpoint coefficient sequences c_n and d_n, and the phase ψ(x).
//!
//! The h-dependent parts are evaluated spectrally from the Chebyshev series
//! log h = Σ a_k T_k via the resolvent identity
//! ∫ T_k(t)/((z−t)√(1−t²)) dt = π/((z²−1)^{1/2} φ(z)^k), which also yields
//! the principal-value identity PV∫ T_k(t)/((t−x)√(1−t²)) dt = π U_{k−1}(x)
//! for ψ, and the generating function Σ_{k≥1} a_k U_{k−1}(z) whose Taylor
//! coefficients at ±1 are exactly c_n and d_n.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::spectral::{cheb_u_eval, contour_integral, sqrt_z2m1, EllipseContour};
use crate::weight::{logh_series, HKind, LogHSeries, WeightSpec, LOGH_DEGREE_DEFAULT};

/// Precomputed Szegő data for a weight: log h series, D_∞, and the endpoint
/// coefficient arrays c_0..c_m, d_0..d_m.
#[derive(Debug, Clone)]
pub struct SzegoData {
    pub spec: WeightSpec,
    pub logh: LogHSeries,
    pub d_inf: f64,
    pub c: Vec<f64>,
    pub d: Vec<f64>,
}

/// Default length of the c/d arrays.
pub const CD_TERMS_DEFAULT: usize = 32;

impl SzegoData {
    /// Build Szegő data with default degrees (log h degree 64, 33 c/d terms).
    pub fn new(spec: &WeightSpec) -> Result<Self> {
        Self::with_terms(spec, CD_TERMS_DEFAULT)
    }

    /// Build Szegő data with c_0..c_m, d_0..d_m.
    pub fn with_terms(spec: &WeightSpec, m: usize) -> Result<Self> {
        let logh = logh_series(spec, LOGH_DEGREE_DEFAULT)?;
        let d_inf = d_inf_from(spec, &logh);
        let (c, d) = cd_coefficients_spectral(&logh, m);
        Ok(Self { spec: spec.clone(), logh, d_inf, c, d })
    }
}

fn d_inf_from(spec: &WeightSpec, logh: &LogHSeries) -> f64 {
    let a0 = logh.series.coeffs[0];
    (-0.5 * (spec.alpha + spec.beta) * 2.0f64.ln() + 0.5 * a0).exp()
}

fn on_interval(z: Complex64) -> bool {
    z.im == 0.0 && z.re.abs() <= 1.0
}

/// φ(z) = z + (z²−1)^{1/2}, the conformal map onto the exterior of the unit
/// circle (branch ~ z at infinity).
pub fn phi(z: Complex64) -> Result<Complex64> {
    if on_interval(z) {
        return Err(Error::Branch(format!("phi is undefined on [-1,1]; z = {z} (use phi_boundary)")));
    }
    Ok(z + sqrt_z2m1(z))
}

/// φ̃(z) = φ(−z) = −φ(z).
pub fn phi_tilde(z: Complex64) -> Result<Complex64> {
    Ok(-phi(z)?)
}

/// Which side of a cut a boundary value is taken from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Plus,
    Minus,
}

/// Boundary values φ_±(x) = x ± i√(1−x²) = exp(±i arccos x) on (−1,1).
pub fn phi_boundary(x: f64, side: Side) -> Result<Complex64> {
    if !(-1.0 < x && x < 1.0) {
        return Err(Error::Domain(format!("phi_boundary requires x in (-1,1), got {x}")));
    }
    let s = (1.0 - x * x).sqrt();
    Ok(match side {
        Side::Plus => Complex64::new(x, s),
        Side::Minus => Complex64::new(x, -s),
    })
}

/// g(z) = log φ(z) on C∖(−∞,1] and f(z) = g(z)²/4.
pub fn g_f_eval(z: Complex64) -> Result<(Complex64, Complex64)> {
    if z.im == 0.0 && z.re <= 1.0 {
        return Err(Error::Branch(format!("g is defined on C minus (-inf,1]; z = {z}")));
    }
    // φ avoids (−∞,0] there, so the principal log realizes the branch.
    let g = phi(z)?.ln();
    Ok((g, g * g * 0.25))
}

/// g̃(z) = log φ̃(z) on C∖[−1,∞) and f̃(z) = g̃(z)²/4.
pub fn g_f_tilde_eval(z: Complex64) -> Result<(Complex64, Complex64)> {
    if z.im == 0.0 && z.re >= -1.0 {
        return Err(Error::Branch(format!("g-tilde is defined on C minus [-1,inf); z = {z}")));
    }
    let g = phi(-z)?.ln();
    Ok((g, g * g * 0.25))
}

/// The continuation of f to (−1,1): f(x) = −(arccos x)²/4.
pub fn f_interval(x: f64) -> Result<f64> {
    if !(-1.0 < x && x < 1.0) {
        return Err(Error::Domain(format!("f_interval requires x in (-1,1), got {x}")));
    }
    let t = x.acos();
    Ok(-t * t * 0.25)
}

/// log h continued to complex z (single-valued inside the validated ellipse).
pub fn log_h_continuation(spec: &WeightSpec, z: Complex64) -> Complex64 {
    match spec.h_kind() {
        HKind::Constant => Complex64::new(spec.h_params()[0].ln(), 0.0),
        HKind::ExpPoly => spec
            .h_params()
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c),
        // Re p > 0 is certified on the ellipse, so the principal log is safe.
        HKind::PositivePoly => spec.h_continuation(z).ln(),
    }
}

/// Σ_{k≥1} a_k φ(z)^{−k}, the h-resolvent sum (|φ| > 1 off [−1,1]).
fn h_resolvent_sum(logh: &LogHSeries, phi_z: Complex64) -> Complex64 {
    let w = 1.0 / phi_z;
    let mut pw = Complex64::new(1.0, 0.0);
    let mut s = Complex64::new(0.0, 0.0);
    for &a in logh.series.coeffs.iter().skip(1) {
        pw *= w;
        s += a * pw;
    }
    s
}

/// Szegő function D(z;w) off [−1,1]:
/// (z−1)^{α/2}(z+1)^{β/2} φ(z)^{−(α+β)/2} · exp(a_0/2 + ½ Σ_{k≥1} a_k φ^{−k}).
pub fn szego_d(data: &SzegoData, z: Complex64) -> Result<Complex64> {
    if on_interval(z) {
        return Err(Error::Branch(format!("szego_d is undefined on [-1,1]; z = {z}")));
    }
    let spec = &data.spec;
    let p = phi(z)?;
    let jacobi = (0.5 * spec.alpha * (z - 1.0).ln() + 0.5 * spec.beta * (z + 1.0).ln()
        - 0.5 * (spec.alpha + spec.beta) * p.ln())
    .exp();
    let a0 = data.logh.series.coeffs[0];
    let h_factor = (0.5 * a0 + 0.5 * h_resolvent_sum(&data.logh, p)).exp();
    Ok(jacobi * h_factor)
}

/// D_∞ = lim_{z→∞} D(z) = 2^{−(α+β)/2} e^{a_0/2}.
pub fn szego_d_inf(data: &SzegoData) -> f64 {
    data.d_inf
}

/// Boundary value D_+(x) (side = Plus) or D_−(x), by ε-offset evaluation at
/// x ± iε with one Richardson step (ε = 1e−8, error O(ε²)).
pub fn szego_d_boundary(data: &SzegoData, x: f64, side: Side) -> Result<Complex64> {
    if !(-1.0 < x && x < 1.0) {
        return Err(Error::Domain(format!("szego_d_boundary requires x in (-1,1), got {x}")));
    }
    let eps = match side {
        Side::Plus => 1e-8,
        Side::Minus => -1e-8,
    };
    let d1 = szego_d(data, Complex64::new(x, eps))?;
    let d2 = szego_d(data, Complex64::new(x, 0.5 * eps))?;
    Ok(2.0 * d2 - d1)
}

/// Endpoint coefficients by the contour-integral definition:
/// c_n = (1/2πi)∮ log h(ζ)/((ζ²−1)^{1/2}(ζ−1)^{n+1}) dζ, d_n with (ζ+1)^{n+1}.
///
/// Well conditioned only for small n (the integrand grows like
/// |ζ∓1|^{−(n+1)} near the ellipse vertex); the spectral route below is used
/// for full arrays.
pub fn cd_coefficients(spec: &WeightSpec, m: usize, contour: &EllipseContour) -> Result<(Vec<f64>, Vec<f64>)> {
    let (amaj, _) = contour.semi_axes();
    if amaj >= 1.0 + spec.margin {
        return Err(Error::Parameter(format!(
            "contour rho = {} exceeds the weight's analyticity margin {}",
            contour.rho, spec.margin
        )));
    }
    let mut c = Vec::with_capacity(m + 1);
    let mut d = Vec::with_capacity(m + 1);
    for n in 0..=m {
        let cn = contour_integral(
            |z| log_h_continuation(spec, z) / (sqrt_z2m1(z) * (z - 1.0).powi(n as i32 + 1)),
            contour,
        )?;
        let dn = contour_integral(
            |z| log_h_continuation(spec, z) / (sqrt_z2m1(z) * (z + 1.0).powi(n as i32 + 1)),
            contour,
        )?;
        c.push(cn.re);
        d.push(dn.re);
    }
    Ok((c, d))
}

/// Endpoint coefficients by the spectral route: with log h = Σ a_k T_k, the
/// generating function is F(z) = Σ_{k≥1} a_k U_{k−1}(z) and
/// c_n = F^{(n)}(1)/n!, d_n = F^{(n)}(−1)/n!, using
/// U_{k−1}^{(n)}(1)/n! = 2^n·C(k+n, k−1−n) and U(−x) parity.
pub fn cd_coefficients_spectral(logh: &LogHSeries, m: usize) -> (Vec<f64>, Vec<f64>) {
    let a = &logh.series.coeffs;
    let mut c = vec![0.0; m + 1];
    let mut d = vec![0.0; m + 1];
    for (n, (cn, dn)) in c.iter_mut().zip(d.iter_mut()).enumerate() {
        let two_n = 2.0f64.powi(n as i32);
        for (k, &ak) in a.iter().enumerate().skip(1) {
            if k < n + 1 {
                continue; // binomial C(k+n, k−1−n) vanishes
            }
            // C(k+n, 2n+1) as a running product
            let mut binom = 1.0f64;
            for j in 1..=(2 * n + 1) {
                binom *= (k as f64 - n as f64 - 1.0 + j as f64) / j as f64;
            }
            let term = ak * two_n * binom;
            *cn += term;
            *dn += if (k - 1 + n) % 2 == 0 { term } else { -term };
        }
    }
    (c, d)
}

/// Phase ψ(x) = ½(α(arccos x − π) + β arccos x)
///            + (√(1−x²)/2)·Σ_{k≥1} a_k U_{k−1}(x).
pub fn psi_phase(data: &SzegoData, x: f64) -> Result<f64> {
    if !(-1.0 < x && x < 1.0) {
        return Err(Error::Domain(format!("psi_phase requires x in (-1,1), got {x}")));
    }
    let theta = x.acos();
    let spec = &data.spec;
    let mut pv = 0.0;
    for (k, &a) in data.logh.series.coeffs.iter().enumerate().skip(1) {
        pv += a * cheb_u_eval(k - 1, x)?;
    }
    Ok(0.5 * (spec.alpha * (theta - std::f64::consts::PI) + spec.beta * theta)
        + 0.5 * (1.0 - x * x).sqrt() * pv)
}

/// ζ_{1,2}(x) = ±½ arccos x + ψ(x) + απ/2.
pub fn zeta_12(data: &SzegoData, x: f64) -> Result<(f64, f64)> {
    let theta = x.acos();
    let psi = psi_phase(data, x)?;
    let base = psi + 0.5 * data.spec.alpha * std::f64::consts::PI;
    Ok((0.5 * theta + base, -0.5 * theta + base))
}

/// W(z) = ((z−1)^α(z+1)^β h(z))^{1/2}, positive for z > 1, on U∖(−∞,1].
pub fn w_eval(spec: &WeightSpec, z: Complex64) -> Result<Complex64> {
    if z.im == 0.0 && z.re <= 1.0 {
        return Err(Error::Branch(format!("W is defined on U minus (-inf,1]; z = {z}")));
    }
    Ok((0.5 * (spec.alpha * (z - 1.0).ln() + spec.beta * (z + 1.0).ln() + log_h_continuation(spec, z))).exp())
}

/// W̃(z) = ((1−z)^α(−1−z)^β h(z))^{1/2}, positive for z < −1, on U∖[−1,∞).
pub fn w_tilde_eval(spec: &WeightSpec, z: Complex64) -> Result<Complex64> {
    if z.im == 0.0 && z.re >= -1.0 {
        return Err(Error::Branch(format!("W-tilde is defined on U minus [-1,inf); z = {z}")));
    }
    Ok((0.5 * (spec.alpha * (1.0 - z).ln() + spec.beta * (-1.0 - z).ln() + log_h_continuation(spec, z))).exp())
}

/// Boundary value W_±(x) on (−1,1), by ε-offset evaluation with one
/// Richardson step (same scheme as szego_d_boundary).
pub fn w_boundary(spec: &WeightSpec, x: f64, side: Side) -> Result<Complex64> {
    if !(-1.0 < x && x < 1.0) {
        return Err(Error::Domain(format!("w_boundary requires x in (-1,1), got {x}")));
    }
    let eps = match side {
        Side::Plus => 1e-8,
        Side::Minus => -1e-8,
    };
    let w1 = w_eval(spec, Complex64::new(x, eps))?;
    let w2 = w_eval(spec, Complex64::new(x, 0.5 * eps))?;
    Ok(2.0 * w2 - w1)
}

/// Right-endpoint expansion oracle for (W/D)²:
/// φ(z)^{α+β} · exp((z²−1)^{1/2} Σ_n c_n (z−1)^n), truncated at the stored m.
pub fn wd_expansion_check(data: &SzegoData, z: Complex64) -> Result<Complex64> {
    if (z - 1.0).norm() >= data.spec.margin {
        return Err(Error::Domain(format!("wd_expansion_check requires |z-1| < margin; z = {z}")));
    }
    let s = data.spec.alpha + data.spec.beta;
    let g = phi(z)?.ln();
    let mut series = Complex64::new(0.0, 0.0);
    let mut pw = Complex64::new(1.0, 0.0);
    for &cn in &data.c {
        series += cn * pw;
        pw *= z - 1.0;
    }
    Ok((s * g + sqrt_z2m1(z) * series).exp())
}

/// Left-endpoint expansion oracle for (W̃/D)²:
/// φ̃(z)^{α+β} · exp((z²−1)^{1/2} Σ_n d_n (z+1)^n).
pub fn wd_tilde_expansion_check(data: &SzegoData, z: Complex64) -> Result<Complex64> {
    if (z + 1.0).norm() >= data.spec.margin {
        return Err(Error::Domain(format!("wd_tilde_expansion_check requires |z+1| < margin; z = {z}")));
    }
    let s = data.spec.alpha + data.spec.beta;
    let g_tilde = phi(-z)?.ln();
    let mut series = Complex64::new(0.0, 0.0);
    let mut pw = Complex64::new(1.0, 0.0);
    for &dn in &data.d {
        series += dn * pw;
        pw *= z + 1.0;
    }
    Ok((s * g_tilde + sqrt_z2m1(z) * series).exp())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weight::weight_eval;

    fn assert_close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b} (tol {tol})");
    }

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn spec_test() -> WeightSpec {
        WeightSpec::new(0.3, -0.4, HKind::ExpPoly, vec![0.0, 0.5]).unwrap()
    }

    #[test]
    fn phi_values() {
        assert_close(phi(c(2.0, 0.0)).unwrap().re, 2.0 + 3.0f64.sqrt(), 1e-14);
        let big = phi(c(1e6, 0.0)).unwrap() / c(2e6, 0.0);
        assert!((big - 1.0).norm() < 1e-12);
        assert!((phi_tilde(c(-2.0, 0.0)).unwrap() - phi(c(2.0, 0.0)).unwrap()).norm() < 1e-14);
        assert!(phi(c(0.5, 0.0)).is_err());
    }

    #[test]
    fn phi_modulus_above_one() {
        for i in 0..40 {
            for j in 0..40 {
                let z = c(-3.0 + 6.0 * i as f64 / 39.0, -3.0 + 6.0 * j as f64 / 39.0);
                if on_interval(z) {
                    continue;
                }
                assert!(phi(z).unwrap().norm() > 1.0, "z={z}");
            }
        }
    }

    #[test]
    fn phi_boundary_values() {
        assert!((phi_boundary(0.0, Side::Plus).unwrap() - c(0.0, 1.0)).norm() < 1e-15);
        let x = 0.37;
        let prod = phi_boundary(x, Side::Plus).unwrap() * phi_boundary(x, Side::Minus).unwrap();
        assert!((prod - 1.0).norm() < 1e-15);
        for j in 0..100 {
            let x = -0.99 + 1.98 * j as f64 / 99.0;
            assert_close(phi_boundary(x, Side::Plus).unwrap().norm(), 1.0, 1e-14);
        }
    }

    #[test]
    fn f_behavior() {
        // f(z) = (z−1)/2 − (z−1)²/12 + (z−1)³/45 + O((z−1)⁴)
        let (_, f) = g_f_eval(c(1.01, 0.0)).unwrap();
        let u = 0.01f64;
        assert_close(f.re, u / 2.0 - u * u / 12.0 + u * u * u / 45.0, 1e-9);
        assert_close(f.im, 0.0, 1e-12);
        assert_close(f_interval(0.0).unwrap(), -std::f64::consts::PI.powi(2) / 16.0, 1e-14);
        // continuity across 1 along the interval
        let fi = f_interval(1.0 - 1e-6).unwrap();
        assert_close(fi, -0.5e-6, 1e-9);
        // g = 2√f on (1, 1+margin)
        for &x in &[1.05, 1.2, 1.4] {
            let (g, f) = g_f_eval(c(x, 0.0)).unwrap();
            assert!((g - 2.0 * f.sqrt()).norm() < 1e-13, "x={x}");
        }
    }

    #[test]
    fn g_tilde_reflection() {
        let z = c(-1.7, 0.4);
        let (gt, ft) = g_f_tilde_eval(z).unwrap();
        let (g, f) = g_f_eval(-z).unwrap();
        assert!((gt - g).norm() < 1e-14);
        assert!((ft - f).norm() < 1e-14);
        assert!(g_f_tilde_eval(c(0.0, 0.0)).is_err());
    }

    #[test]
    fn szego_d_legendre_and_chebyshev() {
        let leg = SzegoData::new(&WeightSpec::legendre()).unwrap();
        assert_close(leg.d_inf, 1.0, 1e-15);
        for z in [c(2.0, 0.0), c(0.3, 1.1), c(-2.5, -0.4)] {
            assert!((szego_d(&leg, z).unwrap() - 1.0).norm() < 1e-14, "z={z}");
        }
        let cheb = SzegoData::new(&WeightSpec::chebyshev()).unwrap();
        assert_close(cheb.d_inf, 2.0f64.sqrt(), 1e-15);
    }

    #[test]
    fn szego_d_h_factor() {
        // h = exp(γx), α=β=0: D(z) = exp((γ/2)φ^{−1})
        let spec = WeightSpec::new(0.0, 0.0, HKind::ExpPoly, vec![0.0, 0.8]).unwrap();
        let data = SzegoData::new(&spec).unwrap();
        assert_close(data.d_inf, 1.0, 1e-15);
        for z in [c(1.5, 0.2), c(-0.3, 0.9)] {
            let want = (0.4 / phi(z).unwrap()).exp();
            assert!((szego_d(&data, z).unwrap() - want).norm() < 1e-14, "z={z}");
        }
    }

    #[test]
    fn szego_jump_and_phase() {
        let data = SzegoData::new(&spec_test()).unwrap();
        for j in 1..50 {
            let x = -0.96 + 1.92 * j as f64 / 50.0;
            let w = weight_eval(&data.spec, x).unwrap();
            let dp = szego_d_boundary(&data, x, Side::Plus).unwrap();
            let dm = szego_d_boundary(&data, x, Side::Minus).unwrap();
            assert!(((dp * dm - w) / w).norm() < 1e-11, "jump at x={x}");
            let want = w.sqrt() * (-Complex64::i() * psi_phase(&data, x).unwrap()).exp();
            assert!((dp - want).norm() < 1e-9, "phase at x={x}");
        }
    }

    #[test]
    fn cd_trivial_and_exp() {
        let leg = SzegoData::new(&WeightSpec::legendre()).unwrap();
        assert!(leg.c.iter().chain(leg.d.iter()).all(|&v| v.abs() < 1e-15));

        let data = SzegoData::new(&spec_test()).unwrap();
        assert_close(data.c[0], 0.5, 1e-13);
        assert_close(data.d[0], 0.5, 1e-13);
        assert!(data.c[1..].iter().all(|&v| v.abs() < 1e-13));
        assert!(data.d[1..].iter().all(|&v| v.abs() < 1e-13));
    }

    #[test]
    fn cd_contour_matches_spectral() {
        // h = exp(x²): F(z) = a_2·U_1 = z, so c = (1, 1, 0, …), d = (−1, 1, 0, …)
        let spec = WeightSpec::new(0.0, 0.0, HKind::ExpPoly, vec![0.0, 0.0, 1.0]).unwrap();
        let (c_ct, d_ct) = cd_coefficients(&spec, 1, &EllipseContour::new(1.3, 512).unwrap()).unwrap();
        let logh = logh_series(&spec, 8).unwrap();
        let (c_sp, d_sp) = cd_coefficients_spectral(&logh, 1);
        for n in 0..=1 {
            assert_close(c_ct[n], c_sp[n], 1e-9);
            assert_close(d_ct[n], d_sp[n], 1e-9);
        }
        assert_close(c_sp[0], 1.0, 1e-13);
        assert_close(c_sp[1], 1.0, 1e-13);
        assert_close(d_sp[0], -1.0, 1e-13);
        assert_close(d_sp[1], 1.0, 1e-13);

        // positive_poly cross-check, n = 0..1
        let spec = WeightSpec::new(0.3, -0.4, HKind::PositivePoly, vec![2.0, 0.7, 0.3]).unwrap();
        let (c_ct, d_ct) = cd_coefficients(&spec, 1, &EllipseContour::new(1.3, 512).unwrap()).unwrap();
        let logh = logh_series(&spec, LOGH_DEGREE_DEFAULT).unwrap();
        let (c_sp, d_sp) = cd_coefficients_spectral(&logh, 1);
        for n in 0..=1 {
            assert_close(c_ct[n], c_sp[n], 1e-9);
            assert_close(d_ct[n], d_sp[n], 1e-9);
        }
    }

    #[test]
    fn cd_contour_invariance() {
        let spec = spec_test();
        let (c1, d1) = cd_coefficients(&spec, 0, &EllipseContour::new(1.2, 512).unwrap()).unwrap();
        let (c2, d2) = cd_coefficients(&spec, 0, &EllipseContour::new(1.4, 512).unwrap()).unwrap();
        assert_close(c1[0], c2[0], 1e-10);
        assert_close(d1[0], d2[0], 1e-10);
    }

    #[test]
    fn psi_closed_forms() {
        let leg = SzegoData::new(&WeightSpec::legendre()).unwrap();
        assert_close(psi_phase(&leg, 0.3).unwrap(), 0.0, 1e-15);

        let cheb = SzegoData::new(&WeightSpec::chebyshev()).unwrap();
        for &x in &[-0.7f64, 0.0, 0.42, 0.9] {
            let want = std::f64::consts::FRAC_PI_4 - 0.5 * x.acos();
            assert_close(psi_phase(&cheb, x).unwrap(), want, 1e-14);
        }

        let data = SzegoData::new(&WeightSpec::new(0.0, 0.0, HKind::ExpPoly, vec![0.0, 0.6]).unwrap()).unwrap();
        for &x in &[-0.5, 0.1, 0.8] {
            assert_close(psi_phase(&data, x).unwrap(), 0.3 * (1.0 - x * x).sqrt(), 1e-14);
        }
    }

    #[test]
    fn zeta_values() {
        let leg = SzegoData::new(&WeightSpec::legendre()).unwrap();
        let (z1, z2) = zeta_12(&leg, 0.4).unwrap();
        assert_close(z1, 0.5 * 0.4f64.acos(), 1e-14);
        assert_close(z2, -0.5 * 0.4f64.acos(), 1e-14);

        let data = SzegoData::new(&spec_test()).unwrap();
        let (z1, z2) = zeta_12(&data, -0.2).unwrap();
        assert_close(z1 - z2, (-0.2f64).acos(), 1e-14);

        let cheb = SzegoData::new(&WeightSpec::chebyshev()).unwrap();
        for &x in &[-0.6, 0.0, 0.77] {
            let (z1, _) = zeta_12(&cheb, x).unwrap();
            assert_close(z1, 0.0, 1e-14);
        }
    }

    #[test]
    fn w_values() {
        let spec = WeightSpec::new(1.0, 0.0, HKind::Constant, vec![1.0]).unwrap();
        assert!((w_eval(&spec, c(2.0, 0.0)).unwrap() - 1.0).norm() < 1e-15);

        // W_+W_− = w on the interval
        let spec = spec_test();
        let x = 0.3;
        let wp = w_boundary(&spec, x, Side::Plus).unwrap();
        let wm = w_boundary(&spec, x, Side::Minus).unwrap();
        let w = weight_eval(&spec, x).unwrap();
        assert!(((wp * wm - w) / w).norm() < 1e-12);
        // W² = e^{απi}w above the cut
        let want = (Complex64::i() * spec.alpha * std::f64::consts::PI).exp() * w;
        assert!(((wp * wp - want) / want).norm() < 1e-11);
    }

    #[test]
    fn w_over_d_tends_to_one() {
        for spec in [spec_test(), WeightSpec::new(-0.2, 0.6, HKind::PositivePoly, vec![2.0, 1.0]).unwrap()] {
            let data = SzegoData::new(&spec).unwrap();
            let dir = c(std::f64::consts::FRAC_1_SQRT_2, std::f64::consts::FRAC_1_SQRT_2);
            let mut prev = f64::INFINITY;
            for &t in &[0.2, 0.05, 0.01, 0.002] {
                let z = c(1.0, 0.0) + t * dir;
                let r = (w_eval(&spec, z).unwrap() / szego_d(&data, z).unwrap() - 1.0).norm();
                assert!(r < prev, "not decreasing at t={t}");
                prev = r;
            }
            assert!(prev < 0.1);
        }
    }

    #[test]
    fn wd_expansion_pure_jacobi() {
        let spec = WeightSpec::new(0.3, -0.4, HKind::Constant, vec![1.0]).unwrap();
        let data = SzegoData::new(&spec).unwrap();
        let z = c(1.1, 0.0);
        let lhs = {
            let w = w_eval(&spec, z).unwrap();
            let d = szego_d(&data, z).unwrap();
            (w / d) * (w / d)
        };
        let rhs = wd_expansion_check(&data, z).unwrap();
        assert!((lhs - rhs).norm() < 1e-12, "{lhs} vs {rhs}");
        // z → 1 limit is φ(1)^{α+β} = 1
        let near = wd_expansion_check(&data, c(1.0 + 1e-9, 0.0)).unwrap();
        assert!((near - 1.0).norm() < 1e-4);
    }

    #[test]
    fn wd_expansion_with_h() {
        let spec = WeightSpec::new(0.0, 0.0, HKind::ExpPoly, vec![0.0, 0.5]).unwrap();
        let data = SzegoData::with_terms(&spec, 24).unwrap();
        let z = c(1.05, 0.0);
        let w = w_eval(&spec, z).unwrap();
        let d = szego_d(&data, z).unwrap();
        let lhs = (w / d) * (w / d);
        let rhs = wd_expansion_check(&data, z).unwrap();
        assert!((lhs - rhs).norm() < 1e-9, "{lhs} vs {rhs}");
    }

    #[test]
    fn wd_tilde_expansion() {
        let spec = spec_test();
        let data = SzegoData::new(&spec).unwrap();
        let z = c(-1.05, 0.02);
        let w = w_tilde_eval(&spec, z).unwrap();
        let d = szego_d(&data, z).unwrap();
        let lhs = (w / d) * (w / d);
        let rhs = wd_tilde_expansion_check(&data, z).unwrap();
        assert!((lhs - rhs).norm() < 1e-9, "{lhs} vs {rhs}");
    }
}
