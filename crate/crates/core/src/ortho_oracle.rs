//! Quadrature-based orthogonalization oracle.
//!
//! Ground truth for everything: recurrence coefficients a_n, b_n and leading
//! coefficients γ_n of the polynomials orthogonal with respect to a weight
//! spec, computed by the Stieltjes procedure with Gauss–Jacobi quadrature.
//! Monic values π_n follow from the three-term recurrence
//! π_{n+1} = (x − b_n)π_n − a_n²π_{n−1}; Hankel determinants telescope as
//! log D_n = log μ_0 − 2 Σ_{j≤n} log γ_j; zeros are eigenvalues of the
//! truncated Jacobi matrix. Nothing here uses the asymptotic formulas.

use num_complex::Complex64;

use crate::bessel::ln_gamma;
use crate::error::{Error, Result};
use crate::weight::WeightSpec;

/// Recurrence data for a weight up to degree N.
#[derive(Debug, Clone)]
pub struct RecurrenceTable {
    /// Maximum degree.
    pub n_max: usize,
    /// a_1..a_N (a[i] is a_{i+1}).
    a: Vec<f64>,
    /// b_0..b_{N−1}.
    b: Vec<f64>,
    /// log γ_0..log γ_N.
    log_gamma: Vec<f64>,
    /// log μ_0 = log ∫ w.
    pub log_mu0: f64,
}

impl RecurrenceTable {
    /// a_n for 1 ≤ n ≤ N.
    pub fn a(&self, n: usize) -> f64 {
        self.a[n - 1]
    }

    /// b_n for 0 ≤ n ≤ N−1.
    pub fn b(&self, n: usize) -> f64 {
        self.b[n]
    }

    /// log γ_n for 0 ≤ n ≤ N.
    pub fn log_gamma(&self, n: usize) -> f64 {
        self.log_gamma[n]
    }
}

/// Gauss quadrature rule on (−1,1).
#[derive(Debug, Clone)]
pub struct QuadratureRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    /// Exact for polynomials of degree ≤ exactness against the pure Jacobi weight.
    pub exactness: usize,
}

/// A value stored as log-magnitude plus a unit-modulus factor, so that
/// π_n(z) with |π_n| far beyond binary64 range stays representable.
#[derive(Debug, Clone, Copy)]
pub struct LogScaled {
    pub log_abs: f64,
    pub unit: Complex64,
}

impl LogScaled {
    pub fn from_value(v: Complex64) -> Self {
        let m = v.norm();
        if m == 0.0 {
            Self { log_abs: f64::NEG_INFINITY, unit: Complex64::new(1.0, 0.0) }
        } else {
            Self { log_abs: m.ln(), unit: v / m }
        }
    }

    /// Plain value; finite whenever |π_n| < 1e300.
    pub fn value(&self) -> Complex64 {
        if self.log_abs == f64::NEG_INFINITY {
            Complex64::new(0.0, 0.0)
        } else {
            self.unit * self.log_abs.exp()
        }
    }
}

/// Symmetric tridiagonal eigensolver: QL with implicit Wilkinson shifts.
/// `d` holds the diagonal (overwritten with eigenvalues), `e` the
/// subdiagonal e[0..n−1]. When `z` is provided (length n), it accumulates
/// the first components of the eigenvectors (pass the unit vector e_1 to
/// recover Golub–Welsch quadrature weights).
fn tridiag_eigen(d: &mut [f64], e: &mut [f64], mut z: Option<&mut [f64]>) -> Result<()> {
    let n = d.len();
    if n == 0 {
        return Ok(());
    }
    let mut ee = vec![0.0; n];
    ee[..n - 1].copy_from_slice(&e[..n - 1]);
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if ee[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > 50 {
                return Err(Error::Numerical(format!("tridiagonal QL failed to converge at row {l}")));
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * ee[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + ee[l] / (g + r.copysign(if g >= 0.0 { 1.0 } else { -1.0 }));
            let (mut s, mut c) = (1.0, 1.0);
            let mut p = 0.0;
            let mut i = m;
            let mut underflow = false;
            while i > l {
                i -= 1;
                let f = s * ee[i];
                let b = c * ee[i];
                r = f.hypot(g);
                ee[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    ee[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                if let Some(zv) = z.as_deref_mut() {
                    let f = zv[i + 1];
                    zv[i + 1] = s * zv[i] + c * f;
                    zv[i] = c * zv[i] - s * f;
                }
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            ee[l] = g;
            ee[m] = 0.0;
        }
    }
    e[..n - 1].copy_from_slice(&ee[..n - 1]);
    Ok(())
}

/// Monic recurrence coefficients of the pure Jacobi weight (1−x)^α(1+x)^β.
fn jacobi_recurrence(n: usize, alpha: f64, beta: f64) -> (Vec<f64>, Vec<f64>) {
    let s = alpha + beta;
    let mut b = vec![0.0; n];
    let mut a2 = vec![0.0; n]; // a2[k] = a_k², a2[0] unused
    if n > 0 {
        b[0] = (beta - alpha) / (s + 2.0);
    }
    for k in 1..n {
        let kf = k as f64;
        let t = 2.0 * kf + s;
        b[k] = (beta * beta - alpha * alpha) / (t * (t + 2.0));
        a2[k] = if k == 1 {
            4.0 * (1.0 + alpha) * (1.0 + beta) / ((2.0 + s) * (2.0 + s) * (3.0 + s))
        } else {
            4.0 * kf * (kf + alpha) * (kf + beta) * (kf + s) / (t * t * (t + 1.0) * (t - 1.0))
        };
    }
    (b, a2)
}

/// log μ_0 of the pure Jacobi weight: 2^{α+β+1}B(α+1, β+1).
pub fn jacobi_log_mu0(alpha: f64, beta: f64) -> f64 {
    (alpha + beta + 1.0) * 2.0f64.ln() + ln_gamma(alpha + 1.0) + ln_gamma(beta + 1.0)
        - ln_gamma(alpha + beta + 2.0)
}

/// n-point Gauss–Jacobi rule for (1−x)^α(1+x)^β via Golub–Welsch.
pub fn gauss_jacobi(n: usize, alpha: f64, beta: f64) -> Result<QuadratureRule> {
    if n == 0 {
        return Err(Error::Parameter("gauss_jacobi needs n ≥ 1".into()));
    }
    if !(alpha > -1.0) || !(beta > -1.0) {
        return Err(Error::Parameter(format!("gauss_jacobi requires α, β > -1, got ({alpha}, {beta})")));
    }
    let (b, a2) = jacobi_recurrence(n, alpha, beta);
    let mut d = b;
    let mut e: Vec<f64> = (1..n).map(|k| a2[k].sqrt()).collect();
    e.push(0.0);
    let mut z = vec![0.0; n];
    z[0] = 1.0;
    tridiag_eigen(&mut d, &mut e, Some(&mut z))?;
    let mu0 = jacobi_log_mu0(alpha, beta).exp();
    let mut pairs: Vec<(f64, f64)> = d.iter().zip(z.iter()).map(|(&x, &v)| (x, mu0 * v * v)).collect();
    pairs.sort_by(|p, q| p.0.partial_cmp(&q.0).unwrap());
    Ok(QuadratureRule {
        nodes: pairs.iter().map(|p| p.0).collect(),
        weights: pairs.iter().map(|p| p.1).collect(),
        exactness: 2 * n - 1,
    })
}

/// Stieltjes procedure: recurrence coefficients of the full weight
/// (1−x)^α(1+x)^β h(x) through degree N.
///
/// Inner products use a Gauss–Jacobi rule with n_q = 2N + 32 points for the
/// pure Jacobi part, with h folded into the integrand; the orthonormal
/// polynomials are carried at the quadrature nodes to avoid overflow.
pub fn stieltjes_recurrence(spec: &WeightSpec, n_deg: usize) -> Result<RecurrenceTable> {
    if n_deg == 0 {
        return Err(Error::Parameter("stieltjes_recurrence needs N ≥ 1".into()));
    }
    let nq = 2 * n_deg + 32;
    let rule = gauss_jacobi(nq, spec.alpha, spec.beta)?;
    let hw: Vec<f64> = rule
        .nodes
        .iter()
        .zip(rule.weights.iter())
        .map(|(&x, &w)| w * spec.h_eval(x))
        .collect();
    let xs = &rule.nodes;
    let mu0: f64 = hw.iter().sum();
    if !(mu0 > 0.0) {
        return Err(Error::Numerical("nonpositive weight mass".into()));
    }
    let log_mu0 = mu0.ln();

    let mut p_prev = vec![0.0f64; nq];
    let mut p_curr = vec![1.0 / mu0.sqrt(); nq];
    let dot = |f: &[f64], g: &[f64], extra_x: bool| -> f64 {
        let mut s = 0.0;
        for i in 0..nq {
            let x = if extra_x { xs[i] } else { 1.0 };
            s += hw[i] * f[i] * g[i] * x;
        }
        s
    };

    let mut a = Vec::with_capacity(n_deg);
    let mut b = Vec::with_capacity(n_deg);
    let mut log_gamma = Vec::with_capacity(n_deg + 1);
    log_gamma.push(-0.5 * log_mu0);
    let mut a_n = 0.0;
    for n in 0..n_deg {
        let b_n = dot(&p_curr, &p_curr, true);
        b.push(b_n);
        let mut q = vec![0.0; nq];
        for i in 0..nq {
            q[i] = (xs[i] - b_n) * p_curr[i] - a_n * p_prev[i];
        }
        let norm2 = dot(&q, &q, false);
        if !(norm2 > 0.0) {
            return Err(Error::Numerical(format!("precision exhausted at degree {}", n + 1)));
        }
        a_n = norm2.sqrt();
        a.push(a_n);
        log_gamma.push(log_gamma[n] - a_n.ln());
        for i in 0..nq {
            let v = q[i] / a_n;
            p_prev[i] = p_curr[i];
            p_curr[i] = v;
        }
    }
    Ok(RecurrenceTable { n_max: n_deg, a, b, log_gamma, log_mu0 })
}

/// Monic π_n(z) by the three-term recurrence with periodic rescaling.
pub fn eval_monic(table: &RecurrenceTable, n: usize, z: Complex64) -> Result<LogScaled> {
    if n > table.n_max {
        return Err(Error::Parameter(format!("degree {n} exceeds table maximum {}", table.n_max)));
    }
    let mut log_scale = 0.0f64;
    let mut prev = Complex64::new(0.0, 0.0); // π_{−1}
    let mut curr = Complex64::new(1.0, 0.0); // π_0
    for k in 0..n {
        let ak2 = if k == 0 { 0.0 } else { table.a(k) * table.a(k) };
        let next = (z - table.b(k)) * curr - ak2 * prev;
        prev = curr;
        curr = next;
        let m = curr.norm().max(prev.norm());
        if m > 1e100 || (m < 1e-100 && m > 0.0) {
            log_scale += m.ln();
            curr /= m;
            prev /= m;
        }
    }
    let mut out = LogScaled::from_value(curr);
    out.log_abs += log_scale;
    Ok(out)
}

/// Monic π_n(x) at real x (plain value; safe for |π_n| < 1e300).
pub fn eval_monic_real(table: &RecurrenceTable, n: usize, x: f64) -> Result<f64> {
    let v = eval_monic(table, n, Complex64::new(x, 0.0))?;
    Ok(v.value().re)
}

/// log D_n of the Hankel determinant, via log D_n = log μ_0 − 2Σ_{j≤n} log γ_j.
pub fn hankel_log_det(table: &RecurrenceTable, n: usize) -> Result<f64> {
    if n + 1 > table.n_max {
        return Err(Error::Parameter(format!("hankel_log_det needs n ≤ N−1, got n={n}")));
    }
    let mut s = table.log_mu0;
    for j in 1..=n {
        s -= 2.0 * table.log_gamma(j);
    }
    Ok(s)
}

/// Zeros of π_n, sorted decreasing (x_{n,1} > x_{n,2} > …).
pub fn polynomial_zeros(table: &RecurrenceTable, n: usize) -> Result<Vec<f64>> {
    if n == 0 || n > table.n_max {
        return Err(Error::Parameter(format!("polynomial_zeros needs 1 ≤ n ≤ N, got {n}")));
    }
    let mut d: Vec<f64> = (0..n).map(|k| table.b(k)).collect();
    let mut e: Vec<f64> = (1..n).map(|k| table.a(k)).collect();
    e.push(0.0);
    tridiag_eigen(&mut d, &mut e, None)?;
    d.sort_by(|p, q| q.partial_cmp(p).unwrap());
    Ok(d)
}

/// Quadrature inner product ∫ p_n p_m w against the full weight (test aid).
pub fn orthonormal_inner_product(spec: &WeightSpec, table: &RecurrenceTable, n: usize, m: usize) -> Result<f64> {
    let nq = 2 * table.n_max + 32;
    let rule = gauss_jacobi(nq, spec.alpha, spec.beta)?;
    let mut s = 0.0;
    for (&x, &w) in rule.nodes.iter().zip(rule.weights.iter()) {
        let pn = eval_monic_real(table, n, x)? * (table.log_gamma(n)).exp();
        let pm = eval_monic_real(table, m, x)? * (table.log_gamma(m)).exp();
        s += w * spec.h_eval(x) * pn * pm;
    }
    Ok(s)
}
