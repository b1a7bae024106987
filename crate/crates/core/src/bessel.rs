//! Real-argument Bessel functions J, Y (non-integer order), modified Bessel
//! functions I, K, their derivatives, and positive zeros of J.
//!
//! Evaluation strategy: ascending power series for J and I with x ≤ 12,
//! large-argument (Hankel-type) asymptotic expansions for x > 12. K uses the
//! integral representation K_ν(x) = ∫_0^∞ e^{−x cosh t} cosh(νt) dt for
//! x < 14 (the I-reflection formula loses ~e^{2x}·ε to cancellation and the
//! asymptotic series truncates at ~e^{−2x}) and the asymptotic expansion
//! beyond. Integer-order K and Y are not provided; callers use non-integer
//! orders.

use crate::error::{Error, Result};

const SERIES_CUTOFF: f64 = 12.0;

/// Bessel order with integer/half-integer classification.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BesselOrder {
    pub alpha: f64,
    pub is_integer: bool,
    pub is_half_integer: bool,
}

impl BesselOrder {
    pub fn new(alpha: f64) -> Result<Self> {
        if !(alpha > -1.0) || !alpha.is_finite() {
            return Err(Error::UnsupportedOrder(format!("order must be > -1, got {alpha}")));
        }
        let is_integer = (alpha - alpha.round()).abs() < 1e-14;
        let is_half_integer = ((alpha - 0.5) - (alpha - 0.5).round()).abs() < 1e-14 && !is_integer;
        Ok(Self { alpha, is_integer, is_half_integer })
    }
}

/// log Γ(x) for x > 0, Lanczos approximation (g = 7, 9 coefficients).
pub fn ln_gamma(x: f64) -> f64 {
    const G: f64 = 7.0;
    const C: [f64; 9] = [
        0.999_999_999_999_809_93,
        676.520_368_121_885_1,
        -1259.139_216_722_402_8,
        771.323_428_777_653_13,
        -176.615_029_162_140_6,
        12.507_343_278_686_905,
        -0.138_571_095_265_720_12,
        9.984_369_578_019_571_6e-6,
        1.505_632_735_149_311_6e-7,
    ];
    if x < 0.5 {
        // reflection: Γ(x)Γ(1−x) = π/sin(πx)
        let pi = std::f64::consts::PI;
        return (pi / (pi * x).sin()).ln() - ln_gamma(1.0 - x);
    }
    let x = x - 1.0;
    let mut a = C[0];
    for (i, &c) in C.iter().enumerate().skip(1) {
        a += c / (x + i as f64);
    }
    let t = x + G + 0.5;
    0.5 * (2.0 * std::f64::consts::PI).ln() + (x + 0.5) * t.ln() - t + a.ln()
}

/// 1/Γ(x) for any real x (entire; zero at non-positive integers).
fn recip_gamma(x: f64) -> f64 {
    if x > 0.0 {
        (-ln_gamma(x)).exp()
    } else {
        let pi = std::f64::consts::PI;
        // 1/Γ(x) = sin(πx)Γ(1−x)/π
        (pi * x).sin() * ln_gamma(1.0 - x).exp() / pi
    }
}

/// Ascending series for J_ν (sign = −1) or I_ν (sign = +1), any real ν.
fn series_ji(nu: f64, x: f64, sign: f64) -> f64 {
    if x == 0.0 {
        return if nu == 0.0 {
            1.0
        } else if nu > 0.0 {
            0.0
        } else {
            f64::INFINITY
        };
    }
    let q = sign * 0.25 * x * x;
    // term_k = (x/2)^{ν+2k} / (k! Γ(ν+k+1)); start from k = 0 via 1/Γ.
    let half = 0.5 * x;
    let mut term = half.powf(nu) * recip_gamma(nu + 1.0);
    // When Γ(ν+1) sits at/near a pole (ν near a negative integer), start at
    // the first non-vanishing term instead.
    let mut k0 = 0usize;
    while term == 0.0 && k0 < 8 {
        k0 += 1;
        term = half.powf(nu + 2.0 * k0 as f64) * recip_gamma(nu + k0 as f64 + 1.0) / (1..=k0).map(|j| j as f64).product::<f64>();
    }
    let mut sum = term;
    for k in (k0 + 1)..200 {
        term *= q / (k as f64 * (nu + k as f64));
        sum += term;
        if term.abs() < 1e-18 * sum.abs().max(1e-300) {
            break;
        }
    }
    sum
}

/// Hankel asymptotic coefficient walk: c_k = Π_{j≤k}(μ−(2j−1)²)/(k!(8x)^k),
/// accumulated into the caller-provided combiner until the terms stop
/// decreasing or fall below 1e−18.
fn asym_sum(mu: f64, x: f64, mut take: impl FnMut(usize, f64)) {
    let mut c = 1.0f64;
    take(0, c);
    let mut prev = f64::INFINITY;
    for k in 1..40 {
        let kf = k as f64;
        c *= (mu - (2.0 * kf - 1.0).powi(2)) / (kf * 8.0 * x);
        if c.abs() >= prev || c == 0.0 {
            break;
        }
        take(k, c);
        prev = c.abs();
        if c.abs() < 1e-18 {
            break;
        }
    }
}

fn bessel_j_any(nu: f64, x: f64) -> f64 {
    if x <= SERIES_CUTOFF {
        return series_ji(nu, x, -1.0);
    }
    let mu = 4.0 * nu * nu;
    let (mut p, mut q) = (0.0, 0.0);
    asym_sum(mu, x, |k, c| {
        if k % 2 == 0 {
            p += if k % 4 == 0 { c } else { -c };
        } else {
            q += if k % 4 == 1 { c } else { -c };
        }
    });
    let chi = x - (0.5 * nu + 0.25) * std::f64::consts::PI;
    (2.0 / (std::f64::consts::PI * x)).sqrt() * (p * chi.cos() - q * chi.sin())
}

fn bessel_i_any(nu: f64, x: f64) -> f64 {
    if x <= SERIES_CUTOFF {
        return series_ji(nu, x, 1.0);
    }
    let mu = 4.0 * nu * nu;
    let mut s = 0.0;
    asym_sum(mu, x, |k, c| {
        s += if k % 2 == 0 { c } else { -c };
    });
    x.exp() / (2.0 * std::f64::consts::PI * x).sqrt() * s
}

/// K_ν(x) by the integral representation ∫_0^∞ e^{−x cosh t} cosh(νt) dt,
/// trapezoid rule (spectrally accurate for this even, rapidly decaying
/// integrand).
fn bessel_k_integral(nu: f64, x: f64) -> f64 {
    // e^{−x(cosh T − 1)} below 1e−300 relative to the ν = 0 peak.
    let t_max = ((700.0 / x + 1.0) + (((700.0 / x) + 1.0).powi(2) - 1.0).sqrt()).ln();
    let n = 800usize;
    let h = t_max / n as f64;
    let mut s = 0.5 * (-x).exp();
    for j in 1..=n {
        let t = j as f64 * h;
        s += (-x * t.cosh()).exp() * (nu * t).cosh();
    }
    s * h
}

fn bessel_k_any(nu: f64, x: f64) -> Result<f64> {
    let nu = nu.abs(); // K is even in the order
    if (nu - nu.round()).abs() < 1e-14 {
        return Err(Error::UnsupportedOrder(format!("integer-order K is not provided (order {nu})")));
    }
    if x < 14.0 {
        Ok(bessel_k_integral(nu, x))
    } else {
        let mu = 4.0 * nu * nu;
        let mut s = 0.0;
        asym_sum(mu, x, |_, c| s += c);
        Ok((std::f64::consts::PI / (2.0 * x)).sqrt() * (-x).exp() * s)
    }
}

/// Bessel function J_α(x) for α > −1, x ≥ 0 (x = 0 requires α ≥ 0).
pub fn bessel_j(alpha: f64, x: f64) -> Result<f64> {
    let ord = BesselOrder::new(alpha)?;
    if x < 0.0 {
        return Err(Error::Domain(format!("bessel_j requires x ≥ 0, got {x}")));
    }
    if x == 0.0 && ord.alpha < 0.0 {
        return Err(Error::Domain("bessel_j at x = 0 requires α ≥ 0".into()));
    }
    Ok(bessel_j_any(ord.alpha, x))
}

/// Derivative dJ_α/dx via J′_α = (α/x)J_α − J_{α+1} (valid for all α > −1).
pub fn bessel_j_prime(alpha: f64, x: f64) -> Result<f64> {
    let ord = BesselOrder::new(alpha)?;
    if x <= 0.0 {
        return Err(Error::Domain(format!("bessel_j_prime requires x > 0, got {x}")));
    }
    Ok((ord.alpha / x) * bessel_j_any(ord.alpha, x) - bessel_j_any(ord.alpha + 1.0, x))
}

/// Modified Bessel function I_α(x) for α > −1, x ≥ 0.
pub fn bessel_i(alpha: f64, x: f64) -> Result<f64> {
    let ord = BesselOrder::new(alpha)?;
    if x < 0.0 {
        return Err(Error::Domain(format!("bessel_i requires x ≥ 0, got {x}")));
    }
    if x == 0.0 && ord.alpha < 0.0 {
        return Err(Error::Domain("bessel_i at x = 0 requires α ≥ 0".into()));
    }
    Ok(bessel_i_any(ord.alpha, x))
}

/// Derivative dI_α/dx via I′_α = (α/x)I_α + I_{α+1}.
pub fn bessel_i_prime(alpha: f64, x: f64) -> Result<f64> {
    let ord = BesselOrder::new(alpha)?;
    if x <= 0.0 {
        return Err(Error::Domain(format!("bessel_i_prime requires x > 0, got {x}")));
    }
    Ok((ord.alpha / x) * bessel_i_any(ord.alpha, x) + bessel_i_any(ord.alpha + 1.0, x))
}

/// Modified Bessel function K_α(x) for non-integer α > −1, x > 0.
pub fn bessel_k(alpha: f64, x: f64) -> Result<f64> {
    BesselOrder::new(alpha)?;
    if x <= 0.0 {
        return Err(Error::Domain(format!("bessel_k requires x > 0, got {x}")));
    }
    bessel_k_any(alpha, x)
}

/// Derivative dK_α/dx via K′_α = (α/x)K_α − K_{α+1}.
///
/// K_{α+1} is reduced to an order in [0,1) with the recurrence
/// K_{ν+1} = K_{ν−1} + (2ν/x)K_ν and evenness K_{−ν} = K_ν.
pub fn bessel_k_prime(alpha: f64, x: f64) -> Result<f64> {
    BesselOrder::new(alpha)?;
    if x <= 0.0 {
        return Err(Error::Domain(format!("bessel_k_prime requires x > 0, got {x}")));
    }
    let nu = alpha.abs();
    // K_{ν+1} = K_{1−ν} + (2ν/x)K_ν keeps every evaluated order inside (−1,1).
    let k_nu = bessel_k_any(nu, x)?;
    let k_nu_p1 = bessel_k_any(1.0 - nu, x)? + (2.0 * nu / x) * k_nu;
    Ok((nu / x) * k_nu - k_nu_p1)
}

/// Bessel function of the second kind Y_α, non-integer α, by reflection:
/// Y_α = (J_α cos απ − J_{−α})/sin απ.
pub fn bessel_y(alpha: f64, x: f64) -> Result<f64> {
    let ord = BesselOrder::new(alpha)?;
    if ord.is_integer {
        return Err(Error::UnsupportedOrder(format!("integer-order Y is not provided (order {alpha})")));
    }
    if x <= 0.0 {
        return Err(Error::Domain(format!("bessel_y requires x > 0, got {x}")));
    }
    let pi = std::f64::consts::PI;
    Ok((bessel_j_any(alpha, x) * (alpha * pi).cos() - bessel_j_any(-alpha, x)) / (alpha * pi).sin())
}

/// Derivative of Y_α, non-integer α, by the same reflection applied to J′.
pub fn bessel_y_prime(alpha: f64, x: f64) -> Result<f64> {
    let ord = BesselOrder::new(alpha)?;
    if ord.is_integer {
        return Err(Error::UnsupportedOrder(format!("integer-order Y is not provided (order {alpha})")));
    }
    if x <= 0.0 {
        return Err(Error::Domain(format!("bessel_y_prime requires x > 0, got {x}")));
    }
    let pi = std::f64::consts::PI;
    let jp = |nu: f64| (nu / x) * bessel_j_any(nu, x) - bessel_j_any(nu + 1.0, x);
    Ok((jp(alpha) * (alpha * pi).cos() - jp(-alpha)) / (alpha * pi).sin())
}

/// k-th positive zero j_{α,k} of J_α: McMahon initial guess refined by
/// Newton on bessel_j.
pub fn bessel_zero(alpha: f64, k: usize) -> Result<f64> {
    let ord = BesselOrder::new(alpha)?;
    if k == 0 {
        return Err(Error::Domain("zero index k is 1-based".into()));
    }
    let pi = std::f64::consts::PI;
    let b = (k as f64 + 0.5 * ord.alpha - 0.25) * pi;
    let mu = 4.0 * ord.alpha * ord.alpha;
    let mut x = b - (mu - 1.0) / (8.0 * b);
    if x <= 0.0 {
        x = 0.5 * b.max(1.0);
    }
    for _ in 0..60 {
        let f = bessel_j_any(ord.alpha, x);
        let fp = (ord.alpha / x) * f - bessel_j_any(ord.alpha + 1.0, x);
        let step = f / fp;
        x -= step;
        if step.abs() < 1e-13 * x.abs() {
            return Ok(x);
        }
    }
    Err(Error::Numerical(format!("bessel_zero Newton failed for α={alpha}, k={k}")))
}
