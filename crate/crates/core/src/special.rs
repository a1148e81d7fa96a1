//! Modified Bessel functions of the first kind and quadrature on the circle.

use std::f64::consts::TAU;

use crate::error::{domain, Error, Result};

/// Above this argument the large-argument asymptotic expansion is used.
const ASYMPTOTIC_THRESHOLD: f64 = 40.0;

/// `I_p(x)` for integer order `p ≥ 0` and `x ≥ 0`.
pub fn bessel_i(order: u32, x: f64) -> Result<f64> {
    check_arg(x)?;
    if x > ASYMPTOTIC_THRESHOLD {
        Ok(asymptotic_scaled(order, x) * x.exp())
    } else {
        Ok(series(order, x))
    }
}

/// Exponentially scaled `e^{-x} I_p(x)`, finite for every `x ≥ 0`.
pub fn bessel_i_scaled(order: u32, x: f64) -> Result<f64> {
    check_arg(x)?;
    if x > ASYMPTOTIC_THRESHOLD {
        Ok(asymptotic_scaled(order, x))
    } else {
        Ok(series(order, x) * (-x).exp())
    }
}

fn check_arg(x: f64) -> Result<()> {
    if x.is_nan() || x < 0.0 {
        return domain(format!("Bessel argument must be non-negative, got {x}"));
    }
    if x.is_infinite() {
        return domain("Bessel argument must be finite");
    }
    Ok(())
}

// Σ (x/2)^{2m+p} / (m! (m+p)!)
fn series(order: u32, x: f64) -> f64 {
    let half = 0.5 * x;
    let mut term = 1.0;
    for k in 1..=order {
        term *= half / k as f64;
    }
    if term == 0.0 {
        return 0.0;
    }
    let q = half * half;
    let mut sum = term;
    let mut m = 1.0;
    loop {
        term *= q / (m * (m + order as f64));
        sum += term;
        if term <= 1e-17 * sum {
            break;
        }
        m += 1.0;
    }
    sum
}

// e^{-x} I_p(x) ~ (2πx)^{-1/2} Σ_k (-1)^k Π_{j=1..k} (4p² − (2j−1)²) / (k! (8x)^k)
fn asymptotic_scaled(order: u32, x: f64) -> f64 {
    let mu = 4.0 * (order as f64).powi(2);
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut k = 1.0;
    loop {
        let odd = 2.0 * k - 1.0;
        let next = -term * (mu - odd * odd) / (k * 8.0 * x);
        if next.abs() >= term.abs() || next == 0.0 {
            break;
        }
        term = next;
        sum += term;
        if term.abs() <= 1e-17 * sum.abs() {
            break;
        }
        k += 1.0;
    }
    sum / (TAU * x).sqrt()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuadratureRule {
    CompositeSimpson,
    TrapezoidPeriodic,
}

/// Panel count and rule for integrals over one full period.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuadratureSpec {
    panels: usize,
    rule: QuadratureRule,
}

impl QuadratureSpec {
    pub fn new(panels: usize, rule: QuadratureRule) -> Result<Self> {
        if panels < 16 || !panels.is_multiple_of(2) {
            return domain(format!("quadrature needs an even panel count ≥ 16, got {panels}"));
        }
        Ok(Self { panels, rule })
    }

    pub fn trapezoid(panels: usize) -> Result<Self> {
        Self::new(panels, QuadratureRule::TrapezoidPeriodic)
    }

    pub fn panels(&self) -> usize {
        self.panels
    }

    pub fn rule(&self) -> QuadratureRule {
        self.rule
    }
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            panels: 4096,
            rule: QuadratureRule::TrapezoidPeriodic,
        }
    }
}

/// `∫₀^{2π} f(θ) dθ`. Fails on the first non-finite value of `f`.
pub fn periodic_integral(f: impl Fn(f64) -> f64, spec: QuadratureSpec) -> Result<f64> {
    let n = spec.panels;
    let h = TAU / n as f64;
    let mut sum = 0.0;
    match spec.rule {
        QuadratureRule::TrapezoidPeriodic => {
            // endpoints coincide on the circle, so every node has weight h
            for i in 0..n {
                sum += finite(&f, i as f64 * h)?;
            }
            Ok(sum * h)
        }
        QuadratureRule::CompositeSimpson => {
            sum += finite(&f, 0.0)? + finite(&f, TAU)?;
            for i in 1..n {
                let w = if i % 2 == 1 { 4.0 } else { 2.0 };
                sum += w * finite(&f, i as f64 * h)?;
            }
            Ok(sum * h / 3.0)
        }
    }
}

fn finite(f: &impl Fn(f64) -> f64, x: f64) -> Result<f64> {
    let v = f(x);
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::NonFinite { at: x })
    }
}

/// Composite Simpson on `[lo, hi]`; `panels` is rounded up to even.
pub fn simpson(f: impl Fn(f64) -> f64, lo: f64, hi: f64, panels: usize) -> f64 {
    let n = (panels.max(2) + 1) & !1;
    let h = (hi - lo) / n as f64;
    let mut sum = f(lo) + f(hi);
    for i in 1..n {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        sum += w * f(lo + i as f64 * h);
    }
    sum * h / 3.0
}

/// Golden-section search for a maximum of a unimodal `f` on `[lo, hi]`.
pub fn golden_max(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, tol: f64) -> f64 {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while hi - lo > tol {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        }
    }
    0.5 * (lo + hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    // 2^20-panel periodic trapezoid of e^{cos θ}/(2π), computed independently
    const I0_AT_1: f64 = 1.2660658777520086;
    const I1_AT_1: f64 = 0.5651591039924849;
    // e^{-x} I_p(x) by the same 2^20-panel trapezoid
    const SCALED: [(f64, f64, f64); 3] = [
        (5.0, 0.1835408126093283, 0.16397226694454237),
        (40.0, 0.06327827987523531, 0.062482229074442036),
        (100.0, 0.03994437929909664, 0.03974415302513021),
    ];

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn bessel_at_zero() {
        assert_eq!(bessel_i(0, 0.0).unwrap(), 1.0);
        assert_eq!(bessel_i(1, 0.0).unwrap(), 0.0);
    }

    #[test]
    fn bessel_matches_quadrature_oracle() {
        assert!(rel(bessel_i(0, 1.0).unwrap(), I0_AT_1) < 1e-10);
        assert!(rel(bessel_i(1, 1.0).unwrap(), I1_AT_1) < 1e-10);
        for (x, i0e, i1e) in SCALED {
            assert!(rel(bessel_i_scaled(0, x).unwrap(), i0e) < 1e-12, "I0e({x})");
            assert!(rel(bessel_i_scaled(1, x).unwrap(), i1e) < 1e-12, "I1e({x})");
        }
    }

    #[test]
    fn series_and_asymptotic_agree_across_switch() {
        for order in 0..3 {
            let below = series(order, 40.0) * (-40.0f64).exp();
            let above = asymptotic_scaled(order, 40.0);
            assert!(rel(above, below) < 1e-13, "order {order}");
        }
    }

    #[test]
    fn bessel_quadrature_cross_check_over_range() {
        let spec = QuadratureSpec::trapezoid(4096).unwrap();
        for &x in &[0.1, 0.5, 2.0, 10.0, 39.0, 41.0, 80.0, 120.0] {
            for p in 0..3u32 {
                let q = periodic_integral(|t| (x * (t.cos() - 1.0)).exp() * (p as f64 * t).cos(), spec).unwrap() / TAU;
                assert!(rel(bessel_i_scaled(p, x).unwrap(), q) < 1e-12, "p={p} x={x}");
            }
        }
    }

    #[test]
    fn bessel_rejects_negative() {
        assert!(bessel_i(0, -1.0).is_err());
        assert!(bessel_i_scaled(1, f64::NAN).is_err());
    }

    #[test]
    fn periodic_integral_basics() {
        let spec = QuadratureSpec::default();
        assert!((periodic_integral(|_| 1.0, spec).unwrap() - TAU).abs() < 1e-12);
        assert!(periodic_integral(f64::cos, spec).unwrap().abs() < 1e-12);
        let e = periodic_integral(|t| t.cos().exp(), spec).unwrap();
        assert!(rel(e, TAU * bessel_i(0, 1.0).unwrap()) < 1e-12);
        let simpson_spec = QuadratureSpec::new(4096, QuadratureRule::CompositeSimpson).unwrap();
        assert!(rel(periodic_integral(|t| t.cos().exp(), simpson_spec).unwrap(), e) < 1e-12);
    }

    #[test]
    fn sine_moments_vanish() {
        let spec = QuadratureSpec::default();
        for &k in &[0.5, 1.0, 5.0] {
            for n in 1..=2 {
                let v = periodic_integral(|t| (k * t.cos()).exp() * (n as f64 * t).sin(), spec).unwrap();
                assert!(v.abs() < 1e-10, "kappa={k} n={n}: {v}");
            }
        }
    }

    #[test]
    fn refinement_is_stable() {
        let f = |t: f64| (2.0 * t.cos()).exp() * (1.0 + 0.5 * t.cos());
        let mut panels = 512;
        while panels <= 8192 {
            let a = periodic_integral(f, QuadratureSpec::trapezoid(panels).unwrap()).unwrap();
            let b = periodic_integral(f, QuadratureSpec::trapezoid(2 * panels).unwrap()).unwrap();
            assert!((a - b).abs() < 1e-12);
            panels *= 2;
        }
    }

    #[test]
    fn quadrature_spec_validation() {
        assert!(QuadratureSpec::trapezoid(8).is_err());
        assert!(QuadratureSpec::trapezoid(17).is_err());
        assert!(QuadratureSpec::trapezoid(16).is_ok());
    }

    #[test]
    fn non_finite_integrand_propagates() {
        let r = periodic_integral(|t| if t > 1.0 { f64::NAN } else { 1.0 }, QuadratureSpec::default());
        assert!(matches!(r, Err(Error::NonFinite { .. })));
    }

    #[test]
    fn golden_section_finds_peak() {
        let m = golden_max(|x| -(x - 0.3).powi(2), 0.0, 1.0, 1e-12);
        assert!((m - 0.3).abs() < 1e-9);
    }
}
