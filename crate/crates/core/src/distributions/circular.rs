use std::f64::consts::TAU;

use num_complex::Complex64;

use super::{check_aspect, locate_modes, CircularDensity};
use crate::error::{domain, Result};
use crate::geometry::wrap_angle;
use crate::special::bessel_i_scaled;

/// Uniform law on the circle, `1/(2π)`.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct CircularUniform;

impl CircularDensity for CircularUniform {
    fn kernel(&self, _theta: f64) -> f64 {
        1.0
    }
    fn normalizer(&self) -> f64 {
        TAU
    }
    fn cdf(&self, theta: f64) -> Option<f64> {
        Some((theta / TAU).clamp(0.0, 1.0))
    }
    fn modes(&self) -> Vec<f64> {
        Vec::new()
    }
    fn weighted_mass(&self, _aspect: f64) -> Option<f64> {
        Some(1.0)
    }
    fn label(&self) -> String {
        "uniform".into()
    }
}

/// Area-uniform marginal of the vertical angle, `g₂(θ) = (1 + a cos θ)/(2π)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UniformTorusMarginal {
    a: f64,
}

impl UniformTorusMarginal {
    pub fn new(a: f64) -> Result<Self> {
        check_aspect(a)?;
        Ok(Self { a })
    }

    pub fn aspect(&self) -> f64 {
        self.a
    }
}

impl CircularDensity for UniformTorusMarginal {
    fn kernel(&self, theta: f64) -> f64 {
        1.0 + self.a * theta.cos()
    }
    fn normalizer(&self) -> f64 {
        TAU
    }
    fn cdf(&self, theta: f64) -> Option<f64> {
        Some(((theta + self.a * theta.sin()) / TAU).clamp(0.0, 1.0))
    }
    fn modes(&self) -> Vec<f64> {
        vec![0.0]
    }
    fn label(&self) -> String {
        format!("torus-uniform(a={})", self.a)
    }
}

/// von Mises law `e^{κ cos(θ−μ)} / (2π I₀(κ))`.
///
/// The kernel is scaled by `e^{-κ}` so that large concentrations stay finite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VonMises {
    mu: f64,
    kappa: f64,
    i0e: f64,
    i1e: f64,
}

impl VonMises {
    pub fn new(mu: f64, kappa: f64) -> Result<Self> {
        if !mu.is_finite() {
            return domain("mu must be finite");
        }
        if !(kappa > 0.0 && kappa.is_finite()) {
            return domain(format!("kappa must be positive, got {kappa}"));
        }
        Ok(Self {
            mu: wrap_angle(mu),
            kappa,
            i0e: bessel_i_scaled(0, kappa)?,
            i1e: bessel_i_scaled(1, kappa)?,
        })
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn kappa(&self) -> f64 {
        self.kappa
    }
}

impl CircularDensity for VonMises {
    fn kernel(&self, theta: f64) -> f64 {
        (self.kappa * ((theta - self.mu).cos() - 1.0)).exp()
    }
    fn normalizer(&self) -> f64 {
        TAU * self.i0e
    }
    fn modes(&self) -> Vec<f64> {
        vec![self.mu]
    }
    fn weighted_mass(&self, aspect: f64) -> Option<f64> {
        Some(1.0 + aspect * self.mu.cos() * self.i1e / self.i0e)
    }
    fn label(&self) -> String {
        format!("von-mises(mu={}, kappa={})", self.mu, self.kappa)
    }
}

/// Wrapped Cauchy law `(1−ρ²) / (2π (1 + ρ² − 2ρ cos(θ−μ)))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WrappedCauchy {
    mu: f64,
    rho: f64,
}

impl WrappedCauchy {
    pub fn new(mu: f64, rho: f64) -> Result<Self> {
        if !mu.is_finite() {
            return domain("mu must be finite");
        }
        if !(0.0..1.0).contains(&rho) {
            return domain(format!("rho must lie in [0, 1), got {rho}"));
        }
        Ok(Self {
            mu: wrap_angle(mu),
            rho,
        })
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn rho(&self) -> f64 {
        self.rho
    }
}

impl CircularDensity for WrappedCauchy {
    fn kernel(&self, theta: f64) -> f64 {
        let r = self.rho;
        (1.0 - r * r) / (1.0 + r * r - 2.0 * r * (theta - self.mu).cos())
    }
    fn normalizer(&self) -> f64 {
        TAU
    }
    fn modes(&self) -> Vec<f64> {
        if self.rho > 0.0 {
            vec![self.mu]
        } else {
            Vec::new()
        }
    }
    fn label(&self) -> String {
        format!("wrapped-cauchy(mu={}, rho={})", self.mu, self.rho)
    }
}

/// `(γ, ξ, η)` of the Kato–Jones family:
/// `γ = μ + ν`, `ξ = √(ρ⁴ + 2ρ² cos 2ν + 1)`, `η = μ + arg(ρ² cos 2ν + 1 + iρ² sin 2ν)`.
pub fn kato_jones_derived_params(mu: f64, nu: f64, rho: f64) -> (f64, f64, f64) {
    let r2 = rho * rho;
    let (s, c) = (2.0 * nu).sin_cos();
    let gamma = mu + nu;
    let xi = (r2 * r2 + 2.0 * r2 * c + 1.0).sqrt();
    let eta = mu + (r2 * s).atan2(r2 * c + 1.0);
    (gamma, xi, eta)
}

/// Möbius map `e^{iθ} = e^{iμ} (e^{iθ̄} + ρe^{iν}) / (ρe^{i(θ̄−ν)} + 1)`, result in `[0, 2π)`.
pub fn mobius_transform(theta_bar: f64, mu: f64, nu: f64, rho: f64) -> f64 {
    let num = Complex64::from_polar(1.0, theta_bar) + Complex64::from_polar(rho, nu);
    let den = Complex64::from_polar(rho, theta_bar - nu) + 1.0;
    wrap_angle((Complex64::from_polar(1.0, mu) * num / den).arg())
}

/// Kato–Jones four-parameter family, evaluated from its closed-form density.
#[derive(Debug, Clone, PartialEq)]
pub struct KatoJones {
    mu: f64,
    nu: f64,
    rho: f64,
    kappa: f64,
    gamma: f64,
    xi: f64,
    eta: f64,
    i0e: f64,
    modes: Vec<f64>,
}

impl KatoJones {
    pub fn new(mu: f64, nu: f64, rho: f64, kappa: f64) -> Result<Self> {
        if !(mu.is_finite() && nu.is_finite()) {
            return domain("mu and nu must be finite");
        }
        if !(0.0..1.0).contains(&rho) {
            return domain(format!("rho must lie in [0, 1), got {rho}"));
        }
        if !(kappa > 0.0 && kappa.is_finite()) {
            return domain(format!("kappa must be positive, got {kappa}"));
        }
        let (gamma, xi, eta) = kato_jones_derived_params(mu, nu, rho);
        let mut kj = Self {
            mu: wrap_angle(mu),
            nu: wrap_angle(nu),
            rho,
            kappa,
            gamma,
            xi,
            eta,
            i0e: bessel_i_scaled(0, kappa)?,
            modes: Vec::new(),
        };
        kj.modes = locate_modes(|t| kj.kernel(t));
        Ok(kj)
    }

    pub fn derived(&self) -> (f64, f64, f64) {
        (self.gamma, self.xi, self.eta)
    }

    pub fn params(&self) -> (f64, f64, f64, f64) {
        (self.mu, self.nu, self.rho, self.kappa)
    }
}

impl CircularDensity for KatoJones {
    fn kernel(&self, theta: f64) -> f64 {
        let r = self.rho;
        let d = 1.0 + r * r - 2.0 * r * (theta - self.gamma).cos();
        let expo = self.kappa * (self.xi * (theta - self.eta).cos() - 2.0 * r * self.nu.cos()) / d;
        // the exponent never exceeds κ, so subtracting it keeps large κ finite
        (1.0 - r * r) / d * (expo - self.kappa).exp()
    }
    fn normalizer(&self) -> f64 {
        TAU * self.i0e
    }
    fn modes(&self) -> Vec<f64> {
        self.modes.clone()
    }
    fn label(&self) -> String {
        format!(
            "kato-jones(mu={}, nu={}, rho={}, kappa={})",
            self.mu, self.nu, self.rho, self.kappa
        )
    }
}
