use std::f64::consts::PI;

use super::{AcceptanceReport, RngStream};
use crate::error::{domain, Result};
use crate::geometry::wrap_angle;

/// Best–Fisher rejection sampler for von Mises with a wrapped-Cauchy envelope.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VmBestFisher {
    mu: f64,
    kappa: f64,
    r: f64,
}

impl VmBestFisher {
    pub fn new(mu: f64, kappa: f64) -> Result<Self> {
        if !(kappa > 0.0 && kappa.is_finite()) {
            return domain(format!("kappa must be positive, got {kappa}"));
        }
        if !mu.is_finite() {
            return domain("mu must be finite");
        }
        let tau = 1.0 + (1.0 + 4.0 * kappa * kappa).sqrt();
        let rho = (tau - (2.0 * tau).sqrt()) / (2.0 * kappa);
        let r = (1.0 + rho * rho) / (2.0 * rho);
        Ok(Self { mu, kappa, r })
    }

    /// Envelope parameter `r = (1 + ρ²)/(2ρ)`.
    pub fn envelope_r(&self) -> f64 {
        self.r
    }

    /// One accepted draw and the number of proposals it took.
    pub fn draw(&self, rng: &mut RngStream) -> (f64, u64) {
        let mut tries = 0;
        loop {
            tries += 1;
            let z = (PI * rng.uniform()).cos();
            let f = (1.0 + self.r * z) / (self.r + z);
            let c = self.kappa * (self.r - f);
            let u2 = rng.uniform();
            if c * (2.0 - c) - u2 > 0.0 || (c / u2).ln() + 1.0 - c >= 0.0 {
                let angle = f.clamp(-1.0, 1.0).acos();
                let signed = if rng.uniform() < 0.5 { -angle } else { angle };
                return (wrap_angle(self.mu + signed), tries);
            }
        }
    }

    pub fn sample(&self, n: usize, rng: &mut RngStream) -> (Vec<f64>, AcceptanceReport) {
        let mut proposed = 0;
        let out = (0..n)
            .map(|_| {
                let (x, t) = self.draw(rng);
                proposed += t;
                x
            })
            .collect();
        let mut report = AcceptanceReport::new("vMBFR")
            .with_param("kappa", self.kappa)
            .with_param("mu", self.mu);
        report.proposed = proposed;
        report.accepted = n as u64;
        (out, report)
    }
}

pub fn vmbfr_sample(mu: f64, kappa: f64, n: usize, rng: &mut RngStream) -> Result<(Vec<f64>, AcceptanceReport)> {
    Ok(VmBestFisher::new(mu, kappa)?.sample(n, rng))
}
