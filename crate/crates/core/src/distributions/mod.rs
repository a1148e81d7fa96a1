//! Circular densities and their area-weighted marginals on the curved torus.
//!
//! Every density is stored as an unnormalized kernel plus a separately
//! computed normalizer, so that the torus weighting `1 + a cos θ` can reuse
//! the kernel of its base law.

mod catalog;
mod circular;
mod weighted;

use std::f64::consts::TAU;
use std::fmt::Debug;

pub use catalog::{default_catalog, CatalogEntry};
pub use circular::{
    kato_jones_derived_params, mobius_transform, CircularUniform, KatoJones, UniformTorusMarginal, VonMises,
    WrappedCauchy,
};
pub use weighted::{locate_modes, numeric_normalizer, TorusWeighted};

use crate::error::{domain, Result};
use crate::special::bessel_i;

/// A probability density on `[0, 2π)`.
pub trait CircularDensity: Send + Sync + Debug {
    /// Unnormalized, 2π-periodic kernel.
    fn kernel(&self, theta: f64) -> f64;

    /// `∫₀^{2π} kernel`.
    fn normalizer(&self) -> f64;

    fn pdf(&self, theta: f64) -> f64 {
        self.kernel(theta) / self.normalizer()
    }

    fn ln_pdf(&self, theta: f64) -> f64 {
        self.pdf(theta).ln()
    }

    /// Closed-form CDF on `[0, 2π]`, when one exists.
    fn cdf(&self, _theta: f64) -> Option<f64> {
        None
    }

    /// Locations of the local maxima in `[0, 2π)`.
    fn modes(&self) -> Vec<f64>;

    /// `∫ pdf(θ)(1 + a cos θ) dθ` in closed form, when available.
    fn weighted_mass(&self, _aspect: f64) -> Option<f64> {
        None
    }

    fn label(&self) -> String;
}

impl<T: CircularDensity + ?Sized> CircularDensity for Box<T> {
    fn kernel(&self, theta: f64) -> f64 {
        (**self).kernel(theta)
    }
    fn normalizer(&self) -> f64 {
        (**self).normalizer()
    }
    fn pdf(&self, theta: f64) -> f64 {
        (**self).pdf(theta)
    }
    fn ln_pdf(&self, theta: f64) -> f64 {
        (**self).ln_pdf(theta)
    }
    fn cdf(&self, theta: f64) -> Option<f64> {
        (**self).cdf(theta)
    }
    fn modes(&self) -> Vec<f64> {
        (**self).modes()
    }
    fn weighted_mass(&self, aspect: f64) -> Option<f64> {
        (**self).weighted_mass(aspect)
    }
    fn label(&self) -> String {
        (**self).label()
    }
}

pub(crate) fn check_aspect(a: f64) -> Result<()> {
    if !(a > 0.0 && a <= 1.0) {
        return domain(format!("aspect a = r/R must lie in (0, 1], got {a}"));
    }
    Ok(())
}

/// CDF of the area-uniform `theta2` marginal, `(θ + a sin θ)/(2π)`.
pub fn g2_cdf(theta2: f64, a: f64) -> Result<f64> {
    check_aspect(a)?;
    if !(0.0..=TAU).contains(&theta2) {
        return domain(format!("theta2 must lie in [0, 2π], got {theta2}"));
    }
    Ok(((theta2 + a * theta2.sin()) / TAU).clamp(0.0, 1.0))
}

/// Closed-form normalizer of `e^{κ cos(θ−μ)} (1 + a cos θ)`:
/// `2π [I₀(κ) + a cos μ I₁(κ)]`.
pub fn vm_torus_normalizer(kappa: f64, mu: f64, a: f64) -> Result<f64> {
    if !(kappa > 0.0 && kappa.is_finite()) {
        return domain(format!("kappa must be positive, got {kappa}"));
    }
    if !(0.0..=1.0).contains(&a) {
        return domain(format!("aspect must lie in [0, 1], got {a}"));
    }
    Ok(TAU * (bessel_i(0, kappa)? + a * mu.cos() * bessel_i(1, kappa)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::{periodic_integral, simpson, QuadratureSpec};
    use std::f64::consts::{FRAC_PI_2, PI};

    #[test]
    fn g2_cdf_values() {
        for &a in &[0.1, 0.5, 1.0] {
            assert!((g2_cdf(TAU, a).unwrap() - 1.0).abs() < 1e-15);
            assert!((g2_cdf(PI, a).unwrap() - 0.5).abs() < 1e-15);
            assert_eq!(g2_cdf(0.0, a).unwrap(), 0.0);
        }
        let v = g2_cdf(FRAC_PI_2, 0.5).unwrap();
        let quad = simpson(|t| (1.0 + 0.5 * t.cos()) / TAU, 0.0, FRAC_PI_2, 1024);
        assert!((v - quad).abs() < 1e-13);
        assert!((v - 0.329_577).abs() < 1e-6);
    }

    #[test]
    fn g2_cdf_domain() {
        assert!(g2_cdf(1.0, 0.0).is_err());
        assert!(g2_cdf(1.0, 1.5).is_err());
        assert!(g2_cdf(-0.1, 0.5).is_err());
        assert!(g2_cdf(7.0, 0.5).is_err());
    }

    #[test]
    fn g2_cdf_monotone_at_horn() {
        let mut prev = 0.0;
        for i in 0..=10_000 {
            let v = g2_cdf(TAU * i as f64 / 10_000.0, 1.0).unwrap();
            assert!(v >= prev);
            prev = v;
        }
    }

    #[test]
    fn vm_torus_normalizer_cases() {
        let i0 = bessel_i(0, 3.0).unwrap();
        for &a in &[0.1, 0.7, 1.0] {
            let c = vm_torus_normalizer(3.0, FRAC_PI_2, a).unwrap();
            assert!(((c - TAU * i0) / c).abs() < 1e-15);
        }
        let c = vm_torus_normalizer(3.0, 0.4, 1e-15).unwrap();
        assert!(((c - TAU * i0) / c).abs() < 1e-14);
        // frozen 2^20-panel trapezoid of e^{cos θ}(1 + 0.5 cos θ)
        let c = vm_torus_normalizer(1.0, 0.0, 0.5).unwrap();
        assert!(((c - 9.730426210225026) / c).abs() < 1e-10);
        let q = periodic_integral(|t| t.cos().exp() * (1.0 + 0.5 * t.cos()), QuadratureSpec::default()).unwrap();
        assert!(((c - q) / c).abs() < 1e-10);
        assert!(vm_torus_normalizer(0.0, 0.0, 0.5).is_err());
        assert!(vm_torus_normalizer(-1.0, 0.0, 0.5).is_err());
    }

    #[test]
    fn vm_torus_normalizer_positive_at_horn() {
        let c = vm_torus_normalizer(100.0, PI, 1.0).unwrap();
        assert!(c > 0.0);
    }
}
