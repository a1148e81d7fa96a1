use super::{AcceptanceReport, HarSampler, RngStream};
use crate::distributions::{CircularDensity, TorusWeighted};
use crate::error::{domain, Result};
use crate::geometry::{AnglePair, Point3, TorusGeometry};

/// Source of the horizontal angle, optionally conditioned on the vertical one.
pub trait Theta1Sampler {
    fn draw_theta1(&self, theta2: f64, rng: &mut RngStream) -> f64;
}

/// `theta1` uniform on `[0, 2π)`.
#[derive(Debug, Clone, Copy, Default)]
pub struct UniformAngle;

impl Theta1Sampler for UniformAngle {
    fn draw_theta1(&self, _theta2: f64, rng: &mut RngStream) -> f64 {
        rng.angle()
    }
}

#[derive(Debug, Clone)]
pub struct TorusSample {
    pub pairs: Vec<AnglePair>,
    pub points: Vec<Point3>,
    /// Counts for the `theta2` draws.
    pub report: AcceptanceReport,
}

/// `n` draws from `h(θ₁ | θ₂) · h₂(θ₂)(1 + a cos θ₂)/C` and their embedding.
///
/// `theta2` is drawn first by envelope rejection, then `theta1` given `theta2`.
pub fn torus_sample<D: CircularDensity>(
    theta1: &dyn Theta1Sampler,
    weighted2: &HarSampler<TorusWeighted<D>>,
    n: usize,
    rng: &mut RngStream,
    geometry: &TorusGeometry,
) -> Result<TorusSample> {
    let a = weighted2.density().aspect();
    if (a - geometry.aspect()).abs() > 1e-12 {
        return domain(format!(
            "theta2 marginal uses aspect {a} but the geometry has {}",
            geometry.aspect()
        ));
    }
    let mut pairs = Vec::with_capacity(n);
    let mut proposed = 0;
    for _ in 0..n {
        let (t2, tries) = weighted2.draw(rng);
        proposed += tries;
        let t1 = theta1.draw_theta1(t2, rng);
        pairs.push(AnglePair::new(t1, t2));
    }
    let points = pairs.iter().map(|&p| geometry.embed(p)).collect();
    let mut report = AcceptanceReport::new("HAR-torus")
        .with_param("a", a)
        .with_param("k", weighted2.envelope().cell_count() as f64);
    report.proposed = proposed;
    report.accepted = n as u64;
    Ok(TorusSample { pairs, points, report })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distributions::{CircularUniform, VonMises};

    #[test]
    fn aspect_mismatch_is_rejected() {
        let g = TorusGeometry::new(3.0, 1.5).unwrap();
        let w = HarSampler::new(TorusWeighted::new(CircularUniform, 0.3).unwrap(), 100).unwrap();
        let mut rng = RngStream::new(1);
        assert!(torus_sample(&UniformAngle, &w, 10, &mut rng, &g).is_err());
    }

    #[test]
    fn points_lie_on_surface() {
        let g = TorusGeometry::new(3.0, 1.5).unwrap();
        let w = HarSampler::new(TorusWeighted::new(VonMises::new(0.0, 1.0).unwrap(), 0.5).unwrap(), 500).unwrap();
        let h1 = HarSampler::new(VonMises::new(0.0, 1.0).unwrap(), 500).unwrap();
        let mut rng = RngStream::new(1);
        let s = torus_sample(&h1, &w, 1000, &mut rng, &g).unwrap();
        assert_eq!(s.pairs.len(), 1000);
        for p in s.points {
            assert!(g.implicit_residual(p).abs() < 1e-12);
        }
    }
}
