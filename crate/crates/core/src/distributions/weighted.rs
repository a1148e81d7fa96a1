use std::f64::consts::TAU;

use super::{check_aspect, CircularDensity};
use crate::error::Result;
use crate::geometry::wrap_angle;
use crate::special::{golden_max, periodic_integral, QuadratureSpec};

const MODE_GRID: usize = 4096;
const MODE_TOL: f64 = 1e-10;

/// Local maxima of a smooth 2π-periodic function: grid argmax candidates
/// refined by golden-section search.
pub fn locate_modes(f: impl Fn(f64) -> f64) -> Vec<f64> {
    let h = TAU / MODE_GRID as f64;
    let values: Vec<f64> = (0..MODE_GRID).map(|i| f(i as f64 * h)).collect();
    let mut modes = Vec::new();
    for i in 0..MODE_GRID {
        let prev = values[(i + MODE_GRID - 1) % MODE_GRID];
        let next = values[(i + 1) % MODE_GRID];
        let v = values[i];
        // a plateau counts once, at its left end
        if v > prev && v >= next {
            let t = i as f64 * h;
            modes.push(wrap_angle(golden_max(&f, t - h, t + h, MODE_TOL)));
        }
    }
    modes.dedup_by(|a, b| (*a - *b).abs() < 10.0 * MODE_TOL);
    modes
}

/// `∫ base(θ)(1 + a cos θ) dθ` for a normalized base density, by periodic quadrature.
pub fn numeric_normalizer(base: &dyn CircularDensity, a: f64) -> Result<f64> {
    periodic_integral(|t| base.pdf(t) * (1.0 + a * t.cos()), QuadratureSpec::default())
}

/// Area-weighted marginal `base(θ)(1 + a cos θ) / C` of the vertical angle.
#[derive(Debug, Clone)]
pub struct TorusWeighted<D> {
    base: D,
    a: f64,
    normalizer: f64,
    modes: Vec<f64>,
}

impl<D: CircularDensity> TorusWeighted<D> {
    /// Uses the base law's closed-form weighted mass when it has one,
    /// quadrature otherwise.
    pub fn new(base: D, a: f64) -> Result<Self> {
        check_aspect(a)?;
        let mass = match base.weighted_mass(a) {
            Some(m) => m,
            None => numeric_normalizer(&base, a)?,
        };
        Self::with_mass(base, a, mass)
    }

    /// Always integrates the weighted kernel numerically.
    pub fn new_numeric(base: D, a: f64) -> Result<Self> {
        check_aspect(a)?;
        let mass = numeric_normalizer(&base, a)?;
        Self::with_mass(base, a, mass)
    }

    fn with_mass(base: D, a: f64, mass: f64) -> Result<Self> {
        let normalizer = base.normalizer() * mass;
        let mut w = Self {
            base,
            a,
            normalizer,
            modes: Vec::new(),
        };
        w.modes = locate_modes(|t| w.kernel(t));
        Ok(w)
    }

    pub fn base(&self) -> &D {
        &self.base
    }

    pub fn aspect(&self) -> f64 {
        self.a
    }

    /// `C = ∫ base(θ)(1 + a cos θ) dθ` relative to the normalized base law.
    pub fn weighted_mass(&self) -> f64 {
        self.normalizer / self.base.normalizer()
    }
}

impl<D: CircularDensity> CircularDensity for TorusWeighted<D> {
    fn kernel(&self, theta: f64) -> f64 {
        self.base.kernel(theta) * (1.0 + self.a * theta.cos())
    }
    fn normalizer(&self) -> f64 {
        self.normalizer
    }
    fn modes(&self) -> Vec<f64> {
        self.modes.clone()
    }
    fn label(&self) -> String {
        format!("torus-weighted[{}](a={})", self.base.label(), self.a)
    }
}
