//! Curved-torus geometry: parametrization, area element and area-measure
//! quadrant proportions.
//!
//! The surface is parametrized by the horizontal angle `theta1` (around the
//! axis of revolution) and the vertical angle `theta2` (around the tube):
//!
//! ```text
//! x = (R + r cos theta2) cos theta1
//! y = (R + r cos theta2) sin theta1
//! z = r sin theta2
//! ```

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::special::simpson;

/// Reduces an angle into `[0, 2π)`.
pub fn wrap_angle(theta: f64) -> f64 {
    let w = theta.rem_euclid(TAU);
    // rem_euclid can round up to exactly TAU for tiny negative inputs
    if w >= TAU {
        0.0
    } else {
        w
    }
}

/// A curved torus with major radius `R` and minor radius `r`, `0 < r ≤ R`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TorusGeometry {
    major: f64,
    minor: f64,
}

impl TorusGeometry {
    pub fn new(major_radius: f64, minor_radius: f64) -> Result<Self> {
        if !(major_radius.is_finite() && major_radius > 0.0) {
            return domain(format!("major radius R must be positive, got {major_radius}"));
        }
        if !(minor_radius.is_finite() && minor_radius > 0.0) {
            return domain(format!("minor radius r must be positive, got {minor_radius}"));
        }
        if minor_radius > major_radius {
            return domain(format!(
                "aspect r/R must lie in (0, 1], got r={minor_radius} R={major_radius}"
            ));
        }
        Ok(Self {
            major: major_radius,
            minor: minor_radius,
        })
    }

    pub fn major_radius(&self) -> f64 {
        self.major
    }

    pub fn minor_radius(&self) -> f64 {
        self.minor
    }

    /// Aspect ratio `a = r/R`.
    pub fn aspect(&self) -> f64 {
        self.minor / self.major
    }

    /// Horn torus: the tube touches the axis and the area element vanishes at `theta2 = π`.
    pub fn is_horn(&self) -> bool {
        self.minor == self.major
    }

    pub fn embed(&self, p: AnglePair) -> Point3 {
        let (s1, c1) = p.theta1.sin_cos();
        let (s2, c2) = p.theta2.sin_cos();
        let ring = self.major + self.minor * c2;
        Point3 {
            x: ring * c1,
            y: ring * s1,
            z: self.minor * s2,
        }
    }

    /// Square root of the Gram determinant of the parametrization, `r(R + r cos theta2)`.
    pub fn area_element(&self, theta2: f64) -> f64 {
        // clamp the horn-torus zero against rounding
        (self.minor * (self.major + self.minor * theta2.cos())).max(0.0)
    }

    /// Closed-form surface area `4π² r R`.
    pub fn total_area(&self) -> f64 {
        4.0 * PI * PI * self.minor * self.major
    }

    /// Surface area by composite Simpson over the parameter square, `panels` per axis.
    pub fn area_by_quadrature(&self, panels: usize) -> f64 {
        let inner = |t2: f64| simpson(|_t1| self.area_element(t2), 0.0, TAU, panels);
        simpson(inner, 0.0, TAU, panels)
    }

    /// Area-measure probabilities of the 16 quadrant combinations; entry `[i][j]`
    /// is for `theta1` in quadrant `i` and `theta2` in quadrant `j`.
    pub fn quadrant_area_proportions(&self) -> [[f64; 4]; 4] {
        quadrant_proportions_for_aspect(self.aspect())
    }

    /// Squared residual of the implicit torus equation, `(√(x²+y²) − R)² + z² − r²`.
    pub fn implicit_residual(&self, p: Point3) -> f64 {
        let ring = (p.x * p.x + p.y * p.y).sqrt() - self.major;
        ring * ring + p.z * p.z - self.minor * self.minor
    }
}

/// Quadrant proportions for an aspect ratio in `[0, 1]`; `a = 0` is the flat torus.
pub fn quadrant_proportions_for_aspect(a: f64) -> [[f64; 4]; 4] {
    let g2 = |t: f64| (t + a * t.sin()) / TAU;
    let mut theta2_mass = [0.0; 4];
    for (j, m) in theta2_mass.iter_mut().enumerate() {
        let lo = j as f64 * FRAC_PI_2;
        let hi = (j + 1) as f64 * FRAC_PI_2;
        *m = g2(hi) - g2(lo);
    }
    let mut table = [[0.0; 4]; 4];
    for row in table.iter_mut() {
        for (cell, m) in row.iter_mut().zip(theta2_mass) {
            *cell = 0.25 * m;
        }
    }
    table
}

/// Quadrant index `0..4` of an angle in `[0, 2π)`.
pub fn quadrant_of(theta: f64) -> usize {
    ((wrap_angle(theta) / FRAC_PI_2) as usize).min(3)
}

/// A point of the parameter space `[0, 2π)²`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AnglePair {
    pub theta1: f64,
    pub theta2: f64,
}

impl AnglePair {
    /// Builds a pair, reducing both angles modulo `2π`.
    pub fn new(theta1: f64, theta2: f64) -> Self {
        Self {
            theta1: wrap_angle(theta1),
            theta2: wrap_angle(theta2),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}
