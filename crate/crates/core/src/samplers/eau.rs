use std::f64::consts::PI;

use super::{AcceptanceReport, RngStream};
use crate::distributions::check_aspect;
use crate::error::{domain, Result};
use crate::geometry::{wrap_angle, AnglePair};

/// Rejection-free transform of a uniform pair `(x, u)` into a draw with CDF
/// `(y + a sin y)/(2π)`.
///
/// With `p(x) = (1 + a cos x)/2`, returns `x` when `u < p(x)`, otherwise
/// reflects: `π − x` for `x ≤ π` and `3π − x` for `x > π`.
#[inline]
pub fn eau_transform(x: f64, u: f64, a: f64) -> f64 {
    let keep = 0.5 * (1.0 + a * x.cos());
    let y = if u < keep {
        x
    } else if x <= PI {
        PI - x
    } else {
        3.0 * PI - x
    };
    wrap_angle(y)
}

/// `n` area-uniform pairs on the curved torus with aspect `a`, using exactly
/// three uniforms per pair.
pub fn eau_sample(n: usize, a: f64, rng: &mut RngStream) -> Result<(Vec<AnglePair>, AcceptanceReport)> {
    check_aspect(a)?;
    if n == 0 {
        return domain("sample size must be at least 1");
    }
    let pairs = (0..n)
        .map(|_| {
            let w = rng.angle();
            let x = rng.angle();
            let u = rng.uniform();
            AnglePair {
                theta1: w,
                theta2: eau_transform(x, u, a),
            }
        })
        .collect();
    let mut report = AcceptanceReport::new("EAU").with_param("a", a);
    report.proposed = n as u64;
    report.accepted = n as u64;
    Ok((pairs, report))
}

/// Pairs uniform on the flat parameter square, ignoring the area measure.
pub fn flat_uniform_pairs(n: usize, rng: &mut RngStream) -> Vec<AnglePair> {
    (0..n)
        .map(|_| {
            let theta1 = rng.angle();
            let theta2 = rng.angle();
            AnglePair { theta1, theta2 }
        })
        .collect()
}
