use std::f64::consts::TAU;

use serde::Serialize;

use super::SignificanceLevel;
use crate::distributions::CircularDensity;
use crate::error::{domain, Error, Result};
use crate::geometry::{quadrant_of, AnglePair, TorusGeometry};
use crate::special::simpson;

const MIN_QUADRANT_SAMPLE: usize = 160;

/// Upper critical values of the chi-square law for the degrees of freedom used here.
pub fn chi_square_critical(df: usize, level: SignificanceLevel) -> Option<f64> {
    match (df, level) {
        (15, SignificanceLevel::Five) => Some(24.996),
        (15, SignificanceLevel::One) => Some(30.578),
        (35, SignificanceLevel::Five) => Some(49.802),
        (35, SignificanceLevel::One) => Some(57.342),
        _ => None,
    }
}

/// Observed quadrant-combination counts against area-measure proportions.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QuadrantTable {
    /// `observed[i][j]`: `theta1` in quadrant `i`, `theta2` in quadrant `j`.
    pub observed: [[u64; 4]; 4],
    pub expected: [[f64; 4]; 4],
    pub statistic: f64,
    pub n: usize,
}

impl QuadrantTable {
    pub fn degrees_of_freedom(&self) -> usize {
        15
    }

    pub fn passes(&self, level: SignificanceLevel) -> bool {
        self.statistic < chi_square_critical(15, level).unwrap()
    }

    pub fn relative_frequencies(&self) -> [[f64; 4]; 4] {
        let mut out = [[0.0; 4]; 4];
        for (i, row) in self.observed.iter().enumerate() {
            for (j, &c) in row.iter().enumerate() {
                out[i][j] = c as f64 / self.n as f64;
            }
        }
        out
    }
}

/// Pearson chi-square of the 16 quadrant combinations (15 degrees of freedom).
pub fn chi_square_quadrants(pairs: &[AnglePair], g: &TorusGeometry) -> Result<QuadrantTable> {
    if pairs.len() < MIN_QUADRANT_SAMPLE {
        return Err(Error::UndersizedSample {
            got: pairs.len(),
            need: MIN_QUADRANT_SAMPLE,
        });
    }
    let mut observed = [[0u64; 4]; 4];
    for p in pairs {
        observed[quadrant_of(p.theta1)][quadrant_of(p.theta2)] += 1;
    }
    let expected = g.quadrant_area_proportions();
    let n = pairs.len() as f64;
    let mut statistic = 0.0;
    for i in 0..4 {
        for j in 0..4 {
            let e = n * expected[i][j];
            let d = observed[i][j] as f64 - e;
            statistic += d * d / e;
        }
    }
    Ok(QuadrantTable {
        observed,
        expected,
        statistic,
        n: pairs.len(),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BinnedChiSquare {
    pub statistic: f64,
    pub degrees_of_freedom: usize,
}

/// Pearson chi-square of equal-width bins on `[0, 2π)` against a density.
pub fn chi_square_binned(sample: &[f64], f: &dyn CircularDensity, bins: usize) -> Result<BinnedChiSquare> {
    if bins < 2 {
        return domain("need at least 2 bins");
    }
    if sample.is_empty() {
        return Err(Error::EmptySample);
    }
    let width = TAU / bins as f64;
    let mut counts = vec![0u64; bins];
    for &x in sample {
        counts[((x / width) as usize).min(bins - 1)] += 1;
    }
    let n = sample.len() as f64;
    let statistic = counts
        .iter()
        .enumerate()
        .map(|(b, &c)| {
            let lo = b as f64 * width;
            let e = n * simpson(|t| f.pdf(t), lo, lo + width, 64);
            (c as f64 - e).powi(2) / e
        })
        .sum();
    Ok(BinnedChiSquare {
        statistic,
        degrees_of_freedom: bins - 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distributions::CircularUniform;

    #[test]
    fn undersized_sample() {
        let g = TorusGeometry::new(3.0, 1.5).unwrap();
        let pairs = vec![AnglePair::new(0.1, 0.1); 159];
        assert_eq!(
            chi_square_quadrants(&pairs, &g),
            Err(Error::UndersizedSample { got: 159, need: 160 })
        );
    }

    #[test]
    fn exact_proportions_give_zero() {
        // stratified grid on the flat torus matches a near-flat geometry exactly
        let g = TorusGeometry::new(1.0, 1e-12).unwrap();
        let mut pairs = Vec::new();
        for i in 0..40 {
            for j in 0..40 {
                pairs.push(AnglePair::new(
                    TAU * (i as f64 + 0.5) / 40.0,
                    TAU * (j as f64 + 0.5) / 40.0,
                ));
            }
        }
        let t = chi_square_quadrants(&pairs, &g).unwrap();
        assert!(t.statistic < 1e-6);
        assert!(t.passes(SignificanceLevel::One));
        let total: u64 = t.observed.iter().flatten().sum();
        assert_eq!(total as usize, pairs.len());
    }

    #[test]
    fn binned_uniform() {
        let sample: Vec<f64> = (0..3600).map(|i| TAU * (i as f64 + 0.5) / 3600.0).collect();
        let r = chi_square_binned(&sample, &CircularUniform, 36).unwrap();
        assert_eq!(r.degrees_of_freedom, 35);
        assert!(r.statistic < 1e-9);
    }
}
