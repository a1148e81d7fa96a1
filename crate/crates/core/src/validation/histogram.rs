use std::f64::consts::TAU;

use serde::Serialize;

use crate::error::{domain, Result};

/// Density-normalized histogram on `[0, 2π)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Histogram {
    pub edges: Vec<f64>,
    pub counts: Vec<u64>,
    /// Bar heights; `Σ density · width = 1` for a non-empty sample.
    pub density: Vec<f64>,
}

impl Histogram {
    pub fn bin_width(&self) -> f64 {
        self.edges[1] - self.edges[0]
    }

    pub fn centers(&self) -> Vec<f64> {
        self.edges.windows(2).map(|w| 0.5 * (w[0] + w[1])).collect()
    }
}

pub fn histogram(sample: &[f64], bins: usize) -> Result<Histogram> {
    if bins < 2 {
        return domain(format!("a histogram needs at least 2 bins, got {bins}"));
    }
    let width = TAU / bins as f64;
    let edges = (0..=bins).map(|i| i as f64 * width).collect();
    let mut counts = vec![0u64; bins];
    for &x in sample {
        let b = (x / width).floor();
        if b >= 0.0 {
            counts[(b as usize).min(bins - 1)] += 1;
        }
    }
    let n = sample.len().max(1) as f64;
    let density = counts.iter().map(|&c| c as f64 / (n * width)).collect();
    Ok(Histogram { edges, counts, density })
}
