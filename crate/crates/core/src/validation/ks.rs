use std::f64::consts::TAU;

use crate::distributions::CircularDensity;
use crate::error::{domain, Error, Result};

const NUMERIC_CDF_POINTS: usize = 1 << 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignificanceLevel {
    /// α = 0.05
    Five,
    /// α = 0.01
    One,
}

/// Asymptotic one-sample KS critical value: `1.36/√n` (α=0.05), `1.63/√n` (α=0.01).
pub fn ks_critical(n: usize, level: SignificanceLevel) -> f64 {
    let c = match level {
        SignificanceLevel::Five => 1.36,
        SignificanceLevel::One => 1.63,
    };
    c / (n as f64).sqrt()
}

/// A sorted sample.
#[derive(Debug, Clone, PartialEq)]
pub struct EcdfSummary {
    values: Vec<f64>,
}

impl EcdfSummary {
    pub fn new(mut values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptySample);
        }
        if values.iter().any(|v| !v.is_finite()) {
            return domain("sample contains non-finite values");
        }
        values.sort_unstable_by(f64::total_cmp);
        Ok(Self { values })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Right-continuous empirical CDF.
    pub fn eval(&self, x: f64) -> f64 {
        self.values.partition_point(|&v| v <= x) as f64 / self.len() as f64
    }
}

/// `sup |F_n − F|`, checking both one-sided gaps at every sample point.
pub fn ks_statistic(sample: &EcdfSummary, cdf: impl Fn(f64) -> f64) -> f64 {
    let n = sample.len() as f64;
    sample.values().iter().enumerate().fold(0.0f64, |d, (i, &x)| {
        let f = cdf(x);
        let above = (i + 1) as f64 / n - f;
        let below = f - i as f64 / n;
        d.max(above).max(below)
    })
}

/// Cumulative trapezoid of a density on a uniform grid over `[0, 2π]` with
/// linear interpolation between nodes.
#[derive(Debug, Clone)]
pub struct NumericCdf {
    step: f64,
    cumulative: Vec<f64>,
}

impl NumericCdf {
    pub fn new(f: &dyn CircularDensity) -> Self {
        Self::with_points(f, NUMERIC_CDF_POINTS)
    }

    pub fn with_points(f: &dyn CircularDensity, points: usize) -> Self {
        let step = TAU / points as f64;
        let mut cumulative = Vec::with_capacity(points + 1);
        cumulative.push(0.0);
        let mut prev = f.pdf(0.0);
        let mut acc = 0.0;
        for i in 1..=points {
            let next = f.pdf(i as f64 * step);
            acc += 0.5 * (prev + next) * step;
            cumulative.push(acc);
            prev = next;
        }
        for c in cumulative.iter_mut() {
            *c /= acc;
        }
        Self { step, cumulative }
    }

    pub fn eval(&self, theta: f64) -> f64 {
        if theta <= 0.0 {
            return 0.0;
        }
        let pos = theta / self.step;
        let i = pos.floor() as usize;
        if i + 1 >= self.cumulative.len() {
            return 1.0;
        }
        let w = pos - i as f64;
        self.cumulative[i] * (1.0 - w) + self.cumulative[i + 1] * w
    }

    /// The closed-form CDF of `f` when it has one, otherwise the numeric one.
    pub fn best_for(f: &dyn CircularDensity) -> impl Fn(f64) -> f64 + '_ {
        let numeric = f.cdf(1.0).is_none().then(|| Self::new(f));
        move |t| match &numeric {
            Some(n) => n.eval(t),
            None => f.cdf(t).unwrap_or(0.0),
        }
    }
}
