//! Step-function envelopes built from per-cell density suprema.
//!
//! The support `[lo, hi]` is cut into `k` equal cells of width `B`. Cell `i`
//! gets height `H_i ≥ sup f` over the cell; the envelope density is
//! `H_i / (B ΣH)` on cell `i` and the rejection constant is `M = B ΣH`, so the
//! overall acceptance probability is `1/M`.

use std::f64::consts::TAU;

use super::{AcceptanceReport, RngStream, Theta1Sampler};
use crate::distributions::CircularDensity;
use crate::error::{domain, Error, Result};
use crate::special::simpson;

/// Cell count used when none is given.
pub const DEFAULT_CELLS: usize = 500;

// absorbs last-ulp rounding when a density is evaluated at or beside its peak
const HEIGHT_SLACK: f64 = 1e-12;

/// How cell heights are chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum HeightRule {
    /// Max of the cell endpoints and any interior mode: a true supremum.
    #[default]
    Supremum,
    /// Max of the two cell endpoints only. Under-dominates in any cell that
    /// holds an interior maximum.
    GridEndpoints,
}

#[derive(Debug, Clone, PartialEq)]
pub struct HarEnvelope {
    lo: f64,
    hi: f64,
    bin: f64,
    heights: Vec<f64>,
    cumulative: Vec<f64>,
    global_m: f64,
    rule: HeightRule,
}

/// Envelope over `[lo, hi]` with `k` cells and supremum heights.
pub fn har_build(f: &dyn CircularDensity, lo: f64, hi: f64, k: usize) -> Result<HarEnvelope> {
    HarEnvelope::build(f, lo, hi, k)
}

impl HarEnvelope {
    pub fn build(f: &dyn CircularDensity, lo: f64, hi: f64, k: usize) -> Result<Self> {
        Self::build_with(f, lo, hi, k, HeightRule::Supremum)
    }

    /// Envelope on the full circle `[0, 2π)`.
    pub fn circle(f: &dyn CircularDensity, k: usize) -> Result<Self> {
        Self::build(f, 0.0, TAU, k)
    }

    pub fn build_with(f: &dyn CircularDensity, lo: f64, hi: f64, k: usize, rule: HeightRule) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            return Err(Error::InvalidSupport { lo, hi });
        }
        if k < 2 {
            return domain(format!("an envelope needs at least 2 cells, got {k}"));
        }
        let bin = (hi - lo) / k as f64;
        let edge = |i: usize| if i == k { hi } else { lo + i as f64 * bin };
        let mut edge_values = Vec::with_capacity(k + 1);
        for i in 0..=k {
            let x = edge(i);
            let v = f.pdf(x);
            if !v.is_finite() || v < 0.0 {
                return Err(Error::NonFinite { at: x });
            }
            edge_values.push(v);
        }
        let mut heights: Vec<f64> = edge_values.windows(2).map(|w| w[0].max(w[1])).collect();
        if rule == HeightRule::Supremum {
            for m in f.modes() {
                // place every periodic copy of the mode that falls inside the support
                let mut x = m - TAU * ((m - lo) / TAU).floor();
                while x < hi {
                    if x > lo {
                        let i = (((x - lo) / bin) as usize).min(k - 1);
                        let v = f.pdf(x);
                        if !v.is_finite() {
                            return Err(Error::NonFinite { at: x });
                        }
                        heights[i] = heights[i].max(v);
                    }
                    x += TAU;
                }
            }
            for h in heights.iter_mut() {
                *h *= 1.0 + HEIGHT_SLACK;
            }
        }
        let total: f64 = heights.iter().sum();
        if total.is_nan() || total <= 0.0 {
            return domain("density vanishes on the whole support");
        }
        let mut acc = 0.0;
        let mut cumulative: Vec<f64> = heights
            .iter()
            .map(|h| {
                acc += h;
                acc / total
            })
            .collect();
        *cumulative.last_mut().unwrap() = 1.0;
        Ok(Self {
            lo,
            hi,
            bin,
            heights,
            cumulative,
            global_m: bin * total,
            rule,
        })
    }

    pub fn support(&self) -> (f64, f64) {
        (self.lo, self.hi)
    }

    pub fn cell_count(&self) -> usize {
        self.heights.len()
    }

    pub fn bin_length(&self) -> f64 {
        self.bin
    }

    pub fn heights(&self) -> &[f64] {
        &self.heights
    }

    pub fn height_rule(&self) -> HeightRule {
        self.rule
    }

    /// Cell-selection probabilities `H_i / ΣH`.
    pub fn cell_probs(&self) -> Vec<f64> {
        let mut prev = 0.0;
        self.cumulative
            .iter()
            .map(|&c| {
                let p = c - prev;
                prev = c;
                p
            })
            .collect()
    }

    /// Rejection constant `M = B ΣH`.
    pub fn global_m(&self) -> f64 {
        self.global_m
    }

    pub fn expected_acceptance(&self) -> f64 {
        1.0 / self.global_m
    }

    pub fn cell_bounds(&self, i: usize) -> (f64, f64) {
        let left = self.lo + i as f64 * self.bin;
        let right = if i + 1 == self.cell_count() {
            self.hi
        } else {
            left + self.bin
        };
        (left, right)
    }

    pub fn cell_of(&self, x: f64) -> usize {
        (((x - self.lo) / self.bin).max(0.0) as usize).min(self.cell_count() - 1)
    }

    /// `P(A_i) = ∫_{A_i} f`.
    pub fn cell_mass(&self, f: &dyn CircularDensity, i: usize) -> f64 {
        let (l, r) = self.cell_bounds(i);
        simpson(|x| f.pdf(x), l, r, 64)
    }

    /// Per-cell constant `M_i = B H_i / P(A_i)`; the acceptance probability of
    /// a proposal that lands in cell `i` is `1/M_i`.
    pub fn cell_m(&self, f: &dyn CircularDensity, i: usize) -> f64 {
        self.bin * self.heights[i] / self.cell_mass(f, i)
    }

    #[inline]
    pub(crate) fn select_cell(&self, u: f64) -> usize {
        self.cumulative.partition_point(|&c| c <= u).min(self.cell_count() - 1)
    }

    /// A uniform point of cell `i` from `u ∈ [0, 1)`.
    #[inline]
    pub(crate) fn point_in_cell(&self, i: usize, u: f64) -> f64 {
        let x = self.lo + (i as f64 + u) * self.bin;
        if x >= self.hi {
            self.hi.next_down()
        } else {
            x
        }
    }

    /// Evaluates `f` on `points` equally spaced points of the support and
    /// compares every value to the height of its cell.
    pub fn check_dominance(&self, f: &dyn CircularDensity, points: usize) -> DominanceCheck {
        let step = (self.hi - self.lo) / points as f64;
        let mut violations = 0;
        let mut worst_ratio = 0.0f64;
        let mut worst_at = self.lo;
        for j in 0..points {
            let x = self.lo + j as f64 * step;
            let i = self.cell_of(x);
            let ratio = f.pdf(x) / self.heights[i];
            if ratio > 1.0 {
                violations += 1;
            }
            if ratio > worst_ratio {
                worst_ratio = ratio;
                worst_at = x;
            }
        }
        DominanceCheck {
            points,
            violations,
            worst_ratio,
            worst_at,
        }
    }
}

/// Outcome of a dense-grid dominance scan.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DominanceCheck {
    pub points: usize,
    pub violations: usize,
    /// Largest `f(x) / H_cell(x)` seen.
    pub worst_ratio: f64,
    pub worst_at: f64,
}

impl DominanceCheck {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

/// Proposals and acceptances in one envelope cell.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CellTally {
    pub proposed: u64,
    pub accepted: u64,
}

/// Draws `n` exact samples of `f` by rejection under `env`.
pub fn har_sample_stream(
    env: &HarEnvelope,
    f: &dyn CircularDensity,
    n: usize,
    rng: &mut RngStream,
) -> (Vec<f64>, AcceptanceReport) {
    let mut out = Vec::with_capacity(n);
    let mut proposed = 0u64;
    while out.len() < n {
        let (x, tries) = draw_one(env, f, rng, |_, _| {});
        proposed += tries;
        out.push(x);
    }
    let mut report = AcceptanceReport::new("HAR").with_param("k", env.cell_count() as f64);
    report.proposed = proposed;
    report.accepted = n as u64;
    (out, report)
}

/// As [`har_sample_stream`], also returning per-cell tallies.
pub fn har_sample_stream_tallied(
    env: &HarEnvelope,
    f: &dyn CircularDensity,
    n: usize,
    rng: &mut RngStream,
) -> (Vec<f64>, AcceptanceReport, Vec<CellTally>) {
    let mut tallies = vec![CellTally::default(); env.cell_count()];
    let mut out = Vec::with_capacity(n);
    let mut proposed = 0u64;
    while out.len() < n {
        let (x, tries) = draw_one(env, f, rng, |cell, accepted| {
            tallies[cell].proposed += 1;
            tallies[cell].accepted += accepted as u64;
        });
        proposed += tries;
        out.push(x);
    }
    let mut report = AcceptanceReport::new("HAR").with_param("k", env.cell_count() as f64);
    report.proposed = proposed;
    report.accepted = n as u64;
    (out, report, tallies)
}

// cell from the multinomial, position uniform in the cell, accept with f(x)/H
#[inline]
fn draw_one(
    env: &HarEnvelope,
    f: &dyn CircularDensity,
    rng: &mut RngStream,
    mut observe: impl FnMut(usize, bool),
) -> (f64, u64) {
    let mut tries = 0;
    loop {
        tries += 1;
        let cell = env.select_cell(rng.uniform());
        let x = env.point_in_cell(cell, rng.uniform());
        let accept = rng.uniform() * env.heights[cell] < f.pdf(x);
        observe(cell, accept);
        if accept {
            return (x, tries);
        }
    }
}

/// A density bundled with its envelope.
#[derive(Debug, Clone)]
pub struct HarSampler<D> {
    density: D,
    envelope: HarEnvelope,
}

impl<D: CircularDensity> HarSampler<D> {
    /// Envelope over `[0, 2π)` with `k` cells.
    pub fn new(density: D, k: usize) -> Result<Self> {
        let envelope = HarEnvelope::circle(&density, k)?;
        Ok(Self { density, envelope })
    }

    pub fn density(&self) -> &D {
        &self.density
    }

    pub fn envelope(&self) -> &HarEnvelope {
        &self.envelope
    }

    /// One accepted draw and the number of proposals it took.
    pub fn draw(&self, rng: &mut RngStream) -> (f64, u64) {
        draw_one(&self.envelope, &self.density, rng, |_, _| {})
    }

    pub fn sample(&self, n: usize, rng: &mut RngStream) -> (Vec<f64>, AcceptanceReport) {
        har_sample_stream(&self.envelope, &self.density, n, rng)
    }

    pub fn sample_batch(&self, na: usize, rng: &mut RngStream) -> (Vec<f64>, AcceptanceReport) {
        super::har_sample_batch(&self.density, &self.envelope, na, rng)
    }
}

impl<D: CircularDensity> Theta1Sampler for HarSampler<D> {
    fn draw_theta1(&self, _theta2: f64, rng: &mut RngStream) -> f64 {
        self.draw(rng).0
    }
}
