//! Batch variant of envelope sampling: cells are processed left to right with
//! stratified proposal counts, and each cell's rejects are shifted one bin to
//! the right and re-tested there.

use super::har::{har_sample_stream, HarEnvelope};
use super::{AcceptanceReport, RngStream};
use crate::distributions::CircularDensity;

/// Produces exactly `na` draws of `f`.
///
/// Proposal budget is `⌊na·M⌋ + k`. Cell `i` receives
/// `max(⌊budget·p_i⌋ − carried, 0)` fresh uniform points plus the rejects
/// carried from cell `i − 1`. Rejects leaving the last cell wrap once into the
/// first cell and are then dropped. Accepted points are randomly permuted and
/// truncated to `na`; a shortfall is topped up by streaming draws.
///
/// The report counts fresh proposals and every proposal that was accepted, so
/// its rate is the yield of generated uniforms, not `na / proposed`.
pub fn har_sample_batch(
    f: &dyn CircularDensity,
    env: &HarEnvelope,
    na: usize,
    rng: &mut RngStream,
) -> (Vec<f64>, AcceptanceReport) {
    let k = env.cell_count();
    let bin = env.bin_length();
    let (lo, hi) = env.support();
    let span = hi - lo;
    let budget = (na as f64 * env.global_m()).floor() + k as f64;
    let probs = env.cell_probs();
    let heights = env.heights();

    let mut accepted = Vec::with_capacity(na + k);
    let mut carried: Vec<f64> = Vec::new();
    let mut candidates: Vec<f64> = Vec::new();
    let mut fresh_total = 0u64;

    for i in 0..k {
        let (left, right) = env.cell_bounds(i);
        let wanted = (budget * probs[i]).floor() as usize;
        let fresh = wanted.saturating_sub(carried.len());
        fresh_total += fresh as u64;
        candidates.clear();
        candidates.extend((0..fresh).map(|_| env.point_in_cell(i, rng.uniform())));
        candidates.extend(carried.drain(..).map(|y| (y + bin).clamp(left, right.next_down())));
        for &x in &candidates {
            if rng.uniform() * heights[i] < f.pdf(x) {
                accepted.push(x);
            } else {
                carried.push(x);
            }
        }
    }

    // one wrap-around pass into the first cell
    let (left, right) = env.cell_bounds(0);
    for y in carried.drain(..) {
        let x = (y + bin - span).clamp(left, right.next_down());
        if rng.uniform() * heights[0] < f.pdf(x) {
            accepted.push(x);
        }
    }

    let mut report = AcceptanceReport::new("HAR-batch").with_param("k", k as f64);
    report.proposed = fresh_total;
    report.accepted = accepted.len() as u64;

    rng.shuffle(&mut accepted);
    if accepted.len() >= na {
        accepted.truncate(na);
    } else {
        let (extra, top_up) = har_sample_stream(env, f, na - accepted.len(), rng);
        report.proposed += top_up.proposed;
        report.accepted += top_up.accepted;
        accepted.extend(extra);
    }
    (accepted, report)
}
