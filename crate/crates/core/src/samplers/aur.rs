use super::{AcceptanceReport, RngStream};
use crate::distributions::check_aspect;
use crate::error::Result;

/// Envelope of the acceptance-rejection baseline for the area-uniform marginal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum AurEnvelope {
    /// Accept with probability `(1 + a cos x)/2`; about half of all proposals
    /// are rejected for every `a`.
    #[default]
    Halved,
    /// Accept with probability `(1 + a cos x)/(1 + a)`; rate `1/(1 + a)`.
    Tight,
}

/// Acceptance-rejection draws of `theta2` under a uniform proposal on `[0, 2π)`.
pub fn aur_sample(
    n_target: usize,
    a: f64,
    envelope: AurEnvelope,
    rng: &mut RngStream,
) -> Result<(Vec<f64>, AcceptanceReport)> {
    check_aspect(a)?;
    let bound = match envelope {
        AurEnvelope::Halved => 2.0,
        AurEnvelope::Tight => 1.0 + a,
    };
    let mut out = Vec::with_capacity(n_target);
    let mut proposed = 0u64;
    while out.len() < n_target {
        let x = rng.angle();
        let u = rng.uniform();
        proposed += 1;
        if u * bound < 1.0 + a * x.cos() {
            out.push(x);
        }
    }
    let mut report = AcceptanceReport::new("AUR").with_param("a", a);
    report.proposed = proposed;
    report.accepted = out.len() as u64;
    Ok((out, report))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn halved_envelope_rate_near_half() {
        for &a in &[0.1, 0.5, 1.0] {
            let mut rng = RngStream::new(11);
            let (s, r) = aur_sample(10_000, a, AurEnvelope::Halved, &mut rng).unwrap();
            assert_eq!(s.len(), 10_000);
            assert!((r.rate_percent() - 50.0).abs() < 2.0, "a={a}: {}", r.rate_percent());
        }
    }

    #[test]
    fn tight_envelope_rate() {
        let mut rng = RngStream::new(12);
        let (_, r) = aur_sample(20_000, 0.1, AurEnvelope::Tight, &mut rng).unwrap();
        let expected = 100.0 / 1.1;
        assert!((r.rate_percent() - expected).abs() < 4.0 * 100.0 * r.standard_error());
    }
}
