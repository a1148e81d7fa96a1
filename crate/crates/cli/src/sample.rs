use std::path::Path;

use clap::Args;
use curvtorus::distributions::{CatalogEntry, CircularDensity, TorusWeighted};
use curvtorus::samplers::{
    aur_sample, eau_sample, flat_uniform_pairs, torus_sample, AurEnvelope, Theta1Sampler, UniformAngle, VmBestFisher,
    DEFAULT_CELLS,
};
use curvtorus::{AcceptanceReport, AnglePair, HarSampler, RngStream, TorusGeometry};
use serde_json::json;

use crate::error::CliError;
use crate::io::{emit, pairs_csv, points_csv, to_json};
use crate::{Dist, DistArgs, Format, SamplerId};

#[derive(Args, Debug, Clone)]
pub struct SampleArgs {
    #[command(flatten)]
    pub dist: DistArgs,
    /// Defaults to eau for torus-uniform and har otherwise.
    #[arg(long, value_enum)]
    pub sampler: Option<SamplerId>,
    #[arg(short = 'n', long = "n", default_value_t = 1000)]
    pub n: usize,
    /// Envelope cells for har / har-batch.
    #[arg(short = 'k', long = "cells", default_value_t = DEFAULT_CELLS)]
    pub cells: usize,
    /// Write embedded `x,y,z` points instead of angles.
    #[arg(long)]
    pub points: bool,
}

pub fn geometry(d: &DistArgs) -> Result<TorusGeometry, CliError> {
    Ok(TorusGeometry::new(d.major, d.minor)?)
}

/// The law of `theta2` named by `--dist`, with the aspect taken from the geometry.
pub fn entry(d: &DistArgs, g: &TorusGeometry) -> CatalogEntry {
    let a = g.aspect();
    let (mu, kappa, nu, rho) = (d.mu, d.kappa, d.nu, d.rho);
    match d.dist {
        Dist::Uniform => CatalogEntry::Uniform,
        Dist::TorusUniform => CatalogEntry::TorusUniform { a },
        Dist::VonMises => CatalogEntry::VonMises { mu, kappa },
        Dist::VmTorus => CatalogEntry::VmTorus { mu, kappa, a },
        Dist::WrappedCauchy => CatalogEntry::WrappedCauchy { mu, rho },
        Dist::WcTorus => CatalogEntry::WcTorus { mu, rho, a },
        Dist::KatoJones => CatalogEntry::KatoJones { mu, nu, rho, kappa },
        Dist::KjTorus => CatalogEntry::KjTorus { mu, nu, rho, kappa, a },
    }
}

fn default_sampler(dist: Dist) -> SamplerId {
    match dist {
        Dist::TorusUniform => SamplerId::Eau,
        _ => SamplerId::Har,
    }
}

/// `theta1` follows the base law and `theta2` the (possibly area-weighted) law of `entry`.
pub fn generate(
    d: &DistArgs,
    sampler: Option<SamplerId>,
    n: usize,
    cells: usize,
    seed: u64,
) -> Result<(Vec<AnglePair>, TorusGeometry, AcceptanceReport), CliError> {
    if n == 0 {
        return Err(CliError::invalid("-n must be at least 1"));
    }
    let g = geometry(d)?;
    let entry = entry(d, &g);
    let base = entry.base();
    let sampler = sampler.unwrap_or_else(|| default_sampler(d.dist));
    let mut rng = RngStream::new(seed);
    let a = g.aspect();

    let (pairs, report) = match sampler {
        SamplerId::Eau | SamplerId::Aur if d.dist != Dist::TorusUniform => {
            return Err(CliError::invalid(format!(
                "sampler {sampler:?} only targets --dist torus-uniform"
            )))
        }
        SamplerId::Eau => eau_sample(n, a, &mut rng)?,
        SamplerId::Aur => {
            let (t2, report) = aur_sample(n, a, AurEnvelope::Halved, &mut rng)?;
            let pairs = t2.into_iter().map(|y| AnglePair::new(rng.angle(), y)).collect();
            (pairs, report)
        }
        SamplerId::Vmbfr => {
            if d.dist != Dist::VonMises {
                return Err(CliError::invalid("sampler vmbfr only targets --dist von-mises"));
            }
            let s = VmBestFisher::new(d.mu, d.kappa)?;
            let (t1, _) = s.sample(n, &mut rng);
            let (t2, report) = s.sample(n, &mut rng);
            (zip(t1, t2), report)
        }
        SamplerId::Har if entry.aspect().is_some() => {
            let weighted = HarSampler::new(TorusWeighted::new(base.build()?, a)?, cells)?;
            let theta1: Box<dyn Theta1Sampler> = match base {
                CatalogEntry::Uniform => Box::new(UniformAngle),
                _ => Box::new(HarSampler::new(base.build()?, cells)?),
            };
            let s = torus_sample(theta1.as_ref(), &weighted, n, &mut rng, &g)?;
            (s.pairs, s.report)
        }
        SamplerId::Har | SamplerId::HarBatch => {
            let batch = sampler == SamplerId::HarBatch;
            let draw = |f: Box<dyn CircularDensity>, rng: &mut RngStream| -> Result<_, CliError> {
                let s = HarSampler::new(f, cells)?;
                Ok(if batch {
                    s.sample_batch(n, rng)
                } else {
                    s.sample(n, rng)
                })
            };
            let t1 = match base {
                CatalogEntry::Uniform if entry.aspect().is_some() => (0..n).map(|_| rng.angle()).collect(),
                _ => draw(base.build()?, &mut rng)?.0,
            };
            let (t2, report) = draw(entry.build()?, &mut rng)?;
            (zip(t1, t2), report)
        }
    };
    Ok((pairs, g, report))
}

fn zip(t1: Vec<f64>, t2: Vec<f64>) -> Vec<AnglePair> {
    t1.into_iter().zip(t2).map(|(x, y)| AnglePair::new(x, y)).collect()
}

pub fn run(args: &SampleArgs, seed: u64, format: Format, out: Option<&Path>) -> Result<(), CliError> {
    // the flat uniform law has no sampler of its own; both angles are drawn directly
    let (pairs, g, report) = if args.dist.dist == Dist::Uniform && args.sampler.is_none() {
        if args.n == 0 {
            return Err(CliError::invalid("-n must be at least 1"));
        }
        let g = geometry(&args.dist)?;
        let pairs = flat_uniform_pairs(args.n, &mut RngStream::new(seed));
        let mut report = AcceptanceReport::new("direct");
        report.proposed = args.n as u64;
        report.accepted = args.n as u64;
        (pairs, g, report)
    } else {
        generate(&args.dist, args.sampler, args.n, args.cells, seed)?
    };
    let bytes = match format {
        Format::Csv if args.points => points_csv(&pairs.iter().map(|&p| g.embed(p)).collect::<Vec<_>>()).into_bytes(),
        Format::Csv => pairs_csv(&pairs).into_bytes(),
        Format::Json => {
            let body = if args.points {
                let pts: Vec<_> = pairs.iter().map(|&p| g.embed(p)).collect();
                json!({ "seed": seed, "report": report, "points": pts })
            } else {
                json!({ "seed": seed, "report": report, "pairs": pairs })
            };
            to_json(&body)?
        }
        Format::Svg => return Err(CliError::invalid("sample writes csv or json; use `plot` for svg")),
    };
    emit(out, &bytes)
}
