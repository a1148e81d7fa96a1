use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};
use std::path::{Path, PathBuf};

use clap::{Args, ValueEnum};
use curvtorus::distributions::{default_catalog, vm_torus_normalizer, CatalogEntry};
use curvtorus::samplers::{eau_sample, flat_uniform_pairs, HarEnvelope, HeightRule};
use curvtorus::special::{bessel_i_scaled, periodic_integral, QuadratureSpec};
use curvtorus::validation::{
    chi_square_quadrants, ks_critical, ks_statistic, EcdfSummary, NumericCdf, SignificanceLevel,
};
use curvtorus::{AnglePair, RngStream, TorusGeometry};
use serde_json::{json, Value};

use crate::error::CliError;
use crate::io::{emit, read_pairs, to_json};
use crate::sample::{entry, generate, geometry};
use crate::{Dist, DistArgs, Format, SamplerId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Check {
    All,
    Normalizer,
    Dominance,
    Ks,
    Quadrant,
    Area,
    Bessel,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Heights {
    /// Cell supremum including interior modes.
    Supremum,
    /// Larger endpoint value only; misses interior peaks.
    Endpoints,
}

#[derive(Args, Debug, Clone)]
pub struct ValidateArgs {
    #[arg(long, value_enum, default_value = "all")]
    pub check: Check,
    /// Density under test; the whole catalog for `dominance` and torus-uniform for `ks` when omitted.
    #[arg(long, value_enum)]
    pub dist: Option<Dist>,
    #[arg(long, value_enum)]
    pub sampler: Option<SamplerId>,
    #[arg(short = 'R', long = "major", default_value_t = 3.0)]
    pub major: f64,
    #[arg(short = 'r', long = "minor", default_value_t = 1.5)]
    pub minor: f64,
    /// Aspect r/R; overrides -R/-r where an aspect alone is needed.
    #[arg(short = 'a', long = "aspect")]
    pub aspect: Option<f64>,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub mu: f64,
    #[arg(long, default_value_t = 1.0)]
    pub kappa: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub nu: f64,
    #[arg(long, default_value_t = 0.3)]
    pub rho: f64,
    /// Envelope cells; dominance scans k = 64 and 1000 when omitted.
    #[arg(short = 'k', long = "cells")]
    pub cells: Option<usize>,
    #[arg(long, value_enum, default_value = "supremum")]
    pub heights: Heights,
    /// Sample size for generated checks.
    #[arg(short = 'n', long = "n", default_value_t = 100_000)]
    pub n: usize,
    /// Check an existing sample file instead of generating one.
    #[arg(long)]
    pub input: Option<PathBuf>,
}

struct Outcome {
    name: &'static str,
    passed: bool,
    detail: Value,
}

impl ValidateArgs {
    fn dist_args(&self) -> Result<DistArgs, CliError> {
        let (major, minor) = match self.aspect {
            Some(a) if a > 0.0 && a <= 1.0 => (1.0, a),
            Some(a) => return Err(CliError::invalid(format!("aspect must lie in (0, 1], got {a}"))),
            None => (self.major, self.minor),
        };
        Ok(DistArgs {
            dist: self.dist.unwrap_or(Dist::TorusUniform),
            major,
            minor,
            mu: self.mu,
            kappa: self.kappa,
            nu: self.nu,
            rho: self.rho,
        })
    }

    fn input_pairs(&self, g: &TorusGeometry) -> Result<Option<Vec<AnglePair>>, CliError> {
        self.input.as_deref().map(|p| read_pairs(p, g)).transpose()
    }
}

fn normalizer(args: &ValidateArgs, a: f64) -> Result<Outcome, CliError> {
    let spec = QuadratureSpec::default();
    let mut grid = vec![(args.kappa, args.mu, a)];
    for kappa in [0.1, 1.0, 5.0, 100.0] {
        for mu in [0.0, FRAC_PI_4, FRAC_PI_2, PI] {
            for a in [0.1, 0.5, 1.0] {
                grid.push((kappa, mu, a));
            }
        }
    }
    let mut worst = 0.0f64;
    let mut requested = Value::Null;
    for (i, &(kappa, mu, a)) in grid.iter().enumerate() {
        let closed = vm_torus_normalizer(kappa, mu, a)?;
        let quad = periodic_integral(|t| (kappa * (t - mu).cos()).exp() * (1.0 + a * t.cos()), spec)?;
        let rel = (closed - quad).abs() / closed;
        worst = worst.max(rel);
        if i == 0 {
            requested = json!({ "kappa": kappa, "mu": mu, "a": a, "closed_form": closed, "quadrature": quad, "relative_error": rel });
        }
    }
    Ok(Outcome {
        name: "normalizer",
        passed: worst < 1e-10,
        detail: json!({ "requested": requested, "grid_points": grid.len(), "worst_relative_error": worst, "tolerance": 1e-10 }),
    })
}

fn dominance(args: &ValidateArgs, d: &DistArgs) -> Result<Outcome, CliError> {
    let targets = match args.dist {
        Some(_) => vec![entry(d, &geometry(d)?)],
        None => default_catalog(),
    };
    let cells = args.cells.map_or(vec![64, 1000], |k| vec![k]);
    let rule = match args.heights {
        Heights::Supremum => HeightRule::Supremum,
        Heights::Endpoints => HeightRule::GridEndpoints,
    };
    let mut rows = Vec::new();
    let mut passed = true;
    for t in &targets {
        let f = t.build()?;
        for &k in &cells {
            let env = HarEnvelope::build_with(&f, 0.0, std::f64::consts::TAU, k, rule)?;
            let c = env.check_dominance(&f, 1_000_000);
            passed &= c.passed();
            rows.push(json!({
                "density": f.label(), "k": k, "points": c.points, "violations": c.violations,
                "worst_ratio": c.worst_ratio, "worst_at": c.worst_at,
            }));
        }
    }
    Ok(Outcome {
        name: "dominance",
        passed,
        detail: json!({ "heights": format!("{:?}", args.heights).to_lowercase(), "scans": rows }),
    })
}

fn ks_line(name: &str, sample: Vec<f64>, law: &CatalogEntry) -> Result<(bool, Value), CliError> {
    let f = law.build()?;
    let ecdf = EcdfSummary::new(sample)?;
    let d = ks_statistic(&ecdf, NumericCdf::best_for(&f));
    let crit = ks_critical(ecdf.len(), SignificanceLevel::One);
    Ok((
        d < crit,
        json!({ "column": name, "law": f.label(), "n": ecdf.len(), "statistic": d, "critical_0.01": crit }),
    ))
}

fn ks(args: &ValidateArgs, d: &DistArgs, seed: u64) -> Result<Outcome, CliError> {
    let g = geometry(d)?;
    let law2 = entry(d, &g);
    let pairs = match args.input_pairs(&g)? {
        Some(p) => p,
        None => generate(d, args.sampler, args.n, args.cells.unwrap_or(500), seed)?.0,
    };
    let (t1, t2): (Vec<f64>, Vec<f64>) = pairs.iter().map(|p| (p.theta1, p.theta2)).unzip();
    let (p1, r1) = ks_line("theta1", t1, &law2.base())?;
    let (p2, r2) = ks_line("theta2", t2, &law2)?;
    Ok(Outcome {
        name: "ks",
        passed: p1 && p2,
        detail: json!({ "tests": [r1, r2] }),
    })
}

fn quadrant(args: &ValidateArgs, d: &DistArgs, seed: u64) -> Result<Vec<Outcome>, CliError> {
    let g = geometry(d)?;
    if let Some(pairs) = args.input_pairs(&g)? {
        let t = chi_square_quadrants(&pairs, &g)?;
        return Ok(vec![Outcome {
            name: "quadrant",
            passed: t.passes(SignificanceLevel::One),
            detail: json!(t),
        }]);
    }
    let n = 10_000;
    let mut rng = RngStream::derive(seed, 0);
    let eau = chi_square_quadrants(&eau_sample(n, g.aspect(), &mut rng)?.0, &g)?;
    let mut rng = RngStream::derive(seed, 1);
    let flat = chi_square_quadrants(&flat_uniform_pairs(n, &mut rng), &g)?;
    Ok(vec![
        Outcome {
            name: "quadrant",
            passed: eau.passes(SignificanceLevel::One),
            detail: json!(eau),
        },
        Outcome {
            name: "quadrant-flat-rejected",
            passed: !flat.passes(SignificanceLevel::One),
            detail: json!(flat),
        },
    ])
}

fn area(d: &DistArgs) -> Result<Outcome, CliError> {
    let g = geometry(d)?;
    let exact = g.total_area();
    let quad = g.area_by_quadrature(256);
    let rel = (quad - exact).abs() / exact;
    Ok(Outcome {
        name: "area",
        passed: rel < 1e-9,
        detail: json!({ "closed_form": exact, "quadrature": quad, "relative_error": rel }),
    })
}

/// Series/asymptotic `e^{-x} I_p(x)` against `(1/2π)∫ e^{x(cos t − 1)} cos(pt) dt`.
fn bessel() -> Result<Outcome, CliError> {
    let spec = QuadratureSpec::default();
    let mut worst = 0.0f64;
    let mut rows = Vec::new();
    for x in [0.5, 1.0, 5.0, 39.0, 41.0, 100.0, 500.0] {
        for p in [0u32, 1] {
            let series = bessel_i_scaled(p, x)?;
            let quad = periodic_integral(|t| (x * (t.cos() - 1.0)).exp() * (p as f64 * t).cos(), spec)?
                / std::f64::consts::TAU;
            let rel = (series - quad).abs() / quad;
            worst = worst.max(rel);
            rows.push(json!({ "order": p, "x": x, "scaled": series, "quadrature": quad, "relative_error": rel }));
        }
    }
    Ok(Outcome {
        name: "bessel",
        passed: worst < 1e-10,
        detail: json!({ "values": rows, "worst_relative_error": worst }),
    })
}

pub fn run(args: &ValidateArgs, seed: u64, format: Format, out: Option<&Path>) -> Result<(), CliError> {
    if format != Format::Json {
        return Err(CliError::invalid("validate writes json"));
    }
    if args.n < 160 {
        return Err(CliError::invalid("-n must be at least 160"));
    }
    let d = args.dist_args()?;
    let a = d.minor / d.major;
    let all = args.check == Check::All;
    let mut outcomes = Vec::new();
    if all || args.check == Check::Normalizer {
        outcomes.push(normalizer(args, a)?);
    }
    if all || args.check == Check::Dominance {
        outcomes.push(dominance(args, &d)?);
    }
    if all || args.check == Check::Ks {
        outcomes.push(ks(args, &d, seed)?);
    }
    if all || args.check == Check::Quadrant {
        outcomes.extend(quadrant(args, &d, seed)?);
    }
    if all || args.check == Check::Area {
        outcomes.push(area(&d)?);
    }
    if all || args.check == Check::Bessel {
        outcomes.push(bessel()?);
    }
    let failed: Vec<String> = outcomes
        .iter()
        .filter(|o| !o.passed)
        .map(|o| o.name.to_string())
        .collect();
    let checks: Vec<Value> = outcomes
        .into_iter()
        .map(|o| json!({ "name": o.name, "passed": o.passed, "detail": o.detail }))
        .collect();
    let report = json!({ "seed": seed, "passed": failed.is_empty(), "checks": checks });
    emit(out, &to_json(&report)?)?;
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::ValidationFailed(failed))
    }
}
