use std::f64::consts::TAU;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, ValueEnum};
use curvtorus::samplers::DEFAULT_CELLS;
use curvtorus::validation::{chi_square_quadrants, histogram};
use curvtorus::AnglePair;

use crate::error::CliError;
use crate::io::{emit, read_pairs};
use crate::sample::{entry, generate, geometry};
use crate::{DistArgs, Format, SamplerId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PlotKind {
    /// Density histogram of one angle with the analytic density overlaid.
    Histogram,
    /// 4×4 quadrant frequencies against area proportions.
    Quadrant,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Column {
    Theta1,
    Theta2,
}

#[derive(Args, Debug, Clone)]
pub struct PlotArgs {
    #[arg(long, value_enum, default_value = "histogram")]
    pub kind: PlotKind,
    #[command(flatten)]
    pub dist: DistArgs,
    #[arg(long, value_enum)]
    pub sampler: Option<SamplerId>,
    #[arg(short = 'n', long = "n", default_value_t = 10_000)]
    pub n: usize,
    #[arg(short = 'k', long = "cells", default_value_t = DEFAULT_CELLS)]
    pub cells: usize,
    /// Sample file from `sample`; generated inline when omitted.
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[arg(long, default_value_t = 36)]
    pub bins: usize,
    #[arg(long, value_enum, default_value = "theta2")]
    pub column: Column,
}

const W: f64 = 640.0;
const H: f64 = 400.0;
const PAD: f64 = 40.0;

fn header(title: &str) -> String {
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{W}\" height=\"{H}\" viewBox=\"0 0 {W} {H}\">\n\
         <title>{title}</title>\n\
         <rect width=\"{W}\" height=\"{H}\" fill=\"white\"/>\n\
         <line x1=\"{PAD}\" y1=\"{y}\" x2=\"{x}\" y2=\"{y}\" stroke=\"black\"/>\n\
         <line x1=\"{PAD}\" y1=\"{PAD}\" x2=\"{PAD}\" y2=\"{y}\" stroke=\"black\"/>\n",
        y = H - PAD,
        x = W - PAD,
    )
}

fn histogram_svg(values: &[f64], bins: usize, pdf: impl Fn(f64) -> f64, title: &str) -> Result<String, CliError> {
    let h = histogram(values, bins)?;
    let curve: Vec<f64> = (0..=400).map(|i| pdf(TAU * i as f64 / 400.0)).collect();
    let top = h.density.iter().chain(&curve).cloned().fold(0.0, f64::max) * 1.05;
    let sx = (W - 2.0 * PAD) / TAU;
    let sy = (H - 2.0 * PAD) / top;
    let mut s = header(title);
    for (i, &d) in h.density.iter().enumerate() {
        let _ = writeln!(
            s,
            "<rect class=\"bar\" data-density=\"{d}\" data-width=\"{w}\" x=\"{x:.3}\" y=\"{y:.3}\" width=\"{bw:.3}\" height=\"{bh:.3}\" fill=\"steelblue\" stroke=\"white\"/>",
            w = h.bin_width(),
            x = PAD + h.edges[i] * sx,
            y = H - PAD - d * sy,
            bw = h.bin_width() * sx,
            bh = d * sy,
        );
    }
    let pts: Vec<String> = curve
        .iter()
        .enumerate()
        .map(|(i, &v)| format!("{:.3},{:.3}", PAD + TAU * i as f64 / 400.0 * sx, H - PAD - v * sy))
        .collect();
    let _ = writeln!(
        s,
        "<polyline class=\"density\" fill=\"none\" stroke=\"red\" stroke-width=\"2\" points=\"{}\"/>",
        pts.join(" ")
    );
    s.push_str("</svg>\n");
    Ok(s)
}

fn quadrant_svg(pairs: &[AnglePair], g: &curvtorus::TorusGeometry) -> Result<String, CliError> {
    let table = chi_square_quadrants(pairs, g)?;
    let freq = table.relative_frequencies();
    let reference = g.quadrant_area_proportions();
    let top = freq.iter().chain(&reference).flatten().cloned().fold(0.0, f64::max) * 1.1;
    let slot = (W - 2.0 * PAD) / 16.0;
    let sy = (H - 2.0 * PAD) / top;
    let mut s = header(&format!(
        "quadrant frequencies, chi-square {:.3} on 15 df",
        table.statistic
    ));
    for i in 0..4 {
        for j in 0..4 {
            let x = PAD + (4 * i + j) as f64 * slot;
            let (f, r) = (freq[i][j], reference[i][j]);
            let _ = writeln!(
                s,
                "<rect class=\"bar\" data-theta1-quadrant=\"{q1}\" data-theta2-quadrant=\"{q2}\" data-frequency=\"{f}\" x=\"{x:.3}\" y=\"{y:.3}\" width=\"{w:.3}\" height=\"{bh:.3}\" fill=\"steelblue\"/>",
                q1 = i + 1,
                q2 = j + 1,
                x = x + 0.1 * slot,
                y = H - PAD - f * sy,
                w = 0.8 * slot,
                bh = f * sy,
            );
            let color = if f >= r { "green" } else { "red" };
            let _ = writeln!(
                s,
                "<line class=\"reference\" data-proportion=\"{r}\" x1=\"{x1:.3}\" y1=\"{y:.3}\" x2=\"{x2:.3}\" y2=\"{y:.3}\" stroke=\"{color}\" stroke-width=\"2\"/>",
                x1 = x,
                x2 = x + slot,
                y = H - PAD - r * sy,
            );
        }
    }
    s.push_str("</svg>\n");
    Ok(s)
}

pub fn run(args: &PlotArgs, seed: u64, format: Format, out: Option<&Path>) -> Result<(), CliError> {
    if format != Format::Svg {
        return Err(CliError::invalid("plot writes svg"));
    }
    let g = geometry(&args.dist)?;
    let pairs = match &args.input {
        Some(p) => read_pairs(p, &g)?,
        None => generate(&args.dist, args.sampler, args.n, args.cells, seed)?.0,
    };
    let svg = match args.kind {
        PlotKind::Quadrant => quadrant_svg(&pairs, &g)?,
        PlotKind::Histogram => {
            let law2 = entry(&args.dist, &g);
            let (law, values): (_, Vec<f64>) = match args.column {
                Column::Theta1 => (law2.base(), pairs.iter().map(|p| p.theta1).collect()),
                Column::Theta2 => (law2, pairs.iter().map(|p| p.theta2).collect()),
            };
            let f = law.build()?;
            let title = format!("{:?} histogram, {} samples, {}", args.column, values.len(), f.label()).to_lowercase();
            histogram_svg(&values, args.bins, |t| f.pdf(t), &title)?
        }
    };
    emit(out, svg.as_bytes())
}
