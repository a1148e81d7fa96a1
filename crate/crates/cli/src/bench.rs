use std::path::Path;

use clap::Args;
use curvtorus::samplers::DEFAULT_CELLS;
use curvtorus::validation::{standard_table, AcceptanceTable, TableId};

use crate::error::CliError;
use crate::io::{emit, to_json};
use crate::Format;

#[derive(Args, Debug, Clone)]
pub struct BenchArgs {
    /// Table layout, 1 to 5.
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=5))]
    pub table: u8,
    /// Samples per cell; 10000 for table 1 and 50000 otherwise when omitted.
    #[arg(short = 'n', long = "n")]
    pub n: Option<usize>,
    #[arg(short = 'k', long = "cells", default_value_t = DEFAULT_CELLS)]
    pub cells: usize,
    /// Record nanoseconds per sample. Makes the output run-dependent.
    #[arg(long)]
    pub timing: bool,
}

/// One row per sampler, one column per parameter value.
fn matrix_csv(t: &AcceptanceTable, timing: bool) -> String {
    let mut samplers: Vec<&str> = Vec::new();
    for c in &t.rows {
        if !samplers.contains(&c.sampler.as_str()) {
            samplers.push(&c.sampler);
        }
    }
    let first = samplers[0];
    let columns: Vec<String> = t
        .rows
        .iter()
        .filter(|c| c.sampler == first)
        .map(|c| {
            let (k, v) = c
                .params
                .iter()
                .find(|(k, _)| k.as_str() != "k")
                .expect("parameter column");
            format!("{k}={v}")
        })
        .collect();
    let mut s = format!("sampler,{}\n", columns.join(","));
    for name in &samplers {
        let cells: Vec<_> = t.rows.iter().filter(|c| c.sampler == *name).collect();
        let rates: Vec<String> = cells.iter().map(|c| format!("{:.4}", c.rate_percent)).collect();
        s.push_str(&format!("{name},{}\n", rates.join(",")));
        if timing {
            let ns: Vec<String> = cells
                .iter()
                .map(|c| c.ns_per_sample.map_or(String::new(), |v| format!("{v:.2}")))
                .collect();
            s.push_str(&format!("{name} ns/sample,{}\n", ns.join(",")));
        }
    }
    s
}

pub fn run(args: &BenchArgs, seed: u64, format: Format, out: Option<&Path>) -> Result<(), CliError> {
    let table = TableId::from_number(args.table)?;
    let n = args.n.unwrap_or_else(|| table.default_n());
    if n == 0 {
        return Err(CliError::invalid("--n must be at least 1"));
    }
    let result = standard_table(table, n, seed, args.cells, args.timing)?;
    let bytes = match format {
        Format::Json => to_json(&result)?,
        Format::Csv => matrix_csv(&result, args.timing).into_bytes(),
        Format::Svg => return Err(CliError::invalid("bench writes json or csv")),
    };
    emit(out, &bytes)
}
