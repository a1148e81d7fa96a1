use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// Proposal and acceptance counts of one sampler run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AcceptanceReport {
    pub sampler: String,
    pub params: BTreeMap<String, f64>,
    pub proposed: u64,
    pub accepted: u64,
}

impl AcceptanceReport {
    pub fn new(sampler: impl Into<String>) -> Self {
        Self {
            sampler: sampler.into(),
            params: BTreeMap::new(),
            proposed: 0,
            accepted: 0,
        }
    }

    pub fn with_param(mut self, name: &str, value: f64) -> Self {
        self.params.insert(name.to_string(), value);
        self
    }

    /// Acceptance as a percentage; 100 for an empty run.
    pub fn rate_percent(&self) -> f64 {
        if self.proposed == 0 {
            100.0
        } else {
            100.0 * self.accepted as f64 / self.proposed as f64
        }
    }

    /// Binomial standard error of the acceptance fraction.
    pub fn standard_error(&self) -> f64 {
        let p = self.accepted as f64 / self.proposed.max(1) as f64;
        (p * (1.0 - p) / self.proposed.max(1) as f64).sqrt()
    }
}
