use serde::{Deserialize, Serialize};

use super::{
    CircularDensity, CircularUniform, KatoJones, TorusWeighted, UniformTorusMarginal, VonMises, WrappedCauchy,
};
use crate::error::Result;

/// Named, parameterized members of the density catalog.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum CatalogEntry {
    Uniform,
    TorusUniform {
        a: f64,
    },
    VonMises {
        mu: f64,
        kappa: f64,
    },
    VmTorus {
        mu: f64,
        kappa: f64,
        a: f64,
    },
    WrappedCauchy {
        mu: f64,
        rho: f64,
    },
    WcTorus {
        mu: f64,
        rho: f64,
        a: f64,
    },
    KatoJones {
        mu: f64,
        nu: f64,
        rho: f64,
        kappa: f64,
    },
    KjTorus {
        mu: f64,
        nu: f64,
        rho: f64,
        kappa: f64,
        a: f64,
    },
}

impl CatalogEntry {
    pub fn build(&self) -> Result<Box<dyn CircularDensity>> {
        Ok(match *self {
            Self::Uniform => Box::new(CircularUniform),
            Self::TorusUniform { a } => Box::new(UniformTorusMarginal::new(a)?),
            Self::VonMises { mu, kappa } => Box::new(VonMises::new(mu, kappa)?),
            Self::VmTorus { mu, kappa, a } => Box::new(TorusWeighted::new(VonMises::new(mu, kappa)?, a)?),
            Self::WrappedCauchy { mu, rho } => Box::new(WrappedCauchy::new(mu, rho)?),
            Self::WcTorus { mu, rho, a } => Box::new(TorusWeighted::new(WrappedCauchy::new(mu, rho)?, a)?),
            Self::KatoJones { mu, nu, rho, kappa } => Box::new(KatoJones::new(mu, nu, rho, kappa)?),
            Self::KjTorus { mu, nu, rho, kappa, a } => {
                Box::new(TorusWeighted::new(KatoJones::new(mu, nu, rho, kappa)?, a)?)
            }
        })
    }

    /// The un-weighted base law of a torus entry; circle entries map to themselves.
    pub fn base(&self) -> CatalogEntry {
        match *self {
            Self::TorusUniform { .. } => Self::Uniform,
            Self::VmTorus { mu, kappa, .. } => Self::VonMises { mu, kappa },
            Self::WcTorus { mu, rho, .. } => Self::WrappedCauchy { mu, rho },
            Self::KjTorus { mu, nu, rho, kappa, .. } => Self::KatoJones { mu, nu, rho, kappa },
            other => other,
        }
    }

    /// Aspect ratio for area-weighted entries.
    pub fn aspect(&self) -> Option<f64> {
        match *self {
            Self::TorusUniform { a } | Self::VmTorus { a, .. } | Self::WcTorus { a, .. } | Self::KjTorus { a, .. } => {
                Some(a)
            }
            _ => None,
        }
    }
}
/// One instance of every family at `μ = ν = 0, κ = 1, ρ = 0.3, a = 0.5`,
/// plus stiffer and off-centre variants.
pub fn default_catalog() -> Vec<CatalogEntry> {
    use CatalogEntry::*;
    vec![
        Uniform,
        TorusUniform { a: 0.5 },
        TorusUniform { a: 1.0 },
        VonMises { mu: 0.0, kappa: 1.0 },
        VonMises { mu: 2.0, kappa: 100.0 },
        VmTorus {
            mu: 0.0,
            kappa: 1.0,
            a: 0.5,
        },
        VmTorus {
            mu: 3.0,
            kappa: 10.0,
            a: 1.0,
        },
        WrappedCauchy { mu: 0.0, rho: 0.3 },
        WrappedCauchy { mu: 4.0, rho: 0.9 },
        WcTorus {
            mu: 0.0,
            rho: 0.3,
            a: 0.5,
        },
        KatoJones {
            mu: 0.0,
            nu: 0.0,
            rho: 0.3,
            kappa: 1.0,
        },
        KatoJones {
            mu: 1.0,
            nu: 0.7,
            rho: 0.6,
            kappa: 5.0,
        },
        KjTorus {
            mu: 0.0,
            nu: 0.0,
            rho: 0.3,
            kappa: 1.0,
            a: 0.5,
        },
    ]
}
