//! Uncertainty model: calibrated marginals tied together by a Gaussian
//! copula, sampled deterministically.
//!
//! A hazard scenario assigns each attribute a marginal distribution —
//! normal, lognormal, or a point mass — specified either by direct
//! parameters or by (mean, p95) anchors. Sampling draws one latent standard
//! normal per attribute from a counter-based generator keyed by
//! `(seed, replication, column)`, correlates the vector through the
//! equicorrelation Cholesky factor, pushes each coordinate through Φ to a
//! uniform, and applies the attribute's inverse marginal CDF.
//!
//! Because every attribute's scale has a direction, the latent coordinate
//! of a more-is-better attribute is negated before the marginal transform:
//! a bad day is then bad across the board — high fatalities co-occur with
//! *low* service availability — which is what a single "0.7 correlation
//! between attributes" is meant to express.

mod calibrate;
mod cholesky;
pub mod rng;
pub mod special;

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::ModelError;
use crate::hierarchy::{Direction, Hierarchy};

pub use calibrate::{
    calibrate_lognormal, calibrate_normal, lognormal_max_ratio, LognormalParams, NormalParams,
    Z_95,
};
pub use cholesky::{equicorrelated_cholesky, CholeskyFactor};
pub use special::{erf, erfc, norm_cdf, norm_ppf};

/// Default pairwise correlation between attribute outcomes.
pub const DEFAULT_RHO: f64 = 0.7;

/// Uniforms from the copula are pinned inside the open interval before the
/// marginal inverse CDF; the bounds sit a comfortable distance from the
/// representable edges of (0, 1).
const U_FLOOR: f64 = 1e-16;
const U_CEIL: f64 = 1.0 - 1e-16;

/// Replications are generated in fixed-size blocks so that any streaming
/// reduction over them is associative in a fixed order, independent of the
/// number of worker threads.
pub const REPLICATION_BLOCK: usize = 256;

/// How a marginal is anchored in a scenario document: either calibration
/// anchors (mean + 95th percentile) or direct parameters. For a lognormal,
/// `location`/`scale` are the log-space mu/sigma.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Anchor {
    Calibrated { mean: f64, p95: f64 },
    Direct { location: f64, scale: f64 },
}

/// Per-attribute uncertainty as written in a scenario document.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum DistributionSpec {
    Normal {
        #[serde(flatten)]
        anchor: Anchor,
        /// Clip negative draws to zero (counts, durations, dollars cannot
        /// go below nothing). On by default; disable for genuinely signed
        /// quantities.
        #[serde(default = "default_true")]
        floor_at_zero: bool,
    },
    Lognormal {
        #[serde(flatten)]
        anchor: Anchor,
    },
    Point {
        value: f64,
    },
}

fn default_true() -> bool {
    true
}

impl DistributionSpec {
    /// Resolve anchors into directly sampleable parameters.
    pub fn compile(&self) -> Result<Marginal, ModelError> {
        match *self {
            DistributionSpec::Normal {
                anchor,
                floor_at_zero,
            } => {
                let params = match anchor {
                    Anchor::Calibrated { mean, p95 } => calibrate_normal(mean, p95)?,
                    Anchor::Direct { location, scale } => {
                        if !(location.is_finite() && scale.is_finite() && scale > 0.0) {
                            return Err(ModelError::invalid(
                                "normal distribution",
                                format!("scale must be positive, got location {location}, scale {scale}"),
                            ));
                        }
                        NormalParams { location, scale }
                    }
                };
                Ok(Marginal::Normal {
                    location: params.location,
                    scale: params.scale,
                    floor_at_zero,
                })
            }
            DistributionSpec::Lognormal { anchor } => {
                let params = match anchor {
                    Anchor::Calibrated { mean, p95 } => calibrate_lognormal(mean, p95)?,
                    Anchor::Direct { location, scale } => {
                        if !(location.is_finite() && scale.is_finite() && scale > 0.0) {
                            return Err(ModelError::invalid(
                                "lognormal distribution",
                                format!("scale must be positive, got location {location}, scale {scale}"),
                            ));
                        }
                        LognormalParams {
                            mu: location,
                            sigma: scale,
                        }
                    }
                };
                Ok(Marginal::Lognormal {
                    mu: params.mu,
                    sigma: params.sigma,
                })
            }
            DistributionSpec::Point { value } => {
                if !value.is_finite() {
                    return Err(ModelError::invalid(
                        "point distribution",
                        format!("value must be finite, got {value}"),
                    ));
                }
                Ok(Marginal::Point { value })
            }
        }
    }
}

/// A sampleable marginal with resolved parameters.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Marginal {
    Normal {
        location: f64,
        scale: f64,
        floor_at_zero: bool,
    },
    Lognormal {
        mu: f64,
        sigma: f64,
    },
    Point {
        value: f64,
    },
}

impl Marginal {
    /// Inverse CDF at `u` ∈ (0, 1), without any flooring. Point masses
    /// ignore `u`.
    pub fn quantile(&self, u: f64) -> f64 {
        match *self {
            Marginal::Normal {
                location, scale, ..
            } => location + scale * norm_ppf(u),
            Marginal::Lognormal { mu, sigma } => (mu + sigma * norm_ppf(u)).exp(),
            Marginal::Point { value } => value,
        }
    }

    /// Quantile plus the flooring rule; the flag reports whether the draw
    /// was clipped.
    pub fn sample(&self, u: f64) -> (f64, bool) {
        let x = self.quantile(u);
        match *self {
            Marginal::Normal {
                floor_at_zero: true,
                ..
            } if x < 0.0 => (0.0, true),
            _ => (x, false),
        }
    }
}

/// One hazard's uncertainty specification, as serialized.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HazardScenario {
    #[serde(default = "default_schema_version")]
    pub schema_version: u32,
    /// Hazard name; doubles as the output subdirectory name.
    pub name: String,
    /// Pairwise correlation; falls back to [`DEFAULT_RHO`] when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rho: Option<f64>,
    /// Attribute id → marginal. Must cover the hierarchy exactly.
    pub distributions: BTreeMap<String, DistributionSpec>,
}

fn default_schema_version() -> u32 {
    1
}

/// A scenario bound to a hierarchy: marginals in sampled-column order,
/// orientation signs, and the correlation factor, ready to draw from.
#[derive(Clone, Debug)]
pub struct CompiledScenario {
    pub name: String,
    /// Attribute ids in column order (the hierarchy's sampled order).
    pub attr_ids: Vec<String>,
    pub marginals: Vec<Marginal>,
    /// −1 for more-is-better attributes, +1 otherwise (see module docs).
    pub orientation: Vec<f64>,
    pub rho: f64,
    pub chol: CholeskyFactor,
}

impl CompiledScenario {
    pub fn compile(
        hierarchy: &Hierarchy,
        scenario: &HazardScenario,
        rho_override: Option<f64>,
    ) -> Result<Self, ModelError> {
        let attrs = hierarchy.sampled_attributes();
        let mut attr_ids = Vec::with_capacity(attrs.len());
        let mut marginals = Vec::with_capacity(attrs.len());
        let mut orientation = Vec::with_capacity(attrs.len());
        for a in &attrs {
            let spec = scenario.distributions.get(&a.id).ok_or_else(|| {
                ModelError::MissingDistribution {
                    scenario: scenario.name.clone(),
                    id: a.id.clone(),
                }
            })?;
            let marginal = spec.compile().map_err(|e| ModelError::InvalidDistribution {
                id: a.id.clone(),
                reason: e.to_string(),
            })?;
            attr_ids.push(a.id.clone());
            marginals.push(marginal);
            orientation.push(match a.direction {
                Direction::LessIsBetter => 1.0,
                Direction::MoreIsBetter => -1.0,
            });
        }
        for id in scenario.distributions.keys() {
            if !attr_ids.iter().any(|a| a == id) {
                return Err(ModelError::invalid(
                    format!("scenario `{}`", scenario.name),
                    format!("distribution for `{id}` matches no hierarchy attribute"),
                ));
            }
        }
        let rho = rho_override.or(scenario.rho).unwrap_or(DEFAULT_RHO);
        let chol = equicorrelated_cholesky(attr_ids.len(), rho)?;
        Ok(CompiledScenario {
            name: scenario.name.clone(),
            attr_ids,
            marginals,
            orientation,
            rho,
            chol,
        })
    }

    pub fn n_attributes(&self) -> usize {
        self.attr_ids.len()
    }

    /// Fill `levels` (one row of attribute values) for one replication, and
    /// return how many draws were floored. `z` and `y` are scratch buffers
    /// of length n.
    fn sample_row(
        &self,
        seed: u64,
        rep: u64,
        z: &mut [f64],
        y: &mut [f64],
        levels: &mut [f64],
    ) -> u64 {
        let n = self.n_attributes();
        for (col, zk) in z.iter_mut().enumerate() {
            *zk = norm_ppf(rng::uniform_open(seed, rep, col as u64));
        }
        self.chol.multiply(z, y);
        let mut floored = 0;
        for col in 0..n {
            let t = self.orientation[col] * y[col];
            let u = norm_cdf(t).clamp(U_FLOOR, U_CEIL);
            let (x, clipped) = self.marginals[col].sample(u);
            levels[col] = x;
            floored += u64::from(clipped);
        }
        floored
    }
}

/// Sampled attribute levels for every replication of one scenario.
#[derive(Clone, Debug)]
pub struct SampleMatrix {
    pub attr_ids: Vec<String>,
    pub seed: u64,
    pub replications: usize,
    /// Row-major: `levels[rep * n + col]`.
    pub levels: Vec<f64>,
    /// Total normal draws clipped to zero across the whole matrix.
    pub floored_draws: u64,
}

impl SampleMatrix {
    pub fn n_attributes(&self) -> usize {
        self.attr_ids.len()
    }

    pub fn row(&self, rep: usize) -> &[f64] {
        let n = self.n_attributes();
        &self.levels[rep * n..(rep + 1) * n]
    }

    pub fn column(&self, col: usize) -> impl Iterator<Item = f64> + '_ {
        let n = self.n_attributes();
        (0..self.replications).map(move |r| self.levels[r * n + col])
    }
}

/// Draw the full replication × attribute matrix for a compiled scenario.
///
/// Every cell is a pure function of `(seed, replication, column)`, so the
/// result is identical whatever the thread count; rows are filled in
/// parallel blocks of [`REPLICATION_BLOCK`].
pub fn sample_correlated(
    scenario: &CompiledScenario,
    replications: usize,
    seed: u64,
) -> Result<SampleMatrix, ModelError> {
    if replications == 0 {
        return Err(ModelError::ZeroReplications);
    }
    let n = scenario.n_attributes();
    let mut levels = vec![0.0; replications * n];
    let floored_draws = levels
        .par_chunks_mut(REPLICATION_BLOCK * n)
        .enumerate()
        .map(|(block, chunk)| {
            let mut z = vec![0.0; n];
            let mut y = vec![0.0; n];
            let first_rep = block * REPLICATION_BLOCK;
            let mut floored = 0;
            for (offset, row) in chunk.chunks_mut(n).enumerate() {
                let rep = (first_rep + offset) as u64;
                floored += scenario.sample_row(seed, rep, &mut z, &mut y, row);
            }
            floored
        })
        .sum();
    Ok(SampleMatrix {
        attr_ids: scenario.attr_ids.clone(),
        seed,
        replications,
        levels,
        floored_draws,
    })
}
