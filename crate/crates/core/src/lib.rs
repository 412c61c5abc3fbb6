//! Community resilience scoring over an objectives hierarchy.
//!
//! The model casts "how resilient is this community to a hazard" as a
//! multi-attribute value problem: a hierarchy of objectives bottoms out in
//! measurable attributes (fatalities, outage counts, closure durations, …),
//! each attribute maps onto a 0–1 value scale, and a weighted sum rolls the
//! leaf values into a single resilience score. Uncertainty about hazard
//! consequences enters through calibrated marginal distributions tied
//! together with a Gaussian copula, and Monte Carlo replication turns the
//! score into a distribution rather than a point.
//!
//! Crate layout:
//! * [`hierarchy`] — objectives tree, attribute definitions, weight checks
//! * [`valuefn`] — the five single/paired value-function families
//! * [`elicitation`] — rank-based and swing weight generation
//! * [`stochastic`] — marginal calibration, copula sampling, special functions
//! * [`assessment`] — replication loop, summary statistics, decomposition
//! * [`output`] — serializable result documents

pub mod assessment;
pub mod elicitation;
pub mod error;
pub mod hierarchy;
pub mod output;
pub mod stochastic;
pub mod valuefn;

pub use error::ModelError;
