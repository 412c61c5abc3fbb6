//! Distribution calibration from (mean, 95th percentile) anchors.
//!
//! Scenario authors state, per attribute, the expected outcome and a
//! severe-but-plausible outcome (the 95th percentile). These two anchors
//! pin down a normal exactly; for a lognormal they pin down (mu, sigma)
//! through a quadratic whose smaller root is taken so that sigma → 0 as
//! the anchors converge.

use crate::error::ModelError;

/// Standard normal 95th-percentile quantile, Φ⁻¹(0.95), to full precision.
pub const Z_95: f64 = 1.6448536269514722;

/// Parameters of a normal marginal.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NormalParams {
    pub location: f64,
    pub scale: f64,
}

/// Log-space parameters of a lognormal marginal.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LognormalParams {
    pub mu: f64,
    pub sigma: f64,
}

/// Largest feasible p95/mean ratio for a lognormal, exp(z²/2).
///
/// A lognormal's 95th percentile is exp(mu + z·sigma) while its mean is
/// exp(mu + sigma²/2); their ratio exp(z·sigma − sigma²/2) is maximized at
/// sigma = z. Anchors more skewed than that are unreachable.
pub fn lognormal_max_ratio() -> f64 {
    (Z_95 * Z_95 / 2.0).exp()
}

/// Normal with the given mean whose 95th percentile is `p95`.
pub fn calibrate_normal(mean: f64, p95: f64) -> Result<NormalParams, ModelError> {
    if !(mean.is_finite() && p95.is_finite() && p95 > mean) {
        return Err(ModelError::NormalInfeasible { mean, p95 });
    }
    Ok(NormalParams {
        location: mean,
        scale: (p95 - mean) / Z_95,
    })
}

/// Lognormal with the given mean whose 95th percentile is `p95`.
///
/// Writing z = Φ⁻¹(0.95), the anchors require
/// `mu + sigma²/2 = ln(mean)` and `mu + z·sigma = ln(p95)`; subtracting
/// gives `sigma²/2 − z·sigma + ln(p95/mean) = 0`, solved for the smaller
/// root `sigma = z − sqrt(z² − 2·ln(p95/mean))`.
pub fn calibrate_lognormal(mean: f64, p95: f64) -> Result<LognormalParams, ModelError> {
    let max = lognormal_max_ratio();
    if !(mean.is_finite() && p95.is_finite() && mean > 0.0) {
        return Err(ModelError::LognormalInfeasible {
            mean,
            p95,
            ratio: f64::NAN,
            max,
        });
    }
    let ratio = p95 / mean;
    if !(ratio > 1.0 && ratio <= max) {
        return Err(ModelError::LognormalInfeasible {
            mean,
            p95,
            ratio,
            max,
        });
    }
    let disc = Z_95 * Z_95 - 2.0 * ratio.ln();
    // ratio == max makes disc a tiny negative through rounding; clamp
    let sigma = Z_95 - disc.max(0.0).sqrt();
    let mu = p95.ln() - Z_95 * sigma;
    Ok(LognormalParams { mu, sigma })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normal_examples() {
        let p = calibrate_normal(100.0, 200.0).unwrap();
        assert_eq!(p.location, 100.0);
        assert!((p.scale - 60.795683191176913).abs() < 1e-12);

        // an anchor one z above zero gives (almost exactly) unit scale
        let p = calibrate_normal(0.0, 1.6449).unwrap();
        assert!((p.scale - 1.0).abs() < 1e-4);

        assert!(calibrate_normal(5.0, 5.0).is_err());
        assert!(calibrate_normal(5.0, 4.0).is_err());
        assert!(calibrate_normal(f64::NAN, 1.0).is_err());
    }

    #[test]
    fn lognormal_examples() {
        let p = calibrate_lognormal(50.0, 100.0).unwrap();
        assert!((p.mu - 3.7888820740371005).abs() < 1e-12);
        assert!((p.sigma - 0.49626793446896422).abs() < 1e-12);
    }

    #[test]
    fn lognormal_round_trip_identities() {
        for (mean, p95) in [
            (50.0, 100.0),
            (1.0, 1.001),
            (3.0, 11.0),
            (2000.0, 7736.0),
            (1e-3, 2.5e-3),
            (1e9, 3.2e9),
        ] {
            let p = calibrate_lognormal(mean, p95).unwrap();
            let mean_back = (p.mu + p.sigma * p.sigma / 2.0).exp();
            let p95_back = (p.mu + Z_95 * p.sigma).exp();
            assert!(
                ((mean_back - mean) / mean).abs() < 1e-9,
                "mean round trip failed for ({mean}, {p95}): {mean_back}"
            );
            assert!(
                ((p95_back - p95) / p95).abs() < 1e-9,
                "p95 round trip failed for ({mean}, {p95}): {p95_back}"
            );
        }
    }

    #[test]
    fn lognormal_degenerate_limit() {
        let p = calibrate_lognormal(10.0, 10.0 + 1e-9).unwrap();
        assert!(p.sigma < 1e-9);
        assert!((p.mu - 10.0_f64.ln()).abs() < 1e-8);
    }

    #[test]
    fn lognormal_feasibility_bound() {
        let max = lognormal_max_ratio();
        assert!((max - 3.8681320923537834).abs() < 1e-12);

        // ratio 5 is beyond the bound
        let err = calibrate_lognormal(10.0, 50.0).unwrap_err();
        assert!(err.to_string().contains("infeasible"));

        // exactly at the bound: sigma = z
        let p = calibrate_lognormal(1.0, max).unwrap();
        assert!((p.sigma - Z_95).abs() < 1e-9);

        assert!(calibrate_lognormal(0.0, 1.0).is_err());
        assert!(calibrate_lognormal(-5.0, 1.0).is_err());
        assert!(calibrate_lognormal(10.0, 10.0).is_err());
    }
}
