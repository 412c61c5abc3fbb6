//! The five value-function families.
//!
//! Every family maps an attribute level (or an impact/time pair) onto a 0–1
//! value scale: 1 at the best case, 0 at the worst case, clamped outside the
//! anchored interval. Four families score a single attribute — linear and
//! exponential, each in a more-is-better and a less-is-better orientation —
//! and the fifth scores a mutually dependent impact/duration pair as
//! `1 − (impact · time) / (max_impact · max_time)`, so that either a brief
//! severe disruption or a long mild one can retain most of its value, while
//! a disruption at full magnitude for the full tolerable duration scores 0.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest |alpha · span| accepted for exponential families.
///
/// Past this, `exp` overflows f64 and the curve is numerically a step
/// function anyway.
const MAX_EXP_ARG: f64 = 700.0;

/// Why a value-function definition was rejected.
#[derive(Debug, Error, PartialEq)]
pub enum SpecError {
    #[error("anchors must be finite, got x_best={x_best}, x_worst={x_worst}")]
    NonFiniteAnchors { x_best: f64, x_worst: f64 },
    #[error("more-is-better needs x_best > x_worst, got x_best={x_best}, x_worst={x_worst}")]
    NotIncreasing { x_best: f64, x_worst: f64 },
    #[error("less-is-better needs x_best < x_worst, got x_best={x_best}, x_worst={x_worst}")]
    NotDecreasing { x_best: f64, x_worst: f64 },
    #[error("curvature must be a nonzero finite number (use a linear family for alpha = 0)")]
    BadAlpha,
    #[error("|alpha| * |x_best - x_worst| = {0} is too large to evaluate (limit {MAX_EXP_ARG})")]
    AlphaOverflow(f64),
    #[error("pair maxima must be finite and positive, got max_impact={max_impact}, max_time={max_time}")]
    BadPairMaxima { max_impact: f64, max_time: f64 },
}

/// Why an evaluation call was rejected.
#[derive(Debug, Error, PartialEq)]
pub enum EvalError {
    #[error("this value function scores a single attribute, but a pair of levels was supplied")]
    ExpectedSingleLevel,
    #[error("this value function scores an impact/time pair, but a single level was supplied")]
    ExpectedPairLevels,
    #[error("attribute level must be finite, got {0}")]
    NonFiniteLevel(f64),
    #[error("impact and recovery-time levels are nonnegative magnitudes, got {0}")]
    NegativeLevel(f64),
}

/// Attribute level(s) a leaf is evaluated at.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Levels {
    Single(f64),
    Pair { impact: f64, time: f64 },
}

/// A validated, evaluable value function.
///
/// Constructed via the family constructors ([`ValueFunction::linear_more`]
/// and friends), which reject inverted anchors, zero/overflowing curvature,
/// and nonpositive pair maxima, so an instance in hand is always evaluable.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum ValueFunction {
    LinearMore { x_worst: f64, x_best: f64 },
    LinearLess { x_best: f64, x_worst: f64 },
    ExpMore { x_worst: f64, x_best: f64, alpha: f64 },
    ExpLess { x_best: f64, x_worst: f64, alpha: f64 },
    Triangle { max_impact: f64, max_time: f64 },
}

impl ValueFunction {
    pub fn linear_more(x_worst: f64, x_best: f64) -> Result<Self, SpecError> {
        check_anchors(x_best, x_worst, true)?;
        Ok(ValueFunction::LinearMore { x_worst, x_best })
    }

    pub fn linear_less(x_best: f64, x_worst: f64) -> Result<Self, SpecError> {
        check_anchors(x_best, x_worst, false)?;
        Ok(ValueFunction::LinearLess { x_best, x_worst })
    }

    pub fn exp_more(x_worst: f64, x_best: f64, alpha: f64) -> Result<Self, SpecError> {
        check_anchors(x_best, x_worst, true)?;
        check_alpha(alpha, x_best - x_worst)?;
        Ok(ValueFunction::ExpMore {
            x_worst,
            x_best,
            alpha,
        })
    }

    pub fn exp_less(x_best: f64, x_worst: f64, alpha: f64) -> Result<Self, SpecError> {
        check_anchors(x_best, x_worst, false)?;
        check_alpha(alpha, x_best - x_worst)?;
        Ok(ValueFunction::ExpLess {
            x_best,
            x_worst,
            alpha,
        })
    }

    pub fn triangle(max_impact: f64, max_time: f64) -> Result<Self, SpecError> {
        let product = max_impact * max_time;
        if !(max_impact > 0.0 && max_time > 0.0 && product.is_finite()) {
            return Err(SpecError::BadPairMaxima {
                max_impact,
                max_time,
            });
        }
        Ok(ValueFunction::Triangle {
            max_impact,
            max_time,
        })
    }

    /// Does this function score an impact/time pair rather than one level?
    pub fn is_pair(&self) -> bool {
        matches!(self, ValueFunction::Triangle { .. })
    }

    /// Re-run the construction checks (used after deserializing).
    pub fn validate(&self) -> Result<(), SpecError> {
        match *self {
            ValueFunction::LinearMore { x_worst, x_best } => {
                Self::linear_more(x_worst, x_best).map(drop)
            }
            ValueFunction::LinearLess { x_best, x_worst } => {
                Self::linear_less(x_best, x_worst).map(drop)
            }
            ValueFunction::ExpMore {
                x_worst,
                x_best,
                alpha,
            } => Self::exp_more(x_worst, x_best, alpha).map(drop),
            ValueFunction::ExpLess {
                x_best,
                x_worst,
                alpha,
            } => Self::exp_less(x_best, x_worst, alpha).map(drop),
            ValueFunction::Triangle {
                max_impact,
                max_time,
            } => Self::triangle(max_impact, max_time).map(drop),
        }
    }

    /// Evaluate at the given level(s), checking arity and domain.
    ///
    /// Single-attribute families accept any finite level (values outside the
    /// anchored interval clamp to 0 or 1). The pair family requires both
    /// magnitudes to be finite and nonnegative.
    pub fn evaluate(&self, levels: Levels) -> Result<f64, EvalError> {
        match (*self, levels) {
            (ValueFunction::Triangle { .. }, Levels::Single(_)) => {
                Err(EvalError::ExpectedPairLevels)
            }
            (
                ValueFunction::Triangle {
                    max_impact,
                    max_time,
                },
                Levels::Pair { impact, time },
            ) => {
                for v in [impact, time] {
                    if !v.is_finite() {
                        return Err(EvalError::NonFiniteLevel(v));
                    }
                    if v < 0.0 {
                        return Err(EvalError::NegativeLevel(v));
                    }
                }
                Ok(triangle_value(impact, time, max_impact, max_time))
            }
            (_, Levels::Pair { .. }) => Err(EvalError::ExpectedSingleLevel),
            (_, Levels::Single(x)) if !x.is_finite() => Err(EvalError::NonFiniteLevel(x)),
            (ValueFunction::LinearMore { x_worst, x_best }, Levels::Single(x))
            | (ValueFunction::LinearLess { x_best, x_worst }, Levels::Single(x)) => {
                Ok(linear_value(x, x_worst, x_best))
            }
            (
                ValueFunction::ExpMore {
                    x_worst,
                    x_best,
                    alpha,
                },
                Levels::Single(x),
            )
            | (
                ValueFunction::ExpLess {
                    x_best,
                    x_worst,
                    alpha,
                },
                Levels::Single(x),
            ) => Ok(exp_value(x, x_worst, x_best, alpha)),
        }
    }
}

fn check_anchors(x_best: f64, x_worst: f64, more_is_better: bool) -> Result<(), SpecError> {
    if !(x_best.is_finite() && x_worst.is_finite()) {
        return Err(SpecError::NonFiniteAnchors { x_best, x_worst });
    }
    match (more_is_better, x_best > x_worst) {
        (true, false) => Err(SpecError::NotIncreasing { x_best, x_worst }),
        (false, _) if x_best >= x_worst => Err(SpecError::NotDecreasing { x_best, x_worst }),
        _ => Ok(()),
    }
}

fn check_alpha(alpha: f64, span: f64) -> Result<(), SpecError> {
    if !alpha.is_finite() || alpha == 0.0 {
        return Err(SpecError::BadAlpha);
    }
    let arg = (alpha * span).abs();
    if arg > MAX_EXP_ARG {
        return Err(SpecError::AlphaOverflow(arg));
    }
    Ok(())
}

/// Clamp to [0,1], normalizing -0.0 to +0.0 so formatted output never
/// carries a minus sign on zero. NaN is propagated, not laundered.
#[inline]
fn clamp01(v: f64) -> f64 {
    v.clamp(0.0, 1.0) + 0.0
}

/// Shared linear kernel; orientation falls out of the anchor ordering.
#[inline]
pub(crate) fn linear_value(x: f64, x_worst: f64, x_best: f64) -> f64 {
    clamp01((x - x_worst) / (x_best - x_worst))
}

/// Shared exponential kernel: `(1 − e^{−α(x − x⁻)}) / (1 − e^{−α(x⁺ − x⁻)})`.
///
/// `exp_m1` keeps the ratio accurate for tiny |α·span|, where both the
/// numerator and denominator are near zero; at x = x⁺ the two expressions
/// are identical and the ratio is exactly 1.
#[inline]
pub(crate) fn exp_value(x: f64, x_worst: f64, x_best: f64, alpha: f64) -> f64 {
    let num = (-alpha * (x - x_worst)).exp_m1();
    let den = (-alpha * (x_best - x_worst)).exp_m1();
    clamp01(num / den)
}

/// Pair kernel: `1 − (impact · time) / (max_impact · max_time)`, clamped.
#[inline]
pub(crate) fn triangle_value(impact: f64, time: f64, max_impact: f64, max_time: f64) -> f64 {
    clamp01(1.0 - (impact * time) / (max_impact * max_time))
}
