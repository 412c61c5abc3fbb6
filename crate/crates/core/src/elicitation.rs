//! Weight elicitation: turns ranked or scored preference judgments into
//! normalized trade-off weights.
//!
//! Three standard schemes are offered. Rank reciprocal weights item ranked
//! r as 1/r before normalizing; rank sum weights it n + 1 − r; swing
//! weighting normalizes directly elicited swing scores (conventionally the
//! most important swing scores 100). All three return weights that sum to 1.
//! Tied ranks simply share a value — no mid-rank correction is applied.

use std::collections::BTreeMap;

use crate::error::ModelError;

/// Device shared by the rank-based schemes: score each item, normalize.
fn normalize_scores(
    scores: impl IntoIterator<Item = (String, f64)>,
) -> Result<BTreeMap<String, f64>, ModelError> {
    let scores: BTreeMap<String, f64> = scores.into_iter().collect();
    if scores.is_empty() {
        return Err(ModelError::invalid("elicitation", "no items supplied"));
    }
    let total: f64 = scores.values().sum();
    if !(total > 0.0) {
        return Err(ModelError::invalid(
            "elicitation",
            "scores must include at least one positive entry",
        ));
    }
    Ok(scores.into_iter().map(|(k, s)| (k, s / total)).collect())
}

fn check_ranks(ranks: &BTreeMap<String, u32>) -> Result<(), ModelError> {
    if ranks.is_empty() {
        return Err(ModelError::invalid("elicitation", "no items supplied"));
    }
    for (id, &r) in ranks {
        if r == 0 {
            return Err(ModelError::invalid(
                "elicitation",
                format!("rank for `{id}` must be a positive integer (1 = most important)"),
            ));
        }
    }
    Ok(())
}

/// Rank-reciprocal weights: w_i ∝ 1 / r_i.
pub fn rank_reciprocal_weights(
    ranks: &BTreeMap<String, u32>,
) -> Result<BTreeMap<String, f64>, ModelError> {
    check_ranks(ranks)?;
    normalize_scores(
        ranks
            .iter()
            .map(|(id, &r)| (id.clone(), 1.0 / f64::from(r))),
    )
}

/// Rank-sum weights: w_i ∝ n + 1 − r_i, floored at zero for ranks past n.
pub fn rank_sum_weights(ranks: &BTreeMap<String, u32>) -> Result<BTreeMap<String, f64>, ModelError> {
    check_ranks(ranks)?;
    let n = ranks.len() as f64;
    normalize_scores(
        ranks
            .iter()
            .map(|(id, &r)| (id.clone(), (n + 1.0 - f64::from(r)).max(0.0))),
    )
}

/// Swing weights: w_i ∝ s_i for nonnegative scores, at least one positive.
pub fn swing_weights(scores: &BTreeMap<String, f64>) -> Result<BTreeMap<String, f64>, ModelError> {
    for (id, &s) in scores {
        if !(s.is_finite() && s >= 0.0) {
            return Err(ModelError::invalid(
                "elicitation",
                format!("swing score for `{id}` must be a nonnegative number, got {s}"),
            ));
        }
    }
    normalize_scores(scores.iter().map(|(id, &s)| (id.clone(), s)))
}

/// Multiply local weights down a tree of nodes into global leaf weights.
///
/// `local` maps each internal node id to its children's local weights
/// (each child map must sum to 1). Starting from `root`, a child that has
/// its own entry in `local` is recursed into; anything else is a leaf and
/// receives the product of the local weights along its path. The global
/// weights then sum to 1 by construction.
pub fn compose_hierarchical_weights(
    root: &str,
    local: &BTreeMap<String, BTreeMap<String, f64>>,
) -> Result<BTreeMap<String, f64>, ModelError> {
    let mut out = BTreeMap::new();
    descend(root, 1.0, local, &mut out)?;
    Ok(out)
}

fn descend(
    node: &str,
    carried: f64,
    local: &BTreeMap<String, BTreeMap<String, f64>>,
    out: &mut BTreeMap<String, f64>,
) -> Result<(), ModelError> {
    let children = local.get(node).ok_or_else(|| {
        ModelError::invalid(
            "elicitation",
            format!("node `{node}` has no local weights"),
        )
    })?;
    if children.is_empty() {
        return Err(ModelError::invalid(
            "elicitation",
            format!("node `{node}` has an empty local weight map"),
        ));
    }
    let sum: f64 = children.values().sum();
    if (sum - 1.0).abs() > 1e-9 {
        return Err(ModelError::invalid(
            "elicitation",
            format!("local weights under `{node}` sum to {sum}, expected 1"),
        ));
    }
    for (child, &w) in children {
        if !(w.is_finite() && (0.0..=1.0).contains(&w)) {
            return Err(ModelError::invalid(
                "elicitation",
                format!("local weight for `{child}` must lie in [0, 1], got {w}"),
            ));
        }
        if local.contains_key(child) {
            descend(child, carried * w, local, out)?;
        } else if out.insert(child.clone(), carried * w).is_some() {
            return Err(ModelError::invalid(
                "elicitation",
                format!("leaf `{child}` appears under more than one node"),
            ));
        }
    }
    Ok(())
}
