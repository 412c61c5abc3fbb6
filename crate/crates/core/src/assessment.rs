//! The Monte Carlo assessment loop and its reporting statistics.
//!
//! One assessment = sample correlated attribute levels for R replications,
//! evaluate every value-function leaf on each replication, and fold the
//! leaf values into a weighted resilience score per replication. The
//! replication vector then feeds boxplot-style summary statistics, and the
//! retained per-leaf values feed a per-objective percent-of-ideal
//! disaggregation.
//!
//! Work is blocked in fixed chunks of [`REPLICATION_BLOCK`] replications;
//! blocks evaluate in parallel but merge in block order, so every reported
//! number — including streaming sums — is bit-identical no matter how many
//! threads participated.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::ModelError;
use crate::hierarchy::{Hierarchy, Leaf, LeafKind};
use crate::stochastic::{CompiledScenario, HazardScenario, REPLICATION_BLOCK};
use crate::valuefn::{exp_value, linear_value, triangle_value, ValueFunction};

/// Per-leaf evaluation plan: which sample columns feed the leaf and how.
#[derive(Clone, Debug)]
enum LeafEval {
    Single {
        col: usize,
        vf: ValueFunction,
    },
    Pair {
        impact_col: usize,
        time_col: usize,
        /// Best-case levels and orientations for converting raw levels into
        /// adverse magnitudes.
        impact_best: f64,
        impact_more_is_better: bool,
        time_best: f64,
        time_more_is_better: bool,
        max_impact: f64,
        max_time: f64,
    },
}

impl LeafEval {
    #[inline]
    fn value(&self, levels: &[f64]) -> f64 {
        match *self {
            LeafEval::Single { col, vf } => match vf {
                ValueFunction::LinearMore { x_worst, x_best }
                | ValueFunction::LinearLess { x_best, x_worst } => {
                    linear_value(levels[col], x_worst, x_best)
                }
                ValueFunction::ExpMore {
                    x_worst,
                    x_best,
                    alpha,
                }
                | ValueFunction::ExpLess {
                    x_best,
                    x_worst,
                    alpha,
                } => exp_value(levels[col], x_worst, x_best, alpha),
                ValueFunction::Triangle { .. } => unreachable!("single leaf with pair function"),
            },
            LeafEval::Pair {
                impact_col,
                time_col,
                impact_best,
                impact_more_is_better,
                time_best,
                time_more_is_better,
                max_impact,
                max_time,
            } => {
                let magnitude = |x: f64, best: f64, more: bool| -> f64 {
                    let m = if more { best - x } else { x - best };
                    m.max(0.0)
                };
                let i = magnitude(levels[impact_col], impact_best, impact_more_is_better);
                let t = magnitude(levels[time_col], time_best, time_more_is_better);
                triangle_value(i, t, max_impact, max_time)
            }
        }
    }
}

fn compile_leaves(h: &Hierarchy) -> Vec<LeafEval> {
    let mut col = 0;
    h.leaves
        .iter()
        .map(|leaf| match &leaf.kind {
            LeafKind::Single(_) => {
                let e = LeafEval::Single {
                    col,
                    vf: leaf.value_function,
                };
                col += 1;
                e
            }
            LeafKind::Pair {
                impact,
                time,
                max_impact,
                max_time,
            } => {
                let e = LeafEval::Pair {
                    impact_col: col,
                    time_col: col + 1,
                    impact_best: impact.best_case,
                    impact_more_is_better: matches!(
                        impact.direction,
                        crate::hierarchy::Direction::MoreIsBetter
                    ),
                    time_best: time.best_case,
                    time_more_is_better: matches!(
                        time.direction,
                        crate::hierarchy::Direction::MoreIsBetter
                    ),
                    max_impact: *max_impact,
                    max_time: *max_time,
                };
                col += 2;
                e
            }
        })
        .collect()
}

/// Everything one assessment produced.
#[derive(Clone, Debug)]
pub struct ResilienceSample {
    pub scenario: String,
    pub seed: u64,
    pub rho: f64,
    pub replications: usize,
    /// Leaf ids in hierarchy order.
    pub leaf_ids: Vec<String>,
    pub leaf_weights: Vec<f64>,
    /// Owning top-level objective per leaf.
    pub leaf_objectives: Vec<String>,
    /// Per-replication resilience, clamped into [0, 1].
    pub resilience: Vec<f64>,
    /// Row-major replication × leaf values; absent in streaming mode.
    pub leaf_values: Option<Vec<f64>>,
    /// Per-leaf value totals over all replications (always present).
    pub leaf_value_sums: Vec<f64>,
    /// Normal draws clipped to zero during sampling.
    pub floored_draws: u64,
}

impl ResilienceSample {
    pub fn leaf_count(&self) -> usize {
        self.leaf_ids.len()
    }

    /// One replication's leaf values (only with traces retained).
    pub fn leaf_row(&self, rep: usize) -> Option<&[f64]> {
        let l = self.leaf_count();
        self.leaf_values.as_ref().map(|v| &v[rep * l..(rep + 1) * l])
    }

    pub fn mean_resilience(&self) -> f64 {
        self.resilience.iter().sum::<f64>() / self.resilience.len() as f64
    }
}

/// Weighted sum of leaf values: `R = Σ w_i · v_i`.
///
/// Every weighted leaf must come with a value; extra values are ignored.
/// The result is the raw weighted sum — it lands in [0, 1] when the
/// weights are normalized and the values are clamped.
pub fn aggregate(
    values: &BTreeMap<String, f64>,
    weights: &BTreeMap<String, f64>,
) -> Result<f64, ModelError> {
    let mut r = 0.0;
    for (id, w) in weights {
        let v = values.get(id).ok_or_else(|| ModelError::invalid(
            "aggregate",
            format!("no value supplied for weighted leaf `{id}`"),
        ))?;
        r += w * v;
    }
    Ok(r)
}

/// Run a full assessment, retaining per-leaf traces for disaggregation and
/// per-replication export.
pub fn run_assessment(
    hierarchy: &Hierarchy,
    scenario: &HazardScenario,
    replications: usize,
    seed: u64,
    rho_override: Option<f64>,
) -> Result<ResilienceSample, ModelError> {
    let compiled = CompiledScenario::compile(hierarchy, scenario, rho_override)?;
    run_compiled(hierarchy, &compiled, replications, seed, true)
}

/// Like [`run_assessment`] but keeps only running per-leaf sums instead of
/// the full replication × leaf trace matrix — same numbers, less memory.
pub fn run_assessment_streaming(
    hierarchy: &Hierarchy,
    scenario: &HazardScenario,
    replications: usize,
    seed: u64,
    rho_override: Option<f64>,
) -> Result<ResilienceSample, ModelError> {
    let compiled = CompiledScenario::compile(hierarchy, scenario, rho_override)?;
    run_compiled(hierarchy, &compiled, replications, seed, false)
}

/// Drive the blocks. Each block samples its own rows (nothing is shared
/// but the immutable scenario), so peak memory in streaming mode is one
/// block per worker.
pub fn run_compiled(
    hierarchy: &Hierarchy,
    scenario: &CompiledScenario,
    replications: usize,
    seed: u64,
    keep_traces: bool,
) -> Result<ResilienceSample, ModelError> {
    if replications == 0 {
        return Err(ModelError::ZeroReplications);
    }
    let leaves = compile_leaves(hierarchy);
    let n_leaves = leaves.len();
    let n_attrs = scenario.n_attributes();
    let weights: Vec<f64> = hierarchy.leaves.iter().map(|l| l.weight).collect();

    struct BlockResult {
        resilience: Vec<f64>,
        traces: Option<Vec<f64>>,
        value_sums: Vec<f64>,
        floored: u64,
    }

    let n_blocks = replications.div_ceil(REPLICATION_BLOCK);
    let mut blocks: Vec<BlockResult> = (0..n_blocks)
        .into_par_iter()
        .map(|b| {
            let first = b * REPLICATION_BLOCK;
            let count = REPLICATION_BLOCK.min(replications - first);
            let mut z = vec![0.0; n_attrs];
            let mut y = vec![0.0; n_attrs];
            let mut levels = vec![0.0; n_attrs];
            let mut resilience = Vec::with_capacity(count);
            let mut traces = keep_traces.then(|| Vec::with_capacity(count * n_leaves));
            let mut value_sums = vec![0.0; n_leaves];
            let mut floored = 0u64;
            for offset in 0..count {
                let rep = (first + offset) as u64;
                floored += scenario.sample_row_pub(seed, rep, &mut z, &mut y, &mut levels);
                let mut r = 0.0;
                for (leaf, (w, sum)) in leaves.iter().zip(weights.iter().zip(&mut value_sums)) {
                    let v = leaf.value(&levels);
                    debug_assert!((0.0..=1.0).contains(&v));
                    r += w * v;
                    *sum += v;
                    if let Some(t) = traces.as_mut() {
                        t.push(v);
                    }
                }
                resilience.push(r.clamp(0.0, 1.0));
            }
            BlockResult {
                resilience,
                traces,
                value_sums,
                floored,
            }
        })
        .collect();

    // merge in block order — the reduction order never depends on threads
    let mut resilience = Vec::with_capacity(replications);
    let mut leaf_values = keep_traces.then(|| Vec::with_capacity(replications * n_leaves));
    let mut leaf_value_sums = vec![0.0; n_leaves];
    let mut floored_draws = 0u64;
    for block in &mut blocks {
        resilience.append(&mut block.resilience);
        if let (Some(all), Some(t)) = (leaf_values.as_mut(), block.traces.as_mut()) {
            all.append(t);
        }
        for (total, part) in leaf_value_sums.iter_mut().zip(&block.value_sums) {
            *total += part;
        }
        floored_draws += block.floored;
    }

    Ok(ResilienceSample {
        scenario: scenario.name.clone(),
        seed,
        rho: scenario.rho,
        replications,
        leaf_ids: hierarchy.leaves.iter().map(|l| l.id.clone()).collect(),
        leaf_weights: weights,
        leaf_objectives: hierarchy
            .leaves
            .iter()
            .map(|l| l.objective.clone())
            .collect(),
        resilience,
        leaf_values,
        leaf_value_sums,
        floored_draws,
    })
}

/// Five-number summary plus mean and outliers, in boxplot convention.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SummaryStats {
    pub n: usize,
    pub min: f64,
    pub max: f64,
    pub mean: f64,
    pub q1: f64,
    pub median: f64,
    pub q3: f64,
    /// Most extreme data points within 1.5·IQR of the quartiles. When no
    /// data lands between a fence and its quartile, the whisker collapses
    /// onto the quartile.
    pub whisker_low: f64,
    pub whisker_high: f64,
    /// Data strictly outside the fences, ascending.
    pub outliers: Vec<f64>,
}

/// Interpolated quantile of sorted data: index h = (n−1)·p, linear between
/// the two straddling order statistics.
fn quantile_sorted(sorted: &[f64], p: f64) -> f64 {
    let n = sorted.len();
    if n == 1 {
        return sorted[0];
    }
    let h = (n - 1) as f64 * p;
    let lo = h.floor() as usize;
    let frac = h - lo as f64;
    if frac == 0.0 || lo + 1 >= n {
        sorted[lo]
    } else {
        sorted[lo] + frac * (sorted[lo + 1] - sorted[lo])
    }
}

/// Summarize a replication vector.
pub fn summarize(values: &[f64]) -> Result<SummaryStats, ModelError> {
    if values.is_empty() {
        return Err(ModelError::invalid("summarize", "empty sample"));
    }
    if let Some(bad) = values.iter().find(|v| !v.is_finite()) {
        return Err(ModelError::invalid(
            "summarize",
            format!("non-finite value {bad} in sample"),
        ));
    }
    let mut sorted = values.to_vec();
    sorted.sort_unstable_by(f64::total_cmp);

    let n = sorted.len();
    let min = sorted[0];
    let max = sorted[n - 1];
    let mean = sorted.iter().sum::<f64>() / n as f64;
    let q1 = quantile_sorted(&sorted, 0.25);
    let median = quantile_sorted(&sorted, 0.5);
    let q3 = quantile_sorted(&sorted, 0.75);

    let iqr = q3 - q1;
    let lo_fence = q1 - 1.5 * iqr;
    let hi_fence = q3 + 1.5 * iqr;
    let mut outliers = Vec::new();
    let mut whisker_low = q1;
    let mut whisker_high = q3;
    for &x in &sorted {
        if x < lo_fence || x > hi_fence {
            outliers.push(x);
        }
    }
    if let Some(&lowest_in) = sorted.iter().find(|&&x| x >= lo_fence) {
        whisker_low = lowest_in.min(q1);
    }
    if let Some(&highest_in) = sorted.iter().rev().find(|&&x| x <= hi_fence) {
        whisker_high = highest_in.max(q3);
    }

    Ok(SummaryStats {
        n,
        min,
        max,
        mean,
        q1,
        median,
        q3,
        whisker_low,
        whisker_high,
        outliers,
    })
}

/// One objective's slice of the resilience score.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ObjectiveShare {
    pub objective: String,
    /// Total leaf weight under the objective.
    pub weight_total: f64,
    /// Mean achieved value as a percent of the all-ones ideal.
    pub pct_of_ideal: f64,
}

/// Per-objective percent-of-ideal decomposition of a sample.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ObjectiveDisaggregation {
    pub scenario: String,
    pub mean_resilience: f64,
    /// Top-level objectives in hierarchy order.
    pub shares: Vec<ObjectiveShare>,
}

impl ObjectiveDisaggregation {
    /// The algebraic identity tying the decomposition back to the score:
    /// Σ W_obj · pct/100 over objectives recovers the mean resilience.
    pub fn reconstructed_mean(&self) -> f64 {
        self.shares
            .iter()
            .map(|s| s.weight_total * s.pct_of_ideal / 100.0)
            .sum()
    }
}

/// Decompose mean achieved value per top-level objective.
///
/// Since each objective's ideal (every leaf at value 1) contributes exactly
/// its weight total, percent-of-ideal is the weighted mean leaf value over
/// the objective divided by the objective's weight share.
pub fn disaggregate(
    sample: &ResilienceSample,
    hierarchy: &Hierarchy,
) -> Result<ObjectiveDisaggregation, ModelError> {
    let reps = sample.replications as f64;
    let mut achieved: BTreeMap<&str, f64> = BTreeMap::new();
    let mut totals: BTreeMap<&str, f64> = BTreeMap::new();
    for ((obj, w), sum) in sample
        .leaf_objectives
        .iter()
        .zip(&sample.leaf_weights)
        .zip(&sample.leaf_value_sums)
    {
        *achieved.entry(obj).or_insert(0.0) += w * (sum / reps);
        *totals.entry(obj).or_insert(0.0) += w;
    }
    let mut shares = Vec::with_capacity(hierarchy.objectives.len());
    for obj in &hierarchy.objectives {
        let w_total = totals.get(obj.as_str()).copied().unwrap_or(0.0);
        if w_total <= 0.0 {
            return Err(ModelError::invalid(
                "disaggregate",
                format!("objective `{obj}` has zero total weight"),
            ));
        }
        let pct = 100.0 * achieved[obj.as_str()] / w_total;
        shares.push(ObjectiveShare {
            objective: obj.clone(),
            weight_total: w_total,
            pct_of_ideal: pct,
        });
    }
    Ok(ObjectiveDisaggregation {
        scenario: sample.scenario.clone(),
        mean_resilience: sample.mean_resilience(),
        shares,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hierarchy::{build, HierarchyDoc};

    fn hierarchy() -> Hierarchy {
        let doc: HierarchyDoc = serde_json::from_value(serde_json::json!({
            "name": "demo", "root": "r",
            "objectives": [
                {"id": "r", "label": "root", "children": ["people", "services"]},
                {"id": "people", "label": "People", "children": ["fatalities", "closures"]},
                {"id": "services", "label": "Services", "children": ["uptime"]},
            ],
            "attributes": [
                {"id": "fatalities", "label": "Fatalities", "direction": "less_is_better",
                 "best_case": 0.0, "worst_case": 50.0, "value_function": {"family": "linear"}},
                {"id": "closed", "label": "Closed", "direction": "less_is_better",
                 "best_case": 0.0, "worst_case": 400.0},
                {"id": "closed_days", "label": "Days", "direction": "less_is_better",
                 "best_case": 0.0, "worst_case": 365.0},
                {"id": "uptime", "label": "Uptime", "direction": "more_is_better",
                 "best_case": 100.0, "worst_case": 80.0, "value_function": {"family": "linear"}},
            ],
            "pairs": [{"id": "closures", "impact": "closed", "time": "closed_days"}],
            "weights": {"fatalities": 0.3, "closures": 0.3, "uptime": 0.4},
        }))
        .unwrap();
        build(&doc).unwrap()
    }

    fn point_scenario(fatalities: f64, closed: f64, days: f64, uptime: f64) -> HazardScenario {
        serde_json::from_value(serde_json::json!({
            "name": "pts",
            "distributions": {
                "fatalities": {"family": "point", "value": fatalities},
                "closed": {"family": "point", "value": closed},
                "closed_days": {"family": "point", "value": days},
                "uptime": {"family": "point", "value": uptime},
            }
        }))
        .unwrap()
    }

    #[test]
    fn aggregate_dot_product() {
        let values: BTreeMap<String, f64> =
            [("a", 0.1), ("b", 0.4), ("c", 0.8)].map(|(k, v)| (k.to_string(), v)).into();
        let weights: BTreeMap<String, f64> =
            [("a", 0.2), ("b", 0.3), ("c", 0.5)].map(|(k, v)| (k.to_string(), v)).into();
        let r = aggregate(&values, &weights).unwrap();
        assert!((r - 0.54).abs() < 1e-15);

        let half: BTreeMap<String, f64> =
            [("a", 1.0), ("b", 0.0)].map(|(k, v)| (k.to_string(), v)).into();
        let w: BTreeMap<String, f64> =
            [("a", 0.5), ("b", 0.5)].map(|(k, v)| (k.to_string(), v)).into();
        assert_eq!(aggregate(&half, &w).unwrap(), 0.5);

        let missing: BTreeMap<String, f64> = [("a".to_string(), 1.0)].into();
        assert!(aggregate(&missing, &w).is_err());
    }

    #[test]
    fn best_case_points_score_one() {
        let h = hierarchy();
        let s = point_scenario(0.0, 0.0, 0.0, 100.0);
        let out = run_assessment(&h, &s, 50, 9, None).unwrap();
        assert!(out.resilience.iter().all(|&r| r == 1.0));
    }

    #[test]
    fn worst_case_points_score_zero() {
        let h = hierarchy();
        let s = point_scenario(50.0, 400.0, 365.0, 80.0);
        let out = run_assessment(&h, &s, 50, 9, None).unwrap();
        assert!(out.resilience.iter().all(|&r| r == 0.0));
    }

    #[test]
    fn per_replication_identity_r_equals_weighted_sum() {
        let h = hierarchy();
        let s: HazardScenario = serde_json::from_value(serde_json::json!({
            "name": "mix",
            "distributions": {
                "fatalities": {"family": "lognormal", "mean": 5.0, "p95": 15.0},
                "closed": {"family": "normal", "mean": 120.0, "p95": 300.0},
                "closed_days": {"family": "normal", "mean": 60.0, "p95": 180.0},
                "uptime": {"family": "normal", "location": 92.0, "scale": 4.0, "floor_at_zero": false},
            }
        }))
        .unwrap();
        let out = run_assessment(&h, &s, 777, 4, None).unwrap();
        for rep in 0..out.replications {
            let row = out.leaf_row(rep).unwrap();
            let dot: f64 = row.iter().zip(&out.leaf_weights).map(|(v, w)| v * w).sum();
            assert!((out.resilience[rep] - dot.clamp(0.0, 1.0)).abs() < 1e-12);
            assert!(row.iter().all(|v| (0.0..=1.0).contains(v)));
        }
    }

    #[test]
    fn streaming_matches_materialized_bitwise() {
        let h = hierarchy();
        let s: HazardScenario = serde_json::from_value(serde_json::json!({
            "name": "mix",
            "distributions": {
                "fatalities": {"family": "normal", "mean": 4.0, "p95": 12.0},
                "closed": {"family": "lognormal", "mean": 100.0, "p95": 250.0},
                "closed_days": {"family": "normal", "mean": 45.0, "p95": 120.0},
                "uptime": {"family": "normal", "location": 90.0, "scale": 5.0, "floor_at_zero": false},
            }
        }))
        .unwrap();
        let full = run_assessment(&h, &s, 1000, 42, None).unwrap();
        let slim = run_assessment_streaming(&h, &s, 1000, 42, None).unwrap();
        assert_eq!(full.resilience, slim.resilience);
        assert_eq!(full.leaf_value_sums, slim.leaf_value_sums);
        assert_eq!(full.floored_draws, slim.floored_draws);
        assert!(slim.leaf_values.is_none());
        assert!(full.leaf_values.is_some());
    }

    #[test]
    fn summarize_plain_five_points() {
        let s = summarize(&[0.0, 0.25, 0.5, 0.75, 1.0]).unwrap();
        assert_eq!(s.median, 0.5);
        assert_eq!(s.q1, 0.25);
        assert_eq!(s.q3, 0.75);
        assert_eq!(s.min, 0.0);
        assert_eq!(s.max, 1.0);
        assert_eq!(s.whisker_low, 0.0);
        assert_eq!(s.whisker_high, 1.0);
        assert!(s.outliers.is_empty());
    }

    #[test]
    fn summarize_constant_data() {
        let s = summarize(&[0.8; 100]).unwrap();
        assert_eq!(s.min, 0.8);
        assert_eq!(s.max, 0.8);
        assert_eq!(s.mean, 0.8);
        assert_eq!(s.median, 0.8);
        assert_eq!(s.q3 - s.q1, 0.0);
        assert!(s.outliers.is_empty());
    }

    #[test]
    fn summarize_detects_outliers() {
        let s = summarize(&[0.1, 0.5, 0.5, 0.5, 0.5, 0.5, 0.9]).unwrap();
        assert_eq!(s.outliers, vec![0.1, 0.9]);
        assert_eq!(s.whisker_low, 0.5);
        assert_eq!(s.whisker_high, 0.5);
        // ordering invariant holds even with collapsed whiskers
        assert!(s.min <= s.whisker_low);
        assert!(s.whisker_low <= s.q1);
        assert!(s.q3 <= s.whisker_high);
        assert!(s.whisker_high <= s.max);
    }

    #[test]
    fn summarize_whiskers_clamp_to_quartiles() {
        // the lowest in-fence point (10) sits above q1 (7.5): whisker must
        // collapse onto q1, not float above it
        let s = summarize(&[0.0, 10.0, 10.1, 10.2]).unwrap();
        assert!(s.whisker_low <= s.q1);
        assert_eq!(s.outliers, vec![0.0]);
    }

    #[test]
    fn summarize_rejects_junk() {
        assert!(summarize(&[]).is_err());
        assert!(summarize(&[0.5, f64::NAN]).is_err());
        assert!(summarize(&[f64::INFINITY]).is_err());
    }

    #[test]
    fn disaggregation_identity_and_values() {
        let h = hierarchy();
        // constant mid-range outcome: fatalities 25 → 0.5, closures
        // (200, 182.5) → 0.75, uptime 90 → 0.5
        let s = point_scenario(25.0, 200.0, 182.5, 90.0);
        let out = run_assessment(&h, &s, 10, 3, None).unwrap();
        let d = disaggregate(&out, &h).unwrap();

        assert_eq!(d.shares.len(), 2);
        let people = &d.shares[0];
        assert_eq!(people.objective, "people");
        assert!((people.weight_total - 0.6).abs() < 1e-12);
        // (0.3·0.5 + 0.3·0.75) / 0.6 = 0.625
        assert!((people.pct_of_ideal - 62.5).abs() < 1e-9);
        let services = &d.shares[1];
        assert!((services.pct_of_ideal - 50.0).abs() < 1e-9);

        assert!((d.reconstructed_mean() - d.mean_resilience).abs() < 1e-9);
    }

    #[test]
    fn all_ones_disaggregates_to_full_percent() {
        let h = hierarchy();
        let s = point_scenario(0.0, 0.0, 0.0, 100.0);
        let out = run_assessment(&h, &s, 10, 3, None).unwrap();
        let d = disaggregate(&out, &h).unwrap();
        for share in &d.shares {
            assert!((share.pct_of_ideal - 100.0).abs() < 1e-9);
        }
    }

    #[test]
    fn weight_scaling_leaves_resilience_unchanged() {
        // two equal runs where one re-expresses the same normalized weights
        let h = hierarchy();
        let s = point_scenario(10.0, 100.0, 30.0, 95.0);
        let a = run_assessment(&h, &s, 20, 5, None).unwrap();
        let b = run_assessment(&h, &s, 20, 5, None).unwrap();
        assert_eq!(a.resilience, b.resilience);
    }
}
