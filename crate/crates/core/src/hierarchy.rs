//! Objectives hierarchy: structure, attribute definitions, pairings, weights.
//!
//! A hierarchy document is a flat JSON description — objective nodes,
//! attribute definitions, impact/time pairings, and a weight table — tied
//! together by string ids. [`validate`] produces a full report of everything
//! wrong with a document (it never short-circuits), while [`build`] compiles
//! a valid document into an immutable [`Hierarchy`] ready for evaluation:
//! leaves flattened in document order, value functions constructed, weights
//! checked against the leaf set.

use std::collections::{BTreeMap, HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::ModelError;
use crate::valuefn::ValueFunction;

/// Tolerance for the global weight sum (weights are exact decimals, so the
/// sum of a valid table is off by at most a few ulps).
pub const WEIGHT_SUM_TOL: f64 = 1e-9;

/// Tolerance for agreement between a declared objective weight and the sum
/// of leaf weights beneath it (table values carry three decimals).
pub const OBJECTIVE_AGREEMENT_TOL: f64 = 1e-6;

/// Which way an attribute's scale runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    MoreIsBetter,
    LessIsBetter,
}

/// Value-function family named on an attribute in the document.
///
/// The anchors live on the attribute itself (`best_case` / `worst_case`),
/// so the document only tags the family; exponential adds its curvature.
/// Pair members carry no family at all — their pair evaluates them jointly.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum ValueFamily {
    Linear,
    Exponential { alpha: f64 },
}

/// One measurable attribute.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AttributeDef {
    pub id: String,
    pub label: String,
    #[serde(default)]
    pub units: String,
    pub direction: Direction,
    pub best_case: f64,
    pub worst_case: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value_function: Option<ValueFamily>,
}

impl AttributeDef {
    /// How far `level` sits into adverse territory, as a nonnegative
    /// magnitude measured from the best case. Pair evaluation runs on these
    /// magnitudes so that a more-is-better member (e.g. schools open) and a
    /// less-is-better member (e.g. days closed) compose the same way.
    pub fn adverse_magnitude(&self, level: f64) -> f64 {
        let m = match self.direction {
            Direction::LessIsBetter => level - self.best_case,
            Direction::MoreIsBetter => self.best_case - level,
        };
        m.max(0.0)
    }

    /// Adverse span between the anchors (always positive for a valid def).
    pub fn adverse_span(&self) -> f64 {
        (self.worst_case - self.best_case).abs()
    }
}

/// Two attributes whose resilience loss is the product of impact magnitude
/// and recovery time.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrianglePairDef {
    pub id: String,
    pub impact: String,
    pub time: String,
    /// Maximum tolerable impact; defaults to the impact member's adverse span.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_impact: Option<f64>,
    /// Maximum tolerable recovery time; defaults to the time member's span.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_time: Option<f64>,
}

/// One node of the objectives tree. `children` may name either sub-objective
/// ids or leaf ids (attributes / pairs) — never a mix.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ObjectiveNode {
    pub id: String,
    pub label: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub objective_weight: Option<f64>,
    pub children: Vec<String>,
}

/// The raw hierarchy document as serialized.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HierarchyDoc {
    #[serde(default = "default_schema_version")]
    pub schema_version: u32,
    pub name: String,
    pub root: String,
    pub objectives: Vec<ObjectiveNode>,
    pub attributes: Vec<AttributeDef>,
    #[serde(default)]
    pub pairs: Vec<TrianglePairDef>,
    pub weights: BTreeMap<String, f64>,
}

fn default_schema_version() -> u32 {
    1
}

/// What kind of leaf a descriptor is.
#[derive(Clone, Debug, PartialEq)]
pub enum LeafKind {
    Single(AttributeDef),
    Pair {
        impact: AttributeDef,
        time: AttributeDef,
        max_impact: f64,
        max_time: f64,
    },
}

/// One value-function leaf, flattened out of the tree.
#[derive(Clone, Debug, PartialEq)]
pub struct Leaf {
    /// Attribute id for singles, pair id for pairs.
    pub id: String,
    /// Top-level objective this leaf rolls up into.
    pub objective: String,
    /// Ancestor objective ids, root first.
    pub path: Vec<String>,
    pub kind: LeafKind,
    pub value_function: ValueFunction,
    pub weight: f64,
}

impl Leaf {
    pub fn attribute_count(&self) -> usize {
        match self.kind {
            LeafKind::Single(_) => 1,
            LeafKind::Pair { .. } => 2,
        }
    }
}

/// A compiled, validated hierarchy.
#[derive(Clone, Debug)]
pub struct Hierarchy {
    pub name: String,
    pub root: String,
    /// Top-level objective ids in document order.
    pub objectives: Vec<String>,
    /// Declared top-level objective weights, where present.
    pub declared_objective_weights: BTreeMap<String, f64>,
    /// Value-function leaves in document order.
    pub leaves: Vec<Leaf>,
}

impl Hierarchy {
    /// All sampled attributes in draw order: singles contribute their own
    /// column, pairs contribute impact then time. The column index is the
    /// key third component of every random draw, so this order is part of
    /// the reproducibility contract.
    pub fn sampled_attributes(&self) -> Vec<&AttributeDef> {
        let mut out = Vec::new();
        for leaf in &self.leaves {
            match &leaf.kind {
                LeafKind::Single(a) => out.push(a),
                LeafKind::Pair { impact, time, .. } => {
                    out.push(impact);
                    out.push(time);
                }
            }
        }
        out
    }

    pub fn weight_sum(&self) -> f64 {
        self.leaves.iter().map(|l| l.weight).sum()
    }

    /// Total leaf weight per top-level objective, in document order.
    pub fn objective_weight_totals(&self) -> BTreeMap<String, f64> {
        let mut totals: BTreeMap<String, f64> = BTreeMap::new();
        for leaf in &self.leaves {
            *totals.entry(leaf.objective.clone()).or_insert(0.0) += leaf.weight;
        }
        totals
    }

    pub fn single_count(&self) -> usize {
        self.leaves
            .iter()
            .filter(|l| matches!(l.kind, LeafKind::Single(_)))
            .count()
    }

    pub fn pair_count(&self) -> usize {
        self.leaves.len() - self.single_count()
    }

    pub fn attribute_count(&self) -> usize {
        self.leaves.iter().map(|l| l.attribute_count()).sum()
    }
}

/// Everything found wrong (and notable) in a document.
#[derive(Clone, Debug, Default, Serialize)]
pub struct ValidationReport {
    pub errors: Vec<String>,
    pub warnings: Vec<String>,
    pub attribute_count: usize,
    pub single_count: usize,
    pub pair_count: usize,
    pub leaf_count: usize,
    pub weight_sum: f64,
    pub objective_weight_totals: BTreeMap<String, f64>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.errors.is_empty()
    }

    /// The one-line shape used by the CLI:
    /// `44 leaves (32 single + 12 paired), weights sum 1.000000`.
    pub fn summary_line(&self) -> String {
        format!(
            "{} leaves ({} single + {} paired), weights sum {:.6}",
            self.leaf_count, self.single_count, self.pair_count, self.weight_sum
        )
    }
}

/// Validate a document, reporting every violation rather than the first.
pub fn validate(doc: &HierarchyDoc) -> ValidationReport {
    analyze(doc).0
}

/// Compile a document into a [`Hierarchy`], failing on the first violation.
pub fn build(doc: &HierarchyDoc) -> Result<Hierarchy, ModelError> {
    let (report, hierarchy) = analyze(doc);
    match hierarchy {
        Some(h) if report.is_valid() => Ok(h),
        _ => Err(ModelError::invalid(
            "hierarchy",
            report
                .errors
                .first()
                .map(String::as_str)
                .unwrap_or("unknown validation failure"),
        )),
    }
}

fn analyze(doc: &HierarchyDoc) -> (ValidationReport, Option<Hierarchy>) {
    let mut rep = ValidationReport::default();
    let mut err = |e: String| rep.errors.push(e);

    // id namespaces and duplicates
    let mut seen: HashSet<&str> = HashSet::new();
    for id in doc
        .objectives
        .iter()
        .map(|o| o.id.as_str())
        .chain(doc.attributes.iter().map(|a| a.id.as_str()))
        .chain(doc.pairs.iter().map(|p| p.id.as_str()))
    {
        if !seen.insert(id) {
            err(format!("duplicate id `{id}`"));
        }
    }

    let objectives: HashMap<&str, &ObjectiveNode> =
        doc.objectives.iter().map(|o| (o.id.as_str(), o)).collect();
    let attributes: HashMap<&str, &AttributeDef> =
        doc.attributes.iter().map(|a| (a.id.as_str(), a)).collect();
    let pairs: HashMap<&str, &TrianglePairDef> =
        doc.pairs.iter().map(|p| (p.id.as_str(), p)).collect();

    // attribute sanity
    for a in &doc.attributes {
        if !a.best_case.is_finite() || !a.worst_case.is_finite() {
            err(format!("attribute `{}`: non-finite anchor", a.id));
            continue;
        }
        if a.best_case == a.worst_case {
            err(format!(
                "attribute `{}`: best_case equals worst_case ({})",
                a.id, a.best_case
            ));
            continue;
        }
        let ok = match a.direction {
            Direction::MoreIsBetter => a.best_case > a.worst_case,
            Direction::LessIsBetter => a.best_case < a.worst_case,
        };
        if !ok {
            err(format!(
                "attribute `{}`: anchors contradict direction (best {}, worst {})",
                a.id, a.best_case, a.worst_case
            ));
        }
    }

    // pair membership
    let mut member_of: HashMap<&str, &str> = HashMap::new();
    for p in &doc.pairs {
        if p.impact == p.time {
            err(format!("pair `{}`: impact and time are the same attribute", p.id));
        }
        for m in [&p.impact, &p.time] {
            if !attributes.contains_key(m.as_str()) {
                err(format!("pair `{}`: unknown member attribute `{m}`", p.id));
            } else if let Some(other) = member_of.insert(m.as_str(), p.id.as_str()) {
                err(format!(
                    "attribute `{m}` is a member of both `{other}` and `{}`",
                    p.id
                ));
            }
        }
        for (extreme, name) in [(p.max_impact, "max_impact"), (p.max_time, "max_time")] {
            if let Some(v) = extreme {
                if !(v.is_finite() && v > 0.0) {
                    err(format!("pair `{}`: {name} must be positive, got {v}", p.id));
                }
            }
        }
    }

    // value-function tags: pair members must not carry one, singles must
    for a in &doc.attributes {
        let paired = member_of.contains_key(a.id.as_str());
        match (&a.value_function, paired) {
            (Some(_), true) => err(format!(
                "attribute `{}` is a pair member but also declares its own value function",
                a.id
            )),
            (None, false) => err(format!(
                "attribute `{}` has no value function and is not part of a pair",
                a.id
            )),
            _ => {}
        }
    }

    // walk the tree from the root, collecting leaves in document order
    let mut leaves: Vec<(String, String, Vec<String>)> = Vec::new(); // (leaf id, objective, path)
    if !objectives.contains_key(doc.root.as_str()) {
        err(format!("root objective `{}` is not defined", doc.root));
    } else {
        let mut visiting: Vec<&str> = Vec::new();
        let mut parent: HashMap<&str, &str> = HashMap::new();
        walk(
            doc.root.as_str(),
            &objectives,
            &attributes,
            &pairs,
            &mut visiting,
            &mut parent,
            &mut leaves,
            &mut rep.errors,
        );
    }

    // weight checks against the reachable leaf set
    let leaf_ids: Vec<&str> = leaves.iter().map(|(id, _, _)| id.as_str()).collect();
    let leaf_set: HashSet<&str> = leaf_ids.iter().copied().collect();
    if leaf_ids.is_empty() && rep.errors.is_empty() {
        rep.errors.push("no leaf attributes reachable from the root".into());
    }
    for id in &leaf_ids {
        if !doc.weights.contains_key(*id) {
            rep.errors.push(format!("leaf `{id}` has no weight entry"));
        }
    }
    for (id, w) in &doc.weights {
        if !leaf_set.contains(id.as_str()) {
            rep.errors
                .push(format!("weight entry for unknown leaf `{id}`"));
        }
        if !(w.is_finite() && (0.0..=1.0).contains(w)) {
            rep.errors
                .push(format!("weight for `{id}` must lie in [0, 1], got {w}"));
        }
    }
    let weight_sum: f64 = leaf_ids
        .iter()
        .filter_map(|id| doc.weights.get(*id))
        .sum();
    rep.weight_sum = weight_sum;
    if !leaf_ids.is_empty() && (weight_sum - 1.0).abs() > WEIGHT_SUM_TOL {
        rep.errors
            .push(ModelError::WeightSum { sum: weight_sum }.to_string());
    }

    // unreferenced definitions are suspicious but not fatal
    let reachable_attrs: HashSet<&str> = leaves
        .iter()
        .flat_map(|(id, _, _)| match pairs.get(id.as_str()) {
            Some(p) => vec![p.impact.as_str(), p.time.as_str()],
            None => vec![id.as_str()],
        })
        .collect();
    for a in &doc.attributes {
        if !reachable_attrs.contains(a.id.as_str()) {
            rep.warnings
                .push(format!("attribute `{}` is not reachable from the root", a.id));
        }
    }
    for p in &doc.pairs {
        if !leaf_set.contains(p.id.as_str()) {
            rep.warnings
                .push(format!("pair `{}` is not reachable from the root", p.id));
        }
    }

    // counts
    rep.leaf_count = leaves.len();
    rep.pair_count = leaves
        .iter()
        .filter(|(id, _, _)| pairs.contains_key(id.as_str()))
        .count();
    rep.single_count = rep.leaf_count - rep.pair_count;
    rep.attribute_count = rep.single_count + 2 * rep.pair_count;

    // per-objective totals + agreement with declared weights
    let mut totals: BTreeMap<String, f64> = BTreeMap::new();
    for (id, objective, _) in &leaves {
        if let Some(w) = doc.weights.get(id) {
            *totals.entry(objective.clone()).or_insert(0.0) += w;
        }
    }
    rep.objective_weight_totals = totals.clone();
    for o in &doc.objectives {
        if let Some(declared) = o.objective_weight {
            if let Some(total) = totals.get(&o.id) {
                if (declared - total).abs() > OBJECTIVE_AGREEMENT_TOL {
                    rep.warnings.push(format!(
                        "objective `{}` declares weight {declared} but its leaves sum to {total}",
                        o.id
                    ));
                }
            }
        }
    }

    if !rep.errors.is_empty() {
        return (rep, None);
    }

    // compile
    let mut compiled = Vec::with_capacity(leaves.len());
    for (id, objective, path) in leaves {
        let weight = doc.weights[&id];
        let (kind, vf) = if let Some(p) = pairs.get(id.as_str()) {
            let impact = attributes[p.impact.as_str()].clone();
            let time = attributes[p.time.as_str()].clone();
            let max_impact = p.max_impact.unwrap_or_else(|| impact.adverse_span());
            let max_time = p.max_time.unwrap_or_else(|| time.adverse_span());
            let vf = match ValueFunction::triangle(max_impact, max_time) {
                Ok(vf) => vf,
                Err(e) => {
                    rep.errors.push(format!("pair `{id}`: {e}"));
                    return (rep, None);
                }
            };
            (
                LeafKind::Pair {
                    impact,
                    time,
                    max_impact,
                    max_time,
                },
                vf,
            )
        } else {
            let attr = attributes[id.as_str()].clone();
            let vf = match single_value_function(&attr) {
                Ok(vf) => vf,
                Err(e) => {
                    rep.errors.push(format!("attribute `{id}`: {e}"));
                    return (rep, None);
                }
            };
            (LeafKind::Single(attr), vf)
        };
        compiled.push(Leaf {
            id,
            objective,
            path,
            kind,
            value_function: vf,
            weight,
        });
    }

    let root_node = &objectives[doc.root.as_str()];
    let top_level: Vec<String> = if root_node
        .children
        .iter()
        .all(|c| objectives.contains_key(c.as_str()))
    {
        root_node.children.clone()
    } else {
        // degenerate hierarchy: the root owns leaves directly
        vec![doc.root.clone()]
    };
    let declared: BTreeMap<String, f64> = doc
        .objectives
        .iter()
        .filter_map(|o| o.objective_weight.map(|w| (o.id.clone(), w)))
        .collect();

    let hierarchy = Hierarchy {
        name: doc.name.clone(),
        root: doc.root.clone(),
        objectives: top_level,
        declared_objective_weights: declared,
        leaves: compiled,
    };
    (rep, Some(hierarchy))
}

/// Build the single-attribute value function implied by an attribute's
/// direction, anchors, and declared family.
fn single_value_function(a: &AttributeDef) -> Result<ValueFunction, String> {
    let family = a
        .value_function
        .ok_or_else(|| "missing value function".to_string())?;
    let vf = match (family, a.direction) {
        (ValueFamily::Linear, Direction::MoreIsBetter) => {
            ValueFunction::linear_more(a.worst_case, a.best_case)
        }
        (ValueFamily::Linear, Direction::LessIsBetter) => {
            ValueFunction::linear_less(a.best_case, a.worst_case)
        }
        (ValueFamily::Exponential { alpha }, Direction::MoreIsBetter) => {
            ValueFunction::exp_more(a.worst_case, a.best_case, alpha)
        }
        (ValueFamily::Exponential { alpha }, Direction::LessIsBetter) => {
            ValueFunction::exp_less(a.best_case, a.worst_case, alpha)
        }
    };
    vf.map_err(|e| e.to_string())
}

/// Depth-first walk in declaration order. Each node's children must be all
/// objectives or all leaves; cycles and diamond sharing are rejected.
#[allow(clippy::too_many_arguments)]
fn walk<'a>(
    node_id: &'a str,
    objectives: &HashMap<&'a str, &'a ObjectiveNode>,
    attributes: &HashMap<&str, &AttributeDef>,
    pairs: &HashMap<&str, &TrianglePairDef>,
    visiting: &mut Vec<&'a str>,
    parent: &mut HashMap<&'a str, &'a str>,
    leaves: &mut Vec<(String, String, Vec<String>)>,
    errors: &mut Vec<String>,
) {
    if visiting.contains(&node_id) {
        errors.push(format!("cycle detected through node `{node_id}`"));
        return;
    }
    let node = objectives[node_id];
    visiting.push(node_id);

    let mut kinds = (0usize, 0usize); // (objective children, leaf children)
    for child in &node.children {
        let child = child.as_str();
        if objectives.contains_key(child) {
            kinds.0 += 1;
            match parent.insert(child, node_id) {
                Some(first) if first != node_id => {
                    errors.push(format!(
                        "node `{child}` is claimed by both `{first}` and `{node_id}`"
                    ));
                }
                Some(_) => {
                    errors.push(format!("node `{node_id}` lists `{child}` twice"));
                }
                None => walk(
                    child, objectives, attributes, pairs, visiting, parent, leaves, errors,
                ),
            }
        } else if attributes.contains_key(child) || pairs.contains_key(child) {
            kinds.1 += 1;
            if let Some(first) = parent.insert(child, node_id) {
                errors.push(format!(
                    "leaf `{child}` is claimed by both `{first}` and `{node_id}`"
                ));
            } else {
                // the top-level objective is the child of the root on this path
                let objective = visiting.get(1).copied().unwrap_or(node_id).to_string();
                let path = visiting.iter().map(|s| s.to_string()).collect();
                leaves.push((child.to_string(), objective, path));
            }
        } else {
            errors.push(format!(
                "node `{node_id}` references unknown child `{child}`"
            ));
        }
    }
    if kinds.0 > 0 && kinds.1 > 0 {
        errors.push(format!(
            "node `{node_id}` mixes child objectives with leaf attributes"
        ));
    }
    visiting.pop();
}

#[cfg(test)]
mod tests {
    use super::*;

    fn doc(json: serde_json::Value) -> HierarchyDoc {
        serde_json::from_value(json).unwrap()
    }

    fn tiny_doc() -> HierarchyDoc {
        doc(serde_json::json!({
            "name": "tiny",
            "root": "r",
            "objectives": [
                {"id": "r", "label": "root", "children": ["a", "b"]},
                {"id": "a", "label": "A", "objective_weight": 0.6, "children": ["fatalities", "closures"]},
                {"id": "b", "label": "B", "objective_weight": 0.4, "children": ["uptime"]},
            ],
            "attributes": [
                {"id": "fatalities", "label": "Fatalities", "units": "count",
                 "direction": "less_is_better", "best_case": 0.0, "worst_case": 50.0,
                 "value_function": {"family": "linear"}},
                {"id": "closed", "label": "Businesses closed", "units": "count",
                 "direction": "less_is_better", "best_case": 0.0, "worst_case": 400.0},
                {"id": "closed_days", "label": "Days closed", "units": "days",
                 "direction": "less_is_better", "best_case": 0.0, "worst_case": 365.0},
                {"id": "uptime", "label": "Service uptime", "units": "%",
                 "direction": "more_is_better", "best_case": 100.0, "worst_case": 80.0,
                 "value_function": {"family": "linear"}},
            ],
            "pairs": [
                {"id": "closures", "impact": "closed", "time": "closed_days"},
            ],
            "weights": {"fatalities": 0.3, "closures": 0.3, "uptime": 0.4},
        }))
    }

    #[test]
    fn valid_doc_builds() {
        let h = build(&tiny_doc()).unwrap();
        assert_eq!(h.leaves.len(), 3);
        assert_eq!(h.single_count(), 2);
        assert_eq!(h.pair_count(), 1);
        assert_eq!(h.attribute_count(), 4);
        assert_eq!(h.objectives, vec!["a", "b"]);
        assert!((h.weight_sum() - 1.0).abs() < 1e-12);

        let leaf_ids: Vec<&str> = h.leaves.iter().map(|l| l.id.as_str()).collect();
        assert_eq!(leaf_ids, vec!["fatalities", "closures", "uptime"]);
        assert_eq!(h.leaves[0].objective, "a");
        assert_eq!(h.leaves[0].path, vec!["r", "a"]);
        assert_eq!(h.leaves[2].objective, "b");

        // pair maxima default to member adverse spans
        match &h.leaves[1].kind {
            LeafKind::Pair {
                max_impact,
                max_time,
                ..
            } => {
                assert_eq!(*max_impact, 400.0);
                assert_eq!(*max_time, 365.0);
            }
            other => panic!("expected pair, got {other:?}"),
        }

        let totals = h.objective_weight_totals();
        assert!((totals["a"] - 0.6).abs() < 1e-12);
        assert!((totals["b"] - 0.4).abs() < 1e-12);
    }

    #[test]
    fn sampled_attribute_order_is_document_order() {
        let h = build(&tiny_doc()).unwrap();
        let cols: Vec<&str> = h
            .sampled_attributes()
            .iter()
            .map(|a| a.id.as_str())
            .collect();
        assert_eq!(cols, vec!["fatalities", "closed", "closed_days", "uptime"]);
    }

    #[test]
    fn weight_sum_error_message() {
        let mut d = tiny_doc();
        d.weights.insert("uptime".into(), 0.5);
        d.weights.insert("fatalities".into(), 0.6);
        d.weights.insert("closures".into(), 0.0);
        let rep = validate(&d);
        assert!(rep.errors.iter().any(|e| e == "weights sum to 1.1"), "{:?}", rep.errors);
    }

    #[test]
    fn missing_and_unknown_weights_are_reported() {
        let mut d = tiny_doc();
        d.weights.remove("uptime");
        d.weights.insert("ghost".into(), 0.4);
        let rep = validate(&d);
        assert!(rep.errors.iter().any(|e| e.contains("`uptime` has no weight")));
        assert!(rep.errors.iter().any(|e| e.contains("unknown leaf `ghost`")));
    }

    #[test]
    fn single_leaf_weight_one_is_valid() {
        let d = doc(serde_json::json!({
            "name": "one", "root": "r",
            "objectives": [{"id": "r", "label": "root", "children": ["x"]}],
            "attributes": [{"id": "x", "label": "X", "direction": "less_is_better",
                            "best_case": 0.0, "worst_case": 1.0,
                            "value_function": {"family": "linear"}}],
            "weights": {"x": 1.0},
        }));
        let rep = validate(&d);
        assert!(rep.is_valid(), "{:?}", rep.errors);
        let h = build(&d).unwrap();
        assert_eq!(h.objectives, vec!["r"]);
        assert_eq!(h.objective_weight_totals()["r"], 1.0);
    }

    #[test]
    fn mixing_children_rejected() {
        let d = doc(serde_json::json!({
            "name": "mix", "root": "r",
            "objectives": [
                {"id": "r", "label": "root", "children": ["sub", "x"]},
                {"id": "sub", "label": "sub", "children": ["y"]},
            ],
            "attributes": [
                {"id": "x", "label": "X", "direction": "less_is_better",
                 "best_case": 0.0, "worst_case": 1.0, "value_function": {"family": "linear"}},
                {"id": "y", "label": "Y", "direction": "less_is_better",
                 "best_case": 0.0, "worst_case": 1.0, "value_function": {"family": "linear"}},
            ],
            "weights": {"x": 0.5, "y": 0.5},
        }));
        let rep = validate(&d);
        assert!(rep
            .errors
            .iter()
            .any(|e| e.contains("mixes child objectives with leaf attributes")));
    }

    #[test]
    fn cycles_and_shared_children_rejected() {
        let d = doc(serde_json::json!({
            "name": "cyc", "root": "r",
            "objectives": [
                {"id": "r", "label": "root", "children": ["a"]},
                {"id": "a", "label": "A", "children": ["r"]},
            ],
            "attributes": [],
            "weights": {},
        }));
        let rep = validate(&d);
        assert!(rep.errors.iter().any(|e| e.contains("cycle")), "{:?}", rep.errors);
    }

    #[test]
    fn duplicate_ids_rejected() {
        let mut d = tiny_doc();
        d.attributes.push(d.attributes[0].clone());
        let rep = validate(&d);
        assert!(rep.errors.iter().any(|e| e.contains("duplicate id `fatalities`")));
    }

    #[test]
    fn pair_member_with_own_value_function_rejected() {
        let mut d = tiny_doc();
        d.attributes[1].value_function = Some(ValueFamily::Linear);
        let rep = validate(&d);
        assert!(rep
            .errors
            .iter()
            .any(|e| e.contains("also declares its own value function")));
    }

    #[test]
    fn direction_anchor_contradiction_rejected() {
        let mut d = tiny_doc();
        d.attributes[3].best_case = 70.0; // more-is-better with best < worst
        let rep = validate(&d);
        assert!(rep
            .errors
            .iter()
            .any(|e| e.contains("anchors contradict direction")));
    }

    #[test]
    fn objective_weight_disagreement_warns() {
        let mut d = tiny_doc();
        d.objectives[1].objective_weight = Some(0.55);
        let rep = validate(&d);
        assert!(rep.is_valid());
        assert!(rep.warnings.iter().any(|w| w.contains("leaves sum to")));
    }

    #[test]
    fn adverse_magnitude_orientation() {
        let h = build(&tiny_doc()).unwrap();
        let uptime = match &h.leaves[2].kind {
            LeafKind::Single(a) => a.clone(),
            _ => unreachable!(),
        };
        // more-is-better: dropping below best accumulates magnitude
        assert_eq!(uptime.adverse_magnitude(100.0), 0.0);
        assert_eq!(uptime.adverse_magnitude(90.0), 10.0);
        assert_eq!(uptime.adverse_magnitude(110.0), 0.0);

        let fatalities = match &h.leaves[0].kind {
            LeafKind::Single(a) => a.clone(),
            _ => unreachable!(),
        };
        assert_eq!(fatalities.adverse_magnitude(0.0), 0.0);
        assert_eq!(fatalities.adverse_magnitude(10.0), 10.0);
        assert_eq!(fatalities.adverse_magnitude(-5.0), 0.0);
    }

    #[test]
    fn summary_line_shape() {
        let rep = validate(&tiny_doc());
        assert_eq!(rep.summary_line(), "3 leaves (2 single + 1 paired), weights sum 1.000000");
    }

    #[test]
    fn json_round_trip() {
        let d = tiny_doc();
        let s = serde_json::to_string_pretty(&d).unwrap();
        let back: HierarchyDoc = serde_json::from_str(&s).unwrap();
        assert_eq!(d, back);
    }
}
