use serde_json::{json, Map, Value};

use crate::lp_model::{TransformRecord, VarTransform};
use crate::solver::{Certificate, SolveReport, Status};
use crate::tableau::Label;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Text,
}

/// What a report is rendered from. `transform` supplies the original names
/// and the map from canonical rays to original variables.
pub struct ReportInput<'a> {
    pub problem: &'a str,
    pub report: &'a SolveReport,
    pub transform: &'a TransformRecord,
}

fn finite(x: f64) -> Value {
    if x.is_finite() {
        // adding zero turns -0.0 into 0.0
        json!(x + 0.0)
    } else {
        Value::Null
    }
}

fn label_name(label: Label, t: &TransformRecord) -> String {
    match label {
        Label::Column(j) => t.canonical_column_name(j),
        Label::Row(i) => t.canonical_row_name(i),
    }
}

fn certificate_json(c: &Certificate, t: &TransformRecord) -> Value {
    match c {
        Certificate::PrimalRay { label, direction, .. } => {
            let shift = t.free_shift_col.map_or(0.0, |k| direction[k]);
            let mut dir = Map::new();
            for (name, v) in t.var_names.iter().zip(&t.vars) {
                let d = match *v {
                    VarTransform::Direct { col } | VarTransform::Shifted { col, .. } => direction[col],
                    VarTransform::FreeSplit { col } => direction[col] - shift,
                };
                if d != 0.0 {
                    dir.insert(name.clone(), finite(d));
                }
            }
            json!({ "kind": "primal_ray", "entering": label_name(*label, t), "direction": dir })
        }
        Certificate::DualRay { label, direction, .. } => {
            let mut dir = Map::new();
            for (i, &d) in direction.iter().enumerate() {
                if d != 0.0 {
                    dir.insert(t.canonical_row_name(i), finite(d));
                }
            }
            json!({ "kind": "dual_ray", "row": label_name(*label, t), "direction": dir })
        }
    }
}

fn json_report(input: &ReportInput<'_>) -> String {
    let r = input.report;
    let t = input.transform;
    let original = r.original.as_ref();
    let mut solution = Map::new();
    let mut duals = Map::new();
    if let Some(o) = original {
        for (name, x) in t.var_names.iter().zip(&o.x) {
            solution.insert(name.clone(), finite(*x));
        }
        for (name, v) in t.row_names.iter().zip(&o.row_duals) {
            duals.insert(name.clone(), finite(*v));
        }
    }
    let objective = match (r.objective, original) {
        (Some(_), Some(o)) => finite(o.objective),
        _ => Value::Null,
    };
    let certificates: Vec<Value> = r.certificates.iter().map(|c| certificate_json(c, t)).collect();

    let mut root = Map::new();
    root.insert("problem".into(), json!(input.problem));
    root.insert("status_primal".into(), json!(r.class.primal.code()));
    root.insert("status_dual".into(), json!(r.class.dual.code()));
    root.insert("objective".into(), objective);
    root.insert("iterations".into(), json!(r.iterations));
    root.insert("cycle_flag".into(), json!(r.cycle_flag));
    root.insert("solution".into(), Value::Object(solution));
    root.insert("dual_solution".into(), Value::Object(duals));
    root.insert("certificates".into(), Value::Array(certificates));
    root.insert(
        "iteration_count_vs_m_plus_n".into(),
        json!({
            "iterations": r.iterations,
            "m_plus_n": r.m + r.n,
            "ratio": r.iterations_per_size(),
        }),
    );
    let mut text = serde_json::to_string_pretty(&Value::Object(root)).expect("json values serialize");
    text.push('\n');
    text
}

/// Column header matching [`text_row`].
pub fn text_header() -> String {
    format!(
        "{:<12} {:>6} {:>6} {:>6} {:>6} {:>10} {:>6}  {}",
        "Name", "Rows", "Cols", "CSTr", "CSTc", "Iterations", "m+n", "Optimal Value / Terminal Type"
    )
}

/// One table row: original and canonical sizes, iterations, and either the
/// optimal value or the terminal type.
pub fn text_row(input: &ReportInput<'_>) -> String {
    let r = input.report;
    let t = input.transform;
    let outcome = match (r.class.primal, r.class.dual, r.original.as_ref()) {
        (Status::Finite, Status::Finite, Some(o)) => o.objective.to_string(),
        _ => r.class.to_string(),
    };
    let flag = if r.cycle_flag { " cycle" } else { "" };
    format!(
        "{:<12} {:>6} {:>6} {:>6} {:>6} {:>10} {:>6}  {}{}",
        input.problem,
        // netlib counts the objective as a row
        t.row_names.len() + 1,
        t.var_names.len(),
        r.m,
        r.n,
        r.iterations,
        r.m + r.n,
        outcome,
        flag
    )
}

pub fn emit_report(input: &ReportInput<'_>, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => json_report(input),
        ReportFormat::Text => format!("{}\n{}\n", text_header(), text_row(input)),
    }
}
