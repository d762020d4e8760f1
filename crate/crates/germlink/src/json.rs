//! JSON encoding. Integers are emitted exactly (arbitrary precision) and
//! rationals as `{"num", "den", "decimal"}`; no value passes through a float
//! except the diagnostic scan residuals.

use std::str::FromStr;

use germlink_core::canonical::non_integral_witness;
use germlink_core::fibre::ChiConvention;
use germlink_core::germ::ScanReport;
use germlink_core::germ::scan::ScanPoint;
use germlink_core::plumbing::PlumbingGraph;
use germlink_core::{BigInt, Rational};
use serde_json::{json, Map, Number, Value};

use crate::analysis::{AnalysisError, AnalysisReport};
use crate::convention::ChiSelection;

pub const SCHEMA_VERSION: u64 = 1;
const DECIMAL_DIGITS: usize = 12;

pub fn integer(value: &BigInt) -> Value {
    Value::Number(Number::from_str(&value.to_string()).expect("integer literal"))
}

pub fn rational(value: &Rational) -> Value {
    json!({
        "num": integer(value.numer()),
        "den": integer(value.denom()),
        "decimal": value.to_decimal_string(DECIMAL_DIGITS),
    })
}

fn integers(values: &[BigInt]) -> Value {
    Value::Array(values.iter().map(integer).collect())
}

fn optional<T>(value: Option<T>, f: impl FnOnce(T) -> Value) -> Value {
    value.map_or(Value::Null, f)
}

/// Vertices, edges, the centre and the arms in orbit order.
pub fn graph(graph: &PlumbingGraph) -> Value {
    let vertices: Vec<Value> = graph
        .vertices()
        .iter()
        .map(|v| json!({"id": v.id, "weight": integer(&v.weight), "genus": integer(&v.genus)}))
        .collect();
    let edges: Vec<Value> = graph.edges().iter().map(|&(a, b)| json!([a, b])).collect();
    let mut out = Map::new();
    out.insert("vertices".into(), Value::Array(vertices));
    out.insert("edges".into(), Value::Array(edges));
    if let Some(star) = graph.star() {
        out.insert("central".into(), json!(star.central));
        let arms: Vec<Value> = star
            .arms
            .iter()
            .map(|arm| json!({"orbit": arm.orbit, "vertices": arm.vertices}))
            .collect();
        out.insert("arms".into(), Value::Array(arms));
    }
    Value::Object(out)
}

fn chi_fields(report: &AnalysisReport, selection: ChiSelection) -> Map<String, Value> {
    let o = &report.obstruction;
    let mut out = Map::new();
    for &convention in selection.conventions() {
        let (chi, residue) = match convention {
            ChiConvention::Literal => (&o.chi_f_literal, o.residue_literal),
            ChiConvention::Join => (&o.chi_f_join, o.residue_join),
        };
        out.insert(format!("chi_F_{}", convention.name()), integer(chi));
        out.insert(format!("residue_{}", convention.name()), json!(residue));
    }
    out
}

/// The report body without the schema header; sweeps embed it per record.
pub fn report_body(report: &AnalysisReport, selection: ChiSelection) -> Map<String, Value> {
    let params = &report.params;
    let weights = &report.weights;
    let seifert = &report.seifert;
    let canonical = &report.canonical;
    let obstruction = &report.obstruction;

    let orbits: Vec<Value> = seifert
        .orbits
        .iter()
        .map(|o| json!({"index": o.index, "alpha": integer(&o.alpha), "beta": integer(&o.beta)}))
        .collect();
    let matrix: Vec<Value> = report.matrix.entries().iter().map(|row| integers(row)).collect();
    let witness = optional(non_integral_witness(&canonical.coefficients), |(vertex, k)| {
        json!({"vertex": vertex, "value": rational(k)})
    });

    let mut obstruction_json = Map::new();
    obstruction_json.insert("chi_fibre_f".into(), integer(&obstruction.chi_fibre_f));
    obstruction_json.insert("display_convention".into(), json!(selection.to_string()));
    obstruction_json.extend(chi_fields(report, selection));
    obstruction_json.insert(
        "chi_plus_k2".into(),
        optional(obstruction.chi_plus_k2.as_ref(), integer),
    );
    obstruction_json.insert("target_residue".into(), json!(obstruction.target_residue));
    obstruction_json.insert("obstructed".into(), json!(obstruction.obstructed));
    obstruction_json.insert(
        "gorenstein_possible".into(),
        json!(obstruction.gorenstein_possible),
    );
    obstruction_json.insert("validated_range".into(), json!(obstruction.validated_range));

    let v = &report.verdicts;
    let mut out = Map::new();
    out.insert(
        "params".into(),
        json!({
            "p": integer(params.p()),
            "q": integer(params.q()),
            "r": integer(params.r()),
            "delta": integer(params.delta()),
            "w": integer(params.w()),
        }),
    );
    out.insert("chi_plus_k2".into(), optional(obstruction.chi_plus_k2.as_ref(), integer));
    out.insert("obstructed".into(), json!(obstruction.obstructed));
    out.insert(
        "weights".into(),
        json!({
            "radial_weights": integers(&weights.radial_weights),
            "radial_degree": integer(&weights.radial_degree),
            "polar_weights": integers(&weights.polar_weights),
            "polar_degree": integer(&weights.polar_degree),
        }),
    );
    out.insert(
        "seifert".into(),
        json!({
            "genus": integer(&seifert.genus),
            "e0": rational(&seifert.e0),
            "orbits": orbits,
            "dropped": seifert.dropped,
        }),
    );
    out.insert("graph".into(), graph(&report.graph));
    out.insert("intersection_matrix".into(), Value::Array(matrix));
    out.insert("e0_from_graph".into(), rational(&report.e0_from_graph));
    out.insert(
        "canonical".into(),
        json!({
            "coefficients": canonical.coefficients.iter().map(rational).collect::<Vec<_>>(),
            "is_integral": canonical.is_integral,
            "witness": witness,
            "chi_resolution": integer(&canonical.chi_resolution),
            "k_squared": rational(&canonical.k_squared),
            "chi_plus_k2": rational(&canonical.chi_plus_k2),
        }),
    );
    out.insert("obstruction".into(), Value::Object(obstruction_json));
    out.insert(
        "verdicts".into(),
        json!({
            "isolated": v.isolated,
            "negative_definite": v.negative_definite,
            "numerically_gorenstein": v.numerically_gorenstein,
            "link_realizable_as_complex_link": v.link_realizable_as_complex_link,
            "smoothing_obstructed": v.smoothing_obstructed,
        }),
    );
    out
}

fn with_schema(body: Map<String, Value>) -> Value {
    let mut out = Map::new();
    out.insert("schema_version".into(), json!(SCHEMA_VERSION));
    out.extend(body);
    Value::Object(out)
}

pub fn report(report: &AnalysisReport, selection: ChiSelection) -> Value {
    with_schema(report_body(report, selection))
}

pub fn error(err: &AnalysisError) -> Value {
    let mut body = Map::new();
    body.insert("error".into(), json!(err.kind()));
    body.insert("message".into(), json!(err.to_string()));
    body.insert("exit_code".into(), json!(err.exit_code()));
    with_schema(body)
}

fn point(p: &ScanPoint) -> Value {
    json!({
        "index": p.index,
        "x": [p.x.re, p.x.im],
        "y": [p.y.re, p.y.im],
        "residual": p.residual,
    })
}

pub fn scan(report: &ScanReport, radius: &Rational, seed: u64) -> Value {
    let mut body = Map::new();
    body.insert("p".into(), json!(report.p));
    body.insert("q".into(), json!(report.q));
    body.insert("samples".into(), json!(report.samples));
    body.insert("radius".into(), rational(radius));
    body.insert("seed".into(), json!(seed));
    body.insert("best_sample".into(), optional(report.best_sample.as_ref(), point));
    body.insert("refined".into(), optional(report.refined.as_ref(), point));
    body.insert("min_residual".into(), json!(report.min_residual()));
    with_schema(body)
}

/// Pretty-printed with a trailing newline.
pub fn to_string(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON values always serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::analyze;

    #[test]
    fn rationals_are_exact() {
        let v = rational(&Rational::new(-11, 5));
        assert_eq!(serde_json::to_string(&v).unwrap(), r#"{"num":-11,"den":5,"decimal":"-2.2"}"#);
        let big = BigInt::from(10).pow(40) + 1;
        assert_eq!(integer(&big).to_string(), big.to_string());
    }

    #[test]
    fn report_round_trips() {
        let r = analyze(2, 5, 2).unwrap();
        let text = to_string(&report(&r, ChiSelection::Both));
        let parsed: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(to_string(&parsed), text);
        assert_eq!(parsed["chi_plus_k2"], json!(7));
        assert_eq!(parsed["obstructed"], json!(true));
        assert_eq!(parsed["graph"]["central"], json!(0));
        assert_eq!(parsed["obstruction"]["residue_literal"], json!(9));
        assert_eq!(parsed["obstruction"]["residue_join"], json!(5));
    }

    #[test]
    fn key_order_is_fixed() {
        let r = analyze(2, 3, 2).unwrap();
        let text = serde_json::to_string(&graph(&r.graph)).unwrap();
        assert!(text.starts_with(r#"{"vertices":[{"id":0,"weight":-1,"genus":0}"#));
        let edges = text.find("\"edges\"").unwrap();
        let central = text.find("\"central\"").unwrap();
        assert!(edges < central);
    }
}
