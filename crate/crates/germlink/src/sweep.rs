//! Batch analysis over parameter ranges.
//!
//! Triples are enumerated lexicographically in `(p, q, r)`, analysed in
//! parallel, and collected back in enumeration order, so the output does not
//! depend on the number of workers.

use std::fmt::Write;

use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::analysis::{analyze, AnalysisError, AnalysisReport, Violation};
use crate::convention::ChiSelection;
use crate::json;
use crate::range::ParamRange;

/// Caps sweep and scan parallelism.
pub const THREADS_ENV: &str = "GERMLINK_THREADS";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Skipped {
    pub triple: [u64; 3],
    pub reason: &'static str,
}

#[derive(Debug, Clone)]
pub struct Sweep {
    pub ranges: [ParamRange; 3],
    pub reports: Vec<AnalysisReport>,
    pub skipped: Vec<Skipped>,
}

#[derive(Debug, thiserror::Error)]
pub enum SweepError {
    #[error("invariant violated at (p, q, r) = ({}, {}, {}): {violation}", .triple[0], .triple[1], .triple[2])]
    Invariant { triple: [u64; 3], violation: Violation },
    #[error("{THREADS_ENV} must be a positive integer, got {0:?}")]
    BadThreadCount(String),
    #[error("cannot start worker pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

/// Thread cap from the environment; `None` leaves the choice to rayon.
pub fn threads_from_env() -> Result<Option<usize>, SweepError> {
    match std::env::var(THREADS_ENV) {
        Err(_) => Ok(None),
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(SweepError::BadThreadCount(s)),
        },
    }
}

pub fn pool(threads: Option<usize>) -> Result<rayon::ThreadPool, SweepError> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = threads {
        builder = builder.num_threads(n);
    }
    Ok(builder.build()?)
}

pub fn triples(ranges: &[ParamRange; 3]) -> Vec<[u64; 3]> {
    let mut out = Vec::new();
    for p in ranges[0].iter() {
        for q in ranges[1].iter() {
            for r in ranges[2].iter() {
                out.push([p, q, r]);
            }
        }
    }
    out
}

/// Analyses every triple; invalid ones are skipped with their error kind,
/// and the first invariant violation (in enumeration order) aborts.
pub fn run_sweep(ranges: [ParamRange; 3], threads: Option<usize>) -> Result<Sweep, SweepError> {
    let all = triples(&ranges);
    let outcomes: Vec<_> = pool(threads)?.install(|| {
        all.par_iter()
            .map(|&[p, q, r]| analyze(p, q, r))
            .collect()
    });
    let mut reports = Vec::new();
    let mut skipped = Vec::new();
    for (triple, outcome) in all.into_iter().zip(outcomes) {
        match outcome {
            Ok(report) => reports.push(report),
            Err(AnalysisError::Invalid(e)) => skipped.push(Skipped {
                triple,
                reason: e.kind(),
            }),
            Err(AnalysisError::Invariant(violation)) => {
                return Err(SweepError::Invariant { triple, violation })
            }
        }
    }
    Ok(Sweep {
        ranges,
        reports,
        skipped,
    })
}

fn table_row(report: &AnalysisReport) -> Value {
    let params = &report.params;
    let o = &report.obstruction;
    json!({
        "p": json::integer(params.p()),
        "q": json::integer(params.q()),
        "r": json::integer(params.r()),
        "delta": json::integer(params.delta()),
        "genus": json::integer(&report.seifert.genus),
        "e0": json::rational(&report.seifert.e0),
        "central_weight": report.graph.central_weight().map(json::integer),
        "numerically_gorenstein": report.verdicts.numerically_gorenstein,
        "chi_plus_k2": o.chi_plus_k2.as_ref().map(json::integer),
        "residue_literal": o.residue_literal,
        "residue_join": o.residue_join,
        "target_residue": o.target_residue,
        "obstructed": o.obstructed,
    })
}

pub fn to_json(sweep: &Sweep, selection: ChiSelection) -> Value {
    let [p, q, r] = &sweep.ranges;
    let mut out = Map::new();
    out.insert("schema_version".into(), json!(json::SCHEMA_VERSION));
    out.insert(
        "ranges".into(),
        json!({"p": p.to_string(), "q": q.to_string(), "r": r.to_string()}),
    );
    out.insert("analysed".into(), json!(sweep.reports.len()));
    out.insert(
        "table".into(),
        Value::Array(sweep.reports.iter().map(table_row).collect()),
    );
    out.insert(
        "records".into(),
        Value::Array(
            sweep
                .reports
                .iter()
                .map(|r| Value::Object(json::report_body(r, selection)))
                .collect(),
        ),
    );
    out.insert(
        "skipped".into(),
        Value::Array(
            sweep
                .skipped
                .iter()
                .map(|s| {
                    json!({"p": s.triple[0], "q": s.triple[1], "r": s.triple[2], "reason": s.reason})
                })
                .collect(),
        ),
    );
    Value::Object(out)
}

fn cell<T: std::fmt::Display>(value: Option<T>) -> String {
    value.map_or_else(|| "-".to_string(), |v| v.to_string())
}

pub fn to_markdown(sweep: &Sweep) -> String {
    let [p, q, r] = &sweep.ranges;
    let mut out = String::new();
    let _ = writeln!(out, "# Sweep p = {p}, q = {q}, r = {r}\n");
    let _ = writeln!(
        out,
        "{} triples analysed, {} skipped.\n",
        sweep.reports.len(),
        sweep.skipped.len()
    );
    let _ = writeln!(
        out,
        "| p | q | r | delta | g | e0 | centre | Gorenstein | chi+K^2 | res. literal | res. join | target | obstructed |"
    );
    let _ = writeln!(out, "|---|---|---|---|---|---|---|---|---|---|---|---|---|");
    for report in &sweep.reports {
        let params = &report.params;
        let o = &report.obstruction;
        let _ = writeln!(
            out,
            "| {} | {} | {} | {} | {} | {} | {} | {} | {} | {} | {} | {} | {} |",
            params.p(),
            params.q(),
            params.r(),
            params.delta(),
            report.seifert.genus,
            report.seifert.e0,
            cell(report.graph.central_weight()),
            if report.verdicts.numerically_gorenstein {
                "yes"
            } else {
                "not numerically Gorenstein"
            },
            cell(o.chi_plus_k2.as_ref()),
            o.residue_literal,
            o.residue_join,
            cell(o.target_residue),
            cell(o.obstructed),
        );
    }
    if !sweep.skipped.is_empty() {
        let _ = writeln!(out, "\n## Skipped\n");
        for s in &sweep.skipped {
            let [p, q, r] = s.triple;
            let _ = writeln!(out, "- ({p}, {q}, {r}): {}", s.reason);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn range(s: &str) -> ParamRange {
        s.parse().unwrap()
    }

    #[test]
    fn order_and_skips() {
        let sweep = run_sweep([range("2"), range("2..5"), range("2..3")], Some(2)).unwrap();
        let analysed: Vec<_> = sweep
            .reports
            .iter()
            .map(|r| (r.params.q().to_string(), r.params.r().to_string()))
            .collect();
        assert_eq!(
            analysed,
            [("3", "2"), ("3", "3"), ("5", "2"), ("5", "3")].map(|(a, b)| (a.into(), b.into()))
        );
        let reasons: Vec<_> = sweep.skipped.iter().map(|s| (s.triple, s.reason)).collect();
        assert_eq!(
            reasons,
            [
                ([2, 2, 2], "NonIsolated"),
                ([2, 2, 3], "NonIsolated"),
                ([2, 4, 2], "NotCoprime"),
                ([2, 4, 3], "NotCoprime")
            ]
        );
    }

    #[test]
    fn thread_count_does_not_change_output() {
        let ranges = [range("2..3"), range("3..7"), range("2..6")];
        let one = to_json(&run_sweep(ranges, Some(1)).unwrap(), ChiSelection::Both);
        let three = to_json(&run_sweep(ranges, Some(3)).unwrap(), ChiSelection::Both);
        assert_eq!(json::to_string(&one), json::to_string(&three));
    }

    #[test]
    fn empty_range() {
        let sweep = run_sweep([range("2"), range("9..3"), range("2")], None).unwrap();
        assert!(sweep.reports.is_empty() && sweep.skipped.is_empty());
        let text = to_markdown(&sweep);
        assert!(text.contains("0 triples analysed, 0 skipped."));
    }

    #[test]
    fn r_equals_2_families_are_constant() {
        let sweep = run_sweep([range("2"), range("3..21"), range("2")], None).unwrap();
        for report in &sweep.reports {
            let q: u64 = report.params.q().to_string().parse().unwrap();
            let expected = if q % 4 == 1 { 7 } else { 1 };
            assert_eq!(
                report.obstruction.chi_plus_k2,
                Some(expected.into()),
                "q = {q}"
            );
        }
    }
}
