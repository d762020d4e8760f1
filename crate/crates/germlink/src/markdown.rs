//! Human-readable reports.

use std::fmt::Write;

use germlink_core::canonical::non_integral_witness;
use germlink_core::fibre::ChiConvention;
use germlink_core::plumbing::to_dot;
use germlink_core::{BigInt, Rational};

use crate::analysis::AnalysisReport;
use crate::convention::ChiSelection;

fn yes_no(value: bool) -> &'static str {
    if value {
        "yes"
    } else {
        "no"
    }
}

fn tuple<T: std::fmt::Display>(values: &[T]) -> String {
    let parts: Vec<String> = values.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

/// `-11/5` as `4/5 - 3`: fractional part first, then the integer part.
pub fn split_fraction(value: &Rational) -> String {
    let whole = value.floor();
    let frac = value.fract();
    let zero = BigInt::from(0);
    if frac.is_zero() || whole == zero {
        return value.to_string();
    }
    if whole < zero {
        format!("{frac} - {}", -whole)
    } else {
        format!("{frac} + {whole}")
    }
}

/// `(g; e0; (a_1, b_1), ..., (a_s, b_s))`.
pub fn seifert_tuple(report: &AnalysisReport) -> String {
    let s = &report.seifert;
    let mut out = format!("({}; {}", s.genus, s.e0);
    for (i, o) in s.orbits.iter().enumerate() {
        let sep = if i == 0 { "; " } else { ", " };
        let _ = write!(out, "{sep}({}, {})", o.alpha, o.beta);
    }
    out.push(')');
    out
}

pub fn render(report: &AnalysisReport, selection: ChiSelection) -> String {
    let mut out = String::new();
    let params = &report.params;
    let (p, q, r) = (params.p(), params.q(), params.r());
    let _ = writeln!(out, "# F = conj(xy)(x^{p} + y^{q}) + z^{r}\n");

    let _ = writeln!(out, "## Parameters\n");
    let _ = writeln!(out, "| p | q | r | delta | w |");
    let _ = writeln!(out, "|---|---|---|---|---|");
    let _ = writeln!(out, "| {p} | {q} | {r} | {} | {} |\n", params.delta(), params.w());

    let w = &report.weights;
    let _ = writeln!(out, "## Polar weights\n");
    let _ = writeln!(
        out,
        "- radial weights {} with degree {}",
        tuple(&w.radial_weights),
        w.radial_degree
    );
    let _ = writeln!(
        out,
        "- polar weights {} with degree {}\n",
        tuple(&w.polar_weights),
        w.polar_degree
    );

    let _ = writeln!(out, "## Seifert invariants\n");
    let _ = writeln!(out, "`{}`\n", seifert_tuple(report));
    if !report.seifert.dropped.is_empty() {
        let _ = writeln!(
            out,
            "Candidate orbits {} have trivial isotropy and are not exceptional.\n",
            tuple(&report.seifert.dropped)
        );
    }

    let graph = &report.graph;
    let _ = writeln!(out, "## Plumbing graph\n");
    if let Some(star) = graph.star() {
        let _ = writeln!(
            out,
            "Central vertex: weight {}, genus {}.\n",
            graph.vertices()[star.central].weight,
            graph.vertices()[star.central].genus
        );
        let _ = writeln!(out, "| orbit | arm weights |");
        let _ = writeln!(out, "|---|---|");
        for arm in &star.arms {
            let _ = writeln!(out, "| {} | {} |", arm.orbit, tuple(&graph.arm_weights(arm)));
        }
        out.push('\n');
    }
    let _ = writeln!(out, "```dot\n{}```\n", to_dot(graph));
    let _ = writeln!(
        out,
        "Intersection matrix of size {}: negative definite: {}. e0 read back from the graph: {}.\n",
        report.matrix.size(),
        yes_no(report.verdicts.negative_definite),
        report.e0_from_graph
    );

    let c = &report.canonical;
    let _ = writeln!(out, "## Canonical class\n");
    let _ = writeln!(out, "| vertex | weight | genus | k |");
    let _ = writeln!(out, "|---|---|---|---|");
    for (v, k) in graph.vertices().iter().zip(&c.coefficients) {
        let _ = writeln!(out, "| {} | {} | {} | {} |", v.id, v.weight, v.genus, k);
    }
    out.push('\n');
    match non_integral_witness(&c.coefficients) {
        None => {
            let _ = writeln!(out, "K is integral: numerically Gorenstein.\n");
        }
        Some((vertex, k)) => {
            let _ = writeln!(
                out,
                "K is not integral: k_{vertex} = {k} = {}. Not numerically Gorenstein.\n",
                split_fraction(k)
            );
        }
    }
    let _ = writeln!(out, "- chi(resolution) = {}", c.chi_resolution);
    let _ = writeln!(out, "- K^2 = {}", c.k_squared);
    let _ = writeln!(out, "- chi + K^2 = {}\n", c.chi_plus_k2);

    let o = &report.obstruction;
    let _ = writeln!(out, "## Milnor fibre and smoothings\n");
    let _ = writeln!(out, "chi of the Milnor fibre of f: {}\n", o.chi_fibre_f);
    let _ = writeln!(out, "| convention | chi(F) | residue mod 12 |");
    let _ = writeln!(out, "|---|---|---|");
    for &convention in selection.conventions() {
        let (chi, residue): (&BigInt, u8) = match convention {
            ChiConvention::Literal => (&o.chi_f_literal, o.residue_literal),
            ChiConvention::Join => (&o.chi_f_join, o.residue_join),
        };
        let _ = writeln!(out, "| {} | {chi} | {residue} |", convention.name());
    }
    out.push('\n');
    match (&o.chi_plus_k2, o.target_residue) {
        (Some(target), Some(residue)) => {
            let _ = writeln!(out, "chi + K^2 = {target} = {residue} (mod 12).\n");
        }
        _ => {
            let _ = writeln!(
                out,
                "K is not integral, so the mod 12 congruence does not apply.\n"
            );
        }
    }
    if !o.validated_range {
        let _ = writeln!(
            out,
            "The curve resolution graph for p = {p} is derived and internally consistent, outside the worked p = 2 range.\n"
        );
    }

    let v = &report.verdicts;
    let _ = writeln!(out, "## Verdicts\n");
    let _ = writeln!(out, "- isolated: {}", yes_no(v.isolated));
    let _ = writeln!(out, "- negative definite: {}", yes_no(v.negative_definite));
    let _ = writeln!(
        out,
        "- {}",
        if v.numerically_gorenstein {
            "numerically Gorenstein"
        } else {
            "not numerically Gorenstein"
        }
    );
    let _ = writeln!(
        out,
        "- link realizable as the link of a complex surface singularity: {}",
        yes_no(v.link_realizable_as_complex_link)
    );
    let _ = writeln!(
        out,
        "- smoothing obstructed: {}",
        match v.smoothing_obstructed {
            Some(b) => yes_no(b),
            None => "not applicable",
        }
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::analyze;

    #[test]
    fn fractions_split_like_closed_forms() {
        assert_eq!(split_fraction(&Rational::new(-11, 5)), "4/5 - 3");
        assert_eq!(split_fraction(&Rational::new(7, 3)), "1/3 + 2");
        assert_eq!(split_fraction(&Rational::new(1, 3)), "1/3");
        assert_eq!(split_fraction(&Rational::from_integer(-4)), "-4");
    }

    #[test]
    fn cusp_report_has_witness() {
        let text = render(&analyze(2, 3, 5).unwrap(), ChiSelection::Literal);
        assert!(text.contains("k_1 = -11/5 = 4/5 - 3"));
        assert!(text.contains("not numerically Gorenstein"));
        assert!(text.contains("`(0; -1/30; (15, 14), (10, 9), (5, 1))`"));
        assert!(text.contains("```dot\ngraph plumbing {"));
    }

    #[test]
    fn r_equals_2_report() {
        let text = render(&analyze(2, 5, 2).unwrap(), ChiSelection::Both);
        assert!(text.contains("| literal | -3 | 9 |"));
        assert!(text.contains("| join | 5 | 5 |"));
        assert!(text.contains("chi + K^2 = 7 = 7 (mod 12)."));
        assert!(text.contains("- smoothing obstructed: yes"));
    }
}
