//! The full pipeline for one parameter triple.

use germlink_core::canonical::{canonical_report, CanonicalClassReport};
use germlink_core::fibre::{obstruction_with_canonical, ObstructionReport};
use germlink_core::germ::{polar_weights, validate, GermParams, PolarWeightSystem};
use germlink_core::plumbing::{
    e0_from_graph, intersection_matrix, is_negative_definite, star_plumbing, IntersectionMatrix,
    PlumbingGraph,
};
use germlink_core::seifert::{functoriality_check, seifert_invariants, SeifertData};
use germlink_core::{BigInt, Error, Rational};

/// A check that holds for every valid triple failed. This is a bug in the
/// pipeline, never a property of the input.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Violation {
    #[error(transparent)]
    Pipeline(Error),
    #[error("intersection matrix is not negative definite")]
    NotNegativeDefinite,
    #[error("central weight {0} is not at most -1")]
    CentralWeight(BigInt),
    #[error("e0 does not transform correctly under the covering maps")]
    Functoriality,
}

impl Violation {
    pub fn kind(&self) -> &'static str {
        match self {
            Violation::Pipeline(e) => e.kind(),
            Violation::NotNegativeDefinite => "NotNegativeDefinite",
            Violation::CentralWeight(_) => "CentralWeight",
            Violation::Functoriality => "Functoriality",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AnalysisError {
    #[error("invalid parameters: {0}")]
    Invalid(Error),
    #[error("invariant violated: {0}")]
    Invariant(Violation),
}

impl AnalysisError {
    pub fn kind(&self) -> &'static str {
        match self {
            AnalysisError::Invalid(e) => e.kind(),
            AnalysisError::Invariant(v) => v.kind(),
        }
    }

    /// 2 for rejected input, 3 for a violated invariant.
    pub fn exit_code(&self) -> i32 {
        match self {
            AnalysisError::Invalid(_) => 2,
            AnalysisError::Invariant(_) => 3,
        }
    }
}

impl From<Error> for AnalysisError {
    fn from(e: Error) -> Self {
        if e.is_invalid_input() {
            AnalysisError::Invalid(e)
        } else {
            AnalysisError::Invariant(Violation::Pipeline(e))
        }
    }
}

fn pipeline<T, E: Into<Error>>(r: Result<T, E>) -> Result<T, AnalysisError> {
    r.map_err(|e| AnalysisError::from(e.into()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdicts {
    pub isolated: bool,
    pub negative_definite: bool,
    pub numerically_gorenstein: bool,
    /// `e0 < 0`, so the plumbing is negative definite and the link bounds
    /// a normal complex surface singularity.
    pub link_realizable_as_complex_link: bool,
    /// `None` when `K` is not integral and the congruence does not apply.
    pub smoothing_obstructed: Option<bool>,
}

/// Everything computed for one triple. Each field is a module output; the
/// verdicts are read off those outputs without further arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnalysisReport {
    pub params: GermParams,
    pub weights: PolarWeightSystem,
    pub seifert: SeifertData,
    pub graph: PlumbingGraph,
    pub matrix: IntersectionMatrix,
    pub e0_from_graph: Rational,
    pub canonical: CanonicalClassReport,
    pub obstruction: ObstructionReport,
    pub verdicts: Verdicts,
}

pub fn analyze(
    p: impl Into<BigInt>,
    q: impl Into<BigInt>,
    r: impl Into<BigInt>,
) -> Result<AnalysisReport, AnalysisError> {
    let params = pipeline(validate(p, q, r))?;
    let weights = polar_weights(&params);
    let seifert = pipeline(seifert_invariants(&params))?;
    if !functoriality_check(&seifert, &params) {
        return Err(AnalysisError::Invariant(Violation::Functoriality));
    }
    let graph = pipeline(star_plumbing(&seifert))?;
    let central = graph.central_weight().expect("star plumbing has a centre");
    if *central > BigInt::from(-1) {
        return Err(AnalysisError::Invariant(Violation::CentralWeight(central.clone())));
    }
    let e0_from_graph = pipeline(e0_from_graph(&graph, &seifert))?;
    let matrix = intersection_matrix(&graph);
    let negative_definite = is_negative_definite(&matrix);
    if !negative_definite {
        return Err(AnalysisError::Invariant(Violation::NotNegativeDefinite));
    }
    let canonical = pipeline(canonical_report(&graph))?;
    let obstruction = pipeline(obstruction_with_canonical(&params, &canonical))?;

    let verdicts = Verdicts {
        isolated: true,
        negative_definite,
        numerically_gorenstein: canonical.is_integral,
        link_realizable_as_complex_link: seifert.e0.is_negative(),
        smoothing_obstructed: obstruction.obstructed,
    };
    Ok(AnalysisReport {
        params,
        weights,
        seifert,
        graph,
        matrix,
        e0_from_graph,
        canonical,
        obstruction,
        verdicts,
    })
}
