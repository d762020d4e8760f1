use crate::canonical::CanonicalError;
use crate::exact::ExactError;
use crate::fibre::FibreError;
use crate::germ::GermError;
use crate::plumbing::PlumbingError;
use crate::seifert::SeifertError;

/// Any failure of the pipeline.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Germ(#[from] GermError),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Seifert(#[from] SeifertError),
    #[error(transparent)]
    Plumbing(#[from] PlumbingError),
    #[error(transparent)]
    Canonical(#[from] CanonicalError),
    #[error(transparent)]
    Fibre(#[from] FibreError),
}

impl Error {
    /// Rejected input, as opposed to a violated internal invariant.
    pub fn is_invalid_input(&self) -> bool {
        matches!(
            self,
            Error::Germ(
                GermError::ParameterTooSmall { .. }
                    | GermError::NonIsolated
                    | GermError::NotCoprime { .. }
            ) | Error::Fibre(FibreError::InvalidParams { .. })
        ) || matches!(self.exact(), Some(ExactError::TooLong { .. }))
    }

    fn exact(&self) -> Option<&ExactError> {
        match self {
            Error::Exact(e) | Error::Seifert(SeifertError::Exact(e)) | Error::Plumbing(PlumbingError::Exact(e)) => {
                Some(e)
            }
            _ => None,
        }
    }

    /// Short variant name, e.g. `NonIsolated`.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Germ(e) => match e {
                GermError::ParameterTooSmall { .. } => "ParameterTooSmall",
                GermError::NonIsolated => "NonIsolated",
                GermError::NotCoprime { .. } => "NotCoprime",
                GermError::NotPolarHomogeneous { .. } => "NotPolarHomogeneous",
                GermError::NoMonomials => "NoMonomials",
            },
            Error::Exact(e) | Error::Seifert(SeifertError::Exact(e)) | Error::Plumbing(PlumbingError::Exact(e)) => {
                match e {
                    ExactError::NotInvertible { .. } => "NotInvertible",
                    ExactError::DegenerateModulus(_) => "DegenerateModulus",
                    ExactError::InvalidFraction { .. } => "InvalidFraction",
                    ExactError::InvalidTerms => "InvalidTerms",
                    ExactError::TooLong { .. } => "TooLong",
                }
            }
            Error::Seifert(SeifertError::EvenDelta(_)) => "EvenDelta",
            Error::Plumbing(e) => match e {
                PlumbingError::Exact(_) => unreachable!(),
                PlumbingError::NonIntegralCentralWeight(_) => "NonIntegralCentralWeight",
                PlumbingError::ReconstructionMismatch { .. } => "ReconstructionMismatch",
                PlumbingError::NotAStar => "NotAStar",
                PlumbingError::InvalidEdge(..) => "InvalidEdge",
                PlumbingError::NotATree => "NotATree",
            },
            Error::Canonical(e) => match e {
                CanonicalError::SingularMatrix => "SingularMatrix",
                CanonicalError::ResidualNonZero(_) => "ResidualNonZero",
                CanonicalError::QuadraticMismatch { .. } => "QuadraticMismatch",
                CanonicalError::LengthMismatch { .. } => "LengthMismatch",
            },
            Error::Fibre(e) => match e {
                FibreError::InvalidParams { .. } => "InvalidParams",
                FibreError::NonPositiveMultiplicity { .. } => "NonPositiveMultiplicity",
                FibreError::NonIntegralMultiplicity { .. } => "NonIntegralMultiplicity",
                FibreError::SingularGraph => "SingularGraph",
                FibreError::UnsupportedParams { .. } => "UnsupportedParams",
            },
        }
    }
}
