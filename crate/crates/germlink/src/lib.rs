//! Reports, file formats and batch drivers built on `germlink-core`.
//!
//! [`analyze`] runs the whole pipeline for one triple `(p, q, r)`;
//! [`json`] and [`markdown`] render the result, and [`sweep`] repeats it
//! over parameter ranges in parallel.

pub mod analysis;
pub mod convention;
pub mod json;
pub mod markdown;
pub mod range;
pub mod scan;
pub mod sweep;

pub use analysis::{analyze, AnalysisError, AnalysisReport, Verdicts, Violation};
pub use convention::ChiSelection;
pub use range::ParamRange;
