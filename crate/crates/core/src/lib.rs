//! Exact invariants of the real germs `F(x,y,z) = conj(xy)(x^p + y^q) + z^r`.
//!
//! Everything here is exact integer or rational arithmetic, with the single
//! exception of [`germ::scan`], a floating-point diagnostic. The crate is
//! `no_std` and only needs `alloc`.
//!
//! The pipeline for one parameter triple:
//!
//! ```
//! use germlink_core::{canonical, fibre, germ, plumbing, seifert};
//!
//! let params = germ::validate(2u32, 5u32, 2u32).unwrap();
//! let data = seifert::seifert_invariants(&params).unwrap();
//! let graph = plumbing::star_plumbing(&data).unwrap();
//! let report = canonical::canonical_report(&graph).unwrap();
//! assert!(report.is_integral);
//! assert_eq!(report.chi_plus_k2, 7.into());
//!
//! let obstruction = fibre::smoothing_obstruction(&params).unwrap();
//! assert_eq!(obstruction.obstructed, Some(true));
//! ```
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod canonical;
pub mod error;
pub mod exact;
pub mod fibre;
pub mod germ;
pub mod plumbing;
pub mod seifert;

pub use error::Error;
pub use exact::Rational;
pub use num_bigint::BigInt;
