//! Exact invariants of Goursat distribution germs.
//!
//! A Goursat germ on an n-manifold is classified, at the discrete level, by a
//! handful of equivalent combinatorial invariants. This crate converts between
//! them and computes the Puiseux characteristic of the singular curve attached
//! to a critical germ, in exact `u64` arithmetic:
//!
//! * [`SmallGrowthVector`] / [`DerivedVector`]: the growth data of the flag,
//!   stored flat or in run-length block form.
//! * [`RvtCode`]: the letter code over {R, V, T} that names a singularity
//!   class, paired with derived vectors by explicit coding relations.
//! * [`PuiseuxCharacteristic`]: the invariant `[λ0; λ1, ..., λg]`, computed two
//!   independent ways (a direct formula on the derived vector, and a
//!   recursion over the code's critical strings) plus the classical
//!   gcd-chain computation for plane branches given by a parametrization.
//! * [`census`]: exhaustive enumeration of codes by level and cross-checks of
//!   every identity this crate promises, with CSV / JSON-lines export.
//!
//! All arithmetic is checked; results that would leave `u64` surface as
//! [`Error::Overflow`] instead of wrapping.

mod arith;
pub mod census;
pub mod codes;
pub mod curves;
mod error;
pub mod formula;
pub mod puiseux;
pub mod recursion;
pub mod vectors;

pub use codes::{derived_to_rvt, rvt_to_derived, truncate_last_stage, CodeProfile, Letter, RvtCode, StageTruncation};
pub use curves::{puiseux_from_exponents, witness_exponents, BranchSupport};
pub use error::{Error, Result};
pub use formula::{divisibility_points, puiseux_from_derived, DivisibilityProfile};
pub use puiseux::{check_puiseux, PuiseuxCharacteristic, PuiseuxCheck};
pub use recursion::{e_operator, puiseux_from_rvt, split_code, CodeDecomposition, EPair};
pub use vectors::{Block, DerivedVector, GeometrySummary, SmallGrowthVector};
