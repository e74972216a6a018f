//! Signed magic rectangles with two filled cells per column.
//!
//! An SMR(m, n; r, s) is an `m x n` array in which every row has `r` filled
//! cells, every column has `s`, the values `±1, …, ±mr/2` each appear once,
//! and every row and column sums to zero. For `s = 2` one exists exactly when
//! `m = 2` and `n = r ≡ 0, 3 (mod 4)`, or `m, r ≥ 3` and `mr = 2n`.
//!
//! * [`array`] and [`verify`]: the data model and the axiom checker.
//! * [`seeds`], [`transforms`], [`direct`]: building blocks.
//! * [`dispatch`]: feasibility and the construction for every feasible point.
//! * [`oracle`]: an independent exhaustive search for small parameters.
//! * [`format`]: JSON, CSV and grid text forms.

pub mod array;
pub mod direct;
pub mod dispatch;
pub mod error;
pub mod format;
pub mod oracle;
pub mod seeds;
pub mod transforms;
pub mod verify;

pub use array::{support_set, Params, SignedArray, SupportSet};
pub use dispatch::{construct, feasibility, Construction, Reason, RouteStep, RouteTrace, Verdict};
pub use error::{Error, Result};
pub use oracle::{cross_check, decide, SearchOutcome, SearchStatus};
pub use seeds::{seed, SeedId};
pub use verify::{verify_smr, VerificationReport, Violation};
