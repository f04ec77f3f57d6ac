//! Exact computation of sturdiness and related invariants of set families
//! over small ground sets.
//!
//! A family lives on `[n] = {1, …, n}` with `n ≤ 64`; members are
//! [`Subset`] bitsets. The central quantity is the sturdiness
//! `β(F) = min_{i≠j} |{F ∈ F : i ∈ F, j ∉ F}|`.

pub mod constructions;
pub mod error;
pub mod family;
pub mod formulas;
pub mod metrics;
pub mod par;
pub mod sample;
pub mod search;
pub mod transforms;

pub use error::{Error, Result};
pub use family::{parse_family, serialize_family, SetFamily, Subset};
pub use metrics::{link_matrix, sturdiness, LinkMatrix};
