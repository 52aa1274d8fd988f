//! Finite abstract convex geometries, their combinatorics, and exact geometric
//! realizations.
//!
//! A convex geometry here is a family of subsets of a finite ground set that
//! contains the empty set and the ground set, is closed under intersection,
//! and lets every proper member grow by a single element. The crate covers:
//!
//! * building geometries from families of total orderings, from posets
//!   (order-convex sets), and from planar point configurations;
//! * the convex dimension `cdim` (fewest orderings that generate the family),
//!   computed exactly by set-cover branch and bound over compatible orderings;
//! * an exact embedding of any such geometry as a generalized convex shelling
//!   over integer coordinates, with rational-arithmetic verification;
//! * an embedding by convex polygons in the plane (segments on a line for
//!   `cdim <= 2`, polygons on `cdim` rays otherwise), again verified exactly;
//! * a hull-membership kernel: rational phase-1 simplex with certificates.
//!
//! Everything is deterministic. Searches break ties by ground order and
//! return lexicographically smallest witnesses.
//!
//! The crate is `no_std` (alloc required); IO, JSON, and the command-line
//! front end live in the companion `cgx` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod embed;
pub mod generators;
pub mod geometry;
pub mod hull;
pub mod order;
pub mod polygon;
mod simplex;
pub mod subset;
pub mod svg;

pub use embed::{decide_dim1, dim_report, DimReport, LineWitness, ShellingEmbedding};
pub use geometry::{AxiomReport, ConvexGeometry, GroundSet};
pub use hull::{
    ext_hull_members, in_hull, pos_hull_members, HullMembership, Rational, RationalPoint,
    ShellingInstance,
};
pub use order::{cdim, compatible_orderings, CdimResult, Ordering, OrderingFamily};
pub use polygon::{embed_polygons, verify_polygons, Polygon, PolygonMap};
pub use subset::Subset;

use alloc::string::String;

/// Errors shared across the crate. Construction errors carry enough context
/// to be reported verbatim by callers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Ground set is empty, has a duplicate name, or an empty name.
    InvalidGround(String),
    /// A set family failed structural validation (missing empty set or
    /// ground set, duplicate member, member outside the ground set).
    InvalidFamily(String),
    /// Two arguments were built over different ground sets.
    GroundMismatch,
    /// An operation needing a nonempty subset got the empty one.
    EmptySubset,
    /// An operation needing a nonempty point list got none.
    EmptyPointSet,
    /// Point dimensions disagree.
    DimensionMismatch { expected: usize, found: usize },
    /// The subset is not a member of the geometry in question.
    NotConvex(Subset),
    /// No element can extend the full ground set.
    FullSet,
    /// The family fails the convex-geometry axioms, so the operation's
    /// answer would be meaningless.
    AxiomsViolated,
    /// Input size exceeds the configured enumeration limit.
    LimitExceeded { limit: usize, actual: usize },
    /// A shelling instance placed a ground point inside the hull of Q.
    HullIntersectsGround(usize),
    /// The scale parameter of a shelling embedding must be positive.
    NonPositiveScale,
    /// Two indexed points coincide where injectivity is required.
    DuplicatePoint(usize, usize),
    /// A relation is not a partial order.
    NotPartialOrder(String),
    /// Polygon-embedding retries ran out before verification succeeded.
    /// Carries the last differing subset when the failure was a geometry
    /// mismatch rather than a vertex collision.
    RetriesExhausted(Option<Subset>),
    /// An internal cross-check failed; indicates a bug, never user error.
    Inconsistent(String),
}

impl core::fmt::Display for Error {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Error::InvalidGround(msg) => write!(f, "invalid ground set: {msg}"),
            Error::InvalidFamily(msg) => write!(f, "invalid set family: {msg}"),
            Error::GroundMismatch => write!(f, "arguments use different ground sets"),
            Error::EmptySubset => write!(f, "operation requires a nonempty subset"),
            Error::EmptyPointSet => write!(f, "operation requires at least one point"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::NotConvex(s) => write!(f, "subset {s:?} is not convex in this geometry"),
            Error::FullSet => write!(f, "the full ground set cannot be extended"),
            Error::AxiomsViolated => write!(f, "family is not a convex geometry"),
            Error::LimitExceeded { limit, actual } => {
                write!(f, "size {actual} exceeds limit {limit}")
            }
            Error::HullIntersectsGround(i) => {
                write!(f, "ground point {i} lies in the hull of Q")
            }
            Error::NonPositiveScale => write!(f, "scale parameter must be positive"),
            Error::DuplicatePoint(i, j) => write!(f, "points {i} and {j} coincide"),
            Error::NotPartialOrder(msg) => write!(f, "not a partial order: {msg}"),
            Error::RetriesExhausted(witness) => {
                write!(f, "polygon embedding failed verification after all retries")?;
                if let Some(s) = witness {
                    write!(f, " (differing subset {s:?})")?;
                }
                Ok(())
            }
            Error::Inconsistent(msg) => write!(f, "internal inconsistency: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
