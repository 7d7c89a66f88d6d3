//! Decide whether the rational algebra of a finite semigroup or loop has the
//! hyperbolic property (no rank-two free abelian subgroup in the unit group of
//! any Z-order), by two independent routes: a combinatorial classification of
//! the multiplication table and an exact rational algebra-decomposition oracle.
//!
//! The main entry points are:
//!
//! * [`cayley::CayleyTable`] — parse and validate multiplication tables,
//! * [`green`] — Green's relations, principal series and factor recognition,
//! * [`exactalg`] — exact Wedderburn-style decomposition of the table algebra,
//! * [`verdict::algebra_verdict`] — the algebra-side oracle,
//! * [`classify::classify_semigroup`] — the table-side classification,
//! * [`classify::crosscheck`] — agreement between the two engines,
//! * [`raloop`] — the loop-side analysis,
//! * [`enumerate`] — exhaustive census of small semigroups.
//!
//! See the crate `examples/` directory for one runnable example per
//! capability.

pub mod cayley;
pub mod classify;
pub mod enumerate;
pub mod exactalg;
pub mod green;
pub mod groupid;
pub mod linalg;
pub mod poly;
pub mod raloop;
pub mod verdict;

pub use cayley::{CayleyTable, TableKind};

use num::BigRational;

/// Exact rational scalar used throughout the crate. No floating point anywhere.
pub type Rat = BigRational;

/// Shorthand for building a `Rat` from an integer.
pub fn rat(n: i64) -> Rat {
    BigRational::from_integer(n.into())
}

/// Shorthand for building a `Rat` from a numerator/denominator pair.
pub fn ratio(n: i64, d: i64) -> Rat {
    BigRational::new(n.into(), d.into())
}
