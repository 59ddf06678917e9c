//! Finite-group analysis library.
//!
//! Builds finite groups from permutation generators or Cayley tables,
//! computes their complex irreducible character tables by the class-algebra
//! eigenvector method, and decides whether a group is *nested* (the centers
//! Z(χ) of its irreducible characters form a chain under inclusion), a
//! *GVZ-group* (χ(1)² = |G : Z(χ)| for every irreducible χ), or both.
//!
//! Every classification is decided by two independent routes — one through
//! the character table, one through conjugacy-class commutator data — and
//! the analysis cross-checks the routes against each other, so a mismatch is
//! always surfaced rather than silently swallowed.
//!
//! Conventions, fixed globally: `[g,x] = g⁻¹x⁻¹gx` and `g^y = y⁻¹gy`;
//! element index 0 is the identity.

pub mod analysis;
pub mod catalog;
pub mod chartab;
pub mod commutator;
pub mod conjugacy;
pub mod elemset;
mod error;
pub mod group;
pub mod input;
pub mod perm;
pub mod report;
pub mod subgroup;
#[cfg(test)]
pub(crate) mod testutil;

pub use error::{Error, Result};
pub use group::{GroupTable, DEFAULT_ORDER_CAP, DEFAULT_SEED};
pub use perm::Permutation;
pub use subgroup::Subgroup;
