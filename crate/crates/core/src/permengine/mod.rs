//! Permutation groups on root indices.

mod bsgs;
mod fingerprint;
mod group;
mod orbit;
mod perm;
mod quotient;
mod rootset;

pub use bsgs::Bsgs;
pub use fingerprint::{fingerprint, invariants, GammaStructure, Invariants};
pub use group::{PermGroup, SubgroupHandle};
pub use orbit::{orbit, orbit_stabilizer, Action, ByConjugation, OnPoints, OnSets, Orbit};
pub use perm::Perm;
pub use quotient::{QuotientGroup, MAX_INDEX};
pub use rootset::{RootSet, MAX_POINTS};

use crate::error::{Error, Result};

/// Set stabilizer of a root subset closed under negation and under its own
/// reflections, found by orbit–stabilizer under the set action.
///
/// `reflection_of(i)` returns the permutation of the reflection in root `i`;
/// `neg` is the permutation sending each root to its negative.
pub fn normalizer_of_reflection_subgroup(
    g: &PermGroup,
    roots: &RootSet,
    neg: &Perm,
    reflection_of: impl Fn(usize) -> Perm,
) -> Result<PermGroup> {
    for i in roots.iter() {
        if !roots.contains(neg.apply(i)) || roots.image(&reflection_of(i)) != *roots {
            return Err(Error::Invalid("root subset is not closed".into()));
        }
    }
    Ok(orbit_stabilizer(&OnSets, g, *roots, &[]).1)
}
