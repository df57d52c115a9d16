use std::sync::OnceLock;

use num_bigint::BigUint;

use super::{Bsgs, Perm};

/// A permutation group given by generators, with a lazily built
/// stabilizer chain.
#[derive(Debug)]
pub struct PermGroup {
    degree: usize,
    gens: Vec<Perm>,
    bsgs: OnceLock<Bsgs>,
}

impl Clone for PermGroup {
    fn clone(&self) -> Self {
        let bsgs = OnceLock::new();
        if let Some(b) = self.bsgs.get() {
            let _ = bsgs.set(b.clone());
        }
        PermGroup { degree: self.degree, gens: self.gens.clone(), bsgs }
    }
}

impl PermGroup {
    /// Identity generators are dropped; duplicates are kept out.
    pub fn new(degree: usize, gens: impl IntoIterator<Item = Perm>) -> Self {
        let mut out: Vec<Perm> = Vec::new();
        for g in gens {
            assert_eq!(g.degree(), degree, "generator degree mismatch");
            if !g.is_identity() && !out.contains(&g) {
                out.push(g);
            }
        }
        PermGroup { degree, gens: out, bsgs: OnceLock::new() }
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup::new(degree, std::iter::empty())
    }

    /// Wraps an already computed chain; its strong generators become the
    /// generating set.
    pub fn from_bsgs(bsgs: Bsgs) -> Self {
        let g = PermGroup::new(bsgs.degree(), bsgs.strong_generators());
        let _ = g.bsgs.set(bsgs);
        g
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.gens
    }

    pub fn bsgs(&self) -> &Bsgs {
        self.bsgs.get_or_init(|| Bsgs::new(self.degree, &self.gens))
    }

    pub fn order(&self) -> BigUint {
        self.bsgs().order()
    }

    pub fn contains(&self, x: &Perm) -> bool {
        self.bsgs().contains(x)
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    /// Equality as subgroups of the symmetric group.
    pub fn same_group(&self, other: &PermGroup) -> bool {
        self.order() == other.order() && self.is_subgroup_of(other)
    }

    pub fn is_trivial(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn centralizes(&self, x: &Perm) -> bool {
        self.gens.iter().all(|g| g.commutes_with(x))
    }

    /// Subgroup generated by `self` and `extra`.
    pub fn join(&self, extra: &[Perm]) -> PermGroup {
        PermGroup::new(self.degree, self.gens.iter().cloned().chain(extra.iter().cloned()))
    }

    pub fn elements(&self, limit: usize) -> Option<Vec<Perm>> {
        self.bsgs().elements(limit)
    }
}

/// Subgroup handle used throughout the analysis.
pub type SubgroupHandle = PermGroup;

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s4() -> PermGroup {
        PermGroup::new(
            4,
            [
                Perm::from_images(vec![1, 2, 3, 0]).unwrap(),
                Perm::from_images(vec![1, 0, 2, 3]).unwrap(),
            ],
        )
    }

    #[test]
    fn trivial_has_order_one() {
        assert_eq!(PermGroup::trivial(5).order(), BigUint::from(1u32));
    }

    proptest! {
        #[test]
        fn random_words_are_members(word in proptest::collection::vec(0usize..2, 0..30)) {
            let g = s4();
            let mut x = Perm::identity(4);
            for w in word {
                x = g.generators()[w].compose(&x);
            }
            prop_assert!(g.contains(&x));
        }
    }
}
