use num_bigint::BigUint;
use num_traits::ToPrimitive;

use super::{Perm, PermGroup};
use crate::error::{Error, Result};

/// Default bound on the index accepted by [`QuotientGroup::new`].
pub const MAX_INDEX: usize = 10_000;

/// The quotient `G/N` realised as the regular permutation action of `G`
/// on the cosets of `N`.
#[derive(Clone, Debug)]
pub struct QuotientGroup {
    normal: PermGroup,
    reps: Vec<Perm>,
    group: PermGroup,
}

impl QuotientGroup {
    pub fn new(g: &PermGroup, n: &PermGroup) -> Result<Self> {
        Self::with_max_index(g, n, MAX_INDEX)
    }

    pub fn with_max_index(g: &PermGroup, n: &PermGroup, max_index: usize) -> Result<Self> {
        if !n.is_subgroup_of(g) {
            return Err(Error::Invalid("quotient: N is not a subgroup of G".into()));
        }
        for x in g.generators() {
            for y in n.generators() {
                if !n.contains(&x.conjugate(y)) {
                    return Err(Error::Invalid("quotient: N is not normal in G".into()));
                }
            }
        }
        let index = (g.order() / n.order())
            .to_usize()
            .filter(|&i| i <= max_index)
            .ok_or_else(|| Error::Capability(format!("quotient index exceeds {max_index}")))?;

        let mut reps = vec![Perm::identity(g.degree())];
        let mut idx = 0;
        while idx < reps.len() {
            for s in g.generators() {
                let x = s.compose(&reps[idx]);
                if find_coset(n, &reps, &x).is_none() {
                    reps.push(x);
                }
            }
            idx += 1;
        }
        if reps.len() != index {
            return Err(Error::Violation(format!(
                "coset enumeration found {} cosets, expected {index}",
                reps.len()
            )));
        }
        let mut q = QuotientGroup { normal: n.clone(), reps, group: PermGroup::trivial(index) };
        let images: Vec<Perm> = g.generators().iter().map(|s| q.image(s)).collect();
        q.group = PermGroup::new(index, images);
        Ok(q)
    }

    pub fn index(&self) -> usize {
        self.reps.len()
    }

    /// Coset representatives; representative 0 is the identity.
    pub fn representatives(&self) -> &[Perm] {
        &self.reps
    }

    /// Index of the coset `xN`.
    pub fn coset_of(&self, x: &Perm) -> usize {
        find_coset(&self.normal, &self.reps, x).expect("element outside G")
    }

    /// Image of `x ∈ G` in the quotient.
    pub fn image(&self, x: &Perm) -> Perm {
        let images = self.reps.iter().map(|r| self.coset_of(&x.compose(r)) as u16).collect();
        Perm::from_images(images).expect("coset action is a bijection")
    }

    /// The quotient as a permutation group of degree `index`.
    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn order(&self) -> BigUint {
        self.group.order()
    }

    /// `table[i][j]` is the coset of `rep_i rep_j`.
    pub fn cayley_table(&self) -> Vec<Vec<usize>> {
        self.reps
            .iter()
            .map(|a| self.reps.iter().map(|b| self.coset_of(&a.compose(b))).collect())
            .collect()
    }
}

fn find_coset(n: &PermGroup, reps: &[Perm], x: &Perm) -> Option<usize> {
    reps.iter().position(|r| n.contains(&r.inverse().compose(x)))
}
