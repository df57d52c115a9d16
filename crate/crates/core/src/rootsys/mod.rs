//! Root systems, Coxeter types and the dihedral model.

mod coxtype;
pub mod diagram;
mod dihedral;
mod lattice;
mod system;

pub use coxtype::{CoxeterType, Irreducible};
pub use dihedral::DihedralModel;
pub use lattice::{f2_rank, mod2_pairing, mod2_vector, Mod2Mode};
pub use system::{BuildOptions, GroupElement, RootSystem};

use crate::error::Result;

/// A realised irreducible Coxeter group.
#[derive(Clone, Debug)]
pub enum System {
    Roots(Box<RootSystem>),
    Dihedral(DihedralModel),
}

/// Builds `t`; dihedral types other than `A2`, `B2`, `G2` use the
/// abstract model.
pub fn build_system(t: Irreducible, opts: BuildOptions) -> Result<System> {
    match t.canonical().as_slice() {
        [Irreducible::I2(m)] => Ok(System::Dihedral(DihedralModel::new(*m)?)),
        _ => Ok(System::Roots(Box::new(RootSystem::build_with(t, opts)?))),
    }
}

use crate::permengine::{Perm, PermGroup};

/// Common interface of a reflection group acting on a finite root set
/// with positive roots `0..num_positive()` and negatives after them.
pub trait ReflectionSystem {
    fn num_roots(&self) -> usize;
    fn num_positive(&self) -> usize;
    fn reflection_perm(&self, i: usize) -> Perm;
    fn negative(&self, i: usize) -> usize;
    fn group(&self) -> PermGroup;

    /// Roots `a` and `b` are orthogonal iff `s_a` fixes `b`.
    fn is_orthogonal(&self, a: usize, b: usize) -> bool {
        self.reflection_perm(a).apply(b) == b
    }

    fn negation(&self) -> Perm {
        let images = (0..self.num_roots()).map(|i| self.negative(i) as u16).collect();
        Perm::from_images(images).expect("negation is a bijection")
    }
}

impl ReflectionSystem for RootSystem {
    fn num_roots(&self) -> usize {
        RootSystem::num_roots(self)
    }
    fn num_positive(&self) -> usize {
        RootSystem::num_positive(self)
    }
    fn reflection_perm(&self, i: usize) -> Perm {
        self.reflection(i).clone()
    }
    fn negative(&self, i: usize) -> usize {
        RootSystem::negative(self, i)
    }
    fn group(&self) -> PermGroup {
        RootSystem::group(self)
    }
}

impl ReflectionSystem for DihedralModel {
    fn num_roots(&self) -> usize {
        DihedralModel::num_roots(self)
    }
    fn num_positive(&self) -> usize {
        self.m()
    }
    fn reflection_perm(&self, i: usize) -> Perm {
        self.reflection(i % self.m())
    }
    fn negative(&self, i: usize) -> usize {
        DihedralModel::negative(self, i)
    }
    fn group(&self) -> PermGroup {
        DihedralModel::group(self)
    }
}
