//! Conjugacy classes of involutions, their degrees, cubes and labels.

mod classes;
mod cubes;
mod labels;

pub use classes::{enumerate_raw, negated_set, product_of_reflections, ClassInventory, RawClass};
pub use cubes::{cube_decompositions, Cube};
pub use labels::{label_root_classes, signed_shape, ClassKind};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::{Mat, QSqrt5};
use crate::permengine::{Perm, RootSet};
use crate::rootsys::{DihedralModel, GroupElement, RootSystem};

/// A labelled conjugacy class of involutions.
#[derive(Clone, Debug, Serialize)]
pub struct InvolutionClass {
    pub degree: usize,
    pub label: String,
    pub kind: Option<ClassKind>,
    pub class_size: usize,
    /// Positive root indices of a cube of the representative.
    pub word: Vec<usize>,
    #[serde(skip)]
    pub representative: Perm,
    #[serde(skip)]
    pub key: RootSet,
}

/// Multiplicity of −1 as an eigenvalue of the involution `u`.
pub fn degree(u: &GroupElement) -> Result<usize> {
    let m = &u.matrix;
    let n = m.rows();
    let id = Mat::<QSqrt5>::identity(n);
    if (m * m) != id {
        return Err(Error::Invalid("degree of a non-involution".into()));
    }
    let d = n - (m + &id).rank();
    debug_assert_eq!(d, (m - &id).rank());
    Ok(d)
}

/// All involution classes of a root system, ordered by degree then
/// discovery; degrees are confirmed by exact linear algebra.
pub fn enumerate_involution_classes(rs: &RootSystem) -> Result<(Vec<InvolutionClass>, ClassInventory)> {
    let inv = enumerate_raw(rs);
    let labels = label_root_classes(rs, &inv)?;
    let mut out = Vec::with_capacity(inv.classes.len());
    for (i, (c, (label, kind))) in inv.classes.iter().zip(labels).enumerate() {
        let d = degree(&rs.element(&c.representative))?;
        if d != c.degree {
            return Err(Error::Violation(format!("class {label}: level {} but degree {d}", c.degree)));
        }
        out.push(InvolutionClass {
            degree: d,
            label,
            kind,
            class_size: inv.size(i),
            word: c.word.clone(),
            representative: c.representative.clone(),
            key: c.key,
        });
    }
    Ok((out, inv))
}

/// Involution classes of the dihedral group, labelled by degree.
pub fn enumerate_dihedral_classes(model: &DihedralModel) -> (Vec<InvolutionClass>, ClassInventory) {
    let inv = enumerate_raw(model);
    let mut out: Vec<InvolutionClass> = Vec::new();
    for (i, c) in inv.classes.iter().enumerate() {
        let same_degree = out.iter().filter(|x| x.degree == c.degree).count();
        let label = match same_degree {
            0 => c.degree.to_string(),
            k => format!("{}{}", c.degree, "'".repeat(k)),
        };
        out.push(InvolutionClass {
            degree: c.degree,
            label,
            kind: None,
            class_size: inv.size(i),
            word: c.word.clone(),
            representative: c.representative.clone(),
            key: c.key,
        });
    }
    (out, inv)
}
