use serde::Serialize;

use crate::error::{Error, Result};
use crate::permengine::{Perm, PermGroup, RootSet};
use crate::rootsys::{diagram, CoxeterType, ReflectionSystem};

/// Simple system, Coxeter matrix and type of a reflection subgroup.
#[derive(Clone, Debug, Serialize)]
pub struct RecognizedDiagram {
    /// Simple roots (or lines), as indices into the caller's point set.
    pub simple: Vec<usize>,
    pub coxeter_matrix: Vec<Vec<usize>>,
    #[serde(serialize_with = "crate::structure::ser_display")]
    pub ty: CoxeterType,
}

/// Coxeter matrix of the given involutions: `m_ij = order(s_i s_j)`.
fn coxeter_matrix(gens: &[Perm]) -> Vec<Vec<usize>> {
    gens.iter()
        .map(|a| gens.iter().map(|b| a.compose(b).order() as usize).collect())
        .collect()
}

/// Given reflections (as permutations) indexed by positive points, picks
/// the simple ones: those whose reflection keeps every other positive
/// point positive.
pub(crate) fn simple_subset(
    positives: &[usize],
    is_positive: impl Fn(usize) -> bool,
    reflection: impl Fn(usize) -> Perm,
) -> Vec<usize> {
    positives
        .iter()
        .copied()
        .filter(|&b| {
            let s = reflection(b);
            positives.iter().all(|&c| c == b || is_positive(s.apply(c)))
        })
        .collect()
}

pub(crate) fn diagram_of(simple: Vec<usize>, gens: &[Perm]) -> Result<RecognizedDiagram> {
    let m = coxeter_matrix(gens);
    let ty = diagram::classify(&m)?;
    Ok(RecognizedDiagram { simple, coxeter_matrix: m, ty })
}

/// Type of the reflection subgroup whose root set is `roots`.
///
/// The positive subsystem is `roots ∩ Φ⁺`; the recognised type is
/// checked against the order of the group its simple reflections generate.
pub fn reflection_subgroup_type<S: ReflectionSystem + ?Sized>(sys: &S, roots: &RootSet) -> Result<RecognizedDiagram> {
    for a in roots.iter() {
        if !roots.contains(sys.negative(a)) || roots.image(&sys.reflection_perm(a)) != *roots {
            return Err(Error::Invalid("root subset is not closed".into()));
        }
    }
    let npos = sys.num_positive();
    let positives: Vec<usize> = roots.iter().filter(|&a| a < npos).collect();
    let simple = simple_subset(&positives, |x| x < npos, |b| sys.reflection_perm(b));
    let gens: Vec<Perm> = simple.iter().map(|&b| sys.reflection_perm(b)).collect();
    let d = diagram_of(simple, &gens)?;
    let order = PermGroup::new(sys.num_roots(), gens).order();
    if order != d.ty.order() {
        return Err(Error::Violation(format!("recognised {} but the group has order {order}", d.ty)));
    }
    if 2 * positives.len() != roots.len() {
        return Err(Error::Violation("root subset is not split by sign".into()));
    }
    Ok(d)
}
