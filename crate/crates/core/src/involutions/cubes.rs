use super::classes::{negated_set, product_of_reflections};
use crate::permengine::Perm;
use crate::rootsys::ReflectionSystem;

/// Pairwise orthogonal positive roots, sorted by index, whose reflections
/// multiply to a given involution.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cube(pub Vec<usize>);

impl Cube {
    pub fn roots(&self) -> &[usize] {
        &self.0
    }
}

fn orthogonal<S: ReflectionSystem + ?Sized>(sys: &S, i: usize, j: usize) -> bool {
    sys.reflection_perm(i).apply(j) == j
}

/// Every way of writing the degree-`degree` involution `u` as a product
/// of reflections in pairwise orthogonal roots of its (−1)-eigenspace.
pub fn cube_decompositions<S: ReflectionSystem + ?Sized>(sys: &S, u: &Perm, degree: usize) -> Vec<Cube> {
    let candidates: Vec<usize> = negated_set(sys, u).iter().filter(|&i| i < sys.num_positive()).collect();
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(degree);
    backtrack(sys, &candidates, 0, degree, &mut chosen, &mut |c| {
        if product_of_reflections(sys, c) == *u {
            out.push(Cube(c.to_vec()));
        }
    });
    out
}

fn backtrack<S: ReflectionSystem + ?Sized>(
    sys: &S,
    candidates: &[usize],
    from: usize,
    remaining: usize,
    chosen: &mut Vec<usize>,
    emit: &mut impl FnMut(&[usize]),
) {
    if remaining == 0 {
        emit(chosen);
        return;
    }
    for k in from..candidates.len() {
        if candidates.len() - k < remaining {
            break;
        }
        let r = candidates[k];
        if chosen.iter().all(|&c| orthogonal(sys, c, r)) {
            chosen.push(r);
            backtrack(sys, candidates, k + 1, remaining - 1, chosen, emit);
            chosen.pop();
        }
    }
}
