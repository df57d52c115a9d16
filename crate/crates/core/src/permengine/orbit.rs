use std::hash::Hash;

use indexmap::IndexSet;
use num_bigint::BigUint;

use super::{Bsgs, Perm, PermGroup, RootSet};

/// A left action of permutations on some point type.
pub trait Action {
    type Point: Clone + Eq + Hash;
    fn act(&self, g: &Perm, x: &Self::Point) -> Self::Point;
}

/// Action on `0..degree`.
#[derive(Clone, Copy, Debug, Default)]
pub struct OnPoints;

impl Action for OnPoints {
    type Point = usize;
    fn act(&self, g: &Perm, x: &usize) -> usize {
        g.apply(*x)
    }
}

/// Action on sets of points.
#[derive(Clone, Copy, Debug, Default)]
pub struct OnSets;

impl Action for OnSets {
    type Point = RootSet;
    fn act(&self, g: &Perm, x: &RootSet) -> RootSet {
        x.image(g)
    }
}

/// Action on permutations by `x ↦ g x g⁻¹`.
#[derive(Clone, Copy, Debug, Default)]
pub struct ByConjugation;

impl Action for ByConjugation {
    type Point = Perm;
    fn act(&self, g: &Perm, x: &Perm) -> Perm {
        g.conjugate(x)
    }
}

/// A breadth-first orbit with a Schreier tree.
///
/// Point `i > 0` was first reached as `gens[parent[i].1]` applied to point
/// `parent[i].0`; the ordering is fixed by generator order.
#[derive(Clone, Debug)]
pub struct Orbit<P> {
    points: IndexSet<P>,
    parent: Vec<(usize, usize)>,
}

impl<P: Clone + Eq + Hash> Orbit<P> {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> impl Iterator<Item = &P> {
        self.points.iter()
    }

    pub fn point(&self, i: usize) -> &P {
        &self.points[i]
    }

    pub fn index_of(&self, p: &P) -> Option<usize> {
        self.points.get_index_of(p)
    }

    pub fn contains(&self, p: &P) -> bool {
        self.points.contains(p)
    }

    /// An element of the group mapping the seed to point `i`.
    pub fn transversal(&self, gens: &[Perm], degree: usize, mut i: usize) -> Perm {
        let mut path = Vec::new();
        while i != 0 {
            let (p, g) = self.parent[i];
            path.push(g);
            i = p;
        }
        let mut t = Perm::identity(degree);
        for &g in path.iter().rev() {
            t = gens[g].compose(&t);
        }
        t
    }
}

pub fn orbit<A: Action>(action: &A, gens: &[Perm], seed: A::Point) -> Orbit<A::Point> {
    let mut points = IndexSet::new();
    points.insert(seed);
    let mut parent = vec![(0, 0)];
    let mut idx = 0;
    while idx < points.len() {
        for (j, g) in gens.iter().enumerate() {
            let y = action.act(g, &points[idx]);
            if points.insert(y) {
                parent.push((idx, j));
            }
        }
        idx += 1;
    }
    Orbit { points, parent }
}

/// Orbit of `seed` and its stabilizer in `group`.
///
/// `known` lists elements already known to fix `seed`; those failing that
/// test are ignored. The stabilizer is built from sifted Schreier
/// generators and stops as soon as its order reaches `|group| / |orbit|`.
pub fn orbit_stabilizer<A: Action>(
    action: &A,
    group: &PermGroup,
    seed: A::Point,
    known: &[Perm],
) -> (Orbit<A::Point>, PermGroup) {
    let gens = group.generators();
    let degree = group.degree();
    let orb = orbit(action, gens, seed.clone());
    let target = group.order() / BigUint::from(orb.len());
    let mut stab = Bsgs::trivial(degree);
    for k in known {
        if action.act(k, &seed) == seed {
            stab.insert(k);
        }
    }
    'outer: for i in 0..orb.len() {
        if stab.order() == target {
            break;
        }
        let ui = orb.transversal(gens, degree, i);
        for g in gens {
            let gu = g.compose(&ui);
            let k = orb.index_of(&action.act(g, &orb.points[i])).expect("orbit closed");
            let uk = orb.transversal(gens, degree, k);
            let schreier = uk.inverse().compose(&gu);
            if !schreier.is_identity() {
                stab.insert(&schreier);
                if stab.order() == target {
                    break 'outer;
                }
            }
        }
    }
    debug_assert_eq!(stab.order() * BigUint::from(orb.len()), group.order());
    (orb, PermGroup::from_bsgs(stab))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s5() -> PermGroup {
        PermGroup::new(
            5,
            [
                Perm::from_images(vec![1, 2, 3, 4, 0]).unwrap(),
                Perm::from_images(vec![1, 0, 2, 3, 4]).unwrap(),
            ],
        )
    }

    #[test]
    fn point_stabilizer_in_s5() {
        let g = s5();
        let (orb, stab) = orbit_stabilizer(&OnPoints, &g, 2, &[]);
        assert_eq!(orb.len(), 5);
        assert_eq!(stab.order(), BigUint::from(24u32));
        assert!(stab.generators().iter().all(|s| s.apply(2) == 2));
    }

    #[test]
    fn transversal_maps_seed() {
        let g = s5();
        let orb = orbit(&OnPoints, g.generators(), 0);
        for i in 0..orb.len() {
            assert_eq!(orb.transversal(g.generators(), 5, i).apply(0), *orb.point(i));
        }
    }

    #[test]
    fn transposition_centralizer() {
        let g = s5();
        let t = Perm::from_images(vec![1, 0, 2, 3, 4]).unwrap();
        let (orb, cent) = orbit_stabilizer(&ByConjugation, &g, t.clone(), &[]);
        assert_eq!(orb.len(), 10);
        assert_eq!(cent.order(), BigUint::from(12u32));
        assert!(cent.centralizes(&t));
    }

    #[test]
    fn set_stabilizer() {
        let g = s5();
        let s: RootSet = [0usize, 1].into_iter().collect();
        let (orb, stab) = orbit_stabilizer(&OnSets, &g, s, &[]);
        assert_eq!(orb.len(), 10);
        assert_eq!(stab.order(), BigUint::from(12u32));
    }
}
