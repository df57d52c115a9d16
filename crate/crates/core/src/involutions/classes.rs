use std::collections::HashMap;

use crate::permengine::{orbit, OnSets, Perm, RootSet};
use crate::rootsys::ReflectionSystem;

/// Roots sent to their negatives by `u`. For an involution this set spans
/// the (−1)-eigenspace, so it determines `u`.
pub fn negated_set<S: ReflectionSystem + ?Sized>(sys: &S, u: &Perm) -> RootSet {
    (0..sys.num_roots()).filter(|&i| u.apply(i) == sys.negative(i)).collect()
}

/// Product of the reflections in `word`, rightmost applied first.
pub fn product_of_reflections<S: ReflectionSystem + ?Sized>(sys: &S, word: &[usize]) -> Perm {
    word.iter()
        .fold(Perm::identity(sys.num_roots()), |acc, &i| acc.compose(&sys.reflection_perm(i)))
}

/// A conjugacy class of involutions before labelling.
#[derive(Clone, Debug)]
pub struct RawClass {
    pub degree: usize,
    /// Pairwise orthogonal positive roots whose reflections multiply to
    /// the representative.
    pub word: Vec<usize>,
    pub representative: Perm,
    pub key: RootSet,
}

/// All involution classes with their conjugation orbits.
#[derive(Clone, Debug)]
pub struct ClassInventory {
    pub classes: Vec<RawClass>,
    /// Maps the negated set of every involution to its class index.
    members: HashMap<RootSet, usize>,
    sizes: Vec<usize>,
}

impl ClassInventory {
    pub fn class_of_key(&self, key: &RootSet) -> Option<usize> {
        self.members.get(key).copied()
    }

    pub fn class_of<S: ReflectionSystem + ?Sized>(&self, sys: &S, u: &Perm) -> Option<usize> {
        self.class_of_key(&negated_set(sys, u))
    }

    pub fn size(&self, class: usize) -> usize {
        self.sizes[class]
    }

    pub fn total_involutions(&self) -> usize {
        self.sizes.iter().sum()
    }

    /// Keys of every member of a class, in no fixed order.
    pub fn members_of(&self, class: usize) -> impl Iterator<Item = &RootSet> {
        self.members.iter().filter(move |(_, &c)| c == class).map(|(k, _)| k)
    }
}

/// Level-by-level search: a degree `d + 1` involution is a degree `d`
/// class representative times a reflection in a root it fixes, up to
/// conjugacy.
pub fn enumerate_raw<S: ReflectionSystem + ?Sized>(sys: &S) -> ClassInventory {
    let gens = sys.group().generators().to_vec();
    let identity = Perm::identity(sys.num_roots());
    let mut classes = vec![RawClass {
        degree: 0,
        word: vec![],
        key: RootSet::new(),
        representative: identity,
    }];
    let mut members: HashMap<RootSet, usize> = HashMap::from([(RootSet::new(), 0)]);
    let mut sizes = vec![1];
    let mut level_start = 0;
    loop {
        let level_end = classes.len();
        for c in level_start..level_end {
            let u = classes[c].representative.clone();
            for a in 0..sys.num_positive() {
                if u.apply(a) != a {
                    continue;
                }
                let v = u.compose(&sys.reflection_perm(a));
                let key = negated_set(sys, &v);
                if members.contains_key(&key) {
                    continue;
                }
                let idx = classes.len();
                let orb = orbit(&OnSets, &gens, key);
                sizes.push(orb.len());
                for k in orb.points() {
                    members.insert(*k, idx);
                }
                let mut word = classes[c].word.clone();
                word.push(a);
                classes.push(RawClass { degree: classes[c].degree + 1, word, key, representative: v });
            }
        }
        if classes.len() == level_end {
            break;
        }
        level_start = level_end;
    }
    ClassInventory { classes, members, sizes }
}
