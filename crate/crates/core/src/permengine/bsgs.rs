//! Base and strong generating set via the deterministic Schreier–Sims
//! algorithm, with incremental generator insertion.

use num_bigint::BigUint;
use num_traits::One;

use super::Perm;

#[derive(Clone, Debug)]
struct Level {
    base: usize,
    /// Strong generators fixing all earlier base points.
    gens: Vec<Perm>,
    orbit: Vec<usize>,
    /// `trans[p]` maps the base point to `p`; stored with its inverse.
    trans: Vec<Option<(Perm, Perm)>>,
    /// Schreier generators already verified, per orbit position.
    checked: Vec<usize>,
}

impl Level {
    fn new(base: usize, degree: usize) -> Self {
        let mut trans = vec![None; degree];
        trans[base] = Some((Perm::identity(degree), Perm::identity(degree)));
        Level { base, gens: Vec::new(), orbit: vec![base], trans, checked: vec![0] }
    }

    /// Extends the orbit under the current generators, keeping existing
    /// transversal entries untouched so earlier sift results stay valid.
    fn extend_orbit(&mut self) {
        let mut idx = 0;
        while idx < self.orbit.len() {
            let p = self.orbit[idx];
            for g in &self.gens {
                let q = g.apply(p);
                if self.trans[q].is_none() {
                    let t = g.compose(&self.trans[p].as_ref().unwrap().0);
                    let ti = t.inverse();
                    self.trans[q] = Some((t, ti));
                    self.orbit.push(q);
                    self.checked.push(0);
                }
            }
            idx += 1;
        }
    }
}

/// Stabilizer chain of a permutation group.
#[derive(Clone, Debug)]
pub struct Bsgs {
    degree: usize,
    levels: Vec<Level>,
}

impl Bsgs {
    pub fn trivial(degree: usize) -> Self {
        Bsgs { degree, levels: Vec::new() }
    }

    pub fn new(degree: usize, gens: &[Perm]) -> Self {
        let mut b = Bsgs::trivial(degree);
        for g in gens {
            b.insert(g);
        }
        b
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn strong_generators(&self) -> Vec<Perm> {
        self.levels.first().map(|l| l.gens.clone()).unwrap_or_default()
    }

    pub fn order(&self) -> BigUint {
        self.levels.iter().fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    /// Sifts `g` from level `start`; returns the residue and the level
    /// where sifting stopped (`levels.len()` if it passed every level).
    fn sift_from(&self, mut g: Perm, start: usize) -> (Perm, usize) {
        for (i, level) in self.levels.iter().enumerate().skip(start) {
            let p = g.apply(level.base);
            match &level.trans[p] {
                Some((_, inv)) => g = inv.compose(&g),
                None => return (g, i),
            }
        }
        let n = self.levels.len();
        (g, n)
    }

    pub fn contains(&self, g: &Perm) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        self.sift_from(g.clone(), 0).0.is_identity()
    }

    /// Adds `g` to the group; returns `false` if it was already a member.
    pub fn insert(&mut self, g: &Perm) -> bool {
        assert_eq!(g.degree(), self.degree, "degree mismatch");
        let (h, j) = self.sift_from(g.clone(), 0);
        if h.is_identity() {
            return false;
        }
        self.add_residue(h, 0, j);
        self.complete(j);
        true
    }

    /// Places a sifted residue `h` (which fixes base points `0..j`) into
    /// levels `from..=j`, appending a new base point if needed.
    fn add_residue(&mut self, h: Perm, from: usize, j: usize) {
        if j == self.levels.len() {
            let b = h.first_moved().expect("identity residue");
            self.levels.push(Level::new(b, self.degree));
        }
        for l in from..=j {
            self.levels[l].gens.push(h.clone());
            self.levels[l].extend_orbit();
        }
    }

    fn complete(&mut self, start: usize) {
        let mut i = start as isize;
        while i >= 0 {
            let li = i as usize;
            let mut added = None;
            let mut pos = 0;
            'scan: while pos < self.levels[li].orbit.len() {
                while self.levels[li].checked[pos] < self.levels[li].gens.len() {
                    let level = &self.levels[li];
                    let s = &level.gens[level.checked[pos]];
                    let p = level.orbit[pos];
                    let q = s.apply(p);
                    let up = &level.trans[p].as_ref().unwrap().0;
                    let uq_inv = &level.trans[q].as_ref().unwrap().1;
                    let y = uq_inv.compose(&s.compose(up));
                    self.levels[li].checked[pos] += 1;
                    if y.is_identity() {
                        continue;
                    }
                    let (h, j) = self.sift_from(y, li + 1);
                    if !h.is_identity() {
                        self.add_residue(h, li + 1, j);
                        added = Some(j);
                        break 'scan;
                    }
                }
                pos += 1;
            }
            match added {
                Some(j) => i = j as isize,
                None => i -= 1,
            }
        }
    }

    /// Calls `f` on every element of the group (product of transversal
    /// elements, one per level).
    pub fn for_each_element<F: FnMut(&Perm) -> bool>(&self, mut f: F) {
        fn rec<F: FnMut(&Perm) -> bool>(b: &Bsgs, level: usize, acc: &Perm, f: &mut F) -> bool {
            if level == b.levels.len() {
                return f(acc);
            }
            for &p in &b.levels[level].orbit {
                let t = &b.levels[level].trans[p].as_ref().unwrap().0;
                if !rec(b, level + 1, &t.compose(acc), f) {
                    return false;
                }
            }
            true
        }
        rec(self, 0, &Perm::identity(self.degree), &mut f);
    }

    /// All elements, or `None` if there are more than `limit`.
    pub fn elements(&self, limit: usize) -> Option<Vec<Perm>> {
        if self.order() > BigUint::from(limit) {
            return None;
        }
        let mut out = Vec::new();
        self.for_each_element(|g| {
            out.push(g.clone());
            true
        });
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Perm {
        Perm::from_images((0..n).map(|i| ((i + 1) % n) as u16).collect()).unwrap()
    }

    fn transposition(n: usize, a: usize, b: usize) -> Perm {
        let mut v: Vec<u16> = (0..n as u16).collect();
        v.swap(a, b);
        Perm::from_images(v).unwrap()
    }

    #[test]
    fn symmetric_group_order() {
        let b = Bsgs::new(7, &[cycle(7), transposition(7, 0, 1)]);
        assert_eq!(b.order(), BigUint::from(5040u32));
        assert_eq!(b.orbit_lengths().iter().product::<usize>(), 5040);
    }

    #[test]
    fn alternating_excludes_odd() {
        let a = Perm::from_images(vec![1, 2, 0, 3, 4]).unwrap();
        let c = Perm::from_images(vec![0, 1, 3, 4, 2]).unwrap();
        let b = Bsgs::new(5, &[a, c]);
        assert_eq!(b.order(), BigUint::from(60u32));
        assert!(!b.contains(&transposition(5, 0, 1)));
        assert!(b.contains(&Perm::from_images(vec![1, 0, 3, 2, 4]).unwrap()));
    }

    #[test]
    fn trivial_group() {
        let b = Bsgs::new(4, &[Perm::identity(4)]);
        assert_eq!(b.order(), BigUint::one());
        assert!(b.contains(&Perm::identity(4)));
    }

    #[test]
    fn element_enumeration_is_complete() {
        let b = Bsgs::new(4, &[cycle(4), transposition(4, 0, 1)]);
        let els = b.elements(100).unwrap();
        let set: std::collections::HashSet<_> = els.iter().cloned().collect();
        assert_eq!(set.len(), 24);
    }
}
