use super::Perm;

/// Largest point count a [`RootSet`] can hold.
pub const MAX_POINTS: usize = 320;
const WORDS: usize = MAX_POINTS / 64;

/// Fixed-capacity bitset of point (root) indices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Debug)]
pub struct RootSet([u64; WORDS]);

impl RootSet {
    pub fn new() -> Self {
        RootSet([0; WORDS])
    }

    pub fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(k * 64 + b)
            })
        })
    }

    /// Image `{g(i) : i ∈ self}`.
    pub fn image(&self, g: &Perm) -> RootSet {
        let mut out = RootSet::new();
        for i in self.iter() {
            out.insert(g.apply(i));
        }
        out
    }

    pub fn union(&self, other: &RootSet) -> RootSet {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0.iter()) {
            *a |= b;
        }
        out
    }

    pub fn is_subset(&self, other: &RootSet) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a & !b == 0)
    }
}

impl FromIterator<usize> for RootSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = RootSet::new();
        for i in iter {
            s.insert(i);
        }
        s
    }
}
