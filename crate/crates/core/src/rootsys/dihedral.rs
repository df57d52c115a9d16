use crate::error::{Error, Result};
use crate::permengine::{Perm, PermGroup};

/// The dihedral group of order `2m` acting on `2m` abstract roots.
///
/// Root `k` sits at angle `kπ/m`; root `k + m` is its negative. The
/// reflection in root `j` sends `k` to `2j + m − k (mod 2m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DihedralModel {
    m: usize,
}

impl DihedralModel {
    pub fn new(m: usize) -> Result<Self> {
        if m < 2 || 2 * m > u16::MAX as usize {
            return Err(Error::Capability(format!("dihedral order parameter {m} out of range")));
        }
        Ok(DihedralModel { m })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn num_roots(&self) -> usize {
        2 * self.m
    }

    pub fn order(&self) -> usize {
        2 * self.m
    }

    pub fn negative(&self, k: usize) -> usize {
        (k + self.m) % (2 * self.m)
    }

    pub fn reflection(&self, j: usize) -> Perm {
        let n = 2 * self.m;
        let images = (0..n).map(|k| ((2 * j + self.m + n - k) % n) as u16).collect();
        Perm::from_images(images).expect("reflection is a bijection")
    }

    /// Rotation by `2kπ/m`.
    pub fn rotation(&self, k: usize) -> Perm {
        let n = 2 * self.m;
        let images = (0..n).map(|x| ((x + 2 * k) % n) as u16).collect();
        Perm::from_images(images).expect("rotation is a bijection")
    }

    pub fn simple_reflections(&self) -> Vec<Perm> {
        vec![self.reflection(0), self.reflection(1)]
    }

    pub fn group(&self) -> PermGroup {
        PermGroup::new(self.num_roots(), self.simple_reflections())
    }

    /// The central half-turn `−1`, present when `m` is even.
    pub fn minus_one(&self) -> Option<Perm> {
        self.m.is_multiple_of(2).then(|| self.rotation(self.m / 2))
    }

    /// Roots `j` and `k` are orthogonal iff `m` is even and they differ by
    /// a quarter turn.
    pub fn orthogonal(&self, j: usize, k: usize) -> bool {
        self.reflection(j).apply(k) == k
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    #[test]
    fn group_order_and_involutions() {
        for m in 2..12 {
            let d = DihedralModel::new(m).unwrap();
            assert_eq!(d.group().order(), BigUint::from(2 * m));
            for j in 0..m {
                let s = d.reflection(j);
                assert!(s.is_involution());
                assert_eq!(s.apply(j), d.negative(j));
            }
            assert_eq!(d.reflection(0).compose(&d.reflection(1)).order(), m as u64);
        }
    }

    #[test]
    fn half_turn_negates_everything() {
        let d = DihedralModel::new(6).unwrap();
        let z = d.minus_one().unwrap();
        assert!((0..12).all(|k| z.apply(k) == d.negative(k)));
        assert!(d.group().contains(&z));
        assert!(DihedralModel::new(5).unwrap().minus_one().is_none());
    }

    #[test]
    fn orthogonality() {
        let d = DihedralModel::new(4).unwrap();
        assert!(d.orthogonal(0, 2));
        assert!(!d.orthogonal(0, 1));
        assert!(!DihedralModel::new(5).unwrap().orthogonal(0, 2));
    }
}
