//! Root images in the `F2`-spaces `R/2P` and `R/2R`.

use super::{Irreducible, RootSystem};
use crate::error::{Error, Result};

/// Target quotient for [`mod2_vector`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mod2Mode {
    /// Weight coordinates mod 2 (type E7 only).
    RootModTwoWeight,
    /// Simple-root coordinates mod 2.
    RootModTwoRoot,
}

pub fn mod2_vector(rs: &RootSystem, i: usize, mode: Mod2Mode) -> Result<Vec<u8>> {
    let coords = match mode {
        Mod2Mode::RootModTwoWeight => {
            if rs.kind() != Irreducible::E(7) {
                return Err(Error::Invalid(format!("R/2P images are only provided for E7, not {}", rs.kind())));
            }
            rs.weight_coords(rs.root(i))?
        }
        Mod2Mode::RootModTwoRoot => rs.integer_coords(i)?,
    };
    Ok(coords.iter().map(|c| c.rem_euclid(2) as u8).collect())
}

/// `b(x_α, x_β) = ⟨α, β^∨⟩ mod 2`, the form on the image of `R` in `P/2P`.
pub fn mod2_pairing(rs: &RootSystem, i: usize, j: usize) -> Result<u8> {
    if !matches!(rs.kind(), Irreducible::A(_) | Irreducible::D(_) | Irreducible::E(_)) {
        return Err(Error::Invalid(format!("{} is not simply laced", rs.kind())));
    }
    let w = rs.weight_coords(rs.root(i))?;
    let b = rs.integer_coords(j)?;
    let s: i64 = w.iter().zip(&b).map(|(x, y)| x * y).sum();
    // Simply laced: β^∨ has the simple-coroot coordinates of β.
    Ok(s.rem_euclid(2) as u8)
}

/// Rank over `F2` of a list of 0/1 vectors.
pub fn f2_rank(rows: &[Vec<u8>]) -> usize {
    let mut basis: Vec<u64> = Vec::new();
    for r in rows {
        let mut x = r.iter().enumerate().fold(0u64, |a, (i, &b)| a | ((b as u64 & 1) << i));
        for &b in &basis {
            x = x.min(x ^ b);
        }
        if x != 0 {
            basis.push(x);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    basis.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f2_rank_basic() {
        assert_eq!(f2_rank(&[vec![1, 0], vec![0, 1], vec![1, 1]]), 2);
        assert_eq!(f2_rank(&[vec![0, 0, 0]]), 0);
    }

    #[test]
    fn e7_images_are_nonzero_and_span_six_dimensions() {
        let rs = RootSystem::build(Irreducible::E(7)).unwrap();
        let imgs: Vec<Vec<u8>> =
            (0..rs.num_roots()).map(|i| mod2_vector(&rs, i, Mod2Mode::RootModTwoWeight).unwrap()).collect();
        assert!(imgs.iter().all(|v| v.contains(&1)));
        assert_eq!(f2_rank(&imgs), 6);
    }

    #[test]
    fn mode_mismatch() {
        let rs = RootSystem::build(Irreducible::E(6)).unwrap();
        assert!(mod2_vector(&rs, 0, Mod2Mode::RootModTwoWeight).is_err());
        assert!(mod2_vector(&rs, 0, Mod2Mode::RootModTwoRoot).is_ok());
    }
}
