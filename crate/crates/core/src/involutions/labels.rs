use num_traits::{One, Zero};
use serde::Serialize;

use super::classes::{negated_set, product_of_reflections, ClassInventory};
use super::cubes::cube_decompositions;
use crate::error::{Error, Result};
use crate::exactalg::QSqrt5;
use crate::permengine::Perm;
use crate::rootsys::{mod2_vector, Irreducible, Mod2Mode, RootSystem};

/// Type-specific invariant separating classes of equal degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassKind {
    /// Degree 3 in E7 with cube images summing to zero mod 2P.
    Line,
    Triangle,
    /// Degree 4 in E8 with cube sum in 2R.
    Rectangle,
    Tetrahedron,
    /// Reflection in a long / short root (F4, G2).
    Long,
    Short,
    /// Signed-permutation shape in types B and D: `negated` coordinates
    /// sent to their negatives, `fixed` coordinates fixed, `pairs`
    /// transposed pairs. `split` separates the two D classes with no
    /// negated or fixed coordinate.
    Signed { negated: usize, fixed: usize, pairs: usize, split: Option<bool> },
}

/// Signed-permutation shape of `u`, read off from its orthonormal matrix.
pub fn signed_shape(rs: &RootSystem, u: &Perm) -> Result<(usize, usize, usize)> {
    let m = rs
        .ambient_matrix(u)
        .ok_or_else(|| Error::Invalid(format!("{} has no square orthonormal model", rs.kind())))?;
    let n = m.rows();
    let (mut negated, mut fixed, mut moved) = (0, 0, 0);
    for k in 0..n {
        let nz: Vec<usize> = (0..n).filter(|&l| !m[(l, k)].is_zero()).collect();
        match nz.as_slice() {
            [l] if *l == k && m[(k, k)] == -QSqrt5::one() => negated += 1,
            [l] if *l == k && m[(k, k)].is_one() => fixed += 1,
            [_] => moved += 1,
            _ => return Err(Error::Violation("not a signed permutation".into())),
        }
    }
    Ok((negated, fixed, moved / 2))
}

fn is_long(rs: &RootSystem, i: usize) -> bool {
    rs.root_inner(i, i) == QSqrt5::from_int(2)
}

/// Labels every class; returns `(label, kind)` per class in inventory order.
pub fn label_root_classes(rs: &RootSystem, inv: &ClassInventory) -> Result<Vec<(String, Option<ClassKind>)>> {
    use Irreducible::*;
    let neg = rs.neg_perm();
    let mut out: Vec<(String, Option<ClassKind>)> = Vec::with_capacity(inv.classes.len());
    for c in &inv.classes {
        let d = c.degree;
        let u = &c.representative;
        let entry = match (rs.kind(), d) {
            (B(_), _) | (D(_), _) => {
                let (negated, fixed, pairs) = signed_shape(rs, u)?;
                let split = match rs.kind() {
                    D(_) if negated == 0 && fixed == 0 && pairs > 0 => {
                        let witness_word: Vec<usize> = (0..pairs).map(|k| 2 * k).collect();
                        let witness = product_of_reflections(rs, &witness_word);
                        Some(inv.class_of(rs, &witness) == inv.class_of_key(&c.key))
                    }
                    _ => None,
                };
                let sign = match split {
                    Some(true) => "+",
                    Some(false) => "-",
                    None => "",
                };
                (
                    format!("{negated},{fixed},{pairs}{sign}"),
                    Some(ClassKind::Signed { negated, fixed, pairs, split }),
                )
            }
            (E(7), 3) => {
                let mut sum = vec![0u8; rs.rank()];
                for &r in &c.word {
                    for (s, x) in sum.iter_mut().zip(mod2_vector(rs, r, Mod2Mode::RootModTwoWeight)?) {
                        *s ^= x;
                    }
                }
                if sum.iter().all(|&b| b == 0) {
                    ("3".into(), Some(ClassKind::Line))
                } else {
                    ("3'".into(), Some(ClassKind::Triangle))
                }
            }
            (E(7), 4) => {
                let minus = neg.compose(u);
                let other = inv
                    .class_of(rs, &minus)
                    .ok_or_else(|| Error::Violation("-u is not an involution class member".into()))?;
                match out.get(other).and_then(|e| e.1.clone()) {
                    Some(ClassKind::Line) => ("4".into(), Some(ClassKind::Line)),
                    Some(ClassKind::Triangle) => ("4'".into(), Some(ClassKind::Triangle)),
                    _ => return Err(Error::Violation("E7: -u of degree 4 is not of degree 3".into())),
                }
            }
            (E(8), 4) => {
                let even = (0..rs.rank()).all(|k| {
                    c.word.iter().map(|&r| rs.integer_coords(r).expect("integral")[k]).sum::<i64>() % 2 == 0
                });
                if even {
                    ("4".into(), Some(ClassKind::Rectangle))
                } else {
                    ("4'".into(), Some(ClassKind::Tetrahedron))
                }
            }
            (F4, 1) | (G2, 1) => {
                if is_long(rs, c.word[0]) {
                    ("1".into(), Some(ClassKind::Long))
                } else {
                    ("1'".into(), Some(ClassKind::Short))
                }
            }
            (F4, 2) => match cube_decompositions(rs, u, 2).len() {
                2 => ("2".into(), None),
                1 => ("2'".into(), None),
                k => return Err(Error::Violation(format!("F4: degree-2 involution with {k} cubes"))),
            },
            (F4, 3) => {
                let minus = neg.compose(u);
                let root = negated_set(rs, &minus)
                    .iter()
                    .next()
                    .ok_or_else(|| Error::Violation("F4: -u is trivial".into()))?;
                if is_long(rs, root) {
                    ("3".into(), Some(ClassKind::Long))
                } else {
                    ("3'".into(), Some(ClassKind::Short))
                }
            }
            _ => (d.to_string(), None),
        };
        out.push(entry);
    }
    for (i, a) in out.iter().enumerate() {
        if out[..i].iter().any(|b| b.0 == a.0) {
            return Err(Error::Violation(format!("{}: two classes share label {}", rs.kind(), a.0)));
        }
    }
    Ok(out)
}
