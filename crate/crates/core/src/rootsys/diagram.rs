//! Identification of a finite Coxeter type from its Coxeter matrix.

use super::{CoxeterType, Irreducible};
use crate::error::{Error, Result};

/// Classifies the Coxeter matrix `m` (with `m[i][i] = 1`).
pub fn classify(m: &[Vec<usize>]) -> Result<CoxeterType> {
    let n = m.len();
    let mut seen = vec![false; n];
    let mut parts = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut idx = 0;
        while idx < comp.len() {
            let v = comp[idx];
            for w in 0..n {
                if !seen[w] && m[v][w] >= 3 {
                    seen[w] = true;
                    comp.push(w);
                }
            }
            idx += 1;
        }
        parts.push(classify_connected(m, &comp)?);
    }
    Ok(CoxeterType::new(parts))
}

fn not_finite(comp: &[usize]) -> Error {
    Error::Violation(format!("diagram on {} nodes is not of finite type", comp.len()))
}

fn classify_connected(m: &[Vec<usize>], comp: &[usize]) -> Result<Irreducible> {
    let k = comp.len();
    if k == 1 {
        return Ok(Irreducible::A(1));
    }
    if k == 2 {
        return Ok(Irreducible::I2(m[comp[0]][comp[1]]));
    }
    let nbrs = |v: usize| comp.iter().copied().filter(move |&w| w != v && m[v][w] >= 3);
    let edges: Vec<(usize, usize, usize)> = comp
        .iter()
        .flat_map(|&v| comp.iter().filter(move |&&w| w > v).map(move |&w| (v, w, m[v][w])))
        .filter(|e| e.2 >= 3)
        .collect();
    if edges.len() != k - 1 {
        return Err(not_finite(comp));
    }
    let degrees: Vec<usize> = comp.iter().map(|&v| nbrs(v).count()).collect();
    let heavy: Vec<&(usize, usize, usize)> = edges.iter().filter(|e| e.2 > 3).collect();
    let branch: Vec<usize> = comp.iter().zip(&degrees).filter(|(_, &d)| d >= 3).map(|(&v, _)| v).collect();

    if branch.is_empty() {
        let ends: Vec<usize> = comp.iter().zip(&degrees).filter(|(_, &d)| d == 1).map(|(&v, _)| v).collect();
        match heavy.as_slice() {
            [] => return Ok(Irreducible::A(k)),
            [&(a, b, label)] => {
                let at_end = ends.contains(&a) || ends.contains(&b);
                return match (label, at_end, k) {
                    (4, true, _) => Ok(Irreducible::B(k)),
                    (4, false, 4) => Ok(Irreducible::F4),
                    (5, true, 3) => Ok(Irreducible::H(3)),
                    (5, true, 4) => Ok(Irreducible::H(4)),
                    _ => Err(not_finite(comp)),
                };
            }
            _ => return Err(not_finite(comp)),
        }
    }
    if branch.len() != 1 || !heavy.is_empty() || degrees.iter().any(|&d| d > 3) {
        return Err(not_finite(comp));
    }
    let centre = branch[0];
    let mut arms: Vec<usize> = nbrs(centre)
        .map(|first| {
            let (mut prev, mut cur, mut len) = (centre, first, 1);
            loop {
                match nbrs(cur).find(|&w| w != prev) {
                    Some(next) => {
                        prev = cur;
                        cur = next;
                        len += 1;
                    }
                    None => break len,
                }
            }
        })
        .collect();
    arms.sort_unstable();
    match arms.as_slice() {
        [1, 1, _] => Ok(Irreducible::D(k)),
        [1, 2, 2] => Ok(Irreducible::E(6)),
        [1, 2, 3] => Ok(Irreducible::E(7)),
        [1, 2, 4] => Ok(Irreducible::E(8)),
        _ => Err(not_finite(comp)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn matrix(n: usize, edges: &[(usize, usize, usize)]) -> Vec<Vec<usize>> {
        let mut m = vec![vec![2; n]; n];
        for i in 0..n {
            m[i][i] = 1;
        }
        for &(a, b, l) in edges {
            m[a][b] = l;
            m[b][a] = l;
        }
        m
    }

    #[test]
    fn classical_and_exceptional() {
        let t = |n, e: &[(usize, usize, usize)]| classify(&matrix(n, e)).unwrap().to_string();
        assert_eq!(t(3, &[(0, 1, 3), (1, 2, 3)]), "A3");
        assert_eq!(t(3, &[(0, 1, 3), (1, 2, 4)]), "B3");
        assert_eq!(t(4, &[(0, 1, 3), (1, 2, 4), (2, 3, 3)]), "F4");
        assert_eq!(t(3, &[(0, 1, 5), (1, 2, 3)]), "H3");
        assert_eq!(t(4, &[(0, 1, 3), (1, 2, 3), (1, 3, 3)]), "D4");
        assert_eq!(t(6, &[(0, 2, 3), (2, 3, 3), (3, 4, 3), (4, 5, 3), (1, 3, 3)]), "E6");
        assert_eq!(t(2, &[(0, 1, 5)]), "I2(5)");
        assert_eq!(t(2, &[(0, 1, 4)]), "B2");
        assert_eq!(t(3, &[]), "(A1)^3");
        assert_eq!(t(0, &[]), "1");
    }

    #[test]
    fn rejects_affine() {
        assert!(classify(&matrix(3, &[(0, 1, 3), (1, 2, 3), (0, 2, 3)])).is_err());
        assert!(classify(&matrix(3, &[(0, 1, 4), (1, 2, 4)])).is_err());
    }
}
