use std::cmp::Reverse;
use std::collections::HashMap;

use num_traits::Zero;
use serde_json::{json, Value};

use super::{CoxeterType, Irreducible};
use crate::error::{Error, Result};
use crate::exactalg::{Mat, QSqrt5};
use crate::permengine::{Perm, PermGroup, MAX_POINTS};

type Coords = Vec<QSqrt5>;

/// Limits applied when building root systems.
#[derive(Clone, Copy, Debug)]
pub struct BuildOptions {
    /// Largest rank accepted for the infinite families A, B, D.
    pub max_classical_rank: usize,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions { max_classical_rank: 12 }
    }
}

/// A group element carried both as a root permutation and as a matrix in
/// the simple-root basis.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupElement {
    pub perm: Perm,
    pub matrix: Mat<QSqrt5>,
}

/// A finite root system, with roots written in the basis of simple roots.
///
/// Roots are indexed deterministically: positive roots by increasing
/// height, ties broken by decreasing coordinate vector, so simple root `i`
/// has index `i`; root `i + N` is the negative of root `i`.
#[derive(Clone, Debug)]
pub struct RootSystem {
    kind: Irreducible,
    gram: Mat<QSqrt5>,
    /// `coxeter[i][j] = 2 (α_i, α_j) / (α_i, α_i)`.
    coxeter: Vec<Vec<QSqrt5>>,
    roots: Vec<Coords>,
    lookup: HashMap<Coords, usize>,
    npos: usize,
    reflections: Vec<Perm>,
    neg: Perm,
    /// Columns are the simple roots in orthonormal coordinates (A, B, D).
    ambient: Option<Mat<QSqrt5>>,
}

fn q(n: i64) -> QSqrt5 {
    QSqrt5::from_int(n)
}

fn gram_from_ambient(t: &Mat<QSqrt5>) -> Mat<QSqrt5> {
    &t.transpose() * t
}

fn unit_diff(dim: usize, i: usize, j: usize, sign: i64) -> Vec<QSqrt5> {
    let mut v = vec![QSqrt5::zero(); dim];
    v[i] = q(1);
    if j < dim {
        v[j] = q(sign);
    }
    v
}

/// Gram matrix and optional ambient embedding for an irreducible type.
fn cartan_data(t: Irreducible) -> Result<(Mat<QSqrt5>, Option<Mat<QSqrt5>>)> {
    use Irreducible::*;
    let chain = |n: usize, diag: Vec<QSqrt5>, bonds: Vec<((usize, usize), QSqrt5)>| {
        let mut g = Mat::zeros(n, n);
        for (i, d) in diag.into_iter().enumerate() {
            g[(i, i)] = d;
        }
        for ((i, j), b) in bonds {
            g[(i, j)] = b.clone();
            g[(j, i)] = b;
        }
        g
    };
    Ok(match t {
        A(n) => {
            let cols: Vec<_> = (0..n).map(|i| unit_diff(n + 1, i, i + 1, -1)).collect();
            let amb = Mat::from_columns(&cols);
            (gram_from_ambient(&amb), Some(amb))
        }
        B(n) => {
            let cols: Vec<_> = (0..n).map(|i| unit_diff(n, i, i + 1, -1)).collect();
            let amb = Mat::from_columns(&cols);
            (gram_from_ambient(&amb), Some(amb))
        }
        D(n) => {
            let mut cols: Vec<_> = (0..n - 1).map(|i| unit_diff(n, i, i + 1, -1)).collect();
            cols.push(unit_diff(n, n - 2, n - 1, 1));
            let amb = Mat::from_columns(&cols);
            (gram_from_ambient(&amb), Some(amb))
        }
        E(n) => {
            let edges = [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)];
            let bonds = edges
                .iter()
                .filter(|(a, b)| *a <= n && *b <= n)
                .map(|&(a, b)| ((a - 1, b - 1), q(-1)))
                .collect();
            (chain(n, vec![q(2); n], bonds), None)
        }
        F4 => {
            let bonds = vec![((0, 1), q(-1)), ((1, 2), q(-1)), ((2, 3), QSqrt5::from_frac(-1, 2))];
            (chain(4, vec![q(2), q(2), q(1), q(1)], bonds), None)
        }
        G2 => (chain(2, vec![q(2), q(6)], vec![((0, 1), q(-3))]), None),
        H(n) => {
            let mut bonds = vec![((0, 1), -QSqrt5::golden())];
            bonds.extend((1..n - 1).map(|i| ((i, i + 1), q(-1))));
            (chain(n, vec![q(2); n], bonds), None)
        }
        I2(m) => {
            return Err(Error::Capability(format!(
                "I2({m}) has no root realisation here; use the dihedral model"
            )))
        }
    })
}

impl RootSystem {
    pub fn build(t: Irreducible) -> Result<Self> {
        Self::build_with(t, BuildOptions::default())
    }

    pub fn build_with(t: Irreducible, opts: BuildOptions) -> Result<Self> {
        let kind = match t.canonical().as_slice() {
            [k] => *k,
            _ => return Err(Error::Invalid(format!("{t} is not an irreducible type"))),
        };
        if !kind.is_valid() {
            return Err(Error::Invalid(format!("invalid type {kind}")));
        }
        if let Irreducible::A(n) | Irreducible::B(n) | Irreducible::D(n) = kind {
            if n > opts.max_classical_rank {
                return Err(Error::Capability(format!(
                    "rank {n} exceeds the supported maximum {}",
                    opts.max_classical_rank
                )));
            }
        }
        let (gram, ambient) = cartan_data(kind)?;
        let n = gram.rows();
        let coxeter: Vec<Vec<QSqrt5>> = (0..n)
            .map(|i| (0..n).map(|j| q(2) * gram[(i, j)].clone() / gram[(i, i)].clone()).collect())
            .collect();

        let simple_reflect = |x: &Coords, i: usize| -> Coords {
            let mut y = x.clone();
            let c = (0..n).fold(QSqrt5::zero(), |acc, j| acc + coxeter[i][j].mul_ref(&x[j]));
            y[i] = y[i].sub_ref(&c);
            y
        };

        let mut found: Vec<Coords> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { q(1) } else { q(0) }).collect())
            .collect();
        let mut seen: std::collections::HashSet<Coords> = found.iter().cloned().collect();
        let mut idx = 0;
        while idx < found.len() {
            for i in 0..n {
                let y = simple_reflect(&found[idx], i);
                if seen.insert(y.clone()) {
                    found.push(y);
                    if found.len() > MAX_POINTS {
                        return Err(Error::Capability(format!(
                            "{kind} has more than {MAX_POINTS} roots"
                        )));
                    }
                }
            }
            idx += 1;
        }

        let height = |x: &Coords| x.iter().fold(QSqrt5::zero(), |a, c| a + c.clone());
        let mut positive: Vec<Coords> = found
            .into_iter()
            .filter(|x| x.iter().all(|c| c.signum() >= 0))
            .collect();
        positive.sort_by_cached_key(|x| (height(x), Reverse(x.clone())));
        let npos = positive.len();
        let negative: Vec<Coords> = positive.iter().map(|x| x.iter().map(|c| -c.clone()).collect()).collect();
        let roots: Vec<Coords> = positive.into_iter().chain(negative).collect();
        if roots.len() != seen.len() {
            return Err(Error::Violation(format!("{kind}: roots are not split by sign")));
        }
        let lookup: HashMap<Coords, usize> = roots.iter().cloned().enumerate().map(|(i, x)| (x, i)).collect();
        for i in 0..n {
            if roots[i].iter().enumerate().any(|(j, c)| *c != if i == j { q(1) } else { q(0) }) {
                return Err(Error::Violation(format!("{kind}: simple roots are not first")));
            }
        }

        let neg = Perm::from_images((0..2 * npos).map(|i| ((i + npos) % (2 * npos)) as u16).collect())
            .expect("negation is a bijection");
        let simple: Vec<Perm> = (0..n)
            .map(|i| {
                let images = roots.iter().map(|x| lookup[&simple_reflect(x, i)] as u16).collect();
                Perm::from_images(images).expect("simple reflection permutes roots")
            })
            .collect();
        let mut reflections: Vec<Perm> = Vec::with_capacity(npos);
        for p in 0..npos {
            if p < n {
                reflections.push(simple[p].clone());
                continue;
            }
            let k = (0..n)
                .find(|&k| {
                    let c = (0..n).fold(QSqrt5::zero(), |acc, j| acc + coxeter[k][j].mul_ref(&roots[p][j]));
                    c.signum() > 0
                })
                .expect("non-simple positive root has a descent");
            let lower = simple[k].apply(p);
            debug_assert!(lower < p);
            reflections.push(simple[k].compose(&reflections[lower]).compose(&simple[k]));
        }

        Ok(RootSystem { kind, gram, coxeter, roots, lookup, npos, reflections, neg, ambient })
    }

    pub fn kind(&self) -> Irreducible {
        self.kind
    }

    pub fn coxeter_type(&self) -> CoxeterType {
        CoxeterType::irreducible(self.kind)
    }

    pub fn rank(&self) -> usize {
        self.gram.rows()
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn num_positive(&self) -> usize {
        self.npos
    }

    pub fn is_positive(&self, i: usize) -> bool {
        i < self.npos
    }

    /// Index of the positive root in `{i, -i}`.
    pub fn positive_of(&self, i: usize) -> usize {
        i % self.npos
    }

    pub fn negative(&self, i: usize) -> usize {
        self.neg.apply(i)
    }

    pub fn root(&self, i: usize) -> &[QSqrt5] {
        &self.roots[i]
    }

    pub fn roots(&self) -> &[Coords] {
        &self.roots
    }

    pub fn index_of(&self, x: &[QSqrt5]) -> Option<usize> {
        self.lookup.get(x).copied()
    }

    pub fn gram(&self) -> &Mat<QSqrt5> {
        &self.gram
    }

    /// `(x, y)` for vectors in simple-root coordinates.
    pub fn inner(&self, x: &[QSqrt5], y: &[QSqrt5]) -> QSqrt5 {
        let gy = self.gram.mul_vec(y);
        x.iter().zip(gy.iter()).fold(QSqrt5::zero(), |a, (u, v)| a + u.mul_ref(v))
    }

    pub fn root_inner(&self, i: usize, j: usize) -> QSqrt5 {
        self.inner(&self.roots[i], &self.roots[j])
    }

    pub fn height(&self, i: usize) -> QSqrt5 {
        self.roots[i].iter().fold(QSqrt5::zero(), |a, c| a + c.clone())
    }

    /// Roots `i` and `j` are orthogonal exactly when the reflection in
    /// `i` fixes `j` and `j ≠ ±i`.
    pub fn orthogonal(&self, i: usize, j: usize) -> bool {
        self.reflection(i).apply(j) == j
    }

    pub fn neg_perm(&self) -> &Perm {
        &self.neg
    }

    pub fn reflection(&self, i: usize) -> &Perm {
        &self.reflections[self.positive_of(i)]
    }

    pub fn simple_reflections(&self) -> Vec<Perm> {
        self.reflections[..self.rank()].to_vec()
    }

    pub fn group(&self) -> PermGroup {
        PermGroup::new(self.num_roots(), self.simple_reflections())
    }

    /// Matrix of `g` in the simple-root basis: column `j` is `g(α_j)`.
    pub fn matrix_of(&self, g: &Perm) -> Mat<QSqrt5> {
        let cols: Vec<Coords> = (0..self.rank()).map(|j| self.roots[g.apply(j)].clone()).collect();
        Mat::from_columns(&cols)
    }

    pub fn element(&self, g: &Perm) -> GroupElement {
        GroupElement { perm: g.clone(), matrix: self.matrix_of(g) }
    }

    pub fn reflection_element(&self, i: usize) -> GroupElement {
        self.element(self.reflection(i))
    }

    /// `s_α(x) = x − 2 (x, α)/(α, α) α` for root `i`.
    pub fn reflect_vector(&self, i: usize, x: &[QSqrt5]) -> Coords {
        let a = &self.roots[i];
        let c = q(2) * self.inner(x, a) / self.inner(a, a);
        x.iter().zip(a.iter()).map(|(u, v)| u - &c.mul_ref(v)).collect()
    }

    /// Orthonormal-coordinate matrix of `g` for types A, B, D.
    pub fn ambient_matrix(&self, g: &Perm) -> Option<Mat<QSqrt5>> {
        let t = self.ambient.as_ref()?;
        if !t.is_square() {
            return None;
        }
        let m = self.matrix_of(g);
        let n = t.rows();
        let inv_cols: Vec<Coords> = (0..n)
            .map(|k| {
                let e: Coords = (0..n).map(|i| if i == k { q(1) } else { q(0) }).collect();
                t.solve(&e).expect("ambient embedding is invertible")
            })
            .collect();
        let t_inv = Mat::from_columns(&inv_cols);
        Some(&(t * &m) * &t_inv)
    }

    pub fn ambient_embedding(&self) -> Option<&Mat<QSqrt5>> {
        self.ambient.as_ref()
    }

    fn require_crystallographic(&self) -> Result<()> {
        if self.kind.is_crystallographic() {
            Ok(())
        } else {
            Err(Error::Capability(format!("{} is not crystallographic", self.kind)))
        }
    }

    /// Cartan integers `⟨α_i, α_j^∨⟩`.
    pub fn cartan(&self) -> Result<Vec<Vec<i64>>> {
        self.require_crystallographic()?;
        Ok((0..self.rank())
            .map(|i| {
                (0..self.rank())
                    .map(|j| int_of(&self.coxeter[j][i]).expect("integral Cartan entry"))
                    .collect()
            })
            .collect())
    }

    /// Index of the highest root.
    pub fn highest_root(&self) -> Result<usize> {
        self.require_crystallographic()?;
        Ok(self.npos - 1)
    }

    /// Simple roots orthogonal to the highest root: the vertices of the
    /// completed diagram not joined to the lowest root.
    pub fn extended_diagram_y(&self) -> Result<Vec<usize>> {
        let top = self.highest_root()?;
        Ok((0..self.rank()).filter(|&i| self.root_inner(i, top).is_zero()).collect())
    }

    /// Coordinates `⟨x, α_i^∨⟩` in the fundamental-weight basis.
    pub fn weight_coords(&self, x: &[QSqrt5]) -> Result<Vec<i64>> {
        self.require_crystallographic()?;
        (0..self.rank())
            .map(|i| {
                let c = (0..self.rank()).fold(QSqrt5::zero(), |a, j| a + self.coxeter[i][j].mul_ref(&x[j]));
                int_of(&c).ok_or_else(|| Error::Invalid("vector is not in the weight lattice".into()))
            })
            .collect()
    }

    /// Integer simple-root coordinates of root `i`.
    pub fn integer_coords(&self, i: usize) -> Result<Vec<i64>> {
        self.require_crystallographic()?;
        Ok(self.roots[i].iter().map(|c| int_of(c).expect("integral root")).collect())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "type": self.kind.to_string(),
            "rank": self.rank(),
            "gram": (0..self.rank())
                .map(|i| self.gram.row(i).iter().map(|c| c.to_string()).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            "roots": self.roots.iter()
                .map(|x| x.iter().map(|c| c.to_string()).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })
    }
}

pub(crate) fn int_of(c: &QSqrt5) -> Option<i64> {
    use num_traits::ToPrimitive;
    c.to_integer().and_then(|z| z.to_i64())
}
