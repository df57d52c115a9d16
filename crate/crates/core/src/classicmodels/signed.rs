use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::rootsys::Irreducible;

use super::signed_label;

/// Largest rank accepted by [`brute_force_rows`].
pub const BRUTE_FORCE_MAX_RANK: usize = 4;

/// A signed permutation of `0..n`: coordinate `i` is sent to `signs[i]`
/// times coordinate `perm[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedPerm {
    perm: Vec<usize>,
    negated: Vec<bool>,
}

impl SignedPerm {
    pub fn identity(n: usize) -> Self {
        SignedPerm { perm: (0..n).collect(), negated: vec![false; n] }
    }

    pub fn new(perm: Vec<usize>, negated: Vec<bool>) -> Result<Self> {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::Invalid("not a permutation".into()));
            }
        }
        if negated.len() != n {
            return Err(Error::Invalid("sign vector has the wrong length".into()));
        }
        Ok(SignedPerm { perm, negated })
    }

    pub fn degree(&self) -> usize {
        self.perm.len()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &SignedPerm) -> SignedPerm {
        let perm = other.perm.iter().map(|&j| self.perm[j]).collect();
        let negated = other.perm.iter().zip(&other.negated).map(|(&j, &s)| s ^ self.negated[j]).collect();
        SignedPerm { perm, negated }
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        let mut out = vec![0; v.len()];
        for (i, &x) in v.iter().enumerate() {
            out[self.perm[i]] = if self.negated[i] { -x } else { x };
        }
        out
    }

    /// The number of negative signs is even.
    pub fn is_even(&self) -> bool {
        self.negated.iter().filter(|&&s| s).count() % 2 == 0
    }

    pub fn is_involution(&self) -> bool {
        self.compose(self) == SignedPerm::identity(self.degree())
    }

    /// Reflection in `root`, which must be `±e_i`, `±e_i ± e_j`.
    pub fn reflection(root: &[i64]) -> SignedPerm {
        let n = root.len();
        let norm: i64 = root.iter().map(|x| x * x).sum();
        let mut perm = vec![0; n];
        let mut negated = vec![false; n];
        for k in 0..n {
            let image: Vec<i64> = (0..n)
                .map(|m| i64::from(m == k) * norm - 2 * root[k] * root[m])
                .collect();
            let m = image.iter().position(|&x| x != 0).expect("image of a basis vector");
            perm[k] = m;
            negated[k] = image[m] < 0;
        }
        SignedPerm { perm, negated }
    }

    /// `(negated, fixed, pairs)` for an involution.
    pub fn shape(&self) -> (usize, usize, usize) {
        let n = self.degree();
        let fixed_points = (0..n).filter(|&i| self.perm[i] == i);
        let negated = fixed_points.clone().filter(|&i| self.negated[i]).count();
        let fixed = fixed_points.count() - negated;
        (negated, fixed, (n - negated - fixed) / 2)
    }
}

fn roots(t: Irreducible) -> Result<(usize, Vec<Vec<i64>>)> {
    let (n, short, signed) = match t {
        Irreducible::A(r) => (r + 1, false, false),
        Irreducible::B(n) => (n, true, true),
        Irreducible::D(n) => (n, false, true),
        other => return Err(Error::Capability(format!("no signed-permutation model for {other}"))),
    };
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let mut v = vec![0; n];
            v[i] = 1;
            v[j] = -1;
            out.push(v.clone());
            if signed {
                v[j] = 1;
                out.push(v.clone());
                out.push(v.iter().map(|x| -x).collect());
            }
        }
        if short {
            let mut v = vec![0; n];
            v[i] = 1;
            out.push(v.clone());
            v[i] = -1;
            out.push(v);
        }
    }
    out.sort();
    out.dedup();
    Ok((n, out))
}

fn closure(n: usize, gens: &[SignedPerm]) -> HashSet<SignedPerm> {
    let id = SignedPerm::identity(n);
    let mut seen = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = g.compose(&x);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen
}

/// Orders computed by exhaustive enumeration for one involution class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BruteForceRow {
    pub degree: usize,
    /// `a,a',b` for B and D (without the split suffix), the degree for A.
    pub label: String,
    pub class_size: usize,
    pub centralizer_order: usize,
    pub minus_order: usize,
    pub plus_order: usize,
    pub gamma_order: usize,
}

/// Enumerates the whole group of type `A_r`, `B_n` or `D_n` (rank at most
/// [`BRUTE_FORCE_MAX_RANK`]) and computes every involution class directly.
pub fn brute_force_rows(t: Irreducible) -> Result<Vec<BruteForceRow>> {
    if t.rank() > BRUTE_FORCE_MAX_RANK {
        return Err(Error::Capability(format!("{t} is too large to enumerate")));
    }
    let (n, roots) = roots(t)?;
    let reflections: Vec<SignedPerm> = roots.iter().map(|r| SignedPerm::reflection(r)).collect();
    let group: Vec<SignedPerm> = closure(n, &reflections).into_iter().collect();
    let mut assigned: HashSet<SignedPerm> = HashSet::new();
    let mut rows = Vec::new();
    let mut involutions: Vec<&SignedPerm> = group.iter().filter(|g| g.is_involution()).collect();
    involutions.sort_by(|x, y| (&x.perm, &x.negated).cmp(&(&y.perm, &y.negated)));
    involutions.insert(0, group.iter().find(|g| **g == SignedPerm::identity(n)).expect("identity"));
    for u in involutions {
        if assigned.contains(u) {
            continue;
        }
        let class: HashSet<SignedPerm> = group.iter().map(|g| {
            let inv = group.iter().find(|h| h.compose(g) == SignedPerm::identity(n)).expect("inverse");
            g.compose(u).compose(inv)
        }).collect();
        assigned.extend(class.iter().cloned());
        let centralizer_order = group.iter().filter(|g| g.compose(u) == u.compose(g)).count();
        let by_action = |sign: i64| -> Vec<SignedPerm> {
            roots
                .iter()
                .zip(&reflections)
                .filter(|(r, _)| u.apply(r) == r.iter().map(|x| sign * x).collect::<Vec<_>>())
                .map(|(_, s)| s.clone())
                .collect()
        };
        let minus_order = closure(n, &by_action(-1)).len();
        let plus_order = closure(n, &by_action(1)).len();
        let (neg, fix, pairs) = u.shape();
        let (degree, label) = match t {
            Irreducible::A(_) => (pairs, pairs.to_string()),
            _ => (neg + pairs, signed_label(neg, fix, pairs, None)),
        };
        rows.push(BruteForceRow {
            degree,
            label,
            class_size: class.len(),
            centralizer_order,
            minus_order,
            plus_order,
            gamma_order: centralizer_order / (minus_order * plus_order),
        });
    }
    rows.sort_by(|x, y| (x.degree, &x.label, x.class_size).cmp(&(y.degree, &y.label, y.class_size)));
    Ok(rows)
}
