//! Closed-form profiles for the symmetric, hyperoctahedral and even
//! hyperoctahedral groups, with a brute-force validator on signed
//! permutations for small ranks.

mod signed;

pub use signed::{brute_force_rows, SignedPerm, BRUTE_FORCE_MAX_RANK};

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::permengine::GammaStructure;
use crate::rootsys::{CoxeterType, Irreducible};
use crate::tables::TableRow;

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

fn pow2(n: usize) -> BigUint {
    BigUint::one() << n
}

/// `A_{k-1}`: the symmetric group on `k` letters.
fn sym_type(k: usize) -> CoxeterType {
    CoxeterType::new([Irreducible::A(k.saturating_sub(1))])
}

fn a1_power(k: usize) -> CoxeterType {
    CoxeterType::new(std::iter::repeat_n(Irreducible::A(1), k))
}

fn b(k: usize) -> CoxeterType {
    CoxeterType::new([Irreducible::B(k)])
}

fn d(k: usize) -> CoxeterType {
    CoxeterType::new([Irreducible::D(k)])
}

/// Label of a signed-permutation class: `a,a',b`, with `+`/`-` appended to
/// the two classes of type D with `a = a' = 0`.
pub fn signed_label(a: usize, a_prime: usize, pairs: usize, split: Option<bool>) -> String {
    let suffix = match split {
        Some(true) => "+",
        Some(false) => "-",
        None => "",
    };
    format!("{a},{a_prime},{pairs}{suffix}")
}

/// Row for involutions of degree `degree` in the symmetric group on
/// `points` letters (type `A_{points-1}`).
pub fn predict_profile_a(points: usize, degree: usize) -> Result<TableRow> {
    if points < 2 || 2 * degree > points {
        return Err(Error::Invalid(format!("no involution of degree {degree} on {points} points")));
    }
    let fixed = points - 2 * degree;
    Ok(TableRow {
        degree,
        labels: vec![degree.to_string()],
        order: pow2(degree) * factorial(degree) * factorial(fixed),
        g_minus: a1_power(degree),
        tilde_g_minus: b(degree),
        g_plus: sym_type(fixed),
        tilde_g_plus: sym_type(fixed).product(&sym_type(degree)),
        gamma: GammaStructure::sym(degree),
    })
}

/// Row for the class with `negated` coordinates sent to their negatives,
/// `fixed` coordinates fixed and `pairs` transposed pairs in type `B_n`.
pub fn predict_profile_b(n: usize, negated: usize, fixed: usize, pairs: usize) -> Result<TableRow> {
    if negated + fixed + 2 * pairs != n || n < 2 {
        return Err(Error::Invalid(format!("({negated},{fixed},{pairs}) is not a class of B{n}")));
    }
    Ok(TableRow {
        degree: negated + pairs,
        labels: vec![signed_label(negated, fixed, pairs, None)],
        order: pow2(n) * factorial(negated) * factorial(fixed) * factorial(pairs),
        g_minus: b(negated).product(&a1_power(pairs)),
        tilde_g_minus: b(negated).product(&b(pairs)),
        g_plus: b(fixed).product(&a1_power(pairs)),
        tilde_g_plus: b(fixed).product(&b(pairs)),
        gamma: GammaStructure::sym(pairs),
    })
}

/// Row for a class of type `D_n`. `split` must be given exactly when
/// `negated = fixed = 0`.
pub fn predict_profile_d(n: usize, negated: usize, fixed: usize, pairs: usize, split: Option<bool>) -> Result<TableRow> {
    let bad = || Error::Invalid(format!("({negated},{fixed},{pairs}) is not a class of D{n}"));
    if negated + fixed + 2 * pairs != n || negated % 2 == 1 || n < 4 {
        return Err(bad());
    }
    if split.is_some() != (negated == 0 && fixed == 0) {
        return Err(bad());
    }
    let half = pow2(n - 1) * factorial(pairs);
    let row = |order, g_minus, tilde_g_minus, g_plus, tilde_g_plus, gamma| TableRow {
        degree: negated + pairs,
        labels: vec![signed_label(negated, fixed, pairs, split)],
        order,
        g_minus,
        tilde_g_minus,
        g_plus,
        tilde_g_plus,
        gamma,
    };
    let tb = a1_power(pairs);
    Ok(match (negated, fixed) {
        (0, 0) => row(pow2(n) * factorial(pairs), tb.clone(), b(pairs), tb, b(pairs), GammaStructure::sym(pairs)),
        (0, f) => row(
            half * factorial(f),
            tb.clone(),
            b(pairs),
            d(f).product(&tb),
            d(f).product(&b(pairs)),
            GammaStructure::sym(pairs),
        ),
        (a, 0) => row(
            half * factorial(a),
            d(a).product(&tb),
            d(a).product(&b(pairs)),
            tb,
            b(pairs),
            GammaStructure::sym(pairs),
        ),
        (a, f) => row(
            half * factorial(a) * factorial(f),
            d(a).product(&tb),
            b(a).product(&b(pairs)),
            d(f).product(&tb),
            b(f).product(&b(pairs)),
            GammaStructure::sym_times_c2(pairs),
        ),
    })
}

/// Every `(negated, fixed, pairs)` with `negated + fixed + 2 pairs = n`.
fn shapes(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..=n / 2).flat_map(move |p| (0..=n - 2 * p).map(move |a| (a, n - 2 * p - a, p)))
}

/// Predicted rows for all classes of `A_rank`, `B_rank` or `D_rank`,
/// ordered by degree, then label.
pub fn predicted_rows(t: Irreducible) -> Result<Vec<TableRow>> {
    let mut rows = match t {
        Irreducible::A(r) => {
            let points = r + 1;
            (0..=points / 2).map(|k| predict_profile_a(points, k)).collect::<Result<Vec<_>>>()?
        }
        Irreducible::B(n) => shapes(n).map(|(a, f, p)| predict_profile_b(n, a, f, p)).collect::<Result<_>>()?,
        Irreducible::D(n) => {
            let mut rows = Vec::new();
            for (a, f, p) in shapes(n).filter(|s| s.0 % 2 == 0) {
                if a == 0 && f == 0 {
                    rows.push(predict_profile_d(n, a, f, p, Some(true))?);
                    rows.push(predict_profile_d(n, a, f, p, Some(false))?);
                } else {
                    rows.push(predict_profile_d(n, a, f, p, None)?);
                }
            }
            rows
        }
        other => return Err(Error::Capability(format!("no closed-form model for {other}"))),
    };
    rows.sort_by(|x, y| (x.degree, &x.labels).cmp(&(y.degree, &y.labels)));
    Ok(rows)
}
