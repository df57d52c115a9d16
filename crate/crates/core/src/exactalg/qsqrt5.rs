//! Exact elements of the real quadratic field Q(√5).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// `rational + surd·√5` with both parts reduced fractions.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct QSqrt5 {
    rational: BigRational,
    surd: BigRational,
}

impl QSqrt5 {
    pub fn new(rational: BigRational, surd: BigRational) -> Self {
        QSqrt5 { rational, surd }
    }

    pub fn from_rational(r: BigRational) -> Self {
        QSqrt5 { rational: r, surd: BigRational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_frac(num: i64, den: i64) -> Self {
        Self::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// The golden ratio (1 + √5)/2.
    pub fn golden() -> Self {
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        QSqrt5 { rational: half.clone(), surd: half }
    }

    pub fn sqrt5() -> Self {
        QSqrt5 { rational: BigRational::zero(), surd: BigRational::one() }
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.rational
    }

    pub fn surd_part(&self) -> &BigRational {
        &self.surd
    }

    pub fn is_rational(&self) -> bool {
        self.surd.is_zero()
    }

    /// Integer value, if the element is a rational integer.
    pub fn to_integer(&self) -> Option<BigInt> {
        if self.surd.is_zero() && self.rational.is_integer() {
            Some(self.rational.to_integer())
        } else {
            None
        }
    }

    /// Galois conjugate `a - b√5`.
    pub fn conjugate(&self) -> Self {
        QSqrt5 { rational: self.rational.clone(), surd: -self.surd.clone() }
    }

    /// Field norm `a² - 5b²`.
    pub fn norm(&self) -> BigRational {
        &self.rational * &self.rational - BigRational::from_integer(BigInt::from(5)) * &self.surd * &self.surd
    }

    /// Exact sign of the real number `a + b√5`.
    pub fn signum(&self) -> i8 {
        let sa = sign_of(&self.rational);
        let sb = sign_of(&self.surd);
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return sb;
        }
        // opposite signs: compare a² with 5b²
        let a2 = &self.rational * &self.rational;
        let b2 = BigRational::from_integer(BigInt::from(5)) * &self.surd * &self.surd;
        match a2.cmp(&b2) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.surd.is_zero() {
            return Some(Self::from_rational(self.rational.recip()));
        }
        let n = self.norm();
        Some(QSqrt5 { rational: &self.rational / &n, surd: -(&self.surd / &n) })
    }

    pub fn mul_ref(&self, rhs: &Self) -> Self {
        if self.surd.is_zero() && rhs.surd.is_zero() {
            return Self::from_rational(&self.rational * &rhs.rational);
        }
        let five = BigRational::from_integer(BigInt::from(5));
        QSqrt5 {
            rational: &self.rational * &rhs.rational + five * &self.surd * &rhs.surd,
            surd: &self.rational * &rhs.surd + &self.surd * &rhs.rational,
        }
    }

    pub fn add_ref(&self, rhs: &Self) -> Self {
        QSqrt5 { rational: &self.rational + &rhs.rational, surd: &self.surd + &rhs.surd }
    }

    pub fn sub_ref(&self, rhs: &Self) -> Self {
        QSqrt5 { rational: &self.rational - &rhs.rational, surd: &self.surd - &rhs.surd }
    }
}

fn sign_of(r: &BigRational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

impl PartialOrd for QSqrt5 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QSqrt5 {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sub_ref(other).signum().cmp(&0)
    }
}

impl Zero for QSqrt5 {
    fn zero() -> Self {
        QSqrt5 { rational: BigRational::zero(), surd: BigRational::zero() }
    }
    fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.surd.is_zero()
    }
}

impl One for QSqrt5 {
    fn one() -> Self {
        Self::from_rational(BigRational::one())
    }
}

impl Add for QSqrt5 {
    type Output = QSqrt5;
    fn add(self, rhs: Self) -> Self {
        QSqrt5 { rational: self.rational + rhs.rational, surd: self.surd + rhs.surd }
    }
}

impl Sub for QSqrt5 {
    type Output = QSqrt5;
    fn sub(self, rhs: Self) -> Self {
        QSqrt5 { rational: self.rational - rhs.rational, surd: self.surd - rhs.surd }
    }
}

impl Mul for QSqrt5 {
    type Output = QSqrt5;
    fn mul(self, rhs: Self) -> Self {
        self.mul_ref(&rhs)
    }
}

impl Div for QSqrt5 {
    type Output = QSqrt5;
    fn div(self, rhs: Self) -> Self {
        let inv = rhs.inverse().expect("division by zero in Q(sqrt5)");
        self.mul_ref(&inv)
    }
}

impl Neg for QSqrt5 {
    type Output = QSqrt5;
    fn neg(self) -> Self {
        QSqrt5 { rational: -self.rational, surd: -self.surd }
    }
}

impl<'a> Add<&'a QSqrt5> for &'a QSqrt5 {
    type Output = QSqrt5;
    fn add(self, rhs: &QSqrt5) -> QSqrt5 {
        self.add_ref(rhs)
    }
}

impl<'a> Sub<&'a QSqrt5> for &'a QSqrt5 {
    type Output = QSqrt5;
    fn sub(self, rhs: &QSqrt5) -> QSqrt5 {
        self.sub_ref(rhs)
    }
}

impl<'a> Mul<&'a QSqrt5> for &'a QSqrt5 {
    type Output = QSqrt5;
    fn mul(self, rhs: &QSqrt5) -> QSqrt5 {
        self.mul_ref(rhs)
    }
}

impl From<i64> for QSqrt5 {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<BigRational> for QSqrt5 {
    fn from(r: BigRational) -> Self {
        Self::from_rational(r)
    }
}

/// Canonical text form: `a`, `b*sqrt5`, `a+b*sqrt5` or `a-b*sqrt5`,
/// with `a`, `b` printed as reduced fractions.
impl fmt::Display for QSqrt5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.surd.is_zero() {
            return write!(f, "{}", self.rational);
        }
        if self.rational.is_zero() {
            return write!(f, "{}*sqrt5", self.surd);
        }
        if self.surd.is_negative() {
            write!(f, "{}-{}*sqrt5", self.rational, -self.surd.clone())
        } else {
            write!(f, "{}+{}*sqrt5", self.rational, self.surd)
        }
    }
}

fn parse_rational(s: &str) -> Result<BigRational, Error> {
    let bad = || Error::Parse(format!("bad rational '{s}'"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.parse().map_err(|_| bad())?;
            let d: BigInt = d.parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

impl FromStr for QSqrt5 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let Some(body) = s.strip_suffix("*sqrt5") else {
            return Ok(Self::from_rational(parse_rational(s)?));
        };
        // split at the last sign that is not the leading one
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(i, _)| i)
            .last();
        match split {
            None => Ok(QSqrt5 { rational: BigRational::zero(), surd: parse_rational(body)? }),
            Some(i) => {
                let rational = parse_rational(&body[..i])?;
                let surd_text = &body[i..];
                let surd = parse_rational(surd_text.strip_prefix('+').unwrap_or(surd_text))?;
                Ok(QSqrt5 { rational, surd })
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(a: (i64, i64), b: (i64, i64)) -> QSqrt5 {
        QSqrt5::new(
            BigRational::new(a.0.into(), a.1.into()),
            BigRational::new(b.0.into(), b.1.into()),
        )
    }

    #[test]
    fn golden_ratio_satisfies_its_polynomial() {
        let phi = QSqrt5::golden();
        // φ² = φ + 1
        assert_eq!(phi.mul_ref(&phi), phi.add_ref(&QSqrt5::one()));
    }

    #[test]
    fn sign_of_mixed_elements() {
        assert_eq!(q((3, 1), (-1, 1)).signum(), 1); // 3 - √5 > 0
        assert_eq!(q((2, 1), (-1, 1)).signum(), -1); // 2 - √5 < 0
        assert_eq!(q((-3, 1), (1, 1)).signum(), -1);
        assert_eq!(QSqrt5::zero().signum(), 0);
    }

    #[test]
    fn display_forms() {
        assert_eq!(q((1, 2), (1, 2)).to_string(), "1/2+1/2*sqrt5");
        assert_eq!(q((0, 1), (-3, 1)).to_string(), "-3*sqrt5");
        assert_eq!(q((-1, 1), (-1, 4)).to_string(), "-1-1/4*sqrt5");
        assert_eq!(q((7, 3), (0, 1)).to_string(), "7/3");
    }

    fn arb_q() -> impl Strategy<Value = QSqrt5> {
        (-50i64..50, 1i64..20, -50i64..50, 1i64..20).prop_map(|(a, b, c, d)| q((a, b), (c, d)))
    }

    proptest! {
        #[test]
        fn string_roundtrip(x in arb_q()) {
            let back: QSqrt5 = x.to_string().parse().unwrap();
            prop_assert_eq!(back, x);
        }

        #[test]
        fn add_then_sub_is_identity(x in arb_q(), y in arb_q()) {
            prop_assert_eq!(x.add_ref(&y).sub_ref(&y), x);
        }

        #[test]
        fn division_inverts_multiplication(x in arb_q(), y in arb_q()) {
            prop_assume!(!y.is_zero());
            prop_assert_eq!(x.mul_ref(&y) / y, x);
        }

        #[test]
        fn order_is_compatible_with_addition(x in arb_q(), y in arb_q(), z in arb_q()) {
            prop_assert_eq!(x.cmp(&y), x.add_ref(&z).cmp(&y.add_ref(&z)));
        }
    }
}
