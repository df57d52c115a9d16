use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

/// An irreducible finite Coxeter type in canonical form.
///
/// Variant order fixes the family order used when printing products.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Irreducible {
    A(usize),
    B(usize),
    D(usize),
    E(usize),
    F4,
    G2,
    H(usize),
    I2(usize),
}

impl Irreducible {
    /// Canonical components of a possibly degenerate label.
    pub fn canonical(self) -> Vec<Irreducible> {
        use Irreducible::*;
        match self {
            A(0) | B(0) | D(0) | D(1) => vec![],
            B(1) => vec![A(1)],
            D(2) => vec![A(1), A(1)],
            D(3) => vec![A(3)],
            I2(1) => vec![A(1)],
            I2(2) => vec![A(1), A(1)],
            I2(3) => vec![A(2)],
            I2(4) => vec![B(2)],
            I2(6) => vec![G2],
            H(2) => vec![I2(5)],
            other => vec![other],
        }
    }

    pub fn is_valid(self) -> bool {
        use Irreducible::*;
        match self {
            A(n) | B(n) | D(n) => n <= 4096,
            E(n) => (6..=8).contains(&n),
            H(n) => n == 3 || n == 4,
            I2(m) => m >= 1,
            F4 | G2 => true,
        }
    }

    pub fn rank(self) -> usize {
        use Irreducible::*;
        match self {
            A(n) | B(n) | D(n) | E(n) | H(n) => n,
            F4 => 4,
            G2 | I2(_) => 2,
        }
    }

    pub fn is_crystallographic(self) -> bool {
        !matches!(self, Irreducible::H(_) | Irreducible::I2(_))
    }

    pub fn order(self) -> BigUint {
        use Irreducible::*;
        let fact = |n: usize| (1..=n).fold(BigUint::one(), |a, k| a * BigUint::from(k));
        match self {
            A(n) => fact(n + 1),
            B(n) => (BigUint::one() << n) * fact(n),
            D(0) => BigUint::one(),
            D(n) => (BigUint::one() << (n - 1)) * fact(n),
            E(6) => BigUint::from(51_840u32),
            E(7) => BigUint::from(2_903_040u32),
            E(8) => BigUint::from(696_729_600u32),
            E(_) => unreachable!("invalid E rank"),
            F4 => BigUint::from(1152u32),
            G2 => BigUint::from(12u32),
            H(3) => BigUint::from(120u32),
            H(4) => BigUint::from(14_400u32),
            H(_) => unreachable!("invalid H rank"),
            I2(m) => BigUint::from(2 * m),
        }
    }
}

impl fmt::Display for Irreducible {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Irreducible::*;
        match self {
            A(n) => write!(f, "A{n}"),
            B(n) => write!(f, "B{n}"),
            D(n) => write!(f, "D{n}"),
            E(n) => write!(f, "E{n}"),
            F4 => write!(f, "F4"),
            G2 => write!(f, "G2"),
            H(n) => write!(f, "H{n}"),
            I2(m) => write!(f, "I2({m})"),
        }
    }
}

impl FromStr for Irreducible {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("unknown Coxeter type {s:?}"));
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("I2(") {
            let m = rest.strip_suffix(')').ok_or_else(bad)?;
            return Ok(Irreducible::I2(m.parse().map_err(|_| bad())?));
        }
        let (family, num) = s.split_at(s.find(|c: char| c.is_ascii_digit()).ok_or_else(bad)?);
        let n: usize = num.parse().map_err(|_| bad())?;
        let t = match family {
            "A" => Irreducible::A(n),
            "B" => Irreducible::B(n),
            "D" => Irreducible::D(n),
            "E" => Irreducible::E(n),
            "F" if n == 4 => Irreducible::F4,
            "G" if n == 2 => Irreducible::G2,
            "H" => Irreducible::H(n),
            _ => return Err(bad()),
        };
        if t.is_valid() {
            Ok(t)
        } else {
            Err(bad())
        }
    }
}

/// A finite Coxeter type: a multiset of irreducible components, kept
/// canonical and sorted. The empty product is the trivial type `1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct CoxeterType(Vec<Irreducible>);

impl CoxeterType {
    pub fn trivial() -> Self {
        CoxeterType(Vec::new())
    }

    pub fn new(parts: impl IntoIterator<Item = Irreducible>) -> Self {
        let mut v: Vec<Irreducible> = parts.into_iter().flat_map(Irreducible::canonical).collect();
        v.sort();
        CoxeterType(v)
    }

    pub fn irreducible(t: Irreducible) -> Self {
        CoxeterType::new([t])
    }

    pub fn components(&self) -> &[Irreducible] {
        &self.0
    }

    pub fn is_trivial(&self) -> bool {
        self.0.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.0.iter().map(|t| t.rank()).sum()
    }

    pub fn order(&self) -> BigUint {
        self.0.iter().fold(BigUint::one(), |a, t| a * t.order())
    }

    pub fn product(&self, other: &CoxeterType) -> CoxeterType {
        CoxeterType::new(self.0.iter().chain(other.0.iter()).copied())
    }

    /// The single component, if the type is irreducible.
    pub fn as_irreducible(&self) -> Option<Irreducible> {
        match self.0.as_slice() {
            [t] => Some(*t),
            _ => None,
        }
    }
}

impl From<Irreducible> for CoxeterType {
    fn from(t: Irreducible) -> Self {
        CoxeterType::irreducible(t)
    }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        let mut i = 0;
        while i < self.0.len() {
            let t = self.0[i];
            let k = self.0[i..].iter().take_while(|&&x| x == t).count();
            if !first {
                write!(f, "x")?;
            }
            first = false;
            if k == 1 {
                write!(f, "{t}")?;
            } else {
                write!(f, "({t})^{k}")?;
            }
            i += k;
        }
        Ok(())
    }
}

impl FromStr for CoxeterType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "1" {
            return Ok(CoxeterType::trivial());
        }
        let mut parts = Vec::new();
        for factor in s.split(['x', '×']) {
            let factor = factor.trim();
            if factor == "1" {
                continue;
            }
            if let Some(rest) = factor.strip_prefix('(') {
                let (inner, pow) = rest
                    .split_once(")^")
                    .ok_or_else(|| Error::Parse(format!("bad factor {factor:?}")))?;
                let k: usize = pow.parse().map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?;
                let t: Irreducible = inner.parse()?;
                parts.extend(std::iter::repeat_n(t, k));
            } else {
                parts.push(factor.parse()?);
            }
        }
        Ok(CoxeterType::new(parts))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Irreducible::*;

    #[test]
    fn canonical_forms() {
        assert_eq!(CoxeterType::new([I2(3)]), CoxeterType::new([A(2)]));
        assert_eq!(CoxeterType::new([I2(4)]), CoxeterType::new([B(2)]));
        assert_eq!(CoxeterType::new([I2(6)]), CoxeterType::new([G2]));
        assert_eq!(CoxeterType::new([B(1)]), CoxeterType::new([A(1)]));
        assert_eq!(CoxeterType::new([D(2)]), CoxeterType::new([A(1), A(1)]));
        assert_eq!(CoxeterType::new([D(3)]), CoxeterType::new([A(3)]));
        for t in [A(0), B(0), D(0), D(1)] {
            assert!(CoxeterType::new([t]).is_trivial());
        }
    }

    #[test]
    fn display_and_parse() {
        let t = CoxeterType::new([D(4), A(1)]);
        assert_eq!(t.to_string(), "A1xD4");
        assert_eq!(CoxeterType::new([A(1), A(1)]).to_string(), "(A1)^2");
        assert_eq!(CoxeterType::trivial().to_string(), "1");
        for s in ["1", "A1xD4", "(A1)^4", "A1xB3", "I2(5)", "F4", "H4", "A1xA2"] {
            assert_eq!(s.parse::<CoxeterType>().unwrap().to_string(), s);
        }
        assert_eq!("B2".parse::<CoxeterType>().unwrap(), "I2(4)".parse().unwrap());
    }

    #[test]
    fn orders() {
        assert_eq!(CoxeterType::new([E(8)]).order(), BigUint::from(696_729_600u32));
        assert_eq!(CoxeterType::new([H(4)]).order(), BigUint::from(14_400u32));
        assert_eq!("A1xD4".parse::<CoxeterType>().unwrap().order(), BigUint::from(384u32));
    }
}
