use std::fmt;

use num_traits::ToPrimitive;

use super::{Perm, PermGroup};
use crate::error::{Error, Result};

/// Largest group order [`fingerprint`] accepts.
pub const MAX_ORDER: usize = 96;

/// Isomorphism-invariant summary of a small group.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Invariants {
    pub order: usize,
    pub abelian: bool,
    pub derived_order: usize,
    pub center_order: usize,
    /// Sorted element orders.
    pub element_orders: Vec<u64>,
}

/// Isomorphism type of a small quotient group.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GammaStructure {
    /// Symmetric group on `r` letters; `Sym(1)` is the trivial group.
    Sym(usize),
    /// `Sym_r × C2` for `r ≥ 3`.
    SymC2(usize),
    /// Elementary abelian of order 4.
    C2xC2,
    Other(Invariants),
}

impl GammaStructure {
    /// `Sym_r` with `Sym_0 = Sym_1` normalised to `Sym(1)`.
    pub fn sym(r: usize) -> Self {
        GammaStructure::Sym(r.max(1))
    }

    /// `Sym_r × C2` normalised: `Sym_0 × C2 = Sym_1 × C2 = Sym_2`,
    /// `Sym_2 × C2 = C2×C2`.
    pub fn sym_times_c2(r: usize) -> Self {
        match r {
            0 | 1 => GammaStructure::Sym(2),
            2 => GammaStructure::C2xC2,
            _ => GammaStructure::SymC2(r),
        }
    }

    pub fn order(&self) -> usize {
        fn fact(r: usize) -> usize {
            (1..=r).product()
        }
        match self {
            GammaStructure::Sym(r) => fact(*r),
            GammaStructure::SymC2(r) => 2 * fact(*r),
            GammaStructure::C2xC2 => 4,
            GammaStructure::Other(inv) => inv.order,
        }
    }

    /// Parses `"r"` or `"r,2"`.
    pub fn parse(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.trim().split(',').map(str::trim).collect();
        let r = |t: &str| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad gamma value {s:?}")));
        match parts.as_slice() {
            [a] => Ok(GammaStructure::sym(r(a)?)),
            [a, "2"] => Ok(GammaStructure::sym_times_c2(r(a)?)),
            _ => Err(Error::Parse(format!("bad gamma value {s:?}"))),
        }
    }
}

impl fmt::Display for GammaStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GammaStructure::Sym(r) => write!(f, "{r}"),
            GammaStructure::SymC2(r) => write!(f, "{r},2"),
            GammaStructure::C2xC2 => write!(f, "2,2"),
            GammaStructure::Other(inv) => write!(f, "?{}", inv.order),
        }
    }
}

pub fn invariants(g: &PermGroup) -> Result<Invariants> {
    let order = g
        .order()
        .to_usize()
        .filter(|&o| o <= MAX_ORDER)
        .ok_or_else(|| Error::Capability(format!("fingerprint needs order <= {MAX_ORDER}")))?;
    let elements = g.elements(MAX_ORDER).expect("order checked");
    let abelian = g
        .generators()
        .iter()
        .all(|a| g.generators().iter().all(|b| a.commutes_with(b)));
    let commutators: Vec<Perm> = elements
        .iter()
        .flat_map(|a| {
            elements
                .iter()
                .map(move |b| a.compose(b).compose(&a.inverse()).compose(&b.inverse()))
        })
        .collect();
    let derived_order = PermGroup::new(g.degree(), commutators).order().to_usize().unwrap();
    let center_order = elements.iter().filter(|x| g.centralizes(x)).count();
    let mut element_orders: Vec<u64> = elements.iter().map(Perm::order).collect();
    element_orders.sort_unstable();
    Ok(Invariants { order, abelian, derived_order, center_order, element_orders })
}

fn symmetric(r: usize, with_c2: bool) -> PermGroup {
    let degree = r + 2;
    let mut gens = Vec::new();
    for i in 0..r.saturating_sub(1) {
        let mut v: Vec<u16> = (0..degree as u16).collect();
        v.swap(i, i + 1);
        gens.push(Perm::from_images(v).unwrap());
    }
    if with_c2 {
        let mut v: Vec<u16> = (0..degree as u16).collect();
        v.swap(r, r + 1);
        gens.push(Perm::from_images(v).unwrap());
    }
    PermGroup::new(degree, gens)
}

/// Identifies `g` among `Sym_r` and `Sym_r × C2` for `r ≤ 4`.
pub fn fingerprint(g: &PermGroup) -> Result<GammaStructure> {
    let inv = invariants(g)?;
    for r in 1..=4 {
        if invariants(&symmetric(r, false))? == inv {
            return Ok(GammaStructure::sym(r));
        }
        if invariants(&symmetric(r, true))? == inv {
            return Ok(GammaStructure::sym_times_c2(r));
        }
    }
    Ok(GammaStructure::Other(inv))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recognises_reference_groups() {
        assert_eq!(fingerprint(&PermGroup::trivial(3)).unwrap(), GammaStructure::Sym(1));
        for r in 2..=4 {
            assert_eq!(fingerprint(&symmetric(r, false)).unwrap(), GammaStructure::Sym(r));
        }
        assert_eq!(fingerprint(&symmetric(2, true)).unwrap(), GammaStructure::C2xC2);
        assert_eq!(fingerprint(&symmetric(3, true)).unwrap(), GammaStructure::SymC2(3));
        assert_eq!(fingerprint(&symmetric(4, true)).unwrap(), GammaStructure::SymC2(4));
    }

    #[test]
    fn separates_cyclic_groups() {
        let c4 = PermGroup::new(4, [Perm::from_images(vec![1, 2, 3, 0]).unwrap()]);
        assert!(matches!(fingerprint(&c4).unwrap(), GammaStructure::Other(_)));
        let c6 = PermGroup::new(6, [Perm::from_images(vec![1, 2, 3, 4, 5, 0]).unwrap()]);
        assert!(matches!(fingerprint(&c6).unwrap(), GammaStructure::Other(_)));
    }

    #[test]
    fn alternating_a4_is_other() {
        let a = Perm::from_images(vec![1, 2, 0, 3]).unwrap();
        let b = Perm::from_images(vec![0, 2, 3, 1]).unwrap();
        let g = PermGroup::new(4, [a, b]);
        assert_eq!(g.order().to_usize(), Some(12));
        assert!(matches!(fingerprint(&g).unwrap(), GammaStructure::Other(_)));
    }

    #[test]
    fn parse_and_display_roundtrip() {
        for s in ["1", "2", "3", "2,2", "3,2", "4,2"] {
            assert_eq!(GammaStructure::parse(s).unwrap().to_string(), s);
        }
        assert_eq!(GammaStructure::parse("1,2").unwrap(), GammaStructure::Sym(2));
        assert_eq!(GammaStructure::parse("0").unwrap(), GammaStructure::Sym(1));
    }
}
