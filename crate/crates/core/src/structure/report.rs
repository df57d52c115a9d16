use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use super::profile::ClassAnalysis;
use crate::permengine::GammaStructure;
use crate::rootsys::CoxeterType;

/// Column header of the CSV table format.
pub const CSV_HEADER: &str = "type,degree,label,order_factored,Gminus,TildeGminus,Gplus,TildeGplus,gamma";

/// One row of a centralizer table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CentralizerProfile {
    #[serde(rename = "type")]
    pub type_name: String,
    pub degree: usize,
    pub label: String,
    pub class_size: usize,
    #[serde(serialize_with = "super::ser_display")]
    pub order: BigUint,
    pub order_factored: String,
    #[serde(serialize_with = "super::ser_display")]
    pub g_minus: CoxeterType,
    #[serde(serialize_with = "super::ser_display")]
    pub tilde_g_minus: CoxeterType,
    #[serde(serialize_with = "super::ser_display")]
    pub g_plus: CoxeterType,
    #[serde(serialize_with = "super::ser_display")]
    pub tilde_g_plus: CoxeterType,
    #[serde(serialize_with = "super::ser_display")]
    pub gamma: GammaStructure,
    pub gamma_order: usize,
    pub tilde_minus_reflection_generated: bool,
    pub tilde_plus_reflection_generated: bool,
}

impl CentralizerProfile {
    pub fn from_analysis(type_name: &str, a: &ClassAnalysis) -> Self {
        let order = a.centralizer.order();
        CentralizerProfile {
            type_name: type_name.to_string(),
            degree: a.class.degree,
            label: a.class.label.clone(),
            class_size: a.class.class_size,
            order_factored: factor_order(&order),
            order,
            g_minus: a.minus.diagram.ty.clone(),
            tilde_g_minus: a.tilde_minus.diagram.ty.clone(),
            g_plus: a.plus.diagram.ty.clone(),
            tilde_g_plus: a.tilde_plus.diagram.ty.clone(),
            gamma: a.gamma.structure.clone(),
            gamma_order: a.gamma.order,
            tilde_minus_reflection_generated: a.tilde_minus.reflection_generated,
            tilde_plus_reflection_generated: a.tilde_plus.reflection_generated,
        }
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.type_name,
            self.degree,
            csv_field(&self.label),
            self.order_factored,
            self.g_minus,
            self.tilde_g_minus,
            self.g_plus,
            self.tilde_g_plus,
            csv_field(&self.gamma.to_string()),
        )
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Prime factorisation written as `2^10 3^2 5 7`; `1` for one.
pub fn factor_order(n: &BigUint) -> String {
    if n.is_one() || n.is_zero() {
        return n.to_string();
    }
    let mut rest = n.clone();
    let mut parts = Vec::new();
    let mut p = BigUint::from(2u32);
    while &p * &p <= rest {
        let mut e = 0;
        while (&rest % &p).is_zero() {
            rest /= &p;
            e += 1;
        }
        if e > 0 {
            parts.push(power(&p, e));
        }
        p += if p == BigUint::from(2u32) { 1u32 } else { 2u32 };
    }
    if !rest.is_one() {
        parts.push(rest.to_string());
    }
    parts.join(" ")
}

fn power(p: &BigUint, e: u32) -> String {
    if e == 1 {
        p.to_string()
    } else {
        format!("{p}^{e}")
    }
}

/// Parses `2^10 3^2 5 7` back into an integer.
pub fn parse_factored(s: &str) -> Option<BigUint> {
    s.split_whitespace().try_fold(BigUint::one(), |acc, term| {
        let (b, e) = match term.split_once('^') {
            Some((b, e)) => (b.parse::<BigUint>().ok()?, e.parse::<u32>().ok()?),
            None => (term.parse::<BigUint>().ok()?, 1),
        };
        Some(acc * b.pow(e))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorisation_format() {
        assert_eq!(factor_order(&BigUint::from(2_903_040u32)), "2^10 3^4 5 7");
        assert_eq!(factor_order(&BigUint::from(1u32)), "1");
        assert_eq!(factor_order(&BigUint::from(14_400u32)), "2^6 3^2 5^2");
        assert_eq!(factor_order(&BigUint::from(2u32)), "2");
        assert_eq!(factor_order(&BigUint::from(10u32)), "2 5");
    }

    #[test]
    fn parse_roundtrip() {
        for n in [1u64, 2, 120, 14_400, 696_729_600, 2 * 11 * 11] {
            let b = BigUint::from(n);
            assert_eq!(parse_factored(&factor_order(&b)).unwrap(), b);
        }
    }
}
