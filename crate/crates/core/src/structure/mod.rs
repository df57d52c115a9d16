//! Centralizers of involutions: the reflection subgroups `G_u^±`, their
//! images on the eigenspaces, the quotient `Γ_u` and the checks relating
//! them.

mod dihedral;
mod profile;
mod recognition;
mod report;
mod theorems;

pub use dihedral::dihedral_profiles;
pub use profile::{
    analyze_class, centralizer, g_plus_minus, gamma, tilde_group, ClassAnalysis, Gamma, ParabolicPart, Side,
    TildeGroup,
};
pub use recognition::{reflection_subgroup_type, RecognizedDiagram};
pub use report::{factor_order, parse_factored, CentralizerProfile, CSV_HEADER};
pub use theorems::{
    chain_types, class_checks, find_complement, gamma_shape_check, h4_witness, theorem_1_1, type_checks,
    CheckResult, CheckStatus, COMPLEMENT_BUDGET, ENUMERATION_GATE,
};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::involutions::{enumerate_involution_classes, ClassInventory, InvolutionClass};
use crate::rootsys::{build_system, BuildOptions, Irreducible, RootSystem, System};

pub(crate) fn ser_display<T: std::fmt::Display, S: serde::Serializer>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// Profiles and check results for one irreducible type.
#[derive(Clone, Debug, Serialize)]
pub struct TypeReport {
    #[serde(rename = "type")]
    pub type_name: String,
    pub group_order: String,
    pub classes: Vec<InvolutionClass>,
    pub profiles: Vec<CentralizerProfile>,
    pub checks: Vec<CheckResult>,
}

impl TypeReport {
    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| c.failed())
    }
}

/// Analyses every involution class of `rs`, in parallel across classes.
/// Results are ordered by degree, then label.
pub fn analyze_classes(rs: &RootSystem) -> Result<(Vec<ClassAnalysis>, ClassInventory)> {
    let group = rs.group();
    group.bsgs();
    let (classes, inv) = enumerate_involution_classes(rs)?;
    let mut analyses = classes
        .par_iter()
        .map(|c| analyze_class(rs, &group, c))
        .collect::<Result<Vec<_>>>()?;
    analyses.sort_by(|a, b| (a.class.degree, &a.class.label).cmp(&(b.class.degree, &b.class.label)));
    Ok((analyses, inv))
}

pub fn analyze_root_system(rs: &RootSystem, with_checks: bool) -> Result<TypeReport> {
    let type_name = rs.kind().to_string();
    let (analyses, inv) = analyze_classes(rs)?;
    let profiles = analyses.iter().map(|a| CentralizerProfile::from_analysis(&type_name, a)).collect();
    let mut checks = Vec::new();
    if with_checks {
        let group = rs.group();
        group.bsgs();
        let per_class: Vec<Vec<CheckResult>> = analyses.par_iter().map(|a| class_checks(rs, &group, a)).collect();
        checks.extend(per_class.into_iter().flatten());
        checks.extend(type_checks(rs, &inv, &analyses));
    }
    let mut classes: Vec<InvolutionClass> = analyses.iter().map(|a| a.class.clone()).collect();
    classes.sort_by(|a, b| (a.degree, &a.label).cmp(&(b.degree, &b.label)));
    Ok(TypeReport { type_name, group_order: factor_order(&rs.group().order()), classes, profiles, checks })
}

/// Builds `t` and analyses it; dihedral types use the abstract model.
pub fn analyze(t: Irreducible, opts: BuildOptions, with_checks: bool) -> Result<TypeReport> {
    match build_system(t, opts)? {
        System::Roots(rs) => analyze_root_system(&rs, with_checks),
        System::Dihedral(model) => {
            let (mut profiles, checks) = dihedral_profiles(&model)?;
            profiles.sort_by(|a, b| (a.degree, &a.label).cmp(&(b.degree, &b.label)));
            let (mut classes, _) = crate::involutions::enumerate_dihedral_classes(&model);
            classes.sort_by(|a, b| (a.degree, &a.label).cmp(&(b.degree, &b.label)));
            Ok(TypeReport {
                type_name: format!("I2({})", model.m()),
                group_order: factor_order(&model.group().order()),
                classes,
                profiles,
                checks: if with_checks { checks } else { Vec::new() },
            })
        }
    }
}
