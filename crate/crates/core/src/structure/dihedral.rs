//! Profiles of the dihedral groups, without a vector realisation.
//!
//! The eigenspaces of an involution of the plane have dimension 0, 1 or
//! 2. On a line, an element acts by a sign, read off from whether it fixes
//! or negates a root on that line and from its determinant (rotations
//! preserve the cyclic order of the roots, reflections reverse it).

use num_bigint::BigUint;

use super::profile::{centralizer, g_plus_minus, gamma};
use super::report::{factor_order, CentralizerProfile};
use super::theorems::{gamma_shape_check, theorem_1_1, CheckResult};
use crate::error::{Error, Result};
use crate::involutions::enumerate_dihedral_classes;
use crate::permengine::Perm;
use crate::rootsys::{CoxeterType, DihedralModel, Irreducible};

fn determinant(model: &DihedralModel, g: &Perm) -> i64 {
    let n = model.num_roots();
    if (g.apply(1) + n - g.apply(0)) % n == 1 {
        1
    } else {
        -1
    }
}

/// Order (1 or 2) of the sign group by which `gens` act on the line of
/// root `r` (`on_root_line`) or on the line orthogonal to it.
fn line_image_order(model: &DihedralModel, gens: &[Perm], r: usize, on_root_line: bool) -> usize {
    let flips = gens.iter().any(|g| {
        let along = if g.apply(r) == r { 1 } else { -1 };
        let s = if on_root_line { along } else { along * determinant(model, g) };
        s == -1
    });
    if flips {
        2
    } else {
        1
    }
}

fn image_type(order: usize) -> CoxeterType {
    if order == 2 {
        CoxeterType::irreducible(Irreducible::A(1))
    } else {
        CoxeterType::trivial()
    }
}

pub fn dihedral_profiles(model: &DihedralModel) -> Result<(Vec<CentralizerProfile>, Vec<CheckResult>)> {
    let group = model.group();
    let whole = CoxeterType::irreducible(Irreducible::I2(model.m()));
    let type_name = format!("I2({})", model.m());
    let (classes, _) = enumerate_dihedral_classes(model);
    let mut profiles = Vec::new();
    let mut checks = Vec::new();
    for c in &classes {
        let u = &c.representative;
        let (plus, minus) = g_plus_minus(model, u)?;
        let known: Vec<Perm> = plus.group.generators().iter().chain(minus.group.generators()).cloned().collect();
        let gu = centralizer(&group, u, &known);
        let order = gu.order();
        if &order * BigUint::from(c.class_size) != group.order() {
            return Err(Error::Violation(format!("{type_name} class {}: orbit-stabilizer mismatch", c.label)));
        }
        let (tilde_minus, tilde_plus, tm, tp) = match c.degree {
            0 => (CoxeterType::trivial(), whole.clone(), 1, 2 * model.m()),
            2 => (whole.clone(), CoxeterType::trivial(), 2 * model.m(), 1),
            _ => {
                let r = c.word[0];
                let tm = line_image_order(model, gu.generators(), r, true);
                let tp = line_image_order(model, gu.generators(), r, false);
                (image_type(tm), image_type(tp), tm, tp)
            }
        };
        let g1 = plus.group.join(minus.group.generators());
        let gm = gamma(&gu, &g1)?;
        let label = c.label.as_str();
        let (gp_ord, gm_ord) = (plus.group.order(), minus.group.order());
        checks.push(CheckResult::verdict(
            "2.5a",
            Some(label),
            order == &gm_ord * BigUint::from(tp) && order == &gp_ord * BigUint::from(tm),
            format!("|G_u| = {order}"),
        ));
        checks.push(CheckResult::verdict(
            "1.1",
            Some(label),
            theorem_1_1(model, u, &g1, &gm.quotient),
            format!("|Gamma| = {}", gm.order),
        ));
        checks.push(gamma_shape_check(Irreducible::I2(model.m()), label, &gm.structure));
        profiles.push(CentralizerProfile {
            type_name: type_name.clone(),
            degree: c.degree,
            label: c.label.clone(),
            class_size: c.class_size,
            order_factored: factor_order(&order),
            order,
            g_minus: minus.diagram.ty.clone(),
            tilde_g_minus: tilde_minus,
            g_plus: plus.diagram.ty.clone(),
            tilde_g_plus: tilde_plus,
            gamma: gm.structure,
            gamma_order: gm.order,
            tilde_minus_reflection_generated: true,
            tilde_plus_reflection_generated: true,
        });
    }
    Ok((profiles, checks))
}
