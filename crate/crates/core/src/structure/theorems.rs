use std::collections::HashSet;

use num_bigint::BigUint;
use serde::Serialize;

use super::profile::{g_plus_minus, ClassAnalysis, Gamma};
use super::recognition::reflection_subgroup_type;
use crate::involutions::{cube_decompositions, ClassInventory};
use crate::permengine::{
    normalizer_of_reflection_subgroup, GammaStructure, Perm, PermGroup, QuotientGroup, RootSet,
};
use crate::rootsys::{CoxeterType, Irreducible, ReflectionSystem, RootSystem};

/// Size bound on `G_u^-` for the element-wise centralizer check.
pub const ENUMERATION_GATE: usize = 10_000;
/// Node budget of the complement search.
pub const COMPLEMENT_BUDGET: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    /// Exceeded a feasibility gate.
    Skipped,
    /// Search budget exhausted without a verdict.
    Undetermined,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub check: String,
    pub class: Option<String>,
    pub status: CheckStatus,
    pub detail: String,
}

impl CheckResult {
    fn new(check: &str, class: Option<&str>, status: CheckStatus, detail: impl Into<String>) -> Self {
        CheckResult { check: check.into(), class: class.map(str::to_string), status, detail: detail.into() }
    }

    pub(crate) fn verdict(check: &str, class: Option<&str>, ok: bool, detail: impl Into<String>) -> Self {
        let status = if ok { CheckStatus::Pass } else { CheckStatus::Fail };
        Self::new(check, class, status, detail)
    }

    pub fn failed(&self) -> bool {
        self.status == CheckStatus::Fail
    }
}

/// The images in `Γ` of involutions of degree at most 2 commuting with
/// `u` generate `Γ`. Reflections lie in `G_u^1`, so only products of two
/// orthogonal reflections are scanned.
pub fn theorem_1_1<S: ReflectionSystem + ?Sized>(sys: &S, u: &Perm, g1: &PermGroup, q: &QuotientGroup) -> bool {
    let target = q.order();
    if target == BigUint::from(1u32) {
        return true;
    }
    let npos = sys.num_positive();
    let refl: Vec<Perm> = (0..npos).map(|a| sys.reflection_perm(a)).collect();
    let mut images: Vec<Perm> = Vec::new();
    let mut cosets: HashSet<usize> = HashSet::new();
    for a in 0..npos {
        for b in a + 1..npos {
            if refl[a].apply(b) != b {
                continue;
            }
            let g = refl[a].compose(&refl[b]);
            if !g.commutes_with(u) || g1.contains(&g) {
                continue;
            }
            if cosets.insert(q.coset_of(&g)) {
                images.push(q.image(&g));
                if PermGroup::new(q.index(), images.iter().cloned()).order() == target {
                    return true;
                }
            }
        }
    }
    false
}

/// Lift of `g ∈ G_u` fixing the positive system of `Φ_u^1`, obtained by
/// multiplying by simple reflections of `Φ_u^1` on the left.
fn chamber_lift(rs: &RootSystem, simple: &[usize], g: &Perm) -> Perm {
    let mut g = g.clone();
    loop {
        let inv = g.inverse();
        match simple.iter().find(|&&a| !rs.is_positive(inv.apply(a))) {
            Some(&a) => g = rs.reflection(a).compose(&g),
            None => return g,
        }
    }
}

/// A generating set of `Γ` drawn from the generators of `G_u`.
fn gamma_generators(gu: &PermGroup, gamma: &Gamma) -> Vec<Perm> {
    let q = &gamma.quotient;
    let mut chosen: Vec<Perm> = Vec::new();
    let mut images: Vec<Perm> = Vec::new();
    let mut current = BigUint::from(1u32);
    for g in gu.generators() {
        let img = q.image(g);
        let trial = PermGroup::new(q.index(), images.iter().cloned().chain([img.clone()]));
        if trial.order() > current {
            current = trial.order();
            chosen.push(g.clone());
            images.push(img);
        }
    }
    chosen
}

/// Searches for a complement `X` of `G_u^1` in `G_u`.
pub fn find_complement(rs: &RootSystem, a: &ClassAnalysis) -> (CheckStatus, Option<PermGroup>) {
    let target = BigUint::from(a.gamma.order);
    if a.gamma.order == 1 {
        return (CheckStatus::Pass, Some(PermGroup::trivial(rs.num_roots())));
    }
    let gens = gamma_generators(&a.centralizer, &a.gamma);
    let simple: Vec<usize> =
        a.plus.diagram.simple.iter().chain(a.minus.diagram.simple.iter()).copied().collect();
    let lifts: Vec<Perm> = gens.iter().map(|g| chamber_lift(rs, &simple, g)).collect();
    let x = PermGroup::new(rs.num_roots(), lifts);
    if x.order() == target {
        return (CheckStatus::Pass, Some(x));
    }
    let Some(kernel) = a.g1.elements(ENUMERATION_GATE) else {
        return (CheckStatus::Skipped, None);
    };
    let mut nodes = 0usize;
    let mut chosen: Vec<Perm> = Vec::new();
    match search_lifts(&gens, &kernel, &target, &mut chosen, &mut nodes) {
        Some(found) => (CheckStatus::Pass, Some(found)),
        None if nodes >= COMPLEMENT_BUDGET => (CheckStatus::Undetermined, None),
        None => (CheckStatus::Fail, None),
    }
}

fn search_lifts(
    gens: &[Perm],
    kernel: &[Perm],
    target: &BigUint,
    chosen: &mut Vec<Perm>,
    nodes: &mut usize,
) -> Option<PermGroup> {
    let degree = gens[0].degree();
    if chosen.len() == gens.len() {
        let x = PermGroup::new(degree, chosen.iter().cloned());
        return (x.order() == *target).then_some(x);
    }
    let g = &gens[chosen.len()];
    for h in kernel {
        *nodes += 1;
        if *nodes >= COMPLEMENT_BUDGET {
            return None;
        }
        chosen.push(g.compose(h));
        let partial = PermGroup::new(degree, chosen.iter().cloned()).order();
        if partial <= *target && (target % &partial) == BigUint::from(0u32) {
            if let Some(x) = search_lifts(gens, kernel, target, chosen, nodes) {
                return Some(x);
            }
        }
        chosen.pop();
    }
    None
}

/// Restriction of `G_u` and `G_u^-` to the roots negated by `u`, and the
/// action on the lines they span.
struct MinusAction {
    on_roots: PermGroup,
    minus_on_roots: PermGroup,
    on_lines: PermGroup,
    minus_on_lines: PermGroup,
    line_of: Vec<usize>,
}

fn minus_action(rs: &RootSystem, a: &ClassAnalysis) -> MinusAction {
    let roots: Vec<usize> = a.minus.roots.iter().collect();
    let mut pos = vec![usize::MAX; rs.num_roots()];
    for (i, &r) in roots.iter().enumerate() {
        pos[r] = i;
    }
    let positives: Vec<usize> = roots.iter().copied().filter(|&r| rs.is_positive(r)).collect();
    let mut line_pos = vec![usize::MAX; rs.num_roots()];
    for (i, &r) in positives.iter().enumerate() {
        line_pos[r] = i;
        line_pos[rs.negative(r)] = i;
    }
    let restrict = |g: &Perm| {
        Perm::from_images(roots.iter().map(|&r| pos[g.apply(r)] as u16).collect()).expect("G_u preserves V_u^-")
    };
    let lines = |g: &Perm| {
        Perm::from_images(positives.iter().map(|&r| line_pos[g.apply(r)] as u16).collect())
            .expect("G_u permutes lines of V_u^-")
    };
    MinusAction {
        on_roots: PermGroup::new(roots.len(), a.centralizer.generators().iter().map(restrict)),
        minus_on_roots: PermGroup::new(roots.len(), a.minus.group.generators().iter().map(restrict)),
        on_lines: PermGroup::new(positives.len(), a.centralizer.generators().iter().map(lines)),
        minus_on_lines: PermGroup::new(positives.len(), a.minus.group.generators().iter().map(lines)),
        line_of: roots.iter().map(|&r| line_pos[r]).collect(),
    }
}

/// Per-class checks.
pub fn class_checks(rs: &RootSystem, group: &PermGroup, a: &ClassAnalysis) -> Vec<CheckResult> {
    let label = Some(a.class.label.as_str());
    let mut out = Vec::new();
    let gu = a.centralizer.order();
    let (gp, gm) = (a.plus.group.order(), a.minus.group.order());
    let (tp, tm) = (&a.tilde_plus.order, &a.tilde_minus.order);
    let gamma = BigUint::from(a.gamma.order);

    out.push(CheckResult::verdict(
        "2.1b",
        label,
        a.g1.order() == &gp * &gm,
        format!("|G_u^1| = {}, |G_u^+||G_u^-| = {}", a.g1.order(), &gp * &gm),
    ));

    let cubes = cube_decompositions(rs, &a.class.representative, a.class.degree);
    let cube_group = PermGroup::new(
        rs.num_roots(),
        cubes.iter().flat_map(|c| c.roots().iter().map(|&r| rs.reflection(r).clone())),
    );
    out.push(CheckResult::verdict(
        "2.1c",
        label,
        !cubes.is_empty() && cube_group.same_group(&a.minus.group),
        format!("{} cubes", cubes.len()),
    ));

    let normalizer = normalizer_of_reflection_subgroup(group, &a.minus.roots, rs.neg_perm(), |i| rs.reflection(i).clone());
    out.push(match normalizer {
        Ok(n) => CheckResult::verdict("2.3", label, n.same_group(&a.centralizer), format!("|N| = {}", n.order())),
        Err(e) => CheckResult::new("2.3", label, CheckStatus::Fail, e.to_string()),
    });

    let (status, x) = find_complement(rs, a);
    let detail = x.map(|x| format!("complement of order {}", x.order())).unwrap_or_default();
    out.push(CheckResult::new("2.4", label, status, detail));

    out.push(CheckResult::verdict(
        "2.5a",
        label,
        gu == &gm * tp && gu == &gp * tm,
        format!("|G_u| = {gu}, |G_u^-||~G_u^+| = {}, |G_u^+||~G_u^-| = {}", &gm * tp, &gp * tm),
    ));
    out.push(CheckResult::verdict(
        "2.5b",
        label,
        *tp == &gp * &gamma && *tm == &gm * &gamma,
        format!("|Gamma| = {gamma}"),
    ));

    let act = minus_action(rs, a);
    let kernel = act.on_roots.order() / act.on_lines.order();
    let ok27 = act.on_roots.order() == *tm && &kernel * act.minus_on_lines.order() == act.minus_on_roots.order();
    out.push(CheckResult::verdict(
        "2.7",
        label,
        ok27,
        format!("kernel on lines {kernel}, |G_u^-| = {}", act.minus_on_roots.order()),
    ));

    if gm > BigUint::from(ENUMERATION_GATE) {
        out.push(CheckResult::new("2.8", label, CheckStatus::Skipped, format!("|G_u^-| = {gm}")));
    } else {
        let mut ok = true;
        act.on_roots.bsgs().for_each_element(|g| {
            let trivial_on_lines = (0..g.degree()).all(|i| act.line_of[g.apply(i)] == act.line_of[i]);
            if trivial_on_lines && !act.minus_on_roots.contains(g) {
                ok = false;
            }
            ok
        });
        out.push(CheckResult::verdict("2.8", label, ok, "elements fixing every line of V_u^-"));
    }

    out.push(CheckResult::verdict(
        "2.9",
        label,
        a.tilde_plus.reflection_generated && a.tilde_minus.reflection_generated,
        format!("~G_u^- = {}, ~G_u^+ = {}", a.tilde_minus.diagram.ty, a.tilde_plus.diagram.ty),
    ));

    out.push(CheckResult::verdict(
        "1.1",
        label,
        theorem_1_1(rs, &a.class.representative, &a.g1, &a.gamma.quotient),
        format!("|Gamma| = {gamma}"),
    ));

    out.push(gamma_shape_check(rs.kind(), a.class.label.as_str(), &a.gamma.structure));
    out
}

/// `Γ_u` is symmetric, or symmetric times `C2` in type D.
pub fn gamma_shape_check(kind: Irreducible, label: &str, s: &GammaStructure) -> CheckResult {
    let ok = match s {
        GammaStructure::Sym(_) => true,
        GammaStructure::SymC2(_) | GammaStructure::C2xC2 => matches!(kind, Irreducible::D(_)),
        GammaStructure::Other(_) => false,
    };
    CheckResult::verdict("1.2", Some(label), ok, format!("Gamma = {s}"))
}

/// Connected pieces of a root subset under non-orthogonality.
fn components(rs: &RootSystem, roots: &RootSet) -> Vec<RootSet> {
    let mut left = *roots;
    let mut out = Vec::new();
    loop {
        let Some(start) = left.iter().next() else { break };
        let mut comp = RootSet::new();
        let mut stack = vec![start];
        comp.insert(start);
        while let Some(x) = stack.pop() {
            for y in left.iter() {
                if !comp.contains(y) && !rs.orthogonal(x, y) {
                    comp.insert(y);
                    stack.push(y);
                }
            }
        }
        for y in comp.iter() {
            left.remove(y);
        }
        out.push(comp);
    }
    out
}

/// Types reached from `Φ` after `steps` moves, each move replacing one
/// irreducible component by the roots orthogonal to its highest root.
pub fn chain_types(rs: &RootSystem, steps: usize) -> Vec<CoxeterType> {
    let mut states: Vec<RootSet> = vec![(0..rs.num_roots()).collect()];
    for _ in 0..steps {
        let mut next: Vec<RootSet> = Vec::new();
        for s in &states {
            for c in components(rs, s) {
                let top = c.iter().filter(|&r| rs.is_positive(r)).max().expect("component has positive roots");
                let mut t = *s;
                for r in c.iter() {
                    if !rs.orthogonal(top, r) {
                        t.remove(r);
                    }
                }
                if !next.contains(&t) {
                    next.push(t);
                }
            }
        }
        states = next;
    }
    let mut types: Vec<CoxeterType> = states
        .iter()
        .map(|s| reflection_subgroup_type(rs, s).expect("closed subsystem").ty)
        .collect();
    types.sort();
    types.dedup();
    types
}

/// Depth of the parabolic chain checked for each exceptional type.
fn chain_depth(kind: Irreducible) -> Option<usize> {
    match kind {
        Irreducible::E(6) => Some(4),
        Irreducible::E(7) => Some(3),
        Irreducible::E(8) => Some(4),
        _ => None,
    }
}

/// Whole-type checks: the parabolic chain for E6–E8, the completed
/// diagram description of `G_{s_0}^+`, and the dihedral witness in H4.
pub fn type_checks(rs: &RootSystem, inv: &ClassInventory, analyses: &[ClassAnalysis]) -> Vec<CheckResult> {
    let mut out = Vec::new();
    if let Some(depth) = chain_depth(rs.kind()) {
        for a in analyses.iter().filter(|a| a.class.degree <= depth) {
            let allowed = chain_types(rs, a.class.degree);
            let got = &a.plus.diagram.ty;
            out.push(CheckResult::verdict(
                "3.2",
                Some(&a.class.label),
                allowed.contains(got),
                format!(
                    "G_u^+ = {got}; chain gives {}",
                    allowed.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(" | ")
                ),
            ));
        }
    }
    if rs.kind().is_crystallographic() {
        let top = rs.highest_root().expect("crystallographic");
        let y = rs.extended_diagram_y().expect("crystallographic");
        let perp: RootSet = (0..rs.num_roots()).filter(|&r| rs.orthogonal(top, r)).collect();
        let parabolic: RootSet = (0..rs.num_roots())
            .filter(|&r| rs.root(r).iter().enumerate().all(|(i, c)| y.contains(&i) || num_traits::Zero::is_zero(c)))
            .collect();
        let ty = reflection_subgroup_type(rs, &perp).map(|d| d.ty.to_string()).unwrap_or_default();
        out.push(CheckResult::verdict("3.3", None, perp == parabolic, format!("G_s0^+ = {ty}")));
    }
    if rs.kind() == Irreducible::H(4) {
        out.push(h4_witness(rs));
    }
    let minus_one = rs.neg_perm();
    if rs.group().contains(minus_one) {
        for a in analyses {
            let other = inv
                .class_of(rs, &minus_one.compose(&a.class.representative))
                .and_then(|k| analyses.iter().find(|b| b.class.key == inv.classes[k].key));
            let ok = other.is_some_and(|b| {
                b.centralizer.order() == a.centralizer.order()
                    && b.plus.diagram.ty == a.minus.diagram.ty
                    && b.minus.diagram.ty == a.plus.diagram.ty
                    && b.tilde_plus.diagram.ty == a.tilde_minus.diagram.ty
                    && b.tilde_minus.diagram.ty == a.tilde_plus.diagram.ty
                    && b.gamma.structure == a.gamma.structure
            });
            out.push(CheckResult::verdict("duality", Some(&a.class.label), ok, "profile of -u swaps the two sides"));
        }
    }
    out
}

/// In H4 with diagram `a — x — y — z`, `u = xz` and `g = yuy`: `g`
/// centralizes `u`, conjugates `x` to `z`, and is not in `G_u^1`.
pub fn h4_witness(rs: &RootSystem) -> CheckResult {
    let (x, y, z) = (rs.reflection(1), rs.reflection(2), rs.reflection(3));
    let u = x.compose(z);
    let g = y.compose(&u).compose(y);
    let swaps = g.compose(x).compose(&g) == *z;
    let ok = match g_plus_minus(rs, &u) {
        Ok((plus, minus)) => {
            let g1 = plus.group.join(minus.group.generators());
            g.commutes_with(&u) && swaps && !g1.contains(&g)
        }
        Err(_) => false,
    };
    CheckResult::verdict("H4-witness", Some("2"), ok, "g = y u y with u = x z")
}
