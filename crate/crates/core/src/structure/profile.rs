use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use super::recognition::{diagram_of, reflection_subgroup_type, simple_subset, RecognizedDiagram};
use crate::error::{Error, Result};
use crate::exactalg::{Mat, QSqrt5};
use crate::involutions::{negated_set, InvolutionClass};
use crate::permengine::{fingerprint, orbit_stabilizer, ByConjugation, GammaStructure, Perm, PermGroup, QuotientGroup, RootSet};
use crate::rootsys::{ReflectionSystem, RootSystem};

/// Eigenspace of an involution.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Plus,
    Minus,
}

impl Side {
    pub fn sign(self) -> i64 {
        match self {
            Side::Plus => 1,
            Side::Minus => -1,
        }
    }
}

/// A reflection subgroup together with its root set and diagram.
#[derive(Clone, Debug)]
pub struct ParabolicPart {
    pub roots: RootSet,
    pub group: PermGroup,
    pub diagram: RecognizedDiagram,
}

/// Stabilizer of `u` under conjugation. `known` may list elements already
/// known to commute with `u`.
pub fn centralizer(group: &PermGroup, u: &Perm, known: &[Perm]) -> PermGroup {
    orbit_stabilizer(&ByConjugation, group, u.clone(), known).1
}

fn parabolic<S: ReflectionSystem + ?Sized>(sys: &S, roots: RootSet) -> Result<ParabolicPart> {
    let diagram = reflection_subgroup_type(sys, &roots)?;
    let group = PermGroup::new(sys.num_roots(), diagram.simple.iter().map(|&b| sys.reflection_perm(b)));
    Ok(ParabolicPart { roots, group, diagram })
}

/// The reflection subgroups generated by roots fixed by `u` and by roots
/// negated by `u`, in that order.
pub fn g_plus_minus<S: ReflectionSystem + ?Sized>(sys: &S, u: &Perm) -> Result<(ParabolicPart, ParabolicPart)> {
    let plus: RootSet = (0..sys.num_roots()).filter(|&i| u.apply(i) == i).collect();
    let minus = negated_set(sys, u);
    Ok((parabolic(sys, plus)?, parabolic(sys, minus)?))
}

/// Image of the centralizer on one eigenspace.
#[derive(Clone, Debug)]
pub struct TildeGroup {
    pub side: Side,
    /// Number of distinct nonzero projections of roots to the eigenspace.
    pub num_points: usize,
    pub order: BigUint,
    pub diagram: RecognizedDiagram,
    /// Order of the subgroup generated by the reflections of the image
    /// equals the order of the image.
    pub reflection_generated: bool,
}

fn half(v: Vec<QSqrt5>) -> Vec<QSqrt5> {
    let h = QSqrt5::from_frac(1, 2);
    v.into_iter().map(|x| x.mul_ref(&h)).collect()
}

fn first_nonzero(v: &[QSqrt5]) -> Option<&QSqrt5> {
    v.iter().find(|x| !x.is_zero())
}

fn line_key(v: &[QSqrt5]) -> Vec<QSqrt5> {
    let lead = first_nonzero(v).expect("nonzero vector").clone();
    v.iter().map(|x| x.clone() / lead.clone()).collect()
}

/// Image of `gu` (the centralizer of `u`) acting on the `side` eigenspace.
///
/// The image is realised as a permutation group on the projections of the
/// roots. Its reflections are the images of `s_α` with `uα = ±α` and of
/// `s_α s_{uα}` with `α ⊥ uα`; each one is confirmed to be a reflection
/// on the eigenspace by a rank computation.
pub fn tilde_group(rs: &RootSystem, u: &Perm, gu: &PermGroup, side: Side) -> Result<TildeGroup> {
    let n = rs.num_roots();
    let sign = QSqrt5::from_int(side.sign());
    let mut index: HashMap<Vec<QSqrt5>, usize> = HashMap::new();
    let mut vectors: Vec<Vec<QSqrt5>> = Vec::new();
    let mut root_of_point: Vec<usize> = Vec::new();
    let mut point_of_root: Vec<Option<usize>> = vec![None; n];
    for a in 0..n {
        let b = u.apply(a);
        let v = half(rs.root(a).iter().zip(rs.root(b)).map(|(x, y)| x + &sign.mul_ref(y)).collect());
        if v.iter().all(Zero::is_zero) {
            continue;
        }
        let next = vectors.len();
        let p = *index.entry(v.clone()).or_insert_with(|| {
            vectors.push(v);
            root_of_point.push(a);
            next
        });
        point_of_root[a] = Some(p);
    }
    let np = vectors.len();
    let on_points = |g: &Perm| -> Perm {
        let images = root_of_point
            .iter()
            .map(|&r| point_of_root[g.apply(r)].expect("centralizer preserves projections") as u16)
            .collect();
        Perm::from_images(images).expect("projection action is a bijection")
    };
    let image = PermGroup::new(np, gu.generators().iter().map(on_points));
    let order = image.order();

    let mut line_of_point: Vec<usize> = Vec::with_capacity(np);
    let mut line_ids: HashMap<Vec<QSqrt5>, usize> = HashMap::new();
    for v in &vectors {
        let k = line_ids.len();
        line_of_point.push(*line_ids.entry(line_key(v)).or_insert(k));
    }
    let is_positive = |p: usize| first_nonzero(&vectors[p]).is_some_and(|x| x.signum() > 0);

    // One candidate reflection per line: (positive point, element).
    let mut cand_of_line: HashMap<usize, (usize, Perm)> = HashMap::new();
    let mut order_of_lines: Vec<usize> = Vec::new();
    for a in 0..rs.num_positive() {
        let b = u.apply(a);
        let along = match side {
            Side::Plus => b == a,
            Side::Minus => b == rs.negative(a),
        };
        let elem = if along {
            rs.reflection(a).clone()
        } else if b != a && b != rs.negative(a) && rs.orthogonal(a, b) {
            rs.reflection(a).compose(rs.reflection(b))
        } else {
            continue;
        };
        let p = point_of_root[a].expect("candidate has a nonzero projection");
        let line = line_of_point[p];
        if cand_of_line.contains_key(&line) {
            continue;
        }
        let pos = if is_positive(p) { p } else { point_of_root[rs.negative(a)].unwrap() };
        cand_of_line.insert(line, (pos, elem));
        order_of_lines.push(line);
    }

    let mu = rs.matrix_of(u);
    let eigen = &mu - &Mat::identity(rs.rank()).scale(&sign);
    let basis = eigen.kernel_basis();
    let mut cand_perms: HashMap<usize, Perm> = HashMap::new();
    for &line in &order_of_lines {
        let (pos, elem) = &cand_of_line[&line];
        let mg = rs.matrix_of(elem);
        let moved: Vec<Vec<QSqrt5>> = basis
            .iter()
            .map(|v| mg.mul_vec(v).iter().zip(v).map(|(x, y)| x - y).collect())
            .collect();
        let normal = &vectors[*pos];
        let flipped: Vec<QSqrt5> = mg.mul_vec(normal);
        if Mat::from_rows(moved).rank() != 1 || flipped.iter().zip(normal).any(|(x, y)| *x != -y.clone()) {
            return Err(Error::Violation(format!("candidate on line {line} is not a reflection of the eigenspace")));
        }
        cand_perms.insert(line, on_points(elem));
    }

    let positives: Vec<usize> = order_of_lines.iter().map(|l| cand_of_line[l].0).collect();
    for &l in &order_of_lines {
        let c = &cand_perms[&l];
        if positives.iter().any(|&q| !cand_perms.contains_key(&line_of_point[c.apply(q)])) {
            return Err(Error::Violation("reflection normals are not closed".into()));
        }
    }
    let simple = simple_subset(&positives, is_positive, |p| cand_perms[&line_of_point[p]].clone());
    let gens: Vec<Perm> = simple.iter().map(|&p| cand_perms[&line_of_point[p]].clone()).collect();
    let diagram = diagram_of(simple, &gens)?;
    let generated = PermGroup::new(np, order_of_lines.iter().map(|l| cand_perms[l].clone())).order();
    if generated != diagram.ty.order() {
        return Err(Error::Violation(format!(
            "reflections of the image have type {} but generate a group of order {generated}",
            diagram.ty
        )));
    }
    Ok(TildeGroup { side, num_points: np, reflection_generated: generated == order, order, diagram })
}

/// `Γ_u = G_u / G_u^1` and its isomorphism type.
#[derive(Clone, Debug)]
pub struct Gamma {
    pub quotient: QuotientGroup,
    pub order: usize,
    pub structure: GammaStructure,
}

pub fn gamma(gu: &PermGroup, g1: &PermGroup) -> Result<Gamma> {
    let quotient = QuotientGroup::new(gu, g1)?;
    let order = quotient.order().to_usize().expect("small quotient");
    let structure = fingerprint(quotient.group())?;
    Ok(Gamma { quotient, order, structure })
}

/// Everything computed for one involution class.
#[derive(Clone, Debug)]
pub struct ClassAnalysis {
    pub class: InvolutionClass,
    pub centralizer: PermGroup,
    pub plus: ParabolicPart,
    pub minus: ParabolicPart,
    /// `G_u^1`, generated by `G_u^+` and `G_u^-`.
    pub g1: PermGroup,
    pub tilde_plus: TildeGroup,
    pub tilde_minus: TildeGroup,
    pub gamma: Gamma,
}

pub fn analyze_class(rs: &RootSystem, group: &PermGroup, class: &InvolutionClass) -> Result<ClassAnalysis> {
    let u = &class.representative;
    let (plus, minus) = g_plus_minus(rs, u)?;
    let known: Vec<Perm> = plus.group.generators().iter().chain(minus.group.generators()).cloned().collect();
    let gu = centralizer(group, u, &known);
    if gu.order() * BigUint::from(class.class_size) != group.order() {
        return Err(Error::Violation(format!(
            "class {}: |G_u| |class| differs from |G|",
            class.label
        )));
    }
    let g1 = PermGroup::new(rs.num_roots(), known);
    let tilde_plus = tilde_group(rs, u, &gu, Side::Plus)?;
    let tilde_minus = tilde_group(rs, u, &gu, Side::Minus)?;
    let gamma = gamma(&gu, &g1)?;
    Ok(ClassAnalysis { class: class.clone(), centralizer: gu, plus, minus, g1, tilde_plus, tilde_minus, gamma })
}
