use coxinv::exactalg::Mat;
use coxinv::involutions::{enumerate_dihedral_classes, enumerate_involution_classes};
use coxinv::rootsys::{f2_rank, mod2_pairing, mod2_vector, BuildOptions, CoxeterType, DihedralModel, Irreducible, Mod2Mode, RootSystem};
use coxinv::structure::{analyze, analyze_classes, chain_types, dihedral_profiles, CentralizerProfile};
use coxinv::Scalar;

fn ty(s: &str) -> CoxeterType {
    s.parse().unwrap()
}

/// Dimension of the subspace of `V_u^+` fixed by every generator of `G_u`.
fn fixed_dimension_in_plus_space(rs: &RootSystem, degree: usize, label: &str) -> usize {
    let (analyses, _) = analyze_classes(rs).unwrap();
    let a = analyses.iter().find(|a| a.class.degree == degree && a.class.label == label).unwrap();
    let id = Mat::<Scalar>::identity(rs.rank());
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    let gens = a.centralizer.generators().iter().chain(std::iter::once(&a.class.representative));
    for g in gens {
        let m = &rs.matrix_of(g) - &id;
        rows.extend((0..m.rows()).map(|i| m.row(i).to_vec()));
    }
    Mat::from_rows(rows).kernel_basis().len()
}

#[test]
fn e6_degree_two_image_on_plus_space_fixes_a_line() {
    // A reflection group of rank 4 on the four-dimensional space would fix
    // nothing; a fixed line forces rank at most 3.
    let e6 = RootSystem::build(Irreducible::E(6)).unwrap();
    assert_eq!(fixed_dimension_in_plus_space(&e6, 2, "2"), 1);
    let e7 = RootSystem::build(Irreducible::E(7)).unwrap();
    assert_eq!(fixed_dimension_in_plus_space(&e7, 2, "2"), 0);
}

#[test]
fn parabolic_chains() {
    let e6 = RootSystem::build(Irreducible::E(6)).unwrap();
    let got: Vec<Vec<CoxeterType>> = (1..=4).map(|k| chain_types(&e6, k)).collect();
    assert_eq!(got, [vec![ty("A5")], vec![ty("A3")], vec![ty("A1")], vec![ty("1")]]);
    let e8 = RootSystem::build(Irreducible::E(8)).unwrap();
    let got: Vec<Vec<CoxeterType>> = (1..=4).map(|k| chain_types(&e8, k)).collect();
    let mut last = vec![ty("D4"), ty("(A1)^4")];
    last.sort();
    assert_eq!(got, [vec![ty("E7")], vec![ty("D6")], vec![ty("A1xD4")], last]);
    let e7 = RootSystem::build(Irreducible::E(7)).unwrap();
    assert_eq!(chain_types(&e7, 2), [ty("A1xD4")]);
}

fn shape(p: &CentralizerProfile) -> (usize, String, [String; 5]) {
    (
        p.degree,
        p.order_factored.clone(),
        [
            p.g_minus.to_string(),
            p.tilde_g_minus.to_string(),
            p.g_plus.to_string(),
            p.tilde_g_plus.to_string(),
            p.gamma.to_string(),
        ],
    )
}

#[test]
fn dihedral_model_agrees_with_root_systems() {
    for (m, t) in [(3, Irreducible::A(2)), (4, Irreducible::B(2)), (6, Irreducible::G2)] {
        let (model_profiles, checks) = dihedral_profiles(&DihedralModel::new(m).unwrap()).unwrap();
        assert!(checks.iter().all(|c| !c.failed()), "I2({m})");
        let report = analyze(t, BuildOptions::default(), false).unwrap();
        let mut a: Vec<_> = model_profiles.iter().map(shape).collect();
        let mut b: Vec<_> = report.profiles.iter().map(shape).collect();
        a.sort();
        b.sort();
        assert_eq!(a, b, "I2({m}) against {t}");
    }
}

#[test]
fn dihedral_class_sizes() {
    for m in 3..=12 {
        let model = DihedralModel::new(m).unwrap();
        let (classes, _) = enumerate_dihedral_classes(&model);
        let reflections: usize = classes.iter().filter(|c| c.degree == 1).map(|c| c.class_size).sum();
        assert_eq!(reflections, m);
        assert_eq!(classes.len(), if m % 2 == 0 { 4 } else { 2 });
    }
}

#[test]
fn e7_mod_two_form_is_nondegenerate() {
    let rs = RootSystem::build(Irreducible::E(7)).unwrap();
    let positives: Vec<usize> = (0..rs.num_positive()).collect();
    let images: Vec<Vec<u8>> =
        positives.iter().map(|&i| mod2_vector(&rs, i, Mod2Mode::RootModTwoWeight).unwrap()).collect();
    let mut distinct = images.clone();
    distinct.sort();
    distinct.dedup();
    // The 63 reflections fill the nonzero vectors of a six-dimensional space.
    assert_eq!(distinct.len(), 63);
    assert_eq!(f2_rank(&images), 6);
    for &i in &positives {
        assert_eq!(mod2_pairing(&rs, i, i).unwrap(), 0, "alternating");
        assert!(positives.iter().any(|&j| mod2_pairing(&rs, i, j).unwrap() == 1), "radical contains {i}");
        for &j in &positives {
            assert_eq!(mod2_pairing(&rs, i, j).unwrap(), mod2_pairing(&rs, j, i).unwrap());
        }
    }
}

#[test]
fn class_sizes_sum_to_involution_count() {
    for t in [Irreducible::H(3), Irreducible::F4, Irreducible::E(6)] {
        let rs = RootSystem::build(t).unwrap();
        let (classes, inv) = enumerate_involution_classes(&rs).unwrap();
        assert_eq!(classes.iter().map(|c| c.class_size).sum::<usize>(), inv.total_involutions(), "{t}");
    }
}

#[test]
fn reports_are_deterministic() {
    for t in [Irreducible::D(5), Irreducible::H(4), Irreducible::I2(8)] {
        let a = serde_json::to_string(&analyze(t, BuildOptions::default(), true).unwrap()).unwrap();
        let b = serde_json::to_string(&analyze(t, BuildOptions::default(), true).unwrap()).unwrap();
        assert_eq!(a, b, "{t}");
    }
}

mod order_identities {
    use super::*;
    use coxinv::classicmodels::{predict_profile_b, predict_profile_d};
    use num_bigint::BigUint;
    use proptest::prelude::*;

    fn check(order: &BigUint, gm: &CoxeterType, tgm: &CoxeterType, gp: &CoxeterType, tgp: &CoxeterType, gamma: usize) {
        let gamma = BigUint::from(gamma);
        assert_eq!(*order, gm.order() * tgp.order());
        assert_eq!(*order, gp.order() * tgm.order());
        assert_eq!(tgm.order(), gm.order() * &gamma);
        assert_eq!(tgp.order(), gp.order() * &gamma);
    }

    const TYPES: [Irreducible; 8] = [
        Irreducible::A(4),
        Irreducible::B(4),
        Irreducible::D(5),
        Irreducible::H(3),
        Irreducible::H(4),
        Irreducible::F4,
        Irreducible::E(6),
        Irreducible::I2(9),
    ];

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn computed_profiles(k in 0..TYPES.len(), pick in any::<prop::sample::Index>()) {
            let r = analyze(TYPES[k], BuildOptions::default(), false).unwrap();
            let p = &r.profiles[pick.index(r.profiles.len())];
            check(&p.order, &p.g_minus, &p.tilde_g_minus, &p.g_plus, &p.tilde_g_plus, p.gamma_order);
        }

        #[test]
        fn closed_form_profiles(n in 4usize..=9, a in 0usize..=9, p in 0usize..=4, split in any::<bool>()) {
            prop_assume!(a + 2 * p <= n);
            let f = n - a - 2 * p;
            let b = predict_profile_b(n, a, f, p).unwrap();
            check(&b.order, &b.g_minus, &b.tilde_g_minus, &b.g_plus, &b.tilde_g_plus, b.gamma.order());
            if a % 2 == 0 {
                let s = (a == 0 && f == 0).then_some(split);
                let d = predict_profile_d(n, a, f, p, s).unwrap();
                check(&d.order, &d.g_minus, &d.tilde_g_minus, &d.g_plus, &d.tilde_g_plus, d.gamma.order());
            }
        }
    }
}
