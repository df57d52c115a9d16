use coxinv::involutions::{
    cube_decompositions, enumerate_involution_classes, negated_set, product_of_reflections, InvolutionClass,
};
use coxinv::rootsys::{Irreducible, RootSystem};

fn inventory(t: Irreducible) -> (RootSystem, Vec<InvolutionClass>) {
    let rs = RootSystem::build(t).unwrap();
    let (classes, _) = enumerate_involution_classes(&rs).unwrap();
    (rs, classes)
}

fn summary(classes: &[InvolutionClass]) -> Vec<(String, usize)> {
    classes.iter().map(|c| (c.label.clone(), c.class_size)).collect()
}

#[test]
fn reflections_count_half_the_roots() {
    for t in [Irreducible::E(6), Irreducible::F4, Irreducible::H(3), Irreducible::B(4), Irreducible::D(5)] {
        let (rs, classes) = inventory(t);
        let refl: usize = classes.iter().filter(|c| c.degree == 1).map(|c| c.class_size).sum();
        assert_eq!(refl, rs.num_roots() / 2, "{t}");
    }
}

#[test]
fn e7_degree_three_and_four() {
    let (rs, classes) = inventory(Irreducible::E(7));
    let find = |l: &str| classes.iter().find(|c| c.label == l).unwrap().class_size;
    assert_eq!(find("3"), 315);
    assert_eq!(find("3'"), 3780);
    assert_eq!(find("4"), 315);
    assert_eq!(find("4'"), 3780);
    assert_eq!(classes.iter().filter(|c| c.degree == 3).count(), 2);

    let (_, inv) = enumerate_involution_classes(&rs).unwrap();
    let label_of = |word: &[usize]| {
        let k = inv.class_of_key(&negated_set(&rs, &product_of_reflections(&rs, word))).unwrap();
        classes[k].label.clone()
    };
    // s3 s5 s7 and s2 s5 s7 in Bourbaki numbering.
    assert_eq!(label_of(&[2, 4, 6]), "3'");
    assert_eq!(label_of(&[1, 4, 6]), "3");
}

#[test]
fn e8_degree_four_split() {
    let (rs, classes) = inventory(Irreducible::E(8));
    let find = |l: &str| classes.iter().find(|c| c.label == l).unwrap().class_size;
    assert_eq!(find("4"), 3150);
    assert_eq!(find("4'"), 113_400);
    let (_, inv) = enumerate_involution_classes(&rs).unwrap();
    let top = rs.highest_root().unwrap();
    let rect = product_of_reflections(&rs, &[1, 4, 6, top]);
    // s1 s3 s5 s7 is not an involution (α1, α3 are joined); s1 s4 s6 s8
    // is the commuting product inside the A7 spanned by s_i, i ≠ 0, 2.
    assert!(!product_of_reflections(&rs, &[0, 2, 4, 6]).is_involution());
    let tetra = product_of_reflections(&rs, &[0, 3, 5, 7]);
    assert_eq!(classes[inv.class_of(&rs, &rect).unwrap()].label, "4");
    assert_eq!(classes[inv.class_of(&rs, &tetra).unwrap()].label, "4'");
    // u and -u are conjugate in degree 4.
    for c in classes.iter().filter(|c| c.degree == 4) {
        let minus = rs.neg_perm().compose(&c.representative);
        assert_eq!(inv.class_of(&rs, &minus), inv.class_of_key(&c.key));
    }
}

#[test]
fn f4_classes() {
    let (rs, classes) = inventory(Irreducible::F4);
    let s = summary(&classes);
    assert!(s.contains(&("1".into(), 12)));
    assert!(s.contains(&("1'".into(), 12)));
    for c in &classes {
        let cubes = cube_decompositions(&rs, &c.representative, c.degree);
        match c.label.as_str() {
            "2" => assert_eq!(cubes.len(), 2),
            "2'" => assert_eq!(cubes.len(), 1),
            _ => assert!(!cubes.is_empty()),
        }
    }
}

#[test]
fn d_split_classes() {
    for n in [4, 5, 6] {
        let (_, classes) = inventory(Irreducible::D(n));
        let split: Vec<&str> = classes.iter().map(|c| c.label.as_str()).filter(|l| l.ends_with(['+', '-'])).collect();
        if n % 2 == 0 {
            let b = n / 2;
            let mut got: Vec<String> = split.iter().map(|l| l.to_string()).collect();
            got.sort();
            assert_eq!(got, vec![format!("0,0,{b}+"), format!("0,0,{b}-")]);
        } else {
            assert!(split.is_empty());
        }
    }
}

#[test]
fn b_shapes_all_occur() {
    let n = 5;
    let (_, classes) = inventory(Irreducible::B(n));
    for a in 0..=n {
        for b in 0..=(n - a) / 2 {
            let label = format!("{a},{},{b}", n - a - 2 * b);
            assert!(classes.iter().any(|c| c.label == label), "{label}");
        }
    }
}
