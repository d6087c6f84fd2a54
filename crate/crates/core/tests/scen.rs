use std::collections::BTreeMap;
use std::sync::Arc;

use proptest::prelude::*;
use regmod::chartab::{dixon_character_table, faithful_on};
use regmod::ffla::{FieldSpec, Matrix};
use regmod::grp::catalog::heisenberg;
use regmod::grp::*;
use regmod::scen::*;

fn load(name: &str) -> ScenarioSpec {
    let path = format!("{}/../../data/scenarios/{name}.json", env!("CARGO_MANIFEST_DIR"));
    ScenarioSpec::from_json(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn order_histogram(g: &FiniteGroup) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for x in 0..g.order() {
        *h.entry(g.element_order(x)).or_insert(0) += 1;
    }
    h
}

fn fp(p: u64) -> FieldSpec {
    FieldSpec::module(p).unwrap()
}

#[test]
fn extraspecial_examples() {
    let e = build_extraspecial(3, 1, Sign::Plus).unwrap();
    assert_eq!(e.group.order(), 27);
    assert_eq!(e.group.exponent(), 3);
    assert_eq!(center(&e.group).order(), 3);
    // same invariants as the unitriangular model
    let h = heisenberg(3);
    assert_eq!(order_histogram(&e.group), order_histogram(&h));
    assert_eq!(conjugacy_classes(&e.group).len(), conjugacy_classes(&h).len());

    let plus = build_extraspecial(2, 1, Sign::Plus).unwrap();
    let minus = build_extraspecial(2, 1, Sign::Minus).unwrap();
    assert_eq!(order_histogram(&plus.group).get(&4), Some(&2));
    assert_eq!(order_histogram(&minus.group).get(&4), Some(&6));

    let big = build_extraspecial(2, 3, Sign::Plus).unwrap();
    assert_eq!(big.group.order(), 128);
    assert_eq!(conjugacy_classes(&big.group).len(), (1 << 6) + 1);
    assert!(matches!(build_extraspecial(7, 2, Sign::Plus), Err(ScenError::Cap { .. })));
}

#[test]
fn extraspecial_class_counts() {
    // p^{2n} + p − 1 classes
    for (p, n, s) in
        [(2, 2, Sign::Minus), (2, 2, Sign::Plus), (3, 2, Sign::Plus), (5, 1, Sign::Plus), (2, 4, Sign::Minus)]
    {
        let e = build_extraspecial(p, n, s).unwrap();
        let want = (p as usize).pow(2 * n as u32) + p as usize - 1;
        assert_eq!(conjugacy_classes(&e.group).len(), want, "p = {p}, n = {n}");
    }
}

#[test]
fn lift_examples() {
    let e = build_extraspecial(3, 1, Sign::Plus).unwrap();
    let id = lift_isometry(&e, &Matrix::identity(fp(3), 2)).unwrap();
    assert!(id.images.iter().enumerate().all(|(i, &x)| i == x));
    let neg = lift_isometry(&e, &Matrix::identity(fp(3), 2).scale(2)).unwrap();
    assert_eq!(neg.order, 2);
    for x in 0..27 {
        let (a, v) = e.coords(x);
        let w: Vec<u64> = v.iter().map(|&c| (3 - c) % 3).collect();
        assert_eq!(neg.images[x], e.index(a, &w));
    }
    let not_iso = Matrix::from_rows(fp(3), &[vec![1, 0], vec![0, 2]]);
    assert!(matches!(lift_isometry(&e, &not_iso), Err(ScenError::NotIsometry(_))));

    let big = build_extraspecial(2, 3, Sign::Plus).unwrap();
    let sigma = Matrix::from_rows(
        fp(2),
        &[
            vec![0, 1, 0, 0, 0, 0],
            vec![0, 0, 1, 0, 0, 0],
            vec![1, 1, 0, 0, 0, 0],
            vec![0, 0, 0, 1, 1, 0],
            vec![0, 0, 0, 0, 0, 1],
            vec![0, 0, 0, 1, 0, 0],
        ],
    );
    let lift = lift_isometry(&big, &sigma).unwrap();
    assert_eq!(lift.order, 7);
    // exhaustive homomorphism check, independent of verify_lift
    let g = &big.group;
    for x in 0..128 {
        for y in 0..128 {
            assert_eq!(lift.images[g.mul(x, y)], g.mul(lift.images[x], lift.images[y]));
        }
    }
}

#[test]
fn e0_assembly_and_hypotheses() {
    let s = assemble_scenario(&load("e0")).unwrap();
    assert_eq!(s.ga.order(), 54);
    let z = s.extraspecial.center();
    let zg = center(&s.ga);
    assert!(z.elements().iter().all(|&x| zg.contains(x)));
    let h = validate_theorem_hypotheses(&s.ga, &s.embeddings, 3, 2, 0).unwrap();
    assert!(h.all_hold, "{h:#?}");
}

#[test]
fn e0_theorem() {
    let s = assemble_scenario(&load("e0")).unwrap();
    let t = run_theorem_check(s.ga.clone(), &s.embeddings, 0).unwrap();
    assert!(t.summary && t.r_subclaim && !t.vacuous);
    let faithful: Vec<&CharacterVerdict> = t.characters.iter().filter(|c| c.faithful_on_p).collect();
    assert_eq!(faithful.len(), 4);
    for c in faithful {
        assert_eq!(c.degree, 3);
        let r = c.r.as_ref().unwrap();
        assert!(r.multiplicities.iter().all(|&m| m >= 1));
        assert_eq!(r.multiplicities.iter().sum::<i64>(), 3);
    }
}

#[test]
fn e1_instance() {
    let s = assemble_scenario(&load("e1")).unwrap();
    assert_eq!(s.ga.order(), 2688);
    let h = validate_theorem_hypotheses(&s.ga, &s.embeddings, 2, 7, 0).unwrap();
    assert!(h.a.holds && h.b.holds && h.c.holds && h.d.holds, "{h:#?}");
    assert!(h.c.per_section_a_pr.holds && h.c.per_section_a_rprime.holds && h.c.section_module_faithful);
    let t = run_theorem_check(s.ga.clone(), &s.embeddings, 0).unwrap();
    assert!(t.summary && !t.vacuous);
    let mut degrees: Vec<usize> = t.characters.iter().filter(|c| c.faithful_on_p).map(|c| c.degree).collect();
    degrees.sort_unstable();
    assert_eq!(degrees, vec![8, 8, 8, 24, 24]);
    for c in t.characters.iter().filter(|c| c.faithful_on_p) {
        assert!(c.a.as_ref().unwrap().multiplicities.iter().all(|&m| m >= 1));
    }
}

#[test]
fn negative_controls() {
    let s = assemble_scenario(&load("fermat_2_5")).unwrap();
    assert_eq!(s.ga.order(), 640);
    let h = validate_theorem_hypotheses(&s.ga, &s.embeddings, 2, 5, 0).unwrap();
    assert!(!h.d.holds && !h.all_hold);

    let s = assemble_scenario(&load("noncyclic")).unwrap();
    let h = validate_theorem_hypotheses(&s.ga, &s.embeddings, 3, 2, 0).unwrap();
    assert!(h.c.decomposition.holds);
    assert!(!h.c.a_r_cyclic.holds && !h.c.holds);
    assert!(!h.a.holds && !h.b.holds);
}

#[test]
fn a_must_normalize_r() {
    let mut spec = load("e0");
    spec.p = 2;
    spec.r = 3;
    spec.p_spec = PSpec { kind: PKind::Extraspecial, n: 1, sign: Sign::Plus };
    spec.expected_orders.clear();
    spec.r_spec = ActorSpec {
        characteristic: None,
        generators: vec![GeneratorSpec::Permutation(vec![1, 2, 0, 3])],
        isometry_images: vec![vec![vec![1, 0], vec![0, 1]]],
    };
    spec.a_spec = ActorSpec {
        characteristic: None,
        generators: vec![GeneratorSpec::Permutation(vec![0, 1, 3, 2])],
        isometry_images: vec![vec![vec![1, 0], vec![0, 1]]],
    };
    assert!(matches!(assemble_scenario(&spec), Err(ScenError::Assembly(_))));
    spec.a_spec.generators = vec![GeneratorSpec::Permutation(vec![1, 0, 2, 3])];
    let s = assemble_scenario(&spec).unwrap();
    assert_eq!(s.ga.order(), 48);
}

#[test]
fn declared_orders_are_checked() {
    let mut spec = load("e0");
    spec.expected_orders.insert("GA".into(), 55);
    assert!(matches!(assemble_scenario(&spec), Err(ScenError::Assembly(_))));
    spec.expected_orders.insert("XX".into(), 1);
    assert!(assemble_scenario(&spec).is_err());
    assert!(ScenarioSpec::from_json("{\"p\": 2").is_err());
}

#[test]
fn vacuous_when_no_character_is_faithful_on_p() {
    let v4 = direct_product(&FiniteGroup::cyclic(2).unwrap(), &FiniteGroup::cyclic(2).unwrap()).unwrap();
    let g = Arc::new(direct_product(&v4, &FiniteGroup::cyclic(3).unwrap()).unwrap());
    let emb = Embeddings {
        p: Subgroup::from_elements(&g, &[0, 1, 2, 3]).unwrap(),
        r: Subgroup::from_elements(&g, &[0, 4, 8]).unwrap(),
        a: Subgroup::trivial(&g),
    };
    let t = run_theorem_check(g, &emb, 0).unwrap();
    assert!(t.vacuous && t.summary && t.faithful_count == 0);
}

#[test]
fn reports_are_stable() {
    let s = assemble_scenario(&load("e0")).unwrap();
    let a = serde_json::to_string(&validate_theorem_hypotheses(&s.ga, &s.embeddings, 3, 2, 5).unwrap()).unwrap();
    let b = serde_json::to_string(&validate_theorem_hypotheses(&s.ga, &s.embeddings, 3, 2, 5).unwrap()).unwrap();
    assert_eq!(a, b);
    let t = dixon_character_table(s.ga.clone(), 1).unwrap();
    let u = dixon_character_table(s.ga.clone(), 99).unwrap();
    for i in 0..t.len() {
        assert!(t.character(i).iter().zip(u.character(i)).all(|(x, y)| x.equals(y)));
        assert_eq!(faithful_on(&t, i, &s.embeddings.p), faithful_on(&u, i, &s.embeddings.p));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// SL(2, p) is the isometry group of the alternating form for n = 1.
    #[test]
    fn special_linear_matrices_lift(a in 0u64..5, b in 0u64..5, c in 0u64..5, pi in 0usize..2) {
        let p = [3u64, 5][pi];
        let f = fp(p);
        let (a, b, c) = (a % p, b % p, c % p);
        prop_assume!(a != 0);
        // d = (1 + bc)/a gives determinant 1
        let d = f.mul(f.add(1, f.mul(b, c)), f.inv(a).unwrap());
        let sigma = Matrix::from_rows(f, &[vec![a as i64, b as i64], vec![c as i64, d as i64]]);
        let e = build_extraspecial(p, 1, Sign::Plus).unwrap();
        let lift = lift_isometry(&e, &sigma).unwrap();
        let o = sigma.multiplicative_order(1000).unwrap() as usize;
        if !o.is_multiple_of(p as usize) {
            prop_assert_eq!(lift.order, o);
        }
        let scaled = sigma.scale(2);
        prop_assert!(p == 3 || !is_isometry(&e, &scaled));
    }
}
