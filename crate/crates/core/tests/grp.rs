use proptest::prelude::*;
use regmod::grp::catalog::{dihedral8, frobenius21, heisenberg, quaternion8, symmetric3};
use regmod::grp::*;

/// Brute-force center, for cross-checking.
fn center_oracle(g: &FiniteGroup) -> Vec<usize> {
    (0..g.order()).filter(|&x| (0..g.order()).all(|y| g.mul(x, y) == g.mul(y, x))).collect()
}

/// Brute-force derived subgroup: closure of all commutators.
fn derived_oracle(g: &FiniteGroup) -> usize {
    let mut comms = Vec::new();
    for x in 0..g.order() {
        for y in 0..g.order() {
            comms.push(g.commutator(x, y));
        }
    }
    Subgroup::generated(g, &comms).order()
}

/// Brute-force class sizes by conjugating each element with every element.
fn class_sizes_oracle(g: &FiniteGroup) -> Vec<usize> {
    let mut seen = vec![false; g.order()];
    let mut sizes = Vec::new();
    for x in 0..g.order() {
        if seen[x] {
            continue;
        }
        let mut class: Vec<usize> = (0..g.order()).map(|t| g.conj(x, t)).collect();
        class.sort_unstable();
        class.dedup();
        for &y in &class {
            seen[y] = true;
        }
        sizes.push(class.len());
    }
    sizes.sort_unstable();
    sizes
}

fn sorted_sizes(c: &ConjugacyData) -> Vec<usize> {
    let mut s = c.sizes.clone();
    s.sort_unstable();
    s
}

#[test]
fn s3_invariants() {
    let g = symmetric3();
    let inv = group_invariants(&g);
    assert!(inv.center.is_trivial());
    assert_eq!(inv.derived.order(), 3);
    assert_eq!(derived_oracle(&g), 3);
    assert_eq!(inv.exponent, 6);
    assert_eq!(inv.nilpotency_class, None);
    assert_eq!(sorted_sizes(&conjugacy_classes(&g)), vec![1, 2, 3]);
    // Φ(S₃) = 1 through the small-order fallback
    assert!(inv.frattini.unwrap().is_trivial());
}

#[test]
fn q8_invariants() {
    let g = quaternion8();
    assert_eq!(g.order(), 8);
    let inv = group_invariants(&g);
    assert_eq!(inv.center.order(), 2);
    assert_eq!(inv.center.elements(), center_oracle(&g).as_slice());
    assert_eq!(inv.nilpotency_class, Some(2));
    assert_eq!(inv.exponent, 4);
    assert_eq!(inv.frattini.as_ref().unwrap(), &inv.center);
    assert_eq!(brute_force_frattini(&g), inv.center);
    let cc = conjugacy_classes(&g);
    assert_eq!(sorted_sizes(&cc), vec![1, 1, 2, 2, 2]);
    let i = (0..8).find(|&x| g.element_order(x) == 4).unwrap();
    let ci = centralizer(&g, &[i]);
    assert_eq!(ci.order(), 4);
    assert_eq!(ci, Subgroup::generated(&g, &[i]));
}

#[test]
fn abelian_invariants() {
    let g = FiniteGroup::cyclic(12).unwrap();
    let inv = group_invariants(&g);
    assert_eq!(inv.nilpotency_class, Some(1));
    assert!(inv.derived.is_trivial());
    assert_eq!(conjugacy_classes(&g).len(), 12);
    // Φ(C₁₂) = ⟨6⟩ by brute force: maximal subgroups ⟨2⟩ and ⟨3⟩
    assert_eq!(inv.frattini.unwrap().order(), 2);
}

#[test]
fn frattini_formula_agrees_with_lattice() {
    for g in [dihedral8(), quaternion8(), heisenberg(3), FiniteGroup::cyclic(8).unwrap()] {
        assert_eq!(frattini_subgroup(&g).unwrap(), brute_force_frattini(&g));
    }
}

#[test]
fn frattini_unsupported_beyond_fallback() {
    let s3 = symmetric3();
    let big = direct_product(&FiniteGroup::cyclic(70).unwrap(), &s3).unwrap();
    assert!(matches!(frattini_subgroup(&big), Err(GroupError::Unsupported(_))));
}

#[test]
fn conjugacy_class_data() {
    let g = symmetric3();
    let cc = conjugacy_classes(&g);
    assert_eq!(cc.reps[0], 0);
    for c in 0..cc.len() {
        assert_eq!(cc.reps[c], *cc.members(c).iter().min().unwrap());
        assert_eq!(g.order() % cc.sizes[c], 0);
        let o = cc.class_order(c);
        assert_eq!(cc.power_maps[c][o % cc.exponent], 0);
        assert_eq!(cc.power_maps[c][1], c);
    }
    assert_eq!(cc.sizes.iter().sum::<usize>(), 6);
    assert_eq!(sorted_sizes(&cc), class_sizes_oracle(&g));
}

#[test]
fn quotients() {
    let g = heisenberg(3);
    let z = center(&g);
    assert_eq!(z.order(), 3);
    let (q, proj) = quotient_group(&g, &z).unwrap();
    assert_eq!(q.order(), 9);
    assert_eq!(q.exponent(), 3);
    assert!(q.is_abelian());
    assert!(proj.is_surjective());
    assert_eq!(proj.kernel(&g), z);

    let (t, _) = quotient_group(&g, &Subgroup::whole(&g)).unwrap();
    assert_eq!(t.order(), 1);
    let (same, p) = quotient_group(&g, &Subgroup::trivial(&g)).unwrap();
    assert_eq!(same.order(), 27);
    assert_eq!(p.images, (0..27).collect::<Vec<_>>());

    let s3 = symmetric3();
    let not_normal = Subgroup::generated(&s3, &[(0..6).find(|&x| s3.element_order(x) == 2).unwrap()]);
    assert!(matches!(quotient_group(&s3, &not_normal), Err(GroupError::NotNormal(_))));
}

#[test]
fn products() {
    let c2 = FiniteGroup::cyclic(2).unwrap();
    let c3 = FiniteGroup::cyclic(3).unwrap();
    let c6 = direct_product(&c2, &c3).unwrap();
    assert_eq!(c6.order(), 6);
    assert!(c6.is_abelian());
    assert_eq!(c6.exponent(), 6);

    let inversion = vec![0, 2, 1];
    let s3 = product_group(&c3, &c2, &Action::Automorphisms(vec![inversion])).unwrap();
    assert!(s3.is_associative());
    assert!(!s3.is_abelian());
    assert!(center(&s3).is_trivial());

    let c7 = FiniteGroup::cyclic(7).unwrap();
    let square = (0..7).map(|x| (2 * x) % 7).collect();
    let f21 = product_group(&c7, &c3, &Action::Automorphisms(vec![square])).unwrap();
    assert_eq!(f21.order(), 21);
    assert!(!f21.is_abelian());
    let inv = group_invariants(&f21);
    assert_eq!(inv.derived.order(), 7);
    assert_eq!(sorted_sizes(&conjugacy_classes(&f21)), sorted_sizes(&conjugacy_classes(&frobenius21())));
    let c7_image: Vec<usize> = (0..7).collect();
    assert!(Subgroup::from_elements(&f21, &c7_image).unwrap().is_normal_in(&f21));
    let h = complement_element(1, 7);
    assert_eq!(f21.element_order(h), 3);
}

#[test]
fn product_rejects_bad_actions() {
    let c3 = FiniteGroup::cyclic(3).unwrap();
    let c2 = FiniteGroup::cyclic(2).unwrap();
    let c7 = FiniteGroup::cyclic(7).unwrap();
    // not a homomorphism
    assert!(matches!(
        product_group(&c3, &c2, &Action::Automorphisms(vec![vec![0, 1, 1]])),
        Err(GroupError::NotAutomorphism(_))
    ));
    // x ↦ 3x has order 6, so it does not respect the relation of C₂
    let triple = (0..7).map(|x| (3 * x) % 7).collect();
    assert!(matches!(product_group(&c7, &c2, &Action::Automorphisms(vec![triple])), Err(GroupError::Construction(_))));
}

#[test]
fn centralizers() {
    let s3 = symmetric3();
    assert!(centralizer(&s3, &[0]).is_whole());
    let d = group_invariants(&s3).derived;
    assert_eq!(centralizer(&s3, d.elements()), d);
}

#[test]
fn sylow_decompositions() {
    let c6 = FiniteGroup::cyclic(6).unwrap();
    let d = nilpotent_sylow_decomposition(&c6, 2, 3).unwrap();
    assert_eq!((d.a_p.order(), d.a_r.order(), d.a_rest.order()), (2, 3, 1));
    assert!(d.a_p_cyclic && d.a_r_cyclic);

    let c3 = FiniteGroup::cyclic(3).unwrap();
    let d = nilpotent_sylow_decomposition(&c3, 2, 7).unwrap();
    assert_eq!((d.a_p.order(), d.a_r.order(), d.a_rest.order()), (1, 1, 3));

    assert_eq!(nilpotent_sylow_decomposition(&symmetric3(), 2, 3).unwrap_err(), GroupError::NotNilpotent);

    let v4 = direct_product(&FiniteGroup::cyclic(2).unwrap(), &FiniteGroup::cyclic(2).unwrap()).unwrap();
    let d = pr_decomposition(&v4, 2, 3).unwrap();
    assert!(!d.a_p_cyclic);
}

#[test]
fn subgroup_as_group_keeps_structure() {
    let g = heisenberg(3);
    let z = center(&g);
    let (zg, emb) = subgroup_as_group(&g, &z);
    assert_eq!(zg.order(), 3);
    assert_eq!(emb, z.elements());
    for i in 0..3 {
        for j in 0..3 {
            assert_eq!(emb[zg.mul(i, j)], g.mul(emb[i], emb[j]));
        }
    }
}

fn fingerprint(g: &FiniteGroup) -> (usize, usize, Vec<usize>, usize, usize) {
    let inv = group_invariants(g);
    (g.order(), g.exponent(), sorted_sizes(&conjugacy_classes(g)), inv.center.order(), inv.derived.order())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn latin_square_and_lagrange(a in 1usize..9, b in 1usize..7) {
        let g = direct_product(&FiniteGroup::cyclic(a).unwrap(), &symmetric3()).unwrap();
        let g = direct_product(&g, &FiniteGroup::cyclic(b).unwrap()).unwrap();
        for x in 0..g.order() {
            prop_assert_eq!(g.mul(x, g.inv(x)), 0);
        }
        let cc = conjugacy_classes(&g);
        prop_assert_eq!(cc.sizes.iter().sum::<usize>(), g.order());
        let inv = group_invariants(&g);
        for s in inv.lower_central_series.iter().chain([&inv.center, &inv.derived]) {
            prop_assert_eq!(g.order() % s.order(), 0);
        }
    }

    #[test]
    fn trivial_action_is_direct_product(a in 1usize..10, b in 1usize..10) {
        let ca = FiniteGroup::cyclic(a).unwrap();
        let cb = FiniteGroup::cyclic(b).unwrap();
        let id = vec![(0..a).collect::<Vec<_>>(); cb.generators().len()];
        let twisted = product_group(&ca, &cb, &Action::Automorphisms(id)).unwrap();
        let direct = direct_product(&ca, &cb).unwrap();
        prop_assert_eq!(fingerprint(&twisted), fingerprint(&direct));
        prop_assert_eq!(direct.exponent(), lcm(a, b));
    }

    #[test]
    fn quotient_projection_kernel(k in 1usize..5) {
        let n = 12 * k;
        let g = FiniteGroup::cyclic(n).unwrap();
        for d in (1..=n).filter(|d| n % d == 0) {
            let sub = Subgroup::generated(&g, &[(n / d) % n]);
            let (q, proj) = quotient_group(&g, &sub).unwrap();
            prop_assert_eq!(q.order(), n / d);
            prop_assert_eq!(proj.kernel(&g), sub);
        }
    }
}
