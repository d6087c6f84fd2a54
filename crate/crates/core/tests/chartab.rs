use std::sync::Arc;

use proptest::prelude::*;
use regmod::chartab::*;
use regmod::grp::catalog::{dihedral8, frobenius21, heisenberg, quaternion8, symmetric3};
use regmod::grp::*;

fn table(g: FiniteGroup) -> CharacterTable {
    dixon_character_table(Arc::new(g), 7).unwrap()
}

/// Numerical value of a cyclotomic integer, independent of the reducer.
fn complex(z: &CycInt) -> (f64, f64) {
    let e = z.exponent() as f64;
    z.coeffs().iter().enumerate().fold((0.0, 0.0), |(re, im), (u, &c)| {
        let t = 2.0 * std::f64::consts::PI * u as f64 / e;
        (re + c as f64 * t.cos(), im + c as f64 * t.sin())
    })
}

fn sorted_degrees(t: &CharacterTable) -> Vec<usize> {
    let mut d = t.degrees().to_vec();
    d.sort_unstable();
    d
}

#[test]
fn cyclotomic_polynomials() {
    assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
    assert_eq!(cyclotomic_polynomial(3), vec![1, 1, 1]);
    assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
    assert_eq!(cyclotomic_polynomial(84).len(), 25);
    // Φ_105 is the first with a coefficient of absolute value 2
    assert!(cyclotomic_polynomial(105).contains(&-2));
}

#[test]
fn cyclotomic_arithmetic() {
    let s = CycInt::root(3, 0).add(&CycInt::root(3, 1)).add(&CycInt::root(3, 2));
    assert!(s.is_zero());
    let z = CycInt::root(12, 5);
    assert!(z.mul(&z.conj()).equals(&CycInt::from_int(12, 1)));
    assert_eq!(CycInt::root(4, 2).as_integer(), Some(-1));
    assert!(CycInt::root(3, 1).equals(&CycInt::root(6, 2)));
    assert_eq!(CycInt::root(5, 1).as_integer(), None);
}

#[test]
fn auxiliary_primes() {
    assert_eq!(auxiliary_prime(84, 2688).unwrap(), 337);
    assert_eq!(auxiliary_prime(2, 6).unwrap(), 5);
    assert_eq!(auxiliary_prime(6, 6).unwrap(), 7);
}

#[test]
fn cyclic_three() {
    let t = table(FiniteGroup::cyclic(3).unwrap());
    assert_eq!(t.degrees(), &[1, 1, 1]);
    let gen = t.group().generators()[0];
    let mut images: Vec<usize> = (0..3)
        .map(|i| {
            let v = t.value(i, gen);
            (0..3).find(|&j| v.equals(&CycInt::root(3, j))).expect("value is a cube root of unity")
        })
        .collect();
    images.sort_unstable();
    assert_eq!(images, vec![0, 1, 2]);
    for i in 0..3 {
        for x in 0..3 {
            let k = (0..3).find(|&k| t.group().pow(gen, k) == x).unwrap();
            assert!(t.value(i, x).equals(&t.value(i, gen).pow_oracle(k)));
        }
    }
}

trait PowOracle {
    fn pow_oracle(&self, k: usize) -> CycInt;
}

impl PowOracle for CycInt {
    fn pow_oracle(&self, k: usize) -> CycInt {
        (0..k).fold(CycInt::from_int(self.exponent(), 1), |acc, _| acc.mul(self))
    }
}

#[test]
fn symmetric_three_matches_hand_table() {
    let g = symmetric3();
    let t = table(g.clone());
    assert_eq!(t.degrees(), &[1, 1, 2]);
    // hand table by element order: 1 ↦ (1, 1, 2), 2 ↦ (1, -1, 0), 3 ↦ (1, 1, -1)
    for x in 0..6 {
        let want = match g.element_order(x) {
            1 => [1, 1, 2],
            2 => [1, -1, 0],
            _ => [1, 1, -1],
        };
        for i in 0..3 {
            assert_eq!(t.value(i, x).as_integer(), Some(want[i]), "element {x} character {i}");
        }
    }
}

#[test]
fn order_eight_tables() {
    for g in [dihedral8(), quaternion8()] {
        let t = table(g.clone());
        assert_eq!(t.degrees(), &[1, 1, 1, 1, 2]);
        let z = center(&g);
        for x in 0..8 {
            let want = if x == 0 {
                2
            } else if z.contains(x) {
                -2
            } else {
                0
            };
            assert_eq!(t.value(4, x).as_integer(), Some(want));
        }
    }
}

#[test]
fn heisenberg_27() {
    let g = heisenberg(3);
    let t = table(g.clone());
    assert_eq!(sorted_degrees(&t), [vec![1; 9], vec![3; 2]].concat());
    let z = center(&g);
    let zeta = CycInt::root(3, 1).scale(3);
    let zeta2 = CycInt::root(3, 2).scale(3);
    for i in (0..t.len()).filter(|&i| t.degrees()[i] == 3) {
        for x in 0..27 {
            let v = t.value(i, x);
            if x == 0 {
                continue;
            }
            if z.contains(x) {
                assert!(v.equals(&zeta) || v.equals(&zeta2));
            } else {
                // induced from a linear character of an abelian normal subgroup
                assert!(v.is_zero());
            }
        }
        assert!(faithful_on(&t, i, &Subgroup::whole(&g)));
        assert!(character_kernel(&t, i).is_trivial());
    }
    for i in (0..t.len()).filter(|&i| t.degrees()[i] == 1) {
        assert!(z.is_subgroup_of(&character_kernel(&t, i)));
    }
    assert!(character_kernel(&t, 0).is_whole());
}

#[test]
fn frobenius_21() {
    let g = frobenius21();
    let t = table(g.clone());
    assert_eq!(t.degrees(), &[1, 1, 1, 3, 3]);
    // ζ7 + ζ7² + ζ7⁴ and its conjugate on elements of order 7
    let eta = CycInt::new(7, vec![0, 1, 1, 0, 1, 0, 0]);
    let x = (0..21).find(|&x| g.element_order(x) == 7).unwrap();
    let v3 = t.value(3, x);
    let v4 = t.value(4, x);
    assert!(v3.equals(&eta) || v3.equals(&eta.conj()));
    assert!(v4.equals(&v3.conj()));
}

#[test]
fn restriction_examples() {
    let g = symmetric3();
    let t = table(g.clone());
    let whole = SubgroupTable::new(&g, &Subgroup::whole(&g), 1).unwrap();
    for chi in 0..3 {
        let r = restrict_character(&t, chi, &whole).unwrap();
        let mut indicator = vec![0i64; 3];
        indicator[chi] = 1;
        assert_eq!(r.multiplicities, indicator);
    }
    let triv = SubgroupTable::new(&g, &Subgroup::trivial(&g), 1).unwrap();
    assert_eq!(restrict_character(&t, 2, &triv).unwrap().multiplicities, vec![2]);

    let c3 = Subgroup::generated(&g, &[(0..6).find(|&x| g.element_order(x) == 3).unwrap()]);
    let sub = SubgroupTable::new(&g, &c3, 1).unwrap();
    let r = restrict_character(&t, 2, &sub).unwrap();
    assert_eq!(r.multiplicities, vec![0, 1, 1]);
    assert!(!r.containment.contains_regular);
    assert_eq!(r.containment.min_slack, -1);
    let triv_c3 = &sub.table.characters()[0];
    assert_eq!(inner_product(&r.values, triv_c3, sub.table.classes()).unwrap(), 0);
}

#[test]
fn regular_character_inner_products() {
    let g = quaternion8();
    let t = table(g.clone());
    let cc = t.classes();
    let rho: Vec<CycInt> = (0..cc.len()).map(|c| CycInt::from_int(1, if c == 0 { 8 } else { 0 })).collect();
    for i in 0..t.len() {
        assert_eq!(inner_product(&rho, t.character(i), cc).unwrap(), t.degrees()[i] as i64);
        assert_eq!(inner_product(t.character(i), t.character(i), cc).unwrap(), 1);
    }
    // the regular character restricted to any subgroup contains its regular character
    let sub = SubgroupTable::new(&g, &center(&g), 2).unwrap();
    let r = restrict_character(&t, 4, &sub).unwrap();
    assert_eq!(r.multiplicities, vec![0, 2]);
    let reg = Containment { contains_regular: true, min_slack: 0 };
    let mut fake = r.clone();
    fake.multiplicities = vec![1, 1];
    assert_eq!(contains_regular_character(&fake), reg);
    fake.multiplicities = vec![1, 0];
    assert!(!contains_regular_character(&fake).contains_regular);
}

#[test]
fn products_of_characters_decompose() {
    for g in [dihedral8(), frobenius21(), heisenberg(3)] {
        let t = table(g);
        let cc = t.classes();
        for a in 0..t.len() {
            for b in a..t.len() {
                let prod: Vec<CycInt> = (0..cc.len()).map(|c| t.character(a)[c].mul(&t.character(b)[c])).collect();
                let degree: i64 = (0..t.len())
                    .map(|k| {
                        let m = inner_product(&prod, t.character(k), cc).unwrap();
                        assert!(m >= 0);
                        m * t.degrees()[k] as i64
                    })
                    .sum();
                assert_eq!(degree, (t.degrees()[a] * t.degrees()[b]) as i64);
            }
        }
    }
}

#[test]
fn galois_power_map_consistency() {
    for g in [frobenius21(), heisenberg(3), quaternion8(), symmetric3()] {
        let t = table(g.clone());
        let cc = t.classes();
        for c in 0..cc.len() {
            let o = cc.class_order(c);
            for m in (1..o).filter(|&m| gcd(m, o) == 1) {
                let img = cc.power_maps[c][m];
                for i in 0..t.len() {
                    assert!(t.character(i)[img].equals(&t.character(i)[c].galois(m)));
                }
            }
        }
    }
}

#[test]
fn export_shape() {
    let t = table(symmetric3());
    let json = serde_json::to_value(t.export()).unwrap();
    assert_eq!(json["classes"].as_array().unwrap().len(), 3);
    assert_eq!(json["characters"][2]["degree"], 2);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn canonical_form_agrees_with_complex_values(
        e in 1usize..40,
        a in proptest::collection::vec(-3i64..4, 40),
        b in proptest::collection::vec(-3i64..4, 40),
    ) {
        let x = CycInt::new(e, a[..e].to_vec());
        let y = CycInt::new(e, b[..e].to_vec());
        let (xr, xi) = complex(&x);
        let (yr, yi) = complex(&y);
        let close = (xr - yr).abs() < 1e-7 && (xi - yi).abs() < 1e-7;
        prop_assert_eq!(x.equals(&y), close);
        let (pr, pi) = complex(&x.mul(&y));
        prop_assert!((pr - (xr * yr - xi * yi)).abs() < 1e-6);
        prop_assert!((pi - (xr * yi + xi * yr)).abs() < 1e-6);
    }

    #[test]
    fn abelian_tables_are_dual_groups(n in 1usize..13, m in 1usize..5, seed in 0u64..1000) {
        let g = direct_product(&FiniteGroup::cyclic(n).unwrap(), &FiniteGroup::cyclic(m).unwrap()).unwrap();
        let t = dixon_character_table(Arc::new(g.clone()), seed).unwrap();
        prop_assert_eq!(t.len(), n * m);
        prop_assert!(t.degrees().iter().all(|&d| d == 1));
        // each linear character is a homomorphism to the roots of unity
        for i in 0..t.len() {
            for x in 0..g.order() {
                for y in 0..g.order() {
                    prop_assert!(t.value(i, g.mul(x, y)).equals(&t.value(i, x).mul(t.value(i, y))));
                }
            }
        }
    }
}
