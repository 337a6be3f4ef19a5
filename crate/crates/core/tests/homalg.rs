mod common;

use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;
use whitehead::fgab::{enumerate_homs, FgAbGroup, Hom};
use whitehead::homalg::{
    canonical_resolution, class_of_extension, ext1, extension_from_class, pullback, pullback_to,
    pullback_with_lift, pushforward, tensor,
};

fn g(rank: usize, torsion: &[i64]) -> FgAbGroup {
    FgAbGroup::of(rank, torsion)
}

#[test]
fn ext_of_cyclics_is_cyclic_of_gcd() {
    for m in 2..=16i64 {
        for n in 2..=16i64 {
            let e = ext1(&g(0, &[m]), &g(0, &[n]));
            let d = m.gcd(&n);
            let expected = if d == 1 { g(0, &[]) } else { g(0, &[d]) };
            assert_eq!(e.group(), &expected, "Ext(Z/{m}, Z/{n})");
        }
    }
}

#[test]
fn ext_of_free_vanishes() {
    for b in [g(0, &[2]), g(1, &[3, 6]), g(2, &[])] {
        for r in 0..3 {
            assert!(ext1(&g(r, &[]), &b).group().is_trivial());
        }
    }
    // Ext(Z/n, Z) = Z/n.
    assert_eq!(ext1(&g(0, &[6]), &g(1, &[])).group(), &g(0, &[6]));
}

#[test]
fn pushforward_of_ext_z2_z2_along_doubling_injection_is_zero() {
    // Pushing the nonzero class of Ext(Z/2, Z/2) along Z/2 ↣ Z/4 lands in
    // 2·Ext(Z/2, Z/4) = 0; the long exact sequence agrees since the
    // connecting map Hom(Z/2, Z/2) → Ext(Z/2, Z/2) is onto.
    let z2 = g(0, &[2]);
    let z4 = g(0, &[4]);
    let e = ext1(&z2, &z2);
    let c = e.generators()[0].clone();
    assert!(!c.is_zero());
    let inj = Hom::of(&z2, &z4, &[[2]]);
    assert!(pushforward(&inj, &c).unwrap().is_zero());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn ext_is_additive_and_dual_to_tensor_for_finite(a in common::small_group(2, true), b in common::small_group(2, true)) {
        // Ext(Z/m, B) = B/mB, so |Ext(A, B)| = |T(A) ⊗ B| for the torsion T(A).
        let ta = FgAbGroup::of(0, &a.torsion().iter().map(|x| i64::try_from(x).unwrap()).collect::<Vec<_>>());
        let e = ext1(&a, &b);
        prop_assert_eq!(e.group(), &tensor(&ta, &b));
    }

    #[test]
    fn baer_round_trip(a in common::small_group(2, false), b in common::small_group(2, true)) {
        let e = ext1(&a, &b);
        for c in e.classes().take(64) {
            let ext = extension_from_class(&c);
            ext.check_exact().unwrap();
            let back = class_of_extension(&ext.i, &ext.q).unwrap();
            prop_assert_eq!(back, c);
        }
    }

    #[test]
    fn lift_independence(a in common::small_group(2, false), b in common::small_group(2, false), a2 in common::small_group(2, false), seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let f = common::random_hom(&mut rng, &a2, &a);
        let e = ext1(&a, &b);
        let res = canonical_resolution(&a2);
        for c in e.generators() {
            let base = pullback_to(&f, &c, &res).unwrap();
            for _ in 0..5 {
                let h = common::random_matrix(&mut rng, c.resolution().r1(), res.r0(), 5);
                prop_assert_eq!(pullback_with_lift(&f, &c, &res, &h).unwrap(), base.clone());
            }
        }
    }

    #[test]
    fn pullback_and_pushforward_are_functorial_and_additive(
        a in common::small_group(2, false),
        b in common::small_group(2, false),
        c in common::small_group(2, true),
        seed in any::<u64>(),
    ) {
        let mut rng = common::rng(seed);
        let a1 = g(0, &[2, 4]);
        let f = common::random_hom(&mut rng, &a1, &a);
        let f0 = common::random_hom(&mut rng, &g(0, &[4]), &a1);
        let p = common::random_hom(&mut rng, &b, &c);
        let e = ext1(&a, &b);
        let gens = e.generators();
        for x in &gens {
            for y in &gens {
                let s = x.add(y).unwrap();
                prop_assert_eq!(pullback(&f, &s).unwrap(), pullback(&f, x).unwrap().add(&pullback(&f, y).unwrap()).unwrap());
                prop_assert_eq!(pushforward(&p, &s).unwrap(), pushforward(&p, x).unwrap().add(&pushforward(&p, y).unwrap()).unwrap());
            }
            let two_step = pullback(&f0, &pullback(&f, x).unwrap()).unwrap();
            prop_assert_eq!(pullback(&f.compose(&f0).unwrap(), x).unwrap(), two_step);
            // Pulling and pushing commute.
            let pp = pushforward(&p, &pullback(&f, x).unwrap()).unwrap();
            prop_assert_eq!(pullback(&f, &pushforward(&p, x).unwrap()).unwrap(), pp);
        }
    }
}

/// An extension splits exactly when its class is zero: search every hom
/// `A → G` for a section of `q`.
#[test]
fn split_iff_section_exists() {
    for (a, b) in [
        (g(0, &[2]), g(0, &[2])),
        (g(0, &[4]), g(0, &[2])),
        (g(0, &[2, 2]), g(0, &[2])),
        (g(0, &[2]), g(0, &[4])),
        (g(0, &[3]), g(0, &[3])),
        (g(0, &[2]), g(1, &[])),
    ] {
        let e = ext1(&a, &b);
        for c in e.classes() {
            let ext = extension_from_class(&c);
            let mid = ext.middle().clone();
            let has_section = enumerate_homs(&a, &mid, 2)
                .any(|s| ext.q.compose(&s).unwrap() == Hom::identity(&a));
            assert_eq!(has_section, c.is_zero(), "class {:?} of Ext({a}, {b})", c.normal_form());
        }
    }
}

#[test]
fn middle_groups_of_classic_extensions() {
    let z2 = g(0, &[2]);
    let e = ext1(&z2, &z2);
    let mids: Vec<FgAbGroup> = e.classes().map(|c| extension_from_class(&c).middle().clone()).collect();
    assert_eq!(mids, vec![g(0, &[2, 2]), g(0, &[4])]);
    // Ext(Z/2, Z) ∋ nonzero class with middle Z (the doubling map).
    let e = ext1(&z2, &g(1, &[]));
    let c = e.generators()[0].clone();
    assert_eq!(extension_from_class(&c).middle(), &g(1, &[]));
    // 0 → Z/3 → Z/9 → Z/3 → 0 and its negative both have middle Z/9.
    let z3 = g(0, &[3]);
    let e = ext1(&z3, &z3);
    let orders: Vec<BigInt> = e
        .classes()
        .map(|c| extension_from_class(&c).middle().torsion().last().cloned().unwrap())
        .collect();
    assert_eq!(orders, common::big(&[3, 9, 9]));
}
