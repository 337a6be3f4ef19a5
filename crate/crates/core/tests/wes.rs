mod common;

use num_bigint::BigInt;
use proptest::prelude::*;
use rand::Rng;
use whitehead::fgab::{FgAbGroup, Hom};
use whitehead::fixtures;
use whitehead::homalg::{pullback_to, pushforward, theta_restrict, ExtClass};
use whitehead::intlinalg::IntMatrix;
use whitehead::wes::{
    beta_matrix_decomposition, check_ladder, check_strong, choose_splitting, classify4,
    derive_wes, derive_wes_checked, pi_class, pi_sequence, pi_sequence_class, validate_system,
    Classification, Design, GammaSystem, Ladder, WhiteheadSequence,
};
use whitehead::Error;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn designed_classes_are_recovered(seed in 0u64..10_000, top in 3usize..=5, split_seed in any::<u64>()) {
        let d = Design::random(seed, top);
        let s = d.system().unwrap();
        prop_assert!(validate_system(&s).is_valid());
        let w = derive_wes(&s).unwrap();
        for n in 2..=top {
            let designed = d.designed_class(&s, &w, n).unwrap();
            let deg = w.degree(n).unwrap();
            prop_assert_eq!(&designed, &deg.pi_class);
            prop_assert_eq!(&pi_class(&s, n, split_seed).unwrap(), &deg.pi_class);
            let direct = pi_sequence_class(&s, n).unwrap();
            prop_assert_eq!(direct.normal_form(), deg.pi_class.normal_form());
            pi_sequence(&s, n).unwrap().check_exact().unwrap();
            prop_assert_eq!(&d.designed_b(&s, n).unwrap(), &deg.b_next);
        }
    }

    #[test]
    fn decomposition_blocks(seed in 0u64..10_000, top in 3usize..=5, split_seed in any::<u64>()) {
        let s = Design::random(seed, top).system().unwrap();
        let w = derive_wes(&s).unwrap();
        for n in 2..=top {
            let sp = choose_splitting(&s, n, split_seed).unwrap();
            let dec = beta_matrix_decomposition(&s, n, &sp).unwrap();
            prop_assert_eq!(&dec.psi, &s.complex().d(n + 1).mul(&sp.t));
            prop_assert!(dec.eta.is_zero());
            if n == top {
                prop_assert_eq!(dec.theta.domain().num_generators(), 0);
                continue;
            }
            let b = &w.degree(n).unwrap().b_next;
            let h = s.complex().homology(n + 1).unwrap();
            for (i, z) in h.cycles.columns().enumerate() {
                prop_assert_eq!(dec.theta.image_of_generator(i), b.apply(&h.class_of(&z).unwrap()));
            }
        }
    }
}

/// `(γ̃_n)_*` on `Ext(H_n(X), Coker b_{n+1}(X))`.
fn induced_on_coker(wx: &WhiteheadSequence, wy: &WhiteheadSequence, n: usize, gamma: &Hom) -> Hom {
    let (x, y) = (wx.degree(n).unwrap(), wy.degree(n).unwrap());
    x.coker_b.descend(&y.coker_b.projection.compose(gamma).unwrap()).unwrap()
}

/// Characteristic classes lying over `[π_n]`, by enumeration.
fn characteristic_set(w: &WhiteheadSequence, n: usize) -> Vec<ExtClass> {
    let d = w.degree(n).unwrap();
    d.char_class
        .ext_group()
        .classes()
        .filter(|c| theta_restrict(c, &d.ker_b.inclusion).unwrap() == d.pi_class)
        .collect()
}

/// Strongness by brute force over both characteristic sets.
fn strong_by_search(wx: &WhiteheadSequence, wy: &WhiteheadSequence, l: &Ladder) -> Option<bool> {
    let mut all = true;
    for n in 2..=wx.last() {
        let sx = characteristic_set(wx, n);
        let sy = characteristic_set(wy, n);
        if sx.len() * sy.len() > 20_000 {
            return None;
        }
        let gt = induced_on_coker(wx, wy, n, l.gamma(n));
        let res = wx.degree(n).unwrap().char_class.resolution().clone();
        let pushed: Vec<ExtClass> = sx.iter().map(|c| pushforward(&gt, c).unwrap()).collect();
        let found = sy
            .iter()
            .map(|c| pullback_to(l.f(n), c, &res).unwrap())
            .any(|p| pushed.contains(&p));
        all &= found;
    }
    Some(all)
}

fn random_ladder(rng: &mut rand_chacha::ChaCha8Rng, wx: &WhiteheadSequence, wy: &WhiteheadSequence) -> Ladder {
    let last = wx.last();
    let f = (2..=last + 1)
        .map(|n| common::random_hom(rng, wx.homology(n).unwrap(), wy.homology(n).unwrap()))
        .collect();
    let gamma = (2..=last)
        .map(|n| {
            let (gx, gy) = (&wx.degree(n).unwrap().gamma, &wy.degree(n).unwrap().gamma);
            if rng.gen_bool(0.3) {
                Hom::zero(gx, gy)
            } else {
                common::random_hom(rng, gx, gy)
            }
        })
        .collect();
    Ladder { f, gamma }
}

fn sequences(designs: Vec<(String, Design)>) -> Vec<(String, WhiteheadSequence)> {
    designs
        .into_iter()
        .map(|(name, d)| (name, derive_wes(&d.system().unwrap()).unwrap()))
        .collect()
}

#[test]
fn strong_check_agrees_with_search() {
    let ws = sequences(fixtures::torsion_designs());
    let mut rng = common::rng(17);
    let (mut checked, mut negatives) = (0, 0);
    for (nx, wx) in &ws {
        for (ny, wy) in &ws {
            if wx.last() != wy.last() {
                continue;
            }
            for _ in 0..40 {
                let l = random_ladder(&mut rng, wx, wy);
                if !check_ladder(wx, wy, &l).passed() {
                    continue;
                }
                let Some(expected) = strong_by_search(wx, wy, &l) else { continue };
                let got = check_strong(wx, wy, &l).unwrap().is_strong();
                assert_eq!(got, expected, "{nx} → {ny}: {l:?}");
                checked += 1;
                negatives += usize::from(!got);
            }
        }
    }
    let (x, y, l) = fixtures::not_strong();
    let wx = derive_wes(&x.system().unwrap()).unwrap();
    let wy = derive_wes(&y.system().unwrap()).unwrap();
    assert_eq!(strong_by_search(&wx, &wy, &l), Some(false));
    assert!(checked >= 50, "only {checked} commuting ladders found");
    eprintln!("{checked} ladders compared, {negatives} not strong");
}

#[test]
fn witnesses_are_valid() {
    for (name, d) in fixtures::torsion_designs() {
        let w = derive_wes(&d.system().unwrap()).unwrap();
        let l = Ladder::identity(&w);
        let r = check_strong(&w, &w, &l).unwrap();
        for deg in &r.degrees {
            let (a, b) = deg.witness.clone().unwrap_or_else(|| panic!("{name}: identity not strong"));
            let x = w.degree(deg.n).unwrap();
            assert_eq!(theta_restrict(&a, &x.ker_b.inclusion).unwrap(), x.pi_class, "{name}");
            assert_eq!(theta_restrict(&b, &x.ker_b.inclusion).unwrap(), x.pi_class, "{name}");
        }
    }
}

#[test]
fn free_homology_ladders_are_strong() {
    let ws = sequences(fixtures::free_designs());
    let mut rng = common::rng(5);
    let mut checked = 0;
    for (_, wx) in &ws {
        for (_, wy) in &ws {
            if wx.last() != wy.last() {
                continue;
            }
            for _ in 0..20 {
                let l = random_ladder(&mut rng, wx, wy);
                if check_ladder(wx, wy, &l).passed() {
                    assert!(check_strong(wx, wy, &l).unwrap().is_strong());
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 0);
}

#[test]
fn classify4_is_symmetric() {
    let four = fixtures::four_dim();
    for (nx, x) in &four {
        for (ny, y) in &four {
            let xy = classify4(x, y, 3).unwrap();
            let yx = classify4(y, x, 3).unwrap();
            assert_eq!(
                std::mem::discriminant(&xy),
                std::mem::discriminant(&yx),
                "{nx} vs {ny}"
            );
            if let Classification::Equivalent(w) = xy {
                let (wx, wy) = (x.to_wes(), y.to_wes());
                assert!(check_ladder(&wx, &wy, &w.ladder()).passed(), "{nx} → {ny}");
                assert!(check_strong(&wx, &wy, &w.ladder()).unwrap().is_strong());
                let inv = w.inverse().expect("witness maps are isomorphisms");
                assert!(check_ladder(&wy, &wx, &inv.ladder()).passed(), "{ny} → {nx}");
            }
        }
    }
}

/// Changing one entry of `j` or `β` either keeps the system valid, and then
/// the sequence is still derived without integrity errors, or is reported
/// as invalid.
#[test]
fn mutated_systems_are_revalidated() {
    let mut rng = common::rng(99);
    let mut rejected = 0;
    for (_, d) in fixtures::torsion_designs() {
        let s = d.system().unwrap();
        for _ in 0..10 {
            let mut m: GammaSystem = s.clone();
            let k = rng.gen_range(0..m.levels().len());
            let level = &mut m.levels_mut()[k];
            let target = if rng.gen_bool(0.5) { &mut level.j } else { &mut level.beta_next };
            let mat = target.matrix();
            if mat.entries().is_empty() {
                continue;
            }
            let mut entries = mat.entries().to_vec();
            let i = rng.gen_range(0..entries.len());
            entries[i] += BigInt::from(rng.gen_range(1i64..=3));
            let changed = IntMatrix::from_entries(mat.rows(), mat.cols(), entries);
            let Ok(h) = Hom::new(target.domain().clone(), target.codomain().clone(), changed) else {
                continue;
            };
            *target = h;
            match (validate_system(&m).is_valid(), derive_wes_checked(&m, 3)) {
                (true, r) => {
                    r.unwrap();
                }
                (false, Err(Error::InvalidSystem(_))) => rejected += 1,
                (false, r) => panic!("invalid system not rejected: {:?}", r.map(|_| ())),
            }
        }
    }
    assert!(rejected > 0);
}

#[test]
fn free_model_sequence_has_trivial_gamma() {
    let d = Design::random_free(3, 4);
    let s = GammaSystem::free_model(d.complex().clone()).unwrap();
    let w = derive_wes(&s).unwrap();
    for deg in &w.degrees {
        assert_eq!(deg.gamma, FgAbGroup::trivial());
        assert!(deg.pi_class.is_zero());
    }
}
