mod common;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use whitehead::intlinalg::{
    cokernel_invariants, image_basis, kernel_basis, smith_normal_form, solve, IntMatrix, Lattice,
};

fn matrix(max_dim: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    (0..=max_dim, 0..=max_dim).prop_flat_map(move |(r, c)| {
        prop::collection::vec(-bound..=bound, r * c).prop_map(move |v| {
            IntMatrix::from_entries(r, c, v.into_iter().map(BigInt::from).collect())
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn smith_form_is_a_diagonalization(m in matrix(6, 20)) {
        let s = smith_normal_form(&m);
        prop_assert_eq!(s.u().mul(&m).mul(s.v()), s.d().clone());
        prop_assert!(s.u().is_unimodular());
        prop_assert!(s.v().is_unimodular());
        prop_assert_eq!(s.u().mul(s.u_inv()), IntMatrix::identity(m.rows()));
        prop_assert_eq!(s.v().mul(s.v_inv()), IntMatrix::identity(m.cols()));
        let d = s.d();
        for i in 0..d.rows() {
            for j in 0..d.cols() {
                if i != j {
                    prop_assert!(d[(i, j)].is_zero());
                }
            }
        }
        let inv = s.invariants();
        prop_assert_eq!(inv.len(), s.rank());
        for (k, x) in inv.iter().enumerate() {
            prop_assert!(x.is_positive());
            prop_assert_eq!(&d[(k, k)], x);
            if k + 1 < inv.len() {
                prop_assert!(inv[k + 1].is_multiple_of(x));
            }
        }
        for k in inv.len()..d.rows().min(d.cols()) {
            prop_assert!(d[(k, k)].is_zero());
        }
    }

    #[test]
    fn determinant_is_product_of_invariants(m in matrix(5, 9).prop_filter("square", |m| m.rows() == m.cols())) {
        let s = smith_normal_form(&m);
        let det = m.determinant().abs();
        if s.rank() == m.rows() {
            let prod = s.invariants().iter().fold(BigInt::one(), |a, b| a * b);
            prop_assert_eq!(det, prod);
        } else {
            prop_assert!(det.is_zero());
        }
    }

    #[test]
    fn kernel_and_image(m in matrix(5, 12)) {
        let k = kernel_basis(&m);
        let s = smith_normal_form(&m);
        prop_assert_eq!(k.cols(), m.cols() - s.rank());
        prop_assert!(m.mul(&k).is_zero());
        // The kernel is saturated: it is a direct summand.
        if k.cols() > 0 {
            let ks = smith_normal_form(&k);
            prop_assert!(ks.invariants().iter().all(|x| x.is_one()));
        }
        let im = image_basis(&m);
        prop_assert_eq!(im.cols(), s.rank());
        for c in m.columns() {
            prop_assert!(solve(&im, &c).is_some());
        }
        for c in im.columns() {
            prop_assert!(solve(&m, &c).is_some());
        }
    }

    #[test]
    fn solve_finds_integral_solutions(m in matrix(5, 12), seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let x = common::random_matrix(&mut rng, m.cols(), 1, 7).column(0);
        let b = m.mul_vec(&x);
        let y = solve(&m, &b).expect("b is in the image");
        prop_assert_eq!(m.mul_vec(&y), b);
    }

    #[test]
    fn lattice_membership_matches_solve(m in matrix(4, 8), seed in any::<u64>()) {
        let mut lat = Lattice::new(m.rows());
        for c in m.columns() {
            lat.insert(&c);
        }
        let mut rng = common::rng(seed);
        for _ in 0..5 {
            let v = common::random_matrix(&mut rng, m.rows(), 1, 6).column(0);
            prop_assert_eq!(lat.contains(&v), solve(&m, &v).is_some());
        }
        prop_assert_eq!(lat.rank(), smith_normal_form(&m).rank());
    }

    #[test]
    fn cokernel_invariants_are_the_nontrivial_ones(m in matrix(5, 10)) {
        let (free, torsion) = cokernel_invariants(&m);
        let s = smith_normal_form(&m);
        prop_assert_eq!(free, m.rows() - s.rank());
        let expected: Vec<BigInt> = s.invariants().iter().filter(|x| !x.is_one()).cloned().collect();
        prop_assert_eq!(torsion, expected);
    }
}

#[test]
fn classic_example() {
    let m = IntMatrix::from_rows(&[[2, 4, 4], [-6, 6, 12], [10, -4, -16]]);
    let s = smith_normal_form(&m);
    assert_eq!(s.invariants(), &common::big(&[2, 6, 12])[..]);
}

#[test]
fn empty_matrices() {
    for (r, c) in [(0, 0), (0, 3), (3, 0)] {
        let m = IntMatrix::zeros(r, c);
        let s = smith_normal_form(&m);
        assert_eq!(s.rank(), 0);
        assert_eq!(kernel_basis(&m).cols(), c);
        assert_eq!(image_basis(&m).cols(), 0);
    }
}
