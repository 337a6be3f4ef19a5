#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use whitehead::fgab::{FgAbGroup, Hom};
use whitehead::intlinalg::IntMatrix;

/// A group with small invariant factors, at most `max_gens` generators.
pub fn small_group(max_gens: usize, allow_free: bool) -> impl Strategy<Value = FgAbGroup> {
    let free = if allow_free { 0..=2usize } else { 0..=0usize };
    (free, prop::collection::vec(1u32..=3, 0..=max_gens)).prop_map(move |(r, mut steps)| {
        steps.truncate(max_gens.saturating_sub(r));
        // Build a divisibility chain d₁ | d₂ | … from small multipliers.
        let mut torsion = Vec::new();
        let mut d = 1i64;
        for s in steps {
            d *= i64::from(s) + 1;
            torsion.push(d);
        }
        FgAbGroup::of(r, &torsion)
    })
}

/// All finite abelian groups of order exactly `n`, in invariant-factor form.
pub fn groups_of_order(n: u64) -> Vec<FgAbGroup> {
    fn rec(remaining: u64, last: u64, acc: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if remaining == 1 {
            out.push(acc.clone());
            return;
        }
        // Factors are listed largest first, each dividing the previous one.
        for d in (2..=remaining).rev() {
            if remaining.is_multiple_of(d) && (last == 0 || last.is_multiple_of(d)) {
                acc.push(d);
                rec(remaining / d, d, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(n, 0, &mut Vec::new(), &mut out);
    out.into_iter()
        .map(|mut t| {
            t.reverse();
            let t: Vec<i64> = t.into_iter().map(|x| x as i64).collect();
            FgAbGroup::of(0, &t)
        })
        .collect()
}

/// A random element `y` of `B` with `m·y = 0` (`m = 0`: no constraint).
pub fn random_element_killed_by(rng: &mut ChaCha8Rng, b: &FgAbGroup, m: &BigInt) -> Vec<BigInt> {
    b.generator_orders()
        .iter()
        .map(|o| {
            let x = BigInt::from(rng.gen_range(-5i64..=5));
            if m == &BigInt::from(0) {
                x
            } else if o == &BigInt::from(0) {
                BigInt::from(0)
            } else {
                x * (o / o.gcd(m))
            }
        })
        .collect()
}

/// A random homomorphism `A → B`.
pub fn random_hom(rng: &mut ChaCha8Rng, a: &FgAbGroup, b: &FgAbGroup) -> Hom {
    let cols: Vec<Vec<BigInt>> = (0..a.num_generators())
        .map(|j| random_element_killed_by(rng, b, &a.generator_order(j)))
        .collect();
    Hom::from_images(a.clone(), b.clone(), &cols).expect("images respect orders")
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, bound: i64) -> IntMatrix {
    let entries = (0..rows * cols)
        .map(|_| BigInt::from(rng.gen_range(-bound..=bound)))
        .collect();
    IntMatrix::from_entries(rows, cols, entries)
}

pub fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}
