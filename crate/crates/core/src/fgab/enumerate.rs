use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{FgAbGroup, Hom};
use crate::intlinalg::IntMatrix;

/// Every well-defined hom `A → B` whose free-to-free entries lie in
/// `[-bound, bound]`, in a fixed lexicographic order.
///
/// Entries are varied in row-major order with the first entry slowest. Each
/// entry runs through its admissible values starting from the identity's
/// entry when `A = B` (and from 0 otherwise), so the identity is the first
/// automorphism produced.
pub struct Homs {
    domain: FgAbGroup,
    codomain: FgAbGroup,
    candidates: Vec<Vec<BigInt>>,
    index: Vec<usize>,
    done: bool,
}

impl Homs {
    /// Number of homs the stream will produce.
    pub fn total(&self) -> BigInt {
        self.candidates
            .iter()
            .map(|c| BigInt::from(c.len()))
            .fold(BigInt::one(), |a, b| a * b)
    }
}

impl Iterator for Homs {
    type Item = Hom;

    fn next(&mut self) -> Option<Hom> {
        if self.done {
            return None;
        }
        let entries: Vec<BigInt> = self
            .index
            .iter()
            .zip(&self.candidates)
            .map(|(&k, c)| c[k].clone())
            .collect();
        let m = IntMatrix::from_entries(
            self.codomain.num_generators(),
            self.domain.num_generators(),
            entries,
        );
        // Advance the odometer, last entry fastest.
        self.done = true;
        for p in (0..self.index.len()).rev() {
            self.index[p] += 1;
            if self.index[p] < self.candidates[p].len() {
                self.done = false;
                break;
            }
            self.index[p] = 0;
        }
        Some(
            Hom::new(self.domain.clone(), self.codomain.clone(), m)
                .expect("enumerated entries are admissible"),
        )
    }
}

/// Values of entry `(i, j)` allowed by well-definedness, centered at `c`.
fn admissible(d: &BigInt, e: &BigInt, c: i64, bound: u32) -> Vec<BigInt> {
    if e.is_zero() {
        if !d.is_zero() {
            return vec![BigInt::zero()];
        }
        let b = i64::from(bound);
        let mut out = Vec::new();
        for k in 0..=2 * b + 1 {
            // c, c+1, c-1, c+2, c-2, …
            let delta = if k % 2 == 1 { (k + 1) / 2 } else { -(k / 2) };
            let x = c + delta;
            if x.abs() <= b && !out.contains(&BigInt::from(x)) {
                out.push(BigInt::from(x));
            }
        }
        for x in -b..=b {
            if !out.contains(&BigInt::from(x)) {
                out.push(BigInt::from(x));
            }
        }
        return out;
    }
    // Torsion row: multiples of e / gcd(d, e) in [0, e), rotated to start at c.
    let step = e / d.gcd(e);
    let count = d.gcd(e);
    let count = usize::try_from(count).expect("hom count too large to enumerate");
    let values: Vec<BigInt> = (0..count).map(|k| &step * BigInt::from(k)).collect();
    let start = values
        .iter()
        .position(|v| *v == BigInt::from(c).mod_floor(e))
        .unwrap_or(0);
    values[start..].iter().chain(&values[..start]).cloned().collect()
}

pub fn enumerate_homs(a: &FgAbGroup, b: &FgAbGroup, free_bound: u32) -> Homs {
    let same = a == b;
    let (rows, cols) = (b.num_generators(), a.num_generators());
    let mut candidates = Vec::with_capacity(rows * cols);
    for i in 0..rows {
        for j in 0..cols {
            let c = i64::from(same && i == j);
            candidates.push(admissible(
                &a.generator_order(j),
                &b.generator_order(i),
                c,
                free_bound,
            ));
        }
    }
    let done = candidates.iter().any(Vec::is_empty);
    Homs {
        domain: a.clone(),
        codomain: b.clone(),
        index: vec![0; candidates.len()],
        candidates,
        done,
    }
}

/// Isomorphisms `A → B` within the bound; empty when the groups differ.
pub fn enumerate_isos(a: &FgAbGroup, b: &FgAbGroup, free_bound: u32) -> impl Iterator<Item = Hom> {
    let mut homs = enumerate_homs(a, b, free_bound);
    if a != b {
        homs.done = true;
    }
    homs.filter(Hom::is_isomorphism)
}

/// Whether [`enumerate_isos`] on `A → A` is guaranteed to list every
/// automorphism. `Aut(Z^r)` is infinite for `r ≥ 2`; for `r = 1` the free
/// entry of an automorphism is `±1`.
pub fn iso_search_is_exhaustive(a: &FgAbGroup, free_bound: u32) -> bool {
    a.rank() == 0 || (a.rank() == 1 && free_bound >= 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(a: &FgAbGroup, b: &FgAbGroup) -> usize {
        enumerate_homs(a, b, 3).count()
    }

    #[test]
    fn hom_counts() {
        let z2 = FgAbGroup::of(0, &[2]);
        let z3 = FgAbGroup::of(0, &[3]);
        assert_eq!(count(&z2, &z2), 2);
        assert_eq!(count(&z2, &z3), 1);
        assert_eq!(count(&FgAbGroup::of(0, &[4]), &FgAbGroup::of(0, &[6])), 2);
        assert_eq!(count(&FgAbGroup::trivial(), &z3), 1);
        assert_eq!(enumerate_homs(&z2, &z2, 3).total(), BigInt::from(2));
    }

    #[test]
    fn iso_counts() {
        let z = FgAbGroup::free(1);
        let units: Vec<_> = enumerate_isos(&z, &z, 1).collect();
        assert_eq!(units, vec![Hom::identity(&z), Hom::scalar(&z, -1)]);
        assert_eq!(enumerate_isos(&FgAbGroup::of(0, &[5]), &FgAbGroup::of(0, &[5]), 3).count(), 4);
        let v4 = FgAbGroup::of(0, &[2, 2]);
        assert_eq!(enumerate_isos(&v4, &v4, 3).count(), 6);
        assert_eq!(enumerate_isos(&v4, &FgAbGroup::of(0, &[4]), 3).count(), 0);
    }

    #[test]
    fn identity_comes_first() {
        for g in [
            FgAbGroup::of(0, &[2, 4]),
            FgAbGroup::of(1, &[3]),
            FgAbGroup::free(2),
        ] {
            assert_eq!(enumerate_isos(&g, &g, 2).next(), Some(Hom::identity(&g)));
        }
    }

    #[test]
    fn free_entries_bounded() {
        let z = FgAbGroup::free(1);
        assert_eq!(enumerate_homs(&z, &z, 0).count(), 1);
        assert_eq!(enumerate_homs(&z, &z, 2).count(), 5);
        assert_eq!(enumerate_homs(&FgAbGroup::of(0, &[2]), &z, 2).count(), 1);
        // Z → Z/6: any image.
        assert_eq!(enumerate_homs(&z, &FgAbGroup::of(0, &[6]), 0).count(), 6);
    }
}
