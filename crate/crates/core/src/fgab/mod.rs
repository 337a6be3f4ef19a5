//! Finitely generated abelian groups in invariant-factor form.
//!
//! A group is stored as `Z/d₁ ⊕ … ⊕ Z/d_k ⊕ Z^r` with `d₁ | d₂ | … | d_k`
//! and every `dᵢ ≥ 2`. Its canonical generators are ordered torsion first,
//! then free. Elements are coordinate vectors on those generators, with the
//! torsion coordinates reduced into `[0, dᵢ)`.
//!
//! Every derived group (kernel, image, cokernel, direct sum) is renormalized
//! to this form and comes with explicit structure maps, so two groups are
//! isomorphic exactly when they compare equal.

mod enumerate;
mod hom;
mod subquotient;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::intlinalg::{smith_normal_form, IntMatrix};

pub use enumerate::{enumerate_homs, enumerate_isos, iso_search_is_exhaustive, Homs};
pub use hom::{compose, Hom};
pub use subquotient::{direct_sum, DirectSum, Quotient, Subgroup};

/// Default entry bound for searches over homomorphisms between groups with a
/// free part.
pub const DEFAULT_FREE_BOUND: u32 = 3;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FgAbGroup {
    torsion: Vec<BigInt>,
    rank: usize,
}

impl FgAbGroup {
    /// Validates the divisibility chain; entries must all be at least 2.
    pub fn new(rank: usize, torsion: Vec<BigInt>) -> Result<Self> {
        let two = BigInt::from(2);
        if let Some(d) = torsion.iter().find(|d| **d < two) {
            return Err(Error::InvalidGroup(format!(
                "invariant factor {d} is smaller than 2"
            )));
        }
        if let Some(w) = torsion.windows(2).find(|w| !w[1].is_multiple_of(&w[0])) {
            return Err(Error::InvalidGroup(format!(
                "{} does not divide {}",
                w[0], w[1]
            )));
        }
        Ok(FgAbGroup { torsion, rank })
    }

    /// Panicking shorthand for tests and examples: `FgAbGroup::of(1, &[2, 4])`
    /// is `Z/2 ⊕ Z/4 ⊕ Z`.
    pub fn of(rank: usize, torsion: &[i64]) -> Self {
        Self::new(rank, torsion.iter().map(|&d| BigInt::from(d)).collect())
            .expect("valid invariant factors")
    }

    pub fn trivial() -> Self {
        FgAbGroup {
            torsion: vec![],
            rank: 0,
        }
    }

    pub fn free(rank: usize) -> Self {
        FgAbGroup {
            torsion: vec![],
            rank,
        }
    }

    /// `Z/n`; `n = 0` gives `Z` and `n = 1` the trivial group.
    pub fn cyclic(n: u64) -> Self {
        match n {
            0 => Self::free(1),
            1 => Self::trivial(),
            n => FgAbGroup {
                torsion: vec![BigInt::from(n)],
                rank: 0,
            },
        }
    }

    /// Canonical form of `Z^generators / span(relations)` without the
    /// change-of-basis data. See [`Presentation`] for the full version.
    pub fn from_relations(generators: usize, relations: &IntMatrix) -> Self {
        Presentation::new(generators, relations).group
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn num_generators(&self) -> usize {
        self.torsion.len() + self.rank
    }

    /// Order of the `i`-th canonical generator, `0` for a free generator.
    pub fn generator_order(&self, i: usize) -> BigInt {
        self.torsion.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn generator_orders(&self) -> Vec<BigInt> {
        (0..self.num_generators())
            .map(|i| self.generator_order(i))
            .collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.num_generators() == 0
    }

    pub fn is_finite(&self) -> bool {
        self.rank == 0
    }

    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }

    /// Cardinality, or `None` for an infinite group.
    pub fn order(&self) -> Option<BigInt> {
        self.is_finite()
            .then(|| self.torsion.iter().fold(BigInt::one(), |a, d| a * d))
    }

    /// `n × k` matrix whose columns `dᵢ·eᵢ` present the group on its
    /// canonical generators.
    pub fn relation_matrix(&self) -> IntMatrix {
        IntMatrix::diagonal(self.num_generators(), self.torsion.len(), &self.torsion)
    }

    pub fn zero(&self) -> Vec<BigInt> {
        vec![BigInt::zero(); self.num_generators()]
    }

    /// The `i`-th canonical generator as an element.
    pub fn generator(&self, i: usize) -> Vec<BigInt> {
        let mut x = self.zero();
        x[i] = BigInt::one();
        self.reduce(&mut x);
        x
    }

    pub fn reduce(&self, x: &mut [BigInt]) {
        assert_eq!(x.len(), self.num_generators(), "element has wrong length");
        for (xi, d) in x.iter_mut().zip(&self.torsion) {
            *xi = xi.mod_floor(d);
        }
    }

    pub fn reduced(&self, x: &[BigInt]) -> Vec<BigInt> {
        let mut x = x.to_vec();
        self.reduce(&mut x);
        x
    }

    pub fn is_zero_element(&self, x: &[BigInt]) -> bool {
        self.reduced(x).iter().all(Zero::is_zero)
    }

    pub fn add(&self, x: &[BigInt], y: &[BigInt]) -> Vec<BigInt> {
        let s: Vec<BigInt> = x.iter().zip(y).map(|(a, b)| a + b).collect();
        self.reduced(&s)
    }

    pub fn sub(&self, x: &[BigInt], y: &[BigInt]) -> Vec<BigInt> {
        let s: Vec<BigInt> = x.iter().zip(y).map(|(a, b)| a - b).collect();
        self.reduced(&s)
    }

    pub fn neg(&self, x: &[BigInt]) -> Vec<BigInt> {
        let s: Vec<BigInt> = x.iter().map(|a| -a).collect();
        self.reduced(&s)
    }

    pub fn scale(&self, c: &BigInt, x: &[BigInt]) -> Vec<BigInt> {
        let s: Vec<BigInt> = x.iter().map(|a| c * a).collect();
        self.reduced(&s)
    }

    /// All elements in mixed-radix order (last coordinate fastest).
    /// Panics on an infinite group.
    pub fn elements(&self) -> impl Iterator<Item = Vec<BigInt>> + '_ {
        assert!(self.is_finite(), "cannot enumerate an infinite group");
        let radices: Vec<u64> = self
            .torsion
            .iter()
            .map(|d| d.to_u64().expect("group too large to enumerate"))
            .collect();
        let total: u64 = radices.iter().product();
        (0..total).map(move |mut k| {
            let mut x = vec![BigInt::zero(); radices.len()];
            for (i, r) in radices.iter().enumerate().rev() {
                x[i] = BigInt::from(k % r);
                k /= r;
            }
            x
        })
    }
}

impl fmt::Display for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = self.torsion.iter().map(|d| format!("Z/{d}")).collect();
        match self.rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        write!(f, "{}", parts.join(" ⊕ "))
    }
}

/// Canonical form of `Z^n / span(relations)` with the change of basis in
/// both directions.
///
/// `to_canonical` (`q × n`) sends an original coordinate vector to canonical
/// coordinates (before torsion reduction); `from_canonical` (`n × q`) sends
/// each canonical generator to a representative in original coordinates.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub group: FgAbGroup,
    pub to_canonical: IntMatrix,
    pub from_canonical: IntMatrix,
}

impl Presentation {
    pub fn new(generators: usize, relations: &IntMatrix) -> Self {
        assert_eq!(
            relations.rows(),
            generators,
            "relation matrix needs one row per generator"
        );
        let snf = smith_normal_form(relations);
        let r = snf.rank();
        // Generators whose invariant factor is 1 vanish in the quotient.
        let kept: Vec<usize> = (0..generators)
            .filter(|&i| i >= r || !snf.invariants()[i].is_one())
            .collect();
        let torsion: Vec<BigInt> = kept
            .iter()
            .filter(|&&i| i < r)
            .map(|&i| snf.invariants()[i].clone())
            .collect();
        let group = FgAbGroup {
            rank: generators - r,
            torsion,
        };
        Presentation {
            group,
            to_canonical: snf.u().select_rows(kept.iter().copied()),
            from_canonical: snf.u_inv().select_columns(kept.iter().copied()),
        }
    }

    /// `Z/o₁ ⊕ … ⊕ Z/o_m` for arbitrary orders (`0` meaning `Z`, `1` a
    /// trivial summand), renormalized.
    pub fn of_cyclics(orders: &[BigInt]) -> Self {
        let m = orders.len();
        let diag: Vec<BigInt> = orders.to_vec();
        Presentation::new(m, &IntMatrix::diagonal(m, m, &diag))
    }

    /// Canonical coordinates of the class of an original vector.
    pub fn canonical(&self, x: &[BigInt]) -> Vec<BigInt> {
        self.group.reduced(&self.to_canonical.mul_vec(x))
    }

    /// A representative, in original coordinates, of a canonical element.
    pub fn original(&self, c: &[BigInt]) -> Vec<BigInt> {
        self.from_canonical.mul_vec(c)
    }
}

/// Canonical form of the group with `generators` generators and the given
/// relations (one column per relation), with change-of-basis data.
pub fn from_presentation(generators: usize, relations: &IntMatrix) -> Presentation {
    Presentation::new(generators, relations)
}

pub fn are_isomorphic(a: &FgAbGroup, b: &FgAbGroup) -> bool {
    a == b
}
