use num_bigint::BigInt;

use super::{Axiom, ValidationReport};
use crate::error::{Error, Result};
use crate::fgab::{FgAbGroup, Hom};
use crate::homalg::FreeResolution;
use crate::intlinalg::{smith_normal_form, IntMatrix, SmithForm};

/// A chain complex of free groups `C_top → … → C₂` of a simply connected
/// model (`C₀ = C₁ = 0`).
///
/// `differentials[k]` is `d_{k+3}: C_{k+3} → C_{k+2}`; `d₂` and `d_{top+1}`
/// are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    top: usize,
    ranks: Vec<usize>,
    differentials: Vec<IntMatrix>,
}

impl ChainComplex {
    /// Checks the counts and the shape of every differential. `d∘d = 0` is
    /// left to [`ChainComplex::validate`].
    pub fn new(top: usize, ranks: Vec<usize>, differentials: Vec<IntMatrix>) -> Result<Self> {
        if top < 2 {
            return Err(Error::Malformed(format!("top dimension {top} is below 2")));
        }
        if ranks.len() != top - 1 {
            return Err(Error::Malformed(format!(
                "expected {} ranks (degrees 2..={top}), got {}",
                top - 1,
                ranks.len()
            )));
        }
        if differentials.len() != top - 2 {
            return Err(Error::Malformed(format!(
                "expected {} differentials (d₃..d_{top}), got {}",
                top - 2,
                differentials.len()
            )));
        }
        let c = ChainComplex {
            top,
            ranks,
            differentials,
        };
        for n in 3..=top {
            let d = &c.differentials[n - 3];
            if d.rows() != c.rank(n - 1) || d.cols() != c.rank(n) {
                return Err(Error::Shape(format!(
                    "d{n} must be {}×{}, got {}×{}",
                    c.rank(n - 1),
                    c.rank(n),
                    d.rows(),
                    d.cols()
                )));
            }
        }
        Ok(c)
    }

    /// The complex with the given ranks and zero differentials.
    pub fn zero(top: usize, ranks: Vec<usize>) -> Result<Self> {
        let diffs = (3..=top)
            .map(|n| IntMatrix::zeros(ranks[n - 3], ranks[n - 2]))
            .collect();
        ChainComplex::new(top, ranks, diffs)
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn differentials(&self) -> &[IntMatrix] {
        &self.differentials
    }

    /// Rank of `C_n`; zero outside `2..=top`.
    pub fn rank(&self, n: usize) -> usize {
        if (2..=self.top).contains(&n) {
            self.ranks[n - 2]
        } else {
            0
        }
    }

    pub fn chain_group(&self, n: usize) -> FgAbGroup {
        FgAbGroup::free(self.rank(n))
    }

    /// `d_n: C_n → C_{n−1}` for any `n ≥ 1`.
    pub fn d(&self, n: usize) -> IntMatrix {
        if (3..=self.top).contains(&n) {
            self.differentials[n - 3].clone()
        } else {
            IntMatrix::zeros(self.rank(n.saturating_sub(1)), self.rank(n))
        }
    }

    pub fn d_hom(&self, n: usize) -> Hom {
        Hom::new(
            self.chain_group(n),
            self.chain_group(n.saturating_sub(1)),
            self.d(n),
        )
        .expect("maps between free groups are well-defined")
    }

    /// Reports every degree where `d_{n−1}∘d_n ≠ 0`.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        for n in 4..=self.top {
            if !self.d(n - 1).mul(&self.d(n)).is_zero() {
                report.push(n, Axiom::BoundarySquaredZero, format!("d{}∘d{n} ≠ 0", n - 1));
            }
        }
        report
    }

    /// `H_n = ker d_n / Im d_{n+1}` for `2 ≤ n ≤ top`.
    pub fn homology(&self, n: usize) -> Result<Homology> {
        if !(2..=self.top).contains(&n) {
            return Err(Error::DegreeOutOfRange {
                degree: n,
                lo: 2,
                hi: self.top,
            });
        }
        Ok(self.homology_any(n))
    }

    /// Homology in any degree `n ≥ 2`; trivial above `top`.
    pub(crate) fn homology_any(&self, n: usize) -> Homology {
        let (resolution, cycles, boundaries) =
            FreeResolution::from_differentials(&self.d(n), &self.d(n + 1));
        Homology {
            n,
            cycles_snf: smith_normal_form(&cycles),
            cycles,
            boundaries,
            resolution,
        }
    }
}

/// `H_n` of a chain complex with its cycle and boundary bases.
#[derive(Clone, Debug)]
pub struct Homology {
    pub n: usize,
    /// Basis of `ker d_n` (columns in `C_n`).
    pub cycles: IntMatrix,
    /// Basis of `Im d_{n+1}` (columns in `C_n`).
    pub boundaries: IntMatrix,
    /// `Im d_{n+1} ↣ ker d_n ↠ H_n` on the two bases above.
    pub resolution: FreeResolution,
    cycles_snf: SmithForm,
}

impl Homology {
    pub fn group(&self) -> &FgAbGroup {
        self.resolution.base()
    }

    /// The homology class of a cycle, or `None` if `z` is not a cycle.
    pub fn class_of(&self, z: &[BigInt]) -> Option<Vec<BigInt>> {
        let x = self.cycles_snf.solve(z)?;
        Some(self.resolution.proj().apply(&x))
    }

    /// A cycle representing a homology class.
    pub fn representative(&self, h: &[BigInt]) -> Vec<BigInt> {
        let x = self
            .resolution
            .proj()
            .preimage(h)
            .expect("the resolution projection is surjective");
        self.cycles.mul_vec(&x)
    }
}

/// `H_n(C)` in canonical form.
pub fn homology(c: &ChainComplex, n: usize) -> Result<FgAbGroup> {
    Ok(c.homology(n)?.group().clone())
}
