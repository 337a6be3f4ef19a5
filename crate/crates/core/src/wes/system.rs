use std::fmt;

use serde::Serialize;

use super::ChainComplex;
use crate::error::{Error, Result};
use crate::fgab::{FgAbGroup, Hom};
use crate::intlinalg::{image_basis, kernel_basis, solve_matrix};

/// The axiom a violation refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    /// Domains, codomains and matrix sizes.
    Shape,
    /// `d_{n−1}∘d_n = 0`.
    BoundarySquaredZero,
    /// `j_n∘β_{n+1} = d_{n+1}`.
    Factorization,
    /// `Im j_n = ker β_n`.
    Exactness,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::Shape => "shape",
            Axiom::BoundarySquaredZero => "d∘d = 0",
            Axiom::Factorization => "j∘β = d",
            Axiom::Exactness => "Im j = ker β",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub degree: usize,
    pub axiom: Axiom,
    pub detail: String,
}

/// Violations found by validation; empty when everything holds.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn push(&mut self, degree: usize, axiom: Axiom, detail: impl Into<String>) {
        self.violations.push(Violation {
            degree,
            axiom,
            detail: detail.into(),
        });
    }

    pub fn extend(&mut self, other: ValidationReport) {
        self.violations.extend(other.violations);
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn into_result(self) -> Result<()> {
        if self.is_valid() {
            Ok(())
        } else {
            Err(Error::InvalidSystem(self))
        }
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "valid");
        }
        for (k, v) in self.violations.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            write!(f, "degree {}: {} violated: {}", v.degree, v.axiom, v.detail)?;
        }
        Ok(())
    }
}

/// Data at one degree `n` of a Γ-system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Level {
    /// Models `π_n(Xⁿ)`.
    pub pi: FgAbGroup,
    /// `j_n: Π_n → C_n`.
    pub j: Hom,
    /// `β_{n+1}: C_{n+1} → Π_n`.
    pub beta_next: Hom,
}

/// A chain complex with groups `Π_n` and maps `j_n`, `β_{n+1}` for
/// `2 ≤ n ≤ top`, subject to `j_n∘β_{n+1} = d_{n+1}` and
/// `Im j_n = ker β_n` (with `β₂ = 0`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaSystem {
    complex: ChainComplex,
    levels: Vec<Level>,
}

impl GammaSystem {
    /// Assembles a system; only the number of levels is checked here. Use
    /// [`validate_system`] for the axioms.
    pub fn new(complex: ChainComplex, levels: Vec<Level>) -> Result<Self> {
        if levels.len() != complex.top() - 1 {
            return Err(Error::Malformed(format!(
                "expected {} levels (degrees 2..={}), got {}",
                complex.top() - 1,
                complex.top(),
                levels.len()
            )));
        }
        Ok(GammaSystem { complex, levels })
    }

    /// The system with all `Γ_n = 0`: `Π_n = ker d_n`, `j_n` the inclusion
    /// and `β_{n+1}` the corestriction of `d_{n+1}`.
    pub fn free_model(complex: ChainComplex) -> Result<Self> {
        complex.validate().into_result()?;
        let levels = (2..=complex.top())
            .map(|n| {
                let kb = image_basis(&kernel_basis(&complex.d(n)));
                let pi = FgAbGroup::free(kb.cols());
                let beta = solve_matrix(&kb, &complex.d(n + 1)).expect("d∘d = 0 was checked");
                Level {
                    j: Hom::new(pi.clone(), complex.chain_group(n), kb)
                        .expect("maps between free groups are well-defined"),
                    beta_next: Hom::new(complex.chain_group(n + 1), pi.clone(), beta)
                        .expect("maps between free groups are well-defined"),
                    pi,
                }
            })
            .collect();
        Ok(GammaSystem { complex, levels })
    }

    pub fn complex(&self) -> &ChainComplex {
        &self.complex
    }

    pub fn top(&self) -> usize {
        self.complex.top()
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    pub fn levels_mut(&mut self) -> &mut [Level] {
        &mut self.levels
    }

    /// The level at degree `n`.
    pub fn level(&self, n: usize) -> Result<&Level> {
        if !(2..=self.top()).contains(&n) {
            return Err(Error::DegreeOutOfRange {
                degree: n,
                lo: 2,
                hi: self.top(),
            });
        }
        Ok(&self.levels[n - 2])
    }

    /// `β_n: C_n → Π_{n−1}`, with `β₂` the zero map to the trivial group.
    pub fn beta(&self, n: usize) -> Result<Hom> {
        if n == 2 {
            return Ok(Hom::zero(&self.complex.chain_group(2), &FgAbGroup::trivial()));
        }
        Ok(self.level(n - 1)?.beta_next.clone())
    }
}

/// Checks shapes, `d∘d = 0`, `j_n∘β_{n+1} = d_{n+1}` and `Im j_n = ker β_n`
/// at every degree.
pub fn validate_system(s: &GammaSystem) -> ValidationReport {
    let c = s.complex();
    let mut report = c.validate();
    let mut shapes_ok = true;
    for (k, level) in s.levels().iter().enumerate() {
        let n = k + 2;
        let cn = c.chain_group(n);
        let cn1 = c.chain_group(n + 1);
        let checks = [
            (level.j.domain() == &level.pi, "domain of j must be Π"),
            (level.j.codomain() == &cn, "codomain of j must be C_n"),
            (level.beta_next.domain() == &cn1, "domain of β must be C_{n+1}"),
            (level.beta_next.codomain() == &level.pi, "codomain of β must be Π"),
        ];
        for (ok, msg) in checks {
            if !ok {
                shapes_ok = false;
                report.push(n, Axiom::Shape, msg);
            }
        }
    }
    if !shapes_ok {
        return report;
    }
    for n in 2..=s.top() {
        let level = &s.levels()[n - 2];
        let jb = level.j.matrix().mul(level.beta_next.matrix());
        if jb != c.d(n + 1) {
            report.push(n, Axiom::Factorization, format!("j{n}∘β{} ≠ d{}", n + 1, n + 1));
        }
        let beta = s.beta(n).expect("degree in range");
        let ker = beta.kernel();
        let im = level.j.image();
        let ker_in_im = (0..ker.group.num_generators())
            .all(|i| im.contains(&ker.inclusion.image_of_generator(i)));
        let im_in_ker = (0..level.pi.num_generators())
            .all(|i| beta.codomain().is_zero_element(&beta.apply(&level.j.image_of_generator(i))));
        if !(ker_in_im && im_in_ker) {
            let what = match (ker_in_im, im_in_ker) {
                (false, true) => format!("ker β{n} is not contained in Im j{n}"),
                (true, false) => format!("Im j{n} is not contained in ker β{n}"),
                _ => format!("Im j{n} and ker β{n} are incomparable"),
            };
            report.push(n, Axiom::Exactness, what);
        }
    }
    report
}
