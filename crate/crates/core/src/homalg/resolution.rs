use crate::error::Result;
use crate::fgab::{FgAbGroup, Hom, Presentation};
use crate::intlinalg::{image_basis, kernel_basis, solve_matrix, IntMatrix};
use crate::wes::ChainComplex;

/// A free resolution `0 → R₁ --κ--> R₀ --p--> A → 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FreeResolution {
    base: FgAbGroup,
    kappa: Hom,
    proj: Hom,
}

impl FreeResolution {
    /// Assembles a resolution from `κ` (`r₀ × r₁`, injective) and the
    /// projection `Z^{r₀} → A`; exactness is the caller's responsibility and
    /// is checked by [`FreeResolution::is_exact`].
    pub fn new(base: FgAbGroup, kappa: IntMatrix, proj: IntMatrix) -> Result<Self> {
        let r0 = FgAbGroup::free(kappa.rows());
        let r1 = FgAbGroup::free(kappa.cols());
        let kappa = Hom::new(r1, r0.clone(), kappa)?;
        let proj = Hom::new(r0, base.clone(), proj)?;
        Ok(FreeResolution { base, kappa, proj })
    }

    /// The resolution `Im d_{n+1} ↣ ker d_n ↠ H_n` of a chain complex, given
    /// `d_n` and `d_{n+1}`. Also returns the cycle basis (columns, in `C_n`)
    /// and the boundary basis.
    pub fn from_differentials(
        d_n: &IntMatrix,
        d_next: &IntMatrix,
    ) -> (FreeResolution, IntMatrix, IntMatrix) {
        let cycles = kernel_basis(d_n);
        let boundaries = image_basis(d_next);
        let kappa = solve_matrix(&cycles, &boundaries).expect("boundaries are cycles");
        let p = Presentation::new(cycles.cols(), &kappa);
        let res = FreeResolution::new(p.group, kappa, p.to_canonical)
            .expect("homology resolution is well-formed");
        (res, cycles, boundaries)
    }

    pub fn base(&self) -> &FgAbGroup {
        &self.base
    }

    pub fn kappa(&self) -> &Hom {
        &self.kappa
    }

    pub fn proj(&self) -> &Hom {
        &self.proj
    }

    pub fn r0(&self) -> usize {
        self.kappa.codomain().num_generators()
    }

    pub fn r1(&self) -> usize {
        self.kappa.domain().num_generators()
    }

    /// `κ` injective, `p` surjective and `ker p = Im κ`.
    pub fn is_exact(&self) -> bool {
        if !self.kappa.is_injective() || !self.proj.is_surjective() {
            return false;
        }
        if !self.proj.compose(&self.kappa).is_ok_and(|c| c.is_zero()) {
            return false;
        }
        let ker = self.proj.kernel();
        let im = self.kappa.image();
        (0..ker.group.num_generators())
            .all(|i| im.contains(&ker.inclusion.image_of_generator(i)))
    }
}

/// `Z^k --diag(dᵢ)--> Z^n → A` on the canonical generators of `A`.
pub fn canonical_resolution(a: &FgAbGroup) -> FreeResolution {
    let n = a.num_generators();
    FreeResolution::new(a.clone(), a.relation_matrix(), IntMatrix::identity(n))
        .expect("canonical resolution is well-formed")
}

/// `Im d_{n+1} ↣ ker d_n ↠ H_n` for a chain complex.
pub fn resolution_from_complex(c: &ChainComplex, n: usize) -> Result<FreeResolution> {
    Ok(c.homology(n)?.resolution)
}
