use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::sequence::degree_core;
use super::GammaSystem;
use crate::error::{Error, Result};
use crate::fgab::{FgAbGroup, Hom};
use crate::homalg::{class_of_cocycle, ExtClass};
use crate::intlinalg::{kernel_basis, smith_normal_form, solve, IntMatrix};

/// Sections `σ_n` and `t_{n+1}` at one degree.
///
/// `sigma` has one column per basis vector of `ker β_n` (the columns of
/// `ker_beta`), giving an element of `Π_n` with `j_n∘σ_n = incl`. `t` has one
/// column per basis vector of `Im d_{n+1}` (the columns of `boundaries`),
/// giving a preimage in `C_{n+1}`.
#[derive(Clone, Debug)]
pub struct SplittingChoice {
    pub n: usize,
    pub seed: u64,
    pub ker_beta: IntMatrix,
    pub sigma: IntMatrix,
    pub boundaries: IntMatrix,
    pub t: IntMatrix,
}

impl SplittingChoice {
    /// Checks `j∘σ = incl` and `d∘t = incl` exactly.
    pub fn verify(&self, s: &GammaSystem) -> Result<()> {
        let level = s.level(self.n)?;
        if level.j.matrix().mul(&self.sigma) != self.ker_beta {
            return Err(Error::Integrity(format!("j{0}∘σ{0} is not the inclusion", self.n)));
        }
        if s.complex().d(self.n + 1).mul(&self.t) != self.boundaries {
            return Err(Error::Integrity(format!(
                "d{0}∘t{0} is not the inclusion",
                self.n + 1
            )));
        }
        Ok(())
    }
}

fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> IntMatrix {
    let entries = (0..rows * cols)
        .map(|_| BigInt::from(rng.gen_range(-3i64..=3)))
        .collect();
    IntMatrix::from_entries(rows, cols, entries)
}

/// Sections at degree `n`. Seed 0 gives the canonical choice; other seeds
/// add a random hom `ker β_n → Γ_n` to `σ` and a random hom
/// `Im d_{n+1} → ker d_{n+1}` to `t`.
pub fn choose_splitting(s: &GammaSystem, n: usize, seed: u64) -> Result<SplittingChoice> {
    let level = s.level(n)?;
    let ker_beta = s.beta(n)?.kernel().inclusion.matrix().clone();
    let mut sigma_cols = Vec::with_capacity(ker_beta.cols());
    for k in ker_beta.columns() {
        let y = level
            .j
            .preimage(&k)
            .ok_or_else(|| Error::Integrity(format!("ker β{n} is not inside Im j{n}")))?;
        sigma_cols.push(y);
    }
    let mut sigma = IntMatrix::from_columns(level.pi.num_generators(), &sigma_cols);

    let d = s.complex().d(n + 1);
    let snf = smith_normal_form(&d);
    let r = snf.rank();
    let mut t = snf.v().select_columns(0..r);
    let boundaries = crate::intlinalg::image_basis(&d);

    if seed != 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let gamma = level.j.kernel();
        let h = random_matrix(&mut rng, gamma.group.num_generators(), ker_beta.cols());
        sigma = sigma.add(&gamma.inclusion.matrix().mul(&h));
        let kd = kernel_basis(&d);
        let h2 = random_matrix(&mut rng, kd.cols(), r);
        t = t.add(&kd.mul(&h2));
    }
    let mut cols: Vec<Vec<BigInt>> = sigma.columns().collect();
    for c in cols.iter_mut() {
        level.pi.reduce(c);
    }
    let sigma = IntMatrix::from_columns(level.pi.num_generators(), &cols);
    let sp = SplittingChoice {
        n,
        seed,
        ker_beta,
        sigma,
        boundaries,
        t,
    };
    sp.verify(s)?;
    Ok(sp)
}

/// The blocks of `β_{n+1}` in the decomposition induced by a splitting.
#[derive(Clone, Debug)]
pub struct Decomposition {
    /// `φ_n = (β_{n+1} − σ_n∘d_{n+1})∘t_{n+1}: Im d_{n+1} → Γ_n`.
    pub phi: Hom,
    /// `ψ_n = j_n∘β_{n+1}∘t_{n+1}`, columns in `C_n` (equals `d_{n+1}∘t_{n+1}`).
    pub psi: IntMatrix,
    /// `θ_n = μ¹_n∘β_{n+1}` on `ker d_{n+1}` (equals `b_{n+1}∘pr_{n+1}`).
    pub theta: Hom,
    /// `η_n = j_n∘β_{n+1}` on `ker d_{n+1}` (zero).
    pub eta: IntMatrix,
}

/// Computes `φ_n, ψ_n, θ_n, η_n` for a splitting and verifies
/// `ψ_n = d_{n+1}∘t_{n+1}`, `θ_n = b_{n+1}∘pr_{n+1}` and `η_n = 0`.
pub fn beta_matrix_decomposition(
    s: &GammaSystem,
    n: usize,
    sp: &SplittingChoice,
) -> Result<Decomposition> {
    if sp.n != n {
        return Err(Error::Shape(format!("splitting is for degree {}, not {n}", sp.n)));
    }
    let core = degree_core(s, n)?;
    let level = s.level(n)?;
    let pi = &level.pi;
    let beta = &level.beta_next;
    let j = &level.j;
    let kb_snf = smith_normal_form(&sp.ker_beta);
    // μ¹ = id − σ∘j, with σ applied through coordinates in the ker β basis.
    let mu1 = |x: &[BigInt]| -> Result<Vec<BigInt>> {
        let jx = j.apply(x);
        let coords = kb_snf
            .solve(&jx)
            .ok_or_else(|| Error::Integrity(format!("Im j{n} is not inside ker β{n}")))?;
        Ok(pi.sub(x, &sp.sigma.mul_vec(&coords)))
    };
    let to_gamma = |y: &[BigInt], what: &str| -> Result<Vec<BigInt>> {
        core.gamma
            .coordinates(y)
            .ok_or_else(|| Error::Integrity(format!("{what} does not land in Γ{n}")))
    };

    let mut phi_cols = Vec::new();
    let mut psi_cols = Vec::new();
    for tk in sp.t.columns() {
        let bt = beta.apply(&tk);
        psi_cols.push(j.apply(&bt));
        phi_cols.push(to_gamma(&mu1(&bt)?, &format!("φ{n}"))?);
    }
    let psi = IntMatrix::from_columns(s.complex().rank(n), &psi_cols);
    if psi != sp.boundaries {
        return Err(Error::Integrity(format!("ψ{n} ≠ d{}∘t{}", n + 1, n + 1)));
    }
    let r1 = FgAbGroup::free(sp.t.cols());
    let phi = Hom::from_images(r1, core.gamma.group.clone(), &phi_cols)?;

    let cycles = &core.homology_next.cycles;
    let mut theta_cols = Vec::new();
    let mut eta_cols = Vec::new();
    for z in cycles.columns() {
        let bz = beta.apply(&z);
        eta_cols.push(j.apply(&bz));
        let th = to_gamma(&mu1(&bz)?, &format!("θ{n}"))?;
        let h = core
            .homology_next
            .class_of(&z)
            .expect("cycle basis vectors are cycles");
        if th != core.b_next.apply(&h) {
            return Err(Error::Integrity(format!("θ{n} ≠ b{}∘pr{}", n + 1, n + 1)));
        }
        theta_cols.push(th);
    }
    let eta = IntMatrix::from_columns(s.complex().rank(n), &eta_cols);
    if !eta.is_zero() {
        return Err(Error::Integrity(format!("η{n} ≠ 0")));
    }
    let theta = Hom::from_images(
        FgAbGroup::free(cycles.cols()),
        core.gamma.group.clone(),
        &theta_cols,
    )?;
    Ok(Decomposition {
        phi,
        psi,
        theta,
        eta,
    })
}

/// `[φ̃_n] ∈ Ext(H_n, Coker b_{n+1})` on the resolution
/// `Im d_{n+1} ↣ ker d_n ↠ H_n`, where `φ̃_n` is `φ_n` followed by the
/// projection onto `Coker b_{n+1}`.
pub fn characteristic_extension(s: &GammaSystem, n: usize, sp: &SplittingChoice) -> Result<ExtClass> {
    let dec = beta_matrix_decomposition(s, n, sp)?;
    let core = degree_core(s, n)?;
    let phi_tilde = core.coker.projection.compose(&dec.phi)?;
    let res = &core.homology.resolution;
    if res.kappa().domain() != phi_tilde.domain() {
        return Err(Error::Integrity(
            "boundary basis disagrees with the homology resolution".into(),
        ));
    }
    class_of_cocycle(res, &core.coker.group, &phi_tilde)
}

/// `φ_n` on an explicit boundary basis, for comparison with hand-made data.
pub fn phi_on_boundary(dec: &Decomposition, boundaries: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    let coords = solve(boundaries, b)?;
    Some(dec.phi.apply(&coords))
}
